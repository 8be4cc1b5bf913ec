#pragma once

// Digit-by-digit square roots, the squares of their truncations, and the
// decimal irrationality checks (last nonzero digit, exhaustive search).

#include <cstdint>
#include <vector>

#include "decreal/decimal.hpp"
#include "decreal/limits.hpp"
#include "decreal/order.hpp"

namespace decreal {

struct SqrtStream {
  Decimal digits;          // sup { e terminating : e^2 <= target }
  PeriodicDecimal target;  // compared by value, so 1.(9) behaves as 2
  bool target_is_square;   // target is the square of a terminating decimal
};

/// Each digit is the largest keeping (prefix)^2 <= c, checked exactly.
/// Throws NegativeInput for c < 0.
SqrtStream sqrt_stream(const PeriodicDecimal& c);

/// Formal limit of (d|n)^2 for d >= 0.
Decimal square_of_truncations(const Decimal& d, const LimitOptions& opts = {});
/// Same for a square-root stream; the target bounds every term, strictly
/// unless it is the square of a terminating decimal.
Decimal square_of_truncations(const SqrtStream& s, const LimitOptions& opts = {});

/// True when the last nonzero digit is 2, 3, 7 or 8: no periodic decimal
/// squares to [c]. Throws NegativeInput for c <= 0.
bool residue_obstruction(const TerminatingDecimal& c);

/// Every nonnegative canonical periodic decimal with at most max_int_digits
/// integer digits, preperiod <= max_preperiod and repetend length in
/// 1..max_period whose square lies in `target`. Both members of a jump are
/// enumerated. Empty means no solution within the bounds. Throws
/// BoundsTooLarge above 10^7 candidates.
std::vector<PeriodicDecimal> exhaustive_square_search(const RealClass& target, int max_int_digits,
                                                      int max_preperiod, int max_period);

/// Nonnegative square root of a class: exact when the value is the square
/// of a rational, a square-root stream otherwise.
RealClass sqrt_class(const RealClass& a, const LimitOptions& opts = {});

}  // namespace decreal
