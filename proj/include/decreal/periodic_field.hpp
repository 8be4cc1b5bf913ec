#pragma once

// Exact arithmetic on ultimately periodic decimals, the rationals of the
// decimal model, plus the 9...90...0 scalings that turn them into integers.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "decreal/decimal.hpp"
#include "decreal/periodic.hpp"
#include "decreal/terminating.hpp"

namespace decreal {

/// The integer with a nines followed by b zeros, 10^b (10^a - 1). a >= 1.
TerminatingDecimal nines_zeros(std::int64_t a, std::int64_t b);

/// Least a >= 1 with r | 10^a (10^a - 1). `r` must be a nonzero integer
/// (scale 0). Throws ZeroInput for r = 0.
std::int64_t divisibility_exponent(const ScaledInteger& r);

struct IntegerScaling {
  std::int64_t a;
  ScaledInteger v;  // 10^a (10^a - 1) * x, an integer
};

/// a is the least multiple of the period exceeding the preperiod length.
/// Throws BoundsTooLarge when that multiplier would be impractically long.
IntegerScaling scale_to_integer(const PeriodicDecimal& x);

/// Results are the all-zeros member when the value terminates.
PeriodicDecimal add_p(const PeriodicDecimal& x, const PeriodicDecimal& y);
PeriodicDecimal sub_p(const PeriodicDecimal& x, const PeriodicDecimal& y);
PeriodicDecimal mul_p(const PeriodicDecimal& x, const PeriodicDecimal& y);
/// Throws DivisionByZero when x is in the class of 0.
PeriodicDecimal inv_p(const PeriodicDecimal& x);

/// Looks for an ultimate period <= max_period among the first max_digits
/// digits (from index max(msd, 0) down). The periodic stretch must cover at
/// least half the window and two periods. nullopt is not a proof of
/// aperiodicity.
std::optional<PeriodicDecimal> detect_period(const Decimal& d, std::size_t max_digits,
                                             std::size_t max_period);

}  // namespace decreal
