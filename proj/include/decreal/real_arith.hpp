#pragma once

// Field operations on real classes, the long-division reciprocal, and the
// digitwise (formal) sum and product of raw decimals.

#include <cstdint>

#include "decreal/decimal.hpp"
#include "decreal/limits.hpp"
#include "decreal/order.hpp"

namespace decreal {

enum class Backend {
  exact,      // finitely represented operands use periodic arithmetic
  enclosure,  // always go through hybrid limits of truncation arithmetic
};

struct ArithOptions {
  Backend backend = Backend::exact;
  LimitOptions limits;
};

RealClass add(const RealClass& a, const RealClass& b, const ArithOptions& opts = {});
RealClass mul(const RealClass& a, const RealClass& b, const ArithOptions& opts = {});
RealClass neg(const RealClass& a);
RealClass sub(const RealClass& a, const RealClass& b, const ArithOptions& opts = {});
/// Throws DivisionByZero for [0].
RealClass reciprocal(const RealClass& a, const ArithOptions& opts = {});

/// c|n + d|n with modulus k -> k + 1; certified when both are finite.
ApproxSequence sum_sequence(const Decimal& c, const Decimal& d);
/// c|n * d|n with modulus k -> k + e, 10^e > (|c|0| + 1) + (|d|0| + 1).
ApproxSequence product_sequence(const Decimal& c, const Decimal& d);
/// Long-division quotients d(n) of a nonzero c.
ApproxSequence reciprocal_sequence(const Decimal& c, const LimitOptions& opts = {});

/// One step of long division by a positive decimal: with c' = 10^n c|n and
/// N least with 10^(N-n) > c', 10^N = c' q + r gives d(n) = 10^(n-N) q and
/// e(n) = 10^-N r, so that 1 = c|n d(n) + e(n) and 0 <= e(n) < 10^-n.
struct LongDivisionState {
  std::int64_t n = 0;
  std::int64_t exponent = 0;  // N
  TerminatingDecimal divisor_truncation;
  TerminatingDecimal quotient;
  TerminatingDecimal remainder;
};

/// Requires c|n > 0.
LongDivisionState long_division_step(const Decimal& c, std::int64_t n);

/// Formal limit of c|n + d|n. Not associative.
Decimal formal_add(const Decimal& c, const Decimal& d, const LimitOptions& opts = {});
/// Formal limit of c|n * d|n. Associative.
Decimal formal_mul(const Decimal& c, const Decimal& d, const LimitOptions& opts = {});

}  // namespace decreal
