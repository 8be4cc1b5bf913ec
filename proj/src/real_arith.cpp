#include "decreal/real_arith.hpp"

#include <algorithm>

#include "decreal/errors.hpp"
#include "decreal/periodic_field.hpp"

namespace decreal {
namespace {

const mpq_class& q(const PeriodicDecimal& p) { return detail::PeriodicAccess::value(p); }

PeriodicDecimal from_q(mpq_class v, bool nines = false) {
  return detail::PeriodicAccess::make(std::move(v), nines);
}

TerminatingDecimal eps(std::int64_t k) { return TerminatingDecimal::pow10(-k); }

TerminatingDecimal magnitude_bound(const Decimal& d) {
  return d.truncation(0).abs() + TerminatingDecimal::from_int(1);
}

// Least e with 10^e > b for a positive integer-valued b.
std::int64_t digits_above(const TerminatingDecimal& b) {
  return static_cast<std::int64_t>(to_scaled(b, 0).value.get_str().size());
}

// Largest multiple of 10^-k that is <= t.
TerminatingDecimal floor_to(const TerminatingDecimal& t, std::int64_t k) {
  std::int64_t scale = std::max(k, t.scale());
  mpz_class v = to_scaled(t, scale).value;
  mpz_class unit;
  mpz_ui_pow_ui(unit.get_mpz_t(), 10, static_cast<unsigned long>(scale - k));
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), v.get_mpz_t(), unit.get_mpz_t());
  return TerminatingDecimal::from_scaled(f, k);
}

Sign known_sign(const Decimal& d, std::int64_t budget) {
  auto s = d.sign(budget);
  if (!s) throw BudgetExhausted("operand sign not determined within budget");
  return *s;
}

// Fractional length of the terminating value of p, 0 otherwise.
std::int64_t support_depth(const PeriodicDecimal& p) {
  return p.has_terminating_value() ? p.terminating_value().fractional_length() : 0;
}

// Member of value s approached by a(n) from above (a > s) or below (a < s).
PeriodicDecimal approached_member(const mpq_class& s, int side) {
  PeriodicDecimal zeros = from_q(s);
  if (side == 0 || s == 0) return zeros;
  PeriodicDecimal nines = from_q(s, true);
  bool nines_larger = nines.compare(zeros) == Ordering::greater;
  return (side > 0) == nines_larger ? nines : zeros;
}

Decimal formal_add_exact(const PeriodicDecimal& c, const PeriodicDecimal& d) {
  mpq_class s = q(c) + q(d);
  PeriodicDecimal sum = from_q(s);
  if (s == 0 || !sum.has_terminating_value()) return sum;
  // Past every support depth, c|n + d|n - s is a constant multiple of 10^-n.
  std::int64_t n = std::max({support_depth(c), support_depth(d), support_depth(sum)}) + 1;
  TerminatingDecimal a = c.truncate(n) + d.truncate(n);
  TerminatingDecimal st = sum.terminating_value();
  int side = a < st ? -1 : a > st ? 1 : 0;
  return approached_member(s, side);
}

Decimal formal_mul_exact(const PeriodicDecimal& c, const PeriodicDecimal& d) {
  if (c.is_zero() || d.is_zero()) return PeriodicDecimal{};
  mpq_class p = q(c) * q(d);
  // |c|n * d|n| never reaches |cd| unless both truncations become exact.
  bool exact = c.tail_class() == TailClass::zeros && d.tail_class() == TailClass::zeros;
  return from_q(p, !exact);
}

}  // namespace

ApproxSequence sum_sequence(const Decimal& c, const Decimal& d) {
  ApproxSequence s;
  s.term = [c, d](std::int64_t n) { return c.truncation(n) + d.truncation(n); };
  s.modulus = [](std::int64_t k) { return k + 1; };
  if (c.finitely_represented() && d.finitely_represented()) {
    s.certified_limit = add_p(c.finite(), d.finite());
  }
  return s;
}

ApproxSequence product_sequence(const Decimal& c, const Decimal& d) {
  ApproxSequence s;
  s.term = [c, d](std::int64_t n) { return c.truncation(n) * d.truncation(n); };
  std::int64_t e = digits_above(magnitude_bound(c) + magnitude_bound(d));
  s.modulus = [e](std::int64_t k) { return k + e; };
  if (c.finitely_represented() && d.finitely_represented()) {
    s.certified_limit = mul_p(c.finite(), d.finite());
  }
  return s;
}

LongDivisionState long_division_step(const Decimal& c, std::int64_t n) {
  LongDivisionState st;
  st.n = n;
  st.divisor_truncation = c.truncation(n);
  if (st.divisor_truncation.sign() != Sign::positive) {
    throw std::invalid_argument("long division needs a positive truncation");
  }
  mpz_class cp = to_scaled(st.divisor_truncation, n).value;
  st.exponent = n + static_cast<std::int64_t>(cp.get_str().size());
  mpz_class top;
  mpz_ui_pow_ui(top.get_mpz_t(), 10, static_cast<unsigned long>(st.exponent));
  mpz_class quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), top.get_mpz_t(), cp.get_mpz_t());
  st.quotient = TerminatingDecimal::from_scaled(quot, st.exponent - n);
  st.remainder = TerminatingDecimal::from_scaled(rem, st.exponent);
  return st;
}

ApproxSequence reciprocal_sequence(const Decimal& c, const LimitOptions& opts) {
  if (const auto* p = c.as_finite(); p && p->is_zero()) throw DivisionByZero();
  Sign sign = known_sign(c, opts.depth);
  Decimal mag = sign == Sign::negative ? negate(c) : c;
  auto msd = mag.truncation(opts.depth).msd_index();
  std::int64_t k0 = *msd;  // 10^k0 <= c|n for every n >= n0
  std::int64_t n0 = std::max<std::int64_t>(0, -k0);
  ApproxSequence s;
  s.term = [mag, n0, sign](std::int64_t n) {
    auto d = long_division_step(mag, std::max(n, n0)).quotient;
    return sign == Sign::negative ? -d : d;
  };
  // |d(m) - d(n)| < 2 10^(-n-k0) + 10^(-n-2 k0) for m > n >= n0.
  std::int64_t slack = std::max(-k0, -2 * k0);
  s.modulus = [n0, slack](std::int64_t k) { return std::max(n0, k + slack + 1); };
  if (const auto* p = c.as_finite()) s.certified_limit = inv_p(*p);
  return s;
}

RealClass add(const RealClass& a, const RealClass& b, const ArithOptions& opts) {
  const auto& x = a.representative();
  const auto& y = b.representative();
  if (opts.backend == Backend::exact && x.finitely_represented() && y.finitely_represented()) {
    return RealClass(add_p(x.finite(), y.finite()));
  }
  return hybrid_limit(sum_sequence(x, y), opts.limits);
}

RealClass mul(const RealClass& a, const RealClass& b, const ArithOptions& opts) {
  const auto& x = a.representative();
  const auto& y = b.representative();
  if (opts.backend == Backend::exact && x.finitely_represented() && y.finitely_represented()) {
    return RealClass(mul_p(x.finite(), y.finite()));
  }
  return hybrid_limit(product_sequence(x, y), opts.limits);
}

RealClass neg(const RealClass& a) { return RealClass(negate(a.representative())); }

RealClass sub(const RealClass& a, const RealClass& b, const ArithOptions& opts) {
  return add(a, neg(b), opts);
}

RealClass reciprocal(const RealClass& a, const ArithOptions& opts) {
  const auto& x = a.representative();
  if (const auto* p = x.as_finite()) {
    if (p->is_zero()) throw DivisionByZero();
    if (opts.backend == Backend::exact) return RealClass(inv_p(*p));
  }
  return hybrid_limit(reciprocal_sequence(x, opts.limits), opts.limits);
}

Decimal formal_add(const Decimal& c, const Decimal& d, const LimitOptions& opts) {
  if (c.finitely_represented() && d.finitely_represented()) {
    return formal_add_exact(c.finite(), d.finite());
  }
  if (const auto* p = c.as_finite(); p && p->is_zero()) return d;
  if (const auto* p = d.as_finite(); p && p->is_zero()) return c;
  Sign sc = known_sign(c, opts.depth);
  Sign sd = known_sign(d, opts.depth);
  ApproxSequence seq = sum_sequence(c, d);
  if (sc == sd) {
    TerminatingDecimal b = magnitude_bound(c) + magnitude_bound(d);
    if (sc == Sign::positive) return formal_limit_monotone(seq, Direction::nondecreasing, {b, true}, opts);
    return formal_limit_monotone(seq, Direction::nonincreasing, {-b, true}, opts);
  }
  // Opposite signs: for n > m the sums stay strictly within 10^-m of the
  // m-th sum; bracket that window by a cell of the 10^-k grid.
  const std::int64_t depth = opts.depth;
  auto brackets = [term = seq.term, depth](std::int64_t k) {
    for (std::int64_t m = k + 1; m <= k + depth; ++m) {
      TerminatingDecimal x = term(m);
      TerminatingDecimal lower = floor_to(x - eps(m), k);
      TerminatingDecimal upper = lower + eps(k);
      if (x + eps(m) <= upper) return BracketPair{lower, upper, m};
    }
    throw BudgetExhausted("no bracket of width 10^-" + std::to_string(k) + " found");
  };
  return formal_limit_bracketed(seq, brackets, opts);
}

Decimal formal_mul(const Decimal& c, const Decimal& d, const LimitOptions& opts) {
  if (c.finitely_represented() && d.finitely_represented()) {
    return formal_mul_exact(c.finite(), d.finite());
  }
  for (const Decimal* x : {&c, &d}) {
    if (const auto* p = x->as_finite(); p && p->is_zero()) return PeriodicDecimal{};
  }
  Sign s = known_sign(c, opts.depth) * known_sign(d, opts.depth);
  // |c|n| and |d|n| only grow, so the products move monotonically away from 0.
  TerminatingDecimal b = magnitude_bound(c) * magnitude_bound(d);
  ApproxSequence seq = product_sequence(c, d);
  if (s == Sign::positive) return formal_limit_monotone(seq, Direction::nondecreasing, {b, true}, opts);
  return formal_limit_monotone(seq, Direction::nonincreasing, {-b, true}, opts);
}

}  // namespace decreal
