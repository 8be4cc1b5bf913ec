#include "decreal/sqrt.hpp"

#include <cmath>
#include <memory>
#include <unordered_set>

#include "decreal/errors.hpp"
#include "decreal/number_theory.hpp"
#include "decreal/periodic_field.hpp"
#include "decreal/real_arith.hpp"

namespace decreal {
namespace {

const mpq_class& q(const PeriodicDecimal& p) { return detail::PeriodicAccess::value(p); }

mpz_class pow10_z(std::uint64_t k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

bool rational_square(const mpq_class& v) {
  return mpz_perfect_square_p(v.get_num_mpz_t()) && mpz_perfect_square_p(v.get_den_mpz_t());
}

// Longhand state for sqrt(p/q): at level n, a = floor(sqrt(p/q) 10^n) and
// r = 10^(2h) (p 10^(2n) - q a^2) >= 0, with 10^(2h) > p/q so that a = 0
// at level -h.
struct Longhand {
  mpz_class p, q, scale;  // scale = 10^(2h)
  std::int64_t level;
  mpz_class a = 0;
  mpz_class r;

  Longhand(const mpq_class& v) : p(v.get_num()), q(v.get_den()) {
    std::int64_t h = 0;
    while (mpq_class(pow10_z(static_cast<std::uint64_t>(2 * h))) <= v) ++h;
    level = -h;
    scale = pow10_z(static_cast<std::uint64_t>(2 * h));
    r = p;  // 10^(2h) * p * 10^(-2h)
  }

  void advance() {
    mpz_class base = 100 * r;
    mpz_class qs = q * scale;
    int digit = 9;
    mpz_class next;
    for (; digit > 0; --digit) {
      next = base - qs * (20 * a * digit + digit * digit);
      if (next >= 0) break;
    }
    if (digit == 0) next = base;
    r = next;
    a = 10 * a + digit;
    ++level;
  }

  TerminatingDecimal at(std::int64_t n) {
    while (level < n) advance();
    return TerminatingDecimal::from_scaled(a, n);
  }
};

}  // namespace

SqrtStream sqrt_stream(const PeriodicDecimal& c) {
  if (c.sign() == Sign::negative) throw NegativeInput("square root of a negative decimal");
  const mpq_class& v = q(c);
  auto state = std::make_shared<Longhand>(v);
  SqrtStream s;
  s.target = c;
  // The lazy stream calls in with nondecreasing levels, one at a time.
  s.digits = Decimal::lazy([state](std::int64_t n) { return state->at(n); });
  s.target_is_square = rational_square(v) &&
                       nt::split_two_five(mpz_class(sqrt(v.get_den()))).second == 1;
  return s;
}

Decimal square_of_truncations(const Decimal& d, const LimitOptions& opts) {
  if (d.finitely_represented()) return formal_mul(d, d, opts);
  ApproxSequence seq = product_sequence(d, d);
  TerminatingDecimal b = d.truncation(0).abs() + TerminatingDecimal::from_int(1);
  return formal_limit_monotone(seq, Direction::nondecreasing, {b * b, false}, opts);
}

Decimal square_of_truncations(const SqrtStream& s, const LimitOptions& opts) {
  ApproxSequence seq = product_sequence(s.digits, s.digits);
  MonotoneBound bound;
  if (s.target.has_terminating_value()) {
    bound = {s.target.terminating_value(), !s.target_is_square};
  } else {
    TerminatingDecimal b = s.digits.truncation(0) + TerminatingDecimal::from_int(1);
    bound = {b * b, false};
  }
  return formal_limit_monotone(seq, Direction::nondecreasing, bound, opts);
}

bool residue_obstruction(const TerminatingDecimal& c) {
  if (c.sign() != Sign::positive) throw NegativeInput("residue check needs a positive decimal");
  int digit = last_nonzero_digit(c).value();
  return digit == 2 || digit == 3 || digit == 7 || digit == 8;
}

std::vector<PeriodicDecimal> exhaustive_square_search(const RealClass& target, int max_int_digits,
                                                      int max_preperiod, int max_period) {
  if (max_int_digits < 0 || max_preperiod < 0 || max_period < 1) {
    throw std::invalid_argument("invalid search bounds");
  }
  auto geometric = [](int top) {
    double s = 0;
    for (int l = 0; l <= top; ++l) s += std::pow(10.0, l);
    return s;
  };
  double count = std::pow(10.0, max_int_digits) * geometric(max_preperiod) *
                 (geometric(max_period) - 1);
  if (count > 1e7) throw BoundsTooLarge("search space exceeds 10^7 candidates");

  const mpq_class& goal = q(target.representative().finite());
  auto digits_of = [](long value, int len) {
    std::vector<std::uint8_t> out(static_cast<std::size_t>(len));
    for (int i = len - 1; i >= 0; --i, value /= 10) out[static_cast<std::size_t>(i)] = value % 10;
    return out;
  };
  long int_limit = std::lround(std::pow(10.0, max_int_digits));
  std::unordered_set<std::string> seen;
  std::vector<PeriodicDecimal> found;
  for (long ip = 0; ip < int_limit; ++ip) {
    auto integer = digits_of(ip, max_int_digits);
    for (int plen = 0; plen <= max_preperiod; ++plen) {
      long pcount = std::lround(std::pow(10.0, plen));
      for (long pv = 0; pv < pcount; ++pv) {
        auto pre = digits_of(pv, plen);
        for (int rlen = 1; rlen <= max_period; ++rlen) {
          long rcount = std::lround(std::pow(10.0, rlen));
          for (long rv = 0; rv < rcount; ++rv) {
            auto x = PeriodicDecimal::from_digits(Sign::positive, integer, pre, digits_of(rv, rlen));
            std::string key = q(x).get_str() + (x.nines_form() ? "~" : "");
            if (!seen.insert(key).second) continue;
            if (q(mul_p(x, x)) == goal) found.push_back(x);
          }
        }
      }
    }
  }
  return found;
}

RealClass sqrt_class(const RealClass& a, const LimitOptions& opts) {
  const Decimal& x = a.representative();
  if (const auto* p = x.as_finite()) {
    if (p->sign() == Sign::negative) throw NegativeInput("square root of a negative number");
    const mpq_class& v = q(*p);
    if (rational_square(v)) {
      mpq_class r(sqrt(v.get_num()), sqrt(v.get_den()));
      return RealClass(detail::PeriodicAccess::make(r));
    }
    return RealClass(sqrt_stream(*p).digits);
  }
  if (x.sign(opts.depth) == Sign::negative) {
    throw NegativeInput("square root of a negative number");
  }
  // |sqrt(x) - s(n)| <= 2 10^-n with s(n) = floor(sqrt(x|2n) 10^n) 10^-n.
  ApproxSequence seq;
  seq.term = [x](std::int64_t n) {
    TerminatingDecimal t = x.truncation(2 * n);
    mpz_class v = t.sign() == Sign::negative ? mpz_class(0) : to_scaled(t, 2 * n).value;
    return TerminatingDecimal::from_scaled(sqrt(v), n);
  };
  seq.modulus = [](std::int64_t k) { return k + 1; };
  return hybrid_limit(seq, opts);
}

}  // namespace decreal
