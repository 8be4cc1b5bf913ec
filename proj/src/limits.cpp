#include "decreal/limits.hpp"

#include <algorithm>

namespace decreal {
namespace {

TerminatingDecimal eps(std::int64_t k) { return TerminatingDecimal::pow10(-k); }

PeriodicDecimal zeros_form(const TerminatingDecimal& t) { return PeriodicDecimal::from_terminating(t); }

// Smaller and larger member of t's class in the decimal order.
PeriodicDecimal left_member(const TerminatingDecimal& t) {
  auto z = zeros_form(t);
  auto p = z.jump_partner();
  return p && p->compare(z) == Ordering::less ? *p : z;
}

PeriodicDecimal right_member(const TerminatingDecimal& t) {
  auto z = zeros_form(t);
  auto p = z.jump_partner();
  return p && p->compare(z) == Ordering::greater ? *p : z;
}

// t rounded to the nearest multiple of 10^-j (halves away from zero).
TerminatingDecimal round_to(const TerminatingDecimal& t, std::int64_t j) {
  if (t.scale() <= j) return t;
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 10, static_cast<unsigned long>(t.scale() - j));
  mpz_class m = abs(t.mantissa());
  mpz_class q = (2 * m + d) / (2 * d);
  if (t.sign() == Sign::negative) q = -q;
  return TerminatingDecimal::from_scaled(q, j);
}

const mpq_class& value_of(const PeriodicDecimal& p) { return detail::PeriodicAccess::value(p); }

}  // namespace

bool tends_to_zero(const ApproxSequence& s, std::int64_t k_max) {
  for (std::int64_t k = 0; k <= k_max; ++k) {
    std::int64_t base = s.modulus(k);
    for (std::int64_t n = base + 1; n <= base + 10; ++n) {
      if (!(s.term(n).abs() < eps(k))) {
        throw ContractViolation("sequence does not tend to zero", k, n, n);
      }
    }
  }
  return true;
}

bool cauchy_check(const ApproxSequence& s, std::int64_t k_max,
                  std::optional<ContractViolation>* witness) {
  for (std::int64_t k = 0; k <= k_max; ++k) {
    std::int64_t base = s.modulus(k);
    for (std::int64_t m = base + 1; m <= base + 6; ++m) {
      for (std::int64_t n = m + 1; n <= base + 6; ++n) {
        if (!((s.term(m) - s.term(n)).abs() < eps(k))) {
          if (witness) witness->emplace("Cauchy bound broken", k, m, n);
          return false;
        }
      }
    }
  }
  return true;
}

RealClass hybrid_limit(const ApproxSequence& s, const LimitOptions& opts) {
  const std::int64_t depth = opts.depth;
  auto center = [s](std::int64_t k) { return s.term(s.modulus(k) + 1); };
  if (s.certified_limit) {
    const mpq_class& v = value_of(*s.certified_limit);
    for (std::int64_t k = 0; k <= depth; ++k) {
      std::int64_t n = s.modulus(k) + 1;
      mpq_class gap = abs(v - value_of(zeros_form(s.term(n))));
      if (gap > value_of(zeros_form(eps(k)))) {
        throw ContractViolation("certified limit lies outside the enclosure", k, n, n);
      }
    }
    return RealClass(*s.certified_limit);
  }
  // Every member of the limit class lies between left(t - e) and right(t + e).
  auto resolve = [center, depth](std::int64_t j) {
    TerminatingDecimal t;
    for (std::int64_t k = j + 1; k <= j + depth; ++k) {
      t = center(k);
      auto a = left_member(t - eps(k)).truncate(j);
      auto b = right_member(t + eps(k)).truncate(j);
      if (a == b) return a;
    }
    throw JumpUnresolved(round_to(t, j), j + depth);
  };
  for (std::int64_t j = 0; j <= depth; ++j) {
    if (!resolve(j).is_zero()) break;
  }
  return RealClass(Decimal::lazy(resolve));
}

Decimal formal_limit_monotone(const ApproxSequence& s, Direction direction,
                              const MonotoneBound& bound, const LimitOptions& opts) {
  if (direction == Direction::nonincreasing) {
    ApproxSequence neg = s;
    neg.term = [t = s.term](std::int64_t n) { return -t(n); };
    neg.certified_limit.reset();
    return negate(formal_limit_monotone(neg, Direction::nondecreasing,
                                        {-bound.value, bound.strict}, opts));
  }
  const std::int64_t depth = opts.depth;
  const int checks = opts.spot_checks;
  auto gen = [s, bound, depth, checks](std::int64_t j) {
    for (std::int64_t k = j; k <= j + depth; ++k) {
      std::int64_t n = s.modulus(k) + 1;
      TerminatingDecimal t = s.term(n);
      TerminatingDecimal prev = t;
      for (int i = 1; i <= checks; ++i) {
        TerminatingDecimal next = s.term(n + i);
        if (next < prev) throw MonotonicityViolation("sequence decreases", n + i - 1, n + i);
        prev = std::move(next);
      }
      if (t > bound.value || (bound.strict && t == bound.value)) {
        throw ContractViolation("term exceeds the stated bound", k, n, n);
      }
      TerminatingDecimal hi = std::min(t + eps(k), bound.value);
      bool attainable = !(bound.strict && hi == bound.value);
      auto a = t.truncate(j);
      auto b = (attainable ? zeros_form(hi) : left_member(hi)).truncate(j);
      if (a == b) return a;
    }
    throw BudgetExhausted("formal limit digit not settled within " + std::to_string(depth) +
                          " refinements");
  };
  return Decimal::lazy(gen);
}

Decimal formal_limit_bracketed(const ApproxSequence& s,
                               std::function<BracketPair(std::int64_t k)> brackets,
                               const LimitOptions& opts) {
  const int checks = opts.spot_checks;
  auto gen = [s, brackets, checks](std::int64_t k) {
    BracketPair bp = brackets(k);
    if (bp.upper != bp.lower + eps(k)) {
      throw BracketViolation("bracket width is not 10^-k", k, bp.valid_from);
    }
    if (bp.lower.truncate(k) != bp.lower) {
      throw BracketViolation("bracket has digits below index -k", k, bp.valid_from);
    }
    for (std::int64_t n = bp.valid_from + 1; n <= bp.valid_from + checks; ++n) {
      TerminatingDecimal t = s.term(n);
      if (!(bp.lower < t && t < bp.upper)) {
        throw BracketViolation("term outside its strict bracket", k, n);
      }
    }
    // Terms inside (lower, upper) all truncate to the end nearer zero.
    return bp.lower.sign() != Sign::negative ? bp.lower : bp.upper;
  };
  return Decimal::lazy(gen);
}

ApproxSequence truncation_sequence(const Decimal& d) {
  ApproxSequence s;
  s.term = [d](std::int64_t n) { return d.truncation(n); };
  s.modulus = [](std::int64_t k) { return k; };
  if (const auto* p = d.as_finite()) s.certified_limit = *p;
  return s;
}

}  // namespace decreal
