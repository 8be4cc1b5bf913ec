#include "decreal/order.hpp"

#include <algorithm>

#include "decreal/errors.hpp"

namespace decreal {
namespace {

Ordering from_cmp(int c) {
  return c < 0 ? Ordering::less : c > 0 ? Ordering::greater : Ordering::equal;
}

const mpq_class& value_of(const PeriodicDecimal& p) { return detail::PeriodicAccess::value(p); }

// Positive x < y: x has a nines tail, y is terminating, and they agree down
// to some index m where y's digit exceeds x's by one.
bool positive_jump(const PeriodicDecimal& x, const PeriodicDecimal& y) {
  if (x.tail_class() != TailClass::nines || y.tail_class() != TailClass::zeros) return false;
  std::int64_t n = std::max(y.terminating_value().fractional_length(), x.preperiod_length()) + 1;
  return add_t(x.truncate(n), TerminatingDecimal::pow10(-n)) == y.truncate(n);
}

}  // namespace

Ordering compare(const Decimal& c, const Decimal& d) {
  return c.finite().compare(d.finite());
}

std::optional<Ordering> compare(const Decimal& c, const Decimal& d, std::int64_t budget) {
  if (c.finitely_represented() && d.finitely_represented()) return compare(c, d);
  // Truncations that differ at level n already differ at the first index
  // where the decimals do, so they order the decimals.
  auto tc = c.truncation(budget);
  auto td = d.truncation(budget);
  if (tc == td) return std::nullopt;
  return tc < td ? Ordering::less : Ordering::greater;
}

bool is_jump(const Decimal& c, const Decimal& d) {
  const auto& x = c.finite();
  const auto& y = d.finite();
  if (x.compare(y) != Ordering::less) return false;
  if (x.sign() == Sign::positive && y.sign() == Sign::positive) return positive_jump(x, y);
  if (x.sign() == Sign::negative && y.sign() == Sign::negative) {
    return positive_jump(y.negated(), x.negated());
  }
  return false;
}

std::optional<Decimal> jump_partner(const Decimal& d) {
  auto p = d.finite().jump_partner();
  if (!p) return std::nullopt;
  return Decimal(*p);
}

bool equivalent(const Decimal& c, const Decimal& d) {
  if (c.finite() == d.finite()) return true;
  return is_jump(c, d) || is_jump(d, c);
}

std::optional<Decimal> between(const Decimal& c, const Decimal& d) {
  const auto& x = c.finite();
  const auto& y = d.finite();
  if (x.compare(y) != Ordering::less || is_jump(c, d)) return std::nullopt;
  // Not a jump, so the values differ and any value strictly inside works.
  mpq_class mid = (value_of(x) + value_of(y)) / 2;
  return Decimal(detail::PeriodicAccess::make(mid));
}

RealClass::RealClass(const Decimal& d) : rep_(d) {
  if (const auto* p = d.as_finite()) rep_ = p->zeros_member();
}

bool RealClass::is_pair() const {
  const auto* p = rep_.as_finite();
  return p && p->jump_partner().has_value();
}

std::vector<Decimal> RealClass::members() const {
  if (!is_pair()) return {rep_};
  Decimal other = *rep_.finite().jump_partner();
  if (compare(other, rep_) == Ordering::less) return {other, rep_};
  return {rep_, other};
}

std::string RealClass::to_string(RenderStyle style, std::int64_t lazy_digits) const {
  auto ms = members();
  if (ms.size() == 1) return ms[0].to_string(style, lazy_digits);
  return "{" + ms[0].to_string(style) + ", " + ms[1].to_string(style) + "}";
}

RealClass real_class(const Decimal& d) { return RealClass(d); }

Ordering compare_class(const RealClass& a, const RealClass& b) {
  return from_cmp(cmp(value_of(a.representative().finite()), value_of(b.representative().finite())));
}

std::optional<Ordering> compare_class(const RealClass& a, const RealClass& b,
                                      std::int64_t budget) {
  if (a.finitely_represented() && b.finitely_represented()) return compare_class(a, b);
  // Each truncation lies within 10^-budget of its class.
  auto diff = sub_t(a.representative().truncation(budget), b.representative().truncation(budget));
  auto slack = TerminatingDecimal::pow10(-budget) * TerminatingDecimal::from_int(2);
  if (diff > slack) return Ordering::greater;
  if (-diff > slack) return Ordering::less;
  return std::nullopt;
}

bool operator==(const RealClass& a, const RealClass& b) {
  return compare_class(a, b) == Ordering::equal;
}

Decimal supremum_finite(std::span<const Decimal> s) {
  if (s.empty()) throw std::invalid_argument("supremum of an empty set");
  std::vector<PeriodicDecimal> live;
  for (const auto& d : s) live.push_back(d.finite());
  bool any_nonneg = std::any_of(live.begin(), live.end(),
                                [](const auto& p) { return p.sign() != Sign::negative; });
  // With a nonnegative member the largest digits win; otherwise the smallest
  // magnitudes do.
  std::erase_if(live, [&](const auto& p) { return any_nonneg == (p.sign() == Sign::negative); });
  std::int64_t top = 0;
  for (const auto& p : live) {
    if (auto m = p.msd_index()) top = std::max(top, *m);
  }
  auto all_same = [&] {
    return std::all_of(live.begin(), live.end(), [&](const auto& p) { return p == live[0]; });
  };
  for (std::int64_t i = top; !all_same(); --i) {
    int best = any_nonneg ? -1 : 10;
    for (const auto& p : live) {
      int v = p.digit(i).value();
      best = any_nonneg ? std::max(best, v) : std::min(best, v);
    }
    std::erase_if(live, [&](const auto& p) { return p.digit(i).value() != best; });
  }
  return live[0];
}

}  // namespace decreal
