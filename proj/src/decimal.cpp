#include "decreal/decimal.hpp"

#include <algorithm>

#include "decreal/errors.hpp"

namespace decreal {

TerminatingDecimal LazyStream::truncation(std::int64_t level) const {
  std::lock_guard lock(mu_);
  if (level > level_) {
    deepest_ = gen_(level);
    level_ = level;
  }
  if (level == level_) return deepest_;
  return deepest_.truncate(level);
}

Decimal Decimal::lazy(LazyStream::Generator gen) {
  Decimal d;
  d.rep_ = std::make_shared<const LazyStream>(std::move(gen));
  return d;
}

Representation Decimal::representation() const {
  if (const auto* p = as_finite()) {
    return p->tail_class() == TailClass::zeros ? Representation::terminating
                                                : Representation::periodic;
  }
  return Representation::lazy;
}

const PeriodicDecimal& Decimal::finite() const {
  if (const auto* p = as_finite()) return *p;
  throw NotFinitelyRepresented();
}

std::optional<Sign> Decimal::sign(std::int64_t budget) const {
  if (const auto* p = as_finite()) return p->sign();
  auto t = truncation(std::max<std::int64_t>(budget, 0));
  if (t.is_zero()) return std::nullopt;
  return t.sign();
}

std::optional<std::int64_t> Decimal::msd_index(std::int64_t budget) const {
  if (const auto* p = as_finite()) return p->msd_index();
  auto t = truncation(std::max<std::int64_t>(budget, 0));
  return t.msd_index();
}

Digit Decimal::digit(std::int64_t index) const {
  if (const auto* p = as_finite()) return p->digit(index);
  return truncation(std::max<std::int64_t>(0, -index)).digit(index);
}

TerminatingDecimal Decimal::truncation(std::int64_t n) const {
  if (const auto* p = as_finite()) return p->truncate(n);
  const auto& s = std::get<std::shared_ptr<const LazyStream>>(rep_);
  auto t = s->truncation(std::max<std::int64_t>(n, 0));
  return n < 0 ? t.truncate(n) : t;
}

std::string Decimal::to_string(RenderStyle style, std::int64_t lazy_digits) const {
  if (const auto* p = as_finite()) return p->to_string(style);
  return truncation(lazy_digits).to_string_fixed(lazy_digits) + "\xE2\x80\xA6";
}

Digit digit_at(const Decimal& d, std::int64_t i) { return d.digit(i); }

TerminatingDecimal truncate(const Decimal& d, std::int64_t n) { return d.truncation(n); }

Decimal shift(const Decimal& d, std::int64_t k) {
  if (const auto* p = d.as_finite()) return p->shifted(k);
  return Decimal::lazy([d, k](std::int64_t n) {
    // digits of 10^k d at index >= -n are those of d at index >= -n-k
    return d.truncation(n + k).shifted(k);
  });
}

Decimal negate(const Decimal& d) {
  if (const auto* p = d.as_finite()) return p->negated();
  return Decimal::lazy([d](std::int64_t n) { return -d.truncation(n); });
}

std::optional<TailClass> classify_tail(const Decimal& d, std::int64_t /*budget*/) {
  // A finite digit prefix never fixes the tail of an opaque stream.
  if (const auto* p = d.as_finite()) return p->tail_class();
  return std::nullopt;
}

}  // namespace decreal
