#include "decreal/terminating.hpp"

#include <algorithm>

#include "decreal/errors.hpp"

namespace decreal {
namespace {

mpz_class pow10_z(std::uint64_t k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

}  // namespace

TerminatingDecimal TerminatingDecimal::from_scaled(mpz_class value, std::int64_t scale) {
  TerminatingDecimal t;
  if (value == 0) return t;
  while (mpz_divisible_ui_p(value.get_mpz_t(), 10)) {
    mpz_divexact_ui(value.get_mpz_t(), value.get_mpz_t(), 10);
    --scale;
  }
  t.mantissa_ = std::move(value);
  t.scale_ = scale;
  return t;
}

TerminatingDecimal TerminatingDecimal::pow10(std::int64_t k) { return from_scaled(1, -k); }

TerminatingDecimal TerminatingDecimal::parse(std::string_view text) {
  bool negative = false;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  std::int64_t frac = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      if (seen_point) ++frac;
    } else {
      throw ParseError("invalid terminating decimal", i, "digit");
    }
  }
  if (digits.empty()) throw ParseError("missing digits", i, "digit");
  mpz_class v(digits, 10);
  if (negative) v = -v;
  return from_scaled(std::move(v), frac);
}

std::optional<std::int64_t> TerminatingDecimal::msd_index() const {
  if (is_zero()) return std::nullopt;
  mpz_class a = ::abs(mantissa_);
  auto len = static_cast<std::int64_t>(a.get_str().size());
  return len - 1 - scale_;
}

std::optional<std::int64_t> TerminatingDecimal::lsd_index() const {
  if (is_zero()) return std::nullopt;
  return -scale_;
}

Digit TerminatingDecimal::digit(std::int64_t index) const {
  std::int64_t pos = index + scale_;
  if (pos < 0 || is_zero()) return Digit{};
  mpz_class a = ::abs(mantissa_);
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), pow10_z(static_cast<std::uint64_t>(pos)).get_mpz_t());
  return Digit(static_cast<int>(mpz_tdiv_ui(q.get_mpz_t(), 10)));
}

TerminatingDecimal TerminatingDecimal::truncate(std::int64_t n) const {
  if (scale_ <= n) return *this;
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), mantissa_.get_mpz_t(),
             pow10_z(static_cast<std::uint64_t>(scale_ - n)).get_mpz_t());
  return from_scaled(std::move(q), n);
}

TerminatingDecimal TerminatingDecimal::shifted(std::int64_t k) const {
  if (is_zero()) return *this;
  TerminatingDecimal t = *this;
  t.scale_ -= k;
  return t;
}

TerminatingDecimal TerminatingDecimal::abs() const { return from_scaled(::abs(mantissa_), scale_); }

std::string TerminatingDecimal::to_string_fixed(std::int64_t frac_digits) const {
  frac_digits = std::max<std::int64_t>(frac_digits, 0);
  std::string out = sign() == Sign::negative ? "-" : "";
  mpz_class a = ::abs(mantissa_);
  // a * 10^(frac_digits - scale) must be an integer for exact rendering.
  std::int64_t shift = frac_digits - scale_;
  if (shift >= 0) {
    a *= pow10_z(static_cast<std::uint64_t>(shift));
  } else {
    mpz_tdiv_q(a.get_mpz_t(), a.get_mpz_t(), pow10_z(static_cast<std::uint64_t>(-shift)).get_mpz_t());
  }
  std::string s = a.get_str();
  if (static_cast<std::int64_t>(s.size()) <= frac_digits) {
    s.insert(0, static_cast<std::size_t>(frac_digits) + 1 - s.size(), '0');
  }
  if (is_zero() || a == 0) out.clear();
  if (frac_digits == 0) return out + s;
  std::size_t split = s.size() - static_cast<std::size_t>(frac_digits);
  return out + s.substr(0, split) + "." + s.substr(split);
}

std::string TerminatingDecimal::to_string() const { return to_string_fixed(fractional_length()); }

std::strong_ordering operator<=>(const TerminatingDecimal& a, const TerminatingDecimal& b) {
  std::int64_t k = std::max({a.scale_, b.scale_, std::int64_t{0}});
  int c = cmp(to_scaled(a, k).value, to_scaled(b, k).value);
  return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

ScaledInteger to_scaled(const TerminatingDecimal& c, std::int64_t k) {
  if (c.is_zero()) return {0, k};
  if (k < c.scale()) {
    throw InsufficientScale("scale 10^" + std::to_string(k) + " leaves fractional digits");
  }
  return {c.mantissa() * pow10_z(static_cast<std::uint64_t>(k - c.scale())), k};
}

TerminatingDecimal add_t(const TerminatingDecimal& c, const TerminatingDecimal& d) {
  return add_t(c, d, std::max(c.fractional_length(), d.fractional_length()));
}

TerminatingDecimal add_t(const TerminatingDecimal& c, const TerminatingDecimal& d, std::int64_t k) {
  return TerminatingDecimal::from_scaled(to_scaled(c, k).value + to_scaled(d, k).value, k);
}

TerminatingDecimal sub_t(const TerminatingDecimal& c, const TerminatingDecimal& d) {
  return add_t(c, -d);
}

TerminatingDecimal mul_t(const TerminatingDecimal& c, const TerminatingDecimal& d) {
  return mul_t(c, d, std::max(c.fractional_length(), d.fractional_length()));
}

TerminatingDecimal mul_t(const TerminatingDecimal& c, const TerminatingDecimal& d, std::int64_t k) {
  return TerminatingDecimal::from_scaled(to_scaled(c, k).value * to_scaled(d, k).value, 2 * k);
}

Digit last_nonzero_digit(const TerminatingDecimal& c) {
  if (c.is_zero()) throw ZeroInput("last_nonzero_digit of zero");
  return Digit(static_cast<int>(mpz_tdiv_ui(c.mantissa().get_mpz_t(), 10)));
}

}  // namespace decreal
