#include "decreal/periodic.hpp"

#include <algorithm>

#include "decreal/errors.hpp"
#include "decreal/kernels.hpp"
#include "decreal/number_theory.hpp"

namespace decreal {
namespace {

mpz_class pow10_z(std::uint64_t k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

mpz_class digits_to_int(std::span<const std::uint8_t> ds) {
  if (ds.empty()) return 0;
  std::string s(ds.size(), '0');
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds[i] > 9) throw std::invalid_argument("digit out of range");
    s[i] = static_cast<char>('0' + ds[i]);
  }
  return mpz_class(s, 10);
}

bool all_equal(std::span<const std::uint8_t> ds, std::uint8_t v) {
  return kernels::trailing_run(ds, v) == ds.size();
}

bool terminating_q(const mpq_class& v) {
  return nt::split_two_five(v.get_den()).second == 1;
}

std::size_t utf8_ellipsis(std::string_view text, std::size_t pos) {
  if (text.substr(pos, 3) == "...") return 3;
  if (text.substr(pos, 3) == "\xE2\x80\xA6") return 3;
  return 0;
}

}  // namespace

const mpq_class& detail::PeriodicAccess::value(const PeriodicDecimal& p) { return p.value_; }

PeriodicDecimal detail::PeriodicAccess::make(mpq_class v, bool nines) {
  v.canonicalize();
  PeriodicDecimal p;
  p.nines_ = nines && v != 0 && terminating_q(v);
  p.value_ = std::move(v);
  return p;
}

PeriodicDecimal PeriodicDecimal::from_digits(Sign sign, std::span<const std::uint8_t> integer,
                                             std::span<const std::uint8_t> preperiod,
                                             std::span<const std::uint8_t> repetend) {
  if (repetend.empty()) throw std::invalid_argument("repetend must be nonempty");
  mpz_class ip = digits_to_int(integer);
  mpz_class pre = digits_to_int(preperiod);
  mpz_class rep = digits_to_int(repetend);
  mpz_class scale = pow10_z(preperiod.size());
  mpz_class rden = pow10_z(repetend.size()) - 1;
  mpq_class v = mpq_class(ip) + (mpq_class(pre) + mpq_class(rep, rden)) / scale;
  v.canonicalize();
  if (sign == Sign::negative) v = -v;
  return detail::PeriodicAccess::make(std::move(v), all_equal(repetend, 9));
}

PeriodicDecimal PeriodicDecimal::from_terminating(const TerminatingDecimal& t) {
  mpq_class v(t.mantissa());
  if (t.scale() > 0) v /= pow10_z(static_cast<std::uint64_t>(t.scale()));
  else v *= pow10_z(static_cast<std::uint64_t>(-t.scale()));
  return detail::PeriodicAccess::make(std::move(v));
}

PeriodicDecimal parse_unsigned_literal(std::string_view text, std::size_t& pos) {
  auto is_digit = [&](std::size_t i) { return i < text.size() && text[i] >= '0' && text[i] <= '9'; };
  std::size_t start = pos;
  while (is_digit(pos)) ++pos;
  if (pos == start) throw ParseError("expected a number", pos, "digit");
  auto integer = kernels::to_digits(text.substr(start, pos - start));
  std::vector<std::uint8_t> frac, rep;
  bool has_rep = false;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::size_t fs = pos;
    while (is_digit(pos)) ++pos;
    frac = kernels::to_digits(text.substr(fs, pos - fs));
    if (pos < text.size() && text[pos] == '(') {
      std::size_t rs = ++pos;
      while (is_digit(pos)) ++pos;
      if (pos == rs) throw ParseError("empty repetend", pos, "digit");
      if (pos >= text.size() || text[pos] != ')') throw ParseError("unclosed repetend", pos, ")");
      rep = kernels::to_digits(text.substr(rs, pos - rs));
      ++pos;
      has_rep = true;
    } else if (std::size_t n = utf8_ellipsis(text, pos); n != 0) {
      std::size_t run = frac.empty() ? 0 : kernels::trailing_run(frac, frac.back());
      if (run < 3) {
        throw ParseError("'...' needs a run of at least three equal digits", pos, "repetend");
      }
      rep.assign(1, frac.back());
      frac.resize(frac.size() - run);
      pos += n;
      has_rep = true;
    } else if (frac.empty()) {
      throw ParseError("expected digits after '.'", pos, "digit");
    }
  }
  if (!has_rep) rep.assign(1, 0);
  return PeriodicDecimal::from_digits(Sign::positive, integer, frac, rep);
}

PeriodicDecimal PeriodicDecimal::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  PeriodicDecimal p = parse_unsigned_literal(text, pos);
  if (pos != text.size()) throw ParseError("unexpected trailing input", pos, "end of input");
  return negative ? p.negated() : p;
}

bool PeriodicDecimal::has_terminating_value() const { return terminating_q(value_); }

TailClass PeriodicDecimal::tail_class() const {
  if (nines_) return TailClass::nines;
  if (has_terminating_value()) return TailClass::zeros;
  return TailClass::other;
}

mpz_class PeriodicDecimal::scaled_floor(std::int64_t e) const {
  mpq_class a = abs(value_);
  if (e >= 0) a *= pow10_z(static_cast<std::uint64_t>(e));
  else a /= pow10_z(static_cast<std::uint64_t>(-e));
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  if (nines_ && a.get_den() == 1) f -= 1;
  return f;
}

std::optional<std::int64_t> PeriodicDecimal::msd_index() const {
  if (is_zero()) return std::nullopt;
  // Estimate from operand sizes, then settle exactly.
  auto num_len = static_cast<std::int64_t>(mpz_sizeinbase(value_.get_num_mpz_t(), 10));
  auto den_len = static_cast<std::int64_t>(mpz_sizeinbase(value_.get_den_mpz_t(), 10));
  std::int64_t m = num_len - den_len;
  while (scaled_floor(-m) == 0) --m;
  while (scaled_floor(-(m + 1)) != 0) ++m;
  return m;
}

Digit PeriodicDecimal::digit(std::int64_t index) const {
  mpz_class f = scaled_floor(-index);
  return Digit(static_cast<int>(mpz_fdiv_ui(f.get_mpz_t(), 10)));
}

std::vector<std::uint8_t> PeriodicDecimal::digit_window(std::int64_t top, std::size_t count) const {
  if (count == 0) return {};
  std::int64_t e = static_cast<std::int64_t>(count) - 1 - top;
  mpz_class f = scaled_floor(e);
  f %= pow10_z(count);
  std::string s = f.get_str();
  if (s.size() < count) s.insert(0, count - s.size(), '0');
  return kernels::to_digits(s);
}

TerminatingDecimal PeriodicDecimal::truncate(std::int64_t n) const {
  mpz_class f = scaled_floor(n);
  if (sign() == Sign::negative) f = -f;
  return TerminatingDecimal::from_scaled(std::move(f), n);
}

PeriodicDecimal PeriodicDecimal::shifted(std::int64_t k) const {
  mpq_class v = value_;
  if (k >= 0) v *= pow10_z(static_cast<std::uint64_t>(k));
  else v /= pow10_z(static_cast<std::uint64_t>(-k));
  return detail::PeriodicAccess::make(std::move(v), nines_);
}

PeriodicDecimal PeriodicDecimal::negated() const {
  return detail::PeriodicAccess::make(-value_, nines_);
}

std::optional<PeriodicDecimal> PeriodicDecimal::jump_partner() const {
  if (is_zero() || !has_terminating_value()) return std::nullopt;
  return detail::PeriodicAccess::make(value_, !nines_);
}

PeriodicDecimal PeriodicDecimal::zeros_member() const {
  return nines_ ? detail::PeriodicAccess::make(value_, false) : *this;
}

TerminatingDecimal PeriodicDecimal::terminating_value() const {
  if (!has_terminating_value()) {
    throw std::logic_error("value has no terminating expansion");
  }
  // den = 2^a 5^b; scale by 10^max(a,b).
  std::int64_t k = static_cast<std::int64_t>(nt::two_five_exponent(value_.get_den()));
  mpq_class scaled = value_ * pow10_z(static_cast<std::uint64_t>(k));
  return TerminatingDecimal::from_scaled(scaled.get_num(), k);
}

std::vector<std::uint8_t> PeriodicDecimal::integer_digits() const {
  auto m = msd_index();
  if (!m || *m < 0) return {};
  return digit_window(*m, static_cast<std::size_t>(*m + 1));
}

std::int64_t PeriodicDecimal::preperiod_length() const {
  if (is_zero()) return 0;
  if (has_terminating_value()) {
    std::int64_t lsd = -terminating_value().scale();
    // Zeros member: the fractional digits; nines member: those of value - 10^lsd.
    return lsd < 0 ? -lsd : 0;
  }
  auto [s, t] = nt::split_two_five(value_.get_den());
  return static_cast<std::int64_t>(nt::two_five_exponent(s));
}

mpz_class PeriodicDecimal::period_length() const {
  if (has_terminating_value()) return 1;
  return nt::order_of_ten(nt::split_two_five(value_.get_den()).second);
}

std::vector<std::uint8_t> PeriodicDecimal::preperiod() const {
  return digit_window(-1, static_cast<std::size_t>(preperiod_length()));
}

std::vector<std::uint8_t> PeriodicDecimal::repetend(std::size_t max_len) const {
  mpz_class p = period_length();
  std::size_t n = max_len;
  if (p.fits_ulong_p() && p.get_ui() < n) n = p.get_ui();
  return digit_window(-preperiod_length() - 1, n);
}

std::string PeriodicDecimal::to_string(RenderStyle style, std::size_t max_period) const {
  if (is_zero()) return "0";
  std::string out = sign() == Sign::negative ? "-" : "";
  auto append = [&](const std::vector<std::uint8_t>& ds) {
    for (auto d : ds) out.push_back(static_cast<char>('0' + d));
  };
  auto ip = integer_digits();
  if (ip.empty()) out += "0";
  append(ip);
  auto pre = preperiod();
  if (tail_class() == TailClass::zeros) {
    if (!pre.empty()) {
      out += ".";
      append(pre);
    }
    return out;
  }
  out += ".";
  append(pre);
  bool elided = false;
  try {
    mpz_class p = period_length();
    elided = !(p.fits_ulong_p() && p.get_ui() <= max_period);
  } catch (const FactorizationLimit&) {
    elided = true;
  }
  auto rep = repetend(max_period);
  if (elided) {
    append(rep);
    return out + "\xE2\x80\xA6";
  }
  if (style == RenderStyle::parens) {
    out += "(";
    append(rep);
    return out + ")";
  }
  std::size_t shown = 0;
  do {
    append(rep);
    shown += rep.size();
  } while (shown < 3);
  return out + "\xE2\x80\xA6";
}

Ordering PeriodicDecimal::compare(const PeriodicDecimal& other) const {
  int c = cmp(value_, other.value_);
  if (c < 0) return Ordering::less;
  if (c > 0) return Ordering::greater;
  if (nines_ == other.nines_) return Ordering::equal;
  // Same value, different members: the nines member has the smaller magnitude.
  bool this_smaller_mag = nines_;
  bool positive = sign() == Sign::positive;
  return (this_smaller_mag == positive) ? Ordering::less : Ordering::greater;
}

}  // namespace decreal
