#include "decreal/periodic_field.hpp"

#include <algorithm>

#include "decreal/errors.hpp"
#include "decreal/kernels.hpp"
#include "decreal/number_theory.hpp"

namespace decreal {
namespace {

constexpr std::int64_t kMaxScalingExponent = 1000000;

mpz_class pow10_z(std::uint64_t k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

const mpq_class& q(const PeriodicDecimal& p) { return detail::PeriodicAccess::value(p); }

PeriodicDecimal from_q(mpq_class v) { return detail::PeriodicAccess::make(std::move(v)); }

// Digits at indices top, top-1, ... of the count-digit prefix of d.
std::vector<std::uint8_t> digit_prefix(const Decimal& d, std::int64_t top, std::size_t count) {
  if (const auto* p = d.as_finite()) return p->digit_window(top, count);
  std::int64_t level = static_cast<std::int64_t>(count) - 1 - top;
  TerminatingDecimal t = d.truncation(level);
  mpz_class x = to_scaled(t.abs(), level).value % pow10_z(count);
  std::string s = x.get_str();
  if (s.size() < count) s.insert(0, count - s.size(), '0');
  return kernels::to_digits(s);
}

}  // namespace

TerminatingDecimal nines_zeros(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 0) throw std::invalid_argument("nines_zeros needs a >= 1 and b >= 0");
  mpz_class v = pow10_z(static_cast<std::uint64_t>(a)) - 1;
  return TerminatingDecimal::from_scaled(v, -b);
}

std::int64_t divisibility_exponent(const ScaledInteger& r) {
  if (r.value == 0) throw ZeroInput("divisibility_exponent of zero");
  if (r.scale != 0) throw std::invalid_argument("divisibility_exponent expects an integer");
  auto [s, t] = nt::split_two_five(r.value);
  std::uint64_t ks = std::max<std::uint64_t>(nt::two_five_exponent(s), 1);
  mpz_class ord = nt::order_of_ten(t);
  if (!ord.fits_slong_p()) throw BoundsTooLarge("order of 10 too large");
  std::uint64_t o = ord.get_ui();
  // t | 10^a - 1 iff ord | a; s | 10^a iff a >= ks.
  return static_cast<std::int64_t>((ks + o - 1) / o * o);
}

IntegerScaling scale_to_integer(const PeriodicDecimal& x) {
  mpz_class period = x.period_length();
  std::int64_t pre = x.preperiod_length();
  if (!period.fits_slong_p() || period.get_si() > kMaxScalingExponent) {
    throw BoundsTooLarge("period too long to scale to an integer");
  }
  std::int64_t p = period.get_si();
  std::int64_t a = (pre / p + 1) * p;
  if (a > kMaxScalingExponent) throw BoundsTooLarge("scaling exponent too large");
  mpz_class ten_a = pow10_z(static_cast<std::uint64_t>(a));
  mpz_class n = ten_a * (ten_a - 1);
  mpq_class v = q(x) * n;
  if (v.get_den() != 1) throw std::logic_error("scaled periodic decimal is not an integer");
  return {a, {v.get_num(), 0}};
}

PeriodicDecimal add_p(const PeriodicDecimal& x, const PeriodicDecimal& y) { return from_q(q(x) + q(y)); }

PeriodicDecimal sub_p(const PeriodicDecimal& x, const PeriodicDecimal& y) { return from_q(q(x) - q(y)); }

PeriodicDecimal mul_p(const PeriodicDecimal& x, const PeriodicDecimal& y) { return from_q(q(x) * q(y)); }

PeriodicDecimal inv_p(const PeriodicDecimal& x) {
  if (x.is_zero()) throw DivisionByZero();
  return from_q(1 / q(x));
}

std::optional<PeriodicDecimal> detect_period(const Decimal& d, std::size_t max_digits,
                                             std::size_t max_period) {
  auto msd = d.msd_index();
  std::int64_t top = std::max<std::int64_t>(msd.value_or(0), 0);
  const std::size_t n = max_digits;
  if (n < static_cast<std::size_t>(top) + 2) return std::nullopt;
  auto digits = digit_prefix(d, top, n);
  std::span<const std::uint8_t> all(digits);
  for (std::size_t p = 1; p <= max_period && 2 * p <= n; ++p) {
    std::size_t last = kernels::last_mismatch(all.first(n - p), all.subspan(p));
    std::size_t start = last == kernels::npos ? 0 : last + 1;
    std::size_t stretch = n - start;
    if (stretch < std::max(2 * p, n / 2)) continue;
    // Read the repetend no earlier than the first fractional digit.
    std::size_t frac0 = static_cast<std::size_t>(top) + 1;
    std::size_t rs = std::max(start, frac0);
    if (rs + p > n) continue;
    auto integer = all.first(frac0);
    auto pre = all.subspan(frac0, rs - frac0);
    auto rep = all.subspan(rs, p);
    Sign sign = d.sign().value_or(Sign::positive);
    return PeriodicDecimal::from_digits(sign, integer, pre, rep);
  }
  return std::nullopt;
}

}  // namespace decreal
