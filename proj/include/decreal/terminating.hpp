#pragma once

// Terminating decimals: the ring of decimals with finitely many nonzero
// digits, computed exactly by scaling into integers.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "decreal/types.hpp"

namespace decreal {

/// value * 10^-scale.
struct ScaledInteger {
  mpz_class value;
  std::int64_t scale = 0;
};

class TerminatingDecimal {
 public:
  TerminatingDecimal() = default;

  /// value * 10^-scale, canonicalised (no trailing zero digits in value).
  static TerminatingDecimal from_scaled(mpz_class value, std::int64_t scale);
  static TerminatingDecimal from_int(long v) { return from_scaled(v, 0); }
  /// 10^k as a positive terminating decimal.
  static TerminatingDecimal pow10(std::int64_t k);
  /// Plain decimal text: optional '-', digits, optional '.' and digits.
  static TerminatingDecimal parse(std::string_view text);

  Sign sign() const { return static_cast<Sign>(sgn(mantissa_)); }
  bool is_zero() const { return mantissa_ == 0; }

  /// Canonical mantissa (not divisible by 10 unless zero) and its scale.
  const mpz_class& mantissa() const { return mantissa_; }
  std::int64_t scale() const { return scale_; }
  /// Number of digits after the point (0 for integers).
  std::int64_t fractional_length() const { return scale_ > 0 ? scale_ : 0; }

  std::optional<std::int64_t> msd_index() const;
  /// Index of the least significant nonzero digit; nullopt for zero.
  std::optional<std::int64_t> lsd_index() const;
  Digit digit(std::int64_t index) const;

  /// Keeps digits at indices >= -n (rounds toward zero).
  TerminatingDecimal truncate(std::int64_t n) const;
  /// Multiplication by 10^k.
  TerminatingDecimal shifted(std::int64_t k) const;
  TerminatingDecimal abs() const;
  TerminatingDecimal operator-() const { return from_scaled(-mantissa_, scale_); }

  std::string to_string() const;
  /// Renders with exactly `frac_digits` digits after the point (padding zeros).
  std::string to_string_fixed(std::int64_t frac_digits) const;

  friend bool operator==(const TerminatingDecimal& a, const TerminatingDecimal& b) {
    return a.scale_ == b.scale_ && a.mantissa_ == b.mantissa_;
  }
  friend std::strong_ordering operator<=>(const TerminatingDecimal& a,
                                          const TerminatingDecimal& b);

 private:
  mpz_class mantissa_ = 0;
  std::int64_t scale_ = 0;
};

/// Integer image of 10^k c. Throws InsufficientScale when 10^k c still has
/// digits below index 0.
ScaledInteger to_scaled(const TerminatingDecimal& c, std::int64_t k);

/// c + d computed as 10^-k (10^k c + 10^k d). Without k the smallest
/// admissible k (largest fractional length of the operands) is used.
TerminatingDecimal add_t(const TerminatingDecimal& c, const TerminatingDecimal& d);
TerminatingDecimal add_t(const TerminatingDecimal& c, const TerminatingDecimal& d, std::int64_t k);
TerminatingDecimal sub_t(const TerminatingDecimal& c, const TerminatingDecimal& d);
/// c * d computed as 10^-2k (10^k c * 10^k d).
TerminatingDecimal mul_t(const TerminatingDecimal& c, const TerminatingDecimal& d);
TerminatingDecimal mul_t(const TerminatingDecimal& c, const TerminatingDecimal& d, std::int64_t k);

/// Digit at the least index carrying a nonzero digit. Throws ZeroInput for 0.
Digit last_nonzero_digit(const TerminatingDecimal& c);

inline TerminatingDecimal operator+(const TerminatingDecimal& a, const TerminatingDecimal& b) {
  return add_t(a, b);
}
inline TerminatingDecimal operator-(const TerminatingDecimal& a, const TerminatingDecimal& b) {
  return sub_t(a, b);
}
inline TerminatingDecimal operator*(const TerminatingDecimal& a, const TerminatingDecimal& b) {
  return mul_t(a, b);
}

}  // namespace decreal
