#pragma once

// Ultimately periodic decimals: every decimal with a finite description.
//
// A value is stored as its exact magnitude plus, for values whose class is a
// jump pair, which member of the pair it is (the all-zeros tail or the
// all-nines tail). Integer digits, preperiod and repetend are derived on
// demand; repetends can be far too long to materialise (the reciprocal of a
// 12-digit number may have a period of 10^11 digits).

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "decreal/terminating.hpp"
#include "decreal/types.hpp"

namespace decreal {

enum class TailClass { zeros, nines, other };

enum class RenderStyle {
  parens,    // 0.(9)
  ellipsis,  // 0.999…
};

class PeriodicDecimal;

namespace detail {
struct PeriodicAccess {
  static const mpq_class& value(const PeriodicDecimal& p);
  /// Canonical decimal of value v; `nines` selects the all-nines member when
  /// v has a terminating expansion and is nonzero, and is ignored otherwise.
  static PeriodicDecimal make(mpq_class v, bool nines = false);
};
}  // namespace detail

class PeriodicDecimal {
 public:
  /// The zero decimal.
  PeriodicDecimal() = default;

  /// sign, integer digits (most significant first), preperiod and a
  /// nonempty repetend. Digits must be 0..9.
  static PeriodicDecimal from_digits(Sign sign, std::span<const std::uint8_t> integer,
                                     std::span<const std::uint8_t> preperiod,
                                     std::span<const std::uint8_t> repetend);
  static PeriodicDecimal from_terminating(const TerminatingDecimal& t);
  /// Literal syntax: [-]digits[.digits][(digits)] or a trailing "..." when
  /// the fraction ends in a run of at least three equal digits.
  static PeriodicDecimal parse(std::string_view text);

  Sign sign() const { return static_cast<Sign>(sgn(value_)); }
  bool is_zero() const { return value_ == 0; }
  TailClass tail_class() const;
  /// True when the value has a terminating expansion, i.e. the class is a
  /// jump pair (or zero).
  bool has_terminating_value() const;
  bool nines_form() const { return nines_; }

  std::optional<std::int64_t> msd_index() const;
  Digit digit(std::int64_t index) const;
  /// Digits at indices top, top-1, ..., top-count+1.
  std::vector<std::uint8_t> digit_window(std::int64_t top, std::size_t count) const;

  /// n-truncation: same sign, digits below index -n dropped.
  TerminatingDecimal truncate(std::int64_t n) const;
  PeriodicDecimal shifted(std::int64_t k) const;
  PeriodicDecimal negated() const;
  /// The other member of this decimal's jump, if it is in one.
  std::optional<PeriodicDecimal> jump_partner() const;
  /// The all-zeros member when this is the all-nines member of a jump.
  PeriodicDecimal zeros_member() const;
  /// Exact terminating value; only valid when has_terminating_value().
  TerminatingDecimal terminating_value() const;

  std::vector<std::uint8_t> integer_digits() const;
  std::int64_t preperiod_length() const;
  /// Length of the primitive repetend. May throw FactorizationLimit.
  mpz_class period_length() const;
  std::vector<std::uint8_t> preperiod() const;
  /// The first min(period, max_len) repetend digits.
  std::vector<std::uint8_t> repetend(
      std::size_t max_len = std::numeric_limits<std::size_t>::max()) const;

  /// Repetends longer than max_period are elided as a digit prefix and "…".
  std::string to_string(RenderStyle style = RenderStyle::parens,
                        std::size_t max_period = 2000) const;

  /// Lexicographic order of the two digit strings, adjusted for sign.
  Ordering compare(const PeriodicDecimal& other) const;

  friend bool operator==(const PeriodicDecimal& a, const PeriodicDecimal& b) {
    return a.nines_ == b.nines_ && a.value_ == b.value_;
  }

 private:
  friend struct detail::PeriodicAccess;

  // floor of |this| * 10^e read digitwise (all-nines members read one unit
  // lower when |value| * 10^e is an integer).
  mpz_class scaled_floor(std::int64_t e) const;

  mpq_class value_ = 0;
  bool nines_ = false;
};

/// Parses an unsigned literal starting at `pos`; advances `pos` past it.
/// A '(' directly after fraction digits (or the point) opens a repetend.
PeriodicDecimal parse_unsigned_literal(std::string_view text, std::size_t& pos);

}  // namespace decreal
