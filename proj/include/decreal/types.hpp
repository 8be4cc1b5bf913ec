#pragma once

#include <cstdint>
#include <stdexcept>

namespace decreal {

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline Sign flip(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
inline Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

/// A decimal digit 0..9.
class Digit {
 public:
  constexpr Digit() = default;
  constexpr explicit Digit(int v) : value_(static_cast<std::uint8_t>(v)) {
    if (v < 0 || v > 9) throw std::out_of_range("digit out of range");
  }
  constexpr int value() const { return value_; }
  friend constexpr bool operator==(Digit, Digit) = default;
  friend constexpr bool operator==(Digit d, int v) { return d.value_ == v; }

 private:
  std::uint8_t value_ = 0;
};

enum class Ordering { less, equal, greater };

inline Ordering reverse(Ordering o) {
  return o == Ordering::less ? Ordering::greater : o == Ordering::greater ? Ordering::less : o;
}

}  // namespace decreal
