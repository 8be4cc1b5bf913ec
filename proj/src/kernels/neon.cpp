#include <arm_neon.h>

#include "decreal/kernels.hpp"

namespace decreal::kernels::neon {
namespace {

constexpr std::size_t kWidth = 16;

bool all_set(uint8x16_t m) { return vminvq_u8(m) == 0xff; }

bool ascii_to_digits(const char* in, std::uint8_t* out, std::size_t n) {
  const uint8x16_t zero_char = vdupq_n_u8('0');
  const uint8x16_t nine = vdupq_n_u8(9);
  uint8x16_t bad = vdupq_n_u8(0);
  std::size_t i = 0;
  for (; i + kWidth <= n; i += kWidth) {
    uint8x16_t d = vsubq_u8(vld1q_u8(reinterpret_cast<const std::uint8_t*>(in + i)), zero_char);
    bad = vorrq_u8(bad, vcgtq_u8(d, nine));
    vst1q_u8(out + i, d);
  }
  bool ok = vmaxvq_u8(bad) == 0;
  return scalar::ascii_to_digits(in + i, out + i, n - i) && ok;
}

std::size_t first_mismatch(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kWidth <= n; i += kWidth) {
    if (!all_set(vceqq_u8(vld1q_u8(a + i), vld1q_u8(b + i)))) {
      return i + scalar::first_mismatch(a + i, b + i, kWidth);
    }
  }
  std::size_t tail = scalar::first_mismatch(a + i, b + i, n - i);
  return tail == npos ? npos : i + tail;
}

std::size_t last_mismatch(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  std::size_t end = n;
  while (end >= kWidth) {
    std::size_t i = end - kWidth;
    if (!all_set(vceqq_u8(vld1q_u8(a + i), vld1q_u8(b + i)))) {
      return i + scalar::last_mismatch(a + i, b + i, kWidth);
    }
    end = i;
  }
  return scalar::last_mismatch(a, b, end);
}

std::size_t trailing_run(const std::uint8_t* a, std::size_t n, std::uint8_t value) {
  const uint8x16_t v = vdupq_n_u8(value);
  std::size_t end = n;
  while (end >= kWidth) {
    std::size_t i = end - kWidth;
    if (!all_set(vceqq_u8(vld1q_u8(a + i), v))) {
      return (n - end) + scalar::trailing_run(a + i, kWidth, value);
    }
    end = i;
  }
  return (n - end) + scalar::trailing_run(a, end, value);
}

}  // namespace

const KernelTable& table() {
  static const KernelTable t{"neon", &ascii_to_digits, &first_mismatch, &last_mismatch,
                             &trailing_run};
  return t;
}

}  // namespace decreal::kernels::neon
