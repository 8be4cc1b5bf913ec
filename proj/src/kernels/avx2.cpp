// Compiled with -mavx2; only reached after the dispatcher confirmed AVX2.

#include <immintrin.h>

#include "decreal/kernels.hpp"

namespace decreal::kernels::avx2 {
namespace {

constexpr std::size_t kWidth = 32;

bool ascii_to_digits(const char* in, std::uint8_t* out, std::size_t n) {
  const __m256i zero_char = _mm256_set1_epi8('0');
  const __m256i nine = _mm256_set1_epi8(9);
  __m256i bad = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kWidth <= n; i += kWidth) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    __m256i d = _mm256_sub_epi8(v, zero_char);
    // unsigned d > 9  <=>  max(d, 9) != 9
    bad = _mm256_or_si256(bad, _mm256_xor_si256(_mm256_max_epu8(d, nine), nine));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), d);
  }
  bool ok = _mm256_testz_si256(bad, bad) != 0;
  return scalar::ascii_to_digits(in + i, out + i, n - i) && ok;
}

std::size_t first_mismatch(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kWidth <= n; i += kWidth) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    auto eq = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(va, vb)));
    if (eq != 0xffffffffu) return i + static_cast<std::size_t>(__builtin_ctz(~eq));
  }
  std::size_t tail = scalar::first_mismatch(a + i, b + i, n - i);
  return tail == npos ? npos : i + tail;
}

std::size_t last_mismatch(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  std::size_t end = n;
  while (end >= kWidth) {
    std::size_t i = end - kWidth;
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    auto eq = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(va, vb)));
    if (eq != 0xffffffffu) return i + 31 - static_cast<std::size_t>(__builtin_clz(~eq));
    end = i;
  }
  return scalar::last_mismatch(a, b, end);
}

std::size_t trailing_run(const std::uint8_t* a, std::size_t n, std::uint8_t value) {
  const __m256i v = _mm256_set1_epi8(static_cast<char>(value));
  std::size_t end = n;
  while (end >= kWidth) {
    std::size_t i = end - kWidth;
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    auto eq = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(x, v)));
    if (eq != 0xffffffffu) {
      std::size_t last_bad = 31 - static_cast<std::size_t>(__builtin_clz(~eq));
      return n - (i + last_bad + 1);
    }
    end = i;
  }
  return (n - end) + scalar::trailing_run(a, end, value);
}

}  // namespace

const KernelTable& table() {
  static const KernelTable t{"avx2", &ascii_to_digits, &first_mismatch, &last_mismatch,
                             &trailing_run};
  return t;
}

}  // namespace decreal::kernels::avx2
