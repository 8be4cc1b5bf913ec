#pragma once

// Digit-array kernels. Every kernel has a portable scalar reference in
// decreal::kernels::scalar; vectorised variants (AVX2 on x86-64, NEON on
// aarch64) are picked once at startup from what the CPU reports. All
// variants must return identical results for identical inputs.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace decreal::kernels {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct KernelTable {
  const char* name;
  // Writes c - '0' for each input char; false if any char is not '0'..'9'.
  bool (*ascii_to_digits)(const char* in, std::uint8_t* out, std::size_t n);
  // Index of the first i with a[i] != b[i], or npos.
  std::size_t (*first_mismatch)(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
  // Index of the last i with a[i] != b[i], or npos.
  std::size_t (*last_mismatch)(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
  // Length of the longest suffix consisting only of `value`.
  std::size_t (*trailing_run)(const std::uint8_t* a, std::size_t n, std::uint8_t value);
};

namespace scalar {
bool ascii_to_digits(const char* in, std::uint8_t* out, std::size_t n);
std::size_t first_mismatch(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
std::size_t last_mismatch(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
std::size_t trailing_run(const std::uint8_t* a, std::size_t n, std::uint8_t value);
const KernelTable& table();
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
const KernelTable& table();
}
#endif

#if defined(__aarch64__)
namespace neon {
const KernelTable& table();
}
#endif

/// Every variant this build contains and this CPU can run, scalar first.
std::vector<const KernelTable*> available();

/// The variant selected for this process.
const KernelTable& active();

// Convenience wrappers over active().
std::vector<std::uint8_t> to_digits(std::string_view ascii);
std::size_t first_mismatch(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);
std::size_t last_mismatch(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);
std::size_t trailing_run(std::span<const std::uint8_t> a, std::uint8_t value);

}  // namespace decreal::kernels
