#include <cstdlib>
#include <cstring>

#include "decreal/kernels.hpp"

namespace decreal::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& select() {
  // DECREAL_KERNELS=scalar forces the reference path.
  const char* forced = std::getenv("DECREAL_KERNELS");
  if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return scalar::table();
#if defined(__x86_64__) || defined(_M_X64)
  if (cpu_has_avx2()) return avx2::table();
#endif
#if defined(__aarch64__)
  return neon::table();
#endif
  return scalar::table();
}

}  // namespace

std::vector<const KernelTable*> available() {
  std::vector<const KernelTable*> out{&scalar::table()};
#if defined(__x86_64__) || defined(_M_X64)
  if (cpu_has_avx2()) out.push_back(&avx2::table());
#endif
#if defined(__aarch64__)
  out.push_back(&neon::table());
#endif
  return out;
}

const KernelTable& active() {
  static const KernelTable& t = select();
  return t;
}

std::vector<std::uint8_t> to_digits(std::string_view ascii) {
  std::vector<std::uint8_t> out(ascii.size());
  if (!active().ascii_to_digits(ascii.data(), out.data(), ascii.size())) {
    out.clear();
  }
  return out;
}

std::size_t first_mismatch(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  std::size_t n = a.size() < b.size() ? a.size() : b.size();
  return active().first_mismatch(a.data(), b.data(), n);
}

std::size_t last_mismatch(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  std::size_t n = a.size() < b.size() ? a.size() : b.size();
  return active().last_mismatch(a.data(), b.data(), n);
}

std::size_t trailing_run(std::span<const std::uint8_t> a, std::uint8_t value) {
  return active().trailing_run(a.data(), a.size(), value);
}

}  // namespace decreal::kernels
