#include "decreal/kernels.hpp"

namespace decreal::kernels::scalar {

bool ascii_to_digits(const char* in, std::uint8_t* out, std::size_t n) {
  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    auto v = static_cast<std::uint8_t>(static_cast<unsigned char>(in[i]) - '0');
    ok &= v <= 9;
    out[i] = v;
  }
  return ok;
}

std::size_t first_mismatch(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return i;
  }
  return npos;
}

std::size_t last_mismatch(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  for (std::size_t i = n; i > 0; --i) {
    if (a[i - 1] != b[i - 1]) return i - 1;
  }
  return npos;
}

std::size_t trailing_run(const std::uint8_t* a, std::size_t n, std::uint8_t value) {
  std::size_t run = 0;
  while (run < n && a[n - 1 - run] == value) ++run;
  return run;
}

const KernelTable& table() {
  static const KernelTable t{"scalar", &ascii_to_digits, &first_mismatch, &last_mismatch,
                             &trailing_run};
  return t;
}

}  // namespace decreal::kernels::scalar
