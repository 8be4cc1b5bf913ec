#include <gtest/gtest.h>

#include <random>
#include <string>

#include "decreal/kernels.hpp"

using namespace decreal::kernels;

namespace {

std::vector<std::uint8_t> random_digits(std::mt19937_64& rng, std::size_t n, int hi) {
  std::uniform_int_distribution<int> d(0, hi);
  std::vector<std::uint8_t> v(n);
  for (auto& x : v) x = static_cast<std::uint8_t>(d(rng));
  return v;
}

}  // namespace

TEST(Kernels, ScalarReferenceBehaviour) {
  const auto& s = scalar::table();
  std::uint8_t out[4];
  EXPECT_TRUE(s.ascii_to_digits("0917", out, 4));
  EXPECT_EQ(out[1], 9);
  EXPECT_FALSE(s.ascii_to_digits("09a7", out, 4));
  std::uint8_t a[] = {1, 2, 3, 9, 9}, b[] = {1, 2, 4, 9, 8};
  EXPECT_EQ(s.first_mismatch(a, b, 5), 2u);
  EXPECT_EQ(s.last_mismatch(a, b, 5), 4u);
  EXPECT_EQ(s.first_mismatch(a, a, 5), npos);
  EXPECT_EQ(s.trailing_run(a, 5, 9), 2u);
  EXPECT_EQ(s.trailing_run(a, 5, 0), 0u);
}

TEST(Kernels, EveryVariantMatchesScalar) {
  std::mt19937_64 rng(7);
  const auto& ref = scalar::table();
  for (const KernelTable* k : available()) {
    SCOPED_TRACE(k->name);
    for (int iter = 0; iter < 3000; ++iter) {
      std::size_t n = static_cast<std::size_t>(rng() % 300);
      std::size_t offset = static_cast<std::size_t>(rng() % 7);
      // Mostly-equal arrays so mismatches land anywhere, including tails.
      auto a = random_digits(rng, n + offset, 9);
      auto b = a;
      int flips = static_cast<int>(rng() % 3);
      for (int f = 0; f < flips && n > 0; ++f) b[offset + rng() % n] ^= 1;
      const std::uint8_t* pa = a.data() + offset;
      const std::uint8_t* pb = b.data() + offset;
      EXPECT_EQ(k->first_mismatch(pa, pb, n), ref.first_mismatch(pa, pb, n));
      EXPECT_EQ(k->last_mismatch(pa, pb, n), ref.last_mismatch(pa, pb, n));
      auto runs = random_digits(rng, n + offset, 1);
      for (std::uint8_t v : {0, 1, 9}) {
        EXPECT_EQ(k->trailing_run(runs.data() + offset, n, v), ref.trailing_run(runs.data() + offset, n, v));
      }
      std::string text(n, '0');
      for (auto& c : text) c = static_cast<char>('0' + rng() % 10);
      if (n > 0 && rng() % 4 == 0) text[rng() % n] = static_cast<char>("/:a "[rng() % 4]);
      std::vector<std::uint8_t> o1(n), o2(n);
      bool ok1 = k->ascii_to_digits(text.data(), o1.data(), n);
      bool ok2 = ref.ascii_to_digits(text.data(), o2.data(), n);
      EXPECT_EQ(ok1, ok2);
      if (ok1) EXPECT_EQ(o1, o2);
    }
  }
}

TEST(Kernels, ActiveIsOneOfAvailable) {
  bool found = false;
  for (const KernelTable* k : available()) found = found || k == &active();
  EXPECT_TRUE(found);
}
