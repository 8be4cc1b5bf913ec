#include <gtest/gtest.h>

#include <atomic>
#include <random>

#include "decreal/decimal.hpp"
#include "decreal/errors.hpp"
#include "decreal/sqrt.hpp"
#include "oracle.hpp"

using namespace decreal;

namespace {

Decimal lit(const char* s) { return Decimal::parse(s); }

Decimal sqrt2() { return sqrt_stream(PeriodicDecimal::parse("2")).digits; }

}  // namespace

TEST(DigitAt, Examples) {
  EXPECT_EQ(digit_at(sqrt2(), 0).value(), 1);
  EXPECT_EQ(digit_at(lit("1.414213"), 0).value(), 1);
  EXPECT_EQ(digit_at(Decimal{}, 7).value(), 0);
  EXPECT_EQ(digit_at(Decimal{}, -7).value(), 0);
  EXPECT_EQ(digit_at(lit("-17.341"), -3).value(), 1);
  EXPECT_EQ(digit_at(lit("-17.341"), 5).value(), 0);
  EXPECT_EQ(digit_at(lit("0.(9)"), -40).value(), 9);
}

TEST(Truncate, Examples) {
  EXPECT_EQ(truncate(lit("0.(9)"), 2).to_string(), "0.99");
  EXPECT_EQ(truncate(sqrt2(), 3).to_string(), "1.414");
  EXPECT_EQ(truncate(lit("1.414213"), 3).to_string(), "1.414");
  auto z = truncate(lit("0.0003"), 2);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.sign(), Sign::zero);
  EXPECT_EQ(truncate(lit("-0.2(9)"), 3).to_string(), "-0.299");
}

TEST(Shift, Examples) {
  EXPECT_EQ(shift(lit("0.(3)"), 1).to_string(), "3.(3)");
  EXPECT_EQ(shift(lit("1"), -2).to_string(), "0.01");
  EXPECT_EQ(shift(Decimal{}, 9).to_string(), "0");
  auto lazy = shift(sqrt2(), 2);
  EXPECT_EQ(lazy.truncation(3).to_string(), "141.421");
  EXPECT_EQ(shift(sqrt2(), -1).truncation(4).to_string(), "0.1414");
}

TEST(Negate, Examples) {
  EXPECT_EQ(negate(lit("0.(9)")).to_string(), "-0.(9)");
  EXPECT_EQ(negate(Decimal{}).to_string(), "0");
  EXPECT_EQ(negate(lit("-17.341")).to_string(), "17.341");
  EXPECT_EQ(negate(sqrt2()).truncation(2).to_string(), "-1.41");
}

TEST(ClassifyTail, Examples) {
  EXPECT_EQ(classify_tail(lit("0.(9)"), 10), TailClass::nines);
  EXPECT_EQ(classify_tail(lit("1"), 10), TailClass::zeros);
  EXPECT_EQ(classify_tail(lit("0.(3)"), 10), TailClass::other);
  EXPECT_EQ(classify_tail(sqrt2(), 100), std::nullopt);
}

TEST(DecimalSyntax, LiteralsAndEllipsis) {
  EXPECT_EQ(lit("1.41(6)").to_string(), "1.41(6)");
  EXPECT_EQ(lit("0.999...").to_string(), "0.(9)");
  EXPECT_EQ(lit("0.1666\xE2\x80\xA6").to_string(), "0.1(6)");
  EXPECT_EQ(lit("1.(0)").to_string(), "1");
  EXPECT_EQ(lit("2.(36)").to_string(), "2.(36)");
  EXPECT_EQ(lit("0.(33)").to_string(), "0.(3)");
  EXPECT_EQ(lit("0.12(12)").to_string(), "0.(12)");
  EXPECT_EQ(lit("-0").to_string(), "0");
  EXPECT_THROW(lit("0.12..."), ParseError);  // no run of three equal digits
  EXPECT_THROW(lit("1.41(6"), ParseError);
  EXPECT_THROW(lit("1.()"), ParseError);
  EXPECT_THROW(lit("1."), ParseError);
  EXPECT_THROW(lit("abc"), ParseError);
  try {
    lit("1.41(6");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset, 6u);
  }
}

TEST(DecimalSyntax, RenderParseRoundTrip) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 1000; ++i) {
    auto text = oracle::random_literal(rng, 3, 4, 4);
    Decimal d = lit(text.c_str());
    std::string r = d.to_string();
    EXPECT_EQ(lit(r.c_str()).finite(), d.finite()) << text << " -> " << r;
    EXPECT_EQ(oracle::literal_value(r), oracle::literal_value(text));
  }
}

TEST(DecimalInvariants, TruncationsNest) {
  std::mt19937_64 rng(22);
  std::vector<Decimal> ds{sqrt2(), negate(sqrt2())};
  for (int i = 0; i < 200; ++i) ds.push_back(lit(oracle::random_literal(rng, 3, 4, 4).c_str()));
  for (const auto& d : ds) {
    for (std::int64_t n = 0; n < 30; ++n) {
      EXPECT_EQ(truncate(d, n + 1).truncate(n), truncate(d, n));
    }
  }
}

TEST(DecimalInvariants, ShiftIsABijection) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    Decimal d = lit(oracle::random_literal(rng, 3, 4, 4).c_str());
    std::int64_t k = static_cast<std::int64_t>(rng() % 21) - 10;
    Decimal s = shift(d, k);
    EXPECT_EQ(shift(s, -k).finite(), d.finite());
    for (std::int64_t idx = -12; idx <= 4; ++idx) {
      EXPECT_EQ(digit_at(s, idx), digit_at(d, idx - k));
    }
  }
}

TEST(DecimalInvariants, LeadingDigitNonzero) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 500; ++i) {
    Decimal d = lit(oracle::random_literal(rng, 3, 4, 4).c_str());
    for (const Decimal& e : {d, negate(d), shift(d, 3), shift(d, -5)}) {
      auto m = e.msd_index();
      if (!m) {
        EXPECT_TRUE(e.finite().is_zero());
        continue;
      }
      EXPECT_NE(digit_at(e, *m).value(), 0);
      EXPECT_EQ(digit_at(e, *m + 1).value(), 0);
    }
  }
  auto m = sqrt2().msd_index();
  ASSERT_TRUE(m);
  EXPECT_EQ(*m, 0);
}

TEST(LazyStream, MemoizedAndDeterministic) {
  auto calls = std::make_shared<std::atomic<int>>(0);
  Decimal d = Decimal::lazy([calls](std::int64_t n) {
    ++*calls;
    return sqrt_stream(PeriodicDecimal::parse("3")).digits.truncation(n);
  });
  auto first = d.truncation(40);
  int after_first = calls->load();
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(d.truncation(40), first);
    EXPECT_EQ(d.truncation(20), first.truncate(20));
    EXPECT_EQ(digit_at(d, -17), digit_at(d, -17));
  }
  EXPECT_EQ(calls->load(), after_first);
  EXPECT_EQ(d.representation(), Representation::lazy);
  EXPECT_THROW(d.finite(), NotFinitelyRepresented);
}

TEST(Representation, Tags) {
  EXPECT_EQ(lit("1.5").representation(), Representation::terminating);
  EXPECT_EQ(lit("0.(3)").representation(), Representation::periodic);
  EXPECT_EQ(lit("0.(9)").representation(), Representation::periodic);
}
