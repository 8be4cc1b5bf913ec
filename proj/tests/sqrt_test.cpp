#include <gtest/gtest.h>

#include <random>

#include "decreal/errors.hpp"
#include "decreal/sqrt.hpp"
#include "oracle.hpp"

using namespace decreal;

namespace {

PeriodicDecimal P(const std::string& s) { return PeriodicDecimal::parse(s); }

// "1.414..." from isqrt(c * 10^(2n)) for an integer c.
std::string sqrt_digits(unsigned c, unsigned n) {
  std::string s = oracle::isqrt_digits(oracle::Z(c) * oracle::pow10(2 * n));
  std::string ip = s.substr(0, s.size() - n);
  return (ip.empty() ? "0" : ip) + "." + s.substr(s.size() - n);
}

}  // namespace

TEST(SqrtStream, SqrtTwoDigits) {
  Decimal r = sqrt_stream(P("2")).digits;
  EXPECT_EQ(r.truncation(33).to_string(), "1.414213562373095048801688724209698");
  EXPECT_EQ(r.truncation(200).to_string_fixed(200), sqrt_digits(2, 200));
}

TEST(SqrtStream, MatchesIntegerSquareRoot) {
  for (unsigned c : {3u, 5u, 7u, 10u, 99u, 12345u}) {
    Decimal r = sqrt_stream(P(std::to_string(c))).digits;
    EXPECT_EQ(r.truncation(120).to_string_fixed(120), sqrt_digits(c, 120)) << c;
  }
}

TEST(SqrtStream, TruncationsBracketTheTarget) {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 50; ++i) {
    auto t = oracle::random_literal(rng, 2, 2, 3, false);
    auto q = oracle::literal_value(t);
    Decimal r = sqrt_stream(P(t)).digits;
    for (std::int64_t n = 0; n < 30; n += 3) {
      auto lo = oracle::literal_value(r.truncation(n).to_string());
      auto hi = lo + oracle::Q(1, oracle::pow10(static_cast<unsigned>(n)));
      EXPECT_LE(lo * lo, q) << t;
      EXPECT_GT(hi * hi, q) << t;
    }
  }
}

TEST(SqrtStream, NinesTargetBehavesLikeItsValue) {
  Decimal a = sqrt_stream(P("1.(9)")).digits;
  Decimal b = sqrt_stream(P("2")).digits;
  EXPECT_EQ(a.truncation(60), b.truncation(60));
  auto s = sqrt_stream(P("0.(9)"));
  EXPECT_EQ(s.digits.truncation(10).to_string(), "1");
  EXPECT_TRUE(s.target_is_square);
  EXPECT_THROW(sqrt_stream(P("-2")), NegativeInput);
}

TEST(SquareOfTruncations, SqrtTwoSquaresToNines) {
  Decimal sq = square_of_truncations(sqrt_stream(P("2")));
  EXPECT_EQ(sq.truncation(100).to_string(), "1." + std::string(100, '9'));
  EXPECT_EQ(sq.digit(0), 1);
}

TEST(SquareOfTruncations, Examples) {
  Decimal three = square_of_truncations(sqrt_stream(P("9")));
  EXPECT_EQ(three.truncation(30).to_string(), "9");
  Decimal q = square_of_truncations(Decimal(P("0.(3)")));
  EXPECT_EQ(q.truncation(20).to_string(), "0." + std::string(20, '1'));
}

TEST(ResidueObstruction, Examples) {
  auto T = [](const char* s) { return TerminatingDecimal::parse(s); };
  EXPECT_TRUE(residue_obstruction(T("2")));
  EXPECT_TRUE(residue_obstruction(T("0.3")));
  EXPECT_TRUE(residue_obstruction(T("170")));
  EXPECT_TRUE(residue_obstruction(T("8")));
  EXPECT_FALSE(residue_obstruction(T("4")));
  EXPECT_FALSE(residue_obstruction(T("0.25")));
  EXPECT_FALSE(residue_obstruction(T("6")));
  EXPECT_THROW(residue_obstruction(T("0")), NegativeInput);
  EXPECT_THROW(residue_obstruction(T("-4")), NegativeInput);
}

TEST(ResidueObstruction, ObstructedValuesAreNotRationalSquares) {
  for (long n = 1; n <= 3000; ++n) {
    auto t = TerminatingDecimal::from_int(n);
    oracle::Z r = boost::multiprecision::sqrt(oracle::Z(n));
    bool square = r * r == n;
    if (residue_obstruction(t)) EXPECT_FALSE(square) << n;
    // Every perfect square ends in 0, 1, 4, 5, 6 or 9 (last nonzero digit).
    if (square) EXPECT_FALSE(residue_obstruction(t)) << n;
  }
}

TEST(ExhaustiveSearch, Examples) {
  auto four = exhaustive_square_search(real_class(Decimal(P("4"))), 1, 2, 2);
  ASSERT_EQ(four.size(), 2u);
  EXPECT_EQ(four[0].to_string(), "1.(9)");
  EXPECT_EQ(four[1].to_string(), "2");
  EXPECT_TRUE(exhaustive_square_search(real_class(Decimal(P("2"))), 1, 2, 2).empty());
  auto ninth = exhaustive_square_search(real_class(Decimal(P("0.(1)"))), 1, 1, 1);
  ASSERT_EQ(ninth.size(), 1u);
  EXPECT_EQ(ninth[0].to_string(), "0.(3)");
  EXPECT_THROW(exhaustive_square_search(real_class(Decimal(P("2"))), 4, 4, 4), BoundsTooLarge);
}

TEST(SqrtClass, ExactAndIrrational) {
  EXPECT_EQ(sqrt_class(real_class(Decimal(P("0.(4)")))).to_string(), "0.(6)");
  EXPECT_EQ(sqrt_class(real_class(Decimal(P("2.25")))).to_string(), "{1.4(9), 1.5}");
  RealClass r2 = sqrt_class(real_class(Decimal(P("2"))));
  EXPECT_FALSE(r2.finitely_represented());
  EXPECT_EQ(r2.representative().truncation(10).to_string(), "1.4142135623");
  EXPECT_THROW(sqrt_class(real_class(Decimal(P("-1")))), NegativeInput);
}
