#include <gtest/gtest.h>

#include <random>

#include "decreal/errors.hpp"
#include "decreal/periodic_field.hpp"
#include "decreal/sqrt.hpp"
#include "oracle.hpp"

using namespace decreal;

namespace {

PeriodicDecimal P(const std::string& s) { return PeriodicDecimal::parse(s); }

oracle::Q value_of(const PeriodicDecimal& p) {
  const mpq_class& v = detail::PeriodicAccess::value(p);
  return oracle::Q(oracle::Z(v.get_num().get_str()), oracle::Z(v.get_den().get_str()));
}

ScaledInteger integer(long v) { return ScaledInteger{mpz_class(v), 0}; }

}  // namespace

TEST(NinesZeros, Examples) {
  EXPECT_EQ(nines_zeros(2, 1).to_string(), "990");
  EXPECT_EQ(nines_zeros(1, 0).to_string(), "9");
  EXPECT_EQ(nines_zeros(3, 2).to_string(), "99900");
}

TEST(DivisibilityExponent, Examples) {
  EXPECT_EQ(divisibility_exponent(integer(7)), 6);
  EXPECT_EQ(divisibility_exponent(integer(12)), 2);
  EXPECT_EQ(divisibility_exponent(integer(1)), 1);
  EXPECT_EQ(divisibility_exponent(integer(-3)), 1);
  EXPECT_THROW(divisibility_exponent(integer(0)), ZeroInput);
}

TEST(DivisibilityExponent, MatchesBruteForce) {
  for (long r = 1; r <= 400; ++r) {
    long a = 1;
    for (;; ++a) {
      oracle::Z t = oracle::pow10(static_cast<unsigned>(a));
      if ((t * (t - 1)) % r == 0) break;
    }
    EXPECT_EQ(divisibility_exponent(integer(r)), a) << r;
  }
}

TEST(ScaleToInteger, Examples) {
  auto s = scale_to_integer(P("0.(3)"));
  EXPECT_EQ(s.a, 1);
  EXPECT_EQ(s.v.value, 30);
  EXPECT_EQ(s.v.scale, 0);

  auto t = scale_to_integer(P("1.2(34)"));
  oracle::Z ten = oracle::pow10(static_cast<unsigned>(t.a));
  oracle::Q want = oracle::Q(ten * (ten - 1)) * oracle::literal_value("1.2(34)");
  EXPECT_EQ(boost::multiprecision::denominator(want), 1);
  EXPECT_EQ(oracle::Q(oracle::Z(t.v.value.get_str())), want);
  EXPECT_GT(t.a, 1);
  EXPECT_EQ(t.a % 2, 0);
}

TEST(FieldOps, Examples) {
  EXPECT_EQ(add_p(P("0.(3)"), P("0.(6)")).to_string(), "1");
  EXPECT_EQ(add_p(P("0.(9)"), P("0")).to_string(), "1");
  EXPECT_EQ(sub_p(P("1"), P("0.(3)")).to_string(), "0.(6)");
  EXPECT_EQ(mul_p(P("1.(2)"), P("0.(81)")).to_string(), "1");
  EXPECT_EQ(inv_p(P("7")).to_string(), "0.(142857)");
  EXPECT_EQ(inv_p(P("0.(3)")).to_string(), "3");
  EXPECT_EQ(inv_p(P("-0.125")).to_string(), "-8");
  EXPECT_THROW(inv_p(P("0")), DivisionByZero);
  EXPECT_THROW(inv_p(P("-0.(0)")), DivisionByZero);
}

TEST(FieldOps, AgreeWithRationalOracle) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 1000; ++i) {
    auto ta = oracle::random_literal(rng, 2, 3, 4);
    auto tb = oracle::random_literal(rng, 2, 3, 4);
    auto a = P(ta), b = P(tb);
    auto qa = oracle::literal_value(ta), qb = oracle::literal_value(tb);
    EXPECT_EQ(oracle::expansion_of(add_p(a, b)), oracle::expand(qa + qb)) << ta << " + " << tb;
    EXPECT_EQ(oracle::expansion_of(sub_p(a, b)), oracle::expand(qa - qb)) << ta << " - " << tb;
    EXPECT_EQ(oracle::expansion_of(mul_p(a, b)), oracle::expand(qa * qb)) << ta << " * " << tb;
    if (qb != 0) EXPECT_EQ(oracle::expansion_of(inv_p(b)), oracle::expand(1 / qb)) << "1/" << tb;
  }
}

TEST(PeriodicIsRational, ScalingGivesAnInteger) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 500; ++i) {
    auto t = oracle::random_literal(rng, 3, 4, 5);
    auto s = scale_to_integer(P(t));
    oracle::Z ten = oracle::pow10(static_cast<unsigned>(s.a));
    oracle::Q scaled = oracle::Q(ten * (ten - 1)) * oracle::literal_value(t);
    ASSERT_EQ(boost::multiprecision::denominator(scaled), 1) << t;
    EXPECT_EQ(oracle::Q(oracle::Z(s.v.value.get_str())) * oracle::Q(1, oracle::pow10(static_cast<unsigned>(std::max<std::int64_t>(s.v.scale, 0)))),
              scaled)
        << t;
    auto p = P(t);
    EXPECT_GT(s.a, p.preperiod_length());
    EXPECT_EQ(s.a % p.period_length().get_si(), 0);
  }
}

TEST(PeriodicIsRational, QuotientsArePeriodic) {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
  for (int i = 0; i < 500; ++i) {
    long p = num(rng), q = den(rng);
    PeriodicDecimal x = mul_p(P(std::to_string(std::labs(p))), inv_p(P(std::to_string(q))));
    if (p < 0) x = x.negated();
    EXPECT_EQ(value_of(x), oracle::Q(p, q)) << p << "/" << q;
    EXPECT_EQ(oracle::expansion_of(x), oracle::expand(oracle::Q(p, q))) << p << "/" << q;
  }
}

TEST(PeriodicIsRational, ReciprocalsOfSmallIntegers) {
  for (long n = 1; n <= 5000; ++n) {
    PeriodicDecimal r = inv_p(P(std::to_string(n)));
    long t = n, v2 = 0, v5 = 0;
    while (t % 2 == 0) t /= 2, ++v2;
    while (t % 5 == 0) t /= 5, ++v5;
    ASSERT_EQ(r.preperiod_length(), std::max(v2, v5)) << n;
    ASSERT_EQ(r.period_length().get_ui(), t == 1 ? 1u : oracle::order_of_ten(static_cast<std::uint64_t>(t)))
        << n;
    ASSERT_EQ(oracle::expansion_of(r, 200), oracle::expand(oracle::Q(1, n), 200)) << n;
  }
}

TEST(DetectPeriod, Examples) {
  auto seventh = detect_period(Decimal(inv_p(P("7"))), 200, 20);
  ASSERT_TRUE(seventh.has_value());
  EXPECT_EQ(seventh->to_string(), "0.(142857)");

  auto mixed = detect_period(Decimal(P("12.34(567)")), 300, 20);
  ASSERT_TRUE(mixed.has_value());
  EXPECT_EQ(mixed->to_string(), "12.34(567)");

  auto ends = detect_period(Decimal(P("2.5")), 100, 5);
  ASSERT_TRUE(ends.has_value());
  EXPECT_EQ(ends->to_string(), "2.5");

  Decimal r2 = sqrt_stream(P("2")).digits;
  EXPECT_FALSE(detect_period(r2, 2000, 50).has_value());
}

TEST(DetectPeriod, FindsPeriodOfLazyRationals) {
  std::mt19937_64 rng(54);
  for (int i = 0; i < 100; ++i) {
    auto t = oracle::random_literal(rng, 2, 3, 6);
    PeriodicDecimal p = P(t);
    Decimal lazy = Decimal::lazy([p](std::int64_t n) { return p.truncate(n); });
    auto found = detect_period(lazy, 400, 10);
    ASSERT_TRUE(found.has_value()) << t;
    EXPECT_EQ(*found, p) << t;
  }
}
