#include <gtest/gtest.h>

#include "cdet/errors.hpp"
#include "cdet/rational.hpp"
#include "cdet/sampler.hpp"

using cdet::Rational;

TEST(Rational, LowestTerms) {
  Rational r(6, -4);
  EXPECT_EQ(r.canonical(), "-3/2");
  EXPECT_EQ(Rational(0, 5).canonical(), "0/1");
  EXPECT_EQ(Rational(4, 2).str(), "2");
}

TEST(Rational, ParseRoundTrip) {
  EXPECT_EQ(Rational::parse("2/3"), Rational(2, 3));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_THROW(Rational::parse("1/0"), cdet::UsageError);
  EXPECT_THROW(Rational::parse("abc"), cdet::UsageError);
}

TEST(Rational, DivisionByZeroIsDomainError) {
  EXPECT_THROW(Rational(1) / Rational(0), cdet::DomainError);
  EXPECT_THROW(Rational(0).pow(-1), cdet::DomainError);
}

TEST(Rational, PowersAndRoots) {
  EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
  EXPECT_EQ(Rational(4, 9).sqrt(), Rational(2, 3));
  EXPECT_THROW(Rational(2).sqrt(), cdet::DomainError);
  EXPECT_EQ(Rational(4, 9).half_pow(3), Rational(8, 27));
  EXPECT_EQ(Rational(4, 9).half_pow(-1), Rational(3, 2));
}

TEST(Rational, BinomialConventions) {
  EXPECT_EQ(cdet::binomial(5, 2), 10);
  EXPECT_EQ(cdet::binomial(0, 0), 1);
  EXPECT_EQ(cdet::binomial(-1, 0), 0);
  EXPECT_EQ(cdet::binomial(3, 4), 0);
}

TEST(Sampler, SquaresAreReproducible) {
  cdet::RationalSampler a(7), b(7);
  for (int i = 0; i < 20; ++i) {
    Rational x = a.next_square();
    EXPECT_EQ(x, b.next_square());
    EXPECT_TRUE(x.is_perfect_square());
    EXPECT_GT(x, Rational(0));
  }
}

TEST(Sampler, UnitIntervalStaysInside) {
  cdet::RationalSampler rng(3);
  for (int i = 0; i < 200; ++i) {
    Rational q = rng.next_unit_interval();
    EXPECT_GT(q, Rational(0));
    EXPECT_LT(q, Rational(1));
  }
}

TEST(Sampler, AdmissiblePoint) {
  cdet::RationalSampler rng(11);
  auto x = cdet::sample_admissible_point(rng, 6);
  EXPECT_EQ(x.size(), 6u);
  EXPECT_TRUE(cdet::is_admissible_point(x));
  EXPECT_FALSE(cdet::is_admissible_point({Rational(2), Rational(1, 2)}));
  EXPECT_FALSE(cdet::is_admissible_point({Rational(1)}));
}
