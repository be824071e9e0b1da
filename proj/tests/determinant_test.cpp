#include <gtest/gtest.h>

#include <cstdlib>

#include "cdet/determinant.hpp"
#include "cdet/sampler.hpp"

using cdet::LaurentPoly;
using cdet::PolyMatrix;
using cdet::Rational;
using cdet::RationalMatrix;

namespace {

RationalMatrix random_matrix(cdet::RationalSampler& rng, std::size_t n) {
  RationalMatrix m(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = Rational(static_cast<long>(rng.next_u32_plus_one() % 21) - 10,
                         static_cast<long>(rng.next_u32_plus_one() % 5) + 1);
  return m;
}

PolyMatrix monomial_matrix(int s, int n, const std::vector<int>& cols) {
  const std::size_t size = cols.size();
  const std::size_t nv = static_cast<std::size_t>(s * n);
  PolyMatrix m(size, size, LaurentPoly(nv));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      m(i, j) = LaurentPoly::variable(nv, static_cast<std::size_t>(cols[j] - 1), 2 * (s + n - 1 - static_cast<int>(i)));
  return m;
}

}  // namespace

TEST(Determinant, SmallCases) {
  RationalMatrix one(1, 1, Rational(7));
  EXPECT_EQ(cdet::det_cofactor(one), Rational(7));
  RationalMatrix two(2, 2, Rational(0));
  two(0, 0) = 1; two(0, 1) = 2; two(1, 0) = 3; two(1, 1) = 4;
  EXPECT_EQ(cdet::det_cofactor(two), Rational(-2));
  EXPECT_EQ(cdet::det_fraction_free(two), Rational(-2));
  EXPECT_EQ(cdet::det_expansion(two), Rational(-2));
}

TEST(Determinant, VandermondeIsWeylDenominator) {
  PolyMatrix v(3, 3, LaurentPoly(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      v(i, j) = LaurentPoly::variable(3, i, static_cast<std::int32_t>(2 * (2 - j)));
  auto expected = (LaurentPoly::variable(3, 0) - LaurentPoly::variable(3, 1)) *
                  (LaurentPoly::variable(3, 0) - LaurentPoly::variable(3, 2)) *
                  (LaurentPoly::variable(3, 1) - LaurentPoly::variable(3, 2));
  EXPECT_EQ(cdet::det_cofactor(v), expected);
  EXPECT_EQ(cdet::det_fraction_free(v), expected);
  EXPECT_EQ(cdet::det_expansion(v), expected);
}

TEST(Determinant, SingularAndErrors) {
  cdet::RationalSampler rng(1);
  auto m = random_matrix(rng, 4);
  for (std::size_t j = 0; j < 4; ++j) m(2, j) = m(0, j);
  EXPECT_TRUE(cdet::det_fraction_free(m).is_zero());
  RationalMatrix rect(2, 3, Rational(1));
  EXPECT_THROW(cdet::det_cofactor(rect), cdet::UsageError);
  EXPECT_THROW(cdet::det_fraction_free(rect), cdet::UsageError);
  RationalMatrix big(7, 7, Rational(1));
  EXPECT_THROW(cdet::det_cofactor(big), cdet::CapabilityError);
}

TEST(Determinant, OracleBoundFromEnvironment) {
  ::setenv("COMPOUND_DET_ORACLE_BOUND", "3", 1);
  EXPECT_EQ(cdet::oracle_bound(), 3u);
  ::unsetenv("COMPOUND_DET_ORACLE_BOUND");
  EXPECT_EQ(cdet::oracle_bound(), 6u);
}

TEST(Determinant, MonomialMatrixAtThreeTwo) {
  auto m = monomial_matrix(3, 2, {1, 2, 3, 4, 5});
  const auto oracle = cdet::det_cofactor(m);
  EXPECT_EQ(cdet::det_fraction_free(m), oracle);
  EXPECT_EQ(cdet::det_expansion(m), oracle);
}

TEST(DeterminantProperty, OracleEquivalence200) {
  cdet::RationalSampler rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
    auto m = random_matrix(rng, n);
    const Rational oracle = cdet::det_cofactor(m);
    ASSERT_EQ(cdet::det_fraction_free(m), oracle) << "trial " << trial;
    ASSERT_EQ(cdet::det_expansion(m), oracle) << "trial " << trial;
  }
}

TEST(DeterminantProperty, AlternatingUnderRowSwap) {
  cdet::RationalSampler rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
    auto m = random_matrix(rng, n);
    auto swapped = m;
    swapped.swap_rows(0, n - 1);
    EXPECT_EQ(cdet::det_cofactor(swapped), -cdet::det_cofactor(m));
    EXPECT_EQ(cdet::det_fraction_free(swapped), -cdet::det_fraction_free(m));
  }
}

TEST(DeterminantProperty, Multiplicative) {
  cdet::RationalSampler rng(314);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    auto a = random_matrix(rng, n);
    auto b = random_matrix(rng, n);
    EXPECT_EQ(cdet::det_fraction_free(cdet::multiply(a, b)), cdet::det_fraction_free(a) * cdet::det_fraction_free(b));
  }
}

TEST(DeterminantProperty, PolynomialOracleEquivalence) {
  cdet::RationalSampler rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    PolyMatrix m(n, n, LaurentPoly(3));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto v = static_cast<std::size_t>(rng.next_u32_plus_one() % 3);
        const auto e = static_cast<std::int32_t>(rng.next_u32_plus_one() % 5) * 2 - 4;
        m(i, j) = LaurentPoly::variable(3, v, e) + LaurentPoly::constant(3, Rational(static_cast<long>(i + j)));
      }
    const auto oracle = cdet::det_cofactor(m);
    EXPECT_EQ(cdet::det_fraction_free(m), oracle);
    EXPECT_EQ(cdet::det_expansion(m), oracle);
  }
}

TEST(Minor, SelectsRowsAndColumns) {
  RationalMatrix a(3, 4, Rational(0));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) a(i, j) = Rational(static_cast<long>(10 * (i + 1) + j + 1));
  auto m = cdet::minor(a, cdet::SubsetIdx({1, 2}, 3), cdet::SubsetIdx({1, 3}, 4));
  ASSERT_EQ(m.rows(), 2u);
  EXPECT_EQ(m(0, 0), Rational(11));
  EXPECT_EQ(m(0, 1), Rational(13));
  EXPECT_EQ(m(1, 0), Rational(21));
  EXPECT_EQ(m(1, 1), Rational(23));
  EXPECT_EQ(cdet::col_minor(a, cdet::SubsetIdx({2}, 4)).rows(), 3u);
  EXPECT_THROW(cdet::minor(a, cdet::SubsetIdx({5}, 5), cdet::SubsetIdx({1}, 4)), cdet::UsageError);
}
