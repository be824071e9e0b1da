#include <gtest/gtest.h>

#include <functional>
#include <vector>

#include "cdet/characters.hpp"
#include "cdet/determinant.hpp"
#include "cdet/errors.hpp"
#include "cdet/sampler.hpp"
#include "tableaux.hpp"

using namespace cdet;

namespace {

const std::vector<CharFamily> kFamilies{CharFamily::gl, CharFamily::sp, CharFamily::odd_orth, CharFamily::even_orth};

}  // namespace

TEST(Characters, StaircaseAndShifts) {
  EXPECT_EQ(staircase_delta(4), (std::vector<std::int32_t>{4, 2, 0}));
  EXPECT_EQ(staircase_delta(3), (std::vector<std::int32_t>{3, 1}));
  EXPECT_EQ(staircase_delta(0), (std::vector<std::int32_t>{0}));
  EXPECT_THROW(staircase_delta(-1), UsageError);
  EXPECT_EQ(family_shift(CharFamily::sp, 2), (std::vector<std::int32_t>{4, 2}));
  EXPECT_EQ(family_shift(CharFamily::odd_orth, 2), (std::vector<std::int32_t>{3, 1}));
  EXPECT_EQ(family_shift(CharFamily::gl, 3), (std::vector<std::int32_t>{4, 2, 0}));
  EXPECT_EQ(parse_family("odd-orth"), CharFamily::odd_orth);
  EXPECT_THROW(parse_family("so"), UsageError);
}

TEST(Characters, AlternantMatrices) {
  auto v = char_matrix(AlternantKind::V, {2, 0}, {0, 1}, 2);
  EXPECT_EQ(v(0, 0), LaurentPoly::variable(2, 0));
  EXPECT_EQ(v(1, 1), LaurentPoly::constant(2, Rational(1)));
  auto w = char_matrix(AlternantKind::Wminus, {2}, {0}, 1);
  EXPECT_EQ(w(0, 0), LaurentPoly::variable(1, 0) - LaurentPoly::variable(1, 0, -2));
  auto p = char_matrix(AlternantKind::Wplus, {0}, {0}, 1);
  EXPECT_EQ(p(0, 0), LaurentPoly::constant(1, Rational(2)));
}

TEST(Characters, SmallCharacters) {
  for (auto f : kFamilies) EXPECT_EQ(character(f, Partition{}, 2), LaurentPoly::constant(2, Rational(1))) << family_name(f);
  EXPECT_EQ(character(CharFamily::gl, Partition{1}, 2), LaurentPoly::variable(2, 0) + LaurentPoly::variable(2, 1));
  // O(2n) with lambda_n != 0 uses half the denominator: O_2((1); x) = x + 1/x.
  EXPECT_EQ(character(CharFamily::even_orth, Partition{1}, 1), LaurentPoly::variable(1, 0) + LaurentPoly::variable(1, 0, -2));
  EXPECT_THROW(character(CharFamily::gl, Partition{1, 1, 1}, 2), UsageError);
}

TEST(Characters, SchurAgreesWithTableaux) {
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 4; ++d)
      for (const auto& lam : partitions_of(d)) {
        if (lam.length() > n) continue;
        EXPECT_EQ(character(CharFamily::gl, lam, n), cdet::testing::schur_by_tableaux(lam, n)) << lam.str() << " n=" << n;
      }
}

TEST(CharactersProperty, QuotientsAreExact) {
  for (auto f : kFamilies)
    for (int n = 1; n <= 3; ++n)
      for (int s = 1; s <= 3; ++s)
        for (const auto& lam : enumerate_partitions_in_box(s - 1, n)) EXPECT_NO_THROW(character(f, lam, n));
}

TEST(CharactersProperty, ReciprocalInvariance) {
  RationalSampler rng(12);
  for (auto f : {CharFamily::sp, CharFamily::odd_orth, CharFamily::even_orth})
    for (int n = 1; n <= 3; ++n)
      for (const auto& lam : enumerate_partitions_in_box(2, n)) {
        auto x = sample_admissible_point(rng, static_cast<std::size_t>(n));
        const Rational base = character_at(f, lam, x);
        for (std::size_t i = 0; i < x.size(); ++i) {
          auto y = x;
          y[i] = Rational(1) / y[i];
          EXPECT_EQ(character_at(f, lam, y), base) << family_name(f) << lam.str();
        }
        EXPECT_EQ(character(f, lam, n).eval(x), base);
      }
}

TEST(Characters, Denominators) {
  for (int n = 1; n <= 4; ++n) {
    auto r = verify_denominators(n);
    EXPECT_TRUE(r.equal) << n << " " << r.detail;
  }
  // n = 1: W^-(delta(1)) = x - 1/x = -(1 - x^2)/x.
  auto w = det_cofactor(char_matrix(AlternantKind::Wminus, family_shift(CharFamily::sp, 1), {0}, 1));
  EXPECT_EQ(w, LaurentPoly::variable(1, 0) - LaurentPoly::variable(1, 0, -2));
}

TEST(Characters, SpecializeAndDelta) {
  EXPECT_EQ(specialize_X(Composition{2, 0, 0}, 3, 2), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(specialize_X(Composition{1, 0, 1}, 3, 2), (std::vector<std::size_t>{0, 4}));
  // gl: Delta_mu is the Vandermonde of X_mu.
  for (const auto& mu : enumerate_Z(3, 2, false)) {
    auto X = specialize_X(mu, 3, 2);
    auto v = det_cofactor(char_matrix(AlternantKind::V, family_shift(CharFamily::gl, 2), X, 6));
    EXPECT_EQ(delta_prefactor(CharFamily::gl, mu, 3, 2), v) << mu.str();
    auto w = det_cofactor(char_matrix(AlternantKind::Wminus, family_shift(CharFamily::sp, 2), X, 6));
    EXPECT_EQ(delta_prefactor(CharFamily::sp, mu, 3, 2), w) << mu.str();
  }
  // s = 1, mu = (2): C(x1) C(x2) D(x1, x2).
  EXPECT_EQ(delta_factors(CharFamily::sp, Composition{2}, 1, 2).size(), 3u);
  EXPECT_EQ(delta_factors(CharFamily::even_orth, Composition{1, 1}, 2, 1).size(), 1u);
}

TEST(Characters, TheoremSchurAllFamilies) {
  for (auto f : kFamilies)
    for (auto [s, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 2}, {3, 2}, {2, 3}}) {
      auto r = verify_theorem_schur(f, s, n, 17);
      EXPECT_TRUE(r.equal) << family_name(f) << " " << s << n << " " << r.detail;
    }
  EXPECT_TRUE(verify_theorem_schur(CharFamily::gl, 2, 2, 5, true).equal);
}

TEST(Characters, PropDetS) {
  for (auto f : {CharFamily::gl, CharFamily::sp})
    for (auto [s, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 2}, {4, 3}}) {
      auto r = verify_prop_detS(f, s, n, 23);
      EXPECT_TRUE(r.equal) << family_name(f) << s << n;
      EXPECT_EQ(r.sign.value_or(0), 1);
    }
  EXPECT_THROW(verify_prop_detS(CharFamily::odd_orth, 3, 2, 1), UsageError);
  EXPECT_THROW(verify_prop_detS(CharFamily::gl, 2, 3, 1), UsageError);
}

TEST(Characters, BinomialCollapse) { EXPECT_TRUE(check_binomial_collapse(8)); }
