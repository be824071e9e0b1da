#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdet/combinatorics.hpp"
#include "cdet/matrix.hpp"
#include "cdet/report.hpp"

namespace cdet {

enum class CharFamily { gl, sp, odd_orth, even_orth };

/// Accepts gl, sp, odd-orth, even-orth (underscores also accepted).
CharFamily parse_family(std::string_view tag);
std::string family_name(CharFamily f);

/// V: x^a. Wminus: x^a - x^-a. Wplus: x^a + x^-a.
enum class AlternantKind { V, Wminus, Wplus };
AlternantKind alternant_kind(CharFamily f);

/// delta(k) in half units for k = half_k / 2: (k, k-1, ..., 0) for integer k,
/// (k, k-1, ..., 1/2) for half-odd k.
std::vector<std::int32_t> staircase_delta(int half_k);

/// The length-n shift of a family, in half units: delta(n-1) for gl and
/// even_orth, delta(n) truncated to n entries for sp, delta(n-1/2) for odd_orth.
std::vector<std::int32_t> family_shift(CharFamily f, int n);

/// n x n matrix with (i, j) entry x_i^{alpha_j} (+/- x_i^{-alpha_j}); x_i is
/// variable vars[i] of a num_vars ring. Exponents in half units.
PolyMatrix char_matrix(AlternantKind kind, const std::vector<std::int32_t>& alpha_half,
                       const std::vector<std::size_t>& vars, std::size_t num_vars);
/// Same matrix evaluated at concrete coordinates.
RationalMatrix char_matrix_at(AlternantKind kind, const std::vector<std::int32_t>& alpha_half,
                              std::span<const Rational> x);

/// lambda + shift in half units; lambda padded to n parts. Throws UsageError
/// when lambda has more than n parts.
std::vector<std::int32_t> shifted_exponents(CharFamily f, const Partition& lambda, int n);

/// Weyl character as an exact Laurent quotient in n variables x1..xn.
/// Throws InternalError if the division is not exact.
LaurentPoly character(CharFamily f, const Partition& lambda, int n);
/// Weyl character at a point (n = x.size()), as a quotient of two
/// evaluated alternants. Throws DomainError when the denominator vanishes.
Rational character_at(CharFamily f, const Partition& lambda, std::span<const Rational> x);

/// Checks the four Weyl denominator product formulas in n variables.
VerifyReport verify_denominators(int n);

/// Variable indices (0-based, x^{(k)}_j -> (k-1)n + j - 1) of X_mu.
std::vector<std::size_t> specialize_X(const Composition& mu, int s, int n);

/// Factors of Delta_mu: C(x^{(k)}_i) for sp/odd_orth, then D over pairs inside
/// each group and across groups k < l, in sn variables. For even_orth the
/// factor 2 of rows with lambda_n = 0 is not included (see even_orth_row_factor).
std::vector<LaurentPoly> delta_factors(CharFamily f, const Composition& mu, int s, int n);
LaurentPoly delta_prefactor(CharFamily f, const Composition& mu, int s, int n);
/// 2 when f is even_orth and lambda_n = 0, else 1.
Rational even_orth_row_factor(CharFamily f, const Partition& lambda, int n);

/// The matrix A whose compound rows become characters times Delta_mu.
PolyMatrix family_matrix_A(CharFamily f, int s, int n);

/// The right-hand side factor for grid variables u = x^{(k)}_i, v = x^{(l)}_j:
/// u - v for gl, (v - u)(1 - uv)/(uv) otherwise.
LaurentPoly pair_factor(CharFamily f, std::size_t u, std::size_t v, std::size_t num_vars);

/// prod_{k<l} prod_{i,j} pair_factor^{C(s+n-i-j-1, s-2)} evaluated at x.
Rational theorem_schur_rhs(CharFamily f, int s, int n, std::span<const Rational> x);

/// det(char(lambda; X_mu)) over lambda in ((s-1)^n) (reverse lex) and mu in
/// Z_{s,n} equals theorem_schur_rhs, at a seeded admissible point. Also
/// checks every compound cell equals Delta_mu * char * row factor. With
/// remark_substitution the point is x^{(k)}_j = t^{j-1} a_k.
VerifyReport verify_theorem_schur(CharFamily f, int s, int n, std::uint64_t seed, bool remark_substitution = false);

/// det(char(lambda; X_I)) over lambda in ((s-n)^n) (reverse lex) and I in
/// binom([s], n) (lex) against (prod_{i<j} factor)^{C(s-2, n-1)}, up to a
/// global sign which is reported. gl and sp only.
VerifyReport verify_prop_detS(CharFamily f, int s, int n, std::uint64_t seed);

/// C(s+n-i-j, n-i-j+1) - C(s+n-i-j-1, n-i-j) == C(s+n-i-j-1, s-2) for all
/// 1 <= i, j <= n, 1 <= s, n <= bound.
bool check_binomial_collapse(int bound);

}  // namespace cdet
