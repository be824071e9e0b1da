#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cdet/combinatorics.hpp"
#include "cdet/matrix.hpp"
#include "cdet/report.hpp"

namespace cdet {

/// An (s+n-1) x sn matrix A together with (s, n).
template <class T>
struct CompoundSpec {
  CompoundSpec(int s_, int n_, Matrix<T> a);
  int s;
  int n;
  Matrix<T> A;
  int rows() const { return s + n - 1; }
  int cols() const { return s * n; }
};

using PolySpec = CompoundSpec<LaurentPoly>;
using NumericSpec = CompoundSpec<Rational>;

/// Independent indeterminates: a_{ij} is variable (i-1)*sn + (j-1).
PolySpec symbolic_spec(int s, int n);
/// Entries drawn row by row from RationalSampler(seed).next_square().
NumericSpec random_spec(int s, int n, std::uint64_t seed);
/// a_{ij} = x_j^{s+n-i} in sn variables.
PolySpec specialized_spec(int s, int n);

/// det A^{rows}_{cols}; 1 for empty index sets.
template <class T>
T minor_det(const Matrix<T>& a, const SubsetIdx& rows, const SubsetIdx& cols);

/// (det A^I_J) for I in binom([s+n-1], n), lex order. |J| = n.
template <class T>
std::vector<T> vec_V(const CompoundSpec<T>& spec, const SubsetIdx& J);

/// ((-1)^{|I| - n(n+1)/2} det A^{complement of I}_K) for I in binom([s+n-1], n). |K| = s-1.
template <class T>
std::vector<T> vec_Vbar(const CompoundSpec<T>& spec, const SubsetIdx& K);

/// <V_J, Vbar_K>.
template <class T>
T laplace_pair(const CompoundSpec<T>& spec, const SubsetIdx& J, const SubsetIdx& K);

/// eps(J, K) * det A_{J u K}; zero when J and K meet.
template <class T>
T laplace_value(const CompoundSpec<T>& spec, const SubsetIdx& J, const SubsetIdx& K);

/// M(A): rows I in lex order, columns iota(mu) in composition order.
template <class T>
Matrix<T> build_M(const CompoundSpec<T>& spec);

using PhiMap = std::function<SubsetIdx(const Composition&)>;

/// Mhat(Phi, A): columns Vbar_{Phi(mu)} in composition order.
template <class T>
Matrix<T> build_Mhat(const CompoundSpec<T>& spec, const PhiMap& phi_map);

PhiMap lemma1_phi(int s, int n);
PhiMap lemma2_phi(int s, int n, int k0);

/// iota(nu) for nu in Z^0_{s, s+n-1}, in composition order: the column sets
/// of the right-hand side of the main theorem.
std::vector<SubsetIdx> main_rhs_columns(int s, int n);

/// Symbolic runs are offered for s + n <= 5.
bool main_symbolic_supported(int s, int n);

/// det M(A) = prod over nu in Z^0_{s,s+n-1} of det A_{iota(nu)}.
/// mode is "symbolic" or "numeric"; seed is used in numeric mode.
VerifyReport verify_main(int s, int n, const std::string& mode, std::uint64_t seed);

/// det (det A^I_J)_{I,J in binom([s],n)} = (det A)^{C(s-1,n-1)} for square A.
/// Symbolic for s <= 4.
VerifyReport verify_sylvester(int s, int n, const std::string& mode, std::uint64_t seed);

/// n * C(s+n-1, n) == (s+n-1) * C(s+n-2, n-1).
bool check_degree_balance(int s, int n);

/// prod_{k,j} x_{(k-1)n+j}^{(s+1-k) C(s+n-j, s)} as a whole-unit exponent vector.
Monomial expected_leading_monomial(int s, int n);

/// Leading term of det M(A) under a_{ij} = x_j^{s+n-i} is expected_leading_monomial
/// with coefficient 1.
VerifyReport verify_leading_term(int s, int n);

enum class GramVariant { lemma1, lemma2 };

/// One cell of tM * Mhat: eps * det A_{cols}, or zero when eps == 0.
struct GramCell {
  int eps = 0;
  SubsetIdx cols;
};

struct GramResult {
  std::vector<Composition> order;
  std::vector<std::vector<GramCell>> cells;  // [lambda][mu]
  /// Every cell equals its Laplace value exactly (checked against the
  /// actual product tM * Mhat).
  bool entries_match = false;
  /// Vanishing pattern required by the order condition holds.
  bool pattern_ok = false;
  /// det = sign * prod_mu det A_{iota(mu) u Phi(mu)}.
  bool product_ok = false;
  int sign = 0;
  /// Multiplicity of each det A_J in the product.
  std::map<SubsetIdx, int> factor_exponents;
  std::string detail;
  VerifyReport report;
};

/// Builds tM(A) * Mhat(Phi, A) for the lemma's Phi, checks each entry, the
/// zero pattern (lambda <=_{pi(mu)} mu for lemma1, lambda <=_{k0} mu for
/// lemma2) and the determinant. Symbolic mode checks entries as polynomials
/// and takes the determinant over formal symbols for the minors det A_J;
/// numeric mode works at a seeded rational A.
GramResult verify_gram_structure(int s, int n, GramVariant variant, int k0, const std::string& mode,
                                 std::uint64_t seed);

}  // namespace cdet
