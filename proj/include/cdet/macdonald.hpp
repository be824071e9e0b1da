#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cdet/combinatorics.hpp"
#include "cdet/rational.hpp"
#include "cdet/report.hpp"

namespace cdet {

struct QTParams {
  Rational q;
  Rational t;
};

class RationalSampler;

/// True when 1 - t^r != 0 for r <= degree_bound and every arm/leg factor
/// 1 - q^{a+1} t^l, 1 - q^a t^{l+1} with a + l < degree_bound is nonzero.
bool qt_admissible(const QTParams& p, int degree_bound);
/// Draws (q, t) in (0,1) with 16-bit numerators and denominators until admissible.
QTParams sample_qt(RationalSampler& rng, int degree_bound);

/// Homogeneous symmetric function of a fixed degree in the power-sum or
/// monomial basis.
struct SymFuncExpansion {
  enum class Basis { power_sum, monomial };
  Basis basis = Basis::monomial;
  int degree = 0;
  std::map<Partition, Rational> coeffs;
};

/// z_lambda = prod_i i^{m_i} m_i!.
Rational z_lambda(const Partition& lambda);

/// <p_lambda, p_mu>_{q,t}. Throws ParameterError when some 1 - t^{lambda_i} = 0.
Rational inner_product_p(const Partition& lambda, const Partition& mu, const QTParams& p);

/// p_lambda in the monomial basis (integer coefficients). Transition tables
/// are built once per degree by multiplying power sums in |lambda| variables
/// and cached for the life of the process.
SymFuncExpansion expand_p_in_m(const Partition& lambda);

/// <f, g>_{q,t} for monomial- or power-sum-basis expansions of equal degree.
Rational inner_product(const SymFuncExpansion& f, const SymFuncExpansion& g, const QTParams& p);

/// Largest degree accepted by macdonald_P.
constexpr int kMacdonaldDegreeBound = 8;

/// P_lambda = m_lambda + sum_{mu < lambda} c m_mu, orthogonal to every m_mu with
/// mu strictly below lambda in dominance. Throws ParameterError on a singular
/// system.
SymFuncExpansion macdonald_P(const Partition& lambda, const QTParams& p);
/// Q_lambda = b_lambda P_lambda.
SymFuncExpansion macdonald_Q(const Partition& lambda, const QTParams& p);

/// prod over cells of (1 - q^a t^{l+1}) / (1 - q^{a+1} t^l).
Rational b_lambda(const Partition& lambda, const QTParams& p);

/// (a; q)_k = prod_{i<k} (1 - a q^i).
Rational q_pochhammer(const Rational& a, const Rational& q, int k);

/// (t^n;q)_{s-1} (t;t)_{n-1} / ((q;q)_{s-1} (t q^{s-1};t)_{n-1}).
Rational macdonald_prefactor(int s, int n, const QTParams& p);
/// prod of b_lambda over lambda in ((s-1)^n).
Rational box_b_product(int s, int n, const QTParams& p);

/// Value at finitely many variables. m_mu vanishes when mu has more parts
/// than there are variables.
Rational evaluate_symfunc(const SymFuncExpansion& f, std::span<const Rational> point);

struct MacdonaldResult {
  bool p_identity = false;
  /// det Q against the displayed prefactor times the product.
  bool q_identity_displayed = false;
  /// det Q against prod b_lambda times the product.
  bool q_identity_box_product = false;
  /// prod b_lambda equals the displayed prefactor.
  bool prefactor_identity = false;
  VerifyReport report;
};

/// P and Q determinant identities over lambda in ((s-1)^n), mu in Z_{s,n}
/// at a seeded admissible grid point. report.equal requires the P identity,
/// the displayed Q identity and the prefactor identity.
MacdonaldResult verify_corollary_macdonald(int s, int n, const QTParams& p, std::uint64_t seed);

}  // namespace cdet
