#include "cdet/macdonald.hpp"

#include <algorithm>
#include <mutex>

#include "cdet/characters.hpp"
#include "cdet/determinant.hpp"
#include "cdet/errors.hpp"
#include "cdet/laurent_poly.hpp"
#include "cdet/matrix.hpp"
#include "cdet/sampler.hpp"

namespace cdet {

bool qt_admissible(const QTParams& p, int degree_bound) {
  const Rational one(1);
  if (p.q.is_zero() || p.t.is_zero()) return false;
  for (int r = 1; r <= degree_bound; ++r) {
    if (p.t.pow(r) == one || p.q.pow(r) == one) return false;
  }
  for (int a = 0; a < degree_bound; ++a)
    for (int l = 0; a + l < degree_bound; ++l) {
      if (p.q.pow(a + 1) * p.t.pow(l) == one) return false;
      if (p.q.pow(a) * p.t.pow(l + 1) == one) return false;
    }
  return true;
}

QTParams sample_qt(RationalSampler& rng, int degree_bound) {
  for (int attempt = 0; attempt <= 32; ++attempt) {
    QTParams p{rng.next_unit_interval(), rng.next_unit_interval()};
    if (qt_admissible(p, degree_bound)) return p;
  }
  throw ParameterError("no admissible (q, t) after 32 draws");
}

Rational z_lambda(const Partition& lambda) {
  std::map<int, long> mult;
  for (int part : lambda.trimmed()) ++mult[part];
  Rational z(1);
  for (const auto& [i, m] : mult) {
    z *= Rational(i).pow(m);
    for (long k = 2; k <= m; ++k) z *= Rational(k);
  }
  return z;
}

Rational inner_product_p(const Partition& lambda, const Partition& mu, const QTParams& p) {
  if (!(lambda == mu)) return Rational(0);
  Rational v = z_lambda(lambda);
  for (int part : lambda.trimmed()) {
    const Rational den = Rational(1) - p.t.pow(part);
    if (den.is_zero()) throw ParameterError("1 - t^" + std::to_string(part) + " vanishes");
    v *= (Rational(1) - p.q.pow(part)) / den;
  }
  return v;
}

namespace {

// Row-reduces [a | b] and returns x with a x = b. Throws ParameterError when singular.
std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k).is_zero()) ++piv;
    if (piv == n) throw ParameterError("singular Gram system at these (q, t)");
    a.swap_rows(piv, k);
    std::swap(b[piv], b[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      b[i] -= f * b[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a(i, i);
  return b;
}

struct WeightTables {
  std::vector<Partition> parts;
  std::map<Partition, std::size_t> index;
  RationalMatrix p_to_m;  // p_lambda = sum_mu p_to_m(lambda, mu) m_mu
  RationalMatrix m_to_p;  // m_mu = sum_lambda m_to_p(mu, lambda) p_lambda
};

WeightTables build_tables(int d) {
  WeightTables w;
  w.parts = partitions_of(d);
  const std::size_t size = w.parts.size();
  for (std::size_t i = 0; i < size; ++i) w.index.emplace(w.parts[i], i);
  const auto nv = static_cast<std::size_t>(std::max(d, 1));
  w.p_to_m = RationalMatrix(size, size, Rational(0));
  for (std::size_t r = 0; r < size; ++r) {
    LaurentPoly prod = LaurentPoly::constant(nv, Rational(1));
    for (int part : w.parts[r].trimmed()) {
      LaurentPoly pr(nv);
      for (std::size_t v = 0; v < nv; ++v) pr += LaurentPoly::variable(nv, v, 2 * part);
      prod = prod * pr;
    }
    for (std::size_t c = 0; c < size; ++c) {
      std::vector<int> e = w.parts[c].trimmed();
      e.resize(nv, 0);
      w.p_to_m(r, c) = prod.coefficient(Monomial::from_exponents(e));
    }
  }
  // Invert column by column.
  w.m_to_p = RationalMatrix(size, size, Rational(0));
  for (std::size_t c = 0; c < size; ++c) {
    std::vector<Rational> unit(size, Rational(0));
    unit[c] = Rational(1);
    // m_to_p * p_to_m = I, so column c of m_to_p^T solves p_to_m^T y = e_c.
    const auto col = solve(w.p_to_m.transpose(), unit);
    for (std::size_t r = 0; r < size; ++r) w.m_to_p(c, r) = col[r];
  }
  return w;
}

const WeightTables& tables(int d) {
  static std::mutex mu;
  static std::map<int, WeightTables> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, build_tables(d)).first;
  return it->second;
}

std::vector<Rational> to_power_sums(const SymFuncExpansion& f, const WeightTables& w) {
  std::vector<Rational> out(w.parts.size(), Rational(0));
  for (const auto& [lam, c] : f.coeffs) {
    const std::size_t i = w.index.at(lam);
    if (f.basis == SymFuncExpansion::Basis::power_sum) {
      out[i] += c;
    } else {
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += c * w.m_to_p(i, j);
    }
  }
  return out;
}

void check_degree(int d) {
  if (d < 0) throw UsageError("negative degree");
  if (d > kMacdonaldDegreeBound) {
    throw CapabilityError("degree " + std::to_string(d) + " exceeds bound " + std::to_string(kMacdonaldDegreeBound));
  }
}

}  // namespace

SymFuncExpansion expand_p_in_m(const Partition& lambda) {
  check_degree(lambda.weight());
  const auto& w = tables(lambda.weight());
  SymFuncExpansion f;
  f.degree = lambda.weight();
  const std::size_t r = w.index.at(lambda);
  for (std::size_t c = 0; c < w.parts.size(); ++c)
    if (!w.p_to_m(r, c).is_zero()) f.coeffs.emplace(w.parts[c], w.p_to_m(r, c));
  return f;
}

Rational inner_product(const SymFuncExpansion& f, const SymFuncExpansion& g, const QTParams& p) {
  if (f.degree != g.degree) return Rational(0);
  check_degree(f.degree);
  const auto& w = tables(f.degree);
  const auto a = to_power_sums(f, w);
  const auto b = to_power_sums(g, w);
  Rational sum(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    sum += a[i] * b[i] * inner_product_p(w.parts[i], w.parts[i], p);
  }
  return sum;
}

SymFuncExpansion macdonald_P(const Partition& lambda, const QTParams& p) {
  const int d = lambda.weight();
  check_degree(d);
  const auto& w = tables(d);
  std::vector<Partition> lower;
  for (const auto& mu : w.parts)
    if (!(mu == lambda) && dominance_leq(mu, lambda)) lower.push_back(mu);

  auto mono = [d](const Partition& mu) {
    SymFuncExpansion m;
    m.degree = d;
    m.coeffs.emplace(mu, Rational(1));
    return m;
  };
  SymFuncExpansion out = mono(lambda);
  if (lower.empty()) return out;

  const std::size_t k = lower.size();
  RationalMatrix gram(k, k, Rational(0));
  std::vector<Rational> rhs(k, Rational(0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = inner_product(mono(lower[j]), mono(lower[i]), p);
    rhs[i] = -inner_product(mono(lambda), mono(lower[i]), p);
  }
  const auto c = solve(gram, rhs);
  for (std::size_t j = 0; j < k; ++j)
    if (!c[j].is_zero()) out.coeffs.emplace(lower[j], c[j]);
  return out;
}

Rational b_lambda(const Partition& lambda, const QTParams& p) {
  const auto rows = lambda.trimmed();
  const Partition conj = lambda.conjugate();
  Rational b(1);
  for (std::size_t i = 1; i <= rows.size(); ++i)
    for (int j = 1; j <= rows[i - 1]; ++j) {
      const int arm = rows[i - 1] - j;
      const int leg = conj.part(j) - static_cast<int>(i);
      const Rational den = Rational(1) - p.q.pow(arm + 1) * p.t.pow(leg);
      if (den.is_zero()) throw ParameterError("b_lambda has a pole at these (q, t)");
      b *= (Rational(1) - p.q.pow(arm) * p.t.pow(leg + 1)) / den;
    }
  return b;
}

SymFuncExpansion macdonald_Q(const Partition& lambda, const QTParams& p) {
  SymFuncExpansion f = macdonald_P(lambda, p);
  const Rational b = b_lambda(lambda, p);
  for (auto& [mu, c] : f.coeffs) c *= b;
  return f;
}

Rational q_pochhammer(const Rational& a, const Rational& q, int k) {
  Rational v(1);
  for (int i = 0; i < k; ++i) v *= Rational(1) - a * q.pow(i);
  return v;
}

Rational macdonald_prefactor(int s, int n, const QTParams& p) {
  const Rational num = q_pochhammer(p.t.pow(n), p.q, s - 1) * q_pochhammer(p.t, p.t, n - 1);
  const Rational den = q_pochhammer(p.q, p.q, s - 1) * q_pochhammer(p.t * p.q.pow(s - 1), p.t, n - 1);
  if (den.is_zero()) throw ParameterError("prefactor denominator vanishes");
  return num / den;
}

Rational box_b_product(int s, int n, const QTParams& p) {
  Rational v(1);
  for (const auto& lam : enumerate_partitions_in_box(s - 1, n)) v *= b_lambda(lam, p);
  return v;
}

Rational evaluate_symfunc(const SymFuncExpansion& f, std::span<const Rational> point) {
  Rational total(0);
  for (const auto& [lam, c] : f.coeffs) {
    const auto parts = lam.trimmed();
    Rational v(0);
    if (f.basis == SymFuncExpansion::Basis::power_sum) {
      v = Rational(1);
      for (int part : parts) {
        Rational ps(0);
        for (const auto& x : point) ps += x.pow(part);
        v *= ps;
      }
    } else if (parts.size() <= point.size()) {
      std::vector<int> alpha = parts;
      alpha.resize(point.size(), 0);
      std::sort(alpha.begin(), alpha.end());
      do {
        Rational term(1);
        for (std::size_t i = 0; i < alpha.size(); ++i)
          if (alpha[i] != 0) term *= point[i].pow(alpha[i]);
        v += term;
      } while (std::next_permutation(alpha.begin(), alpha.end()));
    }
    total += c * v;
  }
  return total;
}

MacdonaldResult verify_corollary_macdonald(int s, int n, const QTParams& p, std::uint64_t seed) {
  if (s < 1 || n < 1) throw UsageError("s and n must be positive");
  check_degree((s - 1) * n);
  if (!qt_admissible(p, kMacdonaldDegreeBound)) throw ParameterError("(q, t) is not admissible");
  Stopwatch clock;
  MacdonaldResult res;
  VerifyReport& r = res.report;
  r.identity = "macdonald";
  r.s = s;
  r.n = n;
  r.mode = "numeric";
  r.seed = seed;
  r.params["q"] = p.q.str();
  r.params["t"] = p.t.str();

  RationalSampler rng(seed);
  const auto x = sample_admissible_point(rng, static_cast<std::size_t>(s * n));
  const auto box = enumerate_partitions_in_box(s - 1, n);
  const auto Z = enumerate_Z(s, n, false);
  RationalMatrix pm(box.size(), Z.size(), Rational(0));
  RationalMatrix qm(box.size(), Z.size(), Rational(0));
  for (std::size_t row = 0; row < box.size(); ++row) {
    const auto P = macdonald_P(box[row], p);
    const auto Q = macdonald_Q(box[row], p);
    for (std::size_t c = 0; c < Z.size(); ++c) {
      std::vector<Rational> xm;
      for (auto idx : specialize_X(Z[c], s, n)) xm.push_back(x[idx]);
      pm(row, c) = evaluate_symfunc(P, xm);
      qm(row, c) = evaluate_symfunc(Q, xm);
    }
  }
  const Rational det_p = det_fraction_free(pm);
  const Rational det_q = det_fraction_free(qm);
  const Rational rhs = theorem_schur_rhs(CharFamily::gl, s, n, x);
  const Rational pre = macdonald_prefactor(s, n, p);
  const Rational bprod = box_b_product(s, n, p);

  res.p_identity = det_p == rhs;
  res.q_identity_displayed = det_q == pre * rhs;
  res.q_identity_box_product = det_q == bprod * rhs;
  res.prefactor_identity = bprod == pre;
  auto flag = [](bool ok) { return std::string(ok ? "ok" : "fails"); };
  r.params["p_identity"] = flag(res.p_identity);
  r.params["q_identity"] = flag(res.q_identity_displayed);
  r.params["q_identity_box_product"] = flag(res.q_identity_box_product);
  r.params["prefactor_identity"] = flag(res.prefactor_identity);
  r.equal = res.p_identity && res.q_identity_displayed && res.prefactor_identity;
  if (!res.prefactor_identity) {
    r.detail = "prod b_lambda / displayed prefactor = " + (bprod / pre).str();
  }
  r.lhs_hash = sha256_hex(det_p.canonical() + "\n" + det_q.canonical());
  r.rhs_hash = sha256_hex(rhs.canonical() + "\n" + (pre * rhs).canonical());
  r.elapsed_ms = clock.elapsed_ms();
  return res;
}

}  // namespace cdet
