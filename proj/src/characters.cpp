#include "cdet/characters.hpp"

#include <sstream>

#include "cdet/compound.hpp"
#include "cdet/determinant.hpp"
#include "cdet/errors.hpp"
#include "cdet/sampler.hpp"

namespace cdet {

CharFamily parse_family(std::string_view tag) {
  if (tag == "gl") return CharFamily::gl;
  if (tag == "sp") return CharFamily::sp;
  if (tag == "odd-orth" || tag == "odd_orth") return CharFamily::odd_orth;
  if (tag == "even-orth" || tag == "even_orth") return CharFamily::even_orth;
  throw UsageError("unknown family '" + std::string(tag) + "' (expected gl, sp, odd-orth, even-orth)");
}

std::string family_name(CharFamily f) {
  switch (f) {
    case CharFamily::gl: return "gl";
    case CharFamily::sp: return "sp";
    case CharFamily::odd_orth: return "odd-orth";
    case CharFamily::even_orth: return "even-orth";
  }
  return "?";
}

AlternantKind alternant_kind(CharFamily f) {
  switch (f) {
    case CharFamily::gl: return AlternantKind::V;
    case CharFamily::sp:
    case CharFamily::odd_orth: return AlternantKind::Wminus;
    case CharFamily::even_orth: return AlternantKind::Wplus;
  }
  return AlternantKind::V;
}

std::vector<std::int32_t> staircase_delta(int half_k) {
  if (half_k < 0) throw UsageError("staircase delta needs k >= 0");
  std::vector<std::int32_t> out;
  for (int h = half_k; h >= 0; h -= 2) out.push_back(h);
  return out;
}

std::vector<std::int32_t> family_shift(CharFamily f, int n) {
  if (n < 1) throw UsageError("family shift needs n >= 1");
  std::vector<std::int32_t> d;
  switch (f) {
    case CharFamily::gl:
    case CharFamily::even_orth: d = staircase_delta(2 * (n - 1)); break;
    case CharFamily::sp: d = staircase_delta(2 * n); break;
    case CharFamily::odd_orth: d = staircase_delta(2 * n - 1); break;
  }
  d.resize(static_cast<std::size_t>(n));
  return d;
}

PolyMatrix char_matrix(AlternantKind kind, const std::vector<std::int32_t>& alpha_half,
                       const std::vector<std::size_t>& vars, std::size_t num_vars) {
  if (alpha_half.size() != vars.size()) throw UsageError("char_matrix: |alpha| must equal |X|");
  const std::size_t n = vars.size();
  PolyMatrix m(n, n, LaurentPoly(num_vars));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly e = LaurentPoly::variable(num_vars, vars[i], alpha_half[j]);
      if (kind == AlternantKind::Wminus) e -= LaurentPoly::variable(num_vars, vars[i], -alpha_half[j]);
      if (kind == AlternantKind::Wplus) e += LaurentPoly::variable(num_vars, vars[i], -alpha_half[j]);
      m(i, j) = std::move(e);
    }
  return m;
}

RationalMatrix char_matrix_at(AlternantKind kind, const std::vector<std::int32_t>& alpha_half,
                              std::span<const Rational> x) {
  if (alpha_half.size() != x.size()) throw UsageError("char_matrix_at: |alpha| must equal |X|");
  const std::size_t n = x.size();
  RationalMatrix m(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational e = x[i].half_pow(alpha_half[j]);
      if (kind == AlternantKind::Wminus) e -= x[i].half_pow(-alpha_half[j]);
      if (kind == AlternantKind::Wplus) e += x[i].half_pow(-alpha_half[j]);
      m(i, j) = std::move(e);
    }
  return m;
}

std::vector<std::int32_t> shifted_exponents(CharFamily f, const Partition& lambda, int n) {
  if (lambda.length() > n) throw UsageError("partition " + lambda.str() + " has more than n parts");
  auto a = family_shift(f, n);
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] += 2 * lambda.part(i + 1);
  return a;
}

namespace {

bool halves_denominator(CharFamily f, const Partition& lambda, int n) {
  return f == CharFamily::even_orth && lambda.part(n) != 0;
}

std::vector<std::size_t> first_vars(int n) {
  std::vector<std::size_t> v(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

}  // namespace

LaurentPoly character(CharFamily f, const Partition& lambda, int n) {
  const auto kind = alternant_kind(f);
  const auto vars = first_vars(n);
  const std::size_t nv = static_cast<std::size_t>(n);
  const LaurentPoly num = det_expansion(char_matrix(kind, shifted_exponents(f, lambda, n), vars, nv));
  LaurentPoly den = det_expansion(char_matrix(kind, family_shift(f, n), vars, nv));
  if (halves_denominator(f, lambda, n)) den *= Rational(1, 2);
  auto q = num.divide_exact(den);
  if (!q) throw InternalError("Weyl quotient for " + family_name(f) + " " + lambda.str() + " is not exact");
  return *q;
}

Rational character_at(CharFamily f, const Partition& lambda, std::span<const Rational> x) {
  const int n = static_cast<int>(x.size());
  const auto kind = alternant_kind(f);
  const Rational num = det_fraction_free(char_matrix_at(kind, shifted_exponents(f, lambda, n), x));
  Rational den = det_fraction_free(char_matrix_at(kind, family_shift(f, n), x));
  if (halves_denominator(f, lambda, n)) den *= Rational(1, 2);
  if (den.is_zero()) throw DomainError("Weyl denominator vanishes at the sample point");
  return num / den;
}

namespace {

LaurentPoly var(std::size_t nv, std::size_t i, std::int32_t half = 2) { return LaurentPoly::variable(nv, i, half); }

LaurentPoly one(std::size_t nv) { return LaurentPoly::constant(nv, Rational(1)); }

// D(u, v) = (v - u)(1 - uv)/(uv), expanded.
LaurentPoly d_factor(std::size_t nv, std::size_t u, std::size_t v) {
  return (var(nv, v) - var(nv, u)) * (one(nv) - var(nv, u) * var(nv, v)) * var(nv, u, -2) * var(nv, v, -2);
}

// C(u) for the families that have one.
LaurentPoly c_factor(CharFamily f, std::size_t nv, std::size_t u) {
  if (f == CharFamily::sp) return var(nv, u) - var(nv, u, -2);  // -(1 - u^2)/u
  return var(nv, u, 1) - var(nv, u, -1);                         // -u^{-1/2}(1 - u)
}

}  // namespace

VerifyReport verify_denominators(int n) {
  if (n < 1) throw UsageError("n must be positive");
  if (n > 5) throw CapabilityError("denominator check supports n <= 5");
  Stopwatch clock;
  VerifyReport r;
  r.identity = "denominators";
  r.n = n;
  r.mode = "symbolic";
  const auto nv = static_cast<std::size_t>(n);
  const auto vars = first_vars(n);
  LaurentPoly pairs = one(nv);
  LaurentPoly vander = one(nv);
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = i + 1; j < nv; ++j) {
      pairs = pairs * d_factor(nv, i, j);
      vander = vander * (var(nv, i) - var(nv, j));
    }
  LaurentPoly sp_c = one(nv), odd_c = one(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    sp_c = sp_c * c_factor(CharFamily::sp, nv, i);
    odd_c = odd_c * c_factor(CharFamily::odd_orth, nv, i);
  }
  struct Case {
    CharFamily f;
    LaurentPoly rhs;
  };
  std::vector<Case> cases{{CharFamily::gl, vander},
                          {CharFamily::odd_orth, odd_c * pairs},
                          {CharFamily::sp, sp_c * pairs},
                          {CharFamily::even_orth, pairs * Rational(2)}};
  std::string lhs_text, rhs_text;
  r.equal = true;
  for (const auto& c : cases) {
    const LaurentPoly lhs = det_expansion(char_matrix(alternant_kind(c.f), family_shift(c.f, n), vars, nv));
    const bool ok = lhs == c.rhs;
    r.params[family_name(c.f)] = ok ? "ok" : "mismatch";
    if (!ok) {
      r.equal = false;
      r.detail += family_name(c.f) + " denominator mismatch; ";
    }
    lhs_text += lhs.canonical() + "\n";
    rhs_text += c.rhs.canonical() + "\n";
  }
  r.lhs_hash = sha256_hex(lhs_text);
  r.rhs_hash = sha256_hex(rhs_text);
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

std::vector<std::size_t> specialize_X(const Composition& mu, int s, int n) {
  std::vector<std::size_t> out;
  const SubsetIdx J = iota(mu, s, n);
  for (int e : J.elements()) out.push_back(static_cast<std::size_t>(e - 1));
  return out;
}

std::vector<LaurentPoly> delta_factors(CharFamily f, const Composition& mu, int s, int n) {
  const auto nv = static_cast<std::size_t>(s * n);
  const auto X = specialize_X(mu, s, n);
  std::vector<LaurentPoly> out;
  if (f == CharFamily::sp || f == CharFamily::odd_orth) {
    for (auto u : X) out.push_back(c_factor(f, nv, u));
  }
  // X is ordered group by group, so i < j covers both the within-group and
  // the across-group (k < l) pairs.
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = i + 1; j < X.size(); ++j) {
      if (f == CharFamily::gl) {
        out.push_back(var(nv, X[i]) - var(nv, X[j]));
      } else {
        out.push_back(d_factor(nv, X[i], X[j]));
      }
    }
  return out;
}

LaurentPoly delta_prefactor(CharFamily f, const Composition& mu, int s, int n) {
  LaurentPoly p = one(static_cast<std::size_t>(s * n));
  for (const auto& d : delta_factors(f, mu, s, n)) p = p * d;
  return p;
}

Rational even_orth_row_factor(CharFamily f, const Partition& lambda, int n) {
  return f == CharFamily::even_orth && lambda.part(n) == 0 ? Rational(2) : Rational(1);
}

PolyMatrix family_matrix_A(CharFamily f, int s, int n) {
  if (s < 1 || n < 1) throw UsageError("s and n must be positive");
  const auto rows = static_cast<std::size_t>(s + n - 1);
  const auto nv = static_cast<std::size_t>(s * n);
  PolyMatrix a(rows, nv, LaurentPoly(nv));
  for (std::size_t i = 1; i <= rows; ++i) {
    const auto top = static_cast<std::int32_t>(s + n) - static_cast<std::int32_t>(i);  // s+n-i
    for (std::size_t c = 0; c < nv; ++c) {
      switch (f) {
        case CharFamily::gl: a(i - 1, c) = var(nv, c, 2 * (top - 1)); break;
        case CharFamily::sp: a(i - 1, c) = var(nv, c, 2 * top) - var(nv, c, -2 * top); break;
        case CharFamily::odd_orth: a(i - 1, c) = var(nv, c, 2 * top - 1) - var(nv, c, -(2 * top - 1)); break;
        case CharFamily::even_orth: a(i - 1, c) = var(nv, c, 2 * (top - 1)) + var(nv, c, -2 * (top - 1)); break;
      }
    }
  }
  return a;
}

LaurentPoly pair_factor(CharFamily f, std::size_t u, std::size_t v, std::size_t num_vars) {
  if (f == CharFamily::gl) return var(num_vars, u) - var(num_vars, v);
  return d_factor(num_vars, u, v);
}

namespace {

Rational pair_factor_at(CharFamily f, const Rational& u, const Rational& v) {
  if (f == CharFamily::gl) return u - v;
  return (v - u) * (Rational(1) - u * v) / (u * v);
}

std::size_t grid_index(int n, int k, int j) { return static_cast<std::size_t>((k - 1) * n + (j - 1)); }

}  // namespace

Rational theorem_schur_rhs(CharFamily f, int s, int n, std::span<const Rational> x) {
  if (x.size() != static_cast<std::size_t>(s * n)) throw UsageError("point must have sn coordinates");
  Rational rhs(1);
  for (int k = 1; k <= s; ++k)
    for (int l = k + 1; l <= s; ++l)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          const auto e = binomial(s + n - i - j - 1, s - 2);
          if (e == 0) continue;
          rhs *= pair_factor_at(f, x[grid_index(n, k, i)], x[grid_index(n, l, j)]).pow(e);
        }
  return rhs;
}

namespace {

std::vector<Rational> remark_point(RationalSampler& rng, int s, int n) {
  for (int attempt = 0; attempt <= 32; ++attempt) {
    const Rational t = rng.next_square();
    std::vector<Rational> x(static_cast<std::size_t>(s * n));
    for (int k = 1; k <= s; ++k) {
      const Rational a = rng.next_square();
      for (int j = 1; j <= n; ++j) x[grid_index(n, k, j)] = t.pow(j - 1) * a;
    }
    if (is_admissible_point(x)) return x;
  }
  throw DomainError("no admissible substituted point after 32 retries");
}

std::vector<Rational> pick(std::span<const Rational> x, const std::vector<std::size_t>& idx) {
  std::vector<Rational> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(x[i]);
  return out;
}

}  // namespace

VerifyReport verify_theorem_schur(CharFamily f, int s, int n, std::uint64_t seed, bool remark_substitution) {
  if (s < 1 || n < 1) throw UsageError("s and n must be positive");
  Stopwatch clock;
  VerifyReport r;
  r.identity = "schur-det";
  r.s = s;
  r.n = n;
  r.mode = "numeric";
  r.seed = seed;
  r.params["family"] = family_name(f);
  if (remark_substitution) r.params["substitution"] = "t^(j-1)*a_k";

  RationalSampler rng(seed);
  const auto x = remark_substitution ? remark_point(rng, s, n) : sample_admissible_point(rng, static_cast<std::size_t>(s * n));
  const auto box = enumerate_partitions_in_box(s - 1, n);
  const auto Z = enumerate_Z(s, n, false);

  RationalMatrix chars(box.size(), Z.size(), Rational(0));
  for (std::size_t c = 0; c < Z.size(); ++c) {
    const auto xm = pick(x, specialize_X(Z[c], s, n));
    for (std::size_t row = 0; row < box.size(); ++row) chars(row, c) = character_at(f, box[row], xm);
  }
  const Rational lhs = det_fraction_free(chars);
  const Rational rhs = theorem_schur_rhs(f, s, n, x);
  r.lhs_hash = sha256_hex(lhs.canonical());
  r.rhs_hash = sha256_hex(rhs.canonical());
  if (lhs == rhs) r.sign = 1;
  if (lhs == -rhs && !rhs.is_zero()) r.sign = -1;

  // Cell bookkeeping: det A^{I(lambda)}_{iota(mu)} = row factor * Delta_mu * char.
  const RationalMatrix A = eval_matrix(family_matrix_A(f, s, n), x);
  const NumericSpec spec(s, n, A);
  bool cells_ok = true;
  for (std::size_t c = 0; c < Z.size() && cells_ok; ++c) {
    Rational delta(1);
    for (const auto& d : delta_factors(f, Z[c], s, n)) delta *= d.eval(x);
    const SubsetIdx J = iota(Z[c], s, n);
    for (std::size_t row = 0; row < box.size(); ++row) {
      const Rational cell = minor_det(spec.A, partition_to_rowset(box[row], s, n), J);
      if (!(cell == even_orth_row_factor(f, box[row], n) * delta * chars(row, c))) {
        cells_ok = false;
        r.detail += "cell " + box[row].str() + "," + Z[c].str() + " differs from Delta_mu * character; ";
        break;
      }
    }
  }
  r.params["prefactor_cells"] = cells_ok ? "ok" : "mismatch";
  r.equal = lhs == rhs && cells_ok;
  if (lhs != rhs) r.detail += "determinant of characters differs from the product; ";
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerifyReport verify_prop_detS(CharFamily f, int s, int n, std::uint64_t seed) {
  if (f != CharFamily::gl && f != CharFamily::sp) throw UsageError("prop12 supports the gl and sp families");
  if (n < 1 || s < n) throw UsageError("prop12 needs s >= n >= 1");
  Stopwatch clock;
  VerifyReport r;
  r.identity = "prop12";
  r.s = s;
  r.n = n;
  r.mode = "numeric";
  r.seed = seed;
  r.params["family"] = family_name(f);
  RationalSampler rng(seed);
  const auto x = sample_admissible_point(rng, static_cast<std::size_t>(s));
  const auto box = enumerate_partitions_in_box(s - n, n);
  const auto cols = subsets_of_size(s, n);
  RationalMatrix m(box.size(), cols.size(), Rational(0));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::vector<Rational> xi;
    for (int e : cols[c].elements()) xi.push_back(x[static_cast<std::size_t>(e - 1)]);
    for (std::size_t row = 0; row < box.size(); ++row) m(row, c) = character_at(f, box[row], xi);
  }
  const Rational lhs = det_fraction_free(m);
  Rational base(1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) base *= pair_factor_at(f, x[i], x[j]);
  const Rational rhs = base.pow(binomial(s - 2, n - 1));
  r.lhs_hash = sha256_hex(lhs.canonical());
  r.rhs_hash = sha256_hex(rhs.canonical());
  if (lhs == rhs) r.sign = 1;
  else if (lhs == -rhs) r.sign = -1;
  r.equal = r.sign.has_value();
  if (!r.equal) r.detail = "determinant differs from the product even up to sign";
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

bool check_binomial_collapse(int bound) {
  for (int s = 2; s <= bound; ++s)
    for (int n = 1; n <= bound; ++n)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          const auto lhs = binomial(s + n - i - j, n - i - j + 1) - binomial(s + n - i - j - 1, n - i - j);
          if (lhs != binomial(s + n - i - j - 1, s - 2)) return false;
        }
  return true;
}

}  // namespace cdet
