#include "cdet/compound.hpp"

#include <algorithm>
#include <sstream>

#include "cdet/determinant.hpp"
#include "cdet/errors.hpp"
#include "cdet/sampler.hpp"

namespace cdet {

namespace {

void check_sn(int s, int n) {
  if (s < 1 || n < 1) throw UsageError("s and n must be positive");
}

void check_mode(const std::string& mode) {
  if (mode != "symbolic" && mode != "numeric") throw UsageError("mode must be symbolic or numeric, got '" + mode + "'");
}

LaurentPoly power(const LaurentPoly& x, unsigned e) { return x.pow(e); }
Rational power(const Rational& x, unsigned e) { return x.pow(static_cast<long>(e)); }

std::string labels(const std::vector<SubsetIdx>& sets) {
  std::string out;
  for (const auto& J : sets) {
    if (!out.empty()) out += ',';
    out += J.label();
  }
  return out;
}

template <class T>
void fill_hashes(VerifyReport& r, const T& lhs, const T& rhs) {
  r.lhs_hash = sha256_hex(lhs.canonical());
  r.rhs_hash = sha256_hex(rhs.canonical());
}

template <class T>
T one_like(const Matrix<T>& a) {
  return RingTraits<T>::one_like(a(0, 0));
}

}  // namespace

template <class T>
CompoundSpec<T>::CompoundSpec(int s_, int n_, Matrix<T> a) : s(s_), n(n_), A(std::move(a)) {
  check_sn(s, n);
  if (A.rows() != static_cast<std::size_t>(s + n - 1) || A.cols() != static_cast<std::size_t>(s * n)) {
    throw UsageError("A must be " + std::to_string(s + n - 1) + "x" + std::to_string(s * n) + ", got " +
                     std::to_string(A.rows()) + "x" + std::to_string(A.cols()));
  }
}

PolySpec symbolic_spec(int s, int n) {
  check_sn(s, n);
  const std::size_t rows = static_cast<std::size_t>(s + n - 1);
  const std::size_t cols = static_cast<std::size_t>(s * n);
  const std::size_t nv = rows * cols;
  PolyMatrix a(rows, cols, LaurentPoly(nv));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = LaurentPoly::variable(nv, i * cols + j);
  return PolySpec(s, n, std::move(a));
}

NumericSpec random_spec(int s, int n, std::uint64_t seed) {
  check_sn(s, n);
  RationalSampler rng(seed);
  const std::size_t rows = static_cast<std::size_t>(s + n - 1);
  const std::size_t cols = static_cast<std::size_t>(s * n);
  RationalMatrix a(rows, cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = rng.next_square();
  return NumericSpec(s, n, std::move(a));
}

PolySpec specialized_spec(int s, int n) {
  check_sn(s, n);
  const std::size_t rows = static_cast<std::size_t>(s + n - 1);
  const std::size_t cols = static_cast<std::size_t>(s * n);
  PolyMatrix a(rows, cols, LaurentPoly(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      a(i, j) = LaurentPoly::variable(cols, j, static_cast<std::int32_t>(2 * (rows - i)));
  return PolySpec(s, n, std::move(a));
}

template <class T>
T minor_det(const Matrix<T>& a, const SubsetIdx& rows, const SubsetIdx& cols) {
  if (rows.size() != cols.size()) throw UsageError("minor_det: row and column sets differ in size");
  if (rows.empty()) return one_like(a);
  return determinant(minor(a, rows, cols));
}

template <class T>
std::vector<T> vec_V(const CompoundSpec<T>& spec, const SubsetIdx& J) {
  if (J.size() != static_cast<std::size_t>(spec.n)) throw UsageError("vec_V: |J| must equal n");
  std::vector<T> out;
  for (const auto& I : subsets_of_size(spec.rows(), spec.n)) out.push_back(minor_det(spec.A, I, J));
  return out;
}

template <class T>
std::vector<T> vec_Vbar(const CompoundSpec<T>& spec, const SubsetIdx& K) {
  if (K.size() != static_cast<std::size_t>(spec.s - 1)) throw UsageError("vec_Vbar: |K| must equal s-1");
  const long base = static_cast<long>(spec.n) * (spec.n + 1) / 2;
  std::vector<T> out;
  for (const auto& I : subsets_of_size(spec.rows(), spec.n)) {
    T v = minor_det(spec.A, I.complement(), K);
    if ((I.weight() - base) % 2 != 0) v = -v;
    out.push_back(std::move(v));
  }
  return out;
}

template <class T>
T laplace_pair(const CompoundSpec<T>& spec, const SubsetIdx& J, const SubsetIdx& K) {
  const auto v = vec_V(spec, J);
  const auto w = vec_Vbar(spec, K);
  T acc = RingTraits<T>::zero_like(spec.A(0, 0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (RingTraits<T>::is_zero(v[i]) || RingTraits<T>::is_zero(w[i])) continue;
    acc += v[i] * w[i];
  }
  return acc;
}

template <class T>
T laplace_value(const CompoundSpec<T>& spec, const SubsetIdx& J, const SubsetIdx& K) {
  const int e = epsilon(J, K);
  if (e == 0) return RingTraits<T>::zero_like(spec.A(0, 0));
  T d = minor_det(spec.A, SubsetIdx::full(spec.rows()), J.disjoint_union(K));
  return e > 0 ? d : -d;
}

template <class T>
Matrix<T> build_M(const CompoundSpec<T>& spec) {
  const auto rows = subsets_of_size(spec.rows(), spec.n);
  const auto Z = enumerate_Z(spec.s, spec.n, false);
  Matrix<T> m(rows.size(), Z.size(), spec.A(0, 0));
  for (std::size_t c = 0; c < Z.size(); ++c) {
    const SubsetIdx J = iota(Z[c], spec.s, spec.n);
    for (std::size_t r = 0; r < rows.size(); ++r) m(r, c) = minor_det(spec.A, rows[r], J);
  }
  return m;
}

template <class T>
Matrix<T> build_Mhat(const CompoundSpec<T>& spec, const PhiMap& phi_map) {
  const auto Z = enumerate_Z(spec.s, spec.n, false);
  const std::size_t nrows = subsets_of_size(spec.rows(), spec.n).size();
  Matrix<T> m(nrows, Z.size(), spec.A(0, 0));
  for (std::size_t c = 0; c < Z.size(); ++c) {
    const auto col = vec_Vbar(spec, phi_map(Z[c]));
    for (std::size_t r = 0; r < nrows; ++r) m(r, c) = col[r];
  }
  return m;
}

PhiMap lemma1_phi(int s, int n) {
  return [s, n](const Composition& mu) { return big_phi_lemma1(mu, s, n); };
}

PhiMap lemma2_phi(int s, int n, int k0) {
  if (k0 < 1 || k0 > s) throw UsageError("k0 must lie in [1, s]");
  return [s, n, k0](const Composition& mu) { return big_phi_lemma2(mu, k0, s, n); };
}

std::vector<SubsetIdx> main_rhs_columns(int s, int n) {
  check_sn(s, n);
  std::vector<SubsetIdx> out;
  for (const auto& nu : enumerate_Z(s, s + n - 1, true)) out.push_back(iota(nu, s, n));
  return out;
}

bool main_symbolic_supported(int s, int n) { return s >= 1 && n >= 1 && s + n <= 5; }

namespace {

template <class T>
void run_main(const CompoundSpec<T>& spec, VerifyReport& r) {
  const T lhs = determinant(build_M(spec));
  T rhs = one_like(spec.A);
  const auto full = SubsetIdx::full(spec.rows());
  for (const auto& J : main_rhs_columns(spec.s, spec.n)) rhs = rhs * minor_det(spec.A, full, J);
  r.equal = lhs == rhs;
  fill_hashes(r, lhs, rhs);
  if (!r.equal) r.detail = "det M(A) differs from the product of maximal minors";
}

}  // namespace

VerifyReport verify_main(int s, int n, const std::string& mode, std::uint64_t seed) {
  check_sn(s, n);
  check_mode(mode);
  Stopwatch clock;
  VerifyReport r;
  r.identity = "main";
  r.s = s;
  r.n = n;
  r.mode = mode;
  r.params["rhs_columns"] = labels(main_rhs_columns(s, n));
  if (mode == "symbolic") {
    if (!main_symbolic_supported(s, n)) {
      throw CapabilityError("symbolic main theorem supports s + n <= 5; use numeric mode");
    }
    run_main(symbolic_spec(s, n), r);
  } else {
    r.seed = seed;
    run_main(random_spec(s, n, seed), r);
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

namespace {

template <class T>
void run_sylvester(const Matrix<T>& a, int s, int n, VerifyReport& r) {
  const auto sets = subsets_of_size(s, n);
  Matrix<T> c(sets.size(), sets.size(), a(0, 0));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j) c(i, j) = minor_det(a, sets[i], sets[j]);
  const T lhs = determinant(c);
  const T rhs = power(determinant(a), static_cast<unsigned>(binomial(s - 1, n - 1)));
  r.equal = lhs == rhs;
  fill_hashes(r, lhs, rhs);
  if (!r.equal) r.detail = "compound determinant differs from (det A)^C(s-1,n-1)";
}

}  // namespace

VerifyReport verify_sylvester(int s, int n, const std::string& mode, std::uint64_t seed) {
  check_sn(s, n);
  check_mode(mode);
  if (n > s) throw UsageError("Cauchy-Sylvester needs s >= n");
  Stopwatch clock;
  VerifyReport r;
  r.identity = "sylvester";
  r.s = s;
  r.n = n;
  r.mode = mode;
  r.params["exponent"] = std::to_string(binomial(s - 1, n - 1));
  const auto sz = static_cast<std::size_t>(s);
  if (mode == "symbolic") {
    if (s > 4) throw CapabilityError("symbolic Cauchy-Sylvester supports s <= 4; use numeric mode");
    PolyMatrix a(sz, sz, LaurentPoly(sz * sz));
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = 0; j < sz; ++j) a(i, j) = LaurentPoly::variable(sz * sz, i * sz + j);
    run_sylvester(a, s, n, r);
  } else {
    r.seed = seed;
    RationalSampler rng(seed);
    RationalMatrix a(sz, sz, Rational(0));
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = 0; j < sz; ++j) a(i, j) = rng.next_square();
    run_sylvester(a, s, n, r);
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

bool check_degree_balance(int s, int n) {
  check_sn(s, n);
  return n * binomial(s + n - 1, n) == (s + n - 1) * binomial(s + n - 2, n - 1);
}

Monomial expected_leading_monomial(int s, int n) {
  check_sn(s, n);
  std::vector<int> e(static_cast<std::size_t>(s * n), 0);
  for (int k = 1; k <= s; ++k)
    for (int j = 1; j <= n; ++j)
      e[static_cast<std::size_t>((k - 1) * n + j - 1)] = (s + 1 - k) * static_cast<int>(binomial(s + n - j, s));
  return Monomial::from_exponents(e);
}

VerifyReport verify_leading_term(int s, int n) {
  check_sn(s, n);
  if (s + n > 6) throw CapabilityError("leading-term check supports s + n <= 6");
  Stopwatch clock;
  VerifyReport r;
  r.identity = "leading-term";
  r.s = s;
  r.n = n;
  r.mode = "symbolic";
  const LaurentPoly det = determinant(build_M(specialized_spec(s, n)));
  const Monomial expected = expected_leading_monomial(s, n);
  const auto lt = det.leading_term();
  r.equal = lt.mono == expected && lt.coef.is_one();
  r.lhs_hash = sha256_hex(LaurentPoly::term(lt.mono, lt.coef).canonical());
  r.rhs_hash = sha256_hex(LaurentPoly::term(expected, Rational(1)).canonical());
  r.params["expected"] = expected.canonical();
  r.params["leading"] = LaurentPoly::term(lt.mono, lt.coef).canonical();
  if (!r.equal) r.detail = "leading term mismatch";
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

namespace {

constexpr std::size_t kFormalDetLimit = 16;

template <class T>
GramResult run_gram(const CompoundSpec<T>& spec, GramVariant variant, int k0) {
  const int s = spec.s;
  const int n = spec.n;
  GramResult g;
  g.order = enumerate_Z(s, n, false);
  const PhiMap phi_map = variant == GramVariant::lemma1 ? lemma1_phi(s, n) : lemma2_phi(s, n, k0);
  const Matrix<T> G = multiply(build_M(spec).transpose(), build_Mhat(spec, phi_map));
  const std::size_t size = g.order.size();

  g.entries_match = true;
  g.pattern_ok = true;
  g.cells.assign(size, std::vector<GramCell>(size));
  std::ostringstream why;
  for (std::size_t a = 0; a < size; ++a) {
    const SubsetIdx J = iota(g.order[a], s, n);
    for (std::size_t b = 0; b < size; ++b) {
      const SubsetIdx K = phi_map(g.order[b]);
      GramCell& cell = g.cells[a][b];
      cell.eps = epsilon(J, K);
      if (cell.eps != 0) cell.cols = J.disjoint_union(K);
      if (!(G(a, b) == laplace_value(spec, J, K))) {
        if (g.entries_match) why << "entry " << g.order[a].str() << "," << g.order[b].str() << " differs from its Laplace value; ";
        g.entries_match = false;
      }
      const int color = variant == GramVariant::lemma1 ? color_pi(g.order[b]) : k0;
      if (!preceq(g.order[a], g.order[b], color) && !RingTraits<T>::is_zero(G(a, b))) {
        if (g.pattern_ok) why << "nonzero entry at " << g.order[a].str() << "," << g.order[b].str() << "; ";
        g.pattern_ok = false;
      }
    }
  }

  // Diagonal factors of the claimed product.
  for (std::size_t b = 0; b < size; ++b) {
    if (g.cells[b][b].eps == 0) {
      g.product_ok = false;
      why << "iota(mu) meets Phi(mu) at " << g.order[b].str() << "; ";
      g.detail = why.str();
      return g;
    }
    ++g.factor_exponents[g.cells[b][b].cols];
  }

  int formal_sign = 0;
  bool formal_checked = false;
  if (size <= kFormalDetLimit) {
    // Determinant over formal symbols y_J standing for det A_J.
    std::map<SubsetIdx, std::size_t> index;
    for (const auto& row : g.cells)
      for (const auto& c : row)
        if (c.eps != 0) index.emplace(c.cols, 0);
    std::size_t next = 0;
    for (auto& [J, idx] : index) idx = next++;
    const std::size_t nv = std::max<std::size_t>(index.size(), 1);
    PolyMatrix Y(size, size, LaurentPoly(nv));
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b) {
        const auto& c = g.cells[a][b];
        if (c.eps != 0) Y(a, b) = LaurentPoly::variable(nv, index.at(c.cols)) * Rational(c.eps);
      }
    const LaurentPoly det_y = det_expansion(Y);
    LaurentPoly prod_y = LaurentPoly::constant(nv, Rational(1));
    for (const auto& [J, e] : g.factor_exponents) prod_y = prod_y * LaurentPoly::variable(nv, index.at(J)).pow(static_cast<unsigned>(e));
    if (det_y == prod_y) formal_sign = 1;
    if (det_y == -prod_y) formal_sign = -1;
    formal_checked = true;
    if (formal_sign == 0) why << "formal determinant is not a signed monomial; ";
  }

  // Actual determinant versus the actual product.
  int actual_sign = 0;
  bool actual_checked = false;
  if constexpr (std::is_same_v<T, Rational>) {
    const Rational lhs = determinant(G);
    Rational rhs(1);
    const auto full = SubsetIdx::full(spec.rows());
    for (const auto& [J, e] : g.factor_exponents) rhs *= minor_det(spec.A, full, J).pow(e);
    if (lhs == rhs) actual_sign = 1;
    if (lhs == -rhs) actual_sign = -1;
    actual_checked = true;
    g.report.lhs_hash = sha256_hex(lhs.canonical());
    g.report.rhs_hash = sha256_hex(rhs.canonical());
    if (actual_sign == 0) why << "det(tM Mhat) differs from +-product; ";
  }

  if (formal_checked && actual_checked) {
    g.sign = formal_sign == actual_sign ? formal_sign : 0;
  } else {
    g.sign = formal_checked ? formal_sign : actual_sign;
  }
  g.product_ok = g.sign != 0 && g.entries_match;
  g.detail = why.str();
  return g;
}

std::string factor_text(const std::map<SubsetIdx, int>& f) {
  std::string out;
  for (const auto& [J, e] : f) {
    if (!out.empty()) out += '*';
    out += "det" + J.label();
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace

GramResult verify_gram_structure(int s, int n, GramVariant variant, int k0, const std::string& mode,
                                 std::uint64_t seed) {
  check_sn(s, n);
  check_mode(mode);
  if (variant == GramVariant::lemma2) {
    if (k0 < 1 || k0 > s) throw UsageError("k0 must lie in [1, s]");
    if (s > 1 && n < 2) throw DomainError("the lemma2 map needs n >= 2");
  }
  Stopwatch clock;
  GramResult g;
  if (mode == "symbolic") {
    if (s + n > 6) throw CapabilityError("symbolic gram structure supports s + n <= 6");
    g = run_gram(symbolic_spec(s, n), variant, k0);
  } else {
    g = run_gram(random_spec(s, n, seed), variant, k0);
    g.report.seed = seed;
  }
  VerifyReport& r = g.report;
  r.identity = "gram";
  r.s = s;
  r.n = n;
  r.mode = mode;
  r.params["variant"] = variant == GramVariant::lemma1 ? "lemma1" : "lemma2";
  if (variant == GramVariant::lemma2) r.params["k0"] = std::to_string(k0);
  r.params["factors"] = factor_text(g.factor_exponents);
  r.equal = g.entries_match && g.pattern_ok && g.product_ok;
  if (g.sign != 0) r.sign = g.sign;
  if (r.lhs_hash.empty()) {
    // Symbolic: hash the cell table and the claimed product.
    std::string cells;
    for (const auto& row : g.cells)
      for (const auto& c : row) cells += (c.eps == 0 ? std::string("0") : (c.eps > 0 ? "+" : "-") + c.cols.label()) + ";";
    r.lhs_hash = sha256_hex(cells);
    r.rhs_hash = sha256_hex(std::to_string(g.sign) + "*" + r.params["factors"]);
  }
  r.detail = g.detail;
  r.elapsed_ms = clock.elapsed_ms();
  return g;
}

#define CDET_INSTANTIATE(T)                                                                      \
  template struct CompoundSpec<T>;                                                               \
  template T minor_det<T>(const Matrix<T>&, const SubsetIdx&, const SubsetIdx&);                 \
  template std::vector<T> vec_V<T>(const CompoundSpec<T>&, const SubsetIdx&);                    \
  template std::vector<T> vec_Vbar<T>(const CompoundSpec<T>&, const SubsetIdx&);                 \
  template T laplace_pair<T>(const CompoundSpec<T>&, const SubsetIdx&, const SubsetIdx&);        \
  template T laplace_value<T>(const CompoundSpec<T>&, const SubsetIdx&, const SubsetIdx&);       \
  template Matrix<T> build_M<T>(const CompoundSpec<T>&);                                         \
  template Matrix<T> build_Mhat<T>(const CompoundSpec<T>&, const PhiMap&);

CDET_INSTANTIATE(Rational)
CDET_INSTANTIATE(LaurentPoly)

#undef CDET_INSTANTIATE

}  // namespace cdet
