// Acceptance suite: one PASS/FAIL line per criterion. With an argument N only
// criterion N runs and the exit status reflects it.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cdet/characters.hpp"
#include "cdet/combinatorics.hpp"
#include "cdet/compound.hpp"
#include "cdet/determinant.hpp"
#include "cdet/macdonald.hpp"
#include "cdet/sampler.hpp"
#include "tableaux.hpp"

using namespace cdet;

namespace {

// All identities are checked with exact equality; these are the runtime limits.
constexpr double kSymbolicMainBudgetSeconds = 60.0;
constexpr double kNumericMainBudgetSeconds = 300.0;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (!pass) note << "; ";
    else note.str("");
    pass = false;
    note << why;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string case_name(int s, int n) { return "(" + std::to_string(s) + "," + std::to_string(n) + ")"; }

void main_symbolic(Outcome& o) {
  const std::map<std::pair<int, int>, std::string> displayed{
      {{2, 2}, "123,134"}, {{2, 3}, "1234,1245,1456"}, {{3, 2}, "1235,1345,1356"}};
  const auto t0 = std::chrono::steady_clock::now();
  for (auto [s, n] : std::vector<std::pair<int, int>>{{1, 4}, {4, 1}, {2, 2}, {2, 3}, {3, 2}}) {
    const auto r = verify_main(s, n, "symbolic", 0);
    if (!r.equal) o.fail("unequal at " + case_name(s, n));
    auto it = displayed.find({s, n});
    if (it != displayed.end() && r.params.at("rhs_columns") != it->second)
      o.fail("rhs columns " + r.params.at("rhs_columns") + " at " + case_name(s, n));
  }
  const double secs = seconds_since(t0);
  if (secs > kSymbolicMainBudgetSeconds) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) o.note << "5 cases symbolic, " << secs << " s";
}

void main_numeric(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  for (auto [s, n] : std::vector<std::pair<int, int>>{{3, 3}, {4, 2}, {2, 4}})
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
      if (!verify_main(s, n, "numeric", seed).equal) o.fail("unequal at " + case_name(s, n) + " seed " + std::to_string(seed));
  const double secs = seconds_since(t0);
  if (secs > kNumericMainBudgetSeconds) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) o.note << "15 runs, " << secs << " s";
}

void sylvester(Outcome& o) {
  for (auto [s, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {4, 2}})
    if (!verify_sylvester(s, n, "symbolic", 0).equal) o.fail("symbolic " + case_name(s, n));
  for (auto [s, n] : std::vector<std::pair<int, int>>{{4, 3}, {5, 2}})
    for (std::uint64_t seed = 1; seed <= 3; ++seed)
      if (!verify_sylvester(s, n, "numeric", seed).equal) o.fail("numeric " + case_name(s, n));
  if (o.pass) o.note << "3 symbolic, 6 numeric";
}

std::string cell_text(const GramCell& c) {
  if (c.eps == 0) return "0";
  return (c.eps > 0 ? "+" : "-") + c.cols.label();
}

void check_gram(Outcome& o, const std::string& name, const GramResult& g,
                const std::vector<std::vector<std::string>>& expected, int sign,
                const std::map<std::string, int>& exponents) {
  if (!g.entries_match) o.fail(name + ": entries differ from Laplace values");
  if (!g.pattern_ok) o.fail(name + ": zero pattern");
  if (!g.product_ok || !g.report.equal) o.fail(name + ": determinant " + g.detail);
  for (std::size_t i = 0; i < expected.size(); ++i)
    for (std::size_t j = 0; j < expected[i].size(); ++j)
      if (cell_text(g.cells[i][j]) != expected[i][j])
        o.fail(name + ": cell " + std::to_string(i + 1) + "," + std::to_string(j + 1) + " is " + cell_text(g.cells[i][j]));
  if (g.sign != sign) o.fail(name + ": sign " + std::to_string(g.sign));
  std::map<std::string, int> got;
  for (const auto& [J, e] : g.factor_exponents) got[J.label()] = e;
  if (got != exponents) o.fail(name + ": factors " + g.report.params.at("factors"));
}

void gram(Outcome& o) {
  const auto g1 = verify_gram_structure(3, 2, GramVariant::lemma1, 0, "symbolic", 0);
  check_gram(o, "lemma1", g1,
             {{"+1235", "+1245", "+1236", "0", "0", "0"},
              {"0", "+1345", "0", "0", "0", "0"},
              {"0", "0", "-1356", "0", "0", "0"},
              {"0", "0", "0", "+1345", "+1346", "0"},
              {"0", "0", "0", "0", "+1356", "0"},
              {"0", "0", "0", "0", "0", "+1356"}},
             -1, {{"1235", 1}, {"1345", 2}, {"1356", 3}});

  std::map<std::string, int> ex2{{"2345", 1}, {"3456", 1}, {"2356", 1}};
  for (const auto& nu : enumerate_Z(3, 4, true)) ++ex2[iota(nu, 3, 2).label()];
  const auto g2 = verify_gram_structure(3, 2, GramVariant::lemma2, 1, "symbolic", 0);
  check_gram(o, "lemma2", g2,
             {{"+1235", "+1245", "+1236", "0", "+1246", "0"},
              {"0", "+1345", "0", "-1235", "+1346", "0"},
              {"0", "0", "-1356", "0", "-1456", "+1235"},
              {"0", "0", "0", "+2345", "0", "0"},
              {"0", "0", "0", "0", "-3456", "0"},
              {"0", "0", "0", "0", "0", "+2356"}},
             1, ex2);
  if (o.pass) o.note << "both worked products, cells, zero patterns and factors reproduced";
}

void leading_term(Outcome& o) {
  for (auto [s, n] : std::vector<std::pair<int, int>>{{1, 4}, {4, 1}, {2, 2}, {3, 2}}) {
    const auto r = verify_leading_term(s, n);
    if (!r.equal) o.fail(case_name(s, n) + " " + r.detail);
  }
  if (o.pass) o.note << "4 cases, coefficient 1";
}

void denominators(Outcome& o) {
  for (int n = 1; n <= 4; ++n) {
    const auto r = verify_denominators(n);
    if (!r.equal) o.fail("n=" + std::to_string(n) + " " + r.detail);
  }
  if (o.pass) o.note << "4 families, n=1..4";
}

void character_theorem(Outcome& o) {
  int runs = 0;
  for (auto f : {CharFamily::gl, CharFamily::sp, CharFamily::odd_orth, CharFamily::even_orth})
    for (auto [s, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}})
      for (std::uint64_t seed = 1; seed <= 3; ++seed, ++runs) {
        const auto r = verify_theorem_schur(f, s, n, seed);
        if (!r.equal) o.fail(family_name(f) + " " + case_name(s, n) + " seed " + std::to_string(seed) + " " + r.detail);
      }
  for (std::uint64_t seed = 1; seed <= 3; ++seed, ++runs)
    if (!verify_theorem_schur(CharFamily::gl, 2, 2, seed, true).equal) o.fail("remark substitution seed " + std::to_string(seed));
  if (o.pass) o.note << runs << " runs including the geometric substitution";
}

void prop_detS(Outcome& o) {
  std::set<int> signs;
  for (auto f : {CharFamily::gl, CharFamily::sp})
    for (auto [s, n] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}})
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const auto r = verify_prop_detS(f, s, n, seed);
        if (!r.equal) o.fail(family_name(f) + " " + case_name(s, n) + " " + r.detail);
        if (r.sign) signs.insert(*r.sign);
      }
  if (o.pass) {
    o.note << "12 runs, global sign";
    for (int v : signs) o.note << " " << (v > 0 ? "+1" : "-1");
  }
}

void macdonald(Outcome& o) {
  for (auto [s, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}})
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      RationalSampler rng(seed);
      const QTParams p = sample_qt(rng, kMacdonaldDegreeBound);
      const auto r = verify_corollary_macdonald(s, n, p, seed);
      const std::string at = case_name(s, n) + " q=" + p.q.str() + " t=" + p.t.str();
      if (!r.p_identity) o.fail("P identity " + at);
      if (!r.q_identity_displayed)
        o.fail("Q identity " + at + (r.q_identity_box_product ? " (holds with prod b_lambda)" : ""));
      if (!r.prefactor_identity) o.fail("prefactor identity " + at + " (" + r.report.detail + ")");
    }
  if (o.pass) o.note << "6 runs";
}

RationalMatrix random_matrix(RationalSampler& rng, std::size_t n) {
  RationalMatrix m(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = Rational(static_cast<long>(rng.next_u32_plus_one() % 21) - 10,
                         static_cast<long>(rng.next_u32_plus_one() % 5) + 1);
  return m;
}

void properties(Outcome& o) {
  RationalSampler rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rng, 2 + static_cast<std::size_t>(trial % 4));
    if (det_fraction_free(m) != det_cofactor(m)) o.fail("determinant oracle at trial " + std::to_string(trial));
  }

  {
    const auto spec = random_spec(3, 2, 1032);
    for (const auto& J : subsets_of_size(6, 2))
      for (const auto& K : subsets_of_size(6, 2))
        if (laplace_pair(spec, J, K) != laplace_value(spec, J, K)) o.fail("Laplace pairing " + J.str() + K.str());
  }

  for (int s = 1; s <= 4; ++s)
    for (int n = 1; n <= 4; ++n) {
      std::set<std::vector<int>> z0;
      for (const auto& nu : enumerate_Z(s, s + n - 1, true)) z0.insert(nu.parts());
      const auto num = random_spec(s, n, 77 + s * 10 + n);
      const std::optional<PolySpec> sym = s <= 3 && n <= 3 ? std::optional<PolySpec>(symbolic_spec(s, n)) : std::nullopt;
      const auto Z = enumerate_Z(s, n, false);
      for (int k = 1; k <= s; ++k) {
        std::set<std::vector<int>> image;
        for (const auto& mu : positive_at(s, n, k)) {
          const auto t = tau(mu, k);
          image.insert(t.parts());
          const SubsetIdx I = iota(mu, s, n), P = phi(mu, k, s, n);
          if (I.intersects(P) || !(I.disjoint_union(P) == iota(t, s, n)) || !(tau_inverse(t, k) == mu))
            o.fail("bijection at " + mu.str() + " k=" + std::to_string(k));
          for (const auto& lam : Z) {
            if (preceq(lam, mu, k)) continue;
            const SubsetIdx J = iota(lam, s, n);
            if (!laplace_pair(num, J, P).is_zero() || (sym && !laplace_pair(*sym, J, P).is_zero()))
              o.fail("vanishing at " + lam.str() + " " + mu.str());
          }
        }
        if (image != z0) o.fail("tau image at " + case_name(s, n));
      }
    }

  for (int s = 1; s <= 6; ++s)
    for (int n = 1; n <= 6; ++n) {
      const auto Z = enumerate_Z(s, n, false);
      if (static_cast<std::int64_t>(Z.size()) != binomial(s + n - 1, n) ||
          static_cast<std::int64_t>(enumerate_Z(s, s + n - 1, true).size()) != binomial(s + n - 2, n - 1) ||
          static_cast<std::int64_t>(enumerate_Z(s, n, true).size()) != binomial(n - 1, n - s))
        o.fail("cardinalities at " + case_name(s, n));
      for (int k = 1; k <= s; ++k)
        if (static_cast<std::int64_t>(positive_at(s, n, k).size()) != binomial(s + n - 2, n - 1))
          o.fail("|P^(k)| at " + case_name(s, n));
      for (std::size_t a = 0; a + 1 < Z.size(); ++a)
        if (!(Z[a] < Z[a + 1]) || !(iota(Z[a], s, n) < iota(Z[a + 1], s, n))) o.fail("iota order at " + case_name(s, n));
    }

  RationalSampler qt_rng(11);
  for (int sample = 0; sample < 3; ++sample) {
    const QTParams p = sample_qt(qt_rng, kMacdonaldDegreeBound);
    for (int d = 1; d <= 5; ++d) {
      std::vector<SymFuncExpansion> P;
      for (const auto& lam : partitions_of(d)) {
        P.push_back(macdonald_P(lam, p));
        for (const auto& [mu, c] : P.back().coeffs)
          if (!dominance_leq(mu, lam) || (mu == lam && c != Rational(1))) o.fail("triangularity at " + lam.str());
      }
      for (std::size_t i = 0; i < P.size(); ++i)
        for (std::size_t j = i + 1; j < P.size(); ++j)
          if (!inner_product(P[i], P[j], p).is_zero()) o.fail("orthogonality at weight " + std::to_string(d));
    }
  }

  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 4; ++d)
      for (const auto& lam : partitions_of(d))
        if (lam.length() <= n && character(CharFamily::gl, lam, n) != testing::schur_by_tableaux(lam, n))
          o.fail("tableau oracle at " + lam.str());
  if (o.pass) o.note << "determinant oracle, Laplace, bijection, vanishing, cardinalities, Macdonald, tableaux";
}

const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> kCriteria{
    {"main theorem, symbolic", main_symbolic},
    {"main theorem, numeric", main_numeric},
    {"Cauchy-Sylvester compound determinant", sylvester},
    {"Gram structure worked products", gram},
    {"leading term", leading_term},
    {"Weyl denominators", denominators},
    {"character determinant identities", character_theorem},
    {"character determinant over n-subsets", prop_detS},
    {"Macdonald P and Q determinants", macdonald},
    {"property suites", properties},
};

bool run_one(std::size_t index) {
  Outcome o;
  try {
    kCriteria[index].second(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << index + 1 << " (" << kCriteria[index].first
            << "): " << o.note.str() << std::endl;
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 2) {
    std::cerr << "usage: acceptance [criterion 1-10]\n";
    return 2;
  }
  if (argc == 2) {
    const int k = std::atoi(argv[1]);
    if (k < 1 || k > static_cast<int>(kCriteria.size())) {
      std::cerr << "criterion must be 1-" << kCriteria.size() << "\n";
      return 2;
    }
    return run_one(static_cast<std::size_t>(k - 1)) ? 0 : 1;
  }
  bool all = true;
  for (std::size_t i = 0; i < kCriteria.size(); ++i) all = run_one(i) && all;
  return all ? 0 : 1;
}
