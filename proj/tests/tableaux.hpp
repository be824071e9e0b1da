#pragma once

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "cdet/combinatorics.hpp"
#include "cdet/laurent_poly.hpp"

namespace cdet::testing {

// Sum of x^T over semistandard tableaux of shape lambda with entries in [n].
inline LaurentPoly schur_by_tableaux(const Partition& lambda, int n) {
  const auto nv = static_cast<std::size_t>(n);
  const auto rows = lambda.trimmed();
  std::vector<std::vector<int>> t;
  for (int len : rows) t.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<LaurentPoly::Term> terms;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < static_cast<std::size_t>(rows[r]); ++c) cells.emplace_back(r, c);
  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == cells.size()) {
      std::vector<int> e(nv, 0);
      for (const auto& row : t)
        for (int v : row) ++e[static_cast<std::size_t>(v - 1)];
      terms.push_back({Monomial::from_exponents(e), Rational(1)});
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      t[r][c] = v;
      fill(idx + 1);
    }
  };
  fill(0);
  return LaurentPoly::from_terms(nv, terms);
}


}  // namespace cdet::testing
