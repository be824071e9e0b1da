#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cdet/errors.hpp"
#include "cdet/matrix.hpp"

namespace cdet {

/// Size cap for the permutation-expansion oracle. Reads
/// COMPOUND_DET_ORACLE_BOUND when set, else 6.
std::size_t oracle_bound();

namespace detail {

template <class T>
void require_square(const Matrix<T>& m, const char* what) {
  if (!m.is_square()) {
    throw UsageError(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + ", not square");
  }
}

template <class T>
T empty_det(const Matrix<T>&) {
  return RingTraits<T>::one_like(T{});
}

}  // namespace detail

/// Brute-force sum over all permutations: sum_sigma sgn(sigma) prod_i m[i, sigma(i)].
/// This is the oracle the other determinant routines are checked against.
template <class T>
T det_cofactor(const Matrix<T>& m, std::size_t bound = oracle_bound()) {
  detail::require_square(m, "det_cofactor");
  const std::size_t n = m.rows();
  if (n > bound) {
    throw CapabilityError("det_cofactor: size " + std::to_string(n) + " exceeds oracle bound " +
                          std::to_string(bound));
  }
  if (n == 0) return detail::empty_det(m);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T sum = RingTraits<T>::zero_like(m(0, 0));
  do {
    bool zero = false;
    for (std::size_t i = 0; i < n && !zero; ++i) zero = RingTraits<T>::is_zero(m(i, perm[i]));
    if (zero) continue;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    T prod = m(0, perm[0]);
    for (std::size_t i = 1; i < n; ++i) prod = prod * m(i, perm[i]);
    if (inversions % 2 == 0) {
      sum += prod;
    } else {
      sum -= prod;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

/// Bareiss fraction-free elimination. Pivots on the first nonzero entry of
/// the current column; every division is exact.
template <class T>
T det_fraction_free(Matrix<T> a) {
  detail::require_square(a, "det_fraction_free");
  const std::size_t n = a.rows();
  if (n == 0) return detail::empty_det(a);
  using R = RingTraits<T>;
  bool negate = false;
  T prev = R::one_like(a(0, 0));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && R::is_zero(a(p, k))) ++p;
    if (p == n) return R::zero_like(a(0, 0));
    if (p != k) {
      a.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = a(k, k) * a(i, j);
        if (!R::is_zero(a(i, k)) && !R::is_zero(a(k, j))) num -= a(i, k) * a(k, j);
        a(i, j) = R::exact_div(num, prev);
      }
    }
    prev = a(k, k);
  }
  T d = a(n - 1, n - 1);
  if (negate) d = -d;
  return d;
}

/// Laplace expansion with every minor on the leading rows memoized by its
/// column set. Division-free; cost is O(2^n n) ring products, which beats
/// elimination when entries are sparse polynomials whose products grow.
template <class T>
T det_expansion(const Matrix<T>& m) {
  detail::require_square(m, "det_expansion");
  const std::size_t n = m.rows();
  if (n == 0) return detail::empty_det(m);
  if (n > 24) throw CapabilityError("det_expansion: size " + std::to_string(n) + " too large");
  using R = RingTraits<T>;
  const T zero = R::zero_like(m(0, 0));
  std::vector<std::optional<T>> minors(std::size_t{1} << n);
  minors[0] = R::one_like(m(0, 0));
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    const std::size_t row = k - 1;
    T acc = zero;
    std::size_t above = 0;  // set columns greater than j
    for (std::size_t jj = n; jj-- > 0;) {
      if (!(mask & (std::uint32_t{1} << jj))) continue;
      const std::uint32_t rest = mask & ~(std::uint32_t{1} << jj);
      const T& sub = *minors[rest];
      if (!R::is_zero(m(row, jj)) && !R::is_zero(sub)) {
        if (above % 2 == 0) {
          acc += m(row, jj) * sub;
        } else {
          acc -= m(row, jj) * sub;
        }
      }
      ++above;
    }
    minors[mask] = std::move(acc);
  }
  return std::move(*minors.back());
}

/// Default determinant: elimination over Q, memoized expansion over
/// polynomial rings.
inline Rational determinant(const RationalMatrix& m) { return det_fraction_free(m); }
inline LaurentPoly determinant(const PolyMatrix& m) { return det_expansion(m); }

}  // namespace cdet
