#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "cdet/subset.hpp"

namespace cdet {

/// Weak composition (mu_1, ..., mu_s). Colors index parts 1-based.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  /// Part at 1-based color k.
  int at(int k) const;
  bool all_positive() const;

  /// The total order on Z_{s,n}: lambda < mu when the first differing
  /// part is larger in lambda. (2,0,0) is the least element of Z_{3,2}.
  friend bool operator<(const Composition& a, const Composition& b);
  friend bool operator==(const Composition& a, const Composition& b) = default;

  /// "(2,0,0)".
  std::string str() const;
  static Composition parse(std::string_view text);

 private:
  std::vector<int> parts_;
};

/// Weakly decreasing sequence of non-negative integers. Trailing zeros may
/// be stored (box enumeration keeps length n) but do not affect equality.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::vector<int> trimmed() const;
  int weight() const;
  /// Number of nonzero parts.
  int length() const;
  /// Part i (1-based), zero beyond the stored parts.
  int part(int i) const;
  Partition conjugate() const;
  /// Same nonzero parts padded with zeros to the given length.
  Partition padded(int length) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.trimmed() == b.trimmed(); }
  /// Plain lexicographic order on trimmed parts; used for map keys.
  friend bool operator<(const Partition& a, const Partition& b) { return a.trimmed() < b.trimmed(); }

  /// "(2,1)" with stored parts.
  std::string str() const;
  /// Accepts "2,1", "(2,1)" and "" (the empty partition).
  static Partition parse(std::string_view text);

 private:
  std::vector<int> parts_;
};

/// Z_{s,n} (strict = false) or Z^0_{s,n} (strict = true), sorted increasingly
/// by the composition order. Strict with n < s yields an empty list.
std::vector<Composition> enumerate_Z(int s, int n, bool strict);

/// iota_{s,n}(mu) = union over i of [(i-1)n + 1, (i-1)n + mu_i] inside [sn].
SubsetIdx iota(const Composition& mu, int s, int n);

/// Sign of the permutation merging I then J into increasing order; 0 when
/// they intersect.
int epsilon(const SubsetIdx& I, const SubsetIdx& J);

/// rho^{(k)}(mu) = n - mu_k.
int rank(const Composition& mu, int k);

/// lambda <=_k mu iff lambda_i <= mu_i for every i != k.
bool preceq(const Composition& lambda, const Composition& mu, int k);

/// mu_0^{(k)} = (0, ..., n, ..., 0) with n in position k.
Composition min_element(int s, int n, int k);

/// P_i^{(k)}: elements of rank i, in composition order.
std::vector<Composition> rank_slice(int s, int n, int k, int i);

/// P^{(k)} = { mu in Z_{s,n} : mu_k > 0 }, in composition order.
std::vector<Composition> positive_at(int s, int n, int k);

/// tau^{(k)}: P^{(k)} -> Z^0_{s, s+n-1}; adds 1 to every part except k.
Composition tau(const Composition& mu, int k);
Composition tau_inverse(const Composition& nu, int k);

/// phi^{(k)}(mu) = { (i-1)n + mu_i + 1 : i != k }, an (s-1)-subset of [sn].
/// Requires mu_k > 0.
SubsetIdx phi(const Composition& mu, int k, int s, int n);

/// Least color attaining the maximal part. Requires n >= 1.
int color_pi(const Composition& mu);

/// m_{s,n} = n - ceil(n/s).
int m_sn(int s, int n);

/// Q_i = { mu : max part = n - i }, in composition order.
std::vector<Composition> max_part_slice(int s, int n, int i);

/// Phi(mu) = phi^{(pi(mu))}(mu).
SubsetIdx big_phi_lemma1(const Composition& mu, int s, int n);

/// The injection used to bound factor multiplicities: phi^{(k0)} off the
/// set R^{(k0)} = { mu_0^{(l)} : l != k0 }, and on mu_0^{(l)} the set
/// { (i-1)n + 1 : i != k0, l } u { (k0-1)n + 2 }. Needs n >= 2 on R^{(k0)}.
SubsetIdx big_phi_lemma2(const Composition& mu, int k0, int s, int n);

/// Dominance order: every prefix sum of lambda is at most that of mu.
bool dominance_leq(const Partition& lambda, const Partition& mu);

/// True when lambda precedes mu in reverse lexicographic order: the first
/// nonvanishing difference lambda_i - mu_i is positive.
bool reverse_lex_precedes(const Partition& lambda, const Partition& mu);

/// Every lambda inside the (max_part)^length box, stored with exactly
/// `length` parts, sorted so that (max_part, ..., max_part) comes first.
std::vector<Partition> enumerate_partitions_in_box(int max_part, int length);

/// All partitions of d, sorted by reverse lexicographic order ((d) first).
std::vector<Partition> partitions_of(int d);

/// I = { s - lambda_1, s + 1 - lambda_2, ..., s + n - 1 - lambda_n } inside [s+n-1].
SubsetIdx partition_to_rowset(const Partition& lambda, int s, int n);

}  // namespace cdet
