#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace cdet {

/// Strictly increasing subset of [N] = {1, ..., N}, 1-based.
class SubsetIdx {
 public:
  SubsetIdx() = default;
  /// Sorts and validates; throws UsageError on duplicates or out-of-range
  /// elements.
  SubsetIdx(std::vector<int> elements, int universe);
  SubsetIdx(std::initializer_list<int> elements, int universe)
      : SubsetIdx(std::vector<int>(elements), universe) {}

  /// [1, N].
  static SubsetIdx full(int universe);
  /// [lo, hi] inside [N]; empty when lo > hi.
  static SubsetIdx range(int lo, int hi, int universe);

  const std::vector<int>& elements() const { return e_; }
  int universe() const { return n_; }
  std::size_t size() const { return e_.size(); }
  bool empty() const { return e_.empty(); }
  bool contains(int x) const;
  /// |I| = sum of the elements.
  long weight() const;

  bool intersects(const SubsetIdx& o) const;
  SubsetIdx disjoint_union(const SubsetIdx& o) const;
  SubsetIdx complement() const;
  /// Same elements in a larger (or equal) universe.
  SubsetIdx widen(int universe) const;

  /// Lexicographic order: first differing element decides.
  friend std::strong_ordering operator<=>(const SubsetIdx& a, const SubsetIdx& b) { return a.e_ <=> b.e_; }
  friend bool operator==(const SubsetIdx& a, const SubsetIdx& b) { return a.e_ == b.e_; }

  /// "{1,3}".
  std::string str() const;
  /// "1235"-style compact label (digits concatenated), as used in minor names.
  std::string label() const;

 private:
  std::vector<int> e_;
  int n_ = 0;
};

/// All k-element subsets of [N] in increasing lexicographic order.
std::vector<SubsetIdx> subsets_of_size(int universe, int k);

}  // namespace cdet
