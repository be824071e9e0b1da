#include "cdet/subset.hpp"

#include <algorithm>
#include <numeric>

#include "cdet/errors.hpp"

namespace cdet {

SubsetIdx::SubsetIdx(std::vector<int> elements, int universe) : e_(std::move(elements)), n_(universe) {
  std::sort(e_.begin(), e_.end());
  if (std::adjacent_find(e_.begin(), e_.end()) != e_.end()) throw UsageError("subset has repeated elements");
  if (!e_.empty() && (e_.front() < 1 || e_.back() > n_)) {
    throw UsageError("subset element outside [1, " + std::to_string(n_) + "]");
  }
}

SubsetIdx SubsetIdx::full(int universe) { return range(1, universe, universe); }

SubsetIdx SubsetIdx::range(int lo, int hi, int universe) {
  std::vector<int> e;
  for (int i = lo; i <= hi; ++i) e.push_back(i);
  return SubsetIdx(std::move(e), universe);
}

bool SubsetIdx::contains(int x) const { return std::binary_search(e_.begin(), e_.end(), x); }

long SubsetIdx::weight() const { return std::accumulate(e_.begin(), e_.end(), 0L); }

bool SubsetIdx::intersects(const SubsetIdx& o) const {
  std::size_t i = 0, j = 0;
  while (i < e_.size() && j < o.e_.size()) {
    if (e_[i] == o.e_[j]) return true;
    if (e_[i] < o.e_[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

SubsetIdx SubsetIdx::disjoint_union(const SubsetIdx& o) const {
  if (intersects(o)) throw UsageError("disjoint union of intersecting sets " + str() + ", " + o.str());
  std::vector<int> e(e_);
  e.insert(e.end(), o.e_.begin(), o.e_.end());
  return SubsetIdx(std::move(e), std::max(n_, o.n_));
}

SubsetIdx SubsetIdx::complement() const {
  std::vector<int> e;
  for (int i = 1; i <= n_; ++i)
    if (!contains(i)) e.push_back(i);
  return SubsetIdx(std::move(e), n_);
}

SubsetIdx SubsetIdx::widen(int universe) const { return SubsetIdx(e_, universe); }

std::string SubsetIdx::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(e_[i]);
  }
  return out + "}";
}

std::string SubsetIdx::label() const {
  std::string out;
  for (int x : e_) out += std::to_string(x);
  return out;
}

std::vector<SubsetIdx> subsets_of_size(int universe, int k) {
  std::vector<SubsetIdx> out;
  if (k < 0 || k > universe) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.emplace_back(cur, universe);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == universe - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j) - 1] + 1;
  }
  return out;
}

}  // namespace cdet
