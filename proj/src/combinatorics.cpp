#include "cdet/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "cdet/errors.hpp"

namespace cdet {

namespace {

std::string join_parts(const std::vector<int>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

std::vector<int> parse_int_list(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') s += c;
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    int v = 0;
    const char* b = s.data() + pos;
    const char* e = s.data() + comma;
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e) throw UsageError("cannot parse integer list '" + std::string(text) + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

void check_color(const Composition& mu, int k) {
  if (k < 1 || k > mu.length()) {
    throw UsageError("color " + std::to_string(k) + " outside [1, " + std::to_string(mu.length()) + "]");
  }
}

void check_shape(const Composition& mu, int s, int n) {
  if (mu.length() != s) throw UsageError("composition " + mu.str() + " does not have " + std::to_string(s) + " parts");
  if (mu.weight() != n) throw UsageError("composition " + mu.str() + " is not in Z_{s," + std::to_string(n) + "}");
}

// phi^{(k)} formula without the mu_k > 0 requirement (also used on P_n^{(k)}).
SubsetIdx phi_formula(const Composition& mu, int k, int s, int n) {
  std::vector<int> e;
  for (int i = 1; i <= s; ++i) {
    if (i == k) continue;
    e.push_back((i - 1) * n + mu.at(i) + 1);
  }
  return SubsetIdx(std::move(e), s * n);
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw UsageError("composition has a negative part");
}

int Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Composition::at(int k) const {
  check_color(*this, k);
  return parts_[static_cast<std::size_t>(k - 1)];
}

bool Composition::all_positive() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p > 0; });
}

bool operator<(const Composition& a, const Composition& b) {
  const std::size_t len = std::min(a.parts_.size(), b.parts_.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (a.parts_[i] != b.parts_[i]) return a.parts_[i] > b.parts_[i];
  }
  return a.parts_.size() < b.parts_.size();
}

std::string Composition::str() const { return join_parts(parts_); }

Composition Composition::parse(std::string_view text) { return Composition(parse_int_list(text)); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw UsageError("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw UsageError("partition parts must be weakly decreasing");
  }
}

std::vector<int> Partition::trimmed() const {
  std::vector<int> t(parts_);
  while (!t.empty() && t.back() == 0) t.pop_back();
  return t;
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::length() const { return static_cast<int>(trimmed().size()); }

int Partition::part(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > parts_.size()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  const int first = parts_.empty() ? 0 : parts_.front();
  for (int j = 1; j <= first; ++j) {
    c.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [j](int p) { return p >= j; })));
  }
  return Partition(std::move(c));
}

Partition Partition::padded(int len) const {
  std::vector<int> t = trimmed();
  if (static_cast<int>(t.size()) > len) throw UsageError("partition " + str() + " longer than " + std::to_string(len));
  t.resize(static_cast<std::size_t>(len), 0);
  return Partition(std::move(t));
}

std::string Partition::str() const { return join_parts(parts_); }

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts = parse_int_list(text);
  return Partition(std::move(parts));
}

std::vector<Composition> enumerate_Z(int s, int n, bool strict) {
  if (s < 1 || n < 0) throw UsageError("enumerate_Z needs s >= 1 and n >= 0");
  std::vector<Composition> out;
  if (strict && n < s) return out;
  const int lo = strict ? 1 : 0;
  std::vector<int> cur(static_cast<std::size_t>(s), 0);
  // Depth-first with larger leading parts first yields the composition order.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == s - 1) {
      if (remaining < lo) return;
      cur[static_cast<std::size_t>(pos)] = remaining;
      out.emplace_back(cur);
      return;
    }
    const int reserve = lo * (s - 1 - pos);
    for (int v = remaining - reserve; v >= lo; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

SubsetIdx iota(const Composition& mu, int s, int n) {
  if (mu.length() != s) throw UsageError("iota: composition " + mu.str() + " does not have " + std::to_string(s) + " parts");
  std::vector<int> e;
  for (int i = 1; i <= s; ++i) {
    const int p = mu.at(i);
    if (p > n) throw UsageError("iota: part " + std::to_string(p) + " exceeds n = " + std::to_string(n));
    for (int j = 1; j <= p; ++j) e.push_back((i - 1) * n + j);
  }
  return SubsetIdx(std::move(e), s * n);
}

int epsilon(const SubsetIdx& I, const SubsetIdx& J) {
  if (I.intersects(J)) return 0;
  long inversions = 0;
  for (int i : I.elements())
    for (int j : J.elements())
      if (i > j) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

int rank(const Composition& mu, int k) { return mu.weight() - mu.at(k); }

bool preceq(const Composition& lambda, const Composition& mu, int k) {
  if (lambda.length() != mu.length() || lambda.weight() != mu.weight()) {
    throw UsageError("preceq: compositions from different Z_{s,n}");
  }
  check_color(mu, k);
  for (int i = 1; i <= mu.length(); ++i) {
    if (i != k && lambda.at(i) > mu.at(i)) return false;
  }
  return true;
}

Composition min_element(int s, int n, int k) {
  if (k < 1 || k > s) throw UsageError("color out of range");
  std::vector<int> p(static_cast<std::size_t>(s), 0);
  p[static_cast<std::size_t>(k - 1)] = n;
  return Composition(std::move(p));
}

std::vector<Composition> rank_slice(int s, int n, int k, int i) {
  std::vector<Composition> out;
  for (auto& mu : enumerate_Z(s, n, false))
    if (rank(mu, k) == i) out.push_back(mu);
  return out;
}

std::vector<Composition> positive_at(int s, int n, int k) {
  std::vector<Composition> out;
  for (auto& mu : enumerate_Z(s, n, false))
    if (mu.at(k) > 0) out.push_back(mu);
  return out;
}

Composition tau(const Composition& mu, int k) {
  if (mu.at(k) == 0) throw DomainError("tau: " + mu.str() + " has zero part at color " + std::to_string(k));
  std::vector<int> p(mu.parts());
  for (int i = 1; i <= mu.length(); ++i)
    if (i != k) ++p[static_cast<std::size_t>(i - 1)];
  return Composition(std::move(p));
}

Composition tau_inverse(const Composition& nu, int k) {
  check_color(nu, k);
  if (!nu.all_positive()) throw DomainError("tau_inverse: " + nu.str() + " is not a strict composition");
  std::vector<int> p(nu.parts());
  for (int i = 1; i <= nu.length(); ++i)
    if (i != k) --p[static_cast<std::size_t>(i - 1)];
  return Composition(std::move(p));
}

SubsetIdx phi(const Composition& mu, int k, int s, int n) {
  check_shape(mu, s, n);
  if (mu.at(k) == 0) throw DomainError("phi: " + mu.str() + " has zero part at color " + std::to_string(k));
  return phi_formula(mu, k, s, n);
}

int color_pi(const Composition& mu) {
  if (mu.weight() == 0) throw DomainError("color_pi needs n >= 1");
  const auto& p = mu.parts();
  return static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin()) + 1;
}

int m_sn(int s, int n) {
  if (s < 1 || n < 0) throw UsageError("m_sn needs s >= 1, n >= 0");
  return n - (n + s - 1) / s;
}

std::vector<Composition> max_part_slice(int s, int n, int i) {
  std::vector<Composition> out;
  for (auto& mu : enumerate_Z(s, n, false)) {
    const auto& p = mu.parts();
    if (*std::max_element(p.begin(), p.end()) == n - i) out.push_back(mu);
  }
  return out;
}

SubsetIdx big_phi_lemma1(const Composition& mu, int s, int n) {
  check_shape(mu, s, n);
  return phi(mu, color_pi(mu), s, n);
}

SubsetIdx big_phi_lemma2(const Composition& mu, int k0, int s, int n) {
  check_shape(mu, s, n);
  check_color(mu, k0);
  if (mu.at(k0) > 0) return phi_formula(mu, k0, s, n);
  for (int l = 1; l <= s; ++l) {
    if (l == k0 || mu != min_element(s, n, l)) continue;
    if (n < 2) throw DomainError("big_phi_lemma2 on R^{(k0)} needs n >= 2");
    std::vector<int> e;
    for (int i = 1; i <= s; ++i)
      if (i != k0 && i != l) e.push_back((i - 1) * n + 1);
    e.push_back((k0 - 1) * n + 2);
    return SubsetIdx(std::move(e), s * n);
  }
  return phi_formula(mu, k0, s, n);
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  const int len = std::max(lambda.length(), mu.length());
  int a = 0, b = 0;
  for (int i = 1; i <= len; ++i) {
    a += lambda.part(i);
    b += mu.part(i);
    if (a > b) return false;
  }
  return true;
}

bool reverse_lex_precedes(const Partition& lambda, const Partition& mu) {
  const int len = std::max(static_cast<int>(lambda.parts().size()), static_cast<int>(mu.parts().size()));
  for (int i = 1; i <= len; ++i) {
    const int d = lambda.part(i) - mu.part(i);
    if (d != 0) return d > 0;
  }
  return false;
}

std::vector<Partition> enumerate_partitions_in_box(int max_part, int length) {
  if (max_part < 0 || length < 0) throw UsageError("box dimensions must be non-negative");
  std::vector<Partition> out;
  std::vector<int> cur(static_cast<std::size_t>(length), 0);
  auto rec = [&](auto&& self, int pos, int cap) -> void {
    if (pos == length) {
      out.emplace_back(cur);
      return;
    }
    for (int v = cap; v >= 0; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, max_part);
  return out;
}

std::vector<Partition> partitions_of(int d) {
  if (d < 0) throw UsageError("partitions_of needs d >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int v = std::min(cap, remaining); v >= 1; --v) {
      cur.push_back(v);
      self(self, remaining - v, v);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

SubsetIdx partition_to_rowset(const Partition& lambda, int s, int n) {
  if (lambda.length() > n) throw DomainError("partition " + lambda.str() + " has more than n parts");
  if (lambda.part(1) > s - 1) throw DomainError("partition " + lambda.str() + " exceeds the (s-1)^n box");
  std::vector<int> e;
  for (int i = 1; i <= n; ++i) e.push_back(s + i - 1 - lambda.part(i));
  return SubsetIdx(std::move(e), s + n - 1);
}

}  // namespace cdet
