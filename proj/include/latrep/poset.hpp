#pragma once

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "latrep/errors.hpp"
#include "latrep/subset.hpp"

namespace latrep {

using CoverPair = std::pair<int, int>;  // (lower, upper)

// Finite poset.  Stores the full order relation as per-element up/down sets
// plus the cover relation (transitive reduction).  Immutable after
// construction; safe to share read-only.
class Poset {
 public:
  Poset() = default;

  int n() const { return n_; }
  bool leq(int x, int y) const { return up_[x].test(y); }
  bool lt(int x, int y) const { return x != y && leq(x, y); }

  const Subset& up_set(int x) const { return up_[x]; }
  const Subset& down_set(int x) const { return down_[x]; }
  Subset strict_up(int x) const {
    Subset s = up_[x];
    s.reset(x);
    return s;
  }
  Subset strict_down(int x) const {
    Subset s = down_[x];
    s.reset(x);
    return s;
  }

  const std::vector<CoverPair>& covers() const { return covers_; }
  const std::vector<int>& upper_covers_of(int x) const { return up_adj_[x]; }
  const std::vector<int>& lower_covers_of(int x) const { return down_adj_[x]; }

  // A linear extension: sorted by |down_set|, ties by index.
  const std::vector<int>& linear_extension() const { return topo_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int x) const { return labels_.empty() ? std::to_string(x) : labels_[x]; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
      throw Error("labels size does not match element count");
    labels_ = std::move(labels);
  }

  std::vector<int> minimal_elements() const {
    std::vector<int> out;
    for (int x = 0; x < n_; ++x)
      if (down_adj_[x].empty()) out.push_back(x);
    return out;
  }
  std::vector<int> maximal_elements() const {
    std::vector<int> out;
    for (int x = 0; x < n_; ++x)
      if (up_adj_[x].empty()) out.push_back(x);
    return out;
  }

  Poset dual() const {
    std::vector<Subset> up = down_;
    Poset d = from_closure_unchecked(std::move(up));
    d.labels_ = labels_;
    return d;
  }

  // Subposet on the given carrier, in carrier order.
  Poset induced(const std::vector<int>& carrier) const {
    int m = static_cast<int>(carrier.size());
    std::vector<Subset> up(m, Subset(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (leq(carrier[i], carrier[j])) up[i].set(j);
    Poset p = from_closure_unchecked(std::move(up));
    std::vector<std::string> labels;
    labels.reserve(carrier.size());
    for (int c : carrier) labels.push_back(label(c));
    p.labels_ = std::move(labels);
    return p;
  }

  // Builds a poset from up-sets that are already known to be a valid order
  // (reflexive, antisymmetric, transitive).  Derives covers and indexes.
  static Poset from_closure_unchecked(std::vector<Subset> up) {
    Poset p;
    p.n_ = static_cast<int>(up.size());
    p.up_ = std::move(up);
    p.finish();
    return p;
  }

 private:
  void finish() {
    down_.assign(n_, Subset(n_));
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (up_[x].test(y)) down_[y].set(x);
    // Transitive reduction: x -< y iff nothing sits strictly between.
    covers_.clear();
    up_adj_.assign(n_, {});
    down_adj_.assign(n_, {});
    for (int x = 0; x < n_; ++x) {
      Subset sup = strict_up(x);
      for (int y = sup.first(); y >= 0; y = sup.next(y)) {
        Subset between = sup & strict_down(y);
        if (between.empty()) covers_.emplace_back(x, y);
      }
    }
    std::sort(covers_.begin(), covers_.end());
    for (auto [a, b] : covers_) {
      up_adj_[a].push_back(b);
      down_adj_[b].push_back(a);
    }
    topo_.resize(n_);
    for (int i = 0; i < n_; ++i) topo_[i] = i;
    std::vector<int> depth(n_);
    for (int i = 0; i < n_; ++i) depth[i] = down_[i].count();
    std::stable_sort(topo_.begin(), topo_.end(), [&](int a, int b) { return depth[a] < depth[b]; });
  }

  int n_ = 0;
  std::vector<Subset> up_, down_;
  std::vector<CoverPair> covers_;
  std::vector<std::vector<int>> up_adj_, down_adj_;
  std::vector<int> topo_;
  std::vector<std::string> labels_;
};

// Builds the poset whose order is the reflexive-transitive closure of the
// given cover pairs; throws CycleDetected if the closure is not antisymmetric.
inline Poset poset_from_covers(int n, const std::vector<CoverPair>& covers,
                               std::vector<std::string> labels = {}) {
  std::vector<std::vector<int>> adj(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw Error("cover pair references an index out of range");
    if (a == b) throw CycleDetected("self-loop in covers at " + std::to_string(a));
    adj[a].push_back(b);
    ++indeg[b];
  }
  // Kahn's algorithm; leftovers mean a cycle (antisymmetry failure).
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> deg = indeg;
  std::priority_queue<int, std::vector<int>, std::greater<int>> q;
  for (int i = 0; i < n; ++i)
    if (deg[i] == 0) q.push(i);
  while (!q.empty()) {
    int x = q.top();
    q.pop();
    order.push_back(x);
    for (int y : adj[x])
      if (--deg[y] == 0) q.push(y);
  }
  if (static_cast<int>(order.size()) != n)
    throw CycleDetected("cover relation closes into a cycle");
  std::vector<Subset> up(n, Subset(n));
  for (int i = n - 1; i >= 0; --i) {
    int x = order[i];
    up[x].set(x);
    for (int y : adj[x]) up[x] = up[x] | up[y];
  }
  Poset p = Poset::from_closure_unchecked(std::move(up));
  p.set_labels(std::move(labels));
  return p;
}

// Builds a poset from an arbitrary relation, verifying the order axioms.
template <class LeqFn>
Poset poset_from_leq(int n, LeqFn leq, std::vector<std::string> labels = {}) {
  std::vector<Subset> up(n, Subset(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (leq(x, y)) up[x].set(y);
  for (int x = 0; x < n; ++x) {
    if (!up[x].test(x)) throw Error("relation is not reflexive at " + std::to_string(x));
    for (int y = up[x].first(); y >= 0; y = up[x].next(y)) {
      if (y != x && up[y].test(x))
        throw CycleDetected("relation is not antisymmetric on (" + std::to_string(x) + "," + std::to_string(y) + ")");
      if (!up[y].is_subset_of(up[x]))
        throw Error("relation is not transitive at (" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  }
  Poset p = Poset::from_closure_unchecked(std::move(up));
  p.set_labels(std::move(labels));
  return p;
}

inline bool is_order_ideal(const Poset& p, const Subset& s) {
  for (int x = s.first(); x >= 0; x = s.next(x))
    if (!p.down_set(x).is_subset_of(s)) return false;
  return true;
}

inline bool is_order_filter(const Poset& p, const Subset& s) {
  for (int x = s.first(); x >= 0; x = s.next(x))
    if (!p.up_set(x).is_subset_of(s)) return false;
  return true;
}

constexpr std::size_t kDefaultIdealBound = std::size_t{1} << 20;

// All order ideals (down-closed subsets) of p, in canonical order (cardinality
// then member-lex).  Enumerates by BFS over the ideal lattice's cover graph:
// start from the empty ideal and add one eligible element at a time.
inline std::vector<Subset> order_ideals(const Poset& p, std::size_t bound = kDefaultIdealBound) {
  std::unordered_set<Subset, SubsetHash> seen;
  std::vector<Subset> out;
  std::queue<Subset> work;
  Subset empty(p.n());
  seen.insert(empty);
  work.push(empty);
  while (!work.empty()) {
    Subset cur = work.front();
    work.pop();
    out.push_back(cur);
    if (out.size() > bound)
      throw SizeLimitExceeded("order ideal enumeration exceeds bound " + std::to_string(bound));
    for (int x = 0; x < p.n(); ++x) {
      if (cur.test(x)) continue;
      if (!p.strict_down(x).is_subset_of(cur)) continue;
      Subset nxt = cur;
      nxt.set(x);
      if (seen.insert(nxt).second) work.push(nxt);
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

inline std::vector<Subset> order_filters(const Poset& p, std::size_t bound = kDefaultIdealBound) {
  std::vector<Subset> out = order_ideals(p.dual(), bound);
  return out;
}

// Size of a maximum antichain, via Dilworth's theorem: a minimum chain
// partition corresponds to a maximum matching in the bipartite graph of
// strict comparabilities.
inline int width(const Poset& p) {
  int n = p.n();
  std::vector<std::vector<int>> adj(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.lt(x, y)) adj[x].push_back(y);
  std::vector<int> match_right(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> try_kuhn = [&](int v) -> bool {
    for (int to : adj[v]) {
      if (used[to]) continue;
      used[to] = 1;
      if (match_right[to] < 0 || try_kuhn(match_right[to])) {
        match_right[to] = v;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int v = 0; v < n; ++v) {
    std::fill(used.begin(), used.end(), 0);
    if (try_kuhn(v)) ++matched;
  }
  return n - matched;
}

}  // namespace latrep
