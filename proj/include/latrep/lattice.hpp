#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "latrep/errors.hpp"
#include "latrep/poset.hpp"

namespace latrep {

constexpr int kDefaultTableLimit = 4096;

// Finite lattice: a poset together with meet/join tables.  Tables are stored
// in full up to a configured size and recomputed from the order beyond it.
// The factory verifies that every pair has a unique glb/lub.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  static FiniteLattice from_poset(const Poset& p, int table_limit = kDefaultTableLimit) {
    FiniteLattice l;
    l.poset_ = p;
    l.init_bounds();
    bool tabulate = p.n() <= table_limit;
    if (tabulate) {
      l.meet_.resize(static_cast<std::size_t>(p.n()) * p.n());
      l.join_.resize(l.meet_.size());
    }
    for (int x = 0; x < p.n(); ++x)
      for (int y = x; y < p.n(); ++y) {
        int m = l.compute_meet(x, y);
        int j = l.compute_join(x, y);
        if (tabulate) {
          l.tab(l.meet_, x, y) = l.tab(l.meet_, y, x) = static_cast<std::uint16_t>(m);
          l.tab(l.join_, x, y) = l.tab(l.join_, y, x) = static_cast<std::uint16_t>(j);
        }
      }
    return l;
  }

  // Trusts the caller's tables; used by structure-specific builders and by
  // fault-injection fixtures.
  static FiniteLattice from_tables_unchecked(Poset p, std::vector<std::uint16_t> meet,
                                             std::vector<std::uint16_t> join) {
    FiniteLattice l;
    l.poset_ = std::move(p);
    l.meet_ = std::move(meet);
    l.join_ = std::move(join);
    l.init_bounds();
    return l;
  }

  int n() const { return poset_.n(); }
  const Poset& poset() const { return poset_; }
  bool leq(int x, int y) const { return poset_.leq(x, y); }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  int meet(int x, int y) const {
    if (!meet_.empty()) return tab(meet_, x, y);
    return compute_meet(x, y);
  }
  int join(int x, int y) const {
    if (!join_.empty()) return tab(join_, x, y);
    return compute_join(x, y);
  }

  const std::vector<std::uint16_t>& meet_table() const { return meet_; }
  const std::vector<std::uint16_t>& join_table() const { return join_; }

  // x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z) over all triples; computed once, safe to
  // query from shared read-only instances.
  bool is_distributive() const {
    std::call_once(distr_->flag, [&] {
      distr_->distributive = true;
      for (int x = 0; x < n() && distr_->distributive; ++x)
        for (int y = 0; y < n() && distr_->distributive; ++y)
          for (int z = 0; z < n(); ++z) {
            if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) {
              distr_->distributive = false;
              distr_->witness = {x, y, z};
              break;
            }
          }
    });
    return distr_->distributive;
  }
  std::optional<std::array<int, 3>> distributivity_witness() const {
    if (is_distributive()) return std::nullopt;
    return distr_->witness;
  }

 private:
  std::uint16_t& tab(std::vector<std::uint16_t>& t, int x, int y) const {
    return t[static_cast<std::size_t>(x) * n() + y];
  }
  std::uint16_t tab(const std::vector<std::uint16_t>& t, int x, int y) const {
    return t[static_cast<std::size_t>(x) * n() + y];
  }

  void init_bounds() {
    if (poset_.n() == 0) throw NotALattice("empty poset is not a lattice", 0, 0);
    if (poset_.n() > 65535) throw SizeLimitExceeded("lattice too large for 16-bit tables");
    bottom_ = poset_.linear_extension().front();
    top_ = poset_.linear_extension().back();
  }

  // The glb of x,y is the unique maximal element of down(x) ∩ down(y); since
  // the linear extension lists elements bottom-up, that is the last member in
  // extension order, provided it dominates the whole intersection.
  int compute_meet(int x, int y) const {
    Subset common = poset_.down_set(x) & poset_.down_set(y);
    if (common.empty())
      throw NotALattice("pair (" + std::to_string(x) + "," + std::to_string(y) + ") has no lower bound", x, y);
    const auto& ext = poset_.linear_extension();
    for (int i = poset_.n() - 1; i >= 0; --i) {
      int z = ext[i];
      if (!common.test(z)) continue;
      if (common.is_subset_of(poset_.down_set(z))) return z;
      throw NotALattice("pair (" + std::to_string(x) + "," + std::to_string(y) + ") has no unique glb", x, y);
    }
    throw NotALattice("unreachable meet state", x, y);
  }
  int compute_join(int x, int y) const {
    Subset common = poset_.up_set(x) & poset_.up_set(y);
    if (common.empty())
      throw NotALattice("pair (" + std::to_string(x) + "," + std::to_string(y) + ") has no upper bound", x, y);
    const auto& ext = poset_.linear_extension();
    for (int i = 0; i < poset_.n(); ++i) {
      int z = ext[i];
      if (!common.test(z)) continue;
      if (common.is_subset_of(poset_.up_set(z))) return z;
      throw NotALattice("pair (" + std::to_string(x) + "," + std::to_string(y) + ") has no unique lub", x, y);
    }
    throw NotALattice("unreachable join state", x, y);
  }

  struct DistributivityCache {
    std::once_flag flag;
    bool distributive = false;
    std::array<int, 3> witness{};
  };

  Poset poset_;
  int bottom_ = 0, top_ = 0;
  std::vector<std::uint16_t> meet_, join_;
  // shared across copies of the same lattice value
  std::shared_ptr<DistributivityCache> distr_ = std::make_shared<DistributivityCache>();
};

inline FiniteLattice lattice_from_poset(const Poset& p, int table_limit = kDefaultTableLimit) {
  return FiniteLattice::from_poset(p, table_limit);
}

// Elements with exactly one lower cover.  Cross-checked against the
// join-reducibility definition (x = a ∨ b with a,b < x); a mismatch would be
// a structural bug, not a property failure, hence the hard error.
inline Subset join_irreducibles(const FiniteLattice& l) {
  const Poset& p = l.poset();
  Subset by_cover(l.n());
  for (int x = 0; x < l.n(); ++x)
    if (p.lower_covers_of(x).size() == 1) by_cover.set(x);
  Subset by_join(l.n());
  for (int x = 0; x < l.n(); ++x) {
    if (x == l.bottom()) continue;
    bool reducible = false;
    Subset below = p.strict_down(x);
    auto mem = below.members();
    for (std::size_t i = 0; i < mem.size() && !reducible; ++i)
      for (std::size_t j = i + 1; j < mem.size(); ++j)
        if (l.join(mem[i], mem[j]) == x) {
          reducible = true;
          break;
        }
    if (!reducible) by_join.set(x);
  }
  if (!(by_cover == by_join))
    throw std::logic_error("join-irreducibility characterizations disagree on " +
                           (by_cover ^ by_join).to_string());
  return by_cover;
}

inline Subset meet_irreducibles(const FiniteLattice& l) {
  const Poset& p = l.poset();
  Subset by_cover(l.n());
  for (int x = 0; x < l.n(); ++x)
    if (p.upper_covers_of(x).size() == 1) by_cover.set(x);
  Subset by_meet(l.n());
  for (int x = 0; x < l.n(); ++x) {
    if (x == l.top()) continue;
    bool reducible = false;
    auto mem = p.strict_up(x).members();
    for (std::size_t i = 0; i < mem.size() && !reducible; ++i)
      for (std::size_t j = i + 1; j < mem.size(); ++j)
        if (l.meet(mem[i], mem[j]) == x) {
          reducible = true;
          break;
        }
    if (!reducible) by_meet.set(x);
  }
  if (!(by_cover == by_meet))
    throw std::logic_error("meet-irreducibility characterizations disagree on " +
                           (by_cover ^ by_meet).to_string());
  return by_cover;
}

struct RankInfo {
  bool graded = false;
  std::vector<int> rank;  // longest chain from bottom
};

// graded = every cover raises the longest-chain rank by exactly one, which is
// equivalent to all saturated chains between comparable pairs having equal
// length.
inline RankInfo rank_info(const FiniteLattice& l) {
  const Poset& p = l.poset();
  RankInfo info;
  info.rank.assign(l.n(), 0);
  for (int x : p.linear_extension())
    for (int y : p.lower_covers_of(x))
      info.rank[x] = std::max(info.rank[x], info.rank[y] + 1);
  info.graded = true;
  for (auto [a, b] : p.covers())
    if (info.rank[b] != info.rank[a] + 1) {
      info.graded = false;
      break;
    }
  return info;
}

// The lattice of order ideals of p, ordered by inclusion, with meet = ∩ and
// join = ∪.  Always distributive.
inline FiniteLattice ideal_lattice(const Poset& p, std::size_t bound = kDefaultIdealBound) {
  std::vector<Subset> ideals = order_ideals(p, bound);
  int m = static_cast<int>(ideals.size());
  if (m > 65535) throw SizeLimitExceeded("ideal lattice too large for tables");
  std::unordered_map<Subset, int, SubsetHash> index;
  index.reserve(ideals.size());
  for (int i = 0; i < m; ++i) index.emplace(ideals[i], i);
  std::vector<Subset> up(m, Subset(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (ideals[i].is_subset_of(ideals[j])) up[i].set(j);
  Poset ideal_poset = Poset::from_closure_unchecked(std::move(up));
  std::vector<std::string> labels;
  labels.reserve(ideals.size());
  for (const Subset& s : ideals) labels.push_back(s.to_string());
  ideal_poset.set_labels(std::move(labels));
  std::vector<std::uint16_t> meet(static_cast<std::size_t>(m) * m), join(meet.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto mi = index.find(ideals[i] & ideals[j]);
      auto ji = index.find(ideals[i] | ideals[j]);
      if (mi == index.end() || ji == index.end())
        throw std::logic_error("ideal family not closed under union/intersection");
      meet[static_cast<std::size_t>(i) * m + j] = static_cast<std::uint16_t>(mi->second);
      join[static_cast<std::size_t>(i) * m + j] = static_cast<std::uint16_t>(ji->second);
    }
  return FiniteLattice::from_tables_unchecked(std::move(ideal_poset), std::move(meet), std::move(join));
}

struct JoinIrreduciblePoset {
  std::vector<int> carrier;  // lattice indices of the join-irreducibles
  Poset poset;               // induced order on the carrier
};

inline JoinIrreduciblePoset j_poset(const FiniteLattice& l) {
  JoinIrreduciblePoset jp;
  jp.carrier = join_irreducibles(l).members();
  jp.poset = l.poset().induced(jp.carrier);
  return jp;
}

// The set of join-irreducibles below x, as a subset of jp.carrier indices.
inline Subset birkhoff_map(const FiniteLattice& l, const JoinIrreduciblePoset& jp, int x) {
  if (!l.is_distributive()) throw NotDistributive("birkhoff_map requires a distributive lattice");
  Subset s(static_cast<int>(jp.carrier.size()));
  for (int i = 0; i < static_cast<int>(jp.carrier.size()); ++i)
    if (l.leq(jp.carrier[i], x)) s.set(i);
  return s;
}

inline Subset birkhoff_map(const FiniteLattice& l, int x) { return birkhoff_map(l, j_poset(l), x); }

struct IsoReport {
  bool holds = false;
  int lattice_size = 0;
  int ideal_count = 0;
  std::string witness;  // first failure, empty when holds
};

// Checks that x ↦ {join-irreducible j ≤ x} is a lattice isomorphism onto the
// order ideals of the join-irreducible subposet, with meet ↦ ∩, join ↦ ∪,
// and inverse "join of the ideal's members".
inline IsoReport birkhoff_iso_check(const FiniteLattice& l, std::size_t ideal_bound = kDefaultIdealBound) {
  if (!l.is_distributive()) throw NotDistributive("birkhoff_iso_check requires a distributive lattice");
  IsoReport rep;
  rep.lattice_size = l.n();
  JoinIrreduciblePoset jp = j_poset(l);
  std::vector<Subset> ideals = order_ideals(jp.poset, ideal_bound);
  rep.ideal_count = static_cast<int>(ideals.size());
  std::unordered_map<Subset, int, SubsetHash> index;
  for (int i = 0; i < rep.ideal_count; ++i) index.emplace(ideals[i], i);

  std::vector<Subset> image;
  image.reserve(l.n());
  std::vector<char> hit(ideals.size(), 0);
  for (int x = 0; x < l.n(); ++x) {
    Subset bx = birkhoff_map(l, jp, x);
    if (!is_order_ideal(jp.poset, bx)) {
      rep.witness = "image of " + std::to_string(x) + " is not down-closed";
      return rep;
    }
    auto it = index.find(bx);
    if (it == index.end()) {
      rep.witness = "image of " + std::to_string(x) + " missing from ideal list";
      return rep;
    }
    if (hit[it->second]) {
      rep.witness = "map is not injective at " + std::to_string(x);
      return rep;
    }
    hit[it->second] = 1;
    image.push_back(bx);
  }
  if (rep.lattice_size != rep.ideal_count) {
    rep.witness = "element count " + std::to_string(rep.lattice_size) + " != ideal count " +
                  std::to_string(rep.ideal_count);
    return rep;
  }
  for (int x = 0; x < l.n(); ++x)
    for (int y = 0; y < l.n(); ++y) {
      if (!(birkhoff_map(l, jp, l.meet(x, y)) == (image[x] & image[y]))) {
        rep.witness = "meet not preserved at (" + std::to_string(x) + "," + std::to_string(y) + ")";
        return rep;
      }
      if (!(birkhoff_map(l, jp, l.join(x, y)) == (image[x] | image[y]))) {
        rep.witness = "join not preserved at (" + std::to_string(x) + "," + std::to_string(y) + ")";
        return rep;
      }
    }
  // Inverse direction: the join of an ideal's members maps back onto it.
  for (const Subset& ideal : ideals) {
    int acc = l.bottom();
    for (int i = ideal.first(); i >= 0; i = ideal.next(i)) acc = l.join(acc, jp.carrier[i]);
    if (!(birkhoff_map(l, jp, acc) == ideal)) {
      rep.witness = "inverse fails on ideal " + ideal.to_string();
      return rep;
    }
  }
  rep.holds = true;
  return rep;
}

}  // namespace latrep
