#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "latrep/lazy.hpp"
#include "latrep/window.hpp"

namespace latrep {

// The finite-symmetric-difference representation.  Order ideals of the prime
// poset are finitely presented: symbolic per-family data plus a finite delta.
// Two descriptors lie in the same connected component of the ideal graph
// exactly when their symmetric difference is finite.

// ---------------------------------------------------------------------------
// Grid ideals: one level per chain family, in {-inf} ∪ ℤ ∪ {+inf}.  A level v
// selects the thresholds <= v of that family, so every level vector is an
// order ideal and every ideal arises this way.
struct GridLevel {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  Coord value = 0;  // meaningful only when Finite

  static GridLevel neg_inf() { return {Kind::NegInf, 0}; }
  static GridLevel finite(Coord v) { return {Kind::Finite, v}; }
  static GridLevel pos_inf() { return {Kind::PosInf, 0}; }

  bool operator==(const GridLevel&) const = default;
  bool covers_threshold(Coord t) const {
    switch (kind) {
      case Kind::NegInf: return false;
      case Kind::Finite: return t <= value;
      case Kind::PosInf: return true;
    }
    return false;
  }
  // NegInf < Finite(v) < PosInf, Finite by value.
  bool operator<(const GridLevel& o) const {
    auto key = [](const GridLevel& l) { return l.kind == Kind::NegInf ? -1 : l.kind == Kind::PosInf ? 1 : 0; };
    if (key(*this) != key(o)) return key(*this) < key(o);
    return kind == Kind::Finite && value < o.value;
  }
  std::string to_string() const {
    switch (kind) {
      case Kind::NegInf: return "-inf";
      case Kind::Finite: return std::to_string(value);
      case Kind::PosInf: return "+inf";
    }
    return "?";
  }
};

struct GridIdeal {
  std::vector<GridLevel> levels;
  bool operator==(const GridIdeal&) const = default;
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (i) s += ',';
      s += levels[i].to_string();
    }
    return s + ")";
  }
};

// Bounded-below families index their thresholds from 1, so a level below 0 or
// -inf means the empty family and is normalized to 0.
inline GridIdeal normalize_grid_ideal(const GridLattice& lat, GridIdeal q) {
  if (static_cast<int>(q.levels.size()) != lat.dims())
    throw Error(lat.name() + ": descriptor has wrong family count");
  if (lat.bounded_below())
    for (GridLevel& l : q.levels)
      if (l.kind == GridLevel::Kind::NegInf || (l.kind == GridLevel::Kind::Finite && l.value < 0))
        l = GridLevel::finite(0);
  return q;
}

inline GridIdeal phi_descriptor(const GridLattice& lat, const Tuple& x) {
  lat.require_element(x);
  GridIdeal q;
  q.levels.reserve(x.size());
  for (Coord c : x) q.levels.push_back(GridLevel::finite(c));
  return q;
}

inline bool ideal_contains(const GridIdeal& q, const GridLattice::prime_type& p) {
  return q.levels[p.axis].covers_threshold(p.threshold);
}

inline bool in_dp(const GridLattice& lat, const GridIdeal& a0, const GridIdeal& b0) {
  GridIdeal a = normalize_grid_ideal(lat, a0), b = normalize_grid_ideal(lat, b0);
  for (int i = 0; i < lat.dims(); ++i) {
    const GridLevel &x = a.levels[i], &y = b.levels[i];
    bool both_finite = x.kind == GridLevel::Kind::Finite && y.kind == GridLevel::Kind::Finite;
    if (!both_finite && !(x == y)) return false;
  }
  return true;
}

inline GridIdeal dp_meet(const GridLattice& lat, const GridIdeal& a0, const GridIdeal& b0) {
  GridIdeal a = normalize_grid_ideal(lat, a0), b = normalize_grid_ideal(lat, b0);
  GridIdeal r;
  for (int i = 0; i < lat.dims(); ++i) r.levels.push_back(std::min(a.levels[i], b.levels[i]));
  return r;
}

inline GridIdeal dp_join(const GridLattice& lat, const GridIdeal& a0, const GridIdeal& b0) {
  GridIdeal a = normalize_grid_ideal(lat, a0), b = normalize_grid_ideal(lat, b0);
  GridIdeal r;
  for (int i = 0; i < lat.dims(); ++i) r.levels.push_back(std::max(a.levels[i], b.levels[i]));
  return r;
}

// Primes in a △ b, by family then by threshold; requires in_dp.
inline std::vector<GridLattice::prime_type> sym_diff_primes(const GridLattice& lat, const GridIdeal& a0,
                                                            const GridIdeal& b0) {
  if (!in_dp(lat, a0, b0))
    throw Error(lat.name() + ": symmetric difference is not finite");
  GridIdeal a = normalize_grid_ideal(lat, a0), b = normalize_grid_ideal(lat, b0);
  std::vector<GridLattice::prime_type> out;
  for (int i = 0; i < lat.dims(); ++i) {
    if (a.levels[i] == b.levels[i]) continue;
    Coord lo = std::min(a.levels[i].value, b.levels[i].value);
    Coord hi = std::max(a.levels[i].value, b.levels[i].value);
    for (Coord t = lo + 1; t <= hi; ++t) out.push_back({i, t});
  }
  return out;
}

// Folds a finite toggle set into a base descriptor; the result must stay a
// prefix in every family.
inline GridIdeal apply_delta(const GridLattice& lat, const GridIdeal& base0,
                             const std::vector<GridLattice::prime_type>& delta) {
  GridIdeal q = normalize_grid_ideal(lat, base0);
  std::vector<std::vector<Coord>> per_axis(lat.dims());
  for (const auto& p : delta) {
    lat.require_prime(p);
    per_axis[p.axis].push_back(p.threshold);
  }
  for (int i = 0; i < lat.dims(); ++i) {
    auto& d = per_axis[i];
    if (d.empty()) continue;
    std::sort(d.begin(), d.end());
    if (std::adjacent_find(d.begin(), d.end()) != d.end())
      throw Error(lat.name() + ": duplicate prime in delta");
    GridLevel lvl = q.levels[i];
    if (lvl.kind != GridLevel::Kind::Finite)
      throw NotAnIdeal(lat.name() + ": toggling a family at " + lvl.to_string() + " breaks down-closure");
    auto member = [&](Coord t) {
      return lvl.covers_threshold(t) != std::binary_search(d.begin(), d.end(), t);
    };
    // Everything below the scan range keeps the base prefix; the scan must
    // show a single true->false transition.
    Coord lo = std::min(lvl.value, d.front() - 1);
    Coord hi = std::max(lvl.value, d.back()) + 1;
    Coord start = lat.bounded_below() ? std::max<Coord>(lo, 1) : lo;
    Coord new_level = lat.bounded_below() ? std::max<Coord>(lo, 0) : lo;
    bool seen_false = false;
    for (Coord t = start; t <= hi; ++t) {
      if (member(t)) {
        if (seen_false)
          throw NotAnIdeal(lat.name() + ": delta leaves a gap in family " + std::to_string(i));
        new_level = t;
      } else {
        seen_false = true;
      }
    }
    q.levels[i] = GridLevel::finite(new_level);
  }
  return normalize_grid_ideal(lat, q);
}

// ---------------------------------------------------------------------------
// 𝔹_fin ideals: the prime poset is an antichain, so ideals are arbitrary
// subsets of ℕ.  Bases: finite, cofinite, or an eventually periodic pattern
// (the middle components); delta is a finite toggle set.
struct BFinIdeal {
  enum class Base { Finite, Cofinite, Periodic };
  Base base = Base::Finite;
  Coord modulus = 0;            // Periodic only
  std::vector<Coord> residues;  // Periodic only; sorted, in [0, modulus)
  std::vector<Coord> delta;     // sorted distinct indices toggled against the base

  bool operator==(const BFinIdeal&) const = default;

  bool base_member(Coord k) const {
    switch (base) {
      case Base::Finite: return false;
      case Base::Cofinite: return true;
      case Base::Periodic: return std::binary_search(residues.begin(), residues.end(), k % modulus);
    }
    return false;
  }
  bool member(Coord k) const {
    return base_member(k) != std::binary_search(delta.begin(), delta.end(), k);
  }

  static BFinIdeal finite_set(std::vector<Coord> members) {
    BFinIdeal q;
    q.base = Base::Finite;
    q.delta = std::move(members);
    std::sort(q.delta.begin(), q.delta.end());
    return q;
  }
  static BFinIdeal cofinite(std::vector<Coord> excluded) {
    BFinIdeal q;
    q.base = Base::Cofinite;
    q.delta = std::move(excluded);
    std::sort(q.delta.begin(), q.delta.end());
    return q;
  }
  static BFinIdeal periodic(Coord modulus, std::vector<Coord> residues, std::vector<Coord> delta = {}) {
    if (modulus < 1) throw Error("bfin ideal: modulus must be positive");
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    for (Coord r : residues)
      if (r < 0 || r >= modulus) throw Error("bfin ideal: residue out of range");
    BFinIdeal q;
    if (residues.empty()) {
      q = finite_set(std::move(delta));
    } else if (static_cast<Coord>(residues.size()) == modulus) {
      q = cofinite(std::move(delta));
    } else {
      q.base = Base::Periodic;
      q.modulus = modulus;
      q.residues = std::move(residues);
      q.delta = std::move(delta);
      std::sort(q.delta.begin(), q.delta.end());
    }
    return q;
  }

  std::string to_string() const {
    switch (base) {
      case Base::Finite: return tuple_to_string(delta, '{', '}');
      case Base::Cofinite: return "N\\" + tuple_to_string(delta, '{', '}');
      case Base::Periodic: {
        std::string s = "periodic(mod " + std::to_string(modulus) + ", residues " +
                        tuple_to_string(residues, '{', '}');
        if (!delta.empty()) s += ", delta " + tuple_to_string(delta, '{', '}');
        return s + ")";
      }
    }
    return "?";
  }
};

inline BFinIdeal phi_descriptor(const BFinLattice& lat, const Tuple& x) {
  lat.require_element(x);
  return BFinIdeal::finite_set(x);
}

inline bool ideal_contains(const BFinIdeal& q, const BFinLattice::prime_type& p) {
  return q.member(p.index);
}

namespace detail {
// Residue set refined to a common modulus; eventual equality of two periodic
// patterns is equality of the refinements.
inline std::vector<Coord> refine_residues(Coord modulus, const std::vector<Coord>& residues, Coord to) {
  std::vector<Coord> out;
  for (Coord r = 0; r < to; ++r)
    if (std::binary_search(residues.begin(), residues.end(), r % modulus)) out.push_back(r);
  return out;
}
}  // namespace detail

inline bool in_dp(const BFinLattice&, const BFinIdeal& a, const BFinIdeal& b) {
  if (a.base != b.base) return false;
  if (a.base != BFinIdeal::Base::Periodic) return true;
  Coord m = std::lcm(a.modulus, b.modulus);
  return detail::refine_residues(a.modulus, a.residues, m) ==
         detail::refine_residues(b.modulus, b.residues, m);
}

// Bare oracles carry no symbolic prime family, so finite-difference
// comparisons have no base to anchor on.
template <LazyLattice L, class Q>
  requires(!SymbolicPrimes<L>)
bool in_dp(const L&, const Q&, const Q&) {
  throw IncomparableBases("finite-difference comparison needs a symbolic prime family");
}

namespace detail {
template <class Op>
BFinIdeal bfin_pointwise(const BFinLattice& lat, const BFinIdeal& a, const BFinIdeal& b, Op op) {
  if (!in_dp(lat, a, b)) throw Error("bfin: descriptors lie in different components");
  BFinIdeal r = a;
  r.delta.clear();
  if (a.base == BFinIdeal::Base::Periodic) {
    Coord m = std::lcm(a.modulus, b.modulus);
    r.modulus = m;
    r.residues = refine_residues(a.modulus, a.residues, m);
  }
  std::vector<Coord> probe = a.delta;
  probe.insert(probe.end(), b.delta.begin(), b.delta.end());
  std::sort(probe.begin(), probe.end());
  probe.erase(std::unique(probe.begin(), probe.end()), probe.end());
  for (Coord k : probe)
    if (op(a.member(k), b.member(k)) != r.base_member(k)) r.delta.push_back(k);
  return r;
}
}  // namespace detail

inline BFinIdeal dp_meet(const BFinLattice& lat, const BFinIdeal& a, const BFinIdeal& b) {
  return detail::bfin_pointwise(lat, a, b, [](bool x, bool y) { return x && y; });
}
inline BFinIdeal dp_join(const BFinLattice& lat, const BFinIdeal& a, const BFinIdeal& b) {
  return detail::bfin_pointwise(lat, a, b, [](bool x, bool y) { return x || y; });
}

inline std::vector<BFinLattice::prime_type> sym_diff_primes(const BFinLattice& lat, const BFinIdeal& a,
                                                            const BFinIdeal& b) {
  if (!in_dp(lat, a, b)) throw Error("bfin: symmetric difference is not finite");
  std::vector<Coord> diff;
  std::set_symmetric_difference(a.delta.begin(), a.delta.end(), b.delta.begin(), b.delta.end(),
                                std::back_inserter(diff));
  std::vector<BFinLattice::prime_type> out;
  out.reserve(diff.size());
  for (Coord k : diff) out.push_back({k});
  return out;
}

inline BFinIdeal apply_delta(const BFinLattice& lat, const BFinIdeal& base,
                             const std::vector<BFinLattice::prime_type>& delta) {
  BFinIdeal q = base;
  for (const auto& p : delta) {
    lat.require_prime(p);
    auto it = std::lower_bound(q.delta.begin(), q.delta.end(), p.index);
    if (it != q.delta.end() && *it == p.index)
      q.delta.erase(it);
    else
      q.delta.insert(it, p.index);
  }
  return q;
}

// ---------------------------------------------------------------------------
// φ-inverse: walk from x0 to the unique element whose ideal is the target,
// doing all removals (maximal first) and then all insertions (minimal first);
// each step is one cover move, so the step count is |△|.

template <class E>
struct InversePhiResult {
  E value{};
  int steps = 0;
};

inline InversePhiResult<Tuple> inverse_phi(const GridLattice& lat, const Tuple& x0, const GridIdeal& q0) {
  GridIdeal target = normalize_grid_ideal(lat, q0);
  if (!in_dp(lat, target, phi_descriptor(lat, x0)))
    throw NotAnIdeal(lat.name() + ": target descriptor is outside the component of the anchor");
  InversePhiResult<Tuple> res;
  res.value = x0;
  auto level = [&](int i) { return res.value[i]; };
  for (;;) {  // removals: drop each family's top threshold while above target
    int axis = -1;
    for (int i = 0; i < lat.dims(); ++i)
      if (target.levels[i].value < level(i)) {
        axis = i;
        break;
      }
    if (axis < 0) break;
    res.value = lat.lower(res.value, {axis, level(axis)});
    ++res.steps;
  }
  for (;;) {  // insertions: add each family's next threshold while below target
    int axis = -1;
    for (int i = 0; i < lat.dims(); ++i)
      if (target.levels[i].value > level(i)) {
        axis = i;
        break;
      }
    if (axis < 0) break;
    res.value = lat.raise(res.value, {axis, level(axis) + 1});
    ++res.steps;
  }
  if (!(phi_descriptor(lat, res.value) == target))
    throw Error(lat.name() + ": inverse_phi did not reach the target ideal");
  return res;
}

inline InversePhiResult<Tuple> inverse_phi(const BFinLattice& lat, const Tuple& x0, const BFinIdeal& q) {
  if (q.base != BFinIdeal::Base::Finite)
    throw NotAnIdeal("bfin: target descriptor is outside the component of the anchor");
  InversePhiResult<Tuple> res;
  res.value = x0;
  for (Coord k : x0)  // removals, ascending (the prime poset is an antichain)
    if (!q.member(k)) {
      res.value = lat.lower(res.value, {k});
      ++res.steps;
    }
  for (Coord k : q.delta)  // insertions, ascending
    if (!lat.contains_index(res.value, k)) {
      res.value = lat.raise(res.value, {k});
      ++res.steps;
    }
  if (!(res.value == q.delta)) throw Error("bfin: inverse_phi did not reach the target ideal");
  return res;
}

// ---------------------------------------------------------------------------
// Connected components of the ideal graph.

struct ComponentClass {
  std::string label;
  std::string representative;
  std::string iso_type;
  bool phi_image = false;
  long long size = -1;  // -1 when infinite / not enumerated
};

struct ComponentReport {
  std::string lattice_name;
  std::vector<ComponentClass> classes;
  long long finite_class_count = 0;
  std::optional<std::string> unbounded_note;
};

// Edges of the ideal graph: single-element symmetric difference.
inline std::vector<std::pair<int, int>> one_step_edges(const std::vector<Subset>& ideals) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(ideals.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(ideals.size()); ++j)
      if ((ideals[i] ^ ideals[j]).count() == 1) edges.emplace_back(i, j);
  return edges;
}

// For a finite poset every pair of ideals is at finite distance, so the graph
// is connected; this validates the graph machinery against that expectation.
inline ComponentReport components_finite(const Poset& p, std::size_t bound = kDefaultIdealBound) {
  std::vector<Subset> ideals = order_ideals(p, bound);
  std::vector<int> comp(ideals.size(), -1);
  std::vector<std::vector<int>> adj(ideals.size());
  for (auto [i, j] : one_step_edges(ideals)) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  ComponentReport rep;
  rep.lattice_name = "finite";
  int classes = 0;
  for (int s = 0; s < static_cast<int>(ideals.size()); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = classes;
    long long size = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++size;
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = classes;
          stack.push_back(w);
        }
    }
    ComponentClass c;
    c.label = "component" + std::to_string(classes);
    c.representative = ideals[s].to_string();
    c.iso_type = "finite";
    c.size = size;
    rep.classes.push_back(std::move(c));
    ++classes;
  }
  rep.finite_class_count = classes;
  return rep;
}

namespace detail {
inline std::string power_label(const std::string& factor, int k) {
  if (k == 0) return "point";
  std::string s = factor;
  for (int i = 1; i < k; ++i) s += "×" + factor;
  return s;
}
}  // namespace detail

// Symbolic component classes for grid lattices: each family sits at -inf, a
// finite level, or +inf independently; only finite families can move, so a
// class with k finite families is a copy of the k-fold product.
inline ComponentReport components_symbolic(const GridLattice& lat) {
  ComponentReport rep;
  rep.lattice_name = lat.name();
  int n = lat.dims();
  std::vector<GridLevel::Kind> kinds;
  if (!lat.bounded_below()) kinds.push_back(GridLevel::Kind::NegInf);
  kinds.push_back(GridLevel::Kind::Finite);
  kinds.push_back(GridLevel::Kind::PosInf);
  std::vector<int> pattern(n, 0);
  for (;;) {
    GridIdeal repIdeal;
    int finite_families = 0;
    std::string label = "(";
    for (int i = 0; i < n; ++i) {
      GridLevel l;
      switch (kinds[pattern[i]]) {
        case GridLevel::Kind::NegInf: l = GridLevel::neg_inf(); break;
        case GridLevel::Kind::Finite: l = GridLevel::finite(0); ++finite_families; break;
        case GridLevel::Kind::PosInf: l = GridLevel::pos_inf(); break;
      }
      repIdeal.levels.push_back(l);
      if (i) label += ',';
      label += l.kind == GridLevel::Kind::Finite ? "fin" : l.to_string();
    }
    label += ")";
    ComponentClass c;
    c.label = label;
    c.representative = repIdeal.to_string();
    c.iso_type = detail::power_label(lat.bounded_below() ? "ℕ" : "ℤ", finite_families);
    c.phi_image = (finite_families == n);
    rep.classes.push_back(std::move(c));
    int i = n - 1;
    while (i >= 0 && pattern[i] + 1 == static_cast<int>(kinds.size())) pattern[i--] = 0;
    if (i < 0) break;
    ++pattern[i];
  }
  rep.finite_class_count = static_cast<long long>(rep.classes.size());
  return rep;
}

// 𝔹_fin splits into the bottom component (finite ideals, the φ image), the
// top component (cofinite ideals) and uncountably many middle components.
inline ComponentReport components_symbolic(const BFinLattice& lat) {
  ComponentReport rep;
  rep.lattice_name = lat.name();
  ComponentClass bottom;
  bottom.label = "bottom";
  bottom.representative = BFinIdeal::finite_set({}).to_string();
  bottom.iso_type = "𝔹_fin";
  bottom.phi_image = true;
  ComponentClass top;
  top.label = "top";
  top.representative = BFinIdeal::cofinite({}).to_string();
  top.iso_type = "𝔹_cofin";
  ComponentClass middle;
  middle.label = "middle";
  middle.representative = BFinIdeal::periodic(2, {0}).to_string();
  middle.iso_type = "𝔹_fin × 𝔹_cofin";
  rep.classes = {bottom, top, middle};
  rep.finite_class_count = 2;
  rep.unbounded_note = "uncountably many components of the middle kind";
  return rep;
}

// Classifies a descriptor into one of the symbolic classes.
inline std::string component_label(const GridLattice& lat, const GridIdeal& q0) {
  GridIdeal q = normalize_grid_ideal(lat, q0);
  std::string label = "(";
  for (int i = 0; i < lat.dims(); ++i) {
    if (i) label += ',';
    label += q.levels[i].kind == GridLevel::Kind::Finite ? "fin" : q.levels[i].to_string();
  }
  return label + ")";
}

inline std::string component_label(const BFinLattice&, const BFinIdeal& q) {
  switch (q.base) {
    case BFinIdeal::Base::Finite: return "bottom";
    case BFinIdeal::Base::Cofinite: return "top";
    case BFinIdeal::Base::Periodic: return "middle";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Exploration probe for the components-vs-width question: reports window
// widths (in the lattice and in the prime poset) next to component counts and
// draws no conclusion.

struct ProbeWindow {
  Coord radius = 0;
  long long window_size = 0;
  int lattice_width = 0;
  int prime_width = 0;
};

struct ProbeReport {
  std::string lattice_name;
  std::vector<ProbeWindow> windows;
  std::optional<long long> component_classes;  // finite symbolic class count
  std::optional<std::string> component_note;
};

namespace detail {
template <class L>
int band_prime_width(const L& lat, Coord lo, Coord hi) {
  auto primes = lat.primes_in_band(lo, hi);
  int m = static_cast<int>(primes.size());
  Poset p = poset_from_leq(m, [&](int i, int j) {
    if constexpr (requires { lat.prime_leq(primes[i], primes[j]); }) {
      return lat.prime_leq(primes[i], primes[j]);
    } else {
      return i == j;
    }
  });
  return width(p);
}
}  // namespace detail

inline ProbeReport conjecture_probe(const GridLattice& lat, const std::vector<Coord>& radii,
                                    std::size_t bound = kDefaultWindowBound) {
  ProbeReport rep;
  rep.lattice_name = lat.name();
  for (Coord r : radii) {
    ProbeWindow wrow;
    wrow.radius = r;
    Tuple lo(lat.dims(), lat.bounded_below() ? 0 : -r), hi(lat.dims(), r);
    auto win = make_window(lat, lo, hi, bound);
    wrow.window_size = static_cast<long long>(win.elements.size());
    wrow.lattice_width = width(win.lattice.poset());
    wrow.prime_width = detail::band_prime_width(lat, -r, r);
    rep.windows.push_back(wrow);
  }
  rep.component_classes = components_symbolic(lat).finite_class_count;
  return rep;
}

inline ProbeReport conjecture_probe(const BFinLattice& lat, const std::vector<Coord>& radii,
                                    std::size_t bound = kDefaultWindowBound) {
  ProbeReport rep;
  rep.lattice_name = lat.name();
  for (Coord r : radii) {
    ProbeWindow wrow;
    wrow.radius = r;
    Tuple hi(static_cast<std::size_t>(r));
    for (Coord k = 0; k < r; ++k) hi[static_cast<std::size_t>(k)] = k;
    auto win = make_window(lat, Tuple{}, hi, bound);
    wrow.window_size = static_cast<long long>(win.elements.size());
    wrow.lattice_width = width(win.lattice.poset());
    wrow.prime_width = detail::band_prime_width(lat, 0, r - 1);
    rep.windows.push_back(wrow);
  }
  ComponentReport cr = components_symbolic(lat);
  rep.component_classes = cr.finite_class_count;
  rep.component_note = cr.unbounded_note;
  return rep;
}

inline ProbeReport conjecture_probe(const FiniteAdapter& lat, const std::vector<Coord>&,
                                    std::size_t bound = kDefaultIdealBound) {
  ProbeReport rep;
  rep.lattice_name = lat.name();
  ProbeWindow wrow;
  wrow.radius = 0;
  wrow.window_size = lat.lattice().n();
  wrow.lattice_width = width(lat.lattice().poset());
  wrow.prime_width = width(lat.primes().order);
  rep.windows.push_back(wrow);
  rep.component_classes =
      components_finite(lat.primes().order, bound).finite_class_count;
  return rep;
}

}  // namespace latrep
