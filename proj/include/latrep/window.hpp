#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "latrep/lattice.hpp"
#include "latrep/lazy.hpp"

namespace latrep {

// Finite interval [lo, hi] of a lazy lattice, materialized as a FiniteLattice
// with maps between local indices and global elements.  Construction verifies
// that the window is a sublattice: meets and joins agree under the maps.
template <class L>
struct Window {
  using E = typename L::element_type;

  E lo, hi;
  std::vector<E> elements;  // local index -> element, in canonical order
  FiniteLattice lattice;
  std::map<E, int> index;  // element -> local index

  const E& to_global(int i) const { return elements[i]; }
  int from_global(const E& e) const {
    auto it = index.find(e);
    if (it == index.end()) throw Error("element outside window");
    return it->second;
  }
};

// Canonical window order: number of window elements strictly below (a linear
// extension), ties by element order.
template <class L, class E = typename L::element_type>
Window<L> make_window(const L& lat, const E& lo, const E& hi,
                      std::size_t bound = kDefaultWindowBound) {
  Window<L> w;
  w.lo = lo;
  w.hi = hi;
  std::vector<E> elems = interval_elements(lat, lo, hi, bound);
  int m = static_cast<int>(elems.size());
  std::vector<std::vector<bool>> le(m, std::vector<bool>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) le[i][j] = lat.leq(elems[i], elems[j]);
  std::vector<int> order(m), depth(m, 0);
  for (int i = 0; i < m; ++i) {
    order[i] = i;
    for (int j = 0; j < m; ++j)
      if (j != i && le[j][i]) ++depth[i];
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (depth[a] != depth[b]) return depth[a] < depth[b];
    return elem_less(elems[a], elems[b]);
  });
  w.elements.reserve(elems.size());
  for (int i : order) w.elements.push_back(elems[i]);
  for (int i = 0; i < m; ++i) w.index.emplace(w.elements[i], i);

  Poset p = poset_from_leq(m, [&](int i, int j) { return lat.leq(w.elements[i], w.elements[j]); });
  w.lattice = FiniteLattice::from_poset(p);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (!(lat.meet(w.elements[i], w.elements[j]) == w.elements[w.lattice.meet(i, j)]))
        throw Error("window is not meet-closed within the ambient lattice");
      if (!(lat.join(w.elements[i], w.elements[j]) == w.elements[w.lattice.join(i, j)]))
        throw Error("window is not join-closed within the ambient lattice");
    }
  return w;
}

// Separator of a covering, computed inside the window: the principal filter
// of the unique join-irreducible below the upper element but not the lower.
// Works for bare oracles with no symbolic prime family.
template <class L>
Subset window_separator(const Window<L>& w, int lower_idx, int upper_idx) {
  bool is_cover = false;
  for (int y : w.lattice.poset().upper_covers_of(lower_idx)) is_cover |= (y == upper_idx);
  if (!is_cover) throw NotACovering("window_separator: not a covering pair");
  Subset ji = join_irreducibles(w.lattice);
  int found = -1;
  for (int j = ji.first(); j >= 0; j = ji.next(j))
    if (w.lattice.leq(j, upper_idx) && !w.lattice.leq(j, lower_idx)) {
      if (found >= 0) throw Error("window_separator: separator not unique");
      found = j;
    }
  if (found < 0) throw Error("window_separator: no separating irreducible");
  return principal_filter(w.lattice, found);
}

}  // namespace latrep
