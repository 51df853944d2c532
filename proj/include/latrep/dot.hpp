#pragma once

#include <string>
#include <vector>

#include "latrep/filters.hpp"
#include "latrep/repr.hpp"

namespace latrep {

// Deterministic DOT emitters: node order is element order, edges point from
// lower to upper cover, elements of equal height share a rank.

namespace detail {
inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace detail

inline std::string dot_poset(const Poset& p, const std::string& name = "poset") {
  std::vector<int> height(p.n(), 0);
  for (int x : p.linear_extension())
    for (int y : p.lower_covers_of(x)) height[x] = std::max(height[x], height[y] + 1);
  int max_h = 0;
  for (int h : height) max_h = std::max(max_h, h);

  std::string out = "digraph \"" + detail::dot_escape(name) + "\" {\n";
  out += "  rankdir=BT;\n  node [shape=box];\n";
  for (int x = 0; x < p.n(); ++x)
    out += "  n" + std::to_string(x) + " [label=\"" + detail::dot_escape(p.label(x)) + "\"];\n";
  for (int h = 0; h <= max_h; ++h) {
    std::string row;
    for (int x = 0; x < p.n(); ++x)
      if (height[x] == h) row += " n" + std::to_string(x) + ";";
    if (!row.empty()) out += "  { rank=same;" + row + " }\n";
  }
  for (auto [a, b] : p.covers())
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

inline std::string dot_lattice(const FiniteLattice& l, const std::string& name = "lattice") {
  return dot_poset(l.poset(), name);
}

inline std::string dot_filter_lattice(const FilterLattice& fl) {
  return dot_poset(fl.lattice.poset(), "filters");
}

inline std::string dot_prime_poset(const PrimePoset& pp) { return dot_poset(pp.order, "primes"); }

// Ideal graph of a finite poset, colored by connected component (a single
// color for finite posets; the palette cycles if more ever appear).
inline std::string dot_ideal_graph(const Poset& p, std::size_t bound = kDefaultIdealBound) {
  static const char* palette[] = {"lightblue", "lightsalmon", "palegreen", "plum", "khaki"};
  std::vector<Subset> ideals = order_ideals(p, bound);
  auto edges = one_step_edges(ideals);
  std::vector<int> comp(ideals.size(), -1);
  std::vector<std::vector<int>> adj(ideals.size());
  for (auto [i, j] : edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  int classes = 0;
  for (int s = 0; s < static_cast<int>(ideals.size()); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = classes;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = classes;
          stack.push_back(w);
        }
    }
    ++classes;
  }
  std::string out = "graph \"ideals\" {\n  node [shape=box, style=filled];\n";
  for (int i = 0; i < static_cast<int>(ideals.size()); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + detail::dot_escape(ideals[i].to_string()) +
           "\", fillcolor=" + palette[comp[i] % 5] + "];\n";
  for (auto [i, j] : edges)
    out += "  n" + std::to_string(i) + " -- n" + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace latrep
