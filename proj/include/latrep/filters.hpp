#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "latrep/errors.hpp"
#include "latrep/lattice.hpp"

namespace latrep {

// Lattice filters and ideals are plain Subsets over the lattice's element
// range; the predicates below define them.

inline Subset principal_filter(const FiniteLattice& l, int x) { return l.poset().up_set(x); }
inline Subset principal_ideal(const FiniteLattice& l, int x) { return l.poset().down_set(x); }

// Nonempty, meet-closed, up-closed.
inline bool is_lattice_filter(const FiniteLattice& l, const Subset& s) {
  if (s.empty()) return false;
  auto mem = s.members();
  for (int x : mem)
    if (!l.poset().up_set(x).is_subset_of(s)) return false;
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = i + 1; j < mem.size(); ++j)
      if (!s.test(l.meet(mem[i], mem[j]))) return false;
  return true;
}

inline bool is_lattice_ideal(const FiniteLattice& l, const Subset& s) {
  if (s.empty()) return false;
  auto mem = s.members();
  for (int x : mem)
    if (!l.poset().down_set(x).is_subset_of(s)) return false;
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = i + 1; j < mem.size(); ++j)
      if (!s.test(l.join(mem[i], mem[j]))) return false;
  return true;
}

inline bool is_proper_filter(const FiniteLattice& l, const Subset& s) {
  return is_lattice_filter(l, s) && !s.is_full();
}

// f union-meet g = {x ∧ y : x ∈ f, y ∈ g}.  The raw set is materialized and
// then verified against the filter axioms; no closure is taken silently, so a
// non-distributive base surfaces as NotDistributive here.
inline Subset union_meet(const FiniteLattice& l, const Subset& f, const Subset& g) {
  Subset out(l.n());
  for (int x = f.first(); x >= 0; x = f.next(x))
    for (int y = g.first(); y >= 0; y = g.next(y)) out.set(l.meet(x, y));
  if (!is_lattice_filter(l, out))
    throw NotDistributive("union-meet is not a lattice filter; base lattice is not distributive");
  return out;
}

inline Subset union_join(const FiniteLattice& l, const Subset& i1, const Subset& i2) {
  Subset out(l.n());
  for (int x = i1.first(); x >= 0; x = i1.next(x))
    for (int y = i2.first(); y >= 0; y = i2.next(y)) out.set(l.join(x, y));
  if (!is_lattice_ideal(l, out))
    throw NotDistributive("union-join is not a lattice ideal; base lattice is not distributive");
  return out;
}

// Proper + the prime condition x ∨ y ∈ f ⇒ x ∈ f or y ∈ f, checked over the
// pairs outside f.
inline bool is_prime_filter(const FiniteLattice& l, const Subset& f) {
  if (!is_proper_filter(l, f)) return false;
  auto out = f.complement().members();
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i; j < out.size(); ++j)
      if (f.test(l.join(out[i], out[j]))) return false;
  return true;
}

inline bool is_prime_ideal(const FiniteLattice& l, const Subset& s) {
  if (!is_lattice_ideal(l, s) || s.is_full()) return false;
  auto out = s.complement().members();
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i; j < out.size(); ++j)
      if (s.test(l.meet(out[i], out[j]))) return false;
  return true;
}

// Set complement of a prime filter, verified to be a prime lattice ideal.
inline Subset complement_ideal(const FiniteLattice& l, const Subset& f) {
  Subset c = f.complement();
  if (!is_lattice_ideal(l, c))
    throw NotPrime("complement " + c.to_string() + " is not a lattice ideal");
  if (!is_prime_ideal(l, c))
    throw NotPrime("complement " + c.to_string() + " is not a prime ideal");
  return c;
}

constexpr std::size_t kDefaultFilterBound = std::size_t{1} << 20;

// The lattice of all lattice filters, ordered by inverse inclusion
// (join = ∩, meet = union-meet).  Canonical filter order: cardinality
// descending (so the whole lattice is first / bottom), then member-lex.
struct FilterLattice {
  std::vector<Subset> filters;
  FiniteLattice lattice;               // inverse inclusion
  std::vector<int> principal_witness;  // generator per filter, -1 if none
  bool all_principal = true;
  std::vector<std::string> anomalies;  // non-principal witnesses, if any

  int index_of(const Subset& f) const {
    for (int i = 0; i < static_cast<int>(filters.size()); ++i)
      if (filters[i] == f) return i;
    return -1;
  }
};

// Enumerates filters as the up-closed sets that pass meet-closure.  For a
// finite lattice the result should be exactly the principal filters; the
// enumerator records rather than assumes this.
inline FilterLattice enumerate_filters(const FiniteLattice& l, std::size_t bound = kDefaultFilterBound) {
  FilterLattice fl;
  for (const Subset& s : order_filters(l.poset(), bound)) {
    if (s.empty()) continue;
    bool meet_closed = true;
    auto mem = s.members();
    for (std::size_t i = 0; i < mem.size() && meet_closed; ++i)
      for (std::size_t j = i + 1; j < mem.size(); ++j)
        if (!s.test(l.meet(mem[i], mem[j]))) {
          meet_closed = false;
          break;
        }
    if (meet_closed) fl.filters.push_back(s);
  }
  std::sort(fl.filters.begin(), fl.filters.end(), [](const Subset& a, const Subset& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca > cb;
    return a.lex_less(b);
  });
  for (const Subset& f : fl.filters) {
    // minimal members of f
    std::vector<int> mins;
    for (int x = f.first(); x >= 0; x = f.next(x))
      if (!l.poset().strict_down(x).intersects(f)) mins.push_back(x);
    if (mins.size() == 1 && principal_filter(l, mins[0]) == f) {
      fl.principal_witness.push_back(mins[0]);
    } else {
      fl.principal_witness.push_back(-1);
      fl.all_principal = false;
      fl.anomalies.push_back("filter " + f.to_string() + " has no single generator");
    }
  }
  int m = static_cast<int>(fl.filters.size());
  std::vector<Subset> up(m, Subset(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (fl.filters[j].is_subset_of(fl.filters[i])) up[i].set(j);
  Poset fposet = Poset::from_closure_unchecked(std::move(up));
  std::vector<std::string> labels;
  labels.reserve(fl.filters.size());
  for (const Subset& f : fl.filters) labels.push_back(f.to_string());
  fposet.set_labels(std::move(labels));
  fl.lattice = FiniteLattice::from_poset(fposet);
  return fl;
}

// Poset of prime filters under inverse inclusion, with principal witnesses.
struct PrimePoset {
  std::vector<Subset> primes;  // canonical order
  Poset order;                 // inverse inclusion
  std::vector<std::optional<int>> witness;

  int index_of(const Subset& p) const {
    for (int i = 0; i < static_cast<int>(primes.size()); ++i)
      if (primes[i] == p) return i;
    return -1;
  }
};

inline PrimePoset prime_poset_from(const FiniteLattice& l, const FilterLattice& fl) {
  PrimePoset pp;
  for (std::size_t i = 0; i < fl.filters.size(); ++i) {
    if (!is_prime_filter(l, fl.filters[i])) continue;
    pp.primes.push_back(fl.filters[i]);
    int w = fl.principal_witness[i];
    pp.witness.push_back(w >= 0 ? std::optional<int>(w) : std::nullopt);
  }
  int m = static_cast<int>(pp.primes.size());
  std::vector<Subset> up(m, Subset(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (pp.primes[j].is_subset_of(pp.primes[i])) up[i].set(j);
  pp.order = Poset::from_closure_unchecked(std::move(up));
  std::vector<std::string> labels;
  labels.reserve(pp.primes.size());
  for (const Subset& p : pp.primes) labels.push_back(p.to_string());
  pp.order.set_labels(std::move(labels));
  return pp;
}

inline PrimePoset prime_poset(const FiniteLattice& l, std::size_t bound = kDefaultFilterBound) {
  return prime_poset_from(l, enumerate_filters(l, bound));
}

// Fast route to the primes of a finite distributive lattice: the principal
// filters of join-irreducibles, each verified prime.  Same canonical order as
// prime_poset; used where enumerating all up-sets would blow up.
inline PrimePoset principal_primes(const FiniteLattice& l) {
  PrimePoset pp;
  struct Entry {
    Subset f;
    int gen;
  };
  std::vector<Entry> entries;
  Subset ji = join_irreducibles(l);
  for (int j = ji.first(); j >= 0; j = ji.next(j)) {
    Subset f = principal_filter(l, j);
    if (is_prime_filter(l, f)) entries.push_back({f, j});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    int ca = a.f.count(), cb = b.f.count();
    if (ca != cb) return ca > cb;
    return a.f.lex_less(b.f);
  });
  int m = static_cast<int>(entries.size());
  std::vector<Subset> up(m, Subset(m));
  for (int i = 0; i < m; ++i) {
    pp.primes.push_back(entries[i].f);
    pp.witness.push_back(entries[i].gen);
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (pp.primes[j].is_subset_of(pp.primes[i])) up[i].set(j);
  pp.order = Poset::from_closure_unchecked(std::move(up));
  return pp;
}

// {p ∈ primes : x ∈ p}, as a subset of the prime indices.
inline Subset phi(const PrimePoset& pp, int x) {
  Subset s(static_cast<int>(pp.primes.size()));
  for (int i = 0; i < static_cast<int>(pp.primes.size()); ++i)
    if (pp.primes[i].test(x)) s.set(i);
  return s;
}

// First prime in canonical order containing x but not y; requires x ≰ y.
inline int separating_prime(const FiniteLattice& l, const PrimePoset& pp, int x, int y) {
  if (l.leq(x, y))
    throw NotSeparable("no prime separates comparable pair " + std::to_string(x) + " <= " + std::to_string(y));
  for (int i = 0; i < static_cast<int>(pp.primes.size()); ++i)
    if (pp.primes[i].test(x) && !pp.primes[i].test(y)) return i;
  throw Error("no separating prime found; lattice is not distributive?");
}

struct JiPrimeReport {
  bool holds = false;
  int prime_count = 0;
  std::string failure;
};

// Join-irreducible elements of the filter lattice coincide with the prime
// filters.
inline JiPrimeReport ji_prime_check(const FiniteLattice& l, const FilterLattice& fl) {
  JiPrimeReport rep;
  Subset ji = join_irreducibles(fl.lattice);
  Subset primes(static_cast<int>(fl.filters.size()));
  for (int i = 0; i < static_cast<int>(fl.filters.size()); ++i)
    if (is_prime_filter(l, fl.filters[i])) primes.set(i);
  rep.prime_count = primes.count();
  if (ji == primes) {
    rep.holds = true;
  } else {
    rep.failure = "join-irreducibles " + ji.to_string() + " != primes " + primes.to_string();
  }
  return rep;
}

}  // namespace latrep
