#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "latrep/json_io.hpp"
#include "latrep/lattice.hpp"
#include "latrep/lazy.hpp"
#include "latrep/repr.hpp"
#include "latrep/rng.hpp"
#include "latrep/transpose.hpp"

namespace latrep {

// The verification suite: every structural claim the library rides on is
// rechecked mechanically over exhaustive small posets, seeded random
// instances, and windows of the built-in locally-finite lattices.  A report
// is a pure function of the config, so fixed seeds give byte-identical runs.

struct SuiteLimits {
  std::size_t max_ideals = std::size_t{1} << 20;
  std::size_t max_window = 4096;
  int filter_lattice_max = 32;  // full filter algebra only at or below this size
  int witnesses_per_check = 8;
};

struct SuiteConfig {
  int max_poset_size = 5;     // exhaustive enumeration bound
  int random_instances = 500; // random posets on <= 8 elements
  std::uint64_t random_seed = 1;
  int window_radius = 10;
  int chain_budget = 32;
  int oracle_instances = 200;  // random lattices <= 16 elements, full filter checks
  int operator_cases = 200;    // raise/lower/separator/rank cases per built-in
  SuiteLimits limits;

  Json to_json() const {
    return Json{{"maxPosetSize", max_poset_size},
                {"randomInstances", random_instances},
                {"randomSeed", random_seed},
                {"windowRadius", window_radius},
                {"chainBudget", chain_budget},
                {"oracleInstances", oracle_instances},
                {"operatorCases", operator_cases},
                {"limits",
                 Json{{"maxIdeals", limits.max_ideals},
                      {"maxWindow", limits.max_window},
                      {"filterLatticeMax", limits.filter_lattice_max},
                      {"witnessesPerCheck", limits.witnesses_per_check}}}};
  }
};

struct LemmaReport {
  std::string lemma;
  long long instances = 0;
  long long failure_count = 0;
  std::vector<std::string> failures;  // capped witnesses
};

inline const std::vector<std::string>& lemma_registry() {
  static const std::vector<std::string> names = {
      "birkhoff_isomorphism",
      "join_irreducible_unique_cover",
      "cover_adds_one_prime",
      "rank_matches_ideal_size",
      "union_meet_contains_arguments",
      "union_meet_is_meet_closure",
      "filter_lattice_bounds",
      "filter_lattice_distributive",
      "prime_complement_is_prime_ideal",
      "principal_filter_prime_iff_irreducible",
      "filter_membership_equivalence",
      "principal_filter_embedding",
      "prime_separates_filter_pairs",
      "prime_separates_incomparables",
      "filter_irreducible_iff_prime",
      "phi_embedding",
      "all_filters_principal",
      "raise_adds_one_prime",
      "lower_removes_one_prime",
      "finite_difference_sublattice",
      "transpose_transitive",
      "transpose_directed",
      "transpose_preserves_separator",
      "down_step_descends",
      "descent_classifies_primes",
      "representation_roundtrip",
  };
  return names;
}

class Collector {
 public:
  explicit Collector(int witnesses_per_check) : cap_(witnesses_per_check) {
    for (const std::string& name : lemma_registry()) {
      order_.push_back(name);
      reports_.emplace(name, LemmaReport{name, 0, 0, {}});
    }
  }

  void tally(const std::string& lemma, bool ok, const std::string& witness) {
    LemmaReport& r = reports_.at(lemma);
    ++r.instances;
    if (!ok) {
      ++r.failure_count;
      ++total_failures_;
      if (static_cast<int>(r.failures.size()) < cap_) r.failures.push_back(witness);
    }
  }
  void fail(const std::string& lemma, const std::string& witness) { tally(lemma, false, witness); }

  long long total_failures() const { return total_failures_; }
  std::vector<LemmaReport> finish() const {
    std::vector<LemmaReport> out;
    for (const std::string& name : order_) out.push_back(reports_.at(name));
    return out;
  }

 private:
  int cap_;
  std::vector<std::string> order_;
  std::map<std::string, LemmaReport> reports_;
  long long total_failures_ = 0;
};

struct VerifyReport {
  SuiteConfig config;
  std::vector<LemmaReport> checks;
  long long total_failures = 0;

  Json to_json() const {
    Json jchecks = Json::array();
    for (const LemmaReport& r : checks)
      jchecks.push_back(Json{{"lemma", r.lemma},
                             {"instances", r.instances},
                             {"failureCount", r.failure_count},
                             {"failures", r.failures}});
    return Json{{"config", config.to_json()}, {"checks", jchecks}, {"totalFailures", total_failures}};
  }
};

// Test hook: deliberately corrupts structures before checking, to prove the
// suite actually fails when the algebra is broken.
struct FaultInjection {
  bool corrupt_meet_table = false;
};

namespace verify_detail {

// Exceptions inside a check count as failures of that check.
template <class F>
void guarded(Collector& C, const std::string& lemma, const std::string& id, F f) {
  try {
    f();
  } catch (const std::exception& e) {
    C.fail(lemma, id + ": raised " + e.what());
  }
}

inline std::vector<Poset> exhaustive_posets(int max_n) {
  std::vector<Poset> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask & (1u << s)) rel[slots[s].first][slots[s].second] = true;
      bool transitive = true;
      for (int i = 0; i < n && transitive; ++i)
        for (int j = 0; j < n && transitive; ++j)
          for (int k = 0; k < n; ++k)
            if (rel[i][j] && rel[j][k] && !rel[i][k]) {
              transitive = false;
              break;
            }
      if (!transitive) continue;
      std::vector<CoverPair> cov;
      for (auto [i, j] : slots)
        if (rel[i][j]) cov.emplace_back(i, j);
      out.push_back(poset_from_covers(n, cov));
    }
  }
  return out;
}

inline Poset random_poset(Rng& rng, int n, int num, int den) {
  std::vector<CoverPair> cov;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(num, den)) cov.emplace_back(i, j);
  return poset_from_covers(n, cov);
}

inline Subset meet_closure_bruteforce(const FiniteLattice& l, const Subset& f, const Subset& g) {
  Subset cur = f | g;
  bool changed = true;
  while (changed) {
    changed = false;
    auto mem = cur.members();
    for (std::size_t i = 0; i < mem.size(); ++i)
      for (std::size_t j = i; j < mem.size(); ++j) {
        int m = l.meet(mem[i], mem[j]);
        if (!cur.test(m)) {
          cur.set(m);
          changed = true;
        }
      }
  }
  return cur;
}

// Checks that ride only on the lattice order (no filter enumeration); safe at
// any size the suite generates.
inline void lattice_core_checks(const FiniteLattice& l, const std::string& id, Collector& C) {
  guarded(C, "birkhoff_isomorphism", id, [&] {
    IsoReport rep = birkhoff_iso_check(l);
    C.tally("birkhoff_isomorphism", rep.holds, id + ": " + rep.witness);
  });
  guarded(C, "join_irreducible_unique_cover", id, [&] {
    join_irreducibles(l);  // raises when the two characterizations disagree
    meet_irreducibles(l);
    C.tally("join_irreducible_unique_cover", true, "");
  });
  guarded(C, "cover_adds_one_prime", id, [&] {
    JoinIrreduciblePoset jp = j_poset(l);
    for (auto [a, b] : l.poset().covers()) {
      int grow = (birkhoff_map(l, jp, b).minus(birkhoff_map(l, jp, a))).count();
      C.tally("cover_adds_one_prime", grow == 1,
              id + ": cover (" + std::to_string(a) + "," + std::to_string(b) + ") adds " +
                  std::to_string(grow));
    }
  });
  guarded(C, "rank_matches_ideal_size", id, [&] {
    RankInfo ri = rank_info(l);
    C.tally("rank_matches_ideal_size", ri.graded, id + ": lattice is not graded");
    if (!ri.graded) return;
    JoinIrreduciblePoset jp = j_poset(l);
    std::vector<Subset> bm;
    bm.reserve(l.n());
    for (int x = 0; x < l.n(); ++x) bm.push_back(birkhoff_map(l, jp, x));
    for (int x = 0; x < l.n(); ++x)
      for (int y = 0; y < l.n(); ++y) {
        if (!l.leq(x, y)) continue;
        bool ok = (bm[y].minus(bm[x])).count() == ri.rank[y] - ri.rank[x];
        C.tally("rank_matches_ideal_size", ok,
                id + ": pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
      }
  });
}

inline void filter_algebra_checks(const FiniteLattice& l, const std::string& id, Collector& C,
                                  const SuiteLimits& limits) {
  FilterLattice fl = enumerate_filters(l, limits.max_ideals);
  int m = static_cast<int>(fl.filters.size());

  C.tally("all_filters_principal", fl.all_principal && m == l.n(),
          id + ": " + std::to_string(m) + " filters on " + std::to_string(l.n()) + " elements" +
              (fl.anomalies.empty() ? "" : "; " + fl.anomalies.front()));

  guarded(C, "union_meet_contains_arguments", id, [&] {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Subset um = union_meet(l, fl.filters[i], fl.filters[j]);
        C.tally("union_meet_contains_arguments",
                fl.filters[i].is_subset_of(um) && fl.filters[j].is_subset_of(um),
                id + ": filters " + std::to_string(i) + "," + std::to_string(j));
        C.tally("union_meet_is_meet_closure", um == meet_closure_bruteforce(l, fl.filters[i], fl.filters[j]),
                id + ": filters " + std::to_string(i) + "," + std::to_string(j));
      }
  });

  guarded(C, "filter_lattice_bounds", id, [&] {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        bool join_ok = fl.filters[fl.lattice.join(i, j)] == (fl.filters[i] & fl.filters[j]);
        bool meet_ok = fl.filters[fl.lattice.meet(i, j)] == union_meet(l, fl.filters[i], fl.filters[j]);
        C.tally("filter_lattice_bounds", join_ok && meet_ok,
                id + ": filters " + std::to_string(i) + "," + std::to_string(j));
      }
  });

  C.tally("filter_lattice_distributive", fl.lattice.is_distributive(), id);

  guarded(C, "prime_complement_is_prime_ideal", id, [&] {
    for (int i = 0; i < m; ++i) {
      Subset comp = fl.filters[i].complement();
      bool prime = is_prime_filter(l, fl.filters[i]);
      bool ideal = !comp.empty() && is_lattice_ideal(l, comp);
      bool prime_ideal = !comp.empty() && is_prime_ideal(l, comp);
      C.tally("prime_complement_is_prime_ideal", prime == ideal && ideal == prime_ideal,
              id + ": filter " + fl.filters[i].to_string());
    }
  });

  guarded(C, "principal_filter_prime_iff_irreducible", id, [&] {
    Subset ji = join_irreducibles(l);
    for (int x = 0; x < l.n(); ++x)
      C.tally("principal_filter_prime_iff_irreducible",
              is_prime_filter(l, principal_filter(l, x)) == ji.test(x),
              id + ": element " + std::to_string(x));
  });

  guarded(C, "filter_membership_equivalence", id, [&] {
    for (int x = 0; x < l.n(); ++x) {
      int pfx = fl.index_of(principal_filter(l, x));
      for (int i = 0; i < m; ++i) {
        bool leq_pf = pfx >= 0 && fl.lattice.leq(i, pfx);
        bool contains = principal_filter(l, x).is_subset_of(fl.filters[i]);
        bool member = fl.filters[i].test(x);
        C.tally("filter_membership_equivalence", leq_pf == contains && contains == member,
                id + ": x=" + std::to_string(x) + " filter " + std::to_string(i));
      }
    }
  });

  guarded(C, "principal_filter_embedding", id, [&] {
    for (int x = 0; x < l.n(); ++x)
      for (int y = 0; y < l.n(); ++y) {
        bool meets = union_meet(l, principal_filter(l, x), principal_filter(l, y)) ==
                     principal_filter(l, l.meet(x, y));
        bool joins = (principal_filter(l, x) & principal_filter(l, y)) ==
                     principal_filter(l, l.join(x, y));
        C.tally("principal_filter_embedding", meets && joins,
                id + ": pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
      }
  });

  PrimePoset pp = prime_poset_from(l, fl);

  guarded(C, "prime_separates_filter_pairs", id, [&] {
    for (int i = 0; i < m; ++i)
      for (int x = 0; x < l.n(); ++x) {
        if (fl.filters[i].test(x)) continue;  // PF(x) above the filter
        bool found = false;
        for (const Subset& p : pp.primes)
          if (fl.filters[i].is_subset_of(p) && !p.test(x)) {
            found = true;
            break;
          }
        C.tally("prime_separates_filter_pairs", found,
                id + ": filter " + std::to_string(i) + " vs x=" + std::to_string(x));
      }
  });

  guarded(C, "filter_irreducible_iff_prime", id, [&] {
    JiPrimeReport rep = ji_prime_check(l, fl);
    C.tally("filter_irreducible_iff_prime", rep.holds, id + ": " + rep.failure);
  });

  guarded(C, "phi_embedding", id, [&] {
    std::vector<Subset> phis;
    phis.reserve(l.n());
    for (int x = 0; x < l.n(); ++x) phis.push_back(phi(pp, x));
    for (int x = 0; x < l.n(); ++x) {
      C.tally("phi_embedding", is_order_ideal(pp.order, phis[x]),
              id + ": phi(" + std::to_string(x) + ") is not an ideal");
      for (int y = 0; y < l.n(); ++y) {
        bool hom = phi(pp, l.meet(x, y)) == (phis[x] & phis[y]) &&
                   phi(pp, l.join(x, y)) == (phis[x] | phis[y]);
        bool inj = x == y || !(phis[x] == phis[y]);
        C.tally("phi_embedding", hom && inj,
                id + ": pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
  });

  guarded(C, "prime_separates_incomparables", id, [&] {
    for (int x = 0; x < l.n(); ++x)
      for (int y = 0; y < l.n(); ++y) {
        if (l.leq(x, y)) continue;
        int p = separating_prime(l, pp, x, y);
        C.tally("prime_separates_incomparables", pp.primes[p].test(x) && !pp.primes[p].test(y),
                id + ": pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
      }
  });
}

// Separation on lattices too large for filter enumeration: scan the verified
// principal primes.
inline void separation_checks_large(const FiniteLattice& l, const std::string& id, Collector& C) {
  guarded(C, "prime_separates_incomparables", id, [&] {
    PrimePoset pp = principal_primes(l);
    for (int x = 0; x < l.n(); ++x)
      for (int y = 0; y < l.n(); ++y) {
        if (l.leq(x, y)) continue;
        int p = separating_prime(l, pp, x, y);
        C.tally("prime_separates_incomparables", pp.primes[p].test(x) && !pp.primes[p].test(y),
                id + ": pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
      }
  });
}

// Chain lemmas along a descent chain produced by classify_prime.
template <class L, class E = typename L::element_type>
void chain_checks(const L& lat, const std::vector<Covering<E>>& chain, const std::string& id,
                  Collector& C) {
  if (chain.empty()) return;
  auto sep = lat.separator(chain.front());
  for (std::size_t i = 0; i < chain.size(); ++i) {
    C.tally("transpose_preserves_separator", lat.separator(chain[i]) == sep,
            id + ": link " + std::to_string(i));
    if (i + 1 < chain.size())
      C.tally("down_step_descends",
              lat.leq(chain[i + 1].upper, chain[i].upper) && !(chain[i + 1].upper == chain[i].upper),
              id + ": link " + std::to_string(i));
    for (std::size_t j = i + 1; j < chain.size(); ++j)
      C.tally("transpose_transitive", is_downward_transpose(lat, chain[i], chain[j]),
              id + ": links " + std::to_string(i) + "," + std::to_string(j));
  }
  for (std::size_t i = 1; i + 1 < chain.size(); i += 2) {
    guarded(C, "transpose_directed", id, [&] {
      Covering<E> w = directedness_witness(lat, chain[0], chain[i], chain[i + 1]);
      C.tally("transpose_directed", w.lower == chain[i + 1].lower && w.upper == chain[i + 1].upper,
              id + ": witness at " + std::to_string(i));
    });
  }
}

// --- built-in window machinery (engine-side brute-force search) -------------

inline std::vector<Tuple> grid_box(const Tuple& lo, const Tuple& hi) {
  std::vector<Tuple> out;
  Tuple cur = lo;
  for (;;) {
    out.push_back(cur);
    int i = static_cast<int>(cur.size()) - 1;
    while (i >= 0 && cur[i] == hi[i]) {
      cur[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

inline std::vector<Tuple> bfin_subsets(const Tuple& hi) {
  std::vector<Tuple> out;
  for (std::uint32_t mask = 0; mask < (1u << hi.size()); ++mask) {
    Tuple t;
    for (std::size_t i = 0; i < hi.size(); ++i)
      if (mask & (1u << i)) t.push_back(hi[i]);
    out.push_back(std::move(t));
  }
  return out;
}

template <class L>
void raise_lower_checks(const L& lat, const std::vector<Tuple>& box, const Tuple& x,
                        const typename L::prime_type& p, bool expect_cover, const std::string& id,
                        Collector& C) {
  if (!lat.prime_contains(p, x)) {
    Tuple y = lat.raise(x, p);
    Tuple best = y;
    bool best_ok = false;
    for (const Tuple& z : box) {
      if (!lat.leq(x, z) || !lat.prime_contains(p, z)) continue;
      if (lat.leq(z, best) ) {
        best = z;
        best_ok = true;
      } else if (!lat.leq(best, z)) {
        C.fail("raise_adds_one_prime", id + ": window minimum is not unique");
        return;
      }
    }
    C.tally("raise_adds_one_prime", best_ok && best == y && lat.leq(x, y) && lat.prime_contains(p, y),
            id + ": raise disagrees with window search");
    if (expect_cover)
      C.tally("raise_adds_one_prime", is_covering_pair(lat, x, y), id + ": raise is not a cover move");
    else
      C.tally("raise_adds_one_prime", !is_covering_pair(lat, x, y),
              id + ": non-ideal extension still produced a cover");
  } else {
    Tuple y = lat.lower(x, p);
    Tuple best = y;
    bool best_ok = false;
    for (const Tuple& z : box) {
      if (!lat.leq(z, x) || lat.prime_contains(p, z)) continue;
      if (lat.leq(best, z)) {
        best = z;
        best_ok = true;
      } else if (!lat.leq(z, best)) {
        C.fail("lower_removes_one_prime", id + ": window maximum is not unique");
        return;
      }
    }
    C.tally("lower_removes_one_prime", best_ok && best == y && lat.leq(y, x) && !lat.prime_contains(p, y),
            id + ": lower disagrees with window search");
    if (expect_cover)
      C.tally("lower_removes_one_prime", is_covering_pair(lat, y, x), id + ": lower is not a cover move");
  }
}

}  // namespace verify_detail

inline VerifyReport run_verify_suite(const SuiteConfig& cfg, const FaultInjection& fault = {}) {
  using namespace verify_detail;
  Collector C(cfg.limits.witnesses_per_check);
  Rng rng(cfg.random_seed);

  // --- exhaustive posets ---------------------------------------------------
  std::vector<Poset> exhaustive = exhaustive_posets(cfg.max_poset_size);
  bool faulted = false;
  for (std::size_t i = 0; i < exhaustive.size(); ++i) {
    std::string id = "exh" + std::to_string(i);
    FiniteLattice l = ideal_lattice(exhaustive[i], cfg.limits.max_ideals);
    if (fault.corrupt_meet_table && !faulted && l.n() >= 3) {
      std::vector<std::uint16_t> meet = l.meet_table(), join = l.join_table();
      meet[static_cast<std::size_t>(l.top()) * l.n() + l.top()] = static_cast<std::uint16_t>(l.bottom());
      l = FiniteLattice::from_tables_unchecked(l.poset(), std::move(meet), std::move(join));
      id += "-faulted";
      faulted = true;
    }
    lattice_core_checks(l, id, C);
    if (l.n() <= cfg.limits.filter_lattice_max) filter_algebra_checks(l, id, C, cfg.limits);
  }

  // --- random posets (<= 8 elements) ---------------------------------------
  for (int t = 0; t < cfg.random_instances; ++t) {
    std::string id = "rand" + std::to_string(t);
    Poset p = random_poset(rng, 1 + rng.below(8), 1, 3);
    FiniteLattice l = ideal_lattice(p, cfg.limits.max_ideals);
    lattice_core_checks(l, id, C);
    separation_checks_large(l, id, C);  // principal-prime route scales to any size here
  }

  // --- random lattices at oracle scale (<= 16 elements) ---------------------
  int finite_coverings = 0;
  for (int t = 0; t < cfg.oracle_instances; ++t) {
    std::string id = "oracle" + std::to_string(t);
    FiniteLattice l = [&] {
      for (;;) {
        Poset p = random_poset(rng, 1 + rng.below(6), 1, 2);
        auto ideals = order_ideals(p, cfg.limits.max_ideals);
        if (ideals.size() <= 16) return ideal_lattice(p, cfg.limits.max_ideals);
      }
    }();
    lattice_core_checks(l, id, C);
    filter_algebra_checks(l, id, C, cfg.limits);

    // chain descent on a random covering of this lattice
    const auto& covers = l.poset().covers();
    if (!covers.empty() && finite_coverings < cfg.operator_cases) {
      ++finite_coverings;
      auto [a, b] = covers[rng.below(static_cast<int>(covers.size()))];
      guarded(C, "descent_classifies_primes", id, [&] {
        FiniteAdapter ad(l);
        auto res = classify_prime(ad, Covering<int>{a, b}, cfg.chain_budget);
        bool ok = res.status == VerdictStatus::Principal && res.oracle_principal == true &&
                  join_irreducibles(l).test(*res.generator) &&
                  ad.primes().primes[ad.separator({a, b})] == principal_filter(l, *res.generator);
        C.tally("descent_classifies_primes", ok, id + ": finite descent");
        chain_checks(ad, res.chain, id, C);
      });
    }
  }

  // --- built-ins -------------------------------------------------------------
  GridLattice z2 = GridLattice::integers(2);
  GridLattice z3 = GridLattice::integers(3);
  GridLattice n2 = GridLattice::naturals(2);
  BFinLattice bf;
  const Coord R = cfg.window_radius;

  auto random_grid_point = [&](int dims, Coord lo, Coord hi) {
    Tuple t(dims);
    for (int i = 0; i < dims; ++i) t[i] = rng.range(lo, hi);
    return t;
  };
  auto random_bfin_set = [&](Coord universe) {
    Tuple t;
    for (Coord k = 0; k < universe; ++k)
      if (rng.chance(1, 2)) t.push_back(k);
    return t;
  };

  // raise/lower vs window search, separator uniqueness, rank vs phi
  for (int t = 0; t < cfg.operator_cases; ++t) {
    std::string id = "zgrid2-op" + std::to_string(t);
    Tuple x = random_grid_point(2, -R / 2, R / 2);
    int axis = rng.below(2);
    Coord threshold = rng.range(-R / 2 - 2, R / 2 + 2);
    GridLattice::prime_type p{axis, threshold};
    Tuple lo(2), hi(2);
    for (int i = 0; i < 2; ++i) {
      lo[i] = std::min(x[i], threshold - 1) - 1;
      hi[i] = std::max(x[i], threshold) + 2;
    }
    bool expect_cover = !z2.prime_contains(p, x) ? threshold == x[axis] + 1 : threshold == x[axis];
    raise_lower_checks(z2, grid_box(lo, hi), x, p, expect_cover, id, C);

    // separator: unique prime switched across a covering
    Tuple up = x;
    ++up[rng.below(2)];
    auto sep = z2.separator({x, up});
    int switched = 0;
    for (const auto& q : z2.primes_in_band(-R - 2, R + 2))
      if (z2.prime_contains(q, up) != z2.prime_contains(q, x)) ++switched;
    C.tally("cover_adds_one_prime", switched == 1 && z2.prime_contains(sep, up) && !z2.prime_contains(sep, x),
            id + ": separator not unique in band");

    // rank difference through the meet equals the phi difference
    Tuple y = random_grid_point(2, -R / 2, R / 2);
    Tuple m = z2.meet(x, y);
    auto diff = sym_diff_primes(z2, phi_descriptor(z2, x), phi_descriptor(z2, y));
    C.tally("rank_matches_ideal_size",
            static_cast<Coord>(diff.size()) == rank_diff(z2, m, x) + rank_diff(z2, m, y),
            id + ": phi difference vs rank");
  }
  for (int t = 0; t < cfg.operator_cases; ++t) {
    std::string id = "bfin-op" + std::to_string(t);
    Tuple x = random_bfin_set(R);
    Coord index = rng.range(0, R + 1);
    BFinLattice::prime_type p{index};
    Tuple hi = x;
    if (!bf.contains_index(hi, index)) hi.insert(std::upper_bound(hi.begin(), hi.end(), index), index);
    for (Coord k = R + 2; k < R + 4; ++k) hi.push_back(k);
    raise_lower_checks(bf, bfin_subsets(hi), x, p, true, id, C);

    Tuple y = random_bfin_set(R);
    Tuple m = bf.meet(x, y);
    auto diff = sym_diff_primes(bf, phi_descriptor(bf, x), phi_descriptor(bf, y));
    C.tally("rank_matches_ideal_size",
            static_cast<Coord>(diff.size()) == rank_diff(bf, m, x) + rank_diff(bf, m, y),
            id + ": phi difference vs rank");

    if (!bf.contains_index(x, index)) {
      Tuple up = bf.raise(x, p);
      C.tally("cover_adds_one_prime", bf.separator({x, up}).index == index,
              id + ": separator of an insertion");
    }
  }

  // descent chains: secondary on the unbounded grid, principal on bfin and
  // the bounded grid
  int chain_cases = std::max(1, cfg.operator_cases / 8);
  for (int t = 0; t < chain_cases; ++t) {
    std::string id = "zgrid2-chain" + std::to_string(t);
    Tuple x = random_grid_point(2, -3, 3);
    Tuple up = x;
    ++up[rng.below(2)];
    auto res = classify_prime(z2, Covering<Tuple>{x, up}, cfg.chain_budget);
    C.tally("descent_classifies_primes",
            res.status == VerdictStatus::BudgetExceeded && res.oracle_principal == false &&
                res.chain_length == cfg.chain_budget,
            id + ": expected budget_exceeded with a secondary separator");
    chain_checks(z2, res.chain, id, C);
  }
  for (int t = 0; t < chain_cases; ++t) {
    std::string id = "bfin-chain" + std::to_string(t);
    Tuple x = random_bfin_set(R / 2 + 3);
    Coord add = rng.range(0, R / 2 + 4);
    if (bf.contains_index(x, add)) continue;
    Tuple up = bf.raise(x, {add});
    auto res = classify_prime(bf, Covering<Tuple>{x, up}, cfg.chain_budget);
    C.tally("descent_classifies_primes",
            res.status == VerdictStatus::Principal && res.generator == Tuple{add} &&
                res.chain_length == static_cast<int>(up.size()) && res.oracle_principal == true,
            id + ": expected principal descent to the inserted singleton");
    chain_checks(bf, res.chain, id, C);
  }
  for (int t = 0; t < chain_cases; ++t) {
    std::string id = "ngrid2-chain" + std::to_string(t);
    Tuple x = random_grid_point(2, 0, 5);
    int axis = rng.below(2);
    Tuple up = x;
    ++up[axis];
    auto res = classify_prime(n2, Covering<Tuple>{x, up}, cfg.chain_budget);
    Tuple gen(2, 0);
    gen[axis] = up[axis];
    C.tally("descent_classifies_primes",
            res.status == VerdictStatus::Principal && res.generator == gen &&
                res.oracle_principal == true,
            id + ": expected principal descent on the bounded grid");
    chain_checks(n2, res.chain, id, C);
  }

  // representation round-trips
  for (int t = 0; t < cfg.operator_cases; ++t) {
    std::string id = "roundtrip" + std::to_string(t);
    guarded(C, "representation_roundtrip", id, [&] {
      Tuple x0 = random_grid_point(2, -R / 2, R / 2), x = random_grid_point(2, -R / 2, R / 2);
      auto r2 = inverse_phi(z2, x0, phi_descriptor(z2, x));
      bool ok2 = r2.value == x &&
                 r2.steps == static_cast<int>(sym_diff_primes(z2, phi_descriptor(z2, x0),
                                                              phi_descriptor(z2, x)).size());
      C.tally("representation_roundtrip", ok2, id + ": zgrid2");

      Tuple y0 = random_grid_point(3, -3, 3), y = random_grid_point(3, -3, 3);
      auto r3 = inverse_phi(z3, y0, phi_descriptor(z3, y));
      C.tally("representation_roundtrip", r3.value == y, id + ": zgrid3");

      Tuple s0 = random_bfin_set(R), s = random_bfin_set(R);
      auto rb = inverse_phi(bf, s0, phi_descriptor(bf, s));
      bool okb = rb.value == s &&
                 rb.steps == static_cast<int>(sym_diff_primes(bf, phi_descriptor(bf, s0),
                                                              phi_descriptor(bf, s)).size());
      C.tally("representation_roundtrip", okb, id + ": bfin");

      // descriptor direction
      GridIdeal q = phi_descriptor(z2, random_grid_point(2, -R / 2, R / 2));
      C.tally("representation_roundtrip",
              phi_descriptor(z2, inverse_phi(z2, x0, q).value) == q, id + ": zgrid2 descriptor");
      BFinIdeal qb = phi_descriptor(bf, random_bfin_set(R));
      C.tally("representation_roundtrip",
              phi_descriptor(bf, inverse_phi(bf, s0, qb).value) == qb, id + ": bfin descriptor");
    });
  }

  // finite-difference sublattice closure and convexity
  for (int t = 0; t < cfg.operator_cases / 2; ++t) {
    std::string id = "dp" + std::to_string(t);
    guarded(C, "finite_difference_sublattice", id, [&] {
      GridIdeal q1 = phi_descriptor(z2, random_grid_point(2, -4, 4));
      GridIdeal q2 = phi_descriptor(z2, random_grid_point(2, -4, 4));
      GridIdeal lo = dp_meet(z2, q1, q2), hi = dp_join(z2, q1, q2);
      bool ok = in_dp(z2, lo, q1) && in_dp(z2, hi, q1) &&
                dp_meet(z2, q1, q2) ==
                    phi_descriptor(z2, z2.meet(inverse_phi(z2, Tuple{0, 0}, q1).value,
                                               inverse_phi(z2, Tuple{0, 0}, q2).value));
      for (Coord a = lo.levels[0].value; a <= hi.levels[0].value && ok; ++a)
        for (Coord b = lo.levels[1].value; b <= hi.levels[1].value; ++b)
          if (!in_dp(z2, GridIdeal{{GridLevel::finite(a), GridLevel::finite(b)}}, q1)) {
            ok = false;
            break;
          }
      C.tally("finite_difference_sublattice", ok, id + ": zgrid2");

      BFinIdeal b1 = phi_descriptor(bf, random_bfin_set(R));
      BFinIdeal b2 = phi_descriptor(bf, random_bfin_set(R));
      BFinIdeal bm = dp_meet(bf, b1, b2), bj = dp_join(bf, b1, b2);
      bool okb = in_dp(bf, bm, b1) && in_dp(bf, bj, b1);
      for (Coord k = 0; k < R && okb; ++k)
        okb = bm.member(k) == (b1.member(k) && b2.member(k)) &&
              bj.member(k) == (b1.member(k) || b2.member(k));
      C.tally("finite_difference_sublattice", okb, id + ": bfin");
    });
  }

  VerifyReport rep;
  rep.config = cfg;
  rep.checks = C.finish();
  rep.total_failures = C.total_failures();
  return rep;
}

}  // namespace latrep
