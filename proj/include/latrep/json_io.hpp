#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latrep/lattice.hpp"
#include "latrep/lazy.hpp"
#include "latrep/repr.hpp"
#include "latrep/transpose.hpp"

namespace latrep {

using Json = nlohmann::json;

// --- poset schema: {"n": int, "labels": [string]?, "covers": [[int,int],...]}

inline Json poset_to_json(const Poset& p) {
  Json j;
  j["n"] = p.n();
  if (p.has_labels()) j["labels"] = p.labels();
  Json covers = Json::array();
  for (auto [a, b] : p.covers()) covers.push_back(Json::array({a, b}));
  j["covers"] = covers;
  return j;
}

inline Poset poset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("covers"))
    throw Error("poset json needs the fields \"n\" and \"covers\"");
  int n = j.at("n").get<int>();
  std::vector<CoverPair> covers;
  for (const Json& e : j.at("covers"))
    covers.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return poset_from_covers(n, covers, std::move(labels));
}

// --- elements

inline Json elem_to_json(const Tuple& x) { return Json(x); }
inline Json elem_to_json(int x) { return Json(x); }
inline Json elem_to_json(const Json& x) { return x; }
template <class A, class B>
Json elem_to_json(const std::pair<A, B>& x) {
  return Json::array({elem_to_json(x.first), elem_to_json(x.second)});
}

inline Tuple tuple_from_json(const Json& j) {
  if (!j.is_array()) throw Error("element literal must be a json array");
  Tuple t;
  for (const Json& v : j) t.push_back(v.get<Coord>());
  return t;
}

// --- prime descriptors

inline Json prime_to_json(const GridLattice& lat, const GridLattice::prime_type& p) {
  Json j;
  j["family"] = "grid-axis";
  j["axis"] = p.axis;
  j["threshold"] = p.threshold;
  auto k = lat.prime_kind(p);
  j["kind"] = k.principal ? "principal" : "secondary";
  if (k.principal) j["generator"] = elem_to_json(k.generator);
  return j;
}

inline Json prime_to_json(const BFinLattice& lat, const BFinLattice::prime_type& p) {
  Json j;
  j["family"] = "bfin-index";
  j["index"] = p.index;
  auto k = lat.prime_kind(p);
  j["kind"] = "principal";
  j["generator"] = elem_to_json(k.generator);
  return j;
}

inline Json prime_to_json(const FiniteAdapter& lat, FiniteAdapter::prime_type p) {
  Json j;
  j["family"] = "finite";
  j["index"] = p;
  j["kind"] = "principal";
  j["generator"] = *lat.primes().witness[p];
  j["members"] = lat.primes().primes[p].members();
  return j;
}

// --- prime families (the primes_of view of a built-in lattice)

inline Json prime_family_report(const GridLattice& lat) {
  Json families = Json::array();
  for (int axis = 0; axis < lat.dims(); ++axis) {
    Json f;
    f["family"] = "axis" + std::to_string(axis);
    f["shape"] = "chain";
    f["indexedBy"] = lat.bounded_below() ? "thresholds k >= 1" : "thresholds k in Z";
    f["predicate"] = "x[" + std::to_string(axis) + "] >= k";
    f["kind"] = lat.bounded_below() ? "principal" : "secondary";
    families.push_back(f);
  }
  return Json{{"lattice", lat.name()}, {"families", families}};
}

inline Json prime_family_report(const BFinLattice& lat) {
  Json f;
  f["family"] = "indices";
  f["shape"] = "antichain";
  f["indexedBy"] = "k in N";
  f["predicate"] = "k in S";
  f["kind"] = "principal";
  return Json{{"lattice", lat.name()}, {"families", Json::array({f})}};
}

inline Json prime_family_report(const FiniteAdapter& lat) {
  Json primes = Json::array();
  const PrimePoset& pp = lat.primes();
  for (std::size_t i = 0; i < pp.primes.size(); ++i)
    primes.push_back(Json{{"members", pp.primes[i].members()},
                          {"kind", "principal"},
                          {"generator", *pp.witness[i]}});
  return Json{{"lattice", lat.name()}, {"primes", primes}};
}

template <class L>
Json prime_family_report(const L&) {
  static_assert(!SymbolicPrimes<L>, "built-in families have dedicated overloads");
  throw UnsupportedLattice("bare oracle lattices have no symbolic prime family");
}

// --- ideal descriptors

inline Json ideal_to_json(const GridIdeal& q) {
  Json levels = Json::array();
  for (const GridLevel& l : q.levels) {
    if (l.kind == GridLevel::Kind::Finite)
      levels.push_back(l.value);
    else
      levels.push_back(l.to_string());
  }
  return Json{{"levels", levels}};
}

inline GridIdeal grid_ideal_from_json(const Json& j) {
  GridIdeal q;
  for (const Json& v : j.at("levels")) {
    if (v.is_string()) {
      std::string s = v.get<std::string>();
      if (s == "-inf")
        q.levels.push_back(GridLevel::neg_inf());
      else if (s == "+inf")
        q.levels.push_back(GridLevel::pos_inf());
      else
        throw Error("grid level must be an integer, \"-inf\" or \"+inf\"");
    } else {
      q.levels.push_back(GridLevel::finite(v.get<Coord>()));
    }
  }
  return q;
}

inline Json ideal_to_json(const BFinIdeal& q) {
  Json j;
  switch (q.base) {
    case BFinIdeal::Base::Finite: j["base"] = "finite"; break;
    case BFinIdeal::Base::Cofinite: j["base"] = "cofinite"; break;
    case BFinIdeal::Base::Periodic:
      j["base"] = "periodic";
      j["modulus"] = q.modulus;
      j["residues"] = q.residues;
      break;
  }
  j["delta"] = q.delta;
  return j;
}

inline BFinIdeal bfin_ideal_from_json(const Json& j) {
  std::string base = j.at("base").get<std::string>();
  std::vector<Coord> delta;
  if (j.contains("delta")) delta = j.at("delta").get<std::vector<Coord>>();
  if (base == "finite") return BFinIdeal::finite_set(std::move(delta));
  if (base == "cofinite") return BFinIdeal::cofinite(std::move(delta));
  if (base == "periodic")
    return BFinIdeal::periodic(j.at("modulus").get<Coord>(),
                               j.at("residues").get<std::vector<Coord>>(), std::move(delta));
  throw Error("unknown bfin ideal base \"" + base + "\"");
}

// --- reports

inline Json iso_report_to_json(const IsoReport& r) {
  Json j;
  j["holds"] = r.holds;
  j["latticeSize"] = r.lattice_size;
  j["idealCount"] = r.ideal_count;
  j["witness"] = r.holds ? Json(nullptr) : Json(r.witness);
  return j;
}

inline Json component_report_to_json(const ComponentReport& r) {
  Json j;
  j["lattice"] = r.lattice_name;
  Json classes = Json::array();
  for (const ComponentClass& c : r.classes) {
    Json jc;
    jc["label"] = c.label;
    jc["representative"] = c.representative;
    jc["isoType"] = c.iso_type;
    if (c.phi_image) jc["phiImage"] = true;
    if (c.size >= 0) jc["size"] = c.size;
    classes.push_back(jc);
  }
  j["classes"] = classes;
  Json counts;
  counts["finiteClasses"] = r.finite_class_count;
  if (r.unbounded_note) counts["unboundedNote"] = *r.unbounded_note;
  j["counts"] = counts;
  return j;
}

inline Json probe_report_to_json(const ProbeReport& r) {
  Json j;
  j["lattice"] = r.lattice_name;
  Json windows = Json::array();
  for (const ProbeWindow& w : r.windows) {
    windows.push_back(Json{{"radius", w.radius},
                           {"windowSize", w.window_size},
                           {"latticeWidth", w.lattice_width},
                           {"primeWidth", w.prime_width}});
  }
  j["windows"] = windows;
  if (r.component_classes) j["componentClasses"] = *r.component_classes;
  if (r.component_note) j["componentNote"] = *r.component_note;
  return j;
}

template <class L, class E = typename L::element_type>
Json classify_result_to_json(const L& lat, const Covering<E>& c, const ClassifyResult<E>& res) {
  Json j;
  j["covering"] = Json::array({elem_to_json(c.lower), elem_to_json(c.upper)});
  j["verdict"] = res.status == VerdictStatus::Principal ? "principal" : "budget_exceeded";
  j["budget"] = res.budget;
  j["chainLength"] = res.chain_length;
  Json chain = Json::array();
  for (const auto& link : res.chain)
    chain.push_back(Json::array({elem_to_json(link.lower), elem_to_json(link.upper)}));
  j["chain"] = chain;
  if (res.generator) j["generator"] = elem_to_json(*res.generator);
  if constexpr (SymbolicPrimes<L>) {
    j["separator"] = prime_to_json(lat, lat.separator(c));
  }
  if (res.oracle_principal) j["oracleKind"] = *res.oracle_principal ? "principal" : "secondary";
  return j;
}

}  // namespace latrep
