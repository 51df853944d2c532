#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "latrep/dot.hpp"
#include "latrep/json_io.hpp"
#include "latrep/plugin.hpp"
#include "latrep/rng.hpp"
#include "latrep/transpose.hpp"
#include "latrep/window.hpp"

using namespace latrep;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Poset random_poset(Rng& rng, int n) {
  std::vector<CoverPair> cov;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(1, 3)) cov.emplace_back(i, j);
  return poset_from_covers(n, cov);
}

// Static plugin table covering every query the library can make about a
// finite lattice, generated from the adapter itself.
std::string write_plugin_table(const FiniteAdapter& ad, const std::string& path) {
  std::ofstream out(path);
  const FiniteLattice& l = ad.lattice();
  for (int x = 0; x < l.n(); ++x) {
    for (int y = 0; y < l.n(); ++y) {
      out << Json{{"op", "leq"}, {"args", {x, y}}, {"result", l.leq(x, y)}}.dump() << "\n";
      out << Json{{"op", "meet"}, {"args", {x, y}}, {"result", l.meet(x, y)}}.dump() << "\n";
      out << Json{{"op", "join"}, {"args", {x, y}}, {"result", l.join(x, y)}}.dump() << "\n";
    }
    out << Json{{"op", "upper_covers"}, {"args", {x}}, {"result", l.poset().upper_covers_of(x)}}.dump()
        << "\n";
    out << Json{{"op", "lower_covers"}, {"args", {x}}, {"result", l.poset().lower_covers_of(x)}}.dump()
        << "\n";
  }
  return path;
}

}  // namespace

TEST_CASE("poset json round-trip") {
  Rng rng(5050);
  for (int t = 0; t < 30; ++t) {
    Poset p = random_poset(rng, 1 + rng.below(7));
    Poset q = poset_from_json(poset_to_json(p));
    REQUIRE(p.n() == q.n());
    REQUIRE(p.covers() == q.covers());
  }
  Json labeled = Json::parse(R"({"n":2,"labels":["a","b"],"covers":[[0,1]]})");
  Poset p = poset_from_json(labeled);
  CHECK(p.label(1) == "b");
  CHECK(poset_to_json(p) == labeled);

  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"n":2})")), Error);
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"n":2,"covers":[[0,1],[1,0]]})")), CycleDetected);
}

TEST_CASE("descriptor json round-trip") {
  GridIdeal q{{GridLevel::neg_inf(), GridLevel::finite(-3), GridLevel::pos_inf()}};
  CHECK(grid_ideal_from_json(ideal_to_json(q)) == q);
  CHECK(ideal_to_json(q)["levels"] == Json::parse(R"(["-inf",-3,"+inf"])"));

  BFinIdeal b = BFinIdeal::periodic(3, {0, 2}, {5});
  CHECK(bfin_ideal_from_json(ideal_to_json(b)) == b);
  BFinIdeal fin = BFinIdeal::finite_set({1, 4});
  CHECK(bfin_ideal_from_json(ideal_to_json(fin)) == fin);
}

TEST_CASE("classify verdict json carries the documented fields") {
  GridLattice z2 = GridLattice::integers(2);
  Covering<Tuple> c{{0, 0}, {1, 0}};
  Json j = classify_result_to_json(z2, c, classify_prime(z2, c, 8));
  CHECK(j["verdict"] == "budget_exceeded");
  CHECK(j["budget"] == 8);
  CHECK(j["covering"] == Json::parse("[[0,0],[1,0]]"));
  CHECK(j["chain"].size() == 8);
  CHECK(j["separator"]["kind"] == "secondary");
  CHECK(j["oracleKind"] == "secondary");

  BFinLattice bf;
  Covering<Tuple> cb{{}, {5}};
  Json jb = classify_result_to_json(bf, cb, classify_prime(bf, cb, 8));
  CHECK(jb["verdict"] == "principal");
  CHECK(jb["generator"] == Json::parse("[5]"));
  CHECK(jb["separator"]["index"] == 5);
}

TEST_CASE("component reports match their golden files") {
  std::string dir = LATREP_GOLDEN_DIR;
  CHECK(component_report_to_json(components_symbolic(GridLattice::integers(2))).dump(2) + "\n" ==
        read_file(dir + "/components_zgrid2.json"));
  CHECK(component_report_to_json(components_symbolic(BFinLattice{})).dump(2) + "\n" ==
        read_file(dir + "/components_bfin.json"));
}

TEST_CASE("dot output is deterministic and matches the golden file") {
  Poset chain3 = poset_from_covers(3, {{0, 1}, {1, 2}});
  std::string dot = dot_lattice(lattice_from_poset(chain3));
  CHECK(dot == read_file(std::string(LATREP_GOLDEN_DIR) + "/dot_chain3.txt"));
  // 3 nodes, 2 edges
  CHECK(std::count(dot.begin(), dot.end(), '>') == 2);

  FiniteLattice div12 = lattice_from_poset(poset_from_covers(
      6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}}, {"1", "2", "3", "4", "6", "12"}));
  std::string primes_dot = dot_prime_poset(prime_poset(div12));
  CHECK(std::count(primes_dot.begin(), primes_dot.end(), '>') == 1);  // PF(2) -< PF(4)

  std::string ideals_dot = dot_ideal_graph(poset_from_covers(3, {}));
  CHECK(std::count(ideals_dot.begin(), ideals_dot.end(), '-') >= 12);  // cube graph
  CHECK(ideals_dot.find("lightsalmon") == std::string::npos);          // one component, one color
}

TEST_CASE("window separator agrees across plugin table and adapter") {
  FiniteAdapter ad(lattice_from_poset(poset_from_covers(
      6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}})));
  std::string path = write_plugin_table(ad, "plugin_table_divisor12.jsonl");
  PluginLattice plug = PluginLattice::table(path);

  CHECK(plug.leq(0, 5));
  CHECK(plug.meet(3, 4) == Json(1));
  CHECK(plug.join(3, 4) == Json(5));

  Window<PluginLattice> wp = make_window(plug, Json(0), Json(5));
  Window<FiniteAdapter> wa = make_window(ad, 0, 5);
  REQUIRE(wp.lattice.n() == wa.lattice.n());
  for (int i = 0; i < wp.lattice.n(); ++i)
    for (int j = 0; j < wp.lattice.n(); ++j) {
      REQUIRE(wp.lattice.leq(i, j) == wa.lattice.leq(i, j));
      REQUIRE(wp.lattice.meet(i, j) == wa.lattice.meet(i, j));
    }
  // covering 2 -< 4 in lattice indices; map through each window
  Subset sp = window_separator(wp, wp.from_global(Json(1)), wp.from_global(Json(3)));
  Subset sa = window_separator(wa, wa.from_global(1), wa.from_global(3));
  REQUIRE(sp == sa);

  auto res = classify_prime(plug, Covering<Json>{Json(1), Json(3)}, 16);
  CHECK(res.status == VerdictStatus::Principal);
  CHECK(*res.generator == Json(3));
  CHECK_FALSE(res.oracle_principal.has_value());  // bare oracles carry no prime family

  CHECK_THROWS_AS(plug.leq(Json(0), Json(99)), PluginError);  // outside the table
  std::remove(path.c_str());
}

TEST_CASE("subprocess plugin serves the integer chain") {
  PluginLattice chain = PluginLattice::subprocess(LATREP_PLUGIN_CHAIN);
  CHECK(chain.leq(Json(-2), Json(5)));
  CHECK(chain.meet(Json(3), Json(7)) == Json(3));
  CHECK(chain.upper_covers(Json(0)) == std::vector<Json>{Json(1)});

  Window<PluginLattice> w = make_window(chain, Json(0), Json(4));
  CHECK(w.lattice.n() == 5);
  CHECK(rank_diff(chain, Json(0), Json(4)) == 4);

  auto res = classify_prime(chain, Covering<Json>{Json(2), Json(3)}, 8);
  CHECK(res.status == VerdictStatus::Principal);
  CHECK(*res.generator == Json(3));
  CHECK(res.chain_length == 1);
}

TEST_CASE("prime family reports") {
  Json z = prime_family_report(GridLattice::integers(2));
  REQUIRE(z["families"].size() == 2);  // two Z-indexed chain families
  for (const Json& f : z["families"]) {
    CHECK(f["shape"] == "chain");
    CHECK(f["kind"] == "secondary");
  }

  Json b = prime_family_report(BFinLattice{});
  REQUIRE(b["families"].size() == 1);  // one N-indexed antichain
  CHECK(b["families"][0]["shape"] == "antichain");
  CHECK(b["families"][0]["kind"] == "principal");

  Json n1 = prime_family_report(GridLattice::naturals(1));
  CHECK(n1["families"][0]["kind"] == "principal");

  FiniteAdapter ad(lattice_from_poset(poset_from_covers(3, {{0, 1}, {1, 2}})));
  Json fa = prime_family_report(ad);
  REQUIRE(fa["primes"].size() == 2);
  CHECK(fa["primes"][0]["generator"] == 1);

  PluginLattice chain = PluginLattice::subprocess(LATREP_PLUGIN_CHAIN);
  CHECK_THROWS_AS(prime_family_report(chain), UnsupportedLattice);
  CHECK_THROWS_AS(in_dp(chain, Json(0), Json(1)), IncomparableBases);
}

TEST_CASE("probe report json shape") {
  Json j = probe_report_to_json(conjecture_probe(GridLattice::integers(2), {1}));
  CHECK(j["lattice"] == "zgrid2");
  CHECK(j["componentClasses"] == 9);
  CHECK(j["windows"][0]["latticeWidth"] == 3);
}
