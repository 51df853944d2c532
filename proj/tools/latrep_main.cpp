// latrep command-line front end: lattice I/O, the verification suite,
// chain-descent classification, component reports, and DOT/JSON emission.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "latrep/dot.hpp"
#include "latrep/json_io.hpp"
#include "latrep/plugin.hpp"
#include "latrep/verify.hpp"

using namespace latrep;

namespace {

Json read_json_source(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return Json::parse(buf.str());
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void write_output(std::string text, const std::string& out_path) {
  if (text.empty() || text.back() != '\n') text += '\n';
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot open output file " + out_path);
  out << text;
}

struct LatticeSpec {
  std::string name;        // zgridN | ngridN | bfin | finite | plugin
  std::string poset_path;  // finite
  std::string plugin_cmd;
  std::string plugin_table;
};

std::optional<GridLattice> parse_grid(const std::string& name) {
  auto parse_dims = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    std::string digits = name.substr(prefix.size());
    if (digits.empty()) return std::nullopt;
    return std::stoi(digits);
  };
  if (auto d = parse_dims("zgrid")) return GridLattice::integers(*d);
  if (auto d = parse_dims("ngrid")) return GridLattice::naturals(*d);
  return std::nullopt;
}

FiniteAdapter load_adapter(const LatticeSpec& spec) {
  if (spec.poset_path.empty()) throw Error("finite lattice needs --poset FILE");
  return FiniteAdapter(lattice_from_poset(poset_from_json(read_json_source(spec.poset_path))));
}

PluginLattice load_plugin(const LatticeSpec& spec) {
  if (!spec.plugin_table.empty()) return PluginLattice::table(spec.plugin_table);
  if (!spec.plugin_cmd.empty()) return PluginLattice::subprocess(spec.plugin_cmd);
  throw Error("plugin lattice needs --plugin-cmd CMD or --plugin-table FILE");
}

template <class L>
int run_classify(const L& lat, const Json& covering, int budget, const std::string& out) {
  using E = typename L::element_type;
  E lo, hi;
  if constexpr (std::is_same_v<E, Tuple>) {
    lo = tuple_from_json(covering.at(0));
    hi = tuple_from_json(covering.at(1));
  } else if constexpr (std::is_same_v<E, int>) {
    lo = covering.at(0).get<int>();
    hi = covering.at(1).get<int>();
  } else {
    lo = covering.at(0);
    hi = covering.at(1);
  }
  Covering<E> c{lo, hi};
  auto res = classify_prime(lat, c, budget);
  write_output(classify_result_to_json(lat, c, res).dump(2), out);
  return 0;
}

template <class L>
int run_window(const L& lat, const Json& lo_j, const Json& hi_j, bool as_dot, std::size_t bound,
               const std::string& out) {
  using E = typename L::element_type;
  E lo, hi;
  if constexpr (std::is_same_v<E, Tuple>) {
    lo = tuple_from_json(lo_j);
    hi = tuple_from_json(hi_j);
  } else {
    lo = lo_j;
    hi = hi_j;
  }
  Window<L> w = make_window(lat, lo, hi, bound);
  Poset labeled = w.lattice.poset();
  std::vector<std::string> labels;
  for (int i = 0; i < w.lattice.n(); ++i) {
    if constexpr (std::is_same_v<E, Tuple>) {
      labels.push_back(tuple_to_string(w.to_global(i)));
    } else {
      labels.push_back(Json(w.to_global(i)).dump());
    }
  }
  labeled.set_labels(labels);
  if (as_dot) {
    write_output(dot_poset(labeled, "window"), out);
  } else {
    Json j = poset_to_json(labeled);
    Json elems = Json::array();
    for (int i = 0; i < w.lattice.n(); ++i) elems.push_back(elem_to_json(w.to_global(i)));
    j["elements"] = elems;
    write_output(j.dump(2), out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"latrep: representation toolkit for distributive lattices"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--json", out_path, "write output to a file instead of stdout")->capture_default_str();

  // --- verify ---------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  SuiteConfig cfg;
  bool inject_fault = false;
  long long limit_ideals = static_cast<long long>(cfg.limits.max_ideals);
  verify->add_option("--seed", cfg.random_seed, "random seed");
  verify->add_option("--max-poset", cfg.max_poset_size, "exhaustive poset size bound");
  verify->add_option("--instances", cfg.random_instances, "random poset instances");
  verify->add_option("--oracle-instances", cfg.oracle_instances, "random filter-oracle lattices");
  verify->add_option("--cases", cfg.operator_cases, "operator cases per built-in");
  verify->add_option("--budget", cfg.chain_budget, "descent chain budget");
  verify->add_option("--radius", cfg.window_radius, "window radius for built-ins");
  verify->add_option("--limit", limit_ideals, "ideal/filter enumeration bound");
  verify->add_flag("--inject-fault", inject_fault, "corrupt one meet table (self-test)")
      ->group("");  // hidden

  // --- classify ---------------------------------------------------------------
  auto* classify = app.add_subcommand("classify", "classify a covering's separator by chain descent");
  LatticeSpec cl_spec;
  std::string covering_str;
  int budget = 32;
  classify->add_option("lattice", cl_spec.name, "zgridN | ngridN | bfin | finite | plugin")->required();
  classify->add_option("covering", covering_str, "json [lower, upper]")->required();
  classify->add_option("--budget", budget, "maximum chain length");
  classify->add_option("--poset", cl_spec.poset_path, "poset json for the finite lattice");
  classify->add_option("--plugin,--plugin-cmd", cl_spec.plugin_cmd, "plugin subprocess command");
  classify->add_option("--plugin-table", cl_spec.plugin_table, "plugin static table file");

  // --- window -----------------------------------------------------------------
  auto* window = app.add_subcommand("window", "materialize a finite interval of a lattice");
  LatticeSpec w_spec;
  std::string lo_str, hi_str;
  bool window_dot = false;
  long long window_limit = static_cast<long long>(kDefaultWindowBound);
  window->add_option("lattice", w_spec.name, "zgridN | ngridN | bfin | plugin")->required();
  window->add_option("lo", lo_str, "lower corner (json element)")->required();
  window->add_option("hi", hi_str, "upper corner (json element)")->required();
  window->add_flag("--dot", window_dot, "emit DOT instead of json");
  window->add_option("--limit", window_limit, "window size bound");
  window->add_option("--plugin,--plugin-cmd", w_spec.plugin_cmd, "plugin subprocess command");
  window->add_option("--plugin-table", w_spec.plugin_table, "plugin static table file");

  // --- components --------------------------------------------------------------
  auto* components = app.add_subcommand("components", "connected components of the ideal graph");
  LatticeSpec c_spec;
  components->add_option("lattice", c_spec.name, "zgridN | ngridN | bfin | finite")->required();
  components->add_option("--poset", c_spec.poset_path, "poset json for the finite case");

  // --- birkhoff ------------------------------------------------------------------
  auto* birkhoff = app.add_subcommand("birkhoff", "check the finite representation isomorphism");
  std::string b_poset;
  birkhoff->add_option("--poset", b_poset, "lattice poset json (or - for stdin)")->required();

  // --- dot --------------------------------------------------------------------
  auto* dot = app.add_subcommand("dot", "emit DOT for a lattice-derived object");
  std::string dot_object, dot_poset_path;
  LatticeSpec d_spec;
  std::string d_lo, d_hi;
  dot->add_option("object", dot_object, "lattice | filters | primes | ideals")->required();
  dot->add_option("--poset", dot_poset_path, "poset json source");
  dot->add_option("--lattice", d_spec.name, "built-in source (window)");
  dot->add_option("--from", d_lo, "window lower corner");
  dot->add_option("--to", d_hi, "window upper corner");

  // --- probe --------------------------------------------------------------------
  auto* probe = app.add_subcommand("probe", "width vs component-count exploration report");
  LatticeSpec p_spec;
  std::vector<long long> radii{2, 3, 4};
  probe->add_option("lattice", p_spec.name, "zgridN | ngridN | bfin | finite")->required();
  probe->add_option("--radius", radii, "window radii");
  probe->add_option("--poset", p_spec.poset_path, "poset json for the finite case");

  // --- gen --------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a seeded random poset");
  int gen_size = 6;
  std::uint64_t gen_seed = 1;
  int gen_num = 1, gen_den = 3;
  gen->add_option("--size", gen_size, "element count");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--edge-num", gen_num, "edge probability numerator");
  gen->add_option("--edge-den", gen_den, "edge probability denominator");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      cfg.limits.max_ideals = static_cast<std::size_t>(limit_ideals);
      FaultInjection fault;
      fault.corrupt_meet_table = inject_fault;
      VerifyReport rep = run_verify_suite(cfg, fault);
      write_output(rep.to_json().dump(2), out_path);
      if (rep.total_failures != 0) {
        for (const LemmaReport& r : rep.checks)
          if (!r.failures.empty()) {
            std::cerr << "FAIL " << r.lemma << ": " << r.failures.front() << "\n";
            break;
          }
        std::cerr << "verify: " << rep.total_failures << " failures\n";
        return 1;
      }
      std::cerr << "verify: all checks passed\n";
      return 0;
    }
    if (*classify) {
      Json covering = Json::parse(covering_str);
      if (auto g = parse_grid(cl_spec.name)) return run_classify(*g, covering, budget, out_path);
      if (cl_spec.name == "bfin") return run_classify(BFinLattice{}, covering, budget, out_path);
      if (cl_spec.name == "finite") return run_classify(load_adapter(cl_spec), covering, budget, out_path);
      if (cl_spec.name == "plugin") return run_classify(load_plugin(cl_spec), covering, budget, out_path);
      throw Error("unknown lattice " + cl_spec.name);
    }
    if (*window) {
      Json lo = Json::parse(lo_str), hi = Json::parse(hi_str);
      std::size_t bound = static_cast<std::size_t>(window_limit);
      if (auto g = parse_grid(w_spec.name)) return run_window(*g, lo, hi, window_dot, bound, out_path);
      if (w_spec.name == "bfin") return run_window(BFinLattice{}, lo, hi, window_dot, bound, out_path);
      if (w_spec.name == "plugin")
        return run_window(load_plugin(w_spec), lo, hi, window_dot, bound, out_path);
      throw Error("unknown lattice " + w_spec.name);
    }
    if (*components) {
      ComponentReport rep;
      if (auto g = parse_grid(c_spec.name)) {
        rep = components_symbolic(*g);
      } else if (c_spec.name == "bfin") {
        rep = components_symbolic(BFinLattice{});
      } else if (c_spec.name == "finite") {
        if (c_spec.poset_path.empty()) throw Error("finite components need --poset FILE");
        rep = components_finite(poset_from_json(read_json_source(c_spec.poset_path)));
      } else {
        throw UnsupportedLattice("no symbolic components for " + c_spec.name);
      }
      write_output(component_report_to_json(rep).dump(2), out_path);
      return 0;
    }
    if (*birkhoff) {
      FiniteLattice l = lattice_from_poset(poset_from_json(read_json_source(b_poset)));
      IsoReport rep = birkhoff_iso_check(l);
      write_output(iso_report_to_json(rep).dump(2), out_path);
      return rep.holds ? 0 : 1;
    }
    if (*dot) {
      std::string text;
      if (!d_spec.name.empty()) {
        auto g = parse_grid(d_spec.name);
        if (!g && d_spec.name != "bfin") throw Error("unknown lattice " + d_spec.name);
        if (dot_object != "lattice") throw Error("built-in windows only render object=lattice");
        Json lo = Json::parse(d_lo), hi = Json::parse(d_hi);
        std::ostringstream tmp;
        if (g) {
          Window<GridLattice> w = make_window(*g, tuple_from_json(lo), tuple_from_json(hi));
          Poset labeled = w.lattice.poset();
          std::vector<std::string> labels;
          for (int i = 0; i < w.lattice.n(); ++i) labels.push_back(tuple_to_string(w.to_global(i)));
          labeled.set_labels(labels);
          text = dot_poset(labeled, d_spec.name);
        } else {
          Window<BFinLattice> w = make_window(BFinLattice{}, tuple_from_json(lo), tuple_from_json(hi));
          Poset labeled = w.lattice.poset();
          std::vector<std::string> labels;
          for (int i = 0; i < w.lattice.n(); ++i)
            labels.push_back(tuple_to_string(w.to_global(i), '{', '}'));
          labeled.set_labels(labels);
          text = dot_poset(labeled, d_spec.name);
        }
      } else {
        if (dot_poset_path.empty()) throw Error("dot needs --poset FILE or --lattice NAME");
        Poset p = poset_from_json(read_json_source(dot_poset_path));
        if (dot_object == "lattice") {
          text = dot_lattice(lattice_from_poset(p));
        } else if (dot_object == "filters") {
          text = dot_filter_lattice(enumerate_filters(lattice_from_poset(p)));
        } else if (dot_object == "primes") {
          text = dot_prime_poset(prime_poset(lattice_from_poset(p)));
        } else if (dot_object == "ideals") {
          text = dot_ideal_graph(p);
        } else {
          throw Error("unknown dot object " + dot_object);
        }
      }
      write_output(text, out_path);
      return 0;
    }
    if (*probe) {
      std::vector<Coord> rad(radii.begin(), radii.end());
      ProbeReport rep;
      if (auto g = parse_grid(p_spec.name)) {
        rep = conjecture_probe(*g, rad);
      } else if (p_spec.name == "bfin") {
        rep = conjecture_probe(BFinLattice{}, rad);
      } else if (p_spec.name == "finite") {
        if (p_spec.poset_path.empty()) throw Error("finite probe needs --poset FILE");
        rep = conjecture_probe(
            FiniteAdapter(lattice_from_poset(poset_from_json(read_json_source(p_spec.poset_path)))),
            rad);
      } else {
        throw Error("unknown lattice " + p_spec.name);
      }
      write_output(probe_report_to_json(rep).dump(2), out_path);
      return 0;
    }
    if (*gen) {
      Rng rng(gen_seed);
      std::vector<CoverPair> cov;
      for (int i = 0; i < gen_size; ++i)
        for (int j = i + 1; j < gen_size; ++j)
          if (rng.chance(gen_num, gen_den)) cov.emplace_back(i, j);
      write_output(poset_to_json(poset_from_covers(gen_size, cov)).dump(2), out_path);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
