// ordkit: computational order theory at desk scale: posets, join doctrines,
// way-below structure, two-valued and interval-valued dualities, exact
// piecewise-linear arithmetic, and the verification suites behind them.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ordkit/continuity.hpp"
#include "ordkit/doctrine.hpp"
#include "ordkit/enumerate.hpp"
#include "ordkit/gelfand.hpp"
#include "ordkit/io.hpp"
#include "ordkit/suites.hpp"
#include "ordkit/two_duality.hpp"
#include "ordkit/umodule.hpp"

using namespace ordkit;

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int env_max_size(int fallback) {
  if (const char* s = std::getenv("ORDKIT_MAX_SIZE")) return std::atoi(s);
  return fallback;
}

struct CommonArgs {
  std::string doctrine = "directed";
  std::string input;
};

Json waybelow_json(const WayBelowRelation& rel) {
  Json rows = Json::array();
  for (int x = 0; x < rel.base.size(); ++x) {
    Json row = Json::array();
    for (int y = 0; y < rel.base.size(); ++y) row.push_back(rel.way(y, x));
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_posets_enumerate(int n, const std::string& kind, bool dot) {
  const int bound = env_max_size(8);
  std::vector<FinPoset> out;
  if (kind == "poset")
    out = enumerate_posets(n, bound);
  else if (kind == "lattice")
    out = enumerate_lattices(n, bound);
  else if (kind == "distributive")
    out = enumerate_distributive_lattices(n, bound);
  else
    throw CLI::ValidationError("--kind must be poset|lattice|distributive");
  for (const auto& p : out) {
    if (dot)
      std::cout << poset_to_dot(p);
    else
      std::cout << poset_to_json(p).dump() << "\n";
  }
  return 0;
}

int cmd_continuity(const CommonArgs& args) {
  const FinPoset x = poset_from_json(read_json_file(args.input));
  const auto& pair = doctrine_pair_by_name(args.doctrine);
  const auto rel = waydown(x, pair.phi);
  const auto crit = continuity_criteria(x, pair.phi);
  Json report{{"doctrine", pair.phi.name},
              {"continuous", is_continuous(x, pair.phi)},
              {"algebraic", is_algebraic(x, pair.phi)},
              {"compacts", mask_elements(rel.compacts())},
              {"waybelow", waybelow_json(rel)},
              {"criteria",
               Json{{"basis", crit.basis},
                    {"adjoint", crit.adjoint},
                    {"meet_preservation", crit.meet_pres},
                    {"distributivity", crit.distributive}}}};
  print_json(report);
  return 0;
}

int cmd_dual(const CommonArgs& args, const std::string& direction) {
  const FinPoset x = poset_from_json(read_json_file(args.input));
  const auto& pair = doctrine_pair_by_name(args.doctrine);
  if (direction == "lattice") {
    const FinPoset dual = dual_of_lattice(x, pair);
    const auto witness = roundtrip(x, pair);
    print_json(Json{{"dual", poset_to_json(dual)},
                    {"witness",
                     Json{{"forward", witness.forward.values},
                          {"backward", witness.backward.values}}}});
  } else if (direction == "inflattice") {
    const auto dual = dual_of_inflattice(x, pair);
    Json elements = Json::array();
    for (Mask m : dual.elements) elements.push_back(mask_elements(m));
    print_json(Json{{"dual", poset_to_json(dual.lattice)}, {"filters", std::move(elements)}});
  } else {
    throw CLI::ValidationError("--direction must be lattice|inflattice");
  }
  return 0;
}

int cmd_suite_run(const std::string& name, SuiteParams params, bool as_json) {
  params.max_size = env_max_size(params.max_size);
  const auto report = run_suite(name, params);
  if (as_json) {
    print_json(report.to_json());
  } else {
    for (const auto& ch : report.checks)
      std::cout << (ch.pass ? "[pass] " : "[FAIL] ") << ch.name << ": " << ch.detail << "\n";
    std::cout << report.suite << ": " << (report.all_pass() ? "PASS" : "FAIL") << " ("
              << report.wall_seconds << "s)\n";
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordkit: order-theoretic dualities at desk scale"};
  app.require_subcommand(1);

  // posets enumerate
  auto* posets = app.add_subcommand("posets", "poset corpus tools");
  posets->require_subcommand(1);
  auto* penum = posets->add_subcommand("enumerate", "stream canonical posets or lattices");
  int penum_n = 4;
  std::string penum_kind = "lattice";
  bool penum_dot = false;
  penum->add_option("-n,--size", penum_n, "element count");
  penum->add_option("--kind", penum_kind, "poset|lattice|distributive");
  penum->add_flag("--dot", penum_dot, "emit dot Hasse diagrams instead of JSON");

  // continuity
  auto* cont = app.add_subcommand("continuity", "way-below report for a finite lattice");
  CommonArgs cont_args;
  cont->add_option("--doctrine", cont_args.doctrine, "directed|empty-or-directed|nonempty|all");
  cont->add_option("--lattice", cont_args.input, "poset JSON file")->required();

  // dual
  auto* dual = app.add_subcommand("dual", "two-valued duality");
  CommonArgs dual_args;
  std::string dual_direction = "lattice";
  dual->add_option("--doctrine", dual_args.doctrine, "directed|empty-or-directed|nonempty|all");
  dual->add_option("--input", dual_args.input, "poset JSON file")->required();
  dual->add_option("--direction", dual_direction, "lattice|inflattice");

  // pl
  auto* pl = app.add_subcommand("pl", "piecewise-linear map operations");
  pl->require_subcommand(1);
  auto* pl_eval = pl->add_subcommand("eval", "evaluate a map");
  std::string pl_map, pl_x, pl_inner, pl_second;
  pl_eval->add_option("--map", pl_map, "PL map JSON file")->required();
  pl_eval->add_option("--x", pl_x, "rational p/q")->required();
  auto* pl_compose = pl->add_subcommand("compose", "outer after inner");
  pl_compose->add_option("--outer", pl_map)->required();
  pl_compose->add_option("--inner", pl_inner)->required();
  auto* pl_adjoint = pl->add_subcommand("adjoint", "right adjoint of a surjection");
  pl_adjoint->add_option("--map", pl_map)->required();
  auto* pl_rho = pl->add_subcommand("rho", "sup of f - g, truncated");
  pl_rho->add_option("--f", pl_map)->required();
  pl_rho->add_option("--g", pl_second)->required();
  auto* pl_classify = pl->add_subcommand("classify", "U / U-hat membership");
  pl_classify->add_option("--map", pl_map)->required();

  // umod
  auto* umod = app.add_subcommand("umod", "U-module operations");
  umod->require_subcommand(1);
  std::string umod_module = "interval", umod_lattice, umod_pair = "directed";
  std::string umod_a, umod_b, umod_r = "0/1";
  std::vector<std::string> umod_gens;
  for (const char* name : {"le_r", "rho", "glue", "filters"}) {
    auto* sub = umod->add_subcommand(name);
    sub->add_option("--module", umod_module, "interval|function");
    sub->add_option("--lattice", umod_lattice, "poset JSON (function module)");
    sub->add_option("--pair", umod_pair, "doctrine pair name");
    if (std::string(name) != "filters") {
      sub->add_option("-a", umod_a, "element (rational or JSON file)")->required();
      sub->add_option("-b", umod_b, "element")->required();
    }
    sub->add_option("-r", umod_r, "rational grade / threshold");
    if (std::string(name) == "filters")
      sub->add_option("--generator", umod_gens, "filter generators");
  }

  // gelfand
  auto* gel = app.add_subcommand("gelfand", "interval-valued duality constructions");
  gel->require_subcommand(1);
  auto* ury = gel->add_subcommand("urysohn", "separating morphism along a way-below pair");
  std::string ury_lattice, ury_doctrine = "directed", ury_y, ury_x;
  int ury_depth = 3;
  bool ury_interval = false;
  ury->add_option("--lattice", ury_lattice, "poset JSON file");
  ury->add_flag("--interval", ury_interval, "use the unit interval instead of a finite lattice");
  ury->add_option("--doctrine", ury_doctrine);
  ury->add_option("--y", ury_y, "element index, or rational with --interval")->required();
  ury->add_option("--x", ury_x, "element index, or rational with --interval")->required();
  ury->add_option("--depth", ury_depth, "dyadic depth");
  auto* approx = gel->add_subcommand("approx-inverse", "2/n reconstruction from a dual morphism");
  std::string approx_module, approx_f;
  int approx_n = 8;
  approx->add_option("--n", approx_n)->required();
  approx->add_option("--module", approx_module, "module description JSON")->required();
  approx->add_option("--f", approx_f, "least elements of f+ on the grid, JSON")->required();

  // suite
  auto* suite = app.add_subcommand("suite", "verification suites");
  suite->require_subcommand(1);
  auto* suite_run = suite->add_subcommand("run", "run a named suite");
  std::string suite_name;
  SuiteParams sp;
  bool suite_json = false;
  suite_run->add_option("name", suite_name, "saturation|sound4|cts-equiv|interpolation|hms|birkhoff|umod-metric|stack|urysohn|gelfand-roundtrip")->required();
  suite_run->add_option("--max-size", sp.max_size);
  suite_run->add_option("--samples", sp.samples);
  suite_run->add_option("--grid", sp.grid);
  suite_run->add_option("--depth", sp.depth);
  suite_run->add_option("--seed", sp.seed);
  suite_run->add_flag("--json", suite_json);
  auto* suite_list = suite->add_subcommand("list", "list suite names");

  // replay
  auto* rep = app.add_subcommand("replay", "re-run a recorded counterexample");
  std::string replay_file;
  rep->add_option("file", replay_file, "counterexample JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (penum->parsed()) return cmd_posets_enumerate(penum_n, penum_kind, penum_dot);
    if (cont->parsed()) return cmd_continuity(cont_args);
    if (dual->parsed()) return cmd_dual(dual_args, dual_direction);

    if (pl_eval->parsed()) {
      const PLMap m = plmap_from_json(read_json_file(pl_map));
      std::cout << m.eval(Rat::parse(pl_x)).str() << "\n";
      return 0;
    }
    if (pl_compose->parsed()) {
      const PLMap outer = plmap_from_json(read_json_file(pl_map));
      const PLMap inner = plmap_from_json(read_json_file(pl_inner));
      print_json(plmap_to_json(compose(outer, inner)));
      return 0;
    }
    if (pl_adjoint->parsed()) {
      print_json(plmap_to_json(right_adjoint_pl(plmap_from_json(read_json_file(pl_map)))));
      return 0;
    }
    if (pl_rho->parsed()) {
      const PLMap f = plmap_from_json(read_json_file(pl_map));
      const PLMap g = plmap_from_json(read_json_file(pl_second));
      std::cout << linf_rho(f, g).str() << "\n";
      return 0;
    }
    if (pl_classify->parsed()) {
      const auto c = classify(plmap_from_json(read_json_file(pl_map)));
      print_json(Json{{"in_U", c.in_U},
                      {"in_Uhat", c.in_Uhat},
                      {"continuous", c.continuous},
                      {"surjective", c.surjective}});
      return 0;
    }

    if (umod->parsed()) {
      const auto& pair = doctrine_pair_by_name(umod_pair);
      const std::string sub = umod->get_subcommands().front()->get_name();
      if (umod_module != "interval" && umod_module != "function")
        throw std::invalid_argument("--module must be interval|function");
      if (umod_module == "function" && umod_lattice.empty())
        throw std::invalid_argument("--lattice is required for the function module");
      if (umod_module == "interval") {
        const IntervalModule m;
        if (sub == "filters") {
          std::vector<Rat> gens;
          for (const auto& g : umod_gens) gens.push_back(Rat::parse(g));
          print_json(Json{{"filter", closed_invariant_filter(m, pair, gens).name()}});
          return 0;
        }
        const Rat a = Rat::parse(umod_a), b = Rat::parse(umod_b), r = Rat::parse(umod_r);
        if (sub == "le_r") {
          std::cout << (le_r(m, a, b, r) ? "true" : "false") << "\n";
          return 0;
        }
        if (sub == "rho") {
          print_json(Json{{"rho", m.rho(a, b).str()}, {"dist", dist(m, a, b).str()}});
          return 0;
        }
        if (sub == "glue") {
          std::cout << stack_glue(m, r, a, b).str() << "\n";
          return 0;
        }
      } else {
        const FunctionModule m(poset_from_json(read_json_file(umod_lattice)), pair);
        if (sub == "filters") {
          std::vector<FunctionModule::Element> gens;
          for (const auto& g : umod_gens)
            gens.push_back(function_elem_from_json(m, read_json_file(g)));
          const auto filt = closed_invariant_filter(m, gens);
          Json supports = Json::array();
          for (Mask s : filt.supports) supports.push_back(mask_elements(s));
          print_json(Json{{"supports", std::move(supports)}});
          return 0;
        }
        const auto a = function_elem_from_json(m, read_json_file(umod_a));
        const auto b = function_elem_from_json(m, read_json_file(umod_b));
        const Rat r = Rat::parse(umod_r);
        if (sub == "le_r") {
          std::cout << (le_r(m, a, b, r) ? "true" : "false") << "\n";
          return 0;
        }
        if (sub == "rho") {
          print_json(Json{{"rho", m.rho(a, b).str()}, {"dist", dist(m, a, b).str()}});
          return 0;
        }
        if (sub == "glue") {
          print_json(function_elem_to_json(m, stack_glue(m, r, a, b)));
          return 0;
        }
      }
    }

    if (ury->parsed()) {
      if (ury_interval) {
        const auto u = urysohn_separate_interval(Rat::parse(ury_y), Rat::parse(ury_x), ury_depth);
        Json adjoint = Json::array();
        for (const auto& v : u.adjoint) adjoint.push_back(v.str());
        print_json(Json{{"f", plmap_to_json(u.f)},
                        {"adjoint", std::move(adjoint)},
                        {"postcondition", u.postcondition_ok},
                        {"inf_preserving", u.inf_ok}});
        return u.postcondition_ok ? 0 : 1;
      }
      const FinPoset lat = poset_from_json(read_json_file(ury_lattice));
      const auto& d = doctrine_pair_by_name(ury_doctrine).phi;
      const auto u = urysohn_separate(lat, d, std::stoi(ury_y), std::stoi(ury_x), ury_depth);
      Json table = Json::array();
      for (const auto& v : u.table) table.push_back(v.str());
      print_json(Json{{"f", std::move(table)},
                      {"adjoint", u.adjoint},
                      {"postcondition", u.postcondition_ok},
                      {"meets", u.meets_ok},
                      {"phi_joins", u.phi_joins_ok}});
      return u.postcondition_ok && u.meets_ok ? 0 : 1;
    }

    if (approx->parsed()) {
      const Json mdesc = read_json_file(approx_module);
      const Json fdesc = read_json_file(approx_f);
      if (!fdesc.contains("grid") || !fdesc["grid"].is_array() ||
          (int)fdesc["grid"].size() != approx_n + 1)
        throw IoError("expected grid array with n+1 least elements", "/grid");
      if (mdesc.value("kind", "interval") == "interval") {
        const IntervalModule m;
        std::vector<Rat> grid;
        for (std::size_t i = 0; i < fdesc["grid"].size(); ++i)
          grid.push_back(rat_from_json(fdesc["grid"][i], "/grid/" + std::to_string(i)));
        const auto res = approximate_inverse(m, grid, approx_n);
        Json rs = Json::array();
        for (const auto& r : res.chosen_r) rs.push_back(r.str());
        print_json(Json{{"element", res.element.str()},
                        {"containments", res.containments_ok},
                        {"chosen_r", std::move(rs)}});
        return res.containments_ok ? 0 : 1;
      }
      const FunctionModule m(poset_from_json(mdesc.at("lattice")),
                             doctrine_pair_by_name(mdesc.value("pair", "directed")));
      std::vector<FunctionModule::Element> grid;
      for (const auto& e : fdesc["grid"]) grid.push_back(function_elem_from_json(m, e));
      const auto res = approximate_inverse(m, grid, approx_n);
      Json rs = Json::array();
      for (const auto& r : res.chosen_r) rs.push_back(r.str());
      print_json(Json{{"element", function_elem_to_json(m, res.element)},
                      {"containments", res.containments_ok},
                      {"chosen_r", std::move(rs)}});
      return res.containments_ok ? 0 : 1;
    }

    if (suite_run->parsed()) return cmd_suite_run(suite_name, sp, suite_json);
    if (suite_list->parsed()) {
      for (const auto& n : suite_names()) std::cout << n << "\n";
      return 0;
    }
    if (rep->parsed()) {
      const auto check = replay(read_json_file(replay_file));
      std::cout << (check.pass ? "[pass] " : "[FAIL] ") << check.name << ": " << check.detail
                << "\n";
      return check.pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
