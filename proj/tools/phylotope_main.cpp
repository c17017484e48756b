// Batch front-end: every library capability as a subcommand with
// machine-readable output (JSON lines by default, TSV on request).
// Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 usage or
// bounds error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <random>

#include "phylotope/facet_sources.hpp"
#include "phylotope/fiber.hpp"
#include "phylotope/gorenstein.hpp"
#include "phylotope/json_io.hpp"
#include "phylotope/normality.hpp"
#include "phylotope/replay.hpp"
#include "phylotope/z3_toolkit.hpp"

using namespace phylotope;

namespace {

struct Options {
  std::string group;
  int m = 0;
  std::string tree_file;
  Int k = 0;
  Int kmax = 0;
  std::string mode;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 20240901;
  int max_vertices = 200;
  int max_dim = 12;
  std::string point;
  int samples = 25;
  Int spot_normality = 0;
  int m2 = 0;
  std::string tree_file2;
  int edge1 = -1;
  int edge2 = -1;
  std::string vertex;
  std::string suite;
};

class Reporter {
public:
  Reporter(const std::string& path, std::string format) : format_(std::move(format)) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file: " + path);
    }
  }

  void emit(const Json& record) {
    std::ostream& os = file_.is_open() ? file_ : std::cout;
    if (format_ == "json") {
      os << record.dump() << "\n";
    } else {
      bool first = true;
      for (auto it = record.begin(); it != record.end(); ++it) {
        if (!first) os << "\t";
        first = false;
        os << it.key() << "=";
        if (it->is_string())
          os << it->get<std::string>();
        else
          os << it->dump();
      }
      os << "\n";
    }
  }

private:
  std::string format_;
  std::ofstream file_;
};

GroupSpec parse_group(const Options& opt) {
  if (opt.group.empty()) throw std::invalid_argument("--group is required");
  return GroupSpec::parse(opt.group);
}

Polytope build_polytope(const Options& opt) {
  GroupSpec g = parse_group(opt);
  if (!opt.tree_file.empty()) {
    std::ifstream in(opt.tree_file);
    if (!in) throw std::invalid_argument("cannot read tree file: " + opt.tree_file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return tree_polytope(g, Tree::parse(text));
  }
  if (opt.m < 2) throw std::invalid_argument("--m (>= 2) or --tree is required");
  return claw_polytope(g, opt.m);
}

FacetMode parse_mode(const std::string& mode) {
  if (mode.empty() || mode == "auto") return FacetMode::Auto;
  if (mode == "closed-form") return FacetMode::ClosedForm;
  if (mode == "brute") return FacetMode::Brute;
  if (mode == "cross-check") return FacetMode::CrossCheck;
  throw std::invalid_argument("unknown facet mode: " + mode);
}

Json config_record(const Options& opt, const std::string& subcommand) {
  Json j;
  j["record"] = "config";
  j["subcommand"] = subcommand;
  if (!opt.group.empty()) j["group"] = opt.group;
  if (opt.m) j["m"] = opt.m;
  if (!opt.tree_file.empty()) j["tree"] = opt.tree_file;
  if (opt.k) j["k"] = opt.k;
  if (opt.kmax) j["kmax"] = opt.kmax;
  if (!opt.mode.empty()) j["mode"] = opt.mode;
  if (!opt.suite.empty()) j["suite"] = opt.suite;
  j["seed"] = opt.seed;
  j["max_vertices"] = opt.max_vertices;
  j["max_dim"] = opt.max_dim;
  return j;
}

int summary(Reporter& rep, bool pass, const Json& extra = Json::object()) {
  Json j;
  j["record"] = "summary";
  j["status"] = pass ? "pass" : "fail";
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = *it;
  rep.emit(j);
  return pass ? 0 : 1;
}

int cmd_vertices(const Options& opt, Reporter& rep) {
  auto P = build_polytope(opt);
  for (const auto& v : P.vertices)
    rep.emit(Json{{"record", "vertex"}, {"coords", v}, {"labels", P.labels(v)}});
  return summary(rep, true, Json{{"vertices", P.vertices.size()}, {"dimension", P.lattice.rank()}});
}

int cmd_lattice(const Options& opt, Reporter& rep) {
  auto P = build_polytope(opt);
  Json j;
  j["record"] = "lattice";
  j["rank"] = P.lattice.rank();
  j["anchor"] = P.lattice.anchor;
  j["basis"] = P.lattice.basis;
  j["claw_congruence_route"] = P.is_claw();
  rep.emit(j);
  return summary(rep, true);
}

int cmd_facets(const Options& opt, Reporter& rep) {
  auto P = build_polytope(opt);
  KernelBounds bounds{opt.max_vertices, opt.max_dim};
  ensure_facets(P, parse_mode(opt.mode), bounds);  // cross-check throws on mismatch
  for (const auto& f : *P.facets) {
    Json j = to_json(f);
    j["record"] = "facet";
    rep.emit(j);
  }
  Json extra;
  extra["facets"] = P.facets->size();
  extra["provenance"] = P.facet_provenance;
  extra["block_equalities"] = P.blocks;
  return summary(rep, true, extra);
}

int cmd_normality(const Options& opt, Reporter& rep) {
  auto P = build_polytope(opt);
  KernelBounds bounds{opt.max_vertices, opt.max_dim};
  ensure_facets(P, parse_mode(opt.mode), bounds);
  Int kmax = opt.kmax ? opt.kmax : 4;
  auto report = check_normality(P, kmax);
  for (const auto& lvl : report.levels) {
    Json j = to_json(lvl);
    j["record"] = "normality-level";
    rep.emit(j);
  }
  return summary(rep, true, Json{{"normal_up_to_kmax", report.normal_up_to_kmax}});
}

int cmd_decompose(const Options& opt, Reporter& rep) {
  auto P = build_polytope(opt);
  if (opt.k < 1) throw std::invalid_argument("--k (>= 1) is required");
  std::string mode = opt.mode.empty() ? "compare" : opt.mode;
  const bool ternary = P.group.factors() == std::vector<int>{3} && P.is_claw();
  if ((mode == "constructive" || mode == "compare") && !ternary)
    throw std::invalid_argument("constructive decomposition is only available for ternary claws");
  try {
    // with facet data the brute decomposer can check full dilation membership
    ensure_facets(P, FacetMode::Auto, KernelBounds{opt.max_vertices, opt.max_dim});
  } catch (const std::invalid_argument&) {
    // beyond enumeration bounds: lattice and box checks still apply
  }

  std::vector<Coords> points;
  if (!opt.point.empty()) {
    points.push_back(coords_from_json(Json::parse(opt.point)));
  } else {
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < opt.samples; ++i) {
      Coords x(P.ambient_dim(), 0);
      for (Int j = 0; j < opt.k; ++j) x = x + P.vertices[rng() % P.vertices.size()];
      points.push_back(std::move(x));
    }
  }

  bool all_ok = true;
  for (const auto& x : points) {
    Json j;
    j["record"] = "decomposition";
    j["point"] = x;
    j["k"] = opt.k;
    if (mode == "brute" || mode == "compare") {
      auto res = decompose_brute(P, x, opt.k);
      j["brute_decomposable"] = res.decomposable;
      if (res.decomposable) j["vertices"] = res.summands;
      j["nodes_explored"] = res.nodes_explored;
    }
    if (mode == "constructive" || mode == "compare") {
      auto trace = normalize(P, x, opt.k);
      Json actions = Json::array();
      for (const auto& a : trace.actions) actions.push_back(to_json(a));
      j["trace"] = actions;
      try {
        auto dec = z3_decompose(P, x, opt.k);
        j["vertices"] = dec;
        j["constructive"] = "ok";
      } catch (const z3_step_failure& e) {
        j["constructive"] = "failed";
        j["diagnostic"] = e.what();
        j["violation_kind"] = e.violation.kind;
        all_ok = false;
        auto res = decompose_brute(P, x, opt.k);  // fallback route
        j["brute_decomposable"] = res.decomposable;
        if (res.decomposable) j["vertices"] = res.summands;
      }
    }
    if (mode == "compare" && j.contains("brute_decomposable") && j.contains("constructive"))
      j["agreement"] = j["brute_decomposable"] == Json(true) && j["constructive"] == Json("ok");
    rep.emit(j);
  }
  return summary(rep, all_ok, Json{{"points", points.size()}, {"mode", mode}});
}

int cmd_witness(const Options& opt, Reporter& rep) {
  auto g = parse_group(opt);
  auto report = nonnormal_witness(g);
  Json j = to_json(report);
  j["record"] = "witness";
  rep.emit(j);
  bool pass = report.in_lattice && report.in_dilation && !report.verdict.decomposable;
  return summary(rep, pass);
}

int cmd_gorenstein(const Options& opt, Reporter& rep) {
  auto P = build_polytope(opt);
  KernelBounds bounds{opt.max_vertices, opt.max_dim};
  ensure_facets(P, parse_mode(opt.mode), bounds);
  auto report = gorenstein_index(P, opt.kmax, opt.spot_normality);
  Json j = to_json(report);
  j["record"] = "gorenstein";
  rep.emit(j);
  return summary(rep, true, Json{{"verdict", report.gorenstein ? "Gorenstein" : "NotGorenstein"}});
}

int cmd_adjacency(const Options& opt, Reporter& rep) {
  auto P = build_polytope(opt);
  KernelBounds bounds{opt.max_vertices, opt.max_dim};
  ensure_facets(P, parse_mode(opt.mode), bounds);
  Coords v;
  if (!opt.vertex.empty())
    v = coords_from_json(Json::parse(opt.vertex));
  else
    v = P.vertex_from_labels(std::vector<int>(P.blocks, 0));
  auto adj = adjacent_vertices(P, v, bounds);
  for (const auto& c : adj)
    rep.emit(Json{{"record", "neighbor"},
                  {"vertex", c.neighbor},
                  {"certificate_functional", c.functional},
                  {"certificate_value", c.value}});
  return summary(rep, true, Json{{"neighbors", adj.size()}});
}

int cmd_fiber(const Options& opt, Reporter& rep) {
  GroupSpec g = parse_group(opt);
  auto load = [&](const std::string& tree_file, int m) {
    if (!tree_file.empty()) {
      std::ifstream in(tree_file);
      if (!in) throw std::invalid_argument("cannot read tree file: " + tree_file);
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      return tree_polytope(g, Tree::parse(text));
    }
    if (m < 2) throw std::invalid_argument("fiber: need --m1/--m2 or --tree/--tree2");
    return claw_polytope(g, m);
  };
  auto P1 = load(opt.tree_file, opt.m);
  auto P2 = load(opt.tree_file2, opt.m2);
  int e1 = opt.edge1 >= 0 ? opt.edge1 : P1.blocks - 1;
  int e2 = opt.edge2 >= 0 ? opt.edge2 : 0;
  std::string mode = opt.mode.empty() ? "build" : opt.mode;
  KernelBounds bounds{opt.max_vertices, opt.max_dim};

  if (mode == "build") {
    auto fp = fiber_product(P1, SimplexProjection{e1}, P2, SimplexProjection{e2});
    Json j;
    j["record"] = "fiber-product";
    j["vertices"] = fp.product.vertices.size();
    j["blocks"] = fp.product.blocks;
    j["shared_block"] = fp.shared_block();
    j["onto"] = Json::array({fp.onto1, fp.onto2});
    j["dimension"] = fp.product.lattice.rank();
    rep.emit(j);
    return summary(rep, true);
  }
  if (mode == "verify-fibgor") {
    ensure_facets(P1, FacetMode::Auto, bounds);
    ensure_facets(P2, FacetMode::Auto, bounds);
    Int spot = opt.spot_normality ? opt.spot_normality : 3;
    auto report = verify_fibgor(P1, SimplexProjection{e1}, P2, SimplexProjection{e2}, bounds, spot);
    Json j = to_json(report);
    j["record"] = "fibgor";
    rep.emit(j);
    bool pass = !report.hypotheses_ok || (report.index_matches && report.interior_projects);
    return summary(rep, pass);
  }
  throw std::invalid_argument("unknown fiber mode: " + mode);
}

int cmd_replay(const Options& opt, Reporter& rep) {
  auto result = run_replay(opt.suite, opt.seed);
  for (const auto& c : result.checks) {
    Json j;
    j["record"] = "check";
    j["name"] = c.name;
    j["status"] = c.pass ? "pass" : "fail";
    if (!c.detail.empty()) j["detail"] = c.detail;
    rep.emit(j);
  }
  return summary(rep, result.pass(),
                 Json{{"suite", result.suite}, {"checks", result.checks.size()}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice-polytope toolkit for group-based models on trees"};
  app.require_subcommand(1);
  Options opt;

  app.add_option("--out", opt.out, "write the report to this file instead of stdout");
  app.add_option("--format", opt.format, "json (lines) or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--seed", opt.seed, "seed recorded in reports and used by sampled sweeps");
  app.add_option("--max-vertices", opt.max_vertices, "facet enumeration vertex bound")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-dim", opt.max_dim, "facet enumeration dimension bound")
      ->check(CLI::PositiveNumber);

  auto add_shape = [&](CLI::App* cmd) {
    cmd->add_option("--group", opt.group, "group name, e.g. Z3, Z2xZ2, Z6");
    cmd->add_option("--m", opt.m, "claw tree edge count");
    cmd->add_option("--tree", opt.tree_file, "tree file, one edge 'a b' per line");
  };

  auto* vertices = app.add_subcommand("vertices", "vertex set of a model polytope");
  add_shape(vertices);
  auto* lattice = app.add_subcommand("lattice", "vertex lattice basis and anchor");
  add_shape(lattice);
  auto* facets = app.add_subcommand("facets", "facet list (closed-form | brute | cross-check)");
  add_shape(facets);
  facets->add_option("--mode", opt.mode, "auto | closed-form | brute | cross-check");
  auto* normality = app.add_subcommand("normality", "per-level normality by exhaustive search");
  add_shape(normality);
  normality->add_option("--kmax", opt.kmax, "highest dilation level (default 4)");
  normality->add_option("--mode", opt.mode, "facet source");
  auto* decompose = app.add_subcommand("decompose", "decompose dilation points into vertices");
  add_shape(decompose);
  decompose->add_option("--k", opt.k, "dilation level")->required();
  decompose->add_option("--mode", opt.mode, "brute | constructive | compare");
  decompose->add_option("--point", opt.point, "point as a JSON array (default: sampled sums)");
  decompose->add_option("--samples", opt.samples, "sampled points when --point is absent");
  auto* witness = app.add_subcommand("witness", "indecomposability witness for an even group");
  witness->add_option("--group", opt.group, "group name")->required();
  auto* gorenstein = app.add_subcommand("gorenstein", "Gorenstein index decision");
  add_shape(gorenstein);
  gorenstein->add_option("--kmax", opt.kmax, "scan bound (default dim+1)");
  gorenstein->add_option("--mode", opt.mode, "facet source");
  gorenstein->add_option("--spot-normality", opt.spot_normality, "brute normality depth to record");
  auto* adjacency = app.add_subcommand("adjacency", "edge-adjacent vertices with certificates");
  add_shape(adjacency);
  adjacency->add_option("--vertex", opt.vertex, "vertex as a JSON array (default: all-zero labels)");
  adjacency->add_option("--mode", opt.mode, "facet source");
  auto* fiber = app.add_subcommand("fiber", "fiber products over a shared block");
  fiber->add_option("--group", opt.group, "group name")->required();
  fiber->add_option("--m1", opt.m, "first claw size");
  fiber->add_option("--m2", opt.m2, "second claw size");
  fiber->add_option("--tree", opt.tree_file, "first tree file");
  fiber->add_option("--tree2", opt.tree_file2, "second tree file");
  fiber->add_option("--edge1", opt.edge1, "glued block of the first factor (default: last)");
  fiber->add_option("--edge2", opt.edge2, "glued block of the second factor (default: first)");
  fiber->add_option("--mode", opt.mode, "build | verify-fibgor");
  fiber->add_option("--spot-normality", opt.spot_normality, "normality depth for the product");
  auto* replay = app.add_subcommand("replay", "run a named verification suite");
  replay
      ->add_option("suite", opt.suite,
                   "one of: facetsZ3 vert0 notnormal gore fibgor normalz3 lemma2 vertices properties")
      ->required();

  // accept the global report options after the subcommand name as well
  for (auto* sub : {vertices, lattice, facets, normality, decompose, witness, gorenstein,
                    adjacency, fiber, replay})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Reporter rep(opt.out, opt.format);
    std::string sub = app.get_subcommands().front()->get_name();
    rep.emit(config_record(opt, sub));
    if (vertices->parsed()) return cmd_vertices(opt, rep);
    if (lattice->parsed()) return cmd_lattice(opt, rep);
    if (facets->parsed()) return cmd_facets(opt, rep);
    if (normality->parsed()) return cmd_normality(opt, rep);
    if (decompose->parsed()) return cmd_decompose(opt, rep);
    if (witness->parsed()) return cmd_witness(opt, rep);
    if (gorenstein->parsed()) return cmd_gorenstein(opt, rep);
    if (adjacency->parsed()) return cmd_adjacency(opt, rep);
    if (fiber->parsed()) return cmd_fiber(opt, rep);
    if (replay->parsed()) return cmd_replay(opt, rep);
    return 2;
  } catch (const z3_step_failure& e) {
    std::cerr << "mathematical check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage/bounds error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage/bounds error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "mathematical check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
