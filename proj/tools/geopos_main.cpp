#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "geopos/certificate.hpp"
#include "geopos/checker.hpp"
#include "geopos/families.hpp"
#include "geopos/graph.hpp"
#include "geopos/reproduce.hpp"
#include "geopos/solvers.hpp"
#include "geopos/theta.hpp"

namespace {

// Exit codes: 0 all claims verified, 2 claim refuted, 3 budget exhausted,
// 4 input error.
constexpr int kExitOk = 0;
constexpr int kExitRefuted = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInput = 4;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("GEOPOS_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("GEOPOS_BUDGET is not a number: " + std::string(env));
    }
  }
  return geopos::kDefaultBudget;
}

// A graph argument is either a family spec or a path to an edge-list file.
// Anything that parses as a spec is treated as one, so parameter-range
// errors surface instead of falling through to a file probe.
geopos::Graph load_graph(const std::string& arg) {
  bool is_spec = true;
  try {
    geopos::FamilySpec::parse(arg);
  } catch (const std::invalid_argument&) {
    is_spec = false;
  }
  if (is_spec) {
    return geopos::generate(arg);
  }
  std::ifstream in(arg);
  if (!in) {
    throw std::invalid_argument("'" + arg + "' is neither a family spec nor a readable file");
  }
  return geopos::read_edge_list(in);
}

void emit(const nlohmann::json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) {
      throw std::invalid_argument("cannot write '" + out_path + "'");
    }
    out << doc.dump(2) << '\n';
  }
}

int cmd_generate(const std::string& spec, const std::string& out_path) {
  const geopos::Graph g = geopos::generate(spec);
  if (out_path.empty()) {
    geopos::write_edge_list(g, std::cout);
  } else {
    std::ofstream out(out_path);
    if (!out) {
      throw std::invalid_argument("cannot write '" + out_path + "'");
    }
    geopos::write_edge_list(g, out);
  }
  return kExitOk;
}

int cmd_verify_kgp(const std::string& graph_arg, const std::string& edges_path, int k,
                   bool json) {
  const geopos::Graph g = load_graph(graph_arg);
  std::ifstream in(edges_path);
  if (!in) {
    throw std::invalid_argument("cannot read edge set '" + edges_path + "'");
  }
  const geopos::EdgeSet s = geopos::read_edge_set(in, g);
  if (k < 3) {
    throw std::invalid_argument("edge k-general position requires k >= 3");
  }
  const geopos::DistanceMatrix d = geopos::all_pairs_distances(g);
  const geopos::CheckerResult check = geopos::max_marked_on_common_geodesic(g, d, s);
  const bool ok = check.max_marked <= k - 1;

  nlohmann::json doc;
  doc["graph"] = graph_arg;
  doc["k"] = k;
  doc["edges"] = s.size();
  doc["max_marked"] = check.max_marked;
  doc["is_edge_kgp"] = ok;
  doc["pairs_swept"] = check.pairs_swept;
  if (!ok) {
    doc["violating_geodesic"] = check.witness;
  }
  if (json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << (ok ? "VERIFIED" : "REFUTED") << ": max " << check.max_marked
              << " marked edges on a common geodesic (k-1 = " << k - 1 << ")\n";
    if (!ok) {
      std::cout << "witness geodesic:";
      for (const int v : check.witness) {
        std::cout << ' ' << v;
      }
      std::cout << '\n';
    }
  }
  return ok ? kExitOk : kExitRefuted;
}

int cmd_solve(const std::string& graph_arg, const std::string& problem, int k,
              std::uint64_t budget, bool maximal_only, bool json,
              const std::string& out_path) {
  const geopos::Graph g = load_graph(graph_arg);
  const geopos::DistanceMatrix d = geopos::all_pairs_distances(g);

  geopos::SolveResult result;
  std::vector<std::pair<std::string, int>> params;
  if (problem == "kgp") {
    result = geopos::kgp_exact(g, k, budget);
    params = {{"k", k}};
  } else if (problem == "gcover") {
    const geopos::GeodesicCatalog catalog =
        geopos::enumerate_geodesics(g, d, {.maximal_only = maximal_only, .budget = budget});
    result = geopos::gcover_exact(g, d, catalog, budget);
  } else if (problem == "gpart") {
    const geopos::GeodesicCatalog catalog =
        geopos::enumerate_geodesics(g, d, {.maximal_only = false, .budget = budget});
    result = geopos::gpart_exact(g, d, catalog, budget);
  } else {
    throw std::invalid_argument("problem must be kgp, gcover or gpart");
  }

  geopos::Certificate cert;
  cert.theorem = problem;
  cert.params = params;
  cert.value = result.optimum;
  cert.witness = result.witness;
  cert.verified = result.optimal;
  cert.method = result.method;
  if (const auto* witness_edges = std::get_if<geopos::EdgeSet>(&result.witness)) {
    const geopos::CheckerResult check =
        geopos::max_marked_on_common_geodesic(g, d, *witness_edges);
    cert.checker_stats = {check.max_marked, check.pairs_swept};
  }
  const nlohmann::json doc = geopos::to_json(cert);
  if (json || !out_path.empty()) {
    emit(doc, out_path);
  } else {
    std::cout << problem << " optimum: " << result.optimum
              << (result.optimal ? "" : " (budget exhausted; bounds [" +
                                            std::to_string(result.lower_bound) + "," +
                                            std::to_string(result.upper_bound) + "])")
              << '\n';
  }
  return result.optimal ? kExitOk : kExitBudget;
}

int cmd_theta_classes(const std::string& graph_arg, const std::string& out_path) {
  const geopos::Graph g = load_graph(graph_arg);
  const geopos::ThetaClasses classes = geopos::theta_classes(g);
  nlohmann::json sizes = nlohmann::json::array();
  for (const geopos::EdgeSet& cls : classes.classes) {
    sizes.push_back(cls.size());
  }
  nlohmann::json doc;
  doc["graph"] = graph_arg;
  doc["class_count"] = classes.classes.size();
  doc["class_sizes"] = std::move(sizes);
  doc["is_partial_cube"] = geopos::is_partial_cube(g);
  emit(doc, out_path);
  return kExitOk;
}

int cmd_reproduce(const std::string& scope, std::uint64_t budget, bool json,
                  const std::string& out_path) {
  const std::vector<geopos::ReproRow> rows = geopos::run_reproduce(scope, budget);
  if (json || !out_path.empty()) {
    emit(geopos::rows_to_json(rows), out_path);
  }
  if (!json) {
    std::cout << geopos::rows_to_table(rows);
  }
  bool any_budget = false;
  bool any_failed = false;
  for (const geopos::ReproRow& row : rows) {
    any_budget |= row.budget_exhausted;
    any_failed |= !row.verified;
  }
  if (any_budget) {
    return kExitBudget;
  }
  return any_failed ? kExitRefuted : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge geodesic cover / partition and edge k-general position toolkit"};
  app.require_subcommand(1);

  std::uint64_t budget = 0;
  try {
    budget = default_budget();
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitInput;
  }

  std::string gen_spec;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "write a family graph as an edge list");
  gen->add_option("spec", gen_spec, "family spec, e.g. cycle:8, torus:8x8, benes:3")
      ->required();
  gen->add_option("--out", out_path, "output path (default: stdout)");

  std::string verify_graph;
  std::string verify_edges;
  int verify_k = 3;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify-kgp", "check an edge set for k-general position");
  verify->add_option("graph", verify_graph, "family spec or edge-list file")->required();
  verify->add_option("--edges", verify_edges, "edge-set file (lines 'u v')")->required();
  verify->add_option("-k", verify_k, "k (>= 3)")->required();
  verify->add_flag("--json", verify_json, "emit JSON");

  std::string solve_graph;
  std::string solve_problem;
  int solve_k = 3;
  bool solve_json = false;
  bool maximal_only = true;
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "run an exact solver");
  solve->add_option("graph", solve_graph, "family spec or edge-list file")->required();
  solve->add_option("problem", solve_problem, "kgp | gcover | gpart")->required();
  solve->add_option("-k", solve_k, "k for kgp (>= 3)");
  solve->add_flag("--maximal-only,!--no-maximal-only", maximal_only,
                  "restrict the cover catalog to maximal geodesics (default on)");
  solve->add_flag("--json", solve_json, "emit certificate JSON");
  solve->add_option("--out", solve_out, "write certificate JSON to a file");

  std::string theta_graph;
  std::string theta_out;
  auto* theta = app.add_subcommand("theta-classes", "report Theta-class sizes");
  theta->add_option("graph", theta_graph, "family spec or edge-list file")->required();
  theta->add_option("--out", theta_out, "output path (default: stdout)");

  std::string repro_scope = "all";
  bool repro_json = false;
  std::string repro_out;
  auto* repro = app.add_subcommand("reproduce", "re-derive and verify the claim matrix");
  repro->add_option("scope", repro_scope, "all (default) or one claim id, e.g. thm-4.2");
  repro->add_flag("--json", repro_json, "emit JSON rows instead of the text table");
  repro->add_option("--out", repro_out, "write JSON rows to a file");

  for (auto* sub : {gen, verify, solve, theta, repro}) {
    sub->add_option("--budget", budget, "search/enumeration budget");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      return cmd_generate(gen_spec, out_path);
    }
    if (verify->parsed()) {
      return cmd_verify_kgp(verify_graph, verify_edges, verify_k, verify_json);
    }
    if (solve->parsed()) {
      return cmd_solve(solve_graph, solve_problem, solve_k, budget, maximal_only, solve_json,
                       solve_out);
    }
    if (theta->parsed()) {
      return cmd_theta_classes(theta_graph, theta_out);
    }
    if (repro->parsed()) {
      return cmd_reproduce(repro_scope, budget, repro_json, repro_out);
    }
  } catch (const geopos::BudgetExceeded& err) {
    std::cerr << "budget exhausted: " << err.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& err) {
    std::cerr << "input error: " << err.what() << '\n';
    return kExitInput;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return kExitInput;
}
