#include "geopos/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>

#include "geopos/checker.hpp"
#include "geopos/constructions.hpp"
#include "geopos/families.hpp"
#include "geopos/oracle.hpp"
#include "geopos/solvers.hpp"
#include "geopos/theta.hpp"

namespace geopos {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Runs one claim, capturing wall time and budget exhaustion.
ReproRow timed_row(const std::string& theorem, const std::string& instance, long long claimed,
                   const std::string& method, const std::function<std::pair<long long, bool>()>& run) {
  ReproRow row;
  row.theorem = theorem;
  row.instance = instance;
  row.claimed = claimed;
  row.method = method;
  const auto start = Clock::now();
  try {
    const auto [computed, ok] = run();
    row.computed = computed;
    row.verified = ok && computed == claimed;
  } catch (const BudgetExceeded&) {
    row.computed = -1;
    row.verified = false;
    row.budget_exhausted = true;
  }
  row.wall_ms = ms_since(start);
  return row;
}

/// The two-arc partition of an even cycle: gpart(C_2n) = 2.
std::vector<GeodesicPath> even_cycle_two_arc_partition(int n) {
  GeodesicPath first;
  GeodesicPath second;
  for (int i = 0; i <= n / 2; ++i) {
    first.push_back(i);
    second.push_back((n / 2 + i) % n);
  }
  return {first, second};
}

std::vector<ReproRow> rows_lemma_3_1(std::uint64_t budget) {
  std::vector<ReproRow> rows;
  rows.push_back(timed_row("lemma-3.1", "cycle:8 k=3", 4, "exact-bb", [&] {
    const SolveResult res = kgp_exact(generate("cycle:8"), 3, budget);
    return std::pair<long long, bool>(res.optimum, res.optimal);
  }));
  const std::vector<std::pair<int, int>> cases = {{3, 1}, {4, 1}, {4, 2}};
  for (const auto& [r, t] : cases) {
    const long long claimed = 1LL << (t + 1);
    std::ostringstream name;
    name << "cycle:" << (1 << r) << " k=" << ((1 << t) + 1);
    rows.push_back(timed_row("lemma-3.1", name.str(), claimed, "construction+duality", [&] {
      const Certificate cert = cycle_equidistant_kgp(r, t);
      const Graph g = generate("cycle:" + std::to_string(1 << r));
      const auto partition = even_cycle_two_arc_partition(1 << r);
      const DualityReport duality =
          duality_certify(g, (1 << t) + 1, std::get<EdgeSet>(cert.witness), partition);
      return std::pair<long long, bool>(cert.value, cert.verified && duality.exact);
    }));
  }
  return rows;
}

std::vector<ReproRow> rows_prop_3_2(std::uint64_t budget) {
  std::vector<ReproRow> rows;
  rows.push_back(timed_row("prop-3.2", "torus:4x4 gcover", 8, "exact-bb", [&] {
    const Graph g = generate("torus:4x4");
    const DistanceMatrix d = all_pairs_distances(g);
    const GeodesicCatalog catalog =
        enumerate_geodesics(g, d, {.maximal_only = true, .budget = budget});
    const SolveResult res = gcover_exact(g, d, catalog, budget);
    return std::pair<long long, bool>(res.optimum, res.optimal);
  }));
  rows.push_back(timed_row("prop-3.2", "torus:4x4 gpart", 8, "exact-cover", [&] {
    const Graph g = generate("torus:4x4");
    const DistanceMatrix d = all_pairs_distances(g);
    const GeodesicCatalog catalog =
        enumerate_geodesics(g, d, {.maximal_only = false, .budget = budget});
    const SolveResult res = gpart_exact(g, d, catalog, budget);
    return std::pair<long long, bool>(res.optimum, res.optimal);
  }));
  for (const int r : {2, 3, 4}) {
    std::ostringstream name;
    name << "torus:" << 2 * r << "x" << 2 * r << " partition";
    rows.push_back(
        timed_row("prop-3.2", name.str(), 4 * r, "construction+counting-bound", [&] {
          const Certificate cert = torus_diametral_partition(r);
          return std::pair<long long, bool>(cert.value, cert.verified);
        }));
  }
  return rows;
}

std::vector<ReproRow> rows_thm_3_3(std::uint64_t) {
  std::vector<ReproRow> rows;
  const std::vector<std::pair<int, int>> cases = {{3, 1}, {4, 1}, {4, 2}};
  for (const auto& [r, t] : cases) {
    const int k = (1 << t) + 1;
    const long long claimed = 1LL << (r + t + 1);
    std::ostringstream name;
    name << "torus:" << (1 << r) << "x" << (1 << r) << " k=" << k;
    rows.push_back(timed_row("thm-3.3", name.str(), claimed, "construction+duality", [&] {
      const Certificate cert = torus_parallel_kgp(r, t);
      // The diametral partition of the same torus: side 2^r = 2*(2^{r-1}).
      const Certificate partition = torus_diametral_partition(1 << (r - 1));
      const Graph g = generate("torus:" + std::to_string(1 << r) + "x" +
                               std::to_string(1 << r));
      const DualityReport duality =
          duality_certify(g, k, std::get<EdgeSet>(cert.witness),
                          std::get<std::vector<GeodesicPath>>(partition.witness));
      return std::pair<long long, bool>(cert.value,
                                        cert.verified && partition.verified && duality.exact);
    }));
  }
  return rows;
}

std::vector<ReproRow> rows_thm_4_2(std::uint64_t budget) {
  std::vector<ReproRow> rows;
  for (const int d : {3, 4, 5}) {
    rows.push_back(timed_row("thm-4.2", "hypercube:" + std::to_string(d) + " partition",
                             1LL << (d - 1), "construction+counting-bound", [&] {
                               const Certificate cert = hypercube_path_partition(d);
                               const Graph g = generate("hypercube:" + std::to_string(d));
                               const DistanceMatrix dm = all_pairs_distances(g);
                               const CountingBoundReport bound = cover_counting_certify(
                                   g, dm, std::get<std::vector<GeodesicPath>>(cert.witness));
                               return std::pair<long long, bool>(cert.value,
                                                                 cert.verified && bound.exact);
                             }));
    for (int k = 3; k <= d + 1; ++k) {
      const long long claimed = static_cast<long long>(k - 1) << (d - 1);
      std::ostringstream name;
      name << "hypercube:" << d << " k=" << k;
      rows.push_back(timed_row("thm-4.2", name.str(), claimed, "theta-union+duality", [&] {
        const Graph g = generate("hypercube:" + std::to_string(d));
        const EdgeSet witness = theta_union_kgp(g, k);
        const Certificate partition = hypercube_path_partition(d);
        const DualityReport duality = duality_certify(
            g, k, witness, std::get<std::vector<GeodesicPath>>(partition.witness));
        return std::pair<long long, bool>(static_cast<long long>(witness.size()),
                                          partition.verified && duality.exact);
      }));
    }
  }
  rows.push_back(timed_row("thm-4.2", "hypercube:3 k=3 exact", 8, "exact-bb", [&] {
    const SolveResult res = kgp_exact(generate("hypercube:3"), 3, budget);
    return std::pair<long long, bool>(res.optimum, res.optimal);
  }));
  rows.push_back(timed_row("thm-4.2", "hypercube:3 gpart", 4, "exact-cover", [&] {
    const Graph g = generate("hypercube:3");
    const DistanceMatrix dm = all_pairs_distances(g);
    const GeodesicCatalog catalog =
        enumerate_geodesics(g, dm, {.maximal_only = false, .budget = budget});
    const SolveResult res = gpart_exact(g, dm, catalog, budget);
    return std::pair<long long, bool>(res.optimum, res.optimal);
  }));
  return rows;
}

std::vector<ReproRow> rows_thm_5_1(std::uint64_t) {
  std::vector<ReproRow> rows;
  for (const int r : {3, 4}) {
    rows.push_back(timed_row("thm-5.1", "benes:" + std::to_string(r) + " partition",
                             1LL << (r + 1), "construction+counting-bound", [&] {
                               const Certificate cert = benes_path_partition(r);
                               return std::pair<long long, bool>(cert.value, cert.verified);
                             }));
  }
  return rows;
}

std::vector<ReproRow> rows_thm_5_2(std::uint64_t) {
  std::vector<ReproRow> rows;
  for (const int r : {3, 4}) {
    for (const int k : {3, 5}) {
      const long long claimed = static_cast<long long>(k - 1) << (r + 1);
      std::ostringstream name;
      name << "benes:" << r << " k=" << k;
      rows.push_back(timed_row("thm-5.2", name.str(), claimed, "construction+duality", [&] {
        const Certificate cert = benes_kgp(r, k);
        const Certificate partition = benes_path_partition(r);
        const Graph g = generate("benes:" + std::to_string(r));
        const DualityReport duality =
            duality_certify(g, k, std::get<EdgeSet>(cert.witness),
                            std::get<std::vector<GeodesicPath>>(partition.witness));
        return std::pair<long long, bool>(cert.value,
                                          cert.verified && partition.verified && duality.exact);
      }));
    }
  }
  return rows;
}

ReproRow suite_row(const std::string& theorem, const std::string& instance,
                   const std::string& method, const std::function<SuiteOutcome()>& run) {
  ReproRow row;
  row.theorem = theorem;
  row.instance = instance;
  row.method = method;
  const auto start = Clock::now();
  try {
    const SuiteOutcome outcome = run();
    row.claimed = outcome.cases;
    row.computed = outcome.passed;
    row.verified = outcome.cases > 0 && outcome.passed == outcome.cases;
  } catch (const BudgetExceeded&) {
    row.computed = -1;
    row.verified = false;
    row.budget_exhausted = true;
  }
  row.wall_ms = ms_since(start);
  return row;
}

}  // namespace

SuiteOutcome run_matching_equivalence_suite(std::uint64_t budget) {
  SuiteOutcome outcome;
  const auto check = [&](const Graph& g, const std::string& name) {
    for (const int k : {3, 4}) {
      ++outcome.cases;
      const MatchingEquivalenceReport report = check_matching_diameter_equivalence(g, k, budget);
      if (report.equivalence_holds) {
        ++outcome.passed;
      } else if (outcome.first_failure.empty()) {
        outcome.first_failure = name + " k=" + std::to_string(k);
      }
    }
  };

  // Every labeled connected graph on at most 6 vertices.
  for (int n = 1; n <= 6; ++n) {
    const int slots = n * (n - 1) / 2;
    std::vector<Edge> all_pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        all_pairs.emplace_back(u, v);
      }
    }
    for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
      std::vector<Edge> edges;
      for (int bit = 0; bit < slots; ++bit) {
        if (mask & (1u << bit)) {
          edges.push_back(all_pairs[static_cast<std::size_t>(bit)]);
        }
      }
      // Quick spanning-connectivity filter.
      std::vector<int> comp(static_cast<std::size_t>(n));
      std::iota(comp.begin(), comp.end(), 0);
      const auto root = [&](int x) {
        while (comp[static_cast<std::size_t>(x)] != x) {
          x = comp[static_cast<std::size_t>(x)] =
              comp[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])];
        }
        return x;
      };
      for (const Edge& e : edges) {
        comp[static_cast<std::size_t>(root(e.u))] = root(e.v);
      }
      bool connected = true;
      for (int v = 1; v < n && connected; ++v) {
        connected = root(v) == root(0);
      }
      if (!connected) {
        continue;
      }
      check(Graph(n, edges), "n=" + std::to_string(n) + " mask=" + std::to_string(mask));
    }
  }

  for (const int n : {5, 6}) {
    check(generate("path:" + std::to_string(n)), "path:" + std::to_string(n));
  }
  for (int n = 4; n <= 10; ++n) {
    check(generate("cycle:" + std::to_string(n)), "cycle:" + std::to_string(n));
  }
  return outcome;
}

SuiteOutcome run_oracle_suite(std::uint64_t budget) {
  SuiteOutcome outcome;
  std::mt19937 rng(20250809);

  const auto random_graph = [&rng]() {
    std::uniform_int_distribution<int> n_dist(4, 10);
    const int n = n_dist(rng);
    const int max_edges = std::min(18, n * (n - 1) / 2);
    std::uniform_int_distribution<int> m_dist(n - 1, max_edges);
    const int target = m_dist(rng);

    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
      std::uniform_int_distribution<int> pick(0, v - 1);
      edges.emplace_back(pick(rng), v);
    }
    EdgeSet have(edges);
    std::uniform_int_distribution<int> vertex(0, n - 1);
    while (static_cast<int>(have.size()) < target) {
      const int a = vertex(rng);
      const int b = vertex(rng);
      if (a != b) {
        have.insert(Edge(a, b));
      }
    }
    return Graph(n, have.edges());
  };

  for (int trial = 0; trial < 200; ++trial) {
    ++outcome.cases;
    const Graph g = random_graph();
    const DistanceMatrix d = all_pairs_distances(g);
    bool ok = true;
    std::string why;

    const SolveResult kgp = kgp_exact(g, 3, budget);
    const long long brute = brute_kgp_maximum(g, 3, budget);
    if (!kgp.optimal || kgp.optimum != brute) {
      ok = false;
      why = "kgp mismatch vs subset brute force";
    }

    std::vector<EdgeSet> samples = {std::get<EdgeSet>(kgp.witness)};
    std::bernoulli_distribution flip(0.5);
    for (int s = 0; s < 3; ++s) {
      std::vector<Edge> subset;
      for (const Edge& e : g.edges()) {
        if (flip(rng)) {
          subset.push_back(e);
        }
      }
      samples.emplace_back(subset);
    }
    for (const EdgeSet& s : samples) {
      const int restricted = max_marked_on_common_geodesic(g, d, s).max_marked;
      const int full =
          max_marked_on_common_geodesic(g, d, s, {.restrict_to_marked_endpoints = false})
              .max_marked;
      const int brute_mm = brute_max_marked(g, d, s);
      if (ok && (restricted != brute_mm || full != brute_mm)) {
        ok = false;
        why = "max-marked mismatch vs geodesic enumeration";
      }
      if (ok && s.size() >= 2 && corollary_2_3_sufficient(g, d, s, 3) &&
          !is_edge_kgp(g, d, s, 3)) {
        ok = false;
        why = "edge-distance sufficient condition produced a false positive";
      }
    }

    const GeodesicCatalog maximal =
        enumerate_geodesics(g, d, {.maximal_only = true, .budget = budget});
    const GeodesicCatalog full_catalog =
        enumerate_geodesics(g, d, {.maximal_only = false, .budget = budget});
    const SolveResult cover = gcover_exact(g, d, maximal, budget);
    const SolveResult part = gpart_exact(g, d, full_catalog, budget);
    const long long counting = (g.edge_count() + d.diameter() - 1) / d.diameter();
    if (ok && (!cover.optimal || !part.optimal || cover.optimum > part.optimum ||
               cover.optimum < counting)) {
      ok = false;
      why = "cover/partition sanity violated";
    }
    if (ok && kgp.optimum > 2 * cover.optimum) {
      ok = false;
      why = "duality chain violated";
    }

    if (ok) {
      ++outcome.passed;
    } else if (outcome.first_failure.empty()) {
      outcome.first_failure = "trial " + std::to_string(trial) + ": " + why;
    }
  }
  return outcome;
}

SuiteOutcome run_partial_cube_suite() {
  SuiteOutcome outcome;
  const auto expect = [&](bool condition, const std::string& name) {
    ++outcome.cases;
    if (condition) {
      ++outcome.passed;
    } else if (outcome.first_failure.empty()) {
      outcome.first_failure = name;
    }
  };

  for (int d = 1; d <= 6; ++d) {
    const Graph g = generate("hypercube:" + std::to_string(d));
    expect(is_partial_cube(g), "hypercube:" + std::to_string(d));
    const ThetaClasses classes = theta_classes(g);
    bool sizes_ok = static_cast<int>(classes.classes.size()) == d;
    for (const EdgeSet& cls : classes.classes) {
      sizes_ok &= static_cast<long long>(cls.size()) == (1LL << (d - 1));
    }
    expect(sizes_ok, "hypercube:" + std::to_string(d) + " class sizes");
  }
  for (int n = 4; n <= 12; n += 2) {
    expect(is_partial_cube(generate("cycle:" + std::to_string(n))),
           "cycle:" + std::to_string(n));
  }
  expect(is_partial_cube(generate("torus:4x4")), "torus:4x4");

  expect(!is_partial_cube(generate("cycle:5")), "cycle:5 negative");
  const Graph k23(5, {Edge(0, 2), Edge(0, 3), Edge(0, 4), Edge(1, 2), Edge(1, 3), Edge(1, 4)});
  expect(!is_partial_cube(k23), "K_{2,3} negative");
  const Graph k4(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(1, 3), Edge(2, 3)});
  expect(!is_partial_cube(k4), "K_4 negative");
  return outcome;
}

const std::vector<std::string>& reproduce_scopes() {
  static const std::vector<std::string> scopes = {
      "lemma-3.1", "prop-3.2", "thm-3.3",  "thm-4.2",
      "thm-5.1",   "thm-5.2",  "prop-2.1", "oracle",
      "partial-cube"};
  return scopes;
}

std::vector<ReproRow> run_reproduce(const std::string& scope, std::uint64_t budget) {
  std::vector<ReproRow> rows;
  const auto want = [&](const std::string& name) { return scope == "all" || scope == name; };

  if (scope != "all" &&
      std::find(reproduce_scopes().begin(), reproduce_scopes().end(), scope) ==
          reproduce_scopes().end()) {
    throw std::invalid_argument("unknown reproduce scope '" + scope + "'");
  }

  const auto append = [&rows](std::vector<ReproRow> more) {
    std::move(more.begin(), more.end(), std::back_inserter(rows));
  };
  if (want("lemma-3.1")) {
    append(rows_lemma_3_1(budget));
  }
  if (want("prop-3.2")) {
    append(rows_prop_3_2(budget));
  }
  if (want("thm-3.3")) {
    append(rows_thm_3_3(budget));
  }
  if (want("thm-4.2")) {
    append(rows_thm_4_2(budget));
  }
  if (want("thm-5.1")) {
    append(rows_thm_5_1(budget));
  }
  if (want("thm-5.2")) {
    append(rows_thm_5_2(budget));
  }
  if (want("prop-2.1")) {
    rows.push_back(suite_row("prop-2.1", "connected n<=6, path:5-6, cycle:4-10; k in {3,4}",
                             "exhaustive-equivalence",
                             [&] { return run_matching_equivalence_suite(budget); }));
  }
  if (want("oracle")) {
    rows.push_back(suite_row("oracle", "200 random connected graphs, <=18 edges",
                             "brute-oracle", [&] { return run_oracle_suite(budget); }));
  }
  if (want("partial-cube")) {
    rows.push_back(suite_row("partial-cube", "Q_1..Q_6, even cycles <=12, torus:4x4; negatives",
                             "theta-recognition", [] { return run_partial_cube_suite(); }));
  }
  return rows;
}

nlohmann::json rows_to_json(const std::vector<ReproRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const ReproRow& row : rows) {
    out.push_back({{"theorem", row.theorem},
                   {"instance", row.instance},
                   {"claimed", row.claimed},
                   {"computed", row.computed},
                   {"method", row.method},
                   {"verified", row.verified},
                   {"budget_exhausted", row.budget_exhausted},
                   {"wall_ms", row.wall_ms}});
  }
  return out;
}

std::string rows_to_table(const std::vector<ReproRow>& rows) {
  std::size_t w_theorem = 7;
  std::size_t w_instance = 8;
  std::size_t w_method = 6;
  for (const ReproRow& row : rows) {
    w_theorem = std::max(w_theorem, row.theorem.size());
    w_instance = std::max(w_instance, row.instance.size());
    w_method = std::max(w_method, row.method.size());
  }
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(w_theorem)) << "theorem" << "  "
      << std::setw(static_cast<int>(w_instance)) << "instance" << "  " << std::right
      << std::setw(8) << "claimed" << "  " << std::setw(8) << "computed" << "  " << std::left
      << std::setw(static_cast<int>(w_method)) << "method" << "  " << std::setw(10) << "status"
      << "  " << std::right << std::setw(10) << "wall_ms" << '\n';
  for (const ReproRow& row : rows) {
    const char* status =
        row.budget_exhausted ? "UNVERIFIED" : (row.verified ? "ok" : "FAILED");
    out << std::left << std::setw(static_cast<int>(w_theorem)) << row.theorem << "  "
        << std::setw(static_cast<int>(w_instance)) << row.instance << "  " << std::right
        << std::setw(8) << row.claimed << "  " << std::setw(8) << row.computed << "  "
        << std::left << std::setw(static_cast<int>(w_method)) << row.method << "  "
        << std::setw(10) << status << "  " << std::right << std::setw(10) << std::fixed
        << std::setprecision(1) << row.wall_ms << '\n';
  }
  return out.str();
}

}  // namespace geopos
