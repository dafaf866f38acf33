// Acceptance suite: re-derives every headline value end to end and enforces
// the stated time limits. Prints one line per criterion; exits nonzero if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "geopos/checker.hpp"
#include "geopos/constructions.hpp"
#include "geopos/families.hpp"
#include "geopos/reproduce.hpp"
#include "geopos/solvers.hpp"
#include "geopos/theta.hpp"

using namespace geopos;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int id;
  std::string description;
  bool passed;
  double wall_ms;
  std::string detail;
};

std::vector<Criterion> results;

void run(int id, const std::string& description, double limit_ms,
         const std::function<bool(std::string&)>& body) {
  Criterion c;
  c.id = id;
  c.description = description;
  const auto start = Clock::now();
  try {
    c.passed = body(c.detail);
  } catch (const std::exception& err) {
    c.passed = false;
    c.detail = std::string("exception: ") + err.what();
  }
  c.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (limit_ms > 0 && c.wall_ms > limit_ms) {
    c.passed = false;
    c.detail += " [exceeded " + std::to_string(limit_ms) + " ms limit]";
  }
  results.push_back(std::move(c));
}

double timed_ms(const std::function<void()>& body) {
  const auto start = Clock::now();
  body();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

int main() {
  // 1. Equidistant edges on cycles: exact value and constructions.
  run(1, "cycle equidistant k-gp: exact C_8 and constructions (3,1),(4,1),(4,2)", 0,
      [](std::string& detail) {
        bool ok = true;
        const double solver_ms = timed_ms([&] {
          const SolveResult res = kgp_exact(generate("cycle:8"), 3);
          ok &= res.optimal && res.optimum == 4;
        });
        ok &= solver_ms < 1000.0;  // < 1 s
        const std::vector<std::tuple<int, int, long long>> cases = {
            {3, 1, 4}, {4, 1, 4}, {4, 2, 8}};
        for (const auto& [r, t, value] : cases) {
          const Certificate cert = cycle_equidistant_kgp(r, t);
          ok &= cert.verified && cert.value == value;
        }
        std::ostringstream s;
        s << "solver " << solver_ms << " ms";
        detail = s.str();
        return ok;
      });

  // 2. Torus diametral partitions: exact solvers on C_4xC_4 and constructions.
  run(2, "torus gcover = gpart = 8 on C_4xC_4; partitions r=2,3,4", 0,
      [](std::string& detail) {
        bool ok = true;
        const Graph t4 = generate("torus:4x4");
        const DistanceMatrix d4 = all_pairs_distances(t4);
        const double cover_ms = timed_ms([&] {
          const GeodesicCatalog maximal =
              enumerate_geodesics(t4, d4, {.maximal_only = true});
          const SolveResult res = gcover_exact(t4, d4, maximal);
          ok &= res.optimal && res.optimum == 8;
        });
        const double part_ms = timed_ms([&] {
          const GeodesicCatalog full = enumerate_geodesics(t4, d4);
          const SolveResult res = gpart_exact(t4, d4, full);
          ok &= res.optimal && res.optimum == 8;
        });
        ok &= cover_ms < 60000.0 && part_ms < 60000.0;  // < 1 min each
        const std::vector<std::pair<int, long long>> cases = {{2, 8}, {3, 12}, {4, 16}};
        for (const auto& [r, value] : cases) {
          const Certificate cert = torus_diametral_partition(r);
          ok &= cert.verified && cert.value == value;
        }
        std::ostringstream s;
        s << "gcover " << cover_ms << " ms, gpart " << part_ms << " ms";
        detail = s.str();
        return ok;
      });

  // 3. Torus parallel-class k-gp sets with duality, including the big sweep.
  run(3, "torus parallel k-gp: 32 on C_8xC_8; 64 and 128 on C_16xC_16 in < 2 min", 0,
      [](std::string& detail) {
        bool ok = true;
        const Certificate small = torus_parallel_kgp(3, 1);
        ok &= small.verified && small.value == 32 && small.checker_stats.max_marked == 2;
        const Certificate part8 = torus_diametral_partition(4);
        ok &= part8.verified;
        ok &= duality_certify(generate("torus:8x8"), 3, std::get<EdgeSet>(small.witness),
                              std::get<std::vector<GeodesicPath>>(part8.witness))
                  .exact;

        Certificate k3;
        Certificate k5;
        const double sweep_ms = timed_ms([&] {
          k3 = torus_parallel_kgp(4, 1);
          k5 = torus_parallel_kgp(4, 2);
        });
        ok &= k3.verified && k3.value == 64 && k3.checker_stats.max_marked == 2;
        ok &= k5.verified && k5.value == 128 && k5.checker_stats.max_marked == 4;
        ok &= sweep_ms < 120000.0;  // < 2 min for the C_16xC_16 checker sweeps
        const Certificate part16 = torus_diametral_partition(8);
        ok &= part16.verified;
        const Graph t16 = generate("torus:16x16");
        ok &= duality_certify(t16, 3, std::get<EdgeSet>(k3.witness),
                              std::get<std::vector<GeodesicPath>>(part16.witness))
                  .exact;
        ok &= duality_certify(t16, 5, std::get<EdgeSet>(k5.witness),
                              std::get<std::vector<GeodesicPath>>(part16.witness))
                  .exact;
        std::ostringstream s;
        s << "C_16xC_16 sweeps " << sweep_ms << " ms";
        detail = s.str();
        return ok;
      });

  // 4. Hypercubes: class unions, path partitions, duality, exact confirmation.
  run(4, "hypercube k-gp = (k-1)2^(d-1) for d=3,4,5 and all k; exact checks on Q_3", 0,
      [](std::string& detail) {
        bool ok = true;
        for (const int d : {3, 4, 5}) {
          const Graph q = generate("hypercube:" + std::to_string(d));
          const Certificate partition = hypercube_path_partition(d);
          ok &= partition.verified && partition.value == (1LL << (d - 1));
          for (int k = 3; k <= d + 1; ++k) {
            const EdgeSet witness = theta_union_kgp(q, k);
            ok &= static_cast<long long>(witness.size()) ==
                  (static_cast<long long>(k - 1) << (d - 1));
            ok &= is_edge_kgp(q, witness, k);
            ok &= duality_certify(q, k, witness,
                                  std::get<std::vector<GeodesicPath>>(partition.witness))
                      .exact;
          }
        }
        const double kgp_ms = timed_ms([&] {
          const SolveResult res = kgp_exact(generate("hypercube:3"), 3);
          ok &= res.optimal && res.optimum == 8;
        });
        const double part_ms = timed_ms([&] {
          const Graph q3 = generate("hypercube:3");
          const DistanceMatrix d3 = all_pairs_distances(q3);
          const SolveResult res = gpart_exact(q3, d3, enumerate_geodesics(q3, d3));
          ok &= res.optimal && res.optimum == 4;
        });
        ok &= kgp_ms < 60000.0 && part_ms < 60000.0;
        std::ostringstream s;
        s << "Q_3 exact kgp " << kgp_ms << " ms, gpart " << part_ms << " ms";
        detail = s.str();
        return ok;
      });

  // 5. Benes partitions with the counting bound.
  run(5, "Benes partitions: 16 paths (r=3), 32 paths (r=4), length 2r", 10000.0,
      [](std::string&) {
        bool ok = true;
        const std::vector<std::pair<int, long long>> cases = {{3, 16}, {4, 32}};
        for (const auto& [r, value] : cases) {
          const Certificate cert = benes_path_partition(r);
          ok &= cert.verified && cert.value == value;
          for (const GeodesicPath& p : std::get<std::vector<GeodesicPath>>(cert.witness)) {
            ok &= static_cast<int>(p.size()) - 1 == 2 * r;
          }
          const Graph bn = generate("benes:" + std::to_string(r));
          const DistanceMatrix d = all_pairs_distances(bn);
          ok &= cover_counting_certify(
                    bn, d, std::get<std::vector<GeodesicPath>>(cert.witness))
                    .exact;
        }
        return ok;
      });

  // 6. Benes k-gp values for k in {3,5} with duality.
  run(6, "Benes k-gp: 32/64 on BN(3), 64/128 on BN(4), duality exact", 60000.0,
      [](std::string&) {
        bool ok = true;
        const std::vector<std::tuple<int, int, long long, int>> cases = {
            {3, 3, 32, 2}, {3, 5, 64, 4}, {4, 3, 64, 2}, {4, 5, 128, 4}};
        for (const auto& [r, k, value, max_marked] : cases) {
          const Certificate cert = benes_kgp(r, k);
          ok &= cert.verified && cert.value == value;
          ok &= cert.checker_stats.max_marked == max_marked;
          const Certificate partition = benes_path_partition(r);
          ok &= partition.verified;
          ok &= duality_certify(generate("benes:" + std::to_string(r)), k,
                                std::get<EdgeSet>(cert.witness),
                                std::get<std::vector<GeodesicPath>>(partition.witness))
                    .exact;
        }
        return ok;
      });

  // 7. Matching/diameter equivalence over the exhaustive corpus.
  run(7, "matching-diameter equivalence: exhaustive corpus, zero counterexamples", 0,
      [](std::string& detail) {
        const SuiteOutcome outcome = run_matching_equivalence_suite();
        std::ostringstream s;
        s << outcome.passed << "/" << outcome.cases << " cases";
        if (!outcome.first_failure.empty()) {
          s << "; first failure: " << outcome.first_failure;
        }
        detail = s.str();
        return outcome.cases > 0 && outcome.passed == outcome.cases;
      });

  // 8. Random-graph oracle agreement within ten minutes.
  run(8, "oracle suite: 200 random graphs, solver vs brute force", 600000.0,
      [](std::string& detail) {
        const SuiteOutcome outcome = run_oracle_suite();
        std::ostringstream s;
        s << outcome.passed << "/" << outcome.cases << " graphs";
        if (!outcome.first_failure.empty()) {
          s << "; first failure: " << outcome.first_failure;
        }
        detail = s.str();
        return outcome.cases == 200 && outcome.passed == 200;
      });

  // 9. Partial-cube recognition suite.
  run(9, "partial-cube recognition and class structure", 0, [](std::string& detail) {
    const SuiteOutcome outcome = run_partial_cube_suite();
    std::ostringstream s;
    s << outcome.passed << "/" << outcome.cases << " cases";
    if (!outcome.first_failure.empty()) {
      s << "; first failure: " << outcome.first_failure;
    }
    detail = s.str();
    return outcome.cases > 0 && outcome.passed == outcome.cases;
  });

  bool all_passed = true;
  for (const Criterion& c : results) {
    all_passed &= c.passed;
    std::cout << (c.passed ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": "
              << c.description << " (" << static_cast<long long>(c.wall_ms) << " ms";
    if (!c.detail.empty()) {
      std::cout << "; " << c.detail;
    }
    std::cout << ")\n";
  }
  std::cout << (all_passed ? "ACCEPTANCE: all criteria passed"
                           : "ACCEPTANCE: some criteria FAILED")
            << '\n';
  return all_passed ? 0 : 1;
}
