#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geopos/certificate.hpp"
#include "geopos/graph.hpp"
#include "geopos/metric.hpp"

namespace geopos {

struct CatalogOptions {
  /// Keep only geodesics whose edge set is not strictly contained in another
  /// geodesic's edge set. Sound for k-gp constraints (the larger path always
  /// dominates); never used for partition search.
  bool maximal_only = false;
  std::uint64_t budget = kDefaultBudget;
};

/// Every geodesic of the graph (one per undirected vertex sequence), with
/// per-edge incidence lists. The order is deterministic: endpoint pair then
/// DFS discovery, with the maximal filter regrouping by descending length.
struct GeodesicCatalog {
  std::vector<GeodesicPath> geodesics;
  std::vector<std::vector<std::uint64_t>> edge_masks;  // per geodesic, edge-indexed bits
  std::vector<std::vector<int>> covering;              // per edge index: catalog ids
  int mask_words = 0;
  bool maximal_only = false;
};

/// Complete enumeration within the budget; exceeding it throws BudgetExceeded
/// carrying the count reached (never a silently truncated catalog).
GeodesicCatalog enumerate_geodesics(const Graph& g, const DistanceMatrix& d,
                                    CatalogOptions options = {});

struct SolveResult {
  long long optimum = 0;
  Witness witness;
  std::uint64_t nodes_explored = 0;
  std::string bound_used;
  std::string method;   // "exact-bb" or "exact-cover"
  bool optimal = true;  // false when the node budget ran out
  long long lower_bound = 0;
  long long upper_bound = 0;
};

/// Minimum number of geodesics covering every edge, by branch and bound over
/// the catalog (branch on the uncovered edge with fewest covering geodesics).
SolveResult gcover_exact(const Graph& g, const DistanceMatrix& d, const GeodesicCatalog& catalog,
                         std::uint64_t budget = kDefaultBudget);

/// Minimum number of geodesics partitioning the edge set (exact cover).
/// Requires a full catalog (maximal_only = false).
SolveResult gpart_exact(const Graph& g, const DistanceMatrix& d, const GeodesicCatalog& catalog,
                        std::uint64_t budget = kDefaultBudget);

/// Maximum edge k-gp set by include/exclude branch and bound over edges in
/// most-constrained-first order, with incremental per-geodesic counters.
SolveResult kgp_exact(const Graph& g, int k, std::uint64_t budget = kDefaultBudget);

/// Numeric check of kgp <= (k-1)*gcover <= (k-1)*gpart on verified witnesses.
/// Violation of the chain is an implementation bug and throws std::logic_error.
struct DualityReport {
  int k = 0;
  long long kgp_lower = 0;       // size of the verified k-gp witness
  long long partition_size = 0;  // size of the verified partition (gpart upper bound)
  bool chain_holds = false;
  bool exact = false;  // kgp_lower == (k-1)*partition_size pins all three values
  long long kgp_value = -1;
  long long gcover_value = -1;
  long long gpart_value = -1;
};

DualityReport duality_certify(const Graph& g, int k, const EdgeSet& kgp_witness,
                              const std::vector<GeodesicPath>& partition);

/// Same, with an already-certified k-gp size (e.g. from the exact solver).
DualityReport duality_certify(const Graph& g, int k, long long kgp_lower,
                              const std::vector<GeodesicPath>& partition);

/// ceil(m/diam) counting bound against a verified partition; equality pins
/// gcover = gpart = partition size without search.
struct CountingBoundReport {
  long long counting_lower = 0;
  long long partition_size = 0;
  bool exact = false;
};

CountingBoundReport cover_counting_certify(const Graph& g, const DistanceMatrix& d,
                                           const std::vector<GeodesicPath>& partition);

}  // namespace geopos
