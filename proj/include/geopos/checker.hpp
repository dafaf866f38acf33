#pragma once

#include <cstdint>
#include <optional>

#include "geopos/graph.hpp"
#include "geopos/metric.hpp"

namespace geopos {

struct CheckerOptions {
  /// Sweep only vertex pairs that are endpoints of marked edges. A geodesic
  /// through marked edges shortens to one whose ends are such endpoints, so
  /// the restriction is exact; the full sweep remains available for oracle
  /// comparison.
  bool restrict_to_marked_endpoints = true;
};

struct CheckerResult {
  int max_marked = 0;
  GeodesicPath witness;  // a geodesic attaining max_marked (empty when 0)
  std::uint64_t pairs_swept = 0;
};

/// Maximum, over all geodesics P of g, of |s intersect E(P)|. Computed as a
/// longest-path DP over the geodesic interval DAG of each swept vertex pair,
/// with marked edges weighted 1 and all others 0.
CheckerResult max_marked_on_common_geodesic(const Graph& g, const DistanceMatrix& d,
                                            const EdgeSet& s, CheckerOptions opts = {});

/// True iff every geodesic contains at most k-1 edges of s. Requires k >= 3.
bool is_edge_kgp(const Graph& g, const DistanceMatrix& d, const EdgeSet& s, int k);
bool is_edge_kgp(const Graph& g, const EdgeSet& s, int k);

/// True iff no two edges of s share an endpoint.
bool is_matching(const Graph& g, const EdgeSet& s);

struct MatchingEquivalenceReport {
  int k = 0;
  int diameter = 0;
  bool diameter_small_enough = false;  // diam <= 2k-2
  bool all_k_matchings_are_kgp = false;
  bool equivalence_holds = false;
  std::uint64_t matchings_checked = 0;
  std::optional<EdgeSet> violating_matching;  // a size-k matching that is not a k-gp set
};

/// Exhaustively tests whether every matching of size k is an edge k-gp set
/// and compares the outcome against diam(g) <= 2k-2. The number of candidate
/// k-subsets of edges is bounded by the budget; exceeding it is a hard error.
MatchingEquivalenceReport check_matching_diameter_equivalence(const Graph& g, int k,
                                                              std::uint64_t budget = kDefaultBudget);

/// Sufficient condition for s to be an edge k-gp set: with l the minimum and
/// L the maximum pairwise edge distance over s, tests L < l(k-1) + (k-2).
/// A false result is inconclusive.
bool corollary_2_3_sufficient(const Graph& g, const DistanceMatrix& d, const EdgeSet& s, int k);

/// Sufficient condition that no k of the given edge-disjoint j-geodesics lie
/// on a common geodesic: every pair (P,Q) that lies on a common geodesic must
/// satisfy d(P,Q) < l(k-1) + j(k-2), where l is the minimum pairwise path
/// distance. Precondition violations throw.
bool prop_2_2_sufficient(const Graph& g, const DistanceMatrix& d,
                         const std::vector<GeodesicPath>& paths, int j, int k);

/// Every path is a geodesic and every edge of g lies on at least one of them.
bool is_geodesic_cover(const Graph& g, const DistanceMatrix& d,
                       const std::vector<GeodesicPath>& paths);

/// Every path is a geodesic and every edge of g lies on exactly one of them.
bool is_geodesic_partition(const Graph& g, const DistanceMatrix& d,
                           const std::vector<GeodesicPath>& paths);

}  // namespace geopos
