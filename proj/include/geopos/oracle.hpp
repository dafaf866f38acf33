#pragma once

#include <cstdint>
#include <vector>

#include "geopos/graph.hpp"
#include "geopos/metric.hpp"

namespace geopos {

/// Brute-force reference routines. They deliberately avoid the interval-DAG
/// machinery and the branch-and-bound solvers so they can serve as an
/// independent check of both.

/// Every geodesic with at least one edge, enumerated by extending paths one
/// neighbor at a time and keeping exactly those that stay shortest. Each
/// undirected geodesic appears once.
std::vector<GeodesicPath> brute_all_geodesics(const Graph& g, const DistanceMatrix& d);

/// max over all geodesics P of |s intersect E(P)|, by explicit enumeration.
int brute_max_marked(const Graph& g, const DistanceMatrix& d, const EdgeSet& s);

/// Maximum edge k-gp set size by enumerating all 2^m edge subsets and testing
/// each against the explicit geodesic list. Requires 2^m within budget.
long long brute_kgp_maximum(const Graph& g, int k, std::uint64_t budget = kDefaultBudget);

}  // namespace geopos
