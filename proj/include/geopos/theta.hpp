#pragma once

#include <vector>

#include "geopos/graph.hpp"
#include "geopos/metric.hpp"

namespace geopos {

/// Edges xy and uv are related iff d(x,u) + d(y,v) != d(x,v) + d(y,u).
/// The outcome does not depend on how the endpoints are labeled.
bool theta_related(const Graph& g, const DistanceMatrix& d, const Edge& e, const Edge& f);

/// Equivalence classes of the transitive closure of the relation, ordered by
/// smallest member edge index.
struct ThetaClasses {
  std::vector<EdgeSet> classes;
  std::vector<int> class_of_edge;  // indexed by Graph edge index
};

ThetaClasses theta_classes(const Graph& g, const DistanceMatrix& d);
ThetaClasses theta_classes(const Graph& g);

bool is_bipartite(const Graph& g);

/// Winkler's criterion: connected, bipartite, and the relation is transitive
/// (every closure class is pairwise related).
bool is_partial_cube(const Graph& g);

/// Union of k-1 classes of a partial cube; the default rule picks the largest
/// classes, ties broken by smallest class index. The result is always an edge
/// k-gp set; this is re-verified before returning.
EdgeSet theta_union_kgp(const Graph& g, int k);

}  // namespace geopos
