#pragma once

#include <vector>

#include "geopos/graph.hpp"

namespace geopos {

/// All-pairs hop distances of a connected graph.
class DistanceMatrix {
 public:
  int operator()(int u, int v) const {
    return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(v)];
  }
  int vertex_count() const noexcept { return n_; }
  int diameter() const noexcept { return diameter_; }

  friend DistanceMatrix all_pairs_distances(const Graph& g);

 private:
  std::vector<int> d_;
  int n_ = 0;
  int diameter_ = 0;
};

/// BFS from every vertex. Throws std::invalid_argument naming an unreachable
/// pair when the graph is disconnected.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Minimum distance between an endpoint of e and an endpoint of f.
int edge_distance(const Graph& g, const DistanceMatrix& d, const Edge& e, const Edge& f);

/// Minimum distance between a vertex of a and a vertex of b.
int vertex_set_distance(const DistanceMatrix& d, const std::vector<int>& a,
                        const std::vector<int>& b);

/// A geodesic as an explicit vertex sequence; length = vertices.size() - 1.
using GeodesicPath = std::vector<int>;

/// True iff consecutive vertices are adjacent and the length equals the
/// distance between the endpoints. Malformed sequences return false.
bool is_geodesic(const Graph& g, const DistanceMatrix& d, const GeodesicPath& path);

struct Arc {
  int from;
  int to;
  int edge;  // index into Graph::edges()

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Every edge that lies on some u,v-geodesic, oriented away from u and
/// sorted by (distance from u, from, to). Directed u->v paths in this DAG
/// are exactly the u,v-geodesics.
struct IntervalDag {
  int source = -1;
  int target = -1;
  int length = 0;  // d(source, target)
  std::vector<Arc> arcs;
};

IntervalDag geodesic_interval_dag(const Graph& g, const DistanceMatrix& d, int u, int v);

}  // namespace geopos
