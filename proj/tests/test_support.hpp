#pragma once

#include <random>
#include <vector>

#include "geopos/graph.hpp"
#include "geopos/metric.hpp"

namespace testsupport {

inline geopos::Graph complete_graph(int n) {
  std::vector<geopos::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      edges.emplace_back(u, v);
    }
  }
  return geopos::Graph(n, std::move(edges));
}

inline geopos::Graph complete_bipartite(int a, int b) {
  std::vector<geopos::Edge> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) {
      edges.emplace_back(u, a + v);
    }
  }
  return geopos::Graph(a + b, std::move(edges));
}

inline geopos::Graph random_connected(std::mt19937& rng, int min_n, int max_n, int max_edges) {
  std::uniform_int_distribution<int> n_dist(min_n, max_n);
  const int n = n_dist(rng);
  const int cap = std::min(max_edges, n * (n - 1) / 2);
  std::uniform_int_distribution<int> m_dist(n - 1, cap);
  const int target = m_dist(rng);

  std::vector<geopos::Edge> tree;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    tree.emplace_back(pick(rng), v);
  }
  geopos::EdgeSet have(tree);
  std::uniform_int_distribution<int> vertex(0, n - 1);
  while (static_cast<int>(have.size()) < target) {
    const int a = vertex(rng);
    const int b = vertex(rng);
    if (a != b) {
      have.insert(geopos::Edge(a, b));
    }
  }
  return geopos::Graph(n, have.edges());
}

// Enumerates geodesics by walking ALL simple paths and filtering with
// is_geodesic afterwards; independent of the distance-gradient pruning used
// by both the catalog and the brute oracle. Feasible for tiny graphs only.
inline std::vector<geopos::GeodesicPath> simple_path_geodesics(const geopos::Graph& g,
                                                               const geopos::DistanceMatrix& d) {
  std::vector<geopos::GeodesicPath> found;
  std::vector<int> path;
  std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
  auto grow = [&](auto&& self, int x) -> void {
    if (static_cast<int>(path.size()) - 1 > d.diameter()) {
      return;
    }
    if (path.size() >= 2 && path.back() > path.front() && geopos::is_geodesic(g, d, path)) {
      found.push_back(path);
    }
    for (const geopos::Neighbor nb : g.neighbors(x)) {
      if (!on_path[static_cast<std::size_t>(nb.to)]) {
        on_path[static_cast<std::size_t>(nb.to)] = 1;
        path.push_back(nb.to);
        self(self, nb.to);
        path.pop_back();
        on_path[static_cast<std::size_t>(nb.to)] = 0;
      }
    }
  };
  for (int u = 0; u < g.vertex_count(); ++u) {
    path.assign(1, u);
    on_path.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    on_path[static_cast<std::size_t>(u)] = 1;
    grow(grow, u);
  }
  return found;
}

}  // namespace testsupport
