#include "geopos/metric.hpp"

#include <algorithm>
#include <queue>

namespace geopos {

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  DistanceMatrix dm;
  dm.n_ = n;
  dm.d_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);

  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    int* dist = dm.d_.data() + static_cast<std::size_t>(s) * static_cast<std::size_t>(n);
    queue.clear();
    queue.push_back(s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      for (const Neighbor nb : g.neighbors(x)) {
        if (dist[nb.to] < 0) {
          dist[nb.to] = dist[x] + 1;
          queue.push_back(nb.to);
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (dist[v] < 0) {
        throw std::invalid_argument("graph is disconnected: vertex " + std::to_string(v) +
                                    " is unreachable from vertex " + std::to_string(s));
      }
      dm.diameter_ = std::max(dm.diameter_, dist[v]);
    }
  }
  return dm;
}

int edge_distance(const Graph& g, const DistanceMatrix& d, const Edge& e, const Edge& f) {
  g.edge_index(e);
  g.edge_index(f);
  return std::min(std::min(d(e.u, f.u), d(e.u, f.v)), std::min(d(e.v, f.u), d(e.v, f.v)));
}

int vertex_set_distance(const DistanceMatrix& d, const std::vector<int>& a,
                        const std::vector<int>& b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("vertex set distance of an empty set");
  }
  int best = d.diameter();
  for (const int x : a) {
    for (const int y : b) {
      best = std::min(best, d(x, y));
    }
  }
  return best;
}

bool is_geodesic(const Graph& g, const DistanceMatrix& d, const GeodesicPath& path) {
  if (path.empty()) {
    return false;
  }
  const int n = g.vertex_count();
  for (const int v : path) {
    if (v < 0 || v >= n) {
      return false;
    }
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.has_edge(path[i], path[i + 1])) {
      return false;
    }
  }
  return static_cast<int>(path.size()) - 1 == d(path.front(), path.back());
}

IntervalDag geodesic_interval_dag(const Graph& g, const DistanceMatrix& d, int u, int v) {
  if (u == v) {
    throw std::invalid_argument("interval DAG requires distinct endpoints");
  }
  if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count()) {
    throw std::invalid_argument("interval DAG endpoint out of range");
  }
  IntervalDag dag;
  dag.source = u;
  dag.target = v;
  dag.length = d(u, v);
  for (int idx = 0; idx < g.edge_count(); ++idx) {
    const Edge& e = g.edge(idx);
    if (d(u, e.u) + 1 + d(e.v, v) == dag.length) {
      dag.arcs.push_back({e.u, e.v, idx});
    } else if (d(u, e.v) + 1 + d(e.u, v) == dag.length) {
      dag.arcs.push_back({e.v, e.u, idx});
    }
  }
  std::sort(dag.arcs.begin(), dag.arcs.end(), [&](const Arc& a, const Arc& b) {
    return std::tuple(d(u, a.from), a.from, a.to) < std::tuple(d(u, b.from), b.from, b.to);
  });
  return dag;
}

}  // namespace geopos
