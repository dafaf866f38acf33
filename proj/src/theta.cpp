#include "geopos/theta.hpp"

#include <algorithm>
#include <numeric>

#include "geopos/checker.hpp"

namespace geopos {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

bool theta_related(const Graph& g, const DistanceMatrix& d, const Edge& e, const Edge& f) {
  g.edge_index(e);
  g.edge_index(f);
  return d(e.u, f.u) + d(e.v, f.v) != d(e.u, f.v) + d(e.v, f.u);
}

ThetaClasses theta_classes(const Graph& g, const DistanceMatrix& d) {
  const int m = g.edge_count();
  UnionFind uf(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (theta_related(g, d, g.edge(i), g.edge(j))) {
        uf.unite(i, j);
      }
    }
  }
  ThetaClasses result;
  result.class_of_edge.assign(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    const int root = uf.find(i);
    if (result.class_of_edge[static_cast<std::size_t>(root)] < 0) {
      result.class_of_edge[static_cast<std::size_t>(root)] =
          static_cast<int>(result.classes.size());
      result.classes.emplace_back();
    }
    const int cls = result.class_of_edge[static_cast<std::size_t>(root)];
    result.class_of_edge[static_cast<std::size_t>(i)] = cls;
    result.classes[static_cast<std::size_t>(cls)].insert(g.edge(i));
  }
  return result;
}

ThetaClasses theta_classes(const Graph& g) { return theta_classes(g, all_pairs_distances(g)); }

bool is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) {
      continue;
    }
    color[static_cast<std::size_t>(s)] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      for (const Neighbor nb : g.neighbors(x)) {
        if (color[static_cast<std::size_t>(nb.to)] < 0) {
          color[static_cast<std::size_t>(nb.to)] = 1 - color[static_cast<std::size_t>(x)];
          queue.push_back(nb.to);
        } else if (color[static_cast<std::size_t>(nb.to)] ==
                   color[static_cast<std::size_t>(x)]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_partial_cube(const Graph& g) {
  if (!is_bipartite(g)) {
    return false;
  }
  const DistanceMatrix d = all_pairs_distances(g);
  const ThetaClasses classes = theta_classes(g, d);
  for (const EdgeSet& cls : classes.classes) {
    const auto& edges = cls.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        if (!theta_related(g, d, edges[i], edges[j])) {
          return false;  // closure strictly larger than the relation
        }
      }
    }
  }
  return true;
}

EdgeSet theta_union_kgp(const Graph& g, int k) {
  if (k < 3) {
    throw std::invalid_argument("edge k-general position requires k >= 3");
  }
  if (!is_partial_cube(g)) {
    throw std::invalid_argument("theta-union construction needs a partial cube");
  }
  const DistanceMatrix d = all_pairs_distances(g);
  const ThetaClasses classes = theta_classes(g, d);
  const int count = static_cast<int>(classes.classes.size());
  if (k - 1 > count) {
    throw std::invalid_argument("only " + std::to_string(count) +
                                " classes available: k must be at most " +
                                std::to_string(count + 1));
  }
  std::vector<int> order(static_cast<std::size_t>(count));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return classes.classes[static_cast<std::size_t>(a)].size() >
           classes.classes[static_cast<std::size_t>(b)].size();
  });

  EdgeSet result;
  for (int i = 0; i < k - 1; ++i) {
    for (const Edge& e : classes.classes[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]) {
      result.insert(e);
    }
  }
  if (!is_edge_kgp(g, d, result, k)) {
    throw std::logic_error("theta-union witness failed the k-gp check");
  }
  return result;
}

}  // namespace geopos
