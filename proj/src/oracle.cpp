#include "geopos/oracle.hpp"

#include <algorithm>
#include <bit>

namespace geopos {

std::vector<GeodesicPath> brute_all_geodesics(const Graph& g, const DistanceMatrix& d) {
  std::vector<GeodesicPath> all;
  GeodesicPath path;
  // Every prefix of a geodesic is a geodesic, so growing paths while the
  // length keeps matching the endpoint distance enumerates exactly the
  // geodesics starting at path.front(). Recording only ends above the start
  // vertex keeps one copy per undirected path.
  auto grow = [&](auto&& self) -> void {
    const int start = path.front();
    const int x = path.back();
    for (const Neighbor nb : g.neighbors(x)) {
      if (d(start, nb.to) == static_cast<int>(path.size())) {
        path.push_back(nb.to);
        if (nb.to > start) {
          all.push_back(path);
        }
        self(self);
        path.pop_back();
      }
    }
  };
  for (int u = 0; u < g.vertex_count(); ++u) {
    path.assign(1, u);
    grow(grow);
  }
  return all;
}

int brute_max_marked(const Graph& g, const DistanceMatrix& d, const EdgeSet& s) {
  s.require_subset_of(g);
  int best = 0;
  for (const GeodesicPath& p : brute_all_geodesics(g, d)) {
    int hits = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (s.contains(Edge(p[i], p[i + 1]))) {
        ++hits;
      }
    }
    best = std::max(best, hits);
  }
  return best;
}

long long brute_kgp_maximum(const Graph& g, int k, std::uint64_t budget) {
  if (k < 3) {
    throw std::invalid_argument("edge k-general position requires k >= 3");
  }
  const int m = g.edge_count();
  if (m >= 63 || (1ull << m) > budget) {
    throw BudgetExceeded("subset enumeration over 2^" + std::to_string(m) +
                             " edge sets exceeds budget " + std::to_string(budget),
                         m >= 63 ? budget + 1 : 1ull << m);
  }
  const DistanceMatrix d = all_pairs_distances(g);

  std::vector<std::uint64_t> geodesic_masks;
  for (const GeodesicPath& p : brute_all_geodesics(g, d)) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      mask |= 1ull << g.find_edge(p[i], p[i + 1]);
    }
    geodesic_masks.push_back(mask);
  }

  long long best = 0;
  for (std::uint64_t subset = 0; subset < (1ull << m); ++subset) {
    const int size = std::popcount(subset);
    if (size <= best) {
      continue;
    }
    bool feasible = true;
    for (const std::uint64_t p : geodesic_masks) {
      if (std::popcount(subset & p) > k - 1) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      best = size;
    }
  }
  return best;
}

}  // namespace geopos
