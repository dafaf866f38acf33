#include "geopos/checker.hpp"

#include <algorithm>
#include <numeric>

namespace geopos {

namespace {

// C(m, k) saturated at limit+1 to avoid overflow.
std::uint64_t binomial_capped(int m, int k, std::uint64_t limit) {
  if (k < 0 || k > m) {
    return 0;
  }
  k = std::min(k, m - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(m - k + i) / static_cast<std::uint64_t>(i);
    if (result > limit) {
      return limit + 1;
    }
  }
  return result;
}

}  // namespace

CheckerResult max_marked_on_common_geodesic(const Graph& g, const DistanceMatrix& d,
                                            const EdgeSet& s, CheckerOptions opts) {
  s.require_subset_of(g);
  CheckerResult result;
  if (s.empty()) {
    return result;
  }

  const int n = g.vertex_count();
  std::vector<char> marked(static_cast<std::size_t>(g.edge_count()), 0);
  for (const Edge& e : s) {
    marked[static_cast<std::size_t>(g.edge_index(e))] = 1;
  }

  std::vector<int> candidates;
  if (opts.restrict_to_marked_endpoints) {
    candidates.reserve(2 * s.size());
    for (const Edge& e : s) {
      candidates.push_back(e.u);
      candidates.push_back(e.v);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  } else {
    candidates.resize(static_cast<std::size_t>(n));
    std::iota(candidates.begin(), candidates.end(), 0);
  }

  std::vector<int> best(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> levels;

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      const int u = candidates[i];
      const int v = candidates[j];
      const int duv = d(u, v);
      ++result.pairs_swept;

      levels.assign(static_cast<std::size_t>(duv) + 1, {});
      for (int x = 0; x < n; ++x) {
        if (d(u, x) + d(x, v) == duv) {
          levels[static_cast<std::size_t>(d(u, x))].push_back(x);
        }
      }
      best[static_cast<std::size_t>(u)] = 0;
      for (int lev = 0; lev < duv; ++lev) {
        for (const int x : levels[static_cast<std::size_t>(lev)]) {
          const int base = best[static_cast<std::size_t>(x)];
          if (base < 0) {
            continue;
          }
          for (const Neighbor nb : g.neighbors(x)) {
            if (d(u, nb.to) == lev + 1 && lev + 1 + d(nb.to, v) == duv) {
              const int cand = base + (marked[static_cast<std::size_t>(nb.edge)] ? 1 : 0);
              if (cand > best[static_cast<std::size_t>(nb.to)]) {
                best[static_cast<std::size_t>(nb.to)] = cand;
                parent[static_cast<std::size_t>(nb.to)] = x;
              }
            }
          }
        }
      }
      if (best[static_cast<std::size_t>(v)] > result.max_marked) {
        result.max_marked = best[static_cast<std::size_t>(v)];
        GeodesicPath path;
        for (int x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) {
          path.push_back(x);
        }
        std::reverse(path.begin(), path.end());
        result.witness = std::move(path);
      }
      for (const auto& level : levels) {
        for (const int x : level) {
          best[static_cast<std::size_t>(x)] = -1;
          parent[static_cast<std::size_t>(x)] = -1;
        }
      }
    }
  }
  return result;
}

bool is_edge_kgp(const Graph& g, const DistanceMatrix& d, const EdgeSet& s, int k) {
  if (k < 3) {
    throw std::invalid_argument("edge k-general position requires k >= 3");
  }
  return max_marked_on_common_geodesic(g, d, s).max_marked <= k - 1;
}

bool is_edge_kgp(const Graph& g, const EdgeSet& s, int k) {
  return is_edge_kgp(g, all_pairs_distances(g), s, k);
}

bool is_matching(const Graph& g, const EdgeSet& s) {
  s.require_subset_of(g);
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Edge& e : s) {
    if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)]) {
      return false;
    }
    used[static_cast<std::size_t>(e.u)] = 1;
    used[static_cast<std::size_t>(e.v)] = 1;
  }
  return true;
}

MatchingEquivalenceReport check_matching_diameter_equivalence(const Graph& g, int k,
                                                              std::uint64_t budget) {
  if (k < 3) {
    throw std::invalid_argument("matching-diameter equivalence requires k >= 3");
  }
  const std::uint64_t candidates = binomial_capped(g.edge_count(), k, budget);
  if (candidates > budget) {
    throw BudgetExceeded("matching-diameter equivalence: C(" + std::to_string(g.edge_count()) +
                             "," + std::to_string(k) + ") exceeds budget " +
                             std::to_string(budget),
                         candidates);
  }

  const DistanceMatrix d = all_pairs_distances(g);
  MatchingEquivalenceReport report;
  report.k = k;
  report.diameter = d.diameter();
  report.diameter_small_enough = d.diameter() <= 2 * k - 2;

  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Edge> chosen;
  bool violation = false;

  // Enumerate matchings of size exactly k in canonical edge order.
  auto extend = [&](auto&& self, int start) -> void {
    if (violation) {
      return;
    }
    if (static_cast<int>(chosen.size()) == k) {
      ++report.matchings_checked;
      const EdgeSet m(chosen);
      if (max_marked_on_common_geodesic(g, d, m).max_marked >= k) {
        violation = true;
        report.violating_matching = m;
      }
      return;
    }
    const int needed = k - static_cast<int>(chosen.size());
    for (int idx = start; idx + needed <= g.edge_count(); ++idx) {
      const Edge& e = g.edge(idx);
      if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)]) {
        continue;
      }
      used[static_cast<std::size_t>(e.u)] = 1;
      used[static_cast<std::size_t>(e.v)] = 1;
      chosen.push_back(e);
      self(self, idx + 1);
      chosen.pop_back();
      used[static_cast<std::size_t>(e.u)] = 0;
      used[static_cast<std::size_t>(e.v)] = 0;
      if (violation) {
        return;
      }
    }
  };
  extend(extend, 0);

  report.all_k_matchings_are_kgp = !violation;
  report.equivalence_holds = report.diameter_small_enough == report.all_k_matchings_are_kgp;
  return report;
}

bool corollary_2_3_sufficient(const Graph& g, const DistanceMatrix& d, const EdgeSet& s, int k) {
  if (s.size() < 2) {
    throw std::invalid_argument("pairwise edge distances need at least two edges");
  }
  if (k < 2) {
    throw std::invalid_argument("requires k >= 2");
  }
  const auto& edges = s.edges();
  int min_dist = d.diameter();
  int max_dist = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const int dist = edge_distance(g, d, edges[i], edges[j]);
      min_dist = std::min(min_dist, dist);
      max_dist = std::max(max_dist, dist);
    }
  }
  return max_dist < min_dist * (k - 1) + (k - 2);
}

bool prop_2_2_sufficient(const Graph& g, const DistanceMatrix& d,
                         const std::vector<GeodesicPath>& paths, int j, int k) {
  if (j < 1) {
    throw std::invalid_argument("requires geodesics of length j >= 1");
  }
  if (k < 2) {
    throw std::invalid_argument("requires k >= 2");
  }
  std::vector<char> edge_used(static_cast<std::size_t>(g.edge_count()), 0);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const GeodesicPath& p = paths[i];
    if (!is_geodesic(g, d, p) || static_cast<int>(p.size()) - 1 != j) {
      throw std::invalid_argument("path " + std::to_string(i) +
                                  " is not a geodesic of length " + std::to_string(j));
    }
    for (std::size_t t = 0; t + 1 < p.size(); ++t) {
      const int idx = g.find_edge(p[t], p[t + 1]);
      if (edge_used[static_cast<std::size_t>(idx)]) {
        throw std::invalid_argument("paths are not pairwise edge-disjoint");
      }
      edge_used[static_cast<std::size_t>(idx)] = 1;
    }
  }
  if (paths.size() < 2) {
    return true;
  }

  int min_dist = d.diameter();
  std::vector<std::vector<int>> pair_dist(paths.size(), std::vector<int>(paths.size(), 0));
  for (std::size_t a = 0; a < paths.size(); ++a) {
    for (std::size_t b = a + 1; b < paths.size(); ++b) {
      const int dist = vertex_set_distance(d, paths[a], paths[b]);
      pair_dist[a][b] = dist;
      min_dist = std::min(min_dist, dist);
    }
  }

  for (std::size_t a = 0; a < paths.size(); ++a) {
    for (std::size_t b = a + 1; b < paths.size(); ++b) {
      std::vector<Edge> both;
      for (const auto* p : {&paths[a], &paths[b]}) {
        for (std::size_t t = 0; t + 1 < p->size(); ++t) {
          both.emplace_back((*p)[t], (*p)[t + 1]);
        }
      }
      const EdgeSet pair_edges(both);
      const bool co_geodesic =
          max_marked_on_common_geodesic(g, d, pair_edges).max_marked == 2 * j;
      if (co_geodesic && !(pair_dist[a][b] < min_dist * (k - 1) + j * (k - 2))) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// 0 on a malformed path; otherwise fills per-edge use counts and reports
// whether any edge was used twice (including twice by one path).
bool accumulate_path_edges(const Graph& g, const DistanceMatrix& d, const GeodesicPath& p,
                           std::vector<int>& use_count, bool& reused) {
  if (!is_geodesic(g, d, p)) {
    return false;
  }
  for (std::size_t t = 0; t + 1 < p.size(); ++t) {
    const int idx = g.find_edge(p[t], p[t + 1]);
    if (++use_count[static_cast<std::size_t>(idx)] > 1) {
      reused = true;
    }
  }
  return true;
}

}  // namespace

bool is_geodesic_cover(const Graph& g, const DistanceMatrix& d,
                       const std::vector<GeodesicPath>& paths) {
  std::vector<int> use_count(static_cast<std::size_t>(g.edge_count()), 0);
  bool reused = false;
  for (const GeodesicPath& p : paths) {
    if (!accumulate_path_edges(g, d, p, use_count, reused)) {
      return false;
    }
  }
  return std::all_of(use_count.begin(), use_count.end(), [](int c) { return c >= 1; });
}

bool is_geodesic_partition(const Graph& g, const DistanceMatrix& d,
                           const std::vector<GeodesicPath>& paths) {
  std::vector<int> use_count(static_cast<std::size_t>(g.edge_count()), 0);
  bool reused = false;
  for (const GeodesicPath& p : paths) {
    if (!accumulate_path_edges(g, d, p, use_count, reused)) {
      return false;
    }
  }
  return !reused && std::all_of(use_count.begin(), use_count.end(), [](int c) { return c == 1; });
}

}  // namespace geopos
