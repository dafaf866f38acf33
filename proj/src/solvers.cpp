#include "geopos/solvers.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "geopos/checker.hpp"

namespace geopos {

namespace {

int mask_popcount(const std::vector<std::uint64_t>& mask) {
  int total = 0;
  for (const std::uint64_t w : mask) {
    total += std::popcount(w);
  }
  return total;
}

int mask_and_popcount(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  int total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    total += std::popcount(a[i] & b[i]);
  }
  return total;
}

bool mask_subset(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & ~b[i]) {
      return false;
    }
  }
  return true;
}

bool mask_none(const std::vector<std::uint64_t>& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint64_t w) { return w == 0; });
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

std::vector<std::uint64_t> path_mask(const Graph& g, const GeodesicPath& p, int words) {
  std::vector<std::uint64_t> mask(static_cast<std::size_t>(words), 0);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const int idx = g.find_edge(p[i], p[i + 1]);
    mask[static_cast<std::size_t>(idx) / 64] |= 1ull << (static_cast<std::size_t>(idx) % 64);
  }
  return mask;
}

}  // namespace

GeodesicCatalog enumerate_geodesics(const Graph& g, const DistanceMatrix& d,
                                    CatalogOptions options) {
  if (options.budget == 0) {
    throw std::invalid_argument("geodesic enumeration needs a positive budget");
  }
  const int n = g.vertex_count();
  GeodesicCatalog catalog;
  catalog.maximal_only = options.maximal_only;
  catalog.mask_words = (g.edge_count() + 63) / 64;

  GeodesicPath path;
  auto extend = [&](auto&& self, int x, int v) -> void {
    if (x == v) {
      if (static_cast<std::uint64_t>(catalog.geodesics.size()) >= options.budget) {
        throw BudgetExceeded("geodesic enumeration exceeded budget of " +
                                 std::to_string(options.budget) + " paths",
                             catalog.geodesics.size());
      }
      catalog.geodesics.push_back(path);
      return;
    }
    for (const Neighbor nb : g.neighbors(x)) {
      if (d(path.front(), nb.to) == static_cast<int>(path.size()) &&
          d(nb.to, v) == d(x, v) - 1) {
        path.push_back(nb.to);
        self(self, nb.to, v);
        path.pop_back();
      }
    }
  };

  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      path.assign(1, u);
      extend(extend, u, v);
    }
  }

  std::vector<std::vector<std::uint64_t>> masks;
  masks.reserve(catalog.geodesics.size());
  for (const GeodesicPath& p : catalog.geodesics) {
    masks.push_back(path_mask(g, p, catalog.mask_words));
  }

  if (options.maximal_only) {
    std::vector<int> order(catalog.geodesics.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return catalog.geodesics[static_cast<std::size_t>(a)].size() >
             catalog.geodesics[static_cast<std::size_t>(b)].size();
    });
    std::vector<GeodesicPath> kept_paths;
    std::vector<std::vector<std::uint64_t>> kept_masks;
    for (const int idx : order) {
      const auto& mask = masks[static_cast<std::size_t>(idx)];
      bool dominated = false;
      for (std::size_t j = 0; j < kept_masks.size() && !dominated; ++j) {
        dominated = kept_paths[j].size() > catalog.geodesics[static_cast<std::size_t>(idx)].size() &&
                    mask_subset(mask, kept_masks[j]);
      }
      if (!dominated) {
        kept_paths.push_back(catalog.geodesics[static_cast<std::size_t>(idx)]);
        kept_masks.push_back(mask);
      }
    }
    catalog.geodesics = std::move(kept_paths);
    masks = std::move(kept_masks);
  }

  catalog.edge_masks = std::move(masks);
  catalog.covering.assign(static_cast<std::size_t>(g.edge_count()), {});
  for (std::size_t id = 0; id < catalog.geodesics.size(); ++id) {
    const GeodesicPath& p = catalog.geodesics[id];
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      catalog.covering[static_cast<std::size_t>(g.find_edge(p[i], p[i + 1]))].push_back(
          static_cast<int>(id));
    }
  }
  return catalog;
}

namespace {

struct CoverSearch {
  const GeodesicCatalog* catalog;
  int edge_count;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool aborted = false;
  long long best = 0;
  std::vector<int> best_choice;
  std::vector<int> choice;

  int max_cover(const std::vector<std::uint64_t>& uncovered) const {
    int best_cov = 0;
    for (const auto& mask : catalog->edge_masks) {
      best_cov = std::max(best_cov, mask_and_popcount(mask, uncovered));
    }
    return best_cov;
  }

  int pick_branch_edge(const std::vector<std::uint64_t>& uncovered) const {
    int chosen = -1;
    std::size_t fewest = 0;
    for (int e = 0; e < edge_count; ++e) {
      if (!(uncovered[static_cast<std::size_t>(e) / 64] &
            (1ull << (static_cast<std::size_t>(e) % 64)))) {
        continue;
      }
      const std::size_t options = catalog->covering[static_cast<std::size_t>(e)].size();
      if (chosen < 0 || options < fewest) {
        chosen = e;
        fewest = options;
      }
    }
    return chosen;
  }

  void run(std::vector<std::uint64_t>& uncovered, long long count) {
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    if (mask_none(uncovered)) {
      if (count < best) {
        best = count;
        best_choice = choice;
      }
      return;
    }
    const int cover_cap = max_cover(uncovered);
    if (count + ceil_div(mask_popcount(uncovered), cover_cap) >= best) {
      return;
    }
    const int e = pick_branch_edge(uncovered);
    std::vector<int> candidates = catalog->covering[static_cast<std::size_t>(e)];
    std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      return mask_and_popcount(catalog->edge_masks[static_cast<std::size_t>(a)], uncovered) >
             mask_and_popcount(catalog->edge_masks[static_cast<std::size_t>(b)], uncovered);
    });
    for (const int id : candidates) {
      const auto& mask = catalog->edge_masks[static_cast<std::size_t>(id)];
      std::vector<std::uint64_t> next(uncovered);
      for (std::size_t w = 0; w < next.size(); ++w) {
        next[w] &= ~mask[w];
      }
      choice.push_back(id);
      run(next, count + 1);
      choice.pop_back();
      if (aborted) {
        return;
      }
    }
  }
};

std::vector<int> greedy_cover(const GeodesicCatalog& catalog, int edge_count) {
  std::vector<std::uint64_t> uncovered(static_cast<std::size_t>((edge_count + 63) / 64), 0);
  for (int e = 0; e < edge_count; ++e) {
    uncovered[static_cast<std::size_t>(e) / 64] |= 1ull << (static_cast<std::size_t>(e) % 64);
  }
  std::vector<int> chosen;
  while (!mask_none(uncovered)) {
    int best_id = -1;
    int best_gain = 0;
    for (std::size_t id = 0; id < catalog.edge_masks.size(); ++id) {
      const int gain = mask_and_popcount(catalog.edge_masks[id], uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best_id = static_cast<int>(id);
      }
    }
    chosen.push_back(best_id);
    for (std::size_t w = 0; w < uncovered.size(); ++w) {
      uncovered[w] &= ~catalog.edge_masks[static_cast<std::size_t>(best_id)][w];
    }
  }
  return chosen;
}

std::vector<GeodesicPath> pick_paths(const GeodesicCatalog& catalog, const std::vector<int>& ids) {
  std::vector<GeodesicPath> paths;
  paths.reserve(ids.size());
  for (const int id : ids) {
    paths.push_back(catalog.geodesics[static_cast<std::size_t>(id)]);
  }
  return paths;
}

void require_complete_covering(const Graph& g, const GeodesicCatalog& catalog) {
  for (int e = 0; e < g.edge_count(); ++e) {
    if (catalog.covering[static_cast<std::size_t>(e)].empty()) {
      throw std::invalid_argument("catalog does not cover edge " + to_string(g.edge(e)));
    }
  }
}

}  // namespace

SolveResult gcover_exact(const Graph& g, const DistanceMatrix& d, const GeodesicCatalog& catalog,
                         std::uint64_t budget) {
  require_complete_covering(g, catalog);
  const int m = g.edge_count();

  CoverSearch search;
  search.catalog = &catalog;
  search.edge_count = m;
  search.budget = budget;

  const std::vector<int> greedy = greedy_cover(catalog, m);
  search.best = static_cast<long long>(greedy.size());
  search.best_choice = greedy;

  std::vector<std::uint64_t> uncovered(static_cast<std::size_t>(catalog.mask_words), 0);
  for (int e = 0; e < m; ++e) {
    uncovered[static_cast<std::size_t>(e) / 64] |= 1ull << (static_cast<std::size_t>(e) % 64);
  }
  const long long root_bound = ceil_div(m, std::max(1, search.max_cover(uncovered)));
  search.run(uncovered, 0);

  SolveResult result;
  result.optimum = search.best;
  result.witness = pick_paths(catalog, search.best_choice);
  result.nodes_explored = search.nodes;
  result.bound_used = "ceil(uncovered/max-cover) against greedy incumbent";
  result.method = "exact-bb";
  result.optimal = !search.aborted;
  result.lower_bound = search.aborted ? root_bound : search.best;
  result.upper_bound = search.best;
  if (!is_geodesic_cover(g, d, std::get<std::vector<GeodesicPath>>(result.witness))) {
    throw std::logic_error("cover witness failed re-verification");
  }
  return result;
}

namespace {

struct PartitionSearch {
  const GeodesicCatalog* catalog;
  int edge_count;
  int diameter;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool aborted = false;
  long long best = 0;
  std::vector<int> best_choice;
  std::vector<int> choice;

  // The uncovered edge with the fewest still-usable geodesics through it.
  int pick_branch_edge(const std::vector<std::uint64_t>& uncovered,
                       std::vector<int>& candidates) const {
    int chosen = -1;
    std::size_t fewest = 0;
    for (int e = 0; e < edge_count; ++e) {
      if (!(uncovered[static_cast<std::size_t>(e) / 64] &
            (1ull << (static_cast<std::size_t>(e) % 64)))) {
        continue;
      }
      std::size_t options = 0;
      for (const int id : catalog->covering[static_cast<std::size_t>(e)]) {
        if (mask_subset(catalog->edge_masks[static_cast<std::size_t>(id)], uncovered)) {
          ++options;
        }
      }
      if (chosen < 0 || options < fewest) {
        chosen = e;
        fewest = options;
      }
    }
    candidates.clear();
    for (const int id : catalog->covering[static_cast<std::size_t>(chosen)]) {
      if (mask_subset(catalog->edge_masks[static_cast<std::size_t>(id)], uncovered)) {
        candidates.push_back(id);
      }
    }
    return chosen;
  }

  void run(std::vector<std::uint64_t>& uncovered, long long count) {
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    if (mask_none(uncovered)) {
      if (count < best) {
        best = count;
        best_choice = choice;
      }
      return;
    }
    if (count + ceil_div(mask_popcount(uncovered), diameter) >= best) {
      return;
    }
    std::vector<int> candidates;
    pick_branch_edge(uncovered, candidates);
    std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      return mask_popcount(catalog->edge_masks[static_cast<std::size_t>(a)]) >
             mask_popcount(catalog->edge_masks[static_cast<std::size_t>(b)]);
    });
    for (const int id : candidates) {
      const auto& mask = catalog->edge_masks[static_cast<std::size_t>(id)];
      std::vector<std::uint64_t> next(uncovered);
      for (std::size_t w = 0; w < next.size(); ++w) {
        next[w] &= ~mask[w];
      }
      choice.push_back(id);
      run(next, count + 1);
      choice.pop_back();
      if (aborted) {
        return;
      }
    }
  }
};

std::vector<int> greedy_partition(const GeodesicCatalog& catalog, int edge_count) {
  std::vector<std::uint64_t> uncovered(static_cast<std::size_t>((edge_count + 63) / 64), 0);
  for (int e = 0; e < edge_count; ++e) {
    uncovered[static_cast<std::size_t>(e) / 64] |= 1ull << (static_cast<std::size_t>(e) % 64);
  }
  std::vector<int> chosen;
  for (int e = 0; e < edge_count; ++e) {
    if (!(uncovered[static_cast<std::size_t>(e) / 64] &
          (1ull << (static_cast<std::size_t>(e) % 64)))) {
      continue;
    }
    int best_id = -1;
    int best_len = -1;
    for (const int id : catalog.covering[static_cast<std::size_t>(e)]) {
      const auto& mask = catalog.edge_masks[static_cast<std::size_t>(id)];
      if (mask_subset(mask, uncovered)) {
        const int len = mask_popcount(mask);
        if (len > best_len) {
          best_len = len;
          best_id = id;
        }
      }
    }
    chosen.push_back(best_id);
    for (std::size_t w = 0; w < uncovered.size(); ++w) {
      uncovered[w] &= ~catalog.edge_masks[static_cast<std::size_t>(best_id)][w];
    }
  }
  return chosen;
}

}  // namespace

SolveResult gpart_exact(const Graph& g, const DistanceMatrix& d, const GeodesicCatalog& catalog,
                        std::uint64_t budget) {
  if (catalog.maximal_only) {
    throw std::invalid_argument("partition search needs the full catalog, not maximal-only");
  }
  require_complete_covering(g, catalog);
  const int m = g.edge_count();

  PartitionSearch search;
  search.catalog = &catalog;
  search.edge_count = m;
  search.diameter = d.diameter();
  search.budget = budget;

  const std::vector<int> greedy = greedy_partition(catalog, m);
  search.best = static_cast<long long>(greedy.size());
  search.best_choice = greedy;

  std::vector<std::uint64_t> uncovered(static_cast<std::size_t>(catalog.mask_words), 0);
  for (int e = 0; e < m; ++e) {
    uncovered[static_cast<std::size_t>(e) / 64] |= 1ull << (static_cast<std::size_t>(e) % 64);
  }
  const long long root_bound = ceil_div(m, d.diameter());
  search.run(uncovered, 0);

  SolveResult result;
  result.optimum = search.best;
  result.witness = pick_paths(catalog, search.best_choice);
  result.nodes_explored = search.nodes;
  result.bound_used = "ceil(uncovered/diameter) against greedy incumbent";
  result.method = "exact-cover";
  result.optimal = !search.aborted;
  result.lower_bound = search.aborted ? root_bound : search.best;
  result.upper_bound = search.best;
  if (!is_geodesic_partition(g, d, std::get<std::vector<GeodesicPath>>(result.witness))) {
    throw std::logic_error("partition witness failed re-verification");
  }
  return result;
}

SolveResult kgp_exact(const Graph& g, int k, std::uint64_t budget) {
  if (k < 3) {
    throw std::invalid_argument("edge k-general position requires k >= 3");
  }
  const DistanceMatrix d = all_pairs_distances(g);
  const GeodesicCatalog catalog =
      enumerate_geodesics(g, d, {.maximal_only = true, .budget = budget});
  const int m = g.edge_count();

  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return catalog.covering[static_cast<std::size_t>(a)].size() >
           catalog.covering[static_cast<std::size_t>(b)].size();
  });

  std::vector<int> counts(catalog.geodesics.size(), 0);
  const auto can_take = [&](int e) {
    for (const int id : catalog.covering[static_cast<std::size_t>(e)]) {
      if (counts[static_cast<std::size_t>(id)] > k - 2) {
        return false;
      }
    }
    return true;
  };
  const auto apply = [&](int e, int delta) {
    for (const int id : catalog.covering[static_cast<std::size_t>(e)]) {
      counts[static_cast<std::size_t>(id)] += delta;
    }
  };

  // Greedy incumbent in branch order.
  std::vector<char> greedy_sel(static_cast<std::size_t>(m), 0);
  long long greedy_size = 0;
  for (const int e : order) {
    if (can_take(e)) {
      apply(e, 1);
      greedy_sel[static_cast<std::size_t>(e)] = 1;
      ++greedy_size;
    }
  }
  for (int e = 0; e < m; ++e) {
    if (greedy_sel[static_cast<std::size_t>(e)]) {
      apply(e, -1);
    }
  }

  const long long global_ub = std::min<long long>(
      m, static_cast<long long>(k - 1) *
             static_cast<long long>(greedy_cover(catalog, m).size()));

  long long best = greedy_size;
  std::vector<char> best_sel = greedy_sel;
  std::vector<char> selected(static_cast<std::size_t>(m), 0);
  std::uint64_t nodes = 0;
  bool aborted = false;

  auto dfs = [&](auto&& self, int pos, long long cur) -> void {
    if (aborted || best == global_ub) {
      return;
    }
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    if (pos == m) {
      if (cur > best) {
        best = cur;
        best_sel = selected;
      }
      return;
    }
    if (cur + (m - pos) <= best) {
      return;
    }
    const int e = order[static_cast<std::size_t>(pos)];
    if (can_take(e)) {
      apply(e, 1);
      selected[static_cast<std::size_t>(e)] = 1;
      self(self, pos + 1, cur + 1);
      selected[static_cast<std::size_t>(e)] = 0;
      apply(e, -1);
    }
    self(self, pos + 1, cur);
  };
  dfs(dfs, 0, 0);

  std::vector<Edge> chosen;
  for (int e = 0; e < m; ++e) {
    if (best_sel[static_cast<std::size_t>(e)]) {
      chosen.push_back(g.edge(e));
    }
  }
  const EdgeSet witness(chosen);
  if (!is_edge_kgp(g, d, witness, k)) {
    throw std::logic_error("k-gp witness failed re-verification");
  }

  SolveResult result;
  result.optimum = best;
  result.witness = witness;
  result.nodes_explored = nodes;
  result.bound_used = "remaining-edge count and (k-1)*greedy-cover cap";
  result.method = "exact-bb";
  result.optimal = !aborted;
  result.lower_bound = best;
  result.upper_bound = aborted ? global_ub : best;
  return result;
}

DualityReport duality_certify(const Graph& g, int k, const EdgeSet& kgp_witness,
                              const std::vector<GeodesicPath>& partition) {
  const DistanceMatrix d = all_pairs_distances(g);
  if (!is_edge_kgp(g, d, kgp_witness, k)) {
    throw std::invalid_argument("k-gp witness failed verification");
  }
  if (!is_geodesic_partition(g, d, partition)) {
    throw std::invalid_argument("partition witness failed verification");
  }
  return duality_certify(g, k, static_cast<long long>(kgp_witness.size()), partition);
}

DualityReport duality_certify(const Graph& g, int k, long long kgp_lower,
                              const std::vector<GeodesicPath>& partition) {
  if (k < 3) {
    throw std::invalid_argument("edge k-general position requires k >= 3");
  }
  const DistanceMatrix d = all_pairs_distances(g);
  if (!is_geodesic_partition(g, d, partition)) {
    throw std::invalid_argument("partition witness failed verification");
  }
  DualityReport report;
  report.k = k;
  report.kgp_lower = kgp_lower;
  report.partition_size = static_cast<long long>(partition.size());
  report.chain_holds = kgp_lower <= (k - 1) * report.partition_size;
  if (!report.chain_holds) {
    throw std::logic_error("duality chain violated: " + std::to_string(kgp_lower) + " > (" +
                           std::to_string(k) + "-1) * " +
                           std::to_string(report.partition_size));
  }
  report.exact = kgp_lower == (k - 1) * report.partition_size;
  if (report.exact) {
    report.kgp_value = kgp_lower;
    report.gcover_value = report.partition_size;
    report.gpart_value = report.partition_size;
  }
  return report;
}

CountingBoundReport cover_counting_certify(const Graph& g, const DistanceMatrix& d,
                                           const std::vector<GeodesicPath>& partition) {
  if (!is_geodesic_partition(g, d, partition)) {
    throw std::invalid_argument("partition witness failed verification");
  }
  CountingBoundReport report;
  report.counting_lower = ceil_div(g.edge_count(), d.diameter());
  report.partition_size = static_cast<long long>(partition.size());
  report.exact = report.counting_lower == report.partition_size;
  return report;
}

}  // namespace geopos
