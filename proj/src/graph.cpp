#include "geopos/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace geopos {

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) {
    throw std::invalid_argument("loop edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  if (a < 0 || b < 0) {
    throw std::invalid_argument("negative vertex id in edge (" + std::to_string(a) + "," +
                                std::to_string(b) + ")");
  }
}

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ <= 0) {
    throw std::invalid_argument("graph needs at least one vertex");
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.v >= n_) {
      throw std::invalid_argument("edge " + to_string(e) + " exceeds vertex count " +
                                  std::to_string(n_));
    }
    if (i > 0 && edges_[i - 1] == e) {
      throw std::invalid_argument("duplicate edge " + to_string(e));
    }
  }

  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (const Edge& e : edges_) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  adjacency_offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (int v = 0; v < n_; ++v) {
    adjacency_offsets_[static_cast<std::size_t>(v) + 1] =
        adjacency_offsets_[static_cast<std::size_t>(v)] + deg[static_cast<std::size_t>(v)];
  }
  adjacency_.resize(2 * edges_.size());
  std::vector<int> cursor(adjacency_offsets_.begin(), adjacency_offsets_.end() - 1);
  for (int idx = 0; idx < edge_count(); ++idx) {
    const Edge& e = edges_[static_cast<std::size_t>(idx)];
    adjacency_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.u)]++)] = {e.v, idx};
    adjacency_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.v)]++)] = {e.u, idx};
  }
  // Edges are sorted, so neighbor lists come out ordered by vertex id.
}

std::span<const Neighbor> Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  }
  const auto begin = static_cast<std::size_t>(adjacency_offsets_[static_cast<std::size_t>(v)]);
  const auto end = static_cast<std::size_t>(adjacency_offsets_[static_cast<std::size_t>(v) + 1]);
  return {adjacency_.data() + begin, end - begin};
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

int Graph::find_edge(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) {
    return -1;
  }
  const Edge probe(u, v);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
  if (it != edges_.end() && *it == probe) {
    return static_cast<int>(it - edges_.begin());
  }
  return -1;
}

int Graph::edge_index(const Edge& e) const {
  const int idx = find_edge(e.u, e.v);
  if (idx < 0) {
    throw std::invalid_argument(to_string(e) + " is not an edge of the graph");
  }
  return idx;
}

void Graph::set_vertex_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != n_) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

void EdgeSet::insert(const Edge& e) {
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) {
    edges_.insert(it, e);
  }
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  return std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(), edges_.end());
}

void EdgeSet::require_subset_of(const Graph& g) const {
  for (const Edge& e : edges_) {
    g.edge_index(e);
  }
}

Graph read_edge_list(std::istream& in) {
  int n = 0;
  int m = 0;
  if (!(in >> n >> m)) {
    throw std::invalid_argument("edge list: expected header 'n m'");
  }
  if (n <= 0 || m < 0) {
    throw std::invalid_argument("edge list: invalid header counts");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    int a = 0;
    int b = 0;
    if (!(in >> a >> b)) {
      throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(i));
    }
    edges.emplace_back(a, b);
  }
  return Graph(n, std::move(edges));
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << '\n';
  }
}

EdgeSet read_edge_set(std::istream& in, const Graph& g) {
  EdgeSet result;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    int a = 0;
    int b = 0;
    if (!(ls >> a)) {
      continue;  // blank or comment-only line
    }
    if (!(ls >> b)) {
      throw std::invalid_argument("edge set line " + std::to_string(line_no) +
                                  ": expected 'u v'");
    }
    const Edge e(a, b);
    g.edge_index(e);
    result.insert(e);
  }
  return result;
}

void write_edge_set(const EdgeSet& s, std::ostream& out) {
  for (const Edge& e : s) {
    out << e.u << ' ' << e.v << '\n';
  }
}

}  // namespace geopos
