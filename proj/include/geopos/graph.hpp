#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace geopos {

/// Default cap for exhaustive enumerations and search nodes.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Thrown when an exhaustive operation would exceed its configured budget.
/// Callers get a hard error, never a silently truncated result.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t reached)
      : std::runtime_error(what), reached_(reached) {}

  std::uint64_t reached() const noexcept { return reached_; }

 private:
  std::uint64_t reached_;
};

/// Undirected edge stored canonically with u < v.
struct Edge {
  int u = -1;
  int v = -1;

  Edge() = default;
  Edge(int a, int b);

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Metadata attached by family generators. Metric algorithms never read it.
struct FamilyTag {
  std::string kind;
  std::vector<int> params;
};

struct Neighbor {
  int to;
  int edge;  // index into Graph::edges()
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }
  std::span<const Neighbor> neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const { return find_edge(u, v) >= 0; }

  /// Index of (u,v) in edges(), or -1 when absent.
  int find_edge(int u, int v) const;

  /// Index of e in edges(); throws std::invalid_argument when e is not an edge.
  int edge_index(const Edge& e) const;

  const std::optional<FamilyTag>& family() const noexcept { return family_; }
  void set_family(FamilyTag tag) { family_ = std::move(tag); }
  const std::vector<std::string>& vertex_labels() const noexcept { return labels_; }
  void set_vertex_labels(std::vector<std::string> labels);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;             // sorted canonical
  std::vector<Neighbor> adjacency_;     // flattened, grouped by vertex
  std::vector<int> adjacency_offsets_;  // n+1 offsets into adjacency_
  std::optional<FamilyTag> family_;
  std::vector<std::string> labels_;
};

/// Sorted set of canonical edges.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<Edge> edges);

  bool contains(const Edge& e) const;
  void insert(const Edge& e);
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::vector<Edge>::const_iterator begin() const { return edges_.begin(); }
  std::vector<Edge>::const_iterator end() const { return edges_.end(); }
  bool is_subset_of(const EdgeSet& other) const;

  /// Throws std::invalid_argument when some member is not an edge of g.
  void require_subset_of(const Graph& g) const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<Edge> edges_;  // sorted unique
};

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
// The reader canonicalizes and rejects loops and duplicate edges.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

// Edge-set text format: one "u v" pair per line; '#' starts a comment.
// Every pair must be an edge of g.
EdgeSet read_edge_set(std::istream& in, const Graph& g);
void write_edge_set(const EdgeSet& s, std::ostream& out);

}  // namespace geopos
