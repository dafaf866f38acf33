#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "geopos/graph.hpp"
#include "geopos/metric.hpp"

namespace geopos {

/// A graph-family descriptor. String grammar:
///   path:n  cycle:n  hypercube:d  torus:nxm  butterfly:r  benes:r
///   prod:<simple-spec>,<spec>
/// The left operand of prod must be a simple (non-product) spec; nesting is
/// therefore right-associative: prod:cycle:4,prod:cycle:4,cycle:4.
struct FamilySpec {
  enum class Kind { Path, Cycle, Hypercube, Torus, Butterfly, Benes, Product };

  Kind kind = Kind::Path;
  int a = 0;
  int b = 0;
  std::unique_ptr<FamilySpec> left;
  std::unique_ptr<FamilySpec> right;

  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
};

/// Deterministic labeled generator: the same spec always yields the same
/// vertex order and edge list.
Graph generate(const FamilySpec& spec);
Graph generate(std::string_view spec);

/// Coordinate accessors for a torus-tagged graph: vertex (a,b) has id a*m+b.
/// Horizontal edges change the first coordinate, vertical edges the second.
struct TorusView {
  int n = 0;
  int m = 0;

  int vertex(int a, int b) const;
  int first_coord(int id) const { return id / m; }
  int second_coord(int id) const { return id % m; }
  bool is_horizontal(const Edge& e) const { return first_coord(e.u) != first_coord(e.v); }
};

/// Throws std::invalid_argument when g was not generated as a torus.
TorusView torus_view(const Graph& g);

/// The parallel class of e: e together with all translates of e across the
/// other factor (same factor-edge projection). Each translate is cross-checked
/// against the four-distance parallelism relation.
EdgeSet torus_parallel(const Graph& g, const DistanceMatrix& d, const Edge& e);

/// Labeling-independent evaluation of the four-distance relation
///   d(x1,y2) = d(x2,y1) = d(x1,y1)+1 = d(x2,y2)+1
/// over both endpoint orderings of f. On even tori this matches the translate
/// class of e and, additionally, the translates of the edge antipodal to e's
/// projection, which realize the identical distance pattern.
bool torus_parallel_predicate(const DistanceMatrix& d, const Edge& e, const Edge& f);

/// All f != e satisfying torus_parallel_predicate.
EdgeSet torus_parallel_predicate_matches(const Graph& g, const DistanceMatrix& d, const Edge& e);

/// Vertices (i,i) of a square even torus C_2r x C_2r.
std::vector<int> torus_diagonal_vertices(const Graph& g);

/// Coordinate accessors for a Benes-tagged graph BN(r): vertex [s,i] has id
/// i*2^r + s, levels i = 0..2r. Level i edges join levels i-1 and i; the
/// crossed bit is r-i (counted from the most significant of the r bits) for
/// i <= r and mirrored for i > r.
struct BenesView {
  int r = 0;
  int rows = 0;  // 2^r

  int levels() const { return 2 * r + 1; }
  int vertex(std::uint32_t bits, int level) const;
  int level(int id) const { return id / rows; }
  std::uint32_t bits(int id) const { return static_cast<std::uint32_t>(id % rows); }
  int edge_level(const Edge& e) const;
  bool is_straight(const Edge& e) const { return bits(e.u) == bits(e.v); }
};

/// Throws std::invalid_argument when g was not generated as a Benes network.
BenesView benes_view(const Graph& g);

/// The 2^{r+1} edges between levels level-1 and level, level in 1..2r.
EdgeSet benes_level_edges(const Graph& g, int level);

/// The 2^r vertices of one level, level in 0..2r.
std::vector<int> benes_level_vertices(const Graph& g, int level);

}  // namespace geopos
