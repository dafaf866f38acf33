#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "geopos/checker.hpp"
#include "geopos/families.hpp"
#include "geopos/solvers.hpp"
#include "geopos/theta.hpp"
#include "test_support.hpp"

using namespace geopos;

TEST_CASE("relation basics on worked instances") {
  const Graph q3 = generate("hypercube:3");
  const DistanceMatrix dq = all_pairs_distances(q3);
  const Edge e(0, 1);  // 000-001
  CHECK(theta_related(q3, dq, e, e));  // reflexive: 0 + 0 != 1 + 1
  CHECK(theta_related(q3, dq, e, Edge(6, 7)));
  CHECK_FALSE(theta_related(q3, dq, e, Edge(0, 2)));

  const Graph c6 = generate("cycle:6");
  const DistanceMatrix dc = all_pairs_distances(c6);
  CHECK(theta_related(c6, dc, Edge(0, 1), Edge(3, 4)));  // antipodal
  CHECK_FALSE(theta_related(c6, dc, Edge(0, 1), Edge(1, 2)));
}

TEST_CASE("relation is symmetric and labeling-independent") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testsupport::random_connected(rng, 4, 8, 14);
    const DistanceMatrix d = all_pairs_distances(g);
    for (const Edge& e : g.edges()) {
      CHECK(theta_related(g, d, e, e));
      for (const Edge& f : g.edges()) {
        CHECK(theta_related(g, d, e, f) == theta_related(g, d, f, e));
        // Swapping one edge's endpoints swaps the two sides of the test.
        const bool swapped =
            d(e.u, f.v) + d(e.v, f.u) != d(e.u, f.u) + d(e.v, f.v);
        CHECK(theta_related(g, d, e, f) == swapped);
      }
    }
  }
}

TEST_CASE("classes of hypercubes, even cycles and a triangle") {
  for (int d = 1; d <= 6; ++d) {
    const ThetaClasses classes = theta_classes(generate("hypercube:" + std::to_string(d)));
    REQUIRE(static_cast<int>(classes.classes.size()) == d);
    for (const EdgeSet& cls : classes.classes) {
      CHECK(static_cast<long long>(cls.size()) == (1LL << (d - 1)));
    }
  }
  for (const int n : {6, 8, 12}) {
    const ThetaClasses classes = theta_classes(generate("cycle:" + std::to_string(n)));
    REQUIRE(static_cast<int>(classes.classes.size()) == n / 2);
    for (const EdgeSet& cls : classes.classes) {
      CHECK(cls.size() == 2);
    }
  }
  const ThetaClasses triangle = theta_classes(generate("cycle:3"));
  REQUIRE(triangle.classes.size() == 1);
  CHECK(triangle.classes[0].size() == 3);
}

TEST_CASE("classes partition the edge set") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = testsupport::random_connected(rng, 4, 9, 16);
    const ThetaClasses classes = theta_classes(g);
    std::size_t total = 0;
    EdgeSet seen;
    for (const EdgeSet& cls : classes.classes) {
      CHECK_FALSE(cls.empty());
      total += cls.size();
      for (const Edge& e : cls) {
        CHECK_FALSE(seen.contains(e));
        seen.insert(e);
      }
    }
    CHECK(total == static_cast<std::size_t>(g.edge_count()));
    for (int i = 0; i < g.edge_count(); ++i) {
      CHECK(classes.classes[static_cast<std::size_t>(
                classes.class_of_edge[static_cast<std::size_t>(i)])]
                .contains(g.edge(i)));
    }
  }
}

TEST_CASE("partial cube recognition") {
  for (int d = 1; d <= 6; ++d) {
    CHECK(is_partial_cube(generate("hypercube:" + std::to_string(d))));
  }
  for (const int n : {4, 6, 8, 10, 12}) {
    CHECK(is_partial_cube(generate("cycle:" + std::to_string(n))));
  }
  CHECK(is_partial_cube(generate("torus:4x4")));
  CHECK(is_partial_cube(generate("path:7")));

  CHECK_FALSE(is_partial_cube(generate("cycle:5")));
  CHECK_FALSE(is_partial_cube(testsupport::complete_bipartite(2, 3)));
  CHECK_FALSE(is_partial_cube(testsupport::complete_graph(4)));
}

TEST_CASE("K_{2,3} has an intransitive relation witness") {
  const Graph g = testsupport::complete_bipartite(2, 3);
  const DistanceMatrix d = all_pairs_distances(g);
  // Edges (0,2) and (1,3) are related, (1,3) and (1,4) are not, yet (0,2)
  // and (1,4) are, so transitivity fails inside one closure class.
  CHECK(theta_related(g, d, Edge(0, 2), Edge(1, 3)));
  CHECK(theta_related(g, d, Edge(0, 2), Edge(1, 4)));
  CHECK_FALSE(theta_related(g, d, Edge(1, 3), Edge(1, 4)));
}

TEST_CASE("no two class members share a geodesic on partial cubes") {
  for (const std::string& spec : {std::string("hypercube:3"), std::string("hypercube:4"),
                                 std::string("cycle:8"), std::string("torus:4x4")}) {
    const Graph g = generate(spec);
    const DistanceMatrix d = all_pairs_distances(g);
    for (const EdgeSet& cls : theta_classes(g, d).classes) {
      CHECK(max_marked_on_common_geodesic(g, d, cls).max_marked == 1);
    }
  }
}

TEST_CASE("class-union construction") {
  const Graph q3 = generate("hypercube:3");
  const EdgeSet s3 = theta_union_kgp(q3, 3);
  CHECK(s3.size() == 8);
  CHECK(is_edge_kgp(q3, s3, 3));

  const Graph q4 = generate("hypercube:4");
  const EdgeSet s5 = theta_union_kgp(q4, 5);
  CHECK(s5.size() == 32);
  CHECK(is_edge_kgp(q4, s5, 5));

  const Graph c6 = generate("cycle:6");
  const EdgeSet sc = theta_union_kgp(c6, 3);
  CHECK(sc.size() == 4);
  CHECK(is_edge_kgp(c6, sc, 3));
  CHECK(kgp_exact(c6, 3).optimum == 4);  // the construction is optimal here

  CHECK_THROWS_AS(theta_union_kgp(c6, 5), std::invalid_argument);  // only 3 classes
  CHECK_THROWS_AS(theta_union_kgp(generate("cycle:5"), 3), std::invalid_argument);
  CHECK_THROWS_AS(theta_union_kgp(testsupport::complete_graph(4), 3), std::invalid_argument);
}

TEST_CASE("class-union construction stays feasible across partial cubes") {
  for (const std::string& spec :
       {std::string("hypercube:3"), std::string("hypercube:4"), std::string("cycle:6"),
        std::string("cycle:10"), std::string("torus:4x4"), std::string("path:6")}) {
    const Graph g = generate(spec);
    const int classes = static_cast<int>(theta_classes(g).classes.size());
    for (int k = 3; k <= std::min(classes + 1, 6); ++k) {
      const EdgeSet s = theta_union_kgp(g, k);
      CHECK(is_edge_kgp(g, s, k));
    }
  }
}

TEST_CASE("deleting one class splits a hypercube into two halves") {
  for (const int d : {3, 4}) {
    const Graph q = generate("hypercube:" + std::to_string(d));
    const ThetaClasses classes = theta_classes(q);
    const EdgeSet& removed = classes.classes[0];
    std::vector<Edge> kept;
    for (const Edge& e : q.edges()) {
      if (!removed.contains(e)) {
        kept.push_back(e);
      }
    }
    const Graph rest(q.vertex_count(), kept);
    // Two components, each a (d-1)-regular graph on half the vertices.
    std::vector<int> comp(static_cast<std::size_t>(rest.vertex_count()), -1);
    int comp_count = 0;
    for (int s = 0; s < rest.vertex_count(); ++s) {
      if (comp[static_cast<std::size_t>(s)] >= 0) {
        continue;
      }
      std::vector<int> queue{s};
      comp[static_cast<std::size_t>(s)] = comp_count;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const Neighbor nb : rest.neighbors(queue[head])) {
          if (comp[static_cast<std::size_t>(nb.to)] < 0) {
            comp[static_cast<std::size_t>(nb.to)] = comp_count;
            queue.push_back(nb.to);
          }
        }
      }
      ++comp_count;
    }
    CHECK(comp_count == 2);
    for (int v = 0; v < rest.vertex_count(); ++v) {
      CHECK(rest.degree(v) == d - 1);
    }
  }
}

TEST_CASE("torus classes agree with the four-distance relation matches") {
  const Graph t = generate("torus:6x6");
  const DistanceMatrix d = all_pairs_distances(t);
  const ThetaClasses classes = theta_classes(t, d);
  for (const Edge& e : t.edges()) {
    EdgeSet related = torus_parallel_predicate_matches(t, d, e);
    related.insert(e);
    const EdgeSet& cls =
        classes.classes[static_cast<std::size_t>(
            classes.class_of_edge[static_cast<std::size_t>(t.edge_index(e))])];
    CHECK(cls == related);
  }
}
