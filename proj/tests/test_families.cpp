#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <sstream>

#include "geopos/checker.hpp"
#include "geopos/families.hpp"
#include "geopos/metric.hpp"

using namespace geopos;

TEST_CASE("spec grammar round trips") {
  for (const std::string text : {"path:5", "cycle:8", "hypercube:4", "torus:8x8", "butterfly:3",
                                 "benes:3", "prod:cycle:4,cycle:4",
                                 "prod:cycle:4,prod:cycle:4,cycle:4"}) {
    CHECK(FamilySpec::parse(text).to_string() == text);
  }
}

TEST_CASE("spec grammar rejects malformed input") {
  for (const std::string text : {"", "cycle", "cycle:x", "torus:8", "torus:8y8", "wheel:5",
                                 "prod:cycle:4", "path:1", "cycle:2", "hypercube:0", "benes:1",
                                 "torus:2x4", "prod:prod:cycle:4,cycle:4,cycle:4"}) {
    CHECK_THROWS_AS(generate(text), std::invalid_argument);
  }
}

TEST_CASE("generators match closed-form counts") {
  for (int n = 2; n <= 64; n += 7) {
    const Graph p = generate("path:" + std::to_string(n));
    CHECK(p.vertex_count() == n);
    CHECK(p.edge_count() == n - 1);
  }
  for (int n = 3; n <= 64; n += 7) {
    const Graph c = generate("cycle:" + std::to_string(n));
    CHECK(c.vertex_count() == n);
    CHECK(c.edge_count() == n);
  }
  for (int d = 1; d <= 10; ++d) {
    const Graph q = generate("hypercube:" + std::to_string(d));
    CHECK(q.vertex_count() == 1 << d);
    CHECK(q.edge_count() == d * (1 << (d - 1)));
  }
  for (const auto& [n, m] : std::vector<std::pair<int, int>>{{3, 3}, {4, 4}, {8, 8}, {16, 16},
                                                             {6, 8}}) {
    const Graph t = generate("torus:" + std::to_string(n) + "x" + std::to_string(m));
    CHECK(t.vertex_count() == n * m);
    CHECK(t.edge_count() == 2 * n * m);
  }
  for (int r = 2; r <= 4; ++r) {
    const Graph bf = generate("butterfly:" + std::to_string(r));
    CHECK(bf.vertex_count() == (r + 1) * (1 << r));
    CHECK(bf.edge_count() == r * (1 << (r + 1)));
    const Graph bn = generate("benes:" + std::to_string(r));
    CHECK(bn.vertex_count() == (2 * r + 1) * (1 << r));
    CHECK(bn.edge_count() == 2 * r * (1 << (r + 1)));
  }
}

TEST_CASE("generation is deterministic") {
  for (const std::string spec : {"torus:6x6", "benes:3", "prod:path:3,cycle:5"}) {
    std::ostringstream a;
    std::ostringstream b;
    write_edge_list(generate(spec), a);
    write_edge_list(generate(spec), b);
    CHECK(a.str() == b.str());
  }
}

TEST_CASE("hypercube adjacency flips exactly one bit") {
  const Graph q4 = generate("hypercube:4");
  for (const Edge& e : q4.edges()) {
    const int diff = e.u ^ e.v;
    CHECK((diff & (diff - 1)) == 0);
  }
}

TEST_CASE("product of two 4-cycles is the 4-cube") {
  const Graph prod = generate("prod:cycle:4,cycle:4");
  const Graph q4 = generate("hypercube:4");
  REQUIRE(prod.vertex_count() == q4.vertex_count());
  REQUIRE(prod.edge_count() == q4.edge_count());
  // Gray-code each cyclic coordinate: 0,1,2,3 -> 00,01,11,10.
  const int gray[4] = {0, 1, 3, 2};
  std::vector<Edge> mapped;
  for (const Edge& e : prod.edges()) {
    const auto phi = [&](int v) { return (gray[v / 4] << 2) | gray[v % 4]; };
    mapped.emplace_back(phi(e.u), phi(e.v));
  }
  std::sort(mapped.begin(), mapped.end());
  CHECK(mapped == q4.edges());
  CHECK(prod.family().has_value());
  CHECK(prod.family()->kind == "torus");
}

TEST_CASE("torus coordinates are row-major") {
  const Graph t = generate("torus:4x6");
  const TorusView tv = torus_view(t);
  CHECK(tv.vertex(2, 5) == 2 * 6 + 5);
  CHECK(tv.vertex(-1, 6) == tv.vertex(3, 0));
  CHECK(tv.first_coord(17) == 2);
  CHECK(tv.second_coord(17) == 5);
  int horizontal = 0;
  for (const Edge& e : t.edges()) {
    horizontal += tv.is_horizontal(e) ? 1 : 0;
  }
  CHECK(horizontal == 24);
  CHECK(t.edge_count() - horizontal == 24);
  CHECK_THROWS_AS(torus_view(generate("cycle:5")), std::invalid_argument);
}

TEST_CASE("torus parallel class is the translate class") {
  const Graph t = generate("torus:8x8");
  const TorusView tv = torus_view(t);
  const DistanceMatrix d = all_pairs_distances(t);
  const Edge seed(tv.vertex(0, 0), tv.vertex(1, 0));
  const EdgeSet cls = torus_parallel(t, d, seed);
  CHECK(cls.size() == 8);
  CHECK(cls.contains(seed));
  for (const Edge& f : cls) {
    CHECK(tv.is_horizontal(f));
    CHECK(std::minmax(tv.first_coord(f.u), tv.first_coord(f.v)) == std::minmax(0, 1));
  }
}

TEST_CASE("four-distance relation matches translates plus the antipodal columns") {
  // On an even torus the antipodal projection realizes the same distance
  // pattern as a translate, so the relation alone yields both families.
  for (const std::string& spec : {std::string("torus:6x6"), std::string("torus:8x8")}) {
    const Graph t = generate(spec);
    const TorusView tv = torus_view(t);
    const DistanceMatrix d = all_pairs_distances(t);
    for (const Edge& e : t.edges()) {
      const EdgeSet matches = torus_parallel_predicate_matches(t, d, e);
      EdgeSet expected = torus_parallel(t, d, e);
      const int half = tv.n / 2;
      Edge antipodal = tv.is_horizontal(e)
                           ? Edge(tv.vertex(tv.first_coord(e.u) + half, tv.second_coord(e.u)),
                                  tv.vertex(tv.first_coord(e.v) + half, tv.second_coord(e.v)))
                           : Edge(tv.vertex(tv.first_coord(e.u), tv.second_coord(e.u) + half),
                                  tv.vertex(tv.first_coord(e.v), tv.second_coord(e.v) + half));
      for (const Edge& f : torus_parallel(t, d, antipodal)) {
        expected.insert(f);
      }
      EdgeSet expected_without_self;
      for (const Edge& f : expected) {
        if (f != e) {
          expected_without_self.insert(f);
        }
      }
      REQUIRE(matches == expected_without_self);
    }
  }
}

TEST_CASE("perpendicular edges are never parallel") {
  const Graph t = generate("torus:8x8");
  const TorusView tv = torus_view(t);
  const DistanceMatrix d = all_pairs_distances(t);
  for (const Edge& e : t.edges()) {
    for (const Edge& f : t.edges()) {
      if (tv.is_horizontal(e) != tv.is_horizontal(f)) {
        CHECK_FALSE(torus_parallel_predicate(d, e, f));
      }
    }
  }
}

TEST_CASE("no two parallel edges lie on a common geodesic") {
  for (const std::string& spec : {std::string("torus:6x6"), std::string("torus:8x8")}) {
    const Graph t = generate(spec);
    const DistanceMatrix d = all_pairs_distances(t);
    EdgeSet seen;
    for (const Edge& e : t.edges()) {
      if (seen.contains(e)) {
        continue;
      }
      const EdgeSet cls = torus_parallel(t, d, e);
      for (const Edge& f : cls) {
        seen.insert(f);
      }
      CHECK(max_marked_on_common_geodesic(t, d, cls).max_marked == 1);
    }
  }
}

TEST_CASE("diagonal vertices") {
  const Graph t4 = generate("torus:4x4");
  CHECK(torus_diagonal_vertices(t4) == std::vector<int>{0, 5, 10, 15});
  CHECK(torus_diagonal_vertices(generate("torus:8x8")).size() == 8);
  CHECK_THROWS_AS(torus_diagonal_vertices(generate("torus:6x8")), std::invalid_argument);
  CHECK_THROWS_AS(torus_diagonal_vertices(generate("torus:5x5")), std::invalid_argument);
}

TEST_CASE("benes views, levels and degrees") {
  const Graph bn = generate("benes:3");
  const BenesView bv = benes_view(bn);
  CHECK(bv.r == 3);
  CHECK(bv.rows == 8);

  EdgeSet all_levels;
  for (int level = 1; level <= 6; ++level) {
    const EdgeSet edges = benes_level_edges(bn, level);
    CHECK(edges.size() == 16);
    int straight = 0;
    for (const Edge& e : edges) {
      CHECK_FALSE(all_levels.contains(e));
      all_levels.insert(e);
      straight += bv.is_straight(e) ? 1 : 0;
    }
    CHECK(straight == 8);
  }
  CHECK(static_cast<int>(all_levels.size()) == bn.edge_count());

  const std::vector<int> level0 = benes_level_vertices(bn, 0);
  CHECK(level0.size() == 8);
  for (const int v : level0) {
    CHECK(bn.degree(v) == 2);
  }
  for (const int v : benes_level_vertices(bn, 6)) {
    CHECK(bn.degree(v) == 2);
  }
  for (const int v : benes_level_vertices(bn, 3)) {
    CHECK(bn.degree(v) == 4);
  }
  CHECK_THROWS_AS(benes_level_edges(bn, 0), std::invalid_argument);
  CHECK_THROWS_AS(benes_level_edges(bn, 7), std::invalid_argument);
  CHECK_THROWS_AS(benes_view(generate("butterfly:3")), std::invalid_argument);
}

TEST_CASE("benes mirror relabeling is an automorphism") {
  for (int r = 2; r <= 4; ++r) {
    const Graph bn = generate("benes:" + std::to_string(r));
    const BenesView bv = benes_view(bn);
    std::vector<Edge> mirrored;
    for (const Edge& e : bn.edges()) {
      const auto mirror = [&](int v) {
        return bv.vertex(bv.bits(v), 2 * r - bv.level(v));
      };
      mirrored.emplace_back(mirror(e.u), mirror(e.v));
    }
    std::sort(mirrored.begin(), mirrored.end());
    CHECK(mirrored == bn.edges());
  }
}

TEST_CASE("benes diameter and level-0 distances") {
  const Graph bn = generate("benes:3");
  const DistanceMatrix d = all_pairs_distances(bn);
  const BenesView bv = benes_view(bn);
  CHECK(d.diameter() == 6);
  // Opposite rows at level 0 are at full distance.
  CHECK(d(bv.vertex(0, 0), bv.vertex(7, 0)) == 6);
}
