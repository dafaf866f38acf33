#include "geopos/families.hpp"

#include <algorithm>
#include <charconv>

namespace geopos {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("family spec: bad " + std::string(what) + " '" +
                                std::string(text) + "'");
  }
  return value;
}

std::string bit_string(std::uint32_t value, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    if (value & (1u << (width - 1 - i))) {
      s[static_cast<std::size_t>(i)] = '1';
    }
  }
  return s;
}

Graph generate_path(int n) {
  if (n < 2) {
    throw std::invalid_argument("path needs n >= 2");
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i + 1 < n) {
      edges.emplace_back(i, i + 1);
    }
  }
  Graph g(n, std::move(edges));
  g.set_family({"path", {n}});
  g.set_vertex_labels(std::move(labels));
  return g;
}

Graph generate_cycle(int n) {
  if (n < 3) {
    throw std::invalid_argument("cycle needs n >= 3");
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    edges.emplace_back(i, (i + 1) % n);
  }
  Graph g(n, std::move(edges));
  g.set_family({"cycle", {n}});
  g.set_vertex_labels(std::move(labels));
  return g;
}

Graph generate_hypercube(int d) {
  if (d < 1 || d > 20) {
    throw std::invalid_argument("hypercube needs 1 <= d <= 20");
  }
  const int n = 1 << d;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  edges.reserve(static_cast<std::size_t>(d) << (d - 1));
  for (int x = 0; x < n; ++x) {
    labels.push_back(bit_string(static_cast<std::uint32_t>(x), d));
    for (int i = 0; i < d; ++i) {
      const int y = x ^ (1 << i);
      if (y > x) {
        edges.emplace_back(x, y);
      }
    }
  }
  Graph g(n, std::move(edges));
  g.set_family({"hypercube", {d}});
  g.set_vertex_labels(std::move(labels));
  return g;
}

Graph generate_torus(int n, int m) {
  if (n < 3 || m < 3) {
    throw std::invalid_argument("torus needs n, m >= 3");
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  edges.reserve(2 * static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
  const auto id = [m](int a, int b) { return a * m + b; };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < m; ++b) {
      labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
      edges.emplace_back(id(a, b), id((a + 1) % n, b));
      edges.emplace_back(id(a, b), id(a, (b + 1) % m));
    }
  }
  Graph g(n * m, std::move(edges));
  g.set_family({"torus", {n, m}});
  g.set_vertex_labels(std::move(labels));
  return g;
}

Graph generate_product(const Graph& gl, const Graph& gr) {
  const int nl = gl.vertex_count();
  const int nr = gr.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(gl.edge_count()) * static_cast<std::size_t>(nr) +
                static_cast<std::size_t>(gr.edge_count()) * static_cast<std::size_t>(nl));
  for (const Edge& e : gl.edges()) {
    for (int h = 0; h < nr; ++h) {
      edges.emplace_back(e.u * nr + h, e.v * nr + h);
    }
  }
  for (int g = 0; g < nl; ++g) {
    for (const Edge& e : gr.edges()) {
      edges.emplace_back(g * nr + e.u, g * nr + e.v);
    }
  }
  Graph prod(nl * nr, std::move(edges));
  prod.set_family({"product", {}});
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(nl) * static_cast<std::size_t>(nr));
  for (int a = 0; a < nl; ++a) {
    for (int b = 0; b < nr; ++b) {
      labels.push_back("(" + gl.vertex_labels()[static_cast<std::size_t>(a)] + "," +
                       gr.vertex_labels()[static_cast<std::size_t>(b)] + ")");
    }
  }
  prod.set_vertex_labels(std::move(labels));
  return prod;
}

// Integer bit crossed by level-i edges: r-i for the lower half, mirrored for
// the upper half. Row bits are numbered 1..r from the most significant.
int benes_cross_bit(int r, int level) { return level <= r ? r - level : level - r - 1; }

Graph generate_butterfly(int r) {
  if (r < 2 || r > 16) {
    throw std::invalid_argument("butterfly needs 2 <= r <= 16");
  }
  const int rows = 1 << r;
  const int n = (r + 1) * rows;
  const auto id = [rows](std::uint32_t s, int level) {
    return level * rows + static_cast<int>(s);
  };
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int level = 0; level <= r; ++level) {
    for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(rows); ++s) {
      labels.push_back("[" + bit_string(s, r) + "," + std::to_string(level) + "]");
      if (level >= 1) {
        edges.emplace_back(id(s, level - 1), id(s, level));
        edges.emplace_back(id(s ^ (1u << (r - level)), level - 1), id(s, level));
      }
    }
  }
  Graph g(n, std::move(edges));
  g.set_family({"butterfly", {r}});
  g.set_vertex_labels(std::move(labels));
  return g;
}

Graph generate_benes(int r) {
  if (r < 2 || r > 16) {
    throw std::invalid_argument("benes needs 2 <= r <= 16");
  }
  const int rows = 1 << r;
  const int n = (2 * r + 1) * rows;
  const auto id = [rows](std::uint32_t s, int level) {
    return level * rows + static_cast<int>(s);
  };
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int level = 0; level <= 2 * r; ++level) {
    for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(rows); ++s) {
      labels.push_back("[" + bit_string(s, r) + "," + std::to_string(level) + "]");
      if (level >= 1) {
        edges.emplace_back(id(s, level - 1), id(s, level));
        edges.emplace_back(id(s ^ (1u << benes_cross_bit(r, level)), level - 1), id(s, level));
      }
    }
  }
  Graph g(n, std::move(edges));
  g.set_family({"benes", {r}});
  g.set_vertex_labels(std::move(labels));
  return g;
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("family spec: expected '<kind>:<params>' in '" +
                                std::string(text) + "'");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  FamilySpec spec;
  if (kind == "path") {
    spec.kind = Kind::Path;
    spec.a = parse_int(rest, "path length");
  } else if (kind == "cycle") {
    spec.kind = Kind::Cycle;
    spec.a = parse_int(rest, "cycle length");
  } else if (kind == "hypercube") {
    spec.kind = Kind::Hypercube;
    spec.a = parse_int(rest, "dimension");
  } else if (kind == "torus") {
    const auto x = rest.find('x');
    if (x == std::string_view::npos) {
      throw std::invalid_argument("family spec: torus expects 'torus:nxm'");
    }
    spec.kind = Kind::Torus;
    spec.a = parse_int(rest.substr(0, x), "torus dimension");
    spec.b = parse_int(rest.substr(x + 1), "torus dimension");
  } else if (kind == "butterfly") {
    spec.kind = Kind::Butterfly;
    spec.a = parse_int(rest, "dimension");
  } else if (kind == "benes") {
    spec.kind = Kind::Benes;
    spec.a = parse_int(rest, "dimension");
  } else if (kind == "prod") {
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("family spec: prod expects 'prod:<spec>,<spec>'");
    }
    spec.kind = Kind::Product;
    spec.left = std::make_unique<FamilySpec>(parse(rest.substr(0, comma)));
    spec.right = std::make_unique<FamilySpec>(parse(rest.substr(comma + 1)));
  } else {
    throw std::invalid_argument("family spec: unknown kind '" + std::string(kind) + "'");
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  switch (kind) {
    case Kind::Path:
      return "path:" + std::to_string(a);
    case Kind::Cycle:
      return "cycle:" + std::to_string(a);
    case Kind::Hypercube:
      return "hypercube:" + std::to_string(a);
    case Kind::Torus:
      return "torus:" + std::to_string(a) + "x" + std::to_string(b);
    case Kind::Butterfly:
      return "butterfly:" + std::to_string(a);
    case Kind::Benes:
      return "benes:" + std::to_string(a);
    case Kind::Product:
      return "prod:" + left->to_string() + "," + right->to_string();
  }
  return {};
}

Graph generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::Path:
      return generate_path(spec.a);
    case FamilySpec::Kind::Cycle:
      return generate_cycle(spec.a);
    case FamilySpec::Kind::Hypercube:
      return generate_hypercube(spec.a);
    case FamilySpec::Kind::Torus:
      return generate_torus(spec.a, spec.b);
    case FamilySpec::Kind::Butterfly:
      return generate_butterfly(spec.a);
    case FamilySpec::Kind::Benes:
      return generate_benes(spec.a);
    case FamilySpec::Kind::Product:
      if (spec.left->kind == FamilySpec::Kind::Cycle &&
          spec.right->kind == FamilySpec::Kind::Cycle) {
        return generate_torus(spec.left->a, spec.right->a);
      }
      return generate_product(generate(*spec.left), generate(*spec.right));
  }
  throw std::invalid_argument("family spec: unknown kind");
}

Graph generate(std::string_view spec) { return generate(FamilySpec::parse(spec)); }

int TorusView::vertex(int a, int b) const {
  const int aa = ((a % n) + n) % n;
  const int bb = ((b % m) + m) % m;
  return aa * m + bb;
}

TorusView torus_view(const Graph& g) {
  if (!g.family() || g.family()->kind != "torus") {
    throw std::invalid_argument("not a torus-labeled graph");
  }
  return {g.family()->params[0], g.family()->params[1]};
}

namespace {

bool four_distance_relation(const DistanceMatrix& d, int x1, int x2, int y1, int y2) {
  const int cross = d(x1, y2);
  return cross == d(x2, y1) && cross == d(x1, y1) + 1 && cross == d(x2, y2) + 1;
}

}  // namespace

bool torus_parallel_predicate(const DistanceMatrix& d, const Edge& e, const Edge& f) {
  if (e == f) {
    return false;
  }
  return four_distance_relation(d, e.u, e.v, f.u, f.v) ||
         four_distance_relation(d, e.u, e.v, f.v, f.u);
}

EdgeSet torus_parallel_predicate_matches(const Graph& g, const DistanceMatrix& d, const Edge& e) {
  torus_view(g);
  g.edge_index(e);
  EdgeSet matches;
  for (const Edge& f : g.edges()) {
    if (torus_parallel_predicate(d, e, f)) {
      matches.insert(f);
    }
  }
  return matches;
}

EdgeSet torus_parallel(const Graph& g, const DistanceMatrix& d, const Edge& e) {
  const TorusView tv = torus_view(g);
  g.edge_index(e);

  EdgeSet cls;
  if (tv.is_horizontal(e)) {
    const int a1 = tv.first_coord(e.u);
    const int a2 = tv.first_coord(e.v);
    for (int b = 0; b < tv.m; ++b) {
      cls.insert(Edge(tv.vertex(a1, b), tv.vertex(a2, b)));
    }
  } else {
    const int b1 = tv.second_coord(e.u);
    const int b2 = tv.second_coord(e.v);
    for (int a = 0; a < tv.n; ++a) {
      cls.insert(Edge(tv.vertex(a, b1), tv.vertex(a, b2)));
    }
  }
  for (const Edge& f : cls) {
    if (f != e && !torus_parallel_predicate(d, e, f)) {
      throw std::logic_error("translate " + to_string(f) +
                             " fails the four-distance parallelism relation");
    }
  }
  return cls;
}

std::vector<int> torus_diagonal_vertices(const Graph& g) {
  const TorusView tv = torus_view(g);
  if (tv.n != tv.m || tv.n % 2 != 0) {
    throw std::invalid_argument("diagonal vertices need a square even torus");
  }
  std::vector<int> diag;
  diag.reserve(static_cast<std::size_t>(tv.n));
  for (int i = 0; i < tv.n; ++i) {
    diag.push_back(tv.vertex(i, i));
  }
  return diag;
}

int BenesView::vertex(std::uint32_t s, int level) const {
  return level * rows + static_cast<int>(s);
}

int BenesView::edge_level(const Edge& e) const { return std::max(level(e.u), level(e.v)); }

BenesView benes_view(const Graph& g) {
  if (!g.family() || g.family()->kind != "benes") {
    throw std::invalid_argument("not a Benes-labeled graph");
  }
  const int r = g.family()->params[0];
  return {r, 1 << r};
}

EdgeSet benes_level_edges(const Graph& g, int level) {
  const BenesView bv = benes_view(g);
  if (level < 1 || level > 2 * bv.r) {
    throw std::invalid_argument("level edges: level must be in 1..2r");
  }
  EdgeSet result;
  for (const Edge& e : g.edges()) {
    if (bv.edge_level(e) == level) {
      result.insert(e);
    }
  }
  return result;
}

std::vector<int> benes_level_vertices(const Graph& g, int level) {
  const BenesView bv = benes_view(g);
  if (level < 0 || level > 2 * bv.r) {
    throw std::invalid_argument("level vertices: level must be in 0..2r");
  }
  std::vector<int> result;
  result.reserve(static_cast<std::size_t>(bv.rows));
  for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(bv.rows); ++s) {
    result.push_back(bv.vertex(s, level));
  }
  return result;
}

}  // namespace geopos
