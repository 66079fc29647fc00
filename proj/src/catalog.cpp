#include "dyncol/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/isomorphism.hpp>

namespace dyncol {

namespace {

using Edges = std::vector<std::pair<int, int>>;

Point polar(double radius, double degrees, Point center = {}) {
  double t = degrees * std::numbers::pi / 180.0;
  return {center.x + radius * std::cos(t), center.y + radius * std::sin(t)};
}

// Adds `count` leaves around points[at], spread over `spread` degrees
// centred on direction `toward`.
void add_fan(std::vector<Point>& points, Edges& edges, int at, int count, double toward, double spread = 120.0) {
  for (int i = 0; i < count; ++i) {
    double angle = toward - spread / 2 + spread * i / std::max(1, count - 1);
    edges.emplace_back(at, static_cast<int>(points.size()));
    points.push_back(polar(4.0, angle, points[at]));
  }
}

OnePlaneDrawing checked(OnePlaneDrawing d, const std::string& what) {
  Diagnostics diag = validate_drawing(d);
  if (!diag.ok()) throw DrawingError(what + " is not a valid drawing: " + diag.summary());
  return d;
}

double orient(Point a, Point b, Point c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

// Parameter along pq where it properly crosses rs.
std::optional<double> cross_at(Point p, Point q, Point r, Point s) {
  double d1 = orient(p, q, r), d2 = orient(p, q, s), d3 = orient(r, s, p), d4 = orient(r, s, q);
  if (d1 * d2 < 0 && d3 * d4 < 0) return d3 / (d3 - d4);
  return std::nullopt;
}

Edges complete_edges(int n) {
  Edges out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

const std::vector<Point> kK7Points = {{7, 6}, {4, 2}, {-2, 1}, {8, -5}, {20, 19}, {13, -11}, {-17, 1}};

Graph from_mask(int n, unsigned mask, const Edges& pairs) {
  Graph g = empty_graph(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if ((mask >> k) & 1U) g.insert_edge(VertexId{pairs[k].first}, VertexId{pairs[k].second});
  }
  return g;
}

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

BoostGraph to_boost(const Graph& g) {
  std::map<VertexId, int> dense;
  for (VertexId v : g.vertices()) dense.emplace(v, static_cast<int>(dense.size()));
  BoostGraph b(dense.size());
  for (const auto& [u, v] : g.edges()) boost::add_edge(dense[u], dense[v], b);
  return b;
}

template <typename Accept>
OnePlaneDrawing random_drawing(int n, std::uint64_t seed, double density, Accept accept) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 100.0);
  std::bernoulli_distribution keep(density);
  std::vector<Point> points(n);
  for (Point& p : points) p = {coord(rng), coord(rng)};
  Edges candidates = complete_edges(n);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  Edges chosen;
  std::vector<int> crossed;
  for (const auto& [a, b] : candidates) {
    if (!keep(rng)) continue;
    std::vector<int> hits;
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      auto [c, e] = chosen[k];
      if (a == c || a == e || b == c || b == e) continue;
      if (cross_at(points[a], points[b], points[c], points[e])) hits.push_back(static_cast<int>(k));
    }
    if (!accept(hits, crossed)) continue;
    for (int k : hits) crossed[k] = 1;
    chosen.emplace_back(a, b);
    crossed.push_back(hits.empty() ? 0 : 1);
  }
  return checked(straight_line_drawing(points, chosen), "random drawing");
}

}  // namespace

OnePlaneDrawing k6_drawing() {
  std::vector<Point> points;
  for (double a : {90.0, 210.0, 330.0}) points.push_back(polar(10, a));
  for (double a : {90.0, 210.0, 330.0}) points.push_back(polar(3, a));
  return checked(straight_line_drawing(points, complete_edges(6)), "K6");
}

OnePlaneDrawing k7_star_drawing() { return complete_subdivision_drawing(7); }

OnePlaneDrawing complete_drawing(int n) {
  if (n < 1 || n > 6) throw DrawingError("K_n has a 1-plane drawing here only for 1 <= n <= 6");
  OnePlaneDrawing d = k6_drawing();
  for (int v = 5; v >= n; --v) d.erase_vertex(VertexId{v});
  return checked(d, "K" + std::to_string(n));
}

OnePlaneDrawing complete_subdivision_drawing(int n) {
  if (n < 1 || n > 7) throw DrawingError("K_n* is drawn here only for 1 <= n <= 7");
  std::vector<Point> points(kK7Points.begin(), kK7Points.begin() + n);
  Edges base = complete_edges(n);
  Edges edges;
  for (const auto& [u, v] : base) {
    std::vector<double> ts;
    for (const auto& [c, e] : base) {
      if (c == u || c == v || e == u || e == v) continue;
      if (auto t = cross_at(points[u], points[v], points[c], points[e])) ts.push_back(*t);
    }
    std::sort(ts.begin(), ts.end());
    if (ts.size() > 2) throw DrawingError("K_n layout has an edge crossed more than twice");
    // The new vertex splits the edge between its two crossings.
    double s = ts.size() == 2 ? (ts[0] + ts[1]) / 2 : 0.5;
    if (ts.size() == 1 && std::abs(ts[0] - s) < 1e-6) s = ts[0] / 2;
    int mid = static_cast<int>(points.size());
    points.push_back({points[u].x + s * (points[v].x - points[u].x), points[u].y + s * (points[v].y - points[u].y)});
    edges.emplace_back(u, mid);
    edges.emplace_back(mid, v);
  }
  return checked(straight_line_drawing(points, edges), "K" + std::to_string(n) + "*");
}

OnePlaneDrawing six_face_drawing() {
  // 0,1,2 small (u, v, w); 3,4,5 big (u', v', w').
  std::vector<Point> points = {polar(4, 90), polar(4, 210), polar(4, 330),
                               polar(10, 90), polar(10, 210), polar(10, 330)};
  Edges edges = {{0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 4}, {2, 3}};
  for (int big = 3; big < 6; ++big) add_fan(points, edges, big, 9, 90.0 + 120.0 * (big - 3));
  return checked(straight_line_drawing(points, edges), "6-face fixture");
}

OnePlaneDrawing big_triangle_drawing() {
  std::vector<Point> points = {polar(5, 90), polar(5, 210), polar(5, 330)};
  Edges edges = {{0, 1}, {1, 2}, {0, 2}};
  for (int v = 0; v < 3; ++v) add_fan(points, edges, v, 9, 90.0 + 120.0 * v);
  return checked(straight_line_drawing(points, edges), "big triangle fixture");
}

OnePlaneDrawing false_triangle_drawing() {
  std::vector<Point> points = {{-5, 0}, {5, 0}, {5, 8}, {-5, 8}};
  Edges edges = {{0, 1}, {0, 2}, {1, 3}};
  add_fan(points, edges, 0, 7, 225.0, 90.0);
  add_fan(points, edges, 1, 7, 315.0, 90.0);
  return checked(straight_line_drawing(points, edges), "false triangle fixture");
}

OnePlaneDrawing special_4face_drawing() {
  std::vector<Point> points = {{0, 10}, {0, 4}, {-4, 0}, {4, 0}, {-8, 0}, {8, 0}};
  Edges edges = {{0, 2}, {0, 3}, {1, 4}, {1, 5}};
  add_fan(points, edges, 0, 9, 90.0);
  return checked(straight_line_drawing(points, edges), "special 4-face fixture");
}

OnePlaneDrawing crossing_star_drawing() {
  return checked(straight_line_drawing({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}, {{0, 2}, {1, 3}}), "crossing star");
}

OnePlaneDrawing crossed_square_drawing() {
  return checked(
      straight_line_drawing({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}}),
      "crossed square");
}

OnePlaneDrawing cycle_drawing(int n) {
  if (n < 3) throw DrawingError("cycle needs at least 3 vertices");
  std::vector<Point> points;
  Edges edges;
  for (int i = 0; i < n; ++i) {
    points.push_back(polar(10, 360.0 * i / n));
    edges.emplace_back(i, (i + 1) % n);
  }
  return checked(straight_line_drawing(points, edges), "cycle");
}

OnePlaneDrawing path_drawing(int n) {
  if (n < 1) throw DrawingError("path needs at least 1 vertex");
  return checked(trivial_drawing(path_graph(n)), "path");
}

OnePlaneDrawing wheel_drawing(int rim) {
  if (rim < 3) throw DrawingError("wheel needs a rim of at least 3 vertices");
  std::vector<Point> points = {{0, 0}};
  Edges edges;
  for (int i = 0; i < rim; ++i) {
    points.push_back(polar(10, 360.0 * i / rim));
    edges.emplace_back(0, i + 1);
    edges.emplace_back(i + 1, (i + 1) % rim + 1);
  }
  return checked(straight_line_drawing(points, edges), "wheel");
}

OnePlaneDrawing octahedron_drawing() {
  std::vector<Point> points;
  for (double a : {90.0, 210.0, 330.0}) points.push_back(polar(10, a));
  for (double a : {30.0, 150.0, 270.0}) points.push_back(polar(3, a));
  Edges edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {3, 0}, {3, 2}, {4, 0}, {4, 1}, {5, 1}, {5, 2}};
  return checked(straight_line_drawing(points, edges), "octahedron");
}

OnePlaneDrawing disjoint_union(const OnePlaneDrawing& a, const OnePlaneDrawing& b) {
  int shift = a.graph().next_vertex_id().value;
  int eshift = a.next_edge_id().value;
  auto v = [&](VertexId x) { return VertexId{x.value + shift}; };
  auto e = [&](EdgeId x) { return EdgeId{x.value + eshift}; };
  OnePlaneDrawing out = a;
  for (VertexId x : b.graph().vertices()) out.insert_vertex(v(x));
  for (const auto& [id, ends] : b.edges()) out.insert_edge(e(id), v(ends.u), v(ends.v));
  for (const CrossingPair& c : b.crossings()) out.insert_crossing(e(c.first), e(c.second));
  for (const auto& [x, rot] : b.rotations()) {
    std::vector<EdgeId> mapped;
    for (EdgeId id : rot) mapped.push_back(e(id));
    out.set_rotation(v(x), mapped);
  }
  for (const auto& [c, rot] : b.crossing_rotations()) {
    CrossingRotation mapped = rot;
    for (HalfEdge& h : mapped) h = {e(h.edge), v(h.end)};
    out.set_crossing_rotation(CrossingPair::of(e(c.first), e(c.second)), mapped);
  }
  return checked(out, "disjoint union");
}

std::vector<Fixture> fixtures() {
  return {
      {"c6", cycle_drawing(6), "crossing-free 6-cycle"},
      {"wheel8", wheel_drawing(8), "crossing-free wheel with 8 rim vertices"},
      {"octahedron", octahedron_drawing(), "plane triangulation"},
      {"crossing-star", crossing_star_drawing(), "two crossing edges"},
      {"crossed-square", crossed_square_drawing(), "K4 with one crossing"},
      {"k6", k6_drawing(), "1-plane K6, three crossings"},
      {"k7-star", k7_star_drawing(), "2-subdivision of K7, 1-plane"},
      {"six-face", six_face_drawing(), "6-face with three special 2-vertices"},
      {"big-triangle", big_triangle_drawing(), "true 3-face on three 11-vertices"},
      {"false-triangle", false_triangle_drawing(), "false 3-face on two 9-vertices"},
      {"special-4face", special_4face_drawing(), "one special 4-face"},
      {"two-components", disjoint_union(cycle_drawing(6), crossed_square_drawing()), "C6 and a crossed K4"},
  };
}

const Fixture& fixture(const std::string& name) {
  static const std::vector<Fixture> all = fixtures();
  for (const Fixture& f : all) {
    if (f.name == name) return f;
  }
  throw Error("unknown fixture '" + name + "'");
}

OnePlaneDrawing random_planar_drawing(int n, std::uint64_t seed, double density) {
  return random_drawing(n, seed, density, [](const std::vector<int>& hits, const std::vector<int>&) {
    return hits.empty();
  });
}

OnePlaneDrawing random_1plane_drawing(int n, std::uint64_t seed, double density) {
  return random_drawing(n, seed, density, [](const std::vector<int>& hits, const std::vector<int>& crossed) {
    return hits.empty() || (hits.size() == 1 && !crossed[hits.front()]);
  });
}

std::vector<Graph> all_graphs(int n) {
  if (n < 0 || n > 6) throw GraphError("graph catalog covers 0..6 vertices");
  Edges pairs = complete_edges(n);
  std::map<std::pair<int, int>, int> index;
  for (std::size_t k = 0; k < pairs.size(); ++k) index[pairs[k]] = static_cast<int>(k);
  // Edge index images under every vertex permutation.
  std::vector<std::vector<int>> images;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> img;
    for (const auto& [a, b] : pairs) img.push_back(index[std::minmax(perm[a], perm[b])]);
    images.push_back(std::move(img));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Graph> out;
  unsigned total = 1U << pairs.size();
  for (unsigned mask = 0; mask < total; ++mask) {
    bool canonical = true;
    for (const auto& img : images) {
      unsigned m = 0;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if ((mask >> k) & 1U) m |= 1U << img[k];
      }
      if (m < mask) {
        canonical = false;
        break;
      }
    }
    if (canonical) out.push_back(from_mask(n, mask, pairs));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.num_vertices() > 0 && g.num_components() == 1; }

bool is_planar(const Graph& g) {
  BoostGraph b = to_boost(g);
  return boost::boyer_myrvold_planarity_test(b);
}

std::vector<Graph> connected_planar_graphs(int n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n)) {
    if (is_connected(g) && is_planar(g)) out.push_back(std::move(g));
  }
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  BoostGraph x = to_boost(a);
  BoostGraph y = to_boost(b);
  return boost::isomorphism(x, y);
}

}  // namespace dyncol
