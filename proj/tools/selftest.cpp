#include "selftest.hpp"

#include <functional>
#include <ostream>
#include <string>

#include "dyncol/catalog.hpp"
#include "dyncol/coloring.hpp"
#include "dyncol/discharge.hpp"
#include "dyncol/reduce.hpp"

using namespace dyncol;

namespace {

class Runner {
 public:
  explicit Runner(std::ostream& os) : os_(os) {}

  void operator()(const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string why;
    try {
      ok = body();
    } catch (const std::exception& e) {
      why = e.what();
    }
    os_ << (ok ? "ok    " : "FAIL  ") << name;
    if (!why.empty()) os_ << "  (" << why << ")";
    os_ << std::endl;
    failed_ += ok ? 0 : 1;
    ++total_;
  }

  bool summary() {
    os_ << total_ - failed_ << "/" << total_ << " examples passed\n";
    return failed_ == 0;
  }

 private:
  std::ostream& os_;
  int failed_ = 0;
  int total_ = 0;
};

VertexId V(int i) { return VertexId{i}; }

Coloring colors(std::initializer_list<int> cs) {
  Coloring c;
  int i = 0;
  for (int x : cs) c[V(i++)] = x;
  return c;
}

template <typename E>
bool throws(const std::function<void()>& f) {
  try {
    f();
  } catch (const E&) {
    return true;
  }
  return false;
}

OnePlaneDrawing special_face_with_big_degree(int fan) {
  std::vector<Point> points = {{0, 10}, {0, 4}, {-4, 0}, {4, 0}, {-8, 0}, {8, 0}};
  std::vector<std::pair<int, int>> edges = {{0, 2}, {0, 3}, {1, 4}, {1, 5}};
  for (int i = 0; i < fan; ++i) {
    edges.emplace_back(0, static_cast<int>(points.size()));
    points.push_back({-6.0 + 12.0 * i / std::max(1, fan - 1), 14});
  }
  return straight_line_drawing(points, edges);
}

int count_faces_of_degree(const AssociatedPlaneGraph& a, int d) {
  int k = 0;
  for (FaceId f = 0; f < a.num_faces(); ++f) k += a.face_degree(f) == d;
  return k;
}

Charge face_final_of_degree(const OnePlaneDrawing& d, int degree, bool want_false) {
  AssociatedPlaneGraph a(d);
  ChargeLedger l = apply_rules(a, initial_charges(a));
  auto kinds = classify_faces(a);
  for (FaceId f = 0; f < a.num_faces(); ++f) {
    if (a.face_degree(f) == degree && (kinds[f] == FaceKind::False) == want_false) return l.final.at(ElementRef::face(f));
  }
  throw Error("no such face");
}

void graph_examples(Runner& t) {
  t("degree in K4 is 3", [] { return complete_graph(4).degree(V(2)) == 3; });
  t("degree in C6 is 2", [] { return cycle_graph(6).degree(V(5)) == 2; });
  t("isolated vertex has degree 0", [] { return empty_graph(1).degree(V(0)) == 0; });
  t("C5 minus a vertex is P4", [] { return isomorphic(cycle_graph(5).remove_vertices({V(0)}), path_graph(4)); });
  t("K3 minus two vertices is K1", [] { return isomorphic(complete_graph(3).remove_vertices({V(0), V(1)}), empty_graph(1)); });
  t("removing nothing is identity", [] { return cycle_graph(5).remove_vertices({}) == cycle_graph(5); });
  t("P3 plus its end edge is C3", [] { return isomorphic(path_graph(3).add_edge(V(0), V(2)), cycle_graph(3)); });
  t("adding an existing edge changes nothing", [] { return cycle_graph(4).add_edge(V(0), V(1)) == cycle_graph(4); });
  t("2K1 plus an edge is K2", [] { return isomorphic(empty_graph(2).add_edge(V(0), V(1)), complete_graph(2)); });
  t("C7 subdivided is C14", [] { return isomorphic(two_subdivision(cycle_graph(7)).graph, cycle_graph(14)); });
  t("K3 subdivided is C6", [] { return isomorphic(two_subdivision(complete_graph(3)).graph, cycle_graph(6)); });
  t("K7 subdivided has 28 vertices and 42 edges", [] {
    Graph g = two_subdivision(complete_graph(7)).graph;
    return g.num_vertices() == 28 && g.num_edges() == 42;
  });
  t("K7 passes the 2-planar edge bound", [] { return two_planar_edge_bound_check(complete_graph(7)); });
  t("K9 fails the 2-planar edge bound", [] { return !two_planar_edge_bound_check(complete_graph(9)); });
  t("C5 passes the 2-planar edge bound", [] { return two_planar_edge_bound_check(cycle_graph(5)); });
}

void drawing_examples(Runner& t) {
  t("plane C4 is valid", [] { return validate_drawing(cycle_drawing(4)).ok(); });
  t("edge crossed twice is reported", [] {
    auto d = straight_line_drawing({{0, 0}, {10, 0}, {3, -1}, {3, 1}, {7, -1}, {7, 1}}, {{0, 1}, {2, 3}, {4, 5}});
    return validate_drawing(d).has("edge crossed twice");
  });
  t("crossing adjacent edges is reported", [] {
    OnePlaneDrawing d;
    for (int i = 0; i < 3; ++i) d.insert_vertex(V(i));
    EdgeId a = d.insert_edge(V(0), V(1));
    EdgeId b = d.insert_edge(V(0), V(2));
    d.insert_crossing(a, b);
    return validate_drawing(d).has("crossing edges share an endpoint");
  });
  t("two crossing edges: 5 nodes, 4 segments, one 8-face", [] {
    AssociatedPlaneGraph a(crossing_star_drawing());
    return a.num_nodes() == 5 && a.num_segments() == 4 && a.num_faces() == 1 && a.face_degree(0) == 8;
  });
  t("crossing-free drawing has only true vertices", [] {
    AssociatedPlaneGraph a(wheel_drawing(5));
    bool all_true = true;
    for (NodeIndex n = 0; n < a.num_nodes(); ++n) all_true = all_true && !a.is_false(n);
    return all_true && a.num_nodes() == 6 && a.num_segments() == 10;
  });
  t("crossed C4: 5 nodes, 8 segments, four 3-faces and one more", [] {
    AssociatedPlaneGraph a(crossed_square_drawing());
    return a.num_nodes() == 5 && a.num_segments() == 8 && a.num_faces() == 5 && count_faces_of_degree(a, 3) == 4;
  });
  t("faces of crossed C4: triangles false, outer true", [] {
    AssociatedPlaneGraph a(crossed_square_drawing());
    auto kinds = classify_faces(a);
    for (FaceId f = 0; f < a.num_faces(); ++f) {
      if ((a.face_degree(f) == 3) != (kinds[f] == FaceKind::False)) return false;
    }
    return true;
  });
  t("faces of a crossing-free drawing are true", [] {
    auto kinds = classify_faces(AssociatedPlaneGraph(octahedron_drawing()));
    return std::all_of(kinds.begin(), kinds.end(), [](FaceKind k) { return k == FaceKind::True; });
  });
  t("special 4-face with a 12-vertex is listed", [] {
    auto d = special_face_with_big_degree(10);
    return special_4_faces(AssociatedPlaneGraph(d)).size() == 1;
  });
  t("same with a 10-vertex is not", [] {
    auto d = special_face_with_big_degree(8);
    return special_4_faces(AssociatedPlaneGraph(d)).empty();
  });
  t("4-face with true corners is not special", [] {
    return special_4_faces(AssociatedPlaneGraph(cycle_drawing(4))).empty();
  });
  t("diagonal in the square face gives two triangles", [] {
    auto d = insert_edge_in_face(cycle_drawing(4), 0, V(0), V(2));
    AssociatedPlaneGraph a(d);
    return validate_drawing(d).ok() && count_faces_of_degree(a, 3) == 2;
  });
  t("closing P3 gives C3", [] {
    auto d = insert_edge_in_face(path_drawing(3), 0, V(0), V(2));
    return validate_drawing(d).ok() && isomorphic(d.graph(), cycle_graph(3));
  });
  t("inserting an existing edge fails", [] {
    return throws<DrawingError>([] { insert_edge_in_face(cycle_drawing(4), 0, V(0), V(1)); });
  });
  t("deleting a crossing vertex removes its crossing", [] {
    return delete_vertex_from_drawing(crossed_square_drawing(), V(0)).num_crossings() == 0;
  });
  t("deleting an isolated vertex", [] {
    OnePlaneDrawing d = cycle_drawing(4);
    d.insert_vertex(V(9));
    auto out = delete_vertex_from_drawing(d, V(9));
    return out.graph().num_vertices() == 4 && validate_drawing(out).ok();
  });
  t("deleting an end of ac leaves bd uncrossed", [] {
    auto out = delete_vertex_from_drawing(crossing_star_drawing(), V(0));
    return out.num_crossings() == 0 && out.graph().num_vertices() == 3 && out.graph().has_edge(V(1), V(3)) &&
           validate_drawing(out).ok();
  });
}

void coloring_examples(Runner& t) {
  t("C4 (1,2,1,2) is proper", [] { return is_proper(cycle_graph(4), colors({1, 2, 1, 2})); });
  t("K2 (1,1) is not proper", [] { return !is_proper(complete_graph(2), colors({1, 1})); });
  t("K1 is proper", [] { return is_proper(empty_graph(1), colors({7})); });
  t("C4 (1,2,1,2) is not dynamic", [] { return !is_dynamic(cycle_graph(4), colors({1, 2, 1, 2})); });
  t("C6 (1,2,3,1,2,3) is dynamic", [] { return is_dynamic(cycle_graph(6), colors({1, 2, 3, 1, 2, 3})); });
  t("K2 (1,2) is dynamic", [] { return is_dynamic(complete_graph(2), colors({1, 2})); });
  t("chi_d(C5) = 5", [] { return chi_dynamic(cycle_graph(5)).value == 5; });
  t("chi_d(C6) = 3, chi_d(C8) = 4", [] {
    return chi_dynamic(cycle_graph(6)).value == 3 && chi_dynamic(cycle_graph(8)).value == 4;
  });
  t("chi_d(P3) = 3", [] { return chi_dynamic(path_graph(3)).value == 3; });
  t("chi(K7) = 7", [] { return chi(complete_graph(7)).value == 7; });
  t("C4 with lists {1,2} has no dynamic coloring", [] {
    Graph g = cycle_graph(4);
    ListAssignment l;
    for (VertexId v : g.vertices()) l[v] = {1, 2};
    return !find_list_coloring(g, l, true);
  });
  t("C4 with lists {1..4} has one", [] {
    Graph g = cycle_graph(4);
    auto c = find_list_coloring(g, uniform_lists(g, 4), true);
    return c && is_dynamic(g, *c);
  });
  t("greedy lists {1..D+1} suffice for proper coloring", [] {
    Graph g = fixture("k7-star").drawing.graph();
    return find_list_coloring(g, uniform_lists(g, g.max_degree() + 1), false).has_value();
  });
  t("C6 is dynamically 3-choosable", [] { return choosable(cycle_graph(6), 3, true).choosable; });
  t("C8 is not dynamically 3-choosable, but 4-choosable", [] {
    return !choosable(cycle_graph(8), 3, true).choosable && choosable(cycle_graph(8), 4, true).choosable;
  });
  t("K1 is 1-choosable", [] { return choosable(empty_graph(1), 1, true).choosable && choosable(empty_graph(1), 1, false).choosable; });
  t("even cycle formula at 6, 8, 12", [] {
    return chi_d_even_cycle(6) == 3 && chi_d_even_cycle(8) == 4 && chi_d_even_cycle(12) == 3;
  });
  t("subdivision gap at 9, 7, 4", [] { return subdivision_gap(9) == 0 && subdivision_gap(7) == 1 && subdivision_gap(4) == 2; });
  t("lift from C6 to K3 is (1,3,2)", [] {
    Graph k3 = complete_graph(3);
    Subdivision s = two_subdivision(k3);
    // Around the cycle: 0, mid(0,1), 1, mid(1,2), 2, mid(0,2).
    Coloring cs{{V(0), 1}, {V(3), 2}, {V(1), 3}, {V(5), 1}, {V(2), 2}, {V(4), 3}};
    return is_dynamic(s.graph, cs) && lift_coloring(k3, s, cs) == colors({1, 3, 2});
  });
  t("lift to K2 gives distinct colors", [] {
    Graph k2 = complete_graph(2);
    Subdivision s = two_subdivision(k2);
    auto c = chi_dynamic(s.graph).witness;
    return is_proper(k2, lift_coloring(k2, s, c));
  });
  t("every dynamic 4-coloring of C8 lifts to a proper coloring of C4", [] {
    Graph c4 = cycle_graph(4);
    Subdivision s = two_subdivision(c4);
    std::vector<VertexId> vs = s.graph.vertices();
    Coloring c;
    int lifted = 0;
    for (int code = 0; code < 65536; ++code) {
      int x = code;
      for (VertexId v : vs) {
        c[v] = x % 4;
        x /= 4;
      }
      if (!is_dynamic(s.graph, c)) continue;
      if (!is_proper(c4, lift_coloring(c4, s, c))) return false;
      ++lifted;
    }
    return lifted > 0;
  });
}

void reduce_examples(Runner& t) {
  t("P2 has MinDeg1", [] {
    auto c = find_reducible_configuration(path_drawing(2));
    return c && c->kind == ConfigKind::MinDeg1;
  });
  t("C6 has AdjacentTwos", [] {
    auto c = find_reducible_configuration(cycle_drawing(6));
    return c && c->kind == ConfigKind::AdjacentTwos;
  });
  t("K6 has SmallEdgeGeneral", [] {
    auto c = find_reducible_configuration(k6_drawing());
    return c && c->kind == ConfigKind::SmallEdgeGeneral;
  });
  t("MinDeg1 on P3 leaves P2 and forbids b and c", [] {
    auto d = path_drawing(3);
    auto c = find_reducible_configuration(d);
    Reduction r = reduce(d, *c);
    return isomorphic(r.drawing.graph(), path_graph(2)) && r.recipe.steps.size() == 1 &&
           r.recipe.steps[0].forbidden == std::vector<VertexId>{V(1), V(2)};
  });
  t("AdjacentTwos on C6 leaves P4 with forbidden sets of 3 and 4", [] {
    auto d = cycle_drawing(6);
    Reduction r = reduce(d, *find_reducible_configuration(d));
    return isomorphic(r.drawing.graph(), path_graph(4)) && r.recipe.steps.size() == 2 &&
           r.recipe.steps[0].forbidden.size() == 3 && r.recipe.steps[1].forbidden.size() == 4;
  });
  t("FalseTriangleTrueSmall adds vw", [] {
    auto d = straight_line_drawing({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}, {{0, 2}, {1, 3}, {0, 1}});
    auto found = find_configurations(d, ConfigKind::FalseTriangleTrueSmall);
    if (found.empty() || !found.front().added_edge) return false;
    auto [v, w] = *found.front().added_edge;
    Reduction r = reduce(d, found.front());
    return r.drawing.graph().has_edge(v, w) && validate_drawing(r.drawing).ok();
  });
  t("extension on P3 picks color 3", [] {
    auto d = path_drawing(3);
    Reduction r = reduce(d, *find_reducible_configuration(d));
    ListAssignment lists{{V(0), {1, 2, 3}}, {V(1), {1}}, {V(2), {2}}};
    Coloring c = extend_coloring({{V(1), 1}, {V(2), 2}}, r.recipe, lists);
    return c.at(V(0)) == 3 && is_dynamic(d.graph(), c);
  });
  t("SmallEdgeGeneral keeps the alternate order for one neighbor color", [] {
    auto d = k6_drawing();
    auto c = find_reducible_configuration(d);
    return !c->recipe.branch_on.empty() && c->recipe.alternate.front().vertex == *c->role("u") &&
           c->recipe.steps.front().vertex == *c->role("v");
  });
  t("uniform 11-lists extend every recipe", [] {
    for (const Fixture& f : fixtures()) {
      auto run = color_1planar(f.drawing, uniform_lists(f.drawing.graph(), 11));
      if (!is_dynamic(f.drawing.graph(), run.coloring)) return false;
    }
    return true;
  });
  t("6-face redrawing saves three crossings", [] {
    auto d = six_face_drawing();
    auto better = improve_drawing_6face(d);
    return better && validate_drawing(*better).ok() && better->graph() == d.graph() &&
           better->num_crossings() == d.num_crossings() - 3;
  });
  t("no redrawing without crossings", [] { return !improve_drawing_6face(octahedron_drawing()); });
  t("no redrawing with one special vertex", [] { return !improve_drawing_6face(special_4face_drawing()); });
  t("C6 gets a dynamic 11-list coloring", [] {
    auto d = cycle_drawing(6);
    auto run = color_1planar(d, uniform_lists(d.graph(), 11));
    return is_dynamic(d.graph(), run.coloring);
  });
  t("K6 gets a dynamic 11-list coloring", [] {
    auto d = k6_drawing();
    return is_dynamic(d.graph(), color_1planar(d, uniform_lists(d.graph(), 11)).coloring);
  });
  t("K7* coloring lifts to a proper coloring of K7", [] {
    auto d = k7_star_drawing();
    auto run = color_1planar(d, uniform_lists(d.graph(), 11));
    Graph k7 = complete_graph(7);
    Coloring lifted = lift_coloring(k7, two_subdivision(k7), run.coloring);
    std::set<Color> used;
    for (const auto& [v, c] : lifted) used.insert(c);
    return is_proper(k7, lifted) && used.size() >= 7;
  });
  t("lists of size 10 are refused", [] {
    auto d = k6_drawing();
    return throws<ColoringError>([&] { color_1planar(d, uniform_lists(d.graph(), 10)); });
  });
}

void discharge_examples(Runner& t) {
  t("initial charge d - 4", [] {
    AssociatedPlaneGraph a(octahedron_drawing());
    ChargeLedger l = initial_charges(a);
    return l.initial.at(ElementRef::node(0)) == Charge(0) && l.initial.at(ElementRef::face(0)) == Charge(-1);
  });
  t("two crossing edges: vertices -3, crossing 0, face 4, total -8", [] {
    AssociatedPlaneGraph a(crossing_star_drawing());
    ChargeLedger l = initial_charges(a);
    return l.initial.at(ElementRef::node(0)) == Charge(-3) && l.initial.at(ElementRef::node(4)) == Charge(0) &&
           l.initial.at(ElementRef::face(0)) == Charge(4) && l.total_initial() == Charge(-8);
  });
  t("plane triangulation totals -8", [] {
    AssociatedPlaneGraph a(octahedron_drawing());
    return initial_charges(a).total_initial() == Charge(-8);
  });
  t("true 3-face on three 11-vertices ends at 0", [] {
    return face_final_of_degree(big_triangle_drawing(), 3, false) == Charge(0);
  });
  t("false 3-face on two 9-vertices ends at 0", [] {
    return face_final_of_degree(false_triangle_drawing(), 3, true) == Charge(0);
  });
  t("special 4-face ends at 0", [] { return face_final_of_degree(special_4face_drawing(), 4, true) == Charge(0); });
  t("C6: 2-vertex claim fails with AdjacentTwos attached", [] {
    auto r = discharge(cycle_drawing(6));
    for (const ClaimVerdict& c : r.claims) {
      if (c.id == "two-vertices") return !c.holds && c.attached && c.attached->starts_with("AdjacentTwos");
    }
    return false;
  });
  t("lone special 4-face: special faces are apart", [] {
    auto r = discharge(special_4face_drawing());
    for (const ClaimVerdict& c : r.claims) {
      if (c.id == "special-4faces-apart") return c.holds;
    }
    return false;
  });
  t("K6: total -8 and a SmallEdgeGeneral witness", [] {
    auto r = discharge(k6_drawing());
    bool attached = false;
    for (const ClaimVerdict& c : r.claims) {
      attached = attached || (c.attached && c.attached->starts_with("SmallEdgeGeneral"));
    }
    return r.ledger.total_final() == Charge(-8) && !r.negatives.empty() && attached;
  });
  t("negative elements are never empty on a connected input", [] {
    return !discharge(big_triangle_drawing()).negatives.empty();
  });
  t("two crossing edges: the four 1-vertices are negative", [] {
    auto d = crossing_star_drawing();
    auto r = discharge(d);
    return r.negatives == std::vector<ElementRef>{ElementRef::node(0), ElementRef::node(1), ElementRef::node(2),
                                                  ElementRef::node(3)};
  });
  t("6-face claim fails and a redrawing is offered", [] {
    auto r = discharge(six_face_drawing());
    for (const ClaimVerdict& c : r.claims) {
      if (c.id == "six-face-specials") return !c.holds && c.attached && c.attached->starts_with("redrawing");
    }
    return false;
  });
}

void cli_examples(Runner& t) {
  t("check C4 (1,2,1,2) dynamic names the neighborhood", [] {
    auto v = first_violation(cycle_graph(4), colors({1, 2, 1, 2}), true);
    return v && v->starts_with("monochromatic neighborhood at");
  });
  t("check C4 (1,2,1,2) proper is valid", [] { return !first_violation(cycle_graph(4), colors({1, 2, 1, 2}), false); });
  t("coloring missing a vertex is an error", [] {
    return throws<ColoringError>([] { is_proper(cycle_graph(4), colors({1, 2, 1})); });
  });
  t("C8 ch_d is 4", [] {
    int k = 1;
    while (!choosable(cycle_graph(8), k, true).choosable) ++k;
    return k == 4;
  });
  t("complete 7 is refused", [] { return throws<DrawingError>([] { complete_drawing(7); }); });
  t("complete 6 is the K6 fixture", [] { return complete_drawing(6) == k6_drawing(); });
  t("complete-subdiv 7 is K7*", [] {
    auto d = complete_subdivision_drawing(7);
    return validate_drawing(d).ok() && d.graph() == two_subdivision(complete_graph(7)).graph;
  });
  t("every fixture validates", [] {
    for (const Fixture& f : fixtures()) {
      if (!validate_drawing(f.drawing).ok()) return false;
    }
    return true;
  });
}

}  // namespace

bool run_selftest(std::ostream& os) {
  Runner t(os);
  graph_examples(t);
  drawing_examples(t);
  coloring_examples(t);
  reduce_examples(t);
  discharge_examples(t);
  cli_examples(t);
  return t.summary();
}
