#include <gtest/gtest.h>

#include "dyncol/catalog.hpp"
#include "dyncol/drawing.hpp"

using namespace dyncol;

namespace {

VertexId V(int i) { return VertexId{i}; }

std::vector<OnePlaneDrawing> sample() {
  std::vector<OnePlaneDrawing> out;
  for (const Fixture& f : fixtures()) out.push_back(f.drawing);
  for (std::uint64_t s = 0; s < 20; ++s) {
    out.push_back(random_planar_drawing(5 + static_cast<int>(s), s));
    out.push_back(random_1plane_drawing(5 + static_cast<int>(s), 500 + s));
  }
  return out;
}

}  // namespace

// Euler per component (each has its own outer face): nodes - segments + faces = 2 * components, and face degrees sum to twice the segments.
TEST(Drawing, PlanarizationSatisfiesEuler) {
  for (const OnePlaneDrawing& d : sample()) {
    ASSERT_TRUE(validate_drawing(d).ok()) << validate_drawing(d).summary();
    AssociatedPlaneGraph a(d);
    EXPECT_EQ(a.num_nodes() - a.num_segments() + a.num_faces(), 2 * a.num_components());
    int sum = 0;
    for (FaceId f = 0; f < a.num_faces(); ++f) sum += a.face_degree(f);
    EXPECT_EQ(sum, 2 * a.num_segments());
    EXPECT_EQ(a.num_nodes(), d.graph().num_vertices() + d.num_crossings());
    EXPECT_EQ(a.num_segments(), d.graph().num_edges() + 2 * d.num_crossings());
  }
}

TEST(Drawing, FalseNodesHaveDegreeFour) {
  AssociatedPlaneGraph a(fixture("k7-star").drawing);
  int crossings = 0;
  for (NodeIndex n = 0; n < a.num_nodes(); ++n) {
    if (!a.is_false(n)) continue;
    ++crossings;
    EXPECT_EQ(a.degree(n), 4);
  }
  EXPECT_EQ(crossings, fixture("k7-star").drawing.num_crossings());
}

TEST(Drawing, ValidationKinds) {
  auto twice = straight_line_drawing({{0, 0}, {10, 0}, {3, -1}, {3, 1}, {7, -1}, {7, 1}}, {{0, 1}, {2, 3}, {4, 5}});
  EXPECT_TRUE(validate_drawing(twice).has("edge crossed twice"));

  OnePlaneDrawing adjacent;
  for (int i = 0; i < 3; ++i) adjacent.insert_vertex(V(i));
  EdgeId a = adjacent.insert_edge(V(0), V(1));
  EdgeId b = adjacent.insert_edge(V(0), V(2));
  adjacent.insert_crossing(a, b);
  EXPECT_TRUE(validate_drawing(adjacent).has("crossing edges share an endpoint"));

  OnePlaneDrawing norot = cycle_drawing(4);
  norot.set_rotation(V(0), {norot.rotation(V(0)).front()});
  EXPECT_TRUE(validate_drawing(norot).has("rotation does not match incident edges"));
}

TEST(Drawing, NonPlanarRotationIsRejected) {
  // K4 drawn with the rotation at one vertex reversed has the wrong face count.
  OnePlaneDrawing d = fixture("crossed-square").drawing;
  OnePlaneDrawing k4 = straight_line_drawing({{0, 0}, {10, 0}, {5, 8}, {5, 3}}, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
  ASSERT_TRUE(validate_drawing(k4).ok());
  auto rot = k4.rotation(V(3));
  std::swap(rot[0], rot[1]);
  k4.set_rotation(V(3), rot);
  EXPECT_TRUE(validate_drawing(k4).has("rotation system is not planar"));
  EXPECT_TRUE(validate_drawing(d).ok());
}

TEST(Drawing, SpecialFourFaces) {
  auto six = AssociatedPlaneGraph(six_face_drawing());
  EXPECT_EQ(special_4_faces(six).size(), 3u);
  EXPECT_EQ(special_4_faces(AssociatedPlaneGraph(special_4face_drawing())).size(), 1u);
  EXPECT_TRUE(special_4_faces(AssociatedPlaneGraph(k6_drawing())).empty());
}

TEST(Drawing, InsertEdgeInFace) {
  OnePlaneDrawing d = insert_edge_in_face(cycle_drawing(4), 0, V(0), V(2));
  EXPECT_TRUE(validate_drawing(d).ok());
  EXPECT_TRUE(d.graph().has_edge(V(0), V(2)));
  EXPECT_THROW((void)insert_edge_in_face(cycle_drawing(4), 0, V(0), V(1)), DrawingError);
  // u and v both on the face is required.
  OnePlaneDrawing tri = octahedron_drawing();
  AssociatedPlaneGraph a(tri);
  FaceId f = 0;
  auto on = a.face_nodes(f);
  VertexId off{-1};
  for (VertexId v : tri.graph().vertices()) {
    if (std::none_of(on.begin(), on.end(), [&](NodeIndex n) { return a.node(n).vertex == v; })) off = v;
  }
  EXPECT_THROW((void)insert_edge_in_face(tri, f, a.node(on[0]).vertex, off), DrawingError);
}

TEST(Drawing, DeleteVertexKeepsValidity) {
  for (const OnePlaneDrawing& d : sample()) {
    for (VertexId v : d.graph().vertices()) {
      OnePlaneDrawing out = delete_vertex_from_drawing(d, v);
      ASSERT_TRUE(validate_drawing(out).ok()) << validate_drawing(out).summary();
      EXPECT_EQ(out.graph(), d.graph().remove_vertices({v}));
    }
  }
}

TEST(Drawing, InsertEdgeBetweenAcrossComponents) {
  OnePlaneDrawing d = disjoint_union(cycle_drawing(3), cycle_drawing(3));
  OnePlaneDrawing joined = insert_edge_between(d, V(0), V(3));
  EXPECT_TRUE(validate_drawing(joined).ok());
  EXPECT_EQ(joined.graph().num_components(), 1);
}

TEST(Drawing, RandomDrawingsAreDeterministic) {
  EXPECT_EQ(random_1plane_drawing(20, 7), random_1plane_drawing(20, 7));
  EXPECT_EQ(random_planar_drawing(20, 7).num_crossings(), 0);
}
