#include <gtest/gtest.h>

#include "dyncol/catalog.hpp"
#include "dyncol/coloring.hpp"
#include "dyncol/reduce.hpp"

using namespace dyncol;

namespace {

VertexId V(int i) { return VertexId{i}; }

std::vector<OnePlaneDrawing> sample() {
  std::vector<OnePlaneDrawing> out;
  for (const Fixture& f : fixtures()) out.push_back(f.drawing);
  for (std::uint64_t s = 0; s < 15; ++s) {
    out.push_back(random_planar_drawing(12 + static_cast<int>(s), s));
    out.push_back(random_1plane_drawing(12 + static_cast<int>(s), 700 + s));
  }
  return out;
}

}  // namespace

TEST(Reduce, FirstConfigurationKinds) {
  EXPECT_EQ(find_reducible_configuration(path_drawing(2))->kind, ConfigKind::MinDeg1);
  EXPECT_EQ(find_reducible_configuration(cycle_drawing(6))->kind, ConfigKind::AdjacentTwos);
  EXPECT_EQ(find_reducible_configuration(k6_drawing())->kind, ConfigKind::SmallEdgeGeneral);
}

// Every configuration of every kind reduces to a valid, strictly smaller drawing.
TEST(Reduce, EveryConfigurationReducesValidly) {
  const ConfigKind kinds[] = {ConfigKind::MinDeg1,          ConfigKind::AdjacentTwos,
                              ConfigKind::SmallEdge2,       ConfigKind::SmallEdgeGeneral,
                              ConfigKind::TriangleSmall,    ConfigKind::FalseTriangleTrueSmall,
                              ConfigKind::BigFaceSmall};
  std::map<ConfigKind, int> seen;
  for (const OnePlaneDrawing& d : sample()) {
    for (ConfigKind k : kinds) {
      for (const ReducibleConfig& c : find_configurations(d, k)) {
        Reduction r = reduce(d, c);
        ASSERT_TRUE(validate_drawing(r.drawing).ok()) << c.describe();
        EXPECT_LT(r.drawing.measure(), d.measure()) << c.describe();
        for (VertexId v : c.deleted) EXPECT_FALSE(r.drawing.graph().has_vertex(v));
        ++seen[k];
      }
    }
  }
  for (ConfigKind k : kinds) EXPECT_GT(seen[k], 0) << to_string(k);
}

// Coloring the reduced drawing and extending gives a dynamic coloring of the original.
TEST(Reduce, ExtensionAfterEachReduction) {
  for (const OnePlaneDrawing& d : sample()) {
    auto c = find_reducible_configuration(d);
    if (!c) continue;
    Reduction r = reduce(d, *c);
    ListAssignment lists = uniform_lists(d.graph(), 11);
    ColorRun inner = color_1planar(r.drawing, uniform_lists(r.drawing.graph(), 11));
    Coloring full = extend_coloring(inner.coloring, r.recipe, lists);
    EXPECT_TRUE(is_dynamic(d.graph(), full)) << c->describe();
  }
}

TEST(Reduce, StaleConfigurationIsRejected) {
  OnePlaneDrawing d = cycle_drawing(6);
  ReducibleConfig c = *find_reducible_configuration(d);
  OnePlaneDrawing other = cycle_drawing(7);
  EXPECT_THROW((void)reduce(other, c), StaleConfiguration);
}

TEST(Reduce, ExtensionReportsEmptyCandidates) {
  OnePlaneDrawing d = path_drawing(3);
  Reduction r = reduce(d, *find_reducible_configuration(d));
  ListAssignment lists{{V(0), {1, 2}}, {V(1), {1}}, {V(2), {2}}};
  EXPECT_THROW((void)extend_coloring({{V(1), 1}, {V(2), 2}}, r.recipe, lists), ExtensionError);
}

TEST(Reduce, SixFaceRedrawing) {
  OnePlaneDrawing d = six_face_drawing();
  auto better = improve_drawing_6face(d);
  ASSERT_TRUE(better);
  EXPECT_TRUE(validate_drawing(*better).ok());
  EXPECT_EQ(better->graph(), d.graph());
  EXPECT_EQ(better->num_crossings(), d.num_crossings() - 3);
  EXPECT_FALSE(improve_drawing_6face(k6_drawing()));
}

TEST(Reduce, ColorsRandomDrawingsWithoutFallback) {
  for (const OnePlaneDrawing& d : sample()) {
    ColorRun run = color_1planar(d, uniform_lists(d.graph(), 11));
    EXPECT_TRUE(is_dynamic(d.graph(), run.coloring));
    EXPECT_FALSE(run.used_fallback);
  }
}

TEST(Reduce, NonUniformLists) {
  OnePlaneDrawing d = random_1plane_drawing(30, 42);
  ListAssignment lists;
  int shift = 0;
  for (VertexId v : d.graph().vertices()) {
    for (int x = 0; x < 11; ++x) lists[v].insert(1 + (shift + 3 * x) % 25);
    shift += 7;
  }
  ColorRun run = color_1planar(d, lists);
  EXPECT_TRUE(is_dynamic(d.graph(), run.coloring));
  EXPECT_TRUE(respects_lists(run.coloring, lists));
}

TEST(Reduce, PreconditionOnListSize) {
  OnePlaneDrawing d = k6_drawing();
  EXPECT_THROW((void)color_1planar(d, uniform_lists(d.graph(), 10)), ColoringError);
}
