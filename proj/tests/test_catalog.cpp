#include <gtest/gtest.h>

#include "dyncol/catalog.hpp"

using namespace dyncol;

TEST(Catalog, GraphCountsUpToIsomorphism) {
  std::vector<std::size_t> want{1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(all_graphs(n).size(), want[n - 1]) << n;
}

TEST(Catalog, ConnectedPlanarCounts) {
  std::vector<std::size_t> want{1, 1, 2, 6, 20, 99};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(connected_planar_graphs(n).size(), want[n - 1]) << n;
}

TEST(Catalog, Planarity) {
  EXPECT_TRUE(is_planar(complete_graph(4)));
  EXPECT_FALSE(is_planar(complete_graph(5)));
  EXPECT_TRUE(is_planar(complete_graph(5).remove_vertices({VertexId{0}})));
}

TEST(Catalog, Fixtures) {
  auto all = fixtures();
  EXPECT_GE(all.size(), 10u);
  for (const Fixture& f : all) EXPECT_TRUE(validate_drawing(f.drawing).ok()) << f.name;
  EXPECT_EQ(fixture("k6").drawing.graph(), complete_graph(6));
  EXPECT_EQ(fixture("k7-star").drawing.graph(), two_subdivision(complete_graph(7)).graph);
  EXPECT_THROW((void)fixture("nope"), Error);
}

TEST(Catalog, CompleteDrawings) {
  for (int n = 1; n <= 6; ++n) {
    OnePlaneDrawing d = complete_drawing(n);
    EXPECT_TRUE(validate_drawing(d).ok());
    EXPECT_EQ(d.graph(), complete_graph(n));
  }
  EXPECT_THROW((void)complete_drawing(7), DrawingError);
  for (int n = 2; n <= 7; ++n) EXPECT_TRUE(validate_drawing(complete_subdivision_drawing(n)).ok());
}

TEST(Catalog, RandomDrawingsValidate) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    EXPECT_TRUE(validate_drawing(random_planar_drawing(12, s)).ok());
    EXPECT_TRUE(validate_drawing(random_1plane_drawing(12, s)).ok());
  }
}
