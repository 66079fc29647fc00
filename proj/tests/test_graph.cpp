#include <gtest/gtest.h>

#include "dyncol/catalog.hpp"
#include "dyncol/graph.hpp"

using namespace dyncol;

namespace {
VertexId V(int i) { return VertexId{i}; }
}  // namespace

TEST(Graph, DegreesOfSmallFamilies) {
  EXPECT_EQ(complete_graph(4).degree(V(2)), 3);
  EXPECT_EQ(cycle_graph(6).degree(V(0)), 2);
  EXPECT_EQ(path_graph(3).degree(V(0)), 1);
  EXPECT_EQ(empty_graph(1).degree(V(0)), 0);
  EXPECT_THROW((void)cycle_graph(4).degree(V(9)), GraphError);
}

TEST(Graph, RemoveVerticesDropsIncidentEdges) {
  Graph g = cycle_graph(5).remove_vertices({V(0)});
  EXPECT_EQ(g.num_vertices(), 4);
  EXPECT_EQ(g.num_edges(), 3);
  EXPECT_TRUE(isomorphic(g, path_graph(4)));
  EXPECT_EQ(cycle_graph(5).remove_vertices({}), cycle_graph(5));
}

TEST(Graph, AddEdgeIsIdempotent) {
  EXPECT_TRUE(isomorphic(path_graph(3).add_edge(V(0), V(2)), cycle_graph(3)));
  EXPECT_EQ(cycle_graph(4).add_edge(V(1), V(0)), cycle_graph(4));
  EXPECT_THROW((void)cycle_graph(4).add_edge(V(1), V(1)), GraphError);
}

TEST(Graph, TwoSubdivisionIds) {
  Graph k3 = complete_graph(3);
  Subdivision s = two_subdivision(k3);
  // Edges in lexicographic order: 01, 02, 12.
  EXPECT_TRUE(s.graph.has_edge(V(0), V(3)) && s.graph.has_edge(V(3), V(1)));
  EXPECT_TRUE(s.graph.has_edge(V(0), V(4)) && s.graph.has_edge(V(4), V(2)));
  EXPECT_TRUE(s.graph.has_edge(V(1), V(5)) && s.graph.has_edge(V(5), V(2)));
  EXPECT_FALSE(s.graph.has_edge(V(0), V(1)));
}

TEST(Graph, SubdivisionCounts) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : all_graphs(n)) {
      Graph s = two_subdivision(g).graph;
      EXPECT_EQ(s.num_vertices(), g.num_vertices() + g.num_edges());
      EXPECT_EQ(s.num_edges(), 2 * g.num_edges());
    }
  }
}

TEST(Graph, TwoPlanarEdgeBound) {
  EXPECT_TRUE(two_planar_edge_bound_check(complete_graph(7)));
  EXPECT_TRUE(two_planar_edge_bound_check(complete_graph(8)));
  EXPECT_FALSE(two_planar_edge_bound_check(complete_graph(9)));
  EXPECT_TRUE(two_planar_edge_bound_check(cycle_graph(5)));
}

TEST(Graph, Components) {
  EXPECT_EQ(cycle_graph(5).num_components(), 1);
  EXPECT_EQ(empty_graph(3).num_components(), 3);
}
