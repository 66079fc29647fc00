#include <gtest/gtest.h>

#include "dyncol/catalog.hpp"
#include "dyncol/io.hpp"

using namespace dyncol;

TEST(Io, GraphRoundTrip) {
  Graph g = complete_graph(5).remove_vertices({VertexId{2}});
  EXPECT_EQ(parse_graph(format_graph(g)), g);
}

TEST(Io, DrawingRoundTripOnFixtures) {
  for (const Fixture& f : fixtures()) {
    OnePlaneDrawing d = parse_drawing(format_drawing(f.drawing));
    EXPECT_EQ(d, f.drawing) << f.name;
  }
}

TEST(Io, ListsAndColoringRoundTrip) {
  ListAssignment l{{VertexId{0}, {1, 2}}, {VertexId{3}, {4, 7, 9}}};
  EXPECT_EQ(parse_lists(format_lists(l)), l);
  Coloring c{{VertexId{0}, 2}, {VertexId{5}, 1}};
  EXPECT_EQ(parse_coloring(format_coloring(c)), c);
}

TEST(Io, ErrorsCarryLineNumbers) {
  try {
    (void)parse_coloring("c 0 1\n# note\nc 1 zero\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW((void)parse_coloring("c 0 1\nc 0 2\n"), ParseError);
  EXPECT_THROW((void)parse_coloring("c 0 -1\n"), ParseError);
  EXPECT_THROW((void)parse_drawing("v 0\nq 1\n"), ParseError);
}

TEST(Io, AnyGraphAcceptsDrawings) {
  std::string text = format_drawing(fixture("k6").drawing);
  EXPECT_TRUE(looks_like_drawing(text));
  EXPECT_EQ(parse_any_graph(text), complete_graph(6));
  EXPECT_FALSE(looks_like_drawing(format_graph(cycle_graph(4))));
}
