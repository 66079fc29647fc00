#include <gtest/gtest.h>

#include "dyncol/catalog.hpp"
#include "dyncol/coloring.hpp"
#include "dyncol/io.hpp"

using namespace dyncol;

TEST(Choosability, Cycles) {
  EXPECT_TRUE(choosable(cycle_graph(6), 3, true).choosable);
  EXPECT_TRUE(choosable(cycle_graph(8), 4, true).choosable);
  EXPECT_TRUE(choosable(empty_graph(1), 1, true).choosable);
  EXPECT_FALSE(choosable(cycle_graph(5), 4, true).choosable);
}

TEST(Choosability, CounterexampleIsGenuine) {
  ChoosabilityReport r = choosable(cycle_graph(8), 3, true);
  ASSERT_FALSE(r.choosable);
  ASSERT_TRUE(r.counterexample);
  for (const auto& [v, l] : *r.counterexample) EXPECT_EQ(l.size(), 3u);
  EXPECT_FALSE(find_list_coloring(cycle_graph(8), *r.counterexample, true));
}

// The certificate shortcut never changes an answer.
TEST(Choosability, CertificateAgreesWithEnumeration) {
  SolverConfig plain;
  plain.use_certificate = false;
  for (int n = 2; n <= 4; ++n) {
    for (const Graph& g : all_graphs(n)) {
      for (int ell = 1; ell <= 3; ++ell) {
        for (bool dynamic : {false, true}) {
          EXPECT_EQ(choosable(g, ell, dynamic).choosable, choosable(g, ell, dynamic, plain).choosable)
              << format_graph(g) << " ell=" << ell << " dynamic=" << dynamic;
        }
      }
    }
  }
}

TEST(Choosability, ChIsAtLeastChi) {
  for (const Graph& g : all_graphs(4)) {
    int k = chi(g).value;
    if (k > 1) EXPECT_FALSE(choosable(g, k - 1, false).choosable);
    int kd = chi_dynamic(g).value;
    if (kd > 1) EXPECT_FALSE(choosable(g, kd - 1, true).choosable);
  }
}

TEST(Choosability, K33IsNotTwoChoosable) {
  Graph g;
  for (int i = 0; i < 6; ++i) g.insert_vertex(VertexId{i});
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) g.insert_edge(VertexId{a}, VertexId{b});
  }
  EXPECT_FALSE(choosable(g, 2, false).choosable);
  EXPECT_TRUE(choosable(cycle_graph(4), 2, false).choosable);
}
