#include <gtest/gtest.h>

#include <random>

#include "dyncol/catalog.hpp"
#include "dyncol/coloring.hpp"
#include "dyncol/io.hpp"

using namespace dyncol;

namespace {

VertexId V(int i) { return VertexId{i}; }

// Plain definition, written independently of the library checkers.
bool oracle_dynamic(const Graph& g, const Coloring& c) {
  for (auto [u, v] : g.edges()) {
    if (c.at(u) == c.at(v)) return false;
  }
  for (VertexId v : g.vertices()) {
    if (g.degree(v) < 2) continue;
    std::set<Color> seen;
    for (VertexId w : g.neighbors(v)) seen.insert(c.at(w));
    if (seen.size() < 2) return false;
  }
  return true;
}

// Tries every assignment vertex -> list entry.
bool oracle_list_colorable(const Graph& g, const ListAssignment& lists, bool dynamic) {
  std::vector<VertexId> vs = g.vertices();
  Coloring c;
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == vs.size()) {
      if (dynamic) return oracle_dynamic(g, c);
      for (auto [u, v] : g.edges()) {
        if (c.at(u) == c.at(v)) return false;
      }
      return true;
    }
    for (Color x : lists.at(vs[i])) {
      c[vs[i]] = x;
      if (go(i + 1)) return true;
    }
    return false;
  };
  return go(0);
}

int oracle_chi_d(const Graph& g) {
  for (int k = 1;; ++k) {
    ListAssignment l;
    for (VertexId v : g.vertices()) {
      for (int x = 1; x <= k; ++x) l[v].insert(x);
    }
    if (oracle_list_colorable(g, l, true)) return k;
  }
}

}  // namespace

TEST(Coloring, CheckersOnExamples) {
  Coloring c4{{V(0), 1}, {V(1), 2}, {V(2), 1}, {V(3), 2}};
  EXPECT_TRUE(is_proper(cycle_graph(4), c4));
  EXPECT_FALSE(is_dynamic(cycle_graph(4), c4));
  EXPECT_EQ(*first_violation(cycle_graph(4), c4, true), "monochromatic neighborhood at 0");
  EXPECT_EQ(*first_violation(complete_graph(2), {{V(0), 1}, {V(1), 1}}, false), "edge 0-1 is monochromatic");
  EXPECT_THROW((void)is_proper(cycle_graph(4), {{V(0), 1}}), ColoringError);
}

TEST(Coloring, DynamicCheckerMatchesDefinition) {
  std::mt19937 rng(3);
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : all_graphs(n)) {
      for (int trial = 0; trial < 20; ++trial) {
        Coloring c;
        for (VertexId v : g.vertices()) c[v] = 1 + static_cast<int>(rng() % 3);
        EXPECT_EQ(is_dynamic(g, c), oracle_dynamic(g, c));
      }
    }
  }
}

TEST(Coloring, ChiDynamicMatchesBruteForce) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : all_graphs(n)) {
      SolveReport r = chi_dynamic(g);
      EXPECT_EQ(r.value, oracle_chi_d(g)) << format_graph(g);
      EXPECT_TRUE(oracle_dynamic(g, r.witness));
    }
  }
}

TEST(Coloring, ChromaticNumbers) {
  EXPECT_EQ(chi(complete_graph(7)).value, 7);
  EXPECT_EQ(chi(cycle_graph(5)).value, 3);
  EXPECT_EQ(chi(cycle_graph(6)).value, 2);
  EXPECT_EQ(chi_dynamic(cycle_graph(5)).value, 5);
  EXPECT_EQ(chi_dynamic(path_graph(3)).value, 3);
}

TEST(Coloring, VertexCap) {
  SolverConfig tight;
  tight.max_vertices = 5;
  EXPECT_THROW((void)chi_dynamic(cycle_graph(6), tight), CapExceeded);
}

TEST(Coloring, ListColoringMatchesBruteForce) {
  std::mt19937 rng(11);
  for (int n = 3; n <= 5; ++n) {
    for (const Graph& g : all_graphs(n)) {
      for (int trial = 0; trial < 5; ++trial) {
        ListAssignment l;
        for (VertexId v : g.vertices()) {
          while (l[v].size() < 3) l[v].insert(1 + static_cast<int>(rng() % 5));
        }
        for (bool dynamic : {false, true}) {
          auto found = find_list_coloring(g, l, dynamic);
          EXPECT_EQ(found.has_value(), oracle_list_colorable(g, l, dynamic));
          if (found) {
            EXPECT_TRUE(respects_lists(*found, l));
            EXPECT_TRUE(dynamic ? oracle_dynamic(g, *found) : is_proper(g, *found));
          }
        }
      }
    }
  }
}

TEST(Coloring, EvenCycleFormula) {
  for (int m = 4; m <= 16; m += 2) EXPECT_EQ(chi_d_even_cycle(m), chi_dynamic(cycle_graph(m)).value) << m;
  EXPECT_THROW((void)chi_d_even_cycle(5), ColoringError);
}

TEST(Coloring, SubdivisionGapOnCycles) {
  SolverConfig wide;
  wide.max_vertices = 20;
  for (int n = 3; n <= 10; ++n) {
    EXPECT_EQ(subdivision_gap(n), chi_dynamic(cycle_graph(2 * n), wide).value - chi(cycle_graph(n)).value) << n;
  }
}

TEST(Coloring, LiftIsProper) {
  for (int n = 2; n <= 4; ++n) {
    for (const Graph& g : all_graphs(n)) {
      Subdivision s = two_subdivision(g);
      Coloring lifted = lift_coloring(g, s, chi_dynamic(s.graph).witness);
      EXPECT_TRUE(is_proper(g, lifted));
    }
  }
}
