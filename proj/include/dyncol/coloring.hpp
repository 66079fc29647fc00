#pragma once

#include <optional>
#include <string>

#include "dyncol/graph.hpp"

namespace dyncol {

/// A search hit one of its configured limits.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ColoringError : public Error {
 public:
  using Error::Error;
};

struct SolverConfig {
  int max_vertices = 16;
  long long max_nodes = 500'000'000;
  int choosability_max_vertices = 8;
  int choosability_max_ell = 4;
  /// Try the polynomial certificate before enumerating list assignments.
  bool use_certificate = true;
};

bool is_proper(const Graph& g, const Coloring& c);
/// Proper, and every vertex of degree >= 2 sees at least two colors.
bool is_dynamic(const Graph& g, const Coloring& c);
/// Human-readable description of the first violated constraint, if any.
std::optional<std::string> first_violation(const Graph& g, const Coloring& c, bool dynamic);
bool respects_lists(const Coloring& c, const ListAssignment& lists);

struct SolveReport {
  int value = 0;
  Coloring witness;
  long long nodes = 0;
};

SolveReport chi(const Graph& g, const SolverConfig& config = {});
SolveReport chi_dynamic(const Graph& g, const SolverConfig& config = {});

/// Some coloring with c(v) in L(v) for all v, or nothing.
std::optional<Coloring> find_list_coloring(const Graph& g, const ListAssignment& lists, bool dynamic,
                                           const SolverConfig& config = {});

struct ChoosabilityReport {
  int ell = 0;
  bool choosable = false;
  std::optional<ListAssignment> counterexample;
  long long assignments_checked = 0;
};

ChoosabilityReport choosable(const Graph& g, int ell, bool dynamic, const SolverConfig& config = {});

/// Dynamic chromatic number of the even cycle C_m.
int chi_d_even_cycle(int m);
/// chi_d of the 2-subdivided n-cycle minus chi of the n-cycle.
int subdivision_gap(int n);

/// c(v) = c*(M(v)): a dynamic coloring of G* restricted to branch vertices.
Coloring lift_coloring(const Graph& g, const Subdivision& sub, const Coloring& c_star);

}  // namespace dyncol
