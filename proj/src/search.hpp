#pragma once

#include <optional>
#include <vector>

#include "dyncol/coloring.hpp"

namespace dyncol::detail {

// Backtracking over dense vertex and color indices. Vertices are visited
// highest degree first; candidates are tried in the given order.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, bool dynamic);

  [[nodiscard]] int size() const { return static_cast<int>(ids_.size()); }
  [[nodiscard]] const std::vector<VertexId>& ids() const { return ids_; }
  [[nodiscard]] const std::vector<std::vector<int>>& adjacency() const { return adj_; }

  /// Colors 0..k-1, with color classes opened in order.
  std::optional<std::vector<int>> solve_k(int k, long long max_nodes);
  /// candidates[i] lists dense colors (< num_colors) allowed at vertex i.
  std::optional<std::vector<int>> solve_lists(const std::vector<std::vector<int>>& candidates, int num_colors,
                                              long long max_nodes);

  [[nodiscard]] long long nodes() const { return nodes_; }

 private:
  void reset(int num_colors);
  bool assign(int v, int c);
  void unassign(int v, int c);
  bool dfs(int pos);

  bool dynamic_;
  std::vector<VertexId> ids_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> order_;

  const std::vector<std::vector<int>>* candidates_ = nullptr;
  int k_ = 0;
  int max_used_ = -1;
  long long max_nodes_ = 0;
  long long nodes_ = 0;
  std::vector<int> color_;
  std::vector<int> uncolored_;
  std::vector<int> distinct_;
  std::vector<int> seen_;  // vertex-major, num_colors per vertex
  int num_colors_ = 0;
};

Coloring to_coloring(const std::vector<VertexId>& ids, const std::vector<int>& dense,
                     const std::vector<Color>& palette);

}  // namespace dyncol::detail
