#include "dyncol/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "search.hpp"

namespace dyncol {

namespace {

std::string name(VertexId v) { return std::to_string(v.value); }

Color color_at(const Coloring& c, VertexId v) {
  auto it = c.find(v);
  if (it == c.end()) throw ColoringError("vertex " + name(v) + " is uncolored");
  return it->second;
}

void require_total(const Graph& g, const Coloring& c) {
  for (VertexId v : g.vertices()) color_at(c, v);
}

}  // namespace

std::optional<std::string> first_violation(const Graph& g, const Coloring& c, bool dynamic) {
  require_total(g, c);
  for (const auto& [u, v] : g.edges()) {
    if (c.at(u) == c.at(v)) return "edge " + name(u) + "-" + name(v) + " is monochromatic";
  }
  if (!dynamic) return std::nullopt;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) < 2) continue;
    std::set<Color> seen;
    for (VertexId w : g.neighbors(v)) seen.insert(c.at(w));
    if (seen.size() < 2) return "monochromatic neighborhood at " + name(v);
  }
  return std::nullopt;
}

bool is_proper(const Graph& g, const Coloring& c) { return !first_violation(g, c, false); }

bool is_dynamic(const Graph& g, const Coloring& c) { return !first_violation(g, c, true); }

bool respects_lists(const Coloring& c, const ListAssignment& lists) {
  for (const auto& [v, color] : c) {
    auto it = lists.find(v);
    if (it == lists.end() || !it->second.contains(color)) return false;
  }
  return true;
}

namespace detail {

ColoringSearch::ColoringSearch(const Graph& g, bool dynamic) : dynamic_(dynamic), ids_(g.vertices()) {
  std::map<VertexId, int> index;
  for (int i = 0; i < size(); ++i) index[ids_[i]] = i;
  adj_.resize(ids_.size());
  for (int i = 0; i < size(); ++i) {
    for (VertexId w : g.neighbors(ids_[i])) adj_[i].push_back(index.at(w));
  }
  order_.resize(ids_.size());
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(),
                   [&](int a, int b) { return adj_[a].size() > adj_[b].size(); });
}

void ColoringSearch::reset(int num_colors) {
  num_colors_ = num_colors;
  nodes_ = 0;
  max_used_ = -1;
  color_.assign(ids_.size(), -1);
  distinct_.assign(ids_.size(), 0);
  uncolored_.resize(ids_.size());
  for (int i = 0; i < size(); ++i) uncolored_[i] = static_cast<int>(adj_[i].size());
  seen_.assign(ids_.size() * static_cast<std::size_t>(num_colors), 0);
}

bool ColoringSearch::assign(int v, int c) {
  for (int w : adj_[v]) {
    if (color_[w] == c) return false;
  }
  for (int w : adj_[v]) {
    --uncolored_[w];
    if (seen_[w * num_colors_ + c]++ == 0) ++distinct_[w];
  }
  color_[v] = c;
  if (dynamic_) {
    for (int w : adj_[v]) {
      if (uncolored_[w] == 0 && adj_[w].size() >= 2 && distinct_[w] < 2) {
        unassign(v, c);
        return false;
      }
    }
  }
  return true;
}

void ColoringSearch::unassign(int v, int c) {
  for (int w : adj_[v]) {
    ++uncolored_[w];
    if (--seen_[w * num_colors_ + c] == 0) --distinct_[w];
  }
  color_[v] = -1;
}

bool ColoringSearch::dfs(int pos) {
  if (++nodes_ > max_nodes_) throw CapExceeded("search node cap of " + std::to_string(max_nodes_) + " exceeded");
  if (pos == size()) return true;
  int v = order_[pos];
  if (candidates_) {
    for (int c : (*candidates_)[v]) {
      if (!assign(v, c)) continue;
      if (dfs(pos + 1)) return true;
      unassign(v, c);
    }
    return false;
  }
  int saved = max_used_;
  int limit = std::min(k_ - 1, max_used_ + 1);
  for (int c = 0; c <= limit; ++c) {
    if (!assign(v, c)) continue;
    max_used_ = std::max(saved, c);
    if (dfs(pos + 1)) return true;
    unassign(v, c);
    max_used_ = saved;
  }
  return false;
}

std::optional<std::vector<int>> ColoringSearch::solve_k(int k, long long max_nodes) {
  reset(std::max(k, 1));
  candidates_ = nullptr;
  k_ = k;
  max_nodes_ = max_nodes;
  if (dfs(0)) return color_;
  return std::nullopt;
}

std::optional<std::vector<int>> ColoringSearch::solve_lists(const std::vector<std::vector<int>>& candidates,
                                                            int num_colors, long long max_nodes) {
  reset(std::max(num_colors, 1));
  candidates_ = &candidates;
  max_nodes_ = max_nodes;
  bool found = dfs(0);
  candidates_ = nullptr;
  if (found) return color_;
  return std::nullopt;
}

Coloring to_coloring(const std::vector<VertexId>& ids, const std::vector<int>& dense,
                     const std::vector<Color>& palette) {
  Coloring out;
  for (std::size_t i = 0; i < ids.size(); ++i) out[ids[i]] = palette[dense[i]];
  return out;
}

}  // namespace detail

namespace {

SolveReport solve_min(const Graph& g, bool dynamic, const SolverConfig& config) {
  if (g.num_vertices() > config.max_vertices) {
    throw CapExceeded("graph has " + std::to_string(g.num_vertices()) + " vertices, cap is " +
                      std::to_string(config.max_vertices));
  }
  SolveReport report;
  if (g.num_vertices() == 0) return report;
  int k = g.num_edges() > 0 ? 2 : 1;
  if (dynamic && g.max_degree() >= 2) k = 3;
  detail::ColoringSearch search(g, dynamic);
  std::vector<Color> palette;
  for (;; ++k) {
    auto found = search.solve_k(k, config.max_nodes - report.nodes);
    report.nodes += search.nodes();
    if (!found) continue;
    palette.resize(k);
    std::iota(palette.begin(), palette.end(), 1);
    report.value = k;
    report.witness = detail::to_coloring(search.ids(), *found, palette);
    return report;
  }
}

}  // namespace

SolveReport chi(const Graph& g, const SolverConfig& config) { return solve_min(g, false, config); }

SolveReport chi_dynamic(const Graph& g, const SolverConfig& config) { return solve_min(g, true, config); }

std::optional<Coloring> find_list_coloring(const Graph& g, const ListAssignment& lists, bool dynamic,
                                           const SolverConfig& config) {
  std::vector<Color> palette;
  for (VertexId v : g.vertices()) {
    auto it = lists.find(v);
    if (it == lists.end()) throw ColoringError("no list for vertex " + name(v));
    palette.insert(palette.end(), it->second.begin(), it->second.end());
  }
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  detail::ColoringSearch search(g, dynamic);
  std::vector<std::vector<int>> candidates(search.size());
  for (int i = 0; i < search.size(); ++i) {
    for (Color c : lists.at(search.ids()[i])) {
      candidates[i].push_back(static_cast<int>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin()));
    }
  }
  auto found = search.solve_lists(candidates, static_cast<int>(palette.size()), config.max_nodes);
  if (!found) return std::nullopt;
  return detail::to_coloring(search.ids(), *found, palette);
}

int chi_d_even_cycle(int m) {
  if (m < 4 || m % 2 != 0) throw ColoringError("even cycle length must be even and at least 4, got " + std::to_string(m));
  return (m / 2) % 3 == 0 ? 3 : 4;
}

int subdivision_gap(int n) {
  if (n < 3) throw ColoringError("cycle length must be at least 3, got " + std::to_string(n));
  switch (n % 6) {
    case 3:
      return 0;
    case 2:
    case 4:
      return 2;
    default:
      return 1;
  }
}

Coloring lift_coloring(const Graph& g, const Subdivision& sub, const Coloring& c_star) {
  Coloring c;
  for (VertexId v : g.vertices()) {
    auto it = sub.branch.find(v);
    if (it == sub.branch.end()) throw ColoringError("vertex " + name(v) + " has no branch vertex");
    c[v] = color_at(c_star, it->second);
  }
  return c;
}

}  // namespace dyncol
