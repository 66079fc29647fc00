#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "dyncol/coloring.hpp"
#include "search.hpp"

namespace dyncol {

namespace {

using Mask = unsigned;

bool has(Mask s, int i) { return (s >> i) & 1U; }

// Constraint graph for splitting supports: two parts of a color class can be
// renamed apart without harm when no edge (and, for dynamic colorings, no
// common neighbor) links them.
std::vector<Mask> split_graph(const std::vector<std::vector<int>>& adj, bool dynamic) {
  int n = static_cast<int>(adj.size());
  std::vector<Mask> h(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w : adj[v]) {
      h[v] |= 1U << w;
      if (!dynamic) continue;
      for (int x : adj[w]) {
        if (x != v) h[v] |= 1U << x;
      }
    }
  }
  return h;
}

bool connected_in(Mask s, const std::vector<Mask>& h) {
  Mask seen = s & (~s + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (int i = 0; i < static_cast<int>(h.size()); ++i) {
      if (has(frontier, i)) next |= h[i] & s;
    }
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

// Coefficient search in prod over edges (x_u - x_v), keeping only monomials
// whose exponents stay below ell. A surviving nonzero coefficient certifies
// ell-choosability of the constraint graph.
bool polynomial_certificate(const std::vector<std::pair<int, int>>& edges, int n, int ell) {
  if (ell < 1) return false;
  std::vector<long long> weight(n, 1);
  for (int i = 1; i < n; ++i) weight[i] = weight[i - 1] * ell;
  std::map<long long, long long> poly{{0, 1}};
  for (const auto& [u, v] : edges) {
    std::map<long long, long long> next;
    for (const auto& [key, coeff] : poly) {
      if ((key / weight[u]) % ell + 1 < ell) next[key + weight[u]] += coeff;
      if ((key / weight[v]) % ell + 1 < ell) next[key + weight[v]] -= coeff;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    poly = std::move(next);
    if (poly.empty()) return false;
  }
  return true;
}

class Enumerator {
 public:
  Enumerator(const Graph& g, int ell, bool dynamic, const SolverConfig& config)
      : search_(g, dynamic), ell_(ell), max_nodes_(config.max_nodes) {
    const auto& adj = search_.adjacency();
    n_ = search_.size();
    h_ = split_graph(adj, dynamic);
    for (int v = 0; v < n_; ++v) {
      if (h_[v] != 0) active_.push_back(v);
    }
    by_min_.resize(n_);
    for (Mask s = 1; s < (1U << n_); ++s) {
      if (std::popcount(s) < 2 || !connected_in(s, h_)) continue;
      by_min_[std::countr_zero(s)].push_back(s);
    }
    cover_.assign(n_, 0);
  }

  std::optional<std::vector<Mask>> run() {
    if (descend(0, 0)) return chosen_;
    return std::nullopt;
  }

  [[nodiscard]] long long assignments() const { return assignments_; }

  /// Lists at dense vertices; isolated vertices get their own fresh colors.
  [[nodiscard]] ListAssignment to_lists(const std::vector<Mask>& supports) const {
    ListAssignment lists;
    for (int v = 0; v < n_; ++v) lists[search_.ids()[v]];
    Color next = 1;
    for (Mask s : supports) {
      for (int v = 0; v < n_; ++v) {
        if (has(s, v)) lists[search_.ids()[v]].insert(next);
      }
      ++next;
    }
    for (int v = 0; v < n_; ++v) {
      auto& list = lists[search_.ids()[v]];
      while (static_cast<int>(list.size()) < ell_) list.insert(next++);
    }
    return lists;
  }

 private:
  // Chosen colors already color every non-isolated vertex; adding colors
  // can only keep it that way.
  bool colorable() {
    std::vector<std::vector<int>> candidates(n_);
    for (std::size_t k = 0; k < chosen_.size(); ++k) {
      for (int v = 0; v < n_; ++v) {
        if (has(chosen_[k], v)) candidates[v].push_back(static_cast<int>(k));
      }
    }
    int fresh = static_cast<int>(chosen_.size());
    for (int v = 0; v < n_; ++v) {
      if (h_[v] == 0) candidates[v].push_back(fresh);
      if (candidates[v].empty()) return false;
    }
    return search_.solve_lists(candidates, fresh + 1, max_nodes_).has_value();
  }

  bool compatible(Mask s) const {
    Mask reach = 0;
    for (int i = 0; i < n_; ++i) {
      if (has(s, i)) reach |= h_[i];
    }
    return std::all_of(chosen_.begin(), chosen_.end(), [&](Mask t) { return (s & t) || !(reach & t); });
  }

  // Supports are grouped by their least vertex; group `pos` of the active
  // vertices is filled with a nondecreasing run of indices from `start`.
  bool descend(std::size_t pos, std::size_t start) {
    if (++nodes_ > max_nodes_) throw CapExceeded("choosability search node cap exceeded");
    if (pos == active_.size()) {
      ++assignments_;
      return !colorable();
    }
    int v = active_[pos];
    if (cover_[v] == ell_) {
      if (pos + 1 < active_.size() && colorable()) return false;
      return descend(pos + 1, 0);
    }
    const auto& pool = by_min_[v];
    for (std::size_t i = start; i < pool.size(); ++i) {
      Mask s = pool[i];
      bool fits = true;
      for (int j = 0; j < n_ && fits; ++j) fits = !has(s, j) || cover_[j] < ell_;
      if (!fits || !compatible(s)) continue;
      for (int j = 0; j < n_; ++j) cover_[j] += has(s, j);
      chosen_.push_back(s);
      if (descend(pos, i)) return true;
      chosen_.pop_back();
      for (int j = 0; j < n_; ++j) cover_[j] -= has(s, j);
    }
    return false;
  }

  detail::ColoringSearch search_;
  int ell_;
  long long max_nodes_;
  int n_ = 0;
  std::vector<Mask> h_;
  std::vector<int> active_;
  std::vector<std::vector<Mask>> by_min_;
  std::vector<int> cover_;
  std::vector<Mask> chosen_;
  long long nodes_ = 0;
  long long assignments_ = 0;
};

}  // namespace

ChoosabilityReport choosable(const Graph& g, int ell, bool dynamic, const SolverConfig& config) {
  if (ell < 1) throw ColoringError("list size must be positive");
  if (g.num_vertices() > config.choosability_max_vertices || ell > config.choosability_max_ell) {
    throw CapExceeded("choosability caps are n <= " + std::to_string(config.choosability_max_vertices) +
                      ", ell <= " + std::to_string(config.choosability_max_ell));
  }
  ChoosabilityReport report;
  report.ell = ell;

  // When every dynamic requirement is a pairwise one (all degrees <= 2), the
  // problem is list coloring of a graph and the polynomial test applies.
  if (config.use_certificate && (!dynamic || g.max_degree() <= 2)) {
    detail::ColoringSearch search(g, dynamic);
    std::set<std::pair<int, int>> pairs;
    const auto& adj = search.adjacency();
    for (int v = 0; v < search.size(); ++v) {
      for (int w : adj[v]) pairs.insert(std::minmax(v, w));
      if (dynamic && adj[v].size() == 2) pairs.insert(std::minmax(adj[v][0], adj[v][1]));
    }
    if (polynomial_certificate({pairs.begin(), pairs.end()}, search.size(), ell)) {
      report.choosable = true;
      return report;
    }
  }

  Enumerator enumerator(g, ell, dynamic, config);
  auto bad = enumerator.run();
  report.assignments_checked = enumerator.assignments();
  if (!bad) {
    report.choosable = true;
    return report;
  }
  ListAssignment lists = enumerator.to_lists(*bad);
  if (find_list_coloring(g, lists, dynamic, config)) {
    throw ColoringError("choosability counterexample failed re-verification");
  }
  report.counterexample = std::move(lists);
  return report;
}

}  // namespace dyncol
