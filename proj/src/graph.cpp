#include "dyncol/graph.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace dyncol {

std::ostream& operator<<(std::ostream& os, VertexId v) { return os << v.value; }

namespace {

std::string describe(VertexId v) {
  std::ostringstream out;
  out << "unknown vertex " << v;
  return out.str();
}

}  // namespace

void Graph::insert_vertex(VertexId v) { adjacency_.try_emplace(v); }

void Graph::insert_edge(VertexId u, VertexId v) {
  if (u == v) {
    throw GraphError("loop requested at vertex " + std::to_string(u.value));
  }
  auto iu = adjacency_.find(u);
  auto iv = adjacency_.find(v);
  if (iu == adjacency_.end()) throw GraphError(describe(u));
  if (iv == adjacency_.end()) throw GraphError(describe(v));
  if (iu->second.insert(v).second) {
    iv->second.insert(u);
    ++edge_count_;
  }
}

void Graph::erase_edge(VertexId u, VertexId v) {
  auto iu = adjacency_.find(u);
  if (iu == adjacency_.end() || !iu->second.erase(v)) return;
  adjacency_.at(v).erase(u);
  --edge_count_;
}

void Graph::erase_vertex(VertexId v) {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw GraphError(describe(v));
  for (VertexId w : it->second) adjacency_.at(w).erase(v);
  edge_count_ -= static_cast<int>(it->second.size());
  adjacency_.erase(it);
}

Graph Graph::add_edge(VertexId u, VertexId v) const {
  Graph copy = *this;
  copy.insert_edge(u, v);
  return copy;
}

Graph Graph::remove_vertices(const std::set<VertexId>& doomed) const {
  for (VertexId v : doomed) {
    if (!has_vertex(v)) throw GraphError(describe(v));
  }
  Graph result;
  for (const auto& [v, nbrs] : adjacency_) {
    if (doomed.contains(v)) continue;
    auto& row = result.adjacency_[v];
    for (VertexId w : nbrs) {
      if (!doomed.contains(w)) row.insert(w);
    }
    result.edge_count_ += static_cast<int>(row.size());
  }
  result.edge_count_ /= 2;
  return result;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto it = adjacency_.find(u);
  return it != adjacency_.end() && it->second.contains(v);
}

int Graph::degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

const std::set<VertexId>& Graph::neighbors(VertexId v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw GraphError(describe(v));
  return it->second;
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adjacency_.size());
  for (const auto& entry : adjacency_) out.push_back(entry.first);
  return out;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (const auto& [u, nbrs] : adjacency_) {
    for (VertexId v : nbrs) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& entry : adjacency_) best = std::max(best, static_cast<int>(entry.second.size()));
  return best;
}

VertexId Graph::next_vertex_id() const {
  if (adjacency_.empty()) return VertexId{0};
  return VertexId{adjacency_.rbegin()->first.value + 1};
}

int Graph::num_components() const {
  std::set<VertexId> seen;
  int components = 0;
  for (const auto& entry : adjacency_) {
    if (seen.contains(entry.first)) continue;
    ++components;
    std::vector<VertexId> stack{entry.first};
    seen.insert(entry.first);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : adjacency_.at(v)) {
        if (seen.insert(w).second) stack.push_back(w);
      }
    }
  }
  return components;
}

Subdivision two_subdivision(const Graph& g) {
  Subdivision result;
  for (VertexId v : g.vertices()) {
    result.graph.insert_vertex(v);
    result.branch.emplace(v, v);
  }
  int next = g.next_vertex_id().value;
  for (const auto& [u, v] : g.edges()) {
    VertexId mid{next++};
    result.graph.insert_vertex(mid);
    result.graph.insert_edge(u, mid);
    result.graph.insert_edge(mid, v);
    result.subdivision_vertices.insert(mid);
    result.midpoint_of.emplace(mid, std::make_pair(u, v));
  }
  return result;
}

bool two_planar_edge_bound_check(const Graph& g) {
  if (g.num_vertices() < 3) {
    throw GraphError("edge bound check needs at least 3 vertices");
  }
  return g.num_edges() <= 5 * g.num_vertices() - 10;
}

Graph empty_graph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.insert_vertex(VertexId{i});
  return g;
}

Graph path_graph(int n) {
  Graph g = empty_graph(n);
  for (int i = 0; i + 1 < n; ++i) g.insert_edge(VertexId{i}, VertexId{i + 1});
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.insert_edge(VertexId{n - 1}, VertexId{0});
  return g;
}

Graph complete_graph(int n) {
  Graph g = empty_graph(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.insert_edge(VertexId{i}, VertexId{j});
  }
  return g;
}

Graph relabel(const Graph& g, const std::map<VertexId, VertexId>& perm) {
  Graph out;
  for (VertexId v : g.vertices()) out.insert_vertex(perm.at(v));
  for (const auto& [u, v] : g.edges()) out.insert_edge(perm.at(u), perm.at(v));
  return out;
}

}  // namespace dyncol
