#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dyncol {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GraphError : public Error {
 public:
  using Error::Error;
};

/// Stable vertex identifier. Deleting other vertices never renumbers it.
struct VertexId {
  int value = 0;

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

std::ostream& operator<<(std::ostream& os, VertexId v);

using Color = int;
using Coloring = std::map<VertexId, Color>;
using ColorList = std::set<Color>;
using ListAssignment = std::map<VertexId, ColorList>;

/// Simple undirected graph with value semantics.
///
/// The mutating members (`insert_vertex`, `insert_edge`) are meant for
/// construction; algorithms use the const members, which return new graphs.
class Graph {
 public:
  Graph() = default;

  void insert_vertex(VertexId v);
  /// Adds uv. Idempotent; throws on loops or unknown endpoints.
  void insert_edge(VertexId u, VertexId v);
  void erase_edge(VertexId u, VertexId v);
  void erase_vertex(VertexId v);

  [[nodiscard]] Graph add_edge(VertexId u, VertexId v) const;
  [[nodiscard]] Graph remove_vertices(const std::set<VertexId>& doomed) const;

  [[nodiscard]] bool has_vertex(VertexId v) const { return adjacency_.contains(v); }
  [[nodiscard]] bool has_edge(VertexId u, VertexId v) const;
  [[nodiscard]] int degree(VertexId v) const;
  [[nodiscard]] const std::set<VertexId>& neighbors(VertexId v) const;

  [[nodiscard]] std::vector<VertexId> vertices() const;
  /// Edges as (smaller, larger) pairs in lexicographic order.
  [[nodiscard]] std::vector<std::pair<VertexId, VertexId>> edges() const;
  [[nodiscard]] int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  [[nodiscard]] int num_edges() const { return edge_count_; }
  [[nodiscard]] int max_degree() const;
  /// Smallest id strictly larger than every present id (0 for the empty graph).
  [[nodiscard]] VertexId next_vertex_id() const;
  [[nodiscard]] int num_components() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::map<VertexId, std::set<VertexId>> adjacency_;
  int edge_count_ = 0;
};

/// Result of inserting a degree-two vertex on every edge.
struct Subdivision {
  Graph graph;
  /// Branch map M: V(G) -> V(G*). Original vertices keep their ids.
  std::map<VertexId, VertexId> branch;
  /// The new degree-two vertices S.
  std::set<VertexId> subdivision_vertices;
  /// For each new vertex, the original edge it sits on.
  std::map<VertexId, std::pair<VertexId, VertexId>> midpoint_of;
};

Subdivision two_subdivision(const Graph& g);

/// Necessary condition for 2-planarity: |E| <= 5|V| - 10. Requires |V| >= 3.
bool two_planar_edge_bound_check(const Graph& g);

Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

/// Vertex ids 0..n-1 relabeled by `perm` (perm[i] is the new id of vertex i).
Graph relabel(const Graph& g, const std::map<VertexId, VertexId>& perm);

}  // namespace dyncol

template <>
struct std::hash<dyncol::VertexId> {
  std::size_t operator()(dyncol::VertexId v) const noexcept { return std::hash<int>{}(v.value); }
};
