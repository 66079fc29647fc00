#pragma once

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dyncol/graph.hpp"

namespace dyncol {

class DrawingError : public Error {
 public:
  using Error::Error;
};

struct EdgeId {
  int value = 0;

  friend constexpr auto operator<=>(EdgeId, EdgeId) = default;
};

std::ostream& operator<<(std::ostream& os, EdgeId e);

/// Two edges crossing each other. Stored with `first < second`.
struct CrossingPair {
  EdgeId first;
  EdgeId second;

  static CrossingPair of(EdgeId a, EdgeId b) { return a < b ? CrossingPair{a, b} : CrossingPair{b, a}; }
  [[nodiscard]] EdgeId other(EdgeId e) const { return e == first ? second : first; }

  friend constexpr auto operator<=>(const CrossingPair&, const CrossingPair&) = default;
};

/// The piece of `edge` between its crossing point and the endpoint `end`.
struct HalfEdge {
  EdgeId edge;
  VertexId end;

  friend constexpr auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

struct DrawnEdge {
  VertexId u;
  VertexId v;

  [[nodiscard]] VertexId other(VertexId x) const { return x == u ? v : u; }
  [[nodiscard]] bool has_end(VertexId x) const { return x == u || x == v; }

  friend bool operator==(const DrawnEdge&, const DrawnEdge&) = default;
};

using CrossingRotation = std::array<HalfEdge, 4>;

/// A 1-plane drawing described combinatorially: the graph, its crossing
/// pairs, and a rotation system of the planarization (cyclic edge order at
/// every true vertex, cyclic half-edge order at every crossing).
///
/// Construction does not enforce 1-planarity; `validate_drawing` reports
/// problems. Only simplicity of the underlying graph is enforced eagerly.
/// Rotations are stored rotated so that their smallest entry comes first.
class OnePlaneDrawing {
 public:
  void insert_vertex(VertexId v);
  EdgeId insert_edge(VertexId u, VertexId v);
  void insert_edge(EdgeId id, VertexId u, VertexId v);
  void insert_crossing(EdgeId a, EdgeId b);
  void set_rotation(VertexId v, std::vector<EdgeId> order);
  void set_crossing_rotation(CrossingPair c, CrossingRotation order);

  /// Removes the edge, any crossing it takes part in, and its rotation entries.
  void erase_edge(EdgeId e);
  void erase_crossing(CrossingPair c);
  void erase_vertex(VertexId v);
  /// Replaces `from` by `to` in the rotation at `v`.
  void replace_in_rotation(VertexId v, EdgeId from, EdgeId to);
  /// Places `e` right after `anchor` in the rotation at `v`; appends when no anchor.
  void insert_in_rotation(VertexId v, std::optional<EdgeId> anchor, EdgeId e);

  [[nodiscard]] const Graph& graph() const { return graph_; }
  [[nodiscard]] const std::map<EdgeId, DrawnEdge>& edges() const { return edges_; }
  [[nodiscard]] const DrawnEdge& endpoints(EdgeId e) const;
  [[nodiscard]] std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;
  [[nodiscard]] const std::set<CrossingPair>& crossings() const { return crossings_; }
  /// The (first) crossing pair containing `e`.
  [[nodiscard]] std::optional<CrossingPair> crossing_of(EdgeId e) const;
  [[nodiscard]] bool has_rotation(VertexId v) const { return rotation_.contains(v); }
  [[nodiscard]] const std::vector<EdgeId>& rotation(VertexId v) const;
  [[nodiscard]] std::optional<CrossingRotation> crossing_rotation(CrossingPair c) const;
  [[nodiscard]] const std::map<VertexId, std::vector<EdgeId>>& rotations() const { return rotation_; }
  [[nodiscard]] const std::map<CrossingPair, CrossingRotation>& crossing_rotations() const {
    return crossing_rotation_;
  }

  [[nodiscard]] EdgeId next_edge_id() const;
  [[nodiscard]] int num_crossings() const { return static_cast<int>(crossings_.size()); }
  /// |V| + |E|, the size measure reductions must decrease.
  [[nodiscard]] int measure() const { return graph_.num_vertices() + graph_.num_edges(); }

  friend bool operator==(const OnePlaneDrawing&, const OnePlaneDrawing&) = default;

 private:
  Graph graph_;
  std::map<EdgeId, DrawnEdge> edges_;
  std::map<std::pair<VertexId, VertexId>, EdgeId> edge_index_;
  std::set<CrossingPair> crossings_;
  std::map<VertexId, std::vector<EdgeId>> rotation_;
  std::map<CrossingPair, CrossingRotation> crossing_rotation_;
};

struct Violation {
  std::string kind;
  std::string element;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Diagnostics {
  std::vector<Violation> violations;

  [[nodiscard]] bool ok() const { return violations.empty(); }
  [[nodiscard]] bool has(const std::string& kind) const;
  [[nodiscard]] std::string summary() const;
};

Diagnostics validate_drawing(const OnePlaneDrawing& d);

/// Fills in any missing crossing rotation with one of the two interleavings,
/// flipping choices until the rotation system is spherical. Throws when no
/// spherical choice is found.
void complete_crossing_rotations(OnePlaneDrawing& d);

using NodeIndex = int;
using Dart = int;
using FaceId = int;

/// A vertex of the planarization: a true vertex of G or a false vertex (crossing).
struct PlaneNode {
  bool is_false = false;
  VertexId vertex{};
  CrossingPair crossing{};
};

/// Edge of the planarization. Dart 2s runs tail->head, dart 2s+1 head->tail.
struct Segment {
  NodeIndex tail = 0;
  NodeIndex head = 0;
  EdgeId edge{};
};

struct Face {
  std::vector<Dart> walk;
  /// Set for the degree-0 face of an isolated vertex.
  std::optional<NodeIndex> lone;

  [[nodiscard]] int degree() const { return static_cast<int>(walk.size()); }
};

enum class FaceKind { True, False };

/// The associated plane graph G^x of a valid drawing, with traced faces.
/// Faces are traced per connected component; the outer face is not singled out.
class AssociatedPlaneGraph {
 public:
  explicit AssociatedPlaneGraph(const OnePlaneDrawing& d);

  [[nodiscard]] const OnePlaneDrawing& drawing() const { return *drawing_; }

  [[nodiscard]] int num_nodes() const { return static_cast<int>(nodes_.size()); }
  [[nodiscard]] int num_segments() const { return static_cast<int>(segments_.size()); }
  [[nodiscard]] int num_faces() const { return static_cast<int>(faces_.size()); }
  [[nodiscard]] int num_components() const { return num_components_; }

  [[nodiscard]] const PlaneNode& node(NodeIndex n) const { return nodes_.at(n); }
  [[nodiscard]] bool is_false(NodeIndex n) const { return nodes_.at(n).is_false; }
  [[nodiscard]] std::optional<NodeIndex> node_of(VertexId v) const;
  [[nodiscard]] std::optional<NodeIndex> node_of(CrossingPair c) const;
  [[nodiscard]] int degree(NodeIndex n) const { return static_cast<int>(rotation_.at(n).size()); }
  [[nodiscard]] const std::vector<Dart>& rotation(NodeIndex n) const { return rotation_.at(n); }
  [[nodiscard]] int component_of(NodeIndex n) const { return component_.at(n); }

  [[nodiscard]] const Segment& segment(int s) const { return segments_.at(s); }
  [[nodiscard]] static Dart reverse(Dart d) { return d ^ 1; }
  [[nodiscard]] NodeIndex tail(Dart d) const;
  [[nodiscard]] NodeIndex head(Dart d) const { return tail(reverse(d)); }
  [[nodiscard]] EdgeId edge_of(Dart d) const { return segments_.at(d / 2).edge; }
  [[nodiscard]] Dart next_in_face(Dart d) const;

  [[nodiscard]] const Face& face(FaceId f) const { return faces_.at(f); }
  [[nodiscard]] int face_degree(FaceId f) const { return faces_.at(f).degree(); }
  [[nodiscard]] FaceId face_of(Dart d) const { return dart_face_.at(d); }
  [[nodiscard]] int face_component(FaceId f) const;
  /// Nodes along the face walk, with multiplicity; {v} for a lone face.
  [[nodiscard]] std::vector<NodeIndex> face_nodes(FaceId f) const;
  /// Faces around `n`, one per corner, in rotation order. Entry i is the face
  /// at the corner just before rotation(n)[i].
  [[nodiscard]] std::vector<FaceId> faces_around(NodeIndex n) const;

 private:
  std::shared_ptr<const OnePlaneDrawing> drawing_;
  std::vector<PlaneNode> nodes_;
  std::map<VertexId, NodeIndex> vertex_node_;
  std::map<CrossingPair, NodeIndex> crossing_node_;
  std::vector<Segment> segments_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<int> dart_position_;
  std::vector<Face> faces_;
  std::vector<FaceId> dart_face_;
  std::vector<int> component_;
  int num_components_ = 0;
};

inline AssociatedPlaneGraph associated_plane_graph(const OnePlaneDrawing& d) { return AssociatedPlaneGraph(d); }

std::vector<FaceKind> classify_faces(const AssociatedPlaneGraph& a);

/// 4-face u x v y with d(u) >= ell, 2 <= d(v) <= 3 and x, y false.
struct Special4Face {
  FaceId face = 0;
  NodeIndex big = 0;
  NodeIndex low = 0;
};

std::vector<Special4Face> special_4_faces(const AssociatedPlaneGraph& a, int ell = 11);

/// Inserts a new uncrossed edge uv inside `face` (a face id of the drawing's
/// associated plane graph).
OnePlaneDrawing insert_edge_in_face(const OnePlaneDrawing& d, FaceId face, VertexId u, VertexId v);

/// Inserts a new uncrossed edge uv into some face shared by u and v (least
/// face id), or joins two components. Throws when u and v share no face.
OnePlaneDrawing insert_edge_between(const OnePlaneDrawing& d, VertexId u, VertexId v);

OnePlaneDrawing delete_vertex_from_drawing(const OnePlaneDrawing& d, VertexId u);

/// Adds a new vertex x with uncrossed edges ea = xa and eb = xb, drawn inside
/// the least face on which both a and b appear, or joining two components.
/// Throws when a and b share a component but no face.
OnePlaneDrawing insert_vertex_between(const OnePlaneDrawing& d, VertexId x, VertexId a, EdgeId ea, VertexId b,
                                      EdgeId eb);

/// Removes a crossing between two edges sharing an endpoint by swapping the
/// edges' positions in the common endpoint's rotation.
OnePlaneDrawing uncross_adjacent(const OnePlaneDrawing& d, CrossingPair c);

OnePlaneDrawing relabel_vertices(const OnePlaneDrawing& d, const std::map<VertexId, VertexId>& perm);

/// Crossing-free drawing of a graph whose rotation at each vertex is given
/// by ascending neighbor id. Correct only for graphs where that order is
/// planar (paths, cycles, stars, forests in general).
OnePlaneDrawing trivial_drawing(const Graph& g);

struct Point {
  double x = 0;
  double y = 0;
};

/// Builds a drawing from a straight-line layout: vertex i sits at points[i],
/// edge k joins edges[k]. Crossings are computed geometrically and rotations
/// follow counterclockwise angles.
OnePlaneDrawing straight_line_drawing(const std::vector<Point>& points,
                                      const std::vector<std::pair<int, int>>& edges);

}  // namespace dyncol
