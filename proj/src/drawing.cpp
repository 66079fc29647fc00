#include "dyncol/drawing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

namespace dyncol {

std::ostream& operator<<(std::ostream& os, EdgeId e) { return os << e.value; }

namespace {

template <typename T>
void rotate_to_min(std::vector<T>& cyc) {
  if (cyc.empty()) return;
  std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
}

std::pair<VertexId, VertexId> key(VertexId u, VertexId v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }

std::string str(VertexId v) { return "vertex " + std::to_string(v.value); }
std::string str(EdgeId e) { return "edge " + std::to_string(e.value); }
std::string str(CrossingPair c) {
  return "crossing " + std::to_string(c.first.value) + "x" + std::to_string(c.second.value);
}

}  // namespace

// ---------------------------------------------------------------------------
// OnePlaneDrawing

void OnePlaneDrawing::insert_vertex(VertexId v) { graph_.insert_vertex(v); }

EdgeId OnePlaneDrawing::insert_edge(VertexId u, VertexId v) {
  EdgeId id = next_edge_id();
  insert_edge(id, u, v);
  return id;
}

void OnePlaneDrawing::insert_edge(EdgeId id, VertexId u, VertexId v) {
  if (edges_.contains(id)) throw DrawingError("duplicate " + str(id));
  if (u == v) throw DrawingError("loop at " + str(u));
  if (graph_.has_edge(u, v)) {
    throw DrawingError("parallel edge between " + str(u) + " and " + str(v));
  }
  graph_.insert_edge(u, v);
  edges_.emplace(id, DrawnEdge{u, v});
  edge_index_.emplace(key(u, v), id);
}

void OnePlaneDrawing::insert_crossing(EdgeId a, EdgeId b) {
  if (!edges_.contains(a)) throw DrawingError("crossing names unknown " + str(a));
  if (!edges_.contains(b)) throw DrawingError("crossing names unknown " + str(b));
  crossings_.insert(CrossingPair::of(a, b));
}

void OnePlaneDrawing::set_rotation(VertexId v, std::vector<EdgeId> order) {
  if (!graph_.has_vertex(v)) throw DrawingError("rotation at unknown " + str(v));
  rotate_to_min(order);
  rotation_[v] = std::move(order);
}

void OnePlaneDrawing::set_crossing_rotation(CrossingPair c, CrossingRotation order) {
  if (!crossings_.contains(c)) throw DrawingError("rotation at unknown " + str(c));
  std::vector<HalfEdge> tmp(order.begin(), order.end());
  rotate_to_min(tmp);
  std::copy(tmp.begin(), tmp.end(), order.begin());
  crossing_rotation_[c] = order;
}

void OnePlaneDrawing::erase_crossing(CrossingPair c) {
  crossings_.erase(c);
  crossing_rotation_.erase(c);
}

void OnePlaneDrawing::erase_edge(EdgeId e) {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw DrawingError("unknown " + str(e));
  const DrawnEdge ends = it->second;
  for (auto c = crossings_.begin(); c != crossings_.end();) {
    if (c->first == e || c->second == e) {
      crossing_rotation_.erase(*c);
      c = crossings_.erase(c);
    } else {
      ++c;
    }
  }
  for (VertexId x : {ends.u, ends.v}) {
    auto rot = rotation_.find(x);
    if (rot == rotation_.end()) continue;
    std::erase(rot->second, e);
    rotate_to_min(rot->second);
  }
  graph_.erase_edge(ends.u, ends.v);
  edge_index_.erase(key(ends.u, ends.v));
  edges_.erase(it);
}

void OnePlaneDrawing::erase_vertex(VertexId v) {
  if (!graph_.has_vertex(v)) throw DrawingError("unknown " + str(v));
  std::vector<EdgeId> incident;
  for (const auto& [id, ends] : edges_) {
    if (ends.has_end(v)) incident.push_back(id);
  }
  for (EdgeId e : incident) erase_edge(e);
  rotation_.erase(v);
  graph_.erase_vertex(v);
}

void OnePlaneDrawing::replace_in_rotation(VertexId v, EdgeId from, EdgeId to) {
  auto& rot = rotation_.at(v);
  auto it = std::find(rot.begin(), rot.end(), from);
  if (it == rot.end()) throw DrawingError(str(from) + " not in rotation at " + str(v));
  *it = to;
  rotate_to_min(rot);
}

void OnePlaneDrawing::insert_in_rotation(VertexId v, std::optional<EdgeId> anchor, EdgeId e) {
  auto& rot = rotation_[v];
  if (!anchor) {
    rot.push_back(e);
  } else {
    auto it = std::find(rot.begin(), rot.end(), *anchor);
    if (it == rot.end()) throw DrawingError(str(*anchor) + " not in rotation at " + str(v));
    rot.insert(it + 1, e);
  }
  rotate_to_min(rot);
}

const DrawnEdge& OnePlaneDrawing::endpoints(EdgeId e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw DrawingError("unknown " + str(e));
  return it->second;
}

std::optional<EdgeId> OnePlaneDrawing::edge_between(VertexId u, VertexId v) const {
  auto it = edge_index_.find(key(u, v));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<CrossingPair> OnePlaneDrawing::crossing_of(EdgeId e) const {
  for (const CrossingPair& c : crossings_) {
    if (c.first == e || c.second == e) return c;
  }
  return std::nullopt;
}

const std::vector<EdgeId>& OnePlaneDrawing::rotation(VertexId v) const {
  static const std::vector<EdgeId> kEmpty;
  auto it = rotation_.find(v);
  return it == rotation_.end() ? kEmpty : it->second;
}

std::optional<CrossingRotation> OnePlaneDrawing::crossing_rotation(CrossingPair c) const {
  auto it = crossing_rotation_.find(c);
  if (it == crossing_rotation_.end()) return std::nullopt;
  return it->second;
}

EdgeId OnePlaneDrawing::next_edge_id() const {
  return edges_.empty() ? EdgeId{0} : EdgeId{edges_.rbegin()->first.value + 1};
}

// ---------------------------------------------------------------------------
// Planarization

namespace {

/// Planarization built from a structurally sound drawing (every rotation is
/// present and lists exactly the right entries). Shared by validation and
/// AssociatedPlaneGraph.
struct Planarization {
  std::vector<PlaneNode> nodes;
  std::map<VertexId, NodeIndex> vertex_node;
  std::map<CrossingPair, NodeIndex> crossing_node;
  std::vector<Segment> segments;
  std::vector<std::vector<Dart>> rotation;
  std::vector<int> position;
  std::vector<Face> faces;
  std::vector<FaceId> dart_face;
  std::vector<int> component;
  int components = 0;

  NodeIndex tail(Dart d) const {
    const Segment& s = segments[d / 2];
    return (d % 2 == 0) ? s.tail : s.head;
  }
  Dart next(Dart d) const {
    Dart back = d ^ 1;
    NodeIndex at = tail(back);
    const auto& rot = rotation[at];
    return rot[(position[back] + 1) % rot.size()];
  }
};

Planarization planarize(const OnePlaneDrawing& d) {
  Planarization p;
  for (VertexId v : d.graph().vertices()) {
    p.vertex_node.emplace(v, static_cast<NodeIndex>(p.nodes.size()));
    p.nodes.push_back(PlaneNode{false, v, {}});
  }
  std::map<EdgeId, CrossingPair> crossed;
  for (const CrossingPair& c : d.crossings()) {
    p.crossing_node.emplace(c, static_cast<NodeIndex>(p.nodes.size()));
    p.nodes.push_back(PlaneNode{true, VertexId{-1}, c});
    crossed.emplace(c.first, c);
    crossed.emplace(c.second, c);
  }
  // Segment reaching endpoint `end` of edge e, and whether the segment's tail is `end`.
  std::map<HalfEdge, int> half_segment;
  for (const auto& [id, ends] : d.edges()) {
    NodeIndex nu = p.vertex_node.at(ends.u);
    NodeIndex nv = p.vertex_node.at(ends.v);
    auto c = crossed.find(id);
    if (c == crossed.end()) {
      half_segment[{id, ends.u}] = static_cast<int>(p.segments.size());
      half_segment[{id, ends.v}] = static_cast<int>(p.segments.size());
      p.segments.push_back({nu, nv, id});
    } else {
      NodeIndex x = p.crossing_node.at(c->second);
      half_segment[{id, ends.u}] = static_cast<int>(p.segments.size());
      p.segments.push_back({nu, x, id});
      half_segment[{id, ends.v}] = static_cast<int>(p.segments.size());
      p.segments.push_back({x, nv, id});
    }
  }
  p.rotation.assign(p.nodes.size(), {});
  p.position.assign(2 * p.segments.size(), -1);
  auto dart_from = [&](int seg, NodeIndex from) { return p.segments[seg].tail == from ? 2 * seg : 2 * seg + 1; };
  for (const auto& [v, n] : p.vertex_node) {
    for (EdgeId e : d.rotation(v)) p.rotation[n].push_back(dart_from(half_segment.at({e, v}), n));
  }
  for (const auto& [c, n] : p.crossing_node) {
    CrossingRotation rot = *d.crossing_rotation(c);
    for (const HalfEdge& h : rot) p.rotation[n].push_back(dart_from(half_segment.at(h), n));
  }
  for (std::size_t n = 0; n < p.rotation.size(); ++n) {
    for (std::size_t i = 0; i < p.rotation[n].size(); ++i) p.position[p.rotation[n][i]] = static_cast<int>(i);
  }

  p.dart_face.assign(2 * p.segments.size(), -1);
  for (Dart start = 0; start < static_cast<Dart>(p.dart_face.size()); ++start) {
    if (p.dart_face[start] >= 0) continue;
    Face f;
    FaceId id = static_cast<FaceId>(p.faces.size());
    for (Dart d = start; p.dart_face[d] < 0; d = p.next(d)) {
      p.dart_face[d] = id;
      f.walk.push_back(d);
    }
    p.faces.push_back(std::move(f));
  }
  for (NodeIndex n = 0; n < static_cast<NodeIndex>(p.nodes.size()); ++n) {
    if (p.rotation[n].empty()) p.faces.push_back(Face{{}, n});
  }

  p.component.assign(p.nodes.size(), -1);
  for (NodeIndex root = 0; root < static_cast<NodeIndex>(p.nodes.size()); ++root) {
    if (p.component[root] >= 0) continue;
    std::vector<NodeIndex> stack{root};
    p.component[root] = p.components;
    while (!stack.empty()) {
      NodeIndex n = stack.back();
      stack.pop_back();
      for (Dart out : p.rotation[n]) {
        NodeIndex m = p.tail(out ^ 1);
        if (p.component[m] < 0) {
          p.component[m] = p.components;
          stack.push_back(m);
        }
      }
    }
    ++p.components;
  }
  return p;
}

/// Components whose Euler characteristic differs from 2.
std::vector<int> non_spherical_components(const Planarization& p) {
  std::vector<int> chi(p.components, 0);
  for (int c : p.component) ++chi[c];
  for (const Segment& s : p.segments) --chi[p.component[s.tail]];
  for (const Face& f : p.faces) {
    NodeIndex n = f.lone ? *f.lone : p.tail(f.walk.front());
    ++chi[p.component[n]];
  }
  std::vector<int> bad;
  for (int c = 0; c < p.components; ++c) {
    if (chi[c] != 2) bad.push_back(c);
  }
  return bad;
}

/// Structural checks that must pass before a planarization can be built.
void check_structure(const OnePlaneDrawing& d, Diagnostics& diag, bool require_crossing_rotations) {
  auto report = [&](std::string kind, std::string element) {
    diag.violations.push_back({std::move(kind), std::move(element)});
  };
  std::map<EdgeId, int> times_crossed;
  for (const CrossingPair& c : d.crossings()) {
    ++times_crossed[c.first];
    ++times_crossed[c.second];
    if (c.first == c.second) {
      report("edge crosses itself", str(c));
      continue;
    }
    const DrawnEdge& a = d.endpoints(c.first);
    const DrawnEdge& b = d.endpoints(c.second);
    if (a.has_end(b.u) || a.has_end(b.v)) report("crossing edges share an endpoint", str(c));
  }
  for (const auto& [e, times] : times_crossed) {
    if (times > 1) report("edge crossed twice", str(e));
  }
  for (VertexId v : d.graph().vertices()) {
    std::vector<EdgeId> incident;
    for (const auto& [id, ends] : d.edges()) {
      if (ends.has_end(v)) incident.push_back(id);
    }
    if (!d.has_rotation(v)) {
      if (!incident.empty()) report("missing rotation", str(v));
      continue;
    }
    std::vector<EdgeId> listed = d.rotation(v);
    std::sort(listed.begin(), listed.end());
    if (listed != incident) report("rotation does not match incident edges", str(v));
  }
  for (const CrossingPair& c : d.crossings()) {
    auto rot = d.crossing_rotation(c);
    if (!rot) {
      if (require_crossing_rotations) report("missing rotation", str(c));
      continue;
    }
    if (c.first == c.second) continue;
    const DrawnEdge& a = d.endpoints(c.first);
    const DrawnEdge& b = d.endpoints(c.second);
    std::vector<HalfEdge> expected{{c.first, a.u}, {c.first, a.v}, {c.second, b.u}, {c.second, b.v}};
    std::vector<HalfEdge> listed(rot->begin(), rot->end());
    std::sort(expected.begin(), expected.end());
    std::sort(listed.begin(), listed.end());
    if (listed != expected) {
      report("crossing rotation does not match crossing edges", str(c));
      continue;
    }
    if ((*rot)[0].edge != (*rot)[2].edge || (*rot)[1].edge != (*rot)[3].edge) {
      report("crossing edges do not interleave", str(c));
    }
  }
}

}  // namespace

bool Diagnostics::has(const std::string& kind) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

std::string Diagnostics::summary() const {
  std::ostringstream out;
  for (const Violation& v : violations) out << v.kind << ": " << v.element << '\n';
  return out.str();
}

Diagnostics validate_drawing(const OnePlaneDrawing& d) {
  Diagnostics diag;
  check_structure(d, diag, true);
  if (!diag.ok()) return diag;
  Planarization p = planarize(d);
  for (int c : non_spherical_components(p)) {
    diag.violations.push_back({"rotation system is not planar", "component " + std::to_string(c)});
  }
  for (const Segment& s : p.segments) {
    if (p.nodes[s.tail].is_false && p.nodes[s.head].is_false) {
      diag.violations.push_back({"adjacent false vertices", str(s.edge)});
    }
  }
  return diag;
}

void complete_crossing_rotations(OnePlaneDrawing& d) {
  std::vector<CrossingPair> open;
  for (const CrossingPair& c : d.crossings()) {
    if (!d.crossing_rotation(c)) open.push_back(c);
  }
  if (open.empty()) return;
  Diagnostics structural;
  check_structure(d, structural, false);
  if (!structural.ok()) throw DrawingError("cannot complete crossing rotations:\n" + structural.summary());

  auto interleaving = [&](const CrossingPair& c, bool flip) {
    const DrawnEdge& a = d.endpoints(c.first);
    const DrawnEdge& b = d.endpoints(c.second);
    return CrossingRotation{HalfEdge{c.first, a.u}, HalfEdge{c.second, flip ? b.v : b.u}, HalfEdge{c.first, a.v},
                            HalfEdge{c.second, flip ? b.u : b.v}};
  };
  std::vector<bool> flip(open.size(), false);
  for (std::size_t i = 0; i < open.size(); ++i) d.set_crossing_rotation(open[i], interleaving(open[i], false));
  auto face_count = [&] { return planarize(d).faces.size(); };

  // Greedy flips: each pass keeps a flip whenever it raises the face count,
  // which is maximal exactly for a spherical rotation system.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < open.size(); ++i) {
      std::size_t before = face_count();
      d.set_crossing_rotation(open[i], interleaving(open[i], !flip[i]));
      if (face_count() > before) {
        flip[i] = !flip[i];
        changed = true;
      } else {
        d.set_crossing_rotation(open[i], interleaving(open[i], flip[i]));
      }
    }
  }
  if (!non_spherical_components(planarize(d)).empty()) {
    throw DrawingError("no spherical choice of crossing rotations found");
  }
}

// ---------------------------------------------------------------------------
// AssociatedPlaneGraph

AssociatedPlaneGraph::AssociatedPlaneGraph(const OnePlaneDrawing& d) {
  Diagnostics diag = validate_drawing(d);
  if (!diag.ok()) throw DrawingError("invalid drawing:\n" + diag.summary());
  Planarization p = planarize(d);
  drawing_ = std::make_shared<const OnePlaneDrawing>(d);
  nodes_ = std::move(p.nodes);
  vertex_node_ = std::move(p.vertex_node);
  crossing_node_ = std::move(p.crossing_node);
  segments_ = std::move(p.segments);
  rotation_ = std::move(p.rotation);
  dart_position_ = std::move(p.position);
  faces_ = std::move(p.faces);
  dart_face_ = std::move(p.dart_face);
  component_ = std::move(p.component);
  num_components_ = p.components;
}

std::optional<NodeIndex> AssociatedPlaneGraph::node_of(VertexId v) const {
  auto it = vertex_node_.find(v);
  if (it == vertex_node_.end()) return std::nullopt;
  return it->second;
}

std::optional<NodeIndex> AssociatedPlaneGraph::node_of(CrossingPair c) const {
  auto it = crossing_node_.find(c);
  if (it == crossing_node_.end()) return std::nullopt;
  return it->second;
}

NodeIndex AssociatedPlaneGraph::tail(Dart d) const {
  const Segment& s = segments_.at(d / 2);
  return (d % 2 == 0) ? s.tail : s.head;
}

Dart AssociatedPlaneGraph::next_in_face(Dart d) const {
  Dart back = reverse(d);
  const auto& rot = rotation_.at(tail(back));
  return rot[(dart_position_.at(back) + 1) % rot.size()];
}

int AssociatedPlaneGraph::face_component(FaceId f) const {
  const Face& face = faces_.at(f);
  return component_.at(face.lone ? *face.lone : tail(face.walk.front()));
}

std::vector<NodeIndex> AssociatedPlaneGraph::face_nodes(FaceId f) const {
  const Face& face = faces_.at(f);
  if (face.lone) return {*face.lone};
  std::vector<NodeIndex> out;
  out.reserve(face.walk.size());
  for (Dart d : face.walk) out.push_back(tail(d));
  return out;
}

std::vector<FaceId> AssociatedPlaneGraph::faces_around(NodeIndex n) const {
  std::vector<FaceId> out;
  for (Dart d : rotation_.at(n)) out.push_back(dart_face_.at(d));
  return out;
}

// ---------------------------------------------------------------------------
// Classification

std::vector<FaceKind> classify_faces(const AssociatedPlaneGraph& a) {
  std::vector<FaceKind> kinds(a.num_faces(), FaceKind::True);
  for (FaceId f = 0; f < a.num_faces(); ++f) {
    for (NodeIndex n : a.face_nodes(f)) {
      if (a.is_false(n)) kinds[f] = FaceKind::False;
    }
  }
  return kinds;
}

std::vector<Special4Face> special_4_faces(const AssociatedPlaneGraph& a, int ell) {
  std::vector<Special4Face> out;
  for (FaceId f = 0; f < a.num_faces(); ++f) {
    if (a.face_degree(f) != 4) continue;
    std::vector<NodeIndex> n = a.face_nodes(f);
    for (int offset = 0; offset < 2; ++offset) {
      NodeIndex u = n[offset];
      NodeIndex v = n[offset + 2];
      NodeIndex x = n[offset + 1];
      NodeIndex y = n[(offset + 3) % 4];
      if (!a.is_false(x) || !a.is_false(y) || a.is_false(u) || a.is_false(v)) continue;
      if (a.degree(u) >= ell && a.degree(v) >= 2 && a.degree(v) <= 3) out.push_back({f, u, v});
      if (a.degree(v) >= ell && a.degree(u) >= 2 && a.degree(u) <= 3) out.push_back({f, v, u});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Edits

namespace {

/// Rotation anchor for a new edge at the first corner of `x` on face `f`:
/// the edge after which the new edge goes, or nullopt for an isolated vertex.
std::optional<std::optional<EdgeId>> corner_anchor(const AssociatedPlaneGraph& a, FaceId f, NodeIndex x) {
  const Face& face = a.face(f);
  if (face.lone) {
    if (*face.lone == x) return std::optional<EdgeId>{};
    return std::nullopt;
  }
  for (Dart d : face.walk) {
    if (a.head(d) == x) return std::optional<EdgeId>{a.edge_of(d)};
  }
  return std::nullopt;
}

OnePlaneDrawing insert_at(const OnePlaneDrawing& d, VertexId u, std::optional<EdgeId> anchor_u, VertexId v,
                          std::optional<EdgeId> anchor_v) {
  OnePlaneDrawing out = d;
  EdgeId e = out.insert_edge(u, v);
  out.insert_in_rotation(u, anchor_u, e);
  out.insert_in_rotation(v, anchor_v, e);
  return out;
}

NodeIndex true_node(const AssociatedPlaneGraph& a, VertexId v) {
  auto n = a.node_of(v);
  if (!n) throw DrawingError("unknown " + str(v));
  return *n;
}

}  // namespace

OnePlaneDrawing insert_edge_in_face(const OnePlaneDrawing& d, FaceId face, VertexId u, VertexId v) {
  AssociatedPlaneGraph a(d);
  if (face < 0 || face >= a.num_faces()) throw DrawingError("unknown face " + std::to_string(face));
  if (u == v) throw DrawingError("loop at " + str(u));
  if (d.graph().has_edge(u, v)) throw DrawingError("edge " + str(u) + "-" + str(v) + " already exists");
  auto au = corner_anchor(a, face, true_node(a, u));
  auto av = corner_anchor(a, face, true_node(a, v));
  if (!au || !av) throw DrawingError("endpoints are not both on face " + std::to_string(face));
  return insert_at(d, u, *au, v, *av);
}

OnePlaneDrawing insert_edge_between(const OnePlaneDrawing& d, VertexId u, VertexId v) {
  AssociatedPlaneGraph a(d);
  if (u == v) throw DrawingError("loop at " + str(u));
  if (d.graph().has_edge(u, v)) throw DrawingError("edge " + str(u) + "-" + str(v) + " already exists");
  NodeIndex nu = true_node(a, u);
  NodeIndex nv = true_node(a, v);
  for (FaceId f = 0; f < a.num_faces(); ++f) {
    auto au = corner_anchor(a, f, nu);
    auto av = corner_anchor(a, f, nv);
    if (au && av) return insert_at(d, u, *au, v, *av);
  }
  if (a.component_of(nu) == a.component_of(nv)) {
    throw DrawingError(str(u) + " and " + str(v) + " share no face");
  }
  auto any_anchor = [&](NodeIndex n) -> std::optional<EdgeId> {
    if (a.rotation(n).empty()) return std::nullopt;
    return a.edge_of(a.rotation(n).front());
  };
  return insert_at(d, u, any_anchor(nu), v, any_anchor(nv));
}

OnePlaneDrawing delete_vertex_from_drawing(const OnePlaneDrawing& d, VertexId u) {
  if (!d.graph().has_vertex(u)) throw DrawingError("unknown " + str(u));
  OnePlaneDrawing out = d;
  out.erase_vertex(u);
  return out;
}

OnePlaneDrawing insert_vertex_between(const OnePlaneDrawing& d, VertexId x, VertexId a, EdgeId ea, VertexId b,
                                      EdgeId eb) {
  AssociatedPlaneGraph g(d);
  if (d.graph().has_vertex(x)) throw DrawingError(str(x) + " already exists");
  NodeIndex na = true_node(g, a);
  NodeIndex nb = true_node(g, b);
  for (FaceId f = 0; f < g.num_faces(); ++f) {
    auto aa = corner_anchor(g, f, na);
    auto ab = corner_anchor(g, f, nb);
    if (!aa || !ab) continue;
    OnePlaneDrawing out = d;
    out.insert_vertex(x);
    out.insert_edge(ea, x, a);
    out.insert_edge(eb, x, b);
    out.insert_in_rotation(a, *aa, ea);
    out.insert_in_rotation(b, *ab, eb);
    out.set_rotation(x, {ea, eb});
    return out;
  }
  if (g.component_of(na) == g.component_of(nb)) throw DrawingError(str(a) + " and " + str(b) + " share no face");
  auto any_anchor = [&](NodeIndex n) -> std::optional<EdgeId> {
    if (g.rotation(n).empty()) return std::nullopt;
    return g.edge_of(g.rotation(n).front());
  };
  OnePlaneDrawing out = d;
  out.insert_vertex(x);
  out.insert_edge(ea, x, a);
  out.insert_edge(eb, x, b);
  out.insert_in_rotation(a, any_anchor(na), ea);
  out.insert_in_rotation(b, any_anchor(nb), eb);
  out.set_rotation(x, {ea, eb});
  return out;
}

OnePlaneDrawing uncross_adjacent(const OnePlaneDrawing& d, CrossingPair c) {
  const DrawnEdge& a = d.endpoints(c.first);
  const DrawnEdge& b = d.endpoints(c.second);
  std::optional<VertexId> shared;
  for (VertexId x : {a.u, a.v}) {
    if (b.has_end(x)) shared = x;
  }
  if (!shared) throw DrawingError(str(c) + " involves edges without a common endpoint");
  OnePlaneDrawing out = d;
  out.erase_crossing(c);
  // Swap the two entries at the shared endpoint.
  std::vector<EdgeId> rot = out.rotation(*shared);
  for (EdgeId& e : rot) {
    if (e == c.first) {
      e = c.second;
    } else if (e == c.second) {
      e = c.first;
    }
  }
  out.set_rotation(*shared, rot);
  return out;
}

OnePlaneDrawing relabel_vertices(const OnePlaneDrawing& d, const std::map<VertexId, VertexId>& perm) {
  OnePlaneDrawing out;
  for (VertexId v : d.graph().vertices()) out.insert_vertex(perm.at(v));
  for (const auto& [id, ends] : d.edges()) out.insert_edge(id, perm.at(ends.u), perm.at(ends.v));
  for (const CrossingPair& c : d.crossings()) out.insert_crossing(c.first, c.second);
  for (const auto& [v, rot] : d.rotations()) out.set_rotation(perm.at(v), rot);
  for (const auto& [c, rot] : d.crossing_rotations()) {
    CrossingRotation mapped = rot;
    for (HalfEdge& h : mapped) h.end = perm.at(h.end);
    out.set_crossing_rotation(c, mapped);
  }
  return out;
}

OnePlaneDrawing trivial_drawing(const Graph& g) {
  OnePlaneDrawing out;
  for (VertexId v : g.vertices()) out.insert_vertex(v);
  for (const auto& [u, v] : g.edges()) out.insert_edge(u, v);
  for (VertexId v : g.vertices()) {
    std::vector<EdgeId> rot;
    for (VertexId w : g.neighbors(v)) rot.push_back(*out.edge_between(v, w));
    if (!rot.empty()) out.set_rotation(v, rot);
  }
  return out;
}

OnePlaneDrawing straight_line_drawing(const std::vector<Point>& points, const std::vector<std::pair<int, int>>& edges) {
  auto orient = [](Point a, Point b, Point c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); };
  OnePlaneDrawing out;
  for (std::size_t i = 0; i < points.size(); ++i) out.insert_vertex(VertexId{static_cast<int>(i)});
  for (std::size_t k = 0; k < edges.size(); ++k) {
    out.insert_edge(EdgeId{static_cast<int>(k)}, VertexId{edges[k].first}, VertexId{edges[k].second});
  }
  std::map<CrossingPair, Point> where;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, e] = edges[j];
      if (a == c || a == e || b == c || b == e) continue;
      Point p = points[a], q = points[b], r = points[c], s = points[e];
      double d1 = orient(p, q, r), d2 = orient(p, q, s), d3 = orient(r, s, p), d4 = orient(r, s, q);
      if (d1 * d2 < 0 && d3 * d4 < 0) {
        double t = d3 / (d3 - d4);
        CrossingPair cp = CrossingPair::of(EdgeId{static_cast<int>(i)}, EdgeId{static_cast<int>(j)});
        out.insert_crossing(cp.first, cp.second);
        where[cp] = Point{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
      }
    }
  }
  auto angle = [](Point from, Point to) { return std::atan2(to.y - from.y, to.x - from.x); };
  for (std::size_t i = 0; i < points.size(); ++i) {
    VertexId v{static_cast<int>(i)};
    std::vector<std::pair<double, EdgeId>> around;
    for (const auto& [id, ends] : out.edges()) {
      if (ends.has_end(v)) around.emplace_back(angle(points[i], points[ends.other(v).value]), id);
    }
    std::sort(around.begin(), around.end());
    std::vector<EdgeId> rot;
    for (const auto& entry : around) rot.push_back(entry.second);
    if (!rot.empty()) out.set_rotation(v, rot);
  }
  for (const auto& [c, at] : where) {
    std::vector<std::pair<double, HalfEdge>> around;
    for (EdgeId e : {c.first, c.second}) {
      const DrawnEdge& ends = out.endpoints(e);
      for (VertexId x : {ends.u, ends.v}) around.emplace_back(angle(at, points[x.value]), HalfEdge{e, x});
    }
    std::sort(around.begin(), around.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    out.set_crossing_rotation(c, {around[0].second, around[1].second, around[2].second, around[3].second});
  }
  return out;
}

}  // namespace dyncol
