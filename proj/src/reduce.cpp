#include "dyncol/reduce.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "dyncol/io.hpp"

namespace dyncol {

namespace {

std::string str(VertexId v) { return std::to_string(v.value); }

// Least vertex of `pool` outside `excluded`.
std::optional<VertexId> least_except(const std::set<VertexId>& pool, std::initializer_list<VertexId> excluded,
                                     const std::vector<VertexId>& more = {}) {
  for (VertexId x : pool) {
    if (std::find(excluded.begin(), excluded.end(), x) != excluded.end()) continue;
    if (std::find(more.begin(), more.end(), x) != more.end()) continue;
    return x;
  }
  return std::nullopt;
}

class Builder {
 public:
  Builder(ConfigKind kind, const OnePlaneDrawing& d) {
    cfg_.kind = kind;
    cfg_.recipe.kind = kind;
    cfg_.recipe.parent = d.graph();
    cfg_.fingerprint = drawing_fingerprint(d);
  }

  Builder& role(const std::string& name, std::optional<VertexId> v) {
    if (v) cfg_.roles.emplace_back(name, *v);
    return *this;
  }
  Builder& roles(const std::string& prefix, const std::vector<VertexId>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) role(prefix + std::to_string(i + 1), vs[i]);
    return *this;
  }
  Builder& remove(VertexId v) {
    cfg_.deleted.insert(v);
    return *this;
  }

  ReducibleConfig& cfg() { return cfg_; }

 private:
  ReducibleConfig cfg_;
};

RecipeStep step(VertexId v, std::vector<std::optional<VertexId>> forbidden, const std::vector<VertexId>& more = {}) {
  RecipeStep s{v, {}};
  for (const auto& f : forbidden) {
    if (f && std::find(s.forbidden.begin(), s.forbidden.end(), *f) == s.forbidden.end()) s.forbidden.push_back(*f);
  }
  for (VertexId f : more) {
    if (std::find(s.forbidden.begin(), s.forbidden.end(), f) == s.forbidden.end()) s.forbidden.push_back(f);
  }
  return s;
}

std::vector<VertexId> as_vector(const std::set<VertexId>& s) { return {s.begin(), s.end()}; }

// ---------------------------------------------------------------------------
// Detection, one function per kind. Each returns at most one configuration
// per anchor vertex, anchors ascending.

std::vector<ReducibleConfig> find_min_deg1(const OnePlaneDrawing& d, int) {
  const Graph& g = d.graph();
  std::vector<ReducibleConfig> out;
  for (VertexId u : g.vertices()) {
    if (g.degree(u) > 1) continue;
    Builder b(ConfigKind::MinDeg1, d);
    b.role("u", u).remove(u);
    std::optional<VertexId> v;
    std::optional<VertexId> v2;
    if (g.degree(u) == 1) {
      v = *g.neighbors(u).begin();
      v2 = least_except(g.neighbors(*v), {u});
    }
    b.role("v", v).role("v'", v2);
    b.cfg().recipe.steps = {step(u, {v, v2})};
    out.push_back(std::move(b.cfg()));
  }
  return out;
}

std::vector<ReducibleConfig> find_adjacent_twos(const OnePlaneDrawing& d, int) {
  const Graph& g = d.graph();
  std::vector<ReducibleConfig> out;
  for (VertexId u : g.vertices()) {
    if (g.degree(u) != 2) continue;
    for (VertexId v : g.neighbors(u)) {
      if (g.degree(v) != 2) continue;
      VertexId x = *least_except(g.neighbors(u), {v});
      VertexId y = *least_except(g.neighbors(v), {u});
      auto x1 = least_except(g.neighbors(x), {u, v});
      auto y1 = least_except(g.neighbors(y), {u, v});
      Builder b(ConfigKind::AdjacentTwos, d);
      b.role("u", u).role("v", v).role("x", x).role("y", y).role("x1", x1).role("y1", y1).remove(u).remove(v);
      b.cfg().recipe.steps = {step(u, {x, y, x1}), step(v, {u, x, y, y1})};
      out.push_back(std::move(b.cfg()));
      break;
    }
  }
  return out;
}

std::vector<ReducibleConfig> find_small_edge2(const OnePlaneDrawing& d, int ell) {
  const Graph& g = d.graph();
  std::vector<ReducibleConfig> out;
  for (VertexId u : g.vertices()) {
    if (g.degree(u) != 2) continue;
    for (VertexId v : g.neighbors(u)) {
      if (g.degree(v) < 3 || g.degree(v) > ell - 1) continue;
      VertexId z = *least_except(g.neighbors(u), {v});
      std::vector<VertexId> xs, xps, ys;
      for (VertexId w : g.neighbors(v)) {
        if (w == u) continue;
        if (g.degree(w) == 2) {
          xs.push_back(w);
          xps.push_back(*least_except(g.neighbors(w), {v}));
        } else if (g.degree(w) >= 3) {
          ys.push_back(w);
        }
      }
      Builder b(ConfigKind::SmallEdge2, d);
      b.role("u", u).role("v", v).role("z", z).roles("x", xs).roles("x'", xps).roles("y", ys).remove(u).remove(v);
      for (VertexId x : xs) b.remove(x);
      std::vector<VertexId> fv = xps;
      fv.insert(fv.end(), ys.begin(), ys.end());
      auto& steps = b.cfg().recipe.steps;
      steps.push_back(step(v, {z}, fv));
      for (std::size_t i = 0; i < xs.size(); ++i) steps.push_back(step(xs[i], {v, xps[i]}));
      std::optional<VertexId> third = !xs.empty() ? xs.front() : (!ys.empty() ? std::optional{ys.front()} : std::nullopt);
      steps.push_back(step(u, {z, v, third}));
      out.push_back(std::move(b.cfg()));
      break;
    }
  }
  return out;
}

std::vector<ReducibleConfig> find_small_edge_general(const OnePlaneDrawing& d, int ell) {
  const Graph& g = d.graph();
  std::vector<ReducibleConfig> out;
  auto lower = [&](VertexId a, VertexId b) {
    return std::pair{g.degree(a), a.value} < std::pair{g.degree(b), b.value};
  };
  for (VertexId u : g.vertices()) {
    if (g.degree(u) < 3 || g.degree(u) > ell - 1) continue;
    for (VertexId v : g.neighbors(u)) {
      if (g.degree(v) < 3 || g.degree(v) > ell - 1 || !lower(u, v)) continue;
      std::vector<VertexId> us = as_vector(g.neighbors(u));
      std::erase(us, v);
      std::vector<VertexId> vs = as_vector(g.neighbors(v));
      std::erase(vs, u);
      Builder b(ConfigKind::SmallEdgeGeneral, d);
      b.role("u", u).role("v", v).roles("u", us).roles("v", vs).remove(u).remove(v);
      auto& r = b.cfg().recipe;
      r.steps = {step(v, {us.front()}, vs), step(u, {v}, us)};
      r.branch_on = vs;
      r.alternate = {step(u, {vs.front()}, us), step(v, {vs.front(), u, us.front()})};
      out.push_back(std::move(b.cfg()));
      break;
    }
  }
  return out;
}

std::vector<ReducibleConfig> find_triangle_small(const OnePlaneDrawing& d, int ell) {
  const Graph& g = d.graph();
  std::vector<ReducibleConfig> out;
  for (VertexId u : g.vertices()) {
    if (g.degree(u) > ell - 1) continue;
    std::optional<std::pair<VertexId, VertexId>> tri;
    for (VertexId a : g.neighbors(u)) {
      for (VertexId c : g.neighbors(u)) {
        if (a < c && g.has_edge(a, c) && !tri) tri = std::pair{a, c};
      }
    }
    if (!tri) continue;
    Builder b(ConfigKind::TriangleSmall, d);
    b.role("u", u).role("v", tri->first).role("w", tri->second).remove(u);
    b.cfg().recipe.steps = {step(u, {}, as_vector(g.neighbors(u)))};
    out.push_back(std::move(b.cfg()));
  }
  return out;
}

// Face corners (prev, node, next) of true vertices, first corner per vertex
// in face-id order.
struct Corner {
  FaceId face;
  int degree;
  NodeIndex prev;
  NodeIndex here;
  NodeIndex next;
  Dart in;   // prev -> here
  Dart out;  // here -> next
};

std::map<VertexId, std::vector<Corner>> corners(const AssociatedPlaneGraph& a) {
  std::map<VertexId, std::vector<Corner>> out;
  for (FaceId f = 0; f < a.num_faces(); ++f) {
    const Face& face = a.face(f);
    if (face.lone) continue;
    int k = face.degree();
    for (int i = 0; i < k; ++i) {
      Dart in = face.walk[(i + k - 1) % k];
      Dart o = face.walk[i];
      NodeIndex here = a.tail(o);
      if (a.is_false(here)) continue;
      out[a.node(here).vertex].push_back({f, k, a.tail(in), here, a.head(o), in, o});
    }
  }
  return out;
}

std::vector<ReducibleConfig> find_false_triangle(const OnePlaneDrawing& d, int ell) {
  const Graph& g = d.graph();
  AssociatedPlaneGraph a(d);
  std::vector<ReducibleConfig> out;
  for (const auto& [u, list] : corners(a)) {
    if (g.degree(u) > ell - 3) continue;
    for (const Corner& c : list) {
      if (c.degree != 3) continue;
      // One of the corner's neighbors is the crossing p, the other is w.
      for (bool p_next : {true, false}) {
        NodeIndex p = p_next ? c.next : c.prev;
        NodeIndex wn = p_next ? c.prev : c.next;
        if (!a.is_false(p) || a.is_false(wn)) continue;
        VertexId w = a.node(wn).vertex;
        EdgeId uv = a.edge_of(p_next ? c.out : c.in);
        CrossingPair cp = a.node(p).crossing;
        EdgeId ww2 = cp.other(uv);
        VertexId v = d.endpoints(uv).other(u);
        if (!d.endpoints(ww2).has_end(w)) continue;
        VertexId w2 = d.endpoints(ww2).other(w);
        if (v == w || !g.has_edge(u, w)) continue;
        std::vector<VertexId> xs = as_vector(g.neighbors(u));
        std::erase(xs, v);
        std::erase(xs, w);
        auto v2 = least_except(g.neighbors(v), {u, w, w2});
        Builder b(ConfigKind::FalseTriangleTrueSmall, d);
        b.role("u", u).role("v", v).role("w", w).role("w'", w2).role("v'", v2).roles("x", xs).remove(u);
        if (!g.has_edge(v, w)) b.cfg().added_edge = std::pair{v, w};
        b.cfg().recipe.steps = {step(u, {v, w, v2, w2}, xs)};
        out.push_back(std::move(b.cfg()));
        break;
      }
      if (!out.empty() && out.back().role("u") == u) break;
    }
  }
  return out;
}

std::vector<ReducibleConfig> find_big_face(const OnePlaneDrawing& d, int ell) {
  const Graph& g = d.graph();
  AssociatedPlaneGraph a(d);
  std::vector<ReducibleConfig> out;
  for (const auto& [u, list] : corners(a)) {
    if (g.degree(u) > ell - 3 || g.degree(u) < 2) continue;
    for (const Corner& c : list) {
      if (c.degree < 4) continue;
      bool prev_true = !a.is_false(c.prev);
      bool next_true = !a.is_false(c.next);
      if (!prev_true && !next_true) continue;
      if (prev_true && next_true) {
        VertexId w = a.node(c.prev).vertex;
        VertexId v = a.node(c.next).vertex;
        if (v == w) continue;
        std::vector<VertexId> xs = as_vector(g.neighbors(u));
        std::erase(xs, v);
        std::erase(xs, w);
        auto v2 = least_except(g.neighbors(v), {u, w}, xs);
        std::vector<VertexId> ex = xs;
        if (v2) ex.push_back(*v2);
        auto w2 = least_except(g.neighbors(w), {u, v}, ex);
        Builder b(ConfigKind::BigFaceSmall, d);
        b.role("u", u).role("v", v).role("w", w).role("v'", v2).role("w'", w2).roles("x", xs).remove(u);
        if (!g.has_edge(v, w)) b.cfg().added_edge = std::pair{v, w};
        b.cfg().recipe.steps = {step(u, {v, w, v2, w2}, xs)};
        out.push_back(std::move(b.cfg()));
        break;
      }
      // v is the true walk neighbor; w the crossing on the edge uu'.
      NodeIndex vn = next_true ? c.next : c.prev;
      NodeIndex wn = next_true ? c.prev : c.next;
      VertexId v = a.node(vn).vertex;
      EdgeId uu2 = a.edge_of(next_true ? c.in : c.out);
      VertexId u2 = d.endpoints(uu2).other(u);
      EdgeId other = a.node(wn).crossing.other(uu2);
      if (u2 == v) continue;
      std::vector<VertexId> xs = as_vector(g.neighbors(u));
      std::erase(xs, v);
      std::erase(xs, u2);
      auto u3 = least_except(g.neighbors(u2), {u, v}, xs);
      std::vector<VertexId> ex = xs;
      if (u3) ex.push_back(*u3);
      auto v2 = least_except(g.neighbors(v), {u}, ex);
      Builder b(ConfigKind::BigFaceSmall, d);
      b.role("u", u).role("v", v).role("u'", u2).role("u''", u3).role("v'", v2).roles("x", xs).remove(u);
      if (!g.has_edge(u2, v)) {
        b.cfg().added_edge = std::pair{u2, v};
        b.cfg().crossed_by = other;
      }
      b.cfg().recipe.steps = {step(u, {v, u2, u3, v2}, xs)};
      out.push_back(std::move(b.cfg()));
      break;
    }
  }
  return out;
}

using Finder = std::vector<ReducibleConfig> (*)(const OnePlaneDrawing&, int);

Finder finder(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::MinDeg1: return find_min_deg1;
    case ConfigKind::AdjacentTwos: return find_adjacent_twos;
    case ConfigKind::SmallEdge2: return find_small_edge2;
    case ConfigKind::SmallEdgeGeneral: return find_small_edge_general;
    case ConfigKind::TriangleSmall: return find_triangle_small;
    case ConfigKind::FalseTriangleTrueSmall: return find_false_triangle;
    case ConfigKind::BigFaceSmall: return find_big_face;
  }
  throw ReductionError("unknown configuration kind");
}

constexpr ConfigKind kScanOrder[] = {
    ConfigKind::MinDeg1,          ConfigKind::AdjacentTwos,           ConfigKind::SmallEdge2,
    ConfigKind::SmallEdgeGeneral, ConfigKind::TriangleSmall,          ConfigKind::FalseTriangleTrueSmall,
    ConfigKind::BigFaceSmall,
};

// ---------------------------------------------------------------------------
// Reductions on the drawing

// u'v drawn along u'-w-u-v, crossing only `other`.
OnePlaneDrawing contract_through(const OnePlaneDrawing& d, VertexId u, VertexId u2, VertexId v, EdgeId other) {
  EdgeId uu2 = *d.edge_between(u, u2);
  EdgeId uv = *d.edge_between(u, v);
  CrossingPair old = CrossingPair::of(uu2, other);
  auto rot = d.crossing_rotation(old);
  if (!rot) throw ReductionError("crossing without rotation");
  OnePlaneDrawing out = d;
  EdgeId fresh = out.next_edge_id();
  out.insert_edge(fresh, u2, v);
  out.replace_in_rotation(u2, uu2, fresh);
  out.replace_in_rotation(v, uv, fresh);
  out.erase_vertex(u);
  out.insert_crossing(fresh, other);
  CrossingRotation mapped = *rot;
  for (HalfEdge& h : mapped) {
    if (h.edge != uu2) continue;
    h = h.end == u ? HalfEdge{fresh, v} : HalfEdge{fresh, u2};
  }
  CrossingPair now = CrossingPair::of(fresh, other);
  out.set_crossing_rotation(now, mapped);
  const DrawnEdge& o = out.endpoints(other);
  if (o.has_end(u2) || o.has_end(v)) out = uncross_adjacent(out, now);
  return out;
}

bool all_same_color(const std::vector<VertexId>& vs, const Coloring& c) {
  if (vs.empty()) return false;
  Color first = c.at(vs.front());
  return std::all_of(vs.begin(), vs.end(), [&](VertexId v) { return c.at(v) == first; });
}

std::string forbidden_text(const RecipeStep& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.forbidden.size(); ++i) out += (i ? "," : "") + str(s.forbidden[i]);
  return out + "}";
}

}  // namespace

std::string_view to_string(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::MinDeg1: return "MinDeg1";
    case ConfigKind::AdjacentTwos: return "AdjacentTwos";
    case ConfigKind::SmallEdge2: return "SmallEdge2";
    case ConfigKind::SmallEdgeGeneral: return "SmallEdgeGeneral";
    case ConfigKind::TriangleSmall: return "TriangleSmall";
    case ConfigKind::FalseTriangleTrueSmall: return "FalseTriangleTrueSmall";
    case ConfigKind::BigFaceSmall: return "BigFaceSmall";
  }
  return "?";
}

std::optional<VertexId> ReducibleConfig::role(std::string_view name) const {
  for (const auto& [n, v] : roles) {
    if (n == name) return v;
  }
  return std::nullopt;
}

std::string ReducibleConfig::describe() const {
  std::string out(to_string(kind));
  for (const auto& [n, v] : roles) out += " " + n + "=" + str(v);
  if (added_edge) out += " +" + str(added_edge->first) + "-" + str(added_edge->second);
  return out;
}

std::size_t drawing_fingerprint(const OnePlaneDrawing& d) { return std::hash<std::string>{}(format_drawing(d)); }

std::vector<ReducibleConfig> find_configurations(const OnePlaneDrawing& d, ConfigKind kind, int ell) {
  return finder(kind)(d, ell);
}

std::optional<ReducibleConfig> find_reducible_configuration(const OnePlaneDrawing& d, int ell) {
  for (ConfigKind kind : kScanOrder) {
    auto found = finder(kind)(d, ell);
    if (!found.empty()) return std::move(found.front());
  }
  return std::nullopt;
}

Reduction reduce(const OnePlaneDrawing& d, const ReducibleConfig& cfg) {
  if (drawing_fingerprint(d) != cfg.fingerprint || !(d.graph() == cfg.recipe.parent)) {
    throw StaleConfiguration(cfg.describe() + " does not belong to this drawing");
  }
  OnePlaneDrawing out = d;
  if (cfg.kind == ConfigKind::BigFaceSmall && cfg.crossed_by) {
    out = contract_through(d, *cfg.role("u"), cfg.added_edge->first, cfg.added_edge->second, *cfg.crossed_by);
  } else {
    for (VertexId v : cfg.deleted) out.erase_vertex(v);
    if (cfg.added_edge) out = insert_edge_between(out, cfg.added_edge->first, cfg.added_edge->second);
  }
  Diagnostics diag = validate_drawing(out);
  if (!diag.ok()) throw ReductionError(cfg.describe() + " produced an invalid drawing: " + diag.summary());
  if (out.measure() >= d.measure()) throw ReductionError(cfg.describe() + " did not decrease |V|+|E|");
  return {std::move(out), cfg.recipe};
}

Coloring extend_coloring(const Coloring& reduced, const ExtensionRecipe& recipe, const ListAssignment& lists) {
  const Graph& g = recipe.parent;
  Coloring c = reduced;
  const auto& steps =
      (!recipe.branch_on.empty() && all_same_color(recipe.branch_on, reduced)) ? recipe.alternate : recipe.steps;

  auto neighborhood_ok = [&](VertexId w) {
    if (g.degree(w) < 2) return true;
    std::optional<Color> first;
    for (VertexId x : g.neighbors(w)) {
      auto it = c.find(x);
      if (it == c.end()) return true;
      if (!first) {
        first = it->second;
      } else if (*first != it->second) {
        return true;
      }
    }
    return false;
  };

  std::function<bool(std::size_t)> dfs = [&](std::size_t i) {
    if (i == steps.size()) return true;
    const RecipeStep& s = steps[i];
    ColorList forbidden;
    for (VertexId f : s.forbidden) {
      auto it = c.find(f);
      if (it == c.end()) throw ExtensionError("step " + str(s.vertex) + " forbids uncolored " + str(f));
      forbidden.insert(it->second);
    }
    auto list = lists.find(s.vertex);
    if (list == lists.end()) throw ExtensionError("no list at " + str(s.vertex));
    std::vector<Color> candidates;
    for (Color col : list->second) {
      if (!forbidden.contains(col)) candidates.push_back(col);
    }
    if (candidates.empty()) {
      throw ExtensionError("empty candidate set coloring " + str(s.vertex) + " avoiding " + forbidden_text(s));
    }
    for (Color col : candidates) {
      bool proper = std::none_of(g.neighbors(s.vertex).begin(), g.neighbors(s.vertex).end(), [&](VertexId x) {
        auto it = c.find(x);
        return it != c.end() && it->second == col;
      });
      if (!proper) continue;
      c[s.vertex] = col;
      bool ok = neighborhood_ok(s.vertex);
      for (VertexId x : g.neighbors(s.vertex)) ok = ok && neighborhood_ok(x);
      if (ok && dfs(i + 1)) return true;
      c.erase(s.vertex);
    }
    return false;
  };

  if (!dfs(0)) throw ExtensionError(std::string(to_string(recipe.kind)) + " recipe admits no extension");
  if (c.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw ExtensionError(std::string(to_string(recipe.kind)) + " extension is not total");
  }
  if (auto bad = first_violation(g, c, true)) throw ExtensionError("extension is not dynamic: " + *bad);
  if (!respects_lists(c, lists)) throw ExtensionError("extension leaves the lists");
  return c;
}

std::optional<OnePlaneDrawing> improve_drawing_6face(const OnePlaneDrawing& d) {
  constexpr int ell = 11;
  if (d.num_crossings() < 3) return std::nullopt;
  AssociatedPlaneGraph a(d);
  std::set<NodeIndex> special2;
  for (const Special4Face& s : special_4_faces(a, ell)) {
    if (a.degree(s.low) == 2) special2.insert(s.low);
  }
  for (FaceId f = 0; f < a.num_faces(); ++f) {
    if (a.face_degree(f) != 6) continue;
    std::vector<NodeIndex> nodes = a.face_nodes(f);
    for (int offset = 0; offset < 2; ++offset) {
      std::vector<VertexId> small;
      bool fits = true;
      for (int i = 0; i < 6 && fits; ++i) {
        bool want_true = (i % 2) == offset;
        if (a.is_false(nodes[i]) == want_true) fits = false;
        if (want_true && fits) {
          if (!special2.contains(nodes[i])) fits = false;
          else small.push_back(a.node(nodes[i]).vertex);
        }
      }
      std::sort(small.begin(), small.end());
      if (!fits || std::adjacent_find(small.begin(), small.end()) != small.end()) continue;
      OnePlaneDrawing out = d;
      struct Moved {
        VertexId x;
        std::array<std::pair<VertexId, EdgeId>, 2> ends;
      };
      std::vector<Moved> moved;
      for (std::size_t i = 1; i < small.size(); ++i) {
        Moved m{small[i], {}};
        int k = 0;
        for (EdgeId e : d.rotation(small[i])) m.ends[k++] = {d.endpoints(e).other(small[i]), e};
        moved.push_back(m);
        out.erase_vertex(small[i]);
      }
      try {
        for (const Moved& m : moved) {
          out = insert_vertex_between(out, m.x, m.ends[0].first, m.ends[0].second, m.ends[1].first,
                                      m.ends[1].second);
        }
      } catch (const DrawingError&) {
        continue;
      }
      if (validate_drawing(out).ok() && out.graph() == d.graph() && out.num_crossings() == d.num_crossings() - 3) {
        return out;
      }
    }
  }
  return std::nullopt;
}

std::string TraceLine::str() const {
  std::ostringstream os;
  os << kind;
  if (!detail.empty()) os << ' ' << detail;
  os << " : " << before << " -> " << after;
  return os.str();
}

ListAssignment uniform_lists(const Graph& g, int ell) {
  ColorList list;
  for (Color c = 1; c <= ell; ++c) list.insert(c);
  ListAssignment out;
  for (VertexId v : g.vertices()) out[v] = list;
  return out;
}

ColorRun color_1planar(const OnePlaneDrawing& d, const ListAssignment& lists, const ColorOptions& options) {
  Diagnostics diag = validate_drawing(d);
  if (!diag.ok()) throw DrawingError("invalid drawing: " + diag.summary());
  for (VertexId v : d.graph().vertices()) {
    auto it = lists.find(v);
    if (it == lists.end() || static_cast<int>(it->second.size()) < options.ell) {
      throw ColoringError("list at " + str(v) + " has fewer than " + std::to_string(options.ell) + " colors");
    }
  }
  ColorRun run;
  std::vector<ExtensionRecipe> stack;
  OnePlaneDrawing cur = d;
  Coloring base;
  while (true) {
    const Graph& g = cur.graph();
    if (g.num_vertices() <= options.base_vertices) {
      auto c = find_list_coloring(g, lists, true, options.solver);
      if (!c) throw ColoringError("no dynamic list coloring of the " + std::to_string(g.num_vertices()) + "-vertex base");
      run.trace.push_back({"Base", "n=" + std::to_string(g.num_vertices()), cur.measure(), cur.measure()});
      base = std::move(*c);
      break;
    }
    if (auto cfg = find_reducible_configuration(cur, options.ell)) {
      int before = cur.measure();
      Reduction r = reduce(cur, *cfg);
      std::string detail = cfg->describe().substr(to_string(cfg->kind).size());
      if (!detail.empty() && detail.front() == ' ') detail.erase(0, 1);
      run.trace.push_back({std::string(to_string(cfg->kind)), detail, before, r.drawing.measure()});
      stack.push_back(std::move(r.recipe));
      cur = std::move(r.drawing);
      continue;
    }
    if (auto better = improve_drawing_6face(cur)) {
      run.trace.push_back({"Redraw6Face", "crossings", cur.num_crossings(), better->num_crossings()});
      cur = std::move(*better);
      continue;
    }
    run.used_fallback = true;
    run.trace.push_back({"Fallback", "n=" + std::to_string(g.num_vertices()), cur.measure(), cur.measure()});
    auto c = find_list_coloring(g, lists, true, options.solver);
    if (!c) throw ColoringError("exact fallback found no dynamic list coloring");
    base = std::move(*c);
    break;
  }
  Coloring c = std::move(base);
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) c = extend_coloring(c, *it, lists);
  if (auto bad = first_violation(d.graph(), c, true)) throw ColoringError("result is not dynamic: " + *bad);
  if (!respects_lists(c, lists)) throw ColoringError("result leaves the lists");
  run.coloring = std::move(c);
  return run;
}

}  // namespace dyncol
