#include "dyncol/discharge.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dyncol/reduce.hpp"

namespace dyncol {

namespace {

void move_charge(ChargeLedger& l, Rule rule, ElementRef from, ElementRef to, Charge amount) {
  l.transfers.push_back({rule, from, to, amount});
  l.final[from] -= amount;
  l.final[to] += amount;
}

// Walk incidences of a face, as node indices with multiplicity.
std::vector<NodeIndex> walk(const AssociatedPlaneGraph& a, FaceId f) {
  if (a.face(f).lone) return {};
  return a.face_nodes(f);
}

void apply_r1_r2(const AssociatedPlaneGraph& a, ChargeLedger& l, bool true_faces) {
  auto kinds = classify_faces(a);
  for (FaceId f = 0; f < a.num_faces(); ++f) {
    if (a.face_degree(f) != 3) continue;
    bool is_true = kinds[f] == FaceKind::True;
    if (is_true != true_faces) continue;
    int threshold = true_faces ? 11 : 9;
    Charge amount = true_faces ? Charge(1, 3) : Charge(1, 2);
    for (NodeIndex n : walk(a, f)) {
      if (!a.is_false(n) && a.degree(n) >= threshold) {
        move_charge(l, true_faces ? Rule::R1 : Rule::R2, ElementRef::node(n), ElementRef::face(f), amount);
      }
    }
  }
}

void apply_r3(const AssociatedPlaneGraph& a, ChargeLedger& l) {
  for (const Special4Face& s : special_4_faces(a, 11)) {
    move_charge(l, Rule::R3, ElementRef::node(s.big), ElementRef::face(s.face), 1);
    move_charge(l, Rule::R3, ElementRef::face(s.face), ElementRef::node(s.low), 1);
  }
}

void apply_r4(const AssociatedPlaneGraph& a, ChargeLedger& l, const std::set<NodeIndex>& special) {
  for (FaceId f = 0; f < a.num_faces(); ++f) {
    if (a.face_degree(f) < 5) continue;
    for (NodeIndex n : walk(a, f)) {
      if (special.contains(n) && a.degree(n) == 2) {
        move_charge(l, Rule::R4, ElementRef::face(f), ElementRef::node(n), 1);
      }
    }
  }
}

bool r5_eligible(const AssociatedPlaneGraph& a, NodeIndex n, const std::set<NodeIndex>& special) {
  if (a.is_false(n)) return false;
  return (a.degree(n) == 2 && !special.contains(n)) || a.degree(n) == 3;
}

void apply_r5(const AssociatedPlaneGraph& a, ChargeLedger& l, const std::set<NodeIndex>& special) {
  for (FaceId f = 0; f < a.num_faces(); ++f) {
    if (a.face_degree(f) < 5) continue;
    std::vector<NodeIndex> takers;
    for (NodeIndex n : walk(a, f)) {
      if (r5_eligible(a, n, special)) takers.push_back(n);
    }
    if (takers.empty()) continue;
    Charge share = l.final.at(ElementRef::face(f)) / static_cast<long long>(takers.size());
    for (NodeIndex n : takers) move_charge(l, Rule::R5, ElementRef::face(f), ElementRef::node(n), share);
  }
}

// Sum sent by node v to face f, per corner of v on f.
Charge per_corner(const AssociatedPlaneGraph& a, const ChargeLedger& l, NodeIndex v, FaceId f) {
  auto nodes = walk(a, f);
  long long mult = std::count(nodes.begin(), nodes.end(), v);
  if (mult == 0) return 0;
  return l.sent(ElementRef::node(v), ElementRef::face(f)) / mult;
}

class Auditor {
 public:
  Auditor(const AssociatedPlaneGraph& a, const ChargeLedger& l) : a_(a), l_(l) {
    auto sv = special_vertices(a);
    special_ = {sv.begin(), sv.end()};
    for (const Special4Face& s : special_4_faces(a, 11)) special_faces_[s.face] = s;
  }

  std::vector<ClaimVerdict> run() {
    std::vector<ClaimVerdict> out;
    out.push_back(min_degree());
    out.push_back(faces_nonneg("small-faces", "every 5^- face has nonnegative final charge", 0, 5));
    out.push_back(six_face_specials());
    out.push_back(faces_nonneg("big-faces", "every 6^+ face has nonnegative final charge", 6, 1 << 30));
    out.push_back(face_to_small_vertex());
    out.push_back(vertices_nonneg("two-vertices", "every 2-vertex has nonnegative final charge", 2, 2));
    out.push_back(vertices_nonneg("three-vertices", "every 3-vertex has nonnegative final charge", 3, 3));
    out.push_back(special_faces_apart());
    out.push_back(three_consecutive());
    out.push_back(vertices_nonneg("four-plus-vertices", "every 4^+ vertex has nonnegative final charge", 4, 1 << 30));
    out.push_back(big_vertex_total());
    for (ClaimVerdict& v : out) {
      if (!v.holds && !v.attached) v.attached = attach(v);
    }
    return out;
  }

 private:
  Charge fin(ElementRef e) const { return l_.final.at(e); }

  static ClaimVerdict verdict(std::string id, std::string statement) {
    ClaimVerdict v;
    v.id = std::move(id);
    v.statement = std::move(statement);
    return v;
  }

  void fail(ClaimVerdict& v, ElementRef e, std::string detail) const {
    if (!v.holds) return;
    v.holds = false;
    v.witness = e;
    v.detail = element_name(a_, e) + ": " + std::move(detail);
  }

  ClaimVerdict min_degree() const {
    ClaimVerdict v = verdict("min-degree", "every true vertex has degree at least 2");
    for (NodeIndex n = 0; n < a_.num_nodes(); ++n) {
      if (!a_.is_false(n) && a_.degree(n) < 2) fail(v, ElementRef::node(n), "degree " + std::to_string(a_.degree(n)));
    }
    return v;
  }

  ClaimVerdict faces_nonneg(std::string id, std::string statement, int lo, int hi) const {
    ClaimVerdict v = verdict(std::move(id), std::move(statement));
    for (FaceId f = 0; f < a_.num_faces(); ++f) {
      int d = a_.face_degree(f);
      if (d < lo || d > hi) continue;
      if (fin(ElementRef::face(f)) < 0) fail(v, ElementRef::face(f), "final " + to_string(fin(ElementRef::face(f))));
    }
    return v;
  }

  ClaimVerdict vertices_nonneg(std::string id, std::string statement, int lo, int hi) const {
    ClaimVerdict v = verdict(std::move(id), std::move(statement));
    for (NodeIndex n = 0; n < a_.num_nodes(); ++n) {
      int d = a_.degree(n);
      if (d < lo || d > hi) continue;
      ElementRef e = ElementRef::node(n);
      if (fin(e) < 0) fail(v, e, "final " + to_string(fin(e)));
    }
    return v;
  }

  ClaimVerdict six_face_specials() const {
    ClaimVerdict v = verdict("six-face-specials", "every 6-face has at most two special 2-vertices");
    for (FaceId f = 0; f < a_.num_faces(); ++f) {
      if (a_.face_degree(f) != 6) continue;
      auto nodes = walk(a_, f);
      long long k = std::count_if(nodes.begin(), nodes.end(),
                                  [&](NodeIndex n) { return special_.contains(n) && a_.degree(n) == 2; });
      if (k > 2) {
        fail(v, ElementRef::face(f), std::to_string(k) + " special 2-vertices");
      }
    }
    return v;
  }

  ClaimVerdict face_to_small_vertex() const {
    ClaimVerdict v = verdict("face-to-small-vertex",
                             "a 5^+ face between an 11^+ vertex and crossings sends >= 2 (next vertex 11^+) or >= 1 "
                             "to a non-special 2-vertex or 3-vertex");
    for (FaceId f = 0; f < a_.num_faces(); ++f) {
      if (a_.face_degree(f) < 5) continue;
      auto n = walk(a_, f);
      int k = static_cast<int>(n.size());
      auto big = [&](NodeIndex x) { return !a_.is_false(x) && a_.degree(x) >= 11; };
      for (int i = 0; i < k; ++i) {
        NodeIndex mid = n[(i + 2) % k];
        if (!r5_eligible(a_, mid, special_)) continue;
        if (!a_.is_false(n[(i + 1) % k]) || !a_.is_false(n[(i + 3) % k])) continue;
        NodeIndex ends[2] = {n[i], n[(i + 4) % k]};
        for (int side = 0; side < 2; ++side) {
          if (!big(ends[side])) continue;
          Charge need = big(ends[1 - side]) ? 2 : 1;
          Charge got = share_to(f, mid);
          if (got < need) {
            fail(v, ElementRef::face(f),
                 "sends " + to_string(got) + " to " + element_name(a_, ElementRef::node(mid)) + ", needs " +
                     to_string(need));
          }
        }
      }
    }
    return v;
  }

  Charge share_to(FaceId f, NodeIndex n) const {
    for (const Transfer& t : l_.transfers) {
      if (t.source == ElementRef::face(f) && t.target == ElementRef::node(n) && (t.rule == Rule::R5 || t.rule == Rule::R4)) {
        return t.amount;
      }
    }
    return 0;
  }

  ClaimVerdict special_faces_apart() const {
    ClaimVerdict v = verdict("special-4faces-apart", "no two special 4-faces sharing an 11^+ vertex are adjacent");
    for (NodeIndex n = 0; n < a_.num_nodes(); ++n) {
      if (a_.is_false(n) || a_.degree(n) < 11) continue;
      auto around = a_.faces_around(n);
      int d = static_cast<int>(around.size());
      for (int i = 0; i < d; ++i) {
        FaceId f1 = around[i];
        FaceId f2 = around[(i + 1) % d];
        if (f1 == f2) continue;
        auto s1 = special_faces_.find(f1);
        auto s2 = special_faces_.find(f2);
        if (s1 != special_faces_.end() && s2 != special_faces_.end() && s1->second.big == n && s2->second.big == n) {
          fail(v, ElementRef::node(n),
               "faces f" + std::to_string(f1) + " and f" + std::to_string(f2) + " are adjacent special 4-faces");
        }
      }
    }
    return v;
  }

  std::vector<Charge> alphas(NodeIndex n) const {
    std::vector<Charge> out;
    for (FaceId f : a_.faces_around(n)) out.push_back(per_corner(a_, l_, n, f));
    return out;
  }

  ClaimVerdict three_consecutive() const {
    ClaimVerdict v = verdict("three-consecutive", "an 11^+ vertex sends at most 2 to any three consecutive faces");
    for (NodeIndex n = 0; n < a_.num_nodes(); ++n) {
      if (a_.is_false(n) || a_.degree(n) < 11) continue;
      auto al = alphas(n);
      int d = static_cast<int>(al.size());
      for (int i = 0; i < d; ++i) {
        Charge w = al[i] + al[(i + 1) % d] + al[(i + 2) % d];
        if (w > 2) fail(v, ElementRef::node(n), "sends " + to_string(w) + " starting at corner " + std::to_string(i));
      }
    }
    return v;
  }

  ClaimVerdict big_vertex_total() const {
    ClaimVerdict v = verdict("big-vertex-total", "an 11-vertex sends at most 7, a d-vertex with d >= 12 at most 2d/3");
    for (NodeIndex n = 0; n < a_.num_nodes(); ++n) {
      int d = a_.degree(n);
      if (a_.is_false(n) || d < 11) continue;
      Charge total = 0;
      for (const Charge& c : alphas(n)) total += c;
      Charge bound = d == 11 ? degree11_send_bound() : Charge(2 * d, 3);
      if (total > bound) fail(v, ElementRef::node(n), "sends " + to_string(total) + " > " + to_string(bound));
    }
    return v;
  }

  std::set<VertexId> local_vertices(ElementRef e) const {
    std::set<VertexId> out;
    auto add = [&](NodeIndex n) {
      if (!a_.is_false(n)) {
        out.insert(a_.node(n).vertex);
        return;
      }
      CrossingPair c = a_.node(n).crossing;
      for (EdgeId id : {c.first, c.second}) {
        out.insert(a_.drawing().endpoints(id).u);
        out.insert(a_.drawing().endpoints(id).v);
      }
    };
    if (e.kind == ElementRef::Kind::Node) {
      add(e.index);
    } else {
      for (NodeIndex n : a_.face_nodes(e.index)) add(n);
    }
    return out;
  }

  std::optional<std::string> attach(const ClaimVerdict& v) const {
    const OnePlaneDrawing& d = a_.drawing();
    if (v.id == "six-face-specials") {
      if (auto better = improve_drawing_6face(d)) {
        return "redrawing with " + std::to_string(better->num_crossings()) + " crossings instead of " +
               std::to_string(d.num_crossings());
      }
    }
    std::set<VertexId> near = v.witness ? local_vertices(*v.witness) : std::set<VertexId>{};
    std::optional<ReducibleConfig> first;
    for (ConfigKind kind : {ConfigKind::MinDeg1, ConfigKind::AdjacentTwos, ConfigKind::SmallEdge2,
                            ConfigKind::SmallEdgeGeneral, ConfigKind::TriangleSmall,
                            ConfigKind::FalseTriangleTrueSmall, ConfigKind::BigFaceSmall}) {
      for (ReducibleConfig& c : find_configurations(d, kind)) {
        for (const auto& [role, x] : c.roles) {
          if (near.contains(x)) return c.describe();
        }
        if (!first) first = std::move(c);
      }
    }
    if (first) return first->describe();
    return std::nullopt;
  }

  const AssociatedPlaneGraph& a_;
  const ChargeLedger& l_;
  std::set<NodeIndex> special_;
  std::map<FaceId, Special4Face> special_faces_;
};

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string to_string(const Charge& c) {
  if (c.denominator() == 1) return std::to_string(c.numerator());
  return std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

std::string to_string(Rule r) { return "R" + std::to_string(static_cast<int>(r) + 1); }

Charge ChargeLedger::total_initial() const {
  Charge t = 0;
  for (const auto& [e, c] : initial) t += c;
  return t;
}

Charge ChargeLedger::total_final() const {
  Charge t = 0;
  for (const auto& [e, c] : final) t += c;
  return t;
}

Charge ChargeLedger::net(Rule rule, ElementRef e) const {
  Charge t = 0;
  for (const Transfer& x : transfers) {
    if (x.rule != rule) continue;
    if (x.target == e) t += x.amount;
    if (x.source == e) t -= x.amount;
  }
  return t;
}

Charge ChargeLedger::sent(ElementRef source, ElementRef target) const {
  Charge t = 0;
  for (const Transfer& x : transfers) {
    if (x.source == source && x.target == target) t += x.amount;
  }
  return t;
}

bool ChargeLedger::balanced() const {
  std::map<ElementRef, Charge> expect = initial;
  for (const Transfer& x : transfers) {
    expect[x.source] -= x.amount;
    expect[x.target] += x.amount;
  }
  return expect == final;
}

std::string element_name(const AssociatedPlaneGraph& a, ElementRef e) {
  if (e.kind == ElementRef::Kind::Face) return "f" + std::to_string(e.index);
  const PlaneNode& n = a.node(e.index);
  if (!n.is_false) return "v" + std::to_string(n.vertex.value);
  return "x" + std::to_string(n.crossing.first.value) + "/" + std::to_string(n.crossing.second.value);
}

int element_degree(const AssociatedPlaneGraph& a, ElementRef e) {
  return e.kind == ElementRef::Kind::Face ? a.face_degree(e.index) : a.degree(e.index);
}

ChargeLedger initial_charges(const AssociatedPlaneGraph& a) {
  ChargeLedger l;
  for (NodeIndex n = 0; n < a.num_nodes(); ++n) l.initial[ElementRef::node(n)] = a.degree(n) - 4;
  for (FaceId f = 0; f < a.num_faces(); ++f) l.initial[ElementRef::face(f)] = a.face_degree(f) - 4;
  l.final = l.initial;
  return l;
}

std::map<int, Charge> component_totals(const AssociatedPlaneGraph& a, const ChargeLedger& ledger) {
  std::map<int, Charge> out;
  for (const auto& [e, c] : ledger.initial) {
    int comp = e.kind == ElementRef::Kind::Node ? a.component_of(e.index) : a.face_component(e.index);
    out[comp] += c;
  }
  return out;
}

std::vector<NodeIndex> special_vertices(const AssociatedPlaneGraph& a, int ell) {
  std::set<NodeIndex> out;
  for (const Special4Face& s : special_4_faces(a, ell)) out.insert(s.low);
  return {out.begin(), out.end()};
}

ChargeLedger apply_rules(const AssociatedPlaneGraph& a, const ChargeLedger& ledger, std::array<Rule, 4> order) {
  ChargeLedger l = ledger;
  auto sv = special_vertices(a);
  std::set<NodeIndex> special(sv.begin(), sv.end());
  for (Rule r : order) {
    switch (r) {
      case Rule::R1: apply_r1_r2(a, l, true); break;
      case Rule::R2: apply_r1_r2(a, l, false); break;
      case Rule::R3: apply_r3(a, l); break;
      case Rule::R4: apply_r4(a, l, special); break;
      case Rule::R5: throw Error("R5 always runs last");
    }
  }
  apply_r5(a, l, special);
  return l;
}

std::vector<ClaimVerdict> audit_claims(const AssociatedPlaneGraph& a, const ChargeLedger& ledger) {
  return Auditor(a, ledger).run();
}

std::vector<ElementRef> negative_elements(const ChargeLedger& ledger) {
  std::vector<std::pair<Charge, ElementRef>> neg;
  for (const auto& [e, c] : ledger.final) {
    if (c < 0) neg.emplace_back(c, e);
  }
  std::sort(neg.begin(), neg.end());
  std::vector<ElementRef> out;
  for (const auto& [c, e] : neg) out.push_back(e);
  return out;
}

Charge degree11_send_bound() {
  // Two windows hold at most 3/2, the other nine at most 2; each alpha is counted three times.
  return Charge(1, 3) * (Charge(3, 2) + Charge(3, 2) + 2 * 9);
}

DischargeReport discharge(const OnePlaneDrawing& d) {
  Diagnostics diag = validate_drawing(d);
  if (!diag.ok()) throw DrawingError("invalid drawing: " + diag.summary());
  AssociatedPlaneGraph a(d);
  DischargeReport r;
  r.ledger = apply_rules(a, initial_charges(a));
  r.component_totals = component_totals(a, r.ledger);
  r.claims = audit_claims(a, r.ledger);
  r.negatives = negative_elements(r.ledger);
  r.notes.push_back("the drawing is not known to have the minimum number of crossings");
  r.notes.push_back("face incidences are counted with multiplicity along the walk");
  for (const Transfer& t : r.ledger.transfers) {
    if (t.rule == Rule::R5 && t.amount < 0) {
      r.notes.push_back("R5 moved negative shares (a face with negative charge after R1-R4)");
      break;
    }
  }
  return r;
}

std::string format_report_text(const OnePlaneDrawing& d, const DischargeReport& r) {
  AssociatedPlaneGraph a(d);
  std::ostringstream os;
  os << pad("element", 12) << pad("deg", 5) << pad("init", 8);
  for (Rule rule : {Rule::R1, Rule::R2, Rule::R3, Rule::R4, Rule::R5}) os << pad(to_string(rule), 8);
  os << "final\n";
  for (const auto& [e, init] : r.ledger.initial) {
    os << pad(element_name(a, e), 12) << pad(std::to_string(element_degree(a, e)), 5) << pad(to_string(init), 8);
    for (Rule rule : {Rule::R1, Rule::R2, Rule::R3, Rule::R4, Rule::R5}) os << pad(to_string(r.ledger.net(rule, e)), 8);
    os << to_string(r.ledger.final.at(e)) << '\n';
  }
  os << "\ntotal initial " << to_string(r.ledger.total_initial()) << ", final " << to_string(r.ledger.total_final())
     << '\n';
  for (const auto& [comp, total] : r.component_totals) {
    os << "component " << comp << " total " << to_string(total) << '\n';
  }
  os << "\nclaims\n";
  for (const ClaimVerdict& c : r.claims) {
    os << "  " << pad(c.id, 22) << (c.holds ? "holds" : "violated");
    if (!c.holds) os << "  " << c.detail;
    if (c.attached) os << "  [" << *c.attached << "]";
    os << '\n';
  }
  os << "\nnegative elements:";
  for (ElementRef e : r.negatives) os << ' ' << element_name(a, e) << '=' << to_string(r.ledger.final.at(e));
  os << '\n';
  for (const std::string& n : r.notes) os << "note: " << n << '\n';
  return os.str();
}

std::string format_report_json(const OnePlaneDrawing& d, const DischargeReport& r) {
  AssociatedPlaneGraph a(d);
  nlohmann::ordered_json j;
  auto& rows = j["elements"] = nlohmann::ordered_json::array();
  for (const auto& [e, init] : r.ledger.initial) {
    nlohmann::ordered_json row;
    row["element"] = element_name(a, e);
    row["degree"] = element_degree(a, e);
    row["initial"] = to_string(init);
    for (Rule rule : {Rule::R1, Rule::R2, Rule::R3, Rule::R4, Rule::R5}) {
      row[to_string(rule)] = to_string(r.ledger.net(rule, e));
    }
    row["final"] = to_string(r.ledger.final.at(e));
    rows.push_back(row);
  }
  j["total_initial"] = to_string(r.ledger.total_initial());
  j["total_final"] = to_string(r.ledger.total_final());
  auto& comps = j["components"] = nlohmann::ordered_json::object();
  for (const auto& [comp, total] : r.component_totals) comps[std::to_string(comp)] = to_string(total);
  auto& claims = j["claims"] = nlohmann::ordered_json::array();
  for (const ClaimVerdict& c : r.claims) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    cj["holds"] = c.holds;
    if (!c.holds) cj["detail"] = c.detail;
    if (c.attached) cj["attached"] = *c.attached;
    claims.push_back(cj);
  }
  auto& neg = j["negative"] = nlohmann::ordered_json::array();
  for (ElementRef e : r.negatives) neg.push_back({{"element", element_name(a, e)}, {"final", to_string(r.ledger.final.at(e))}});
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

}  // namespace dyncol
