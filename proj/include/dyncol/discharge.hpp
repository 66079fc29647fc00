#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "dyncol/drawing.hpp"

namespace dyncol {

using Charge = boost::rational<long long>;

std::string to_string(const Charge& c);

/// A vertex (true or false) or a face of the associated plane graph.
struct ElementRef {
  enum class Kind { Node, Face };
  Kind kind = Kind::Node;
  int index = 0;

  static ElementRef node(NodeIndex n) { return {Kind::Node, n}; }
  static ElementRef face(FaceId f) { return {Kind::Face, f}; }

  friend constexpr auto operator<=>(const ElementRef&, const ElementRef&) = default;
};

enum class Rule { R1, R2, R3, R4, R5 };

std::string to_string(Rule r);

struct Transfer {
  Rule rule = Rule::R1;
  ElementRef source;
  ElementRef target;
  Charge amount;
};

struct ChargeLedger {
  std::map<ElementRef, Charge> initial;
  std::map<ElementRef, Charge> final;
  std::vector<Transfer> transfers;

  [[nodiscard]] Charge total_initial() const;
  [[nodiscard]] Charge total_final() const;
  /// Inflow minus outflow of `e` under `rule`.
  [[nodiscard]] Charge net(Rule rule, ElementRef e) const;
  /// Sum sent from `source` to `target` over all rules.
  [[nodiscard]] Charge sent(ElementRef source, ElementRef target) const;
  /// final == initial + inflow - outflow for every element.
  [[nodiscard]] bool balanced() const;
};

std::string element_name(const AssociatedPlaneGraph& a, ElementRef e);
int element_degree(const AssociatedPlaneGraph& a, ElementRef e);

/// Charge d - 4 on every vertex and face; final starts equal to initial.
ChargeLedger initial_charges(const AssociatedPlaneGraph& a);

/// Total initial charge per connected component of the planarization.
std::map<int, Charge> component_totals(const AssociatedPlaneGraph& a, const ChargeLedger& ledger);

/// Special 2- and 3-vertices: low vertices of special 4-faces.
std::vector<NodeIndex> special_vertices(const AssociatedPlaneGraph& a, int ell = 11);

/// Applies R1..R4 in `order` (any permutation), then R5.
ChargeLedger apply_rules(const AssociatedPlaneGraph& a, const ChargeLedger& ledger,
                         std::array<Rule, 4> order = {Rule::R1, Rule::R2, Rule::R3, Rule::R4});

struct ClaimVerdict {
  std::string id;
  std::string statement;
  bool holds = true;
  std::optional<ElementRef> witness;
  std::string detail;
  /// The configuration or redrawing the claim's argument relies on, when found.
  std::optional<std::string> attached;
};

std::vector<ClaimVerdict> audit_claims(const AssociatedPlaneGraph& a, const ChargeLedger& ledger);

/// Elements with final charge < 0, by charge then element.
std::vector<ElementRef> negative_elements(const ChargeLedger& ledger);

/// Bound on what an 11-vertex sends when it meets four or more special 4-faces.
Charge degree11_send_bound();

struct DischargeReport {
  ChargeLedger ledger;
  std::map<int, Charge> component_totals;
  std::vector<ClaimVerdict> claims;
  std::vector<ElementRef> negatives;
  std::vector<std::string> notes;
};

DischargeReport discharge(const OnePlaneDrawing& d);

std::string format_report_text(const OnePlaneDrawing& d, const DischargeReport& r);
std::string format_report_json(const OnePlaneDrawing& d, const DischargeReport& r);

}  // namespace dyncol
