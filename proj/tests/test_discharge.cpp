#include <gtest/gtest.h>

#include <algorithm>

#include "dyncol/catalog.hpp"
#include "dyncol/discharge.hpp"

using namespace dyncol;

namespace {

std::vector<Fixture> sample() {
  std::vector<Fixture> out = fixtures();
  for (std::uint64_t s = 0; s < 10; ++s) {
    out.push_back({"random", random_1plane_drawing(15 + static_cast<int>(s), 900 + s), ""});
  }
  return out;
}

}  // namespace

TEST(Discharge, InitialTotalPerComponent) {
  for (const Fixture& f : sample()) {
    AssociatedPlaneGraph a(f.drawing);
    ChargeLedger l = initial_charges(a);
    for (const auto& [comp, total] : component_totals(a, l)) EXPECT_EQ(total, Charge(-8)) << f.name;
  }
}

TEST(Discharge, RulesConserveCharge) {
  for (const Fixture& f : sample()) {
    AssociatedPlaneGraph a(f.drawing);
    ChargeLedger l = apply_rules(a, initial_charges(a));
    EXPECT_TRUE(l.balanced()) << f.name;
    EXPECT_EQ(l.total_final(), l.total_initial()) << f.name;
  }
}

// R1-R4 commute; R5 always runs last.
TEST(Discharge, RuleOrderDoesNotMatter) {
  for (const Fixture& f : sample()) {
    AssociatedPlaneGraph a(f.drawing);
    ChargeLedger base = initial_charges(a);
    std::array<Rule, 4> order{Rule::R1, Rule::R2, Rule::R3, Rule::R4};
    auto reference = apply_rules(a, base, order).final;
    while (std::next_permutation(order.begin(), order.end(),
                                 [](Rule x, Rule y) { return static_cast<int>(x) < static_cast<int>(y); })) {
      EXPECT_EQ(apply_rules(a, base, order).final, reference) << f.name;
    }
  }
}

TEST(Discharge, FaceArithmetic) {
  EXPECT_EQ(Charge(3 - 4) + 3 * Charge(1, 3), Charge(0));
  EXPECT_EQ(Charge(3 - 4) + 2 * Charge(1, 2), Charge(0));
  EXPECT_EQ(degree11_send_bound(), Charge(7));
}

TEST(Discharge, NegativeElementsAreSorted) {
  DischargeReport r = discharge(k6_drawing());
  ASSERT_FALSE(r.negatives.empty());
  for (std::size_t i = 1; i < r.negatives.size(); ++i) {
    EXPECT_LE(r.ledger.final.at(r.negatives[i - 1]), r.ledger.final.at(r.negatives[i]));
  }
  for (ElementRef e : r.negatives) EXPECT_LT(r.ledger.final.at(e), Charge(0));
}

TEST(Discharge, ViolatedClaimsCarryAConfiguration) {
  for (const Fixture& f : fixtures()) {
    DischargeReport r = discharge(f.drawing);
    for (const ClaimVerdict& c : r.claims) {
      if (!c.holds) EXPECT_TRUE(c.attached) << f.name << " " << c.id;
    }
  }
}

TEST(Discharge, ReportsRender) {
  OnePlaneDrawing d = fixture("special-4face").drawing;
  DischargeReport r = discharge(d);
  std::string text = format_report_text(d, r);
  EXPECT_NE(text.find("total initial -8, final -8"), std::string::npos);
  std::string json = format_report_json(d, r);
  EXPECT_NE(json.find("\"claims\""), std::string::npos);
}

TEST(Discharge, ElementNames) {
  AssociatedPlaneGraph a(crossing_star_drawing());
  EXPECT_EQ(element_name(a, ElementRef::node(0)), "v0");
  EXPECT_EQ(element_name(a, ElementRef::face(0)), "f0");
  EXPECT_EQ(element_degree(a, ElementRef::face(0)), 8);
}
