#include "vknot/search.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "vknot/families.hpp"
#include "vknot/invariants.hpp"

namespace vknot {
namespace {

GaussDiagram code(std::string_view s) { return parse_gauss_code(s); }

TEST(SimplifyTest, Examples) {
  EXPECT_TRUE(simplify(code("O1+U1+")).empty());
  EXPECT_TRUE(simplify(code("O1+O2-U2-U1+")).empty());
  EXPECT_EQ(serialize(simplify(code("O1+O2+U1+U2+"))), "O1+O2+U1+U2+");
  // A kink inside a virtual trefoil is stripped, the trefoil is not.
  EXPECT_EQ(canonical_form(simplify(code("O1+O2+O3-U3-U1+U2+"))), "O1+O2+U1+U2+");
}

TEST(SimplifyTest, ResultAdmitsNoRemoval) {
  std::mt19937 rng(testing::kSeed + 20);
  for (int trial = 0; trial < 500; ++trial) {
    const GaussDiagram s = simplify(testing::random_diagram(rng, 7));
    EXPECT_TRUE(enumerate_moves(s, MoveKindSet::removals()).empty()) << serialize(s);
  }
}

TEST(SearchTest, VirtualTrefoilCertificate) {
  SearchConfig cfg;
  cfg.max_forbidden = 2;
  const SearchOutcome out = unknotting_search(code("O1+O2+U1+U2+"), cfg);
  ASSERT_EQ(out.status, SearchStatus::Unknotted);
  EXPECT_EQ(out.forbidden_used, 1);
  EXPECT_EQ(to_notation(out.certificate), "FO(1,2), R1(1), R1(2)");
}

TEST(SearchTest, UnknotNeedsNothing) {
  const SearchOutcome out = unknotting_search(GaussDiagram{}, SearchConfig{});
  EXPECT_EQ(out.status, SearchStatus::Unknotted);
  EXPECT_TRUE(out.certificate.empty());
  const SearchOutcome kink = unknotting_search(code("O1-O2+U2+U1-"), SearchConfig{});
  EXPECT_EQ(kink.status, SearchStatus::Unknotted);
  EXPECT_EQ(kink.forbidden_used, 0);
}

TEST(SearchTest, BudgetExhaustion) {
  SearchConfig cfg;
  cfg.max_forbidden = 2;
  const SearchOutcome out = unknotting_search(trefoil_ring(3), cfg);
  EXPECT_EQ(out.status, SearchStatus::ExhaustedBudget);
  EXPECT_GT(out.states_visited, 0u);
  cfg.max_forbidden = 3;
  const SearchOutcome ok = unknotting_search(trefoil_ring(3), cfg);
  EXPECT_EQ(ok.status, SearchStatus::Unknotted);
  EXPECT_EQ(ok.forbidden_used, 3);
}

TEST(SearchTest, StateCap) {
  SearchConfig cfg;
  cfg.max_forbidden = 3;
  cfg.max_states = 5;
  EXPECT_EQ(unknotting_search(trefoil_ring(3), cfg).status, SearchStatus::ExhaustedStates);
}

TEST(SearchTest, CertificatesReplayAndRespectLowerBounds) {
  std::mt19937 rng(testing::kSeed + 21);
  SearchConfig cfg;
  cfg.max_forbidden = 3;
  cfg.max_states = 50'000;
  for (int trial = 0; trial < 150; ++trial) {
    const GaussDiagram d = testing::random_diagram(rng, 5);
    const SearchOutcome out = unknotting_search(d, cfg);
    if (out.status != SearchStatus::Unknotted) continue;
    const VerifyResult v = verify_sequence(d, out.certificate);
    EXPECT_TRUE(v.valid_unknotting) << serialize(d) << " " << to_notation(out.certificate);
    EXPECT_EQ(v.forbidden_cost, out.forbidden_used);
    EXPECT_GE(out.forbidden_used, owp_lower_bound(d)) << serialize(d);
    EXPECT_LE(out.forbidden_used, cfg.max_forbidden);
  }
}

TEST(SearchTest, CostIsMonotoneInBudget) {
  std::mt19937 rng(testing::kSeed + 22);
  for (int trial = 0; trial < 60; ++trial) {
    const GaussDiagram d = testing::random_diagram(rng, 5);
    std::optional<int> found_at;
    for (int budget = 0; budget <= 3; ++budget) {
      SearchConfig cfg;
      cfg.max_forbidden = budget;
      const SearchOutcome out = unknotting_search(d, cfg);
      if (found_at) {
        // Once unknotted at some budget, larger budgets find the same optimum.
        ASSERT_EQ(out.status, SearchStatus::Unknotted) << serialize(d);
        EXPECT_EQ(out.forbidden_used, *found_at) << serialize(d);
      } else if (out.status == SearchStatus::Unknotted) {
        found_at = out.forbidden_used;
        EXPECT_EQ(out.forbidden_used, budget) << serialize(d);
      }
    }
  }
}

TEST(SearchTest, DedupDoesNotChangeCost) {
  std::mt19937 rng(testing::kSeed + 23);
  for (int trial = 0; trial < 40; ++trial) {
    const GaussDiagram d = testing::random_diagram(rng, 4);
    SearchConfig on;
    on.max_forbidden = 2;
    SearchConfig off = on;
    off.dedup = false;
    const SearchOutcome a = unknotting_search(d, on);
    const SearchOutcome b = unknotting_search(d, off);
    ASSERT_EQ(a.status, b.status) << serialize(d);
    if (a.status == SearchStatus::Unknotted) EXPECT_EQ(a.forbidden_used, b.forbidden_used) << serialize(d);
  }
}

TEST(SearchTest, WorkedSequenceFor447Replays) {
  const VerifyResult v = verify_sequence(code("O1-O2+U1-O3+U4-U2+O4-U3+"),
                                         parse_move_sequence("FU(4,2), R1(4), FU(3,2), R1(3), R2(1,2)"));
  EXPECT_TRUE(v.valid_unknotting) << v.error;
  EXPECT_EQ(v.forbidden_cost, 2);
}

TEST(SearchTest, Deterministic) {
  SearchConfig cfg;
  cfg.max_forbidden = 3;
  const GaussDiagram d = code("O1-O2+U1-O3+U4-U2+O4-U3+");
  const SearchOutcome a = unknotting_search(d, cfg);
  const SearchOutcome b = unknotting_search(d, cfg);
  EXPECT_EQ(to_notation(a.certificate), to_notation(b.certificate));
  EXPECT_EQ(a.states_visited, b.states_visited);
}

TEST(CertifyTest, WorkedExampleIsExact) {
  const BoundReport r = certify_forbidden_number(code("O1-O2+U1-O3+U4-U2+O4-U3+"), SearchConfig{});
  EXPECT_EQ(r.lower, 2);
  EXPECT_EQ(r.exact, 2);
  ASSERT_TRUE(r.certificate.has_value());
  const VerifyResult v = verify_sequence(code("O1-O2+U1-O3+U4-U2+O4-U3+"), parse_move_sequence(*r.certificate));
  EXPECT_TRUE(v.valid_unknotting);
  EXPECT_EQ(v.forbidden_cost, 2);
}

TEST(CertifyTest, UnknotAndTrefoil) {
  EXPECT_EQ(certify_forbidden_number(GaussDiagram{}, SearchConfig{}).exact, 0);
  const BoundReport t = certify_forbidden_number(code("O1+O2+U1+U2+"), SearchConfig{});
  EXPECT_EQ(t.exact, 1);
  EXPECT_EQ(t.certificate, "FO(1,2), R1(1), R1(2)");
}

TEST(CertifyTest, AlternatingTrefoilHasNoFreeOrForbiddenMoves) {
  // Heads and tails alternate, so neither FO nor FU applies and removals are
  // stuck; without additions the search cannot leave the diagram.
  const BoundReport plain = certify_forbidden_number(torus2_minimal(3), SearchConfig{});
  EXPECT_EQ(plain.lower, 0);
  EXPECT_EQ(plain.upper, 4);
  EXPECT_FALSE(plain.certificate.has_value());
  EXPECT_FALSE(plain.warnings.empty());
  // Knowing the knot is nontrivial lifts the lower bound.
  const FamilySpec spec{Family::Torus2Minimal, 3};
  const BoundReport tagged = certify_forbidden_number(torus2_minimal(3), SearchConfig{}, &spec);
  EXPECT_EQ(tagged.lower, 1);
  EXPECT_EQ(tagged.upper, 4);
}

TEST(CertifyTest, BridgeTrefoilGetsCertificate) {
  const FamilySpec spec{Family::Torus2Bridge, 3};
  const BoundReport r = certify_forbidden_number(torus2_bridge(3), SearchConfig{}, &spec);
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_TRUE(verify_sequence(torus2_bridge(3), parse_move_sequence(*r.certificate)).valid_unknotting);
  EXPECT_EQ(r.lower, 1);
  EXPECT_LE(r.upper, 4);
}

TEST(CertifyTest, KnownNontrivialLiftsLowerBound) {
  const GaussDiagram d = code("O1+O2-U1+U3+O4-O3+U4-U2-");
  EXPECT_EQ(certify_forbidden_number(d, SearchConfig{}).lower, 0);
  const BoundReport r = certify_forbidden_number(d, SearchConfig{}, nullptr, true);
  EXPECT_EQ(r.lower, 1);
  EXPECT_EQ(r.exact, 1);
}

TEST(CertifyTest, SearchUpperItemIsRecorded) {
  const BoundReport r = certify_forbidden_number(trefoil_ring(2), SearchConfig{});
  bool found = false;
  for (const BoundItem& item : r.upper_items) found = found || item.source == "search";
  EXPECT_TRUE(found);
  EXPECT_EQ(r.exact, 2);
}

TEST(VerifyTest, Examples) {
  const GaussDiagram d = code("O1+O2+U1+U2+");
  const VerifyResult ok = verify_sequence(d, parse_move_sequence("FO(1,2), R1(1), R1(2)"));
  EXPECT_TRUE(ok.valid_unknotting);
  EXPECT_EQ(ok.forbidden_cost, 1);
  EXPECT_TRUE(ok.final.empty());
  EXPECT_FALSE(ok.failed_index.has_value());

  const VerifyResult bad = verify_sequence(d, parse_move_sequence("FO(1,2), R2(1,2)"));
  EXPECT_FALSE(bad.valid_unknotting);
  EXPECT_EQ(bad.failed_index, 1u);
  EXPECT_FALSE(bad.error.empty());
  EXPECT_EQ(serialize(bad.final), "O2+O1+U1+U2+");

  const VerifyResult partial = verify_sequence(d, parse_move_sequence("FO(1,2), R1(1)"));
  EXPECT_FALSE(partial.valid_unknotting);
  EXPECT_FALSE(partial.failed_index.has_value());
  EXPECT_EQ(partial.final.chord_count(), 1u);
}

}  // namespace
}  // namespace vknot
