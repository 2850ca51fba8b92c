#include "vknot/invariants.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "vknot/families.hpp"

namespace vknot {
namespace {

GaussDiagram code(std::string_view s) { return parse_gauss_code(s); }

TEST(OddWritheTest, VirtualTrefoil) { EXPECT_EQ(odd_writhe(code("O1+O2+U1+U2+")), 2); }

TEST(OddWritheTest, ClassicalDiagramsVanish) {
  EXPECT_EQ(odd_writhe(code("O1+U2+O3+U1+O2+U3+")), 0);
  EXPECT_EQ(odd_writhe(code("O1+U2+O3-U4-O2+U1+O4-U3-")), 0);
  EXPECT_EQ(odd_writhe(GaussDiagram{}), 0);
}

TEST(ArcLabelTest, VirtualTrefoil) {
  // Arc i follows endpoint i; starting from the arc between U2 and O1 the
  // labels read 0, 1, 2, 1.
  EXPECT_EQ(arc_labels(code("O1+O2+U1+U2+")).labels, (std::vector<int>{1, 2, 1, 0}));
}

TEST(ArcLabelTest, EmptyDiagramHasOneArc) { EXPECT_EQ(arc_labels(GaussDiagram{}).labels, std::vector<int>{0}); }

TEST(ArcLabelTest, MatchesLiteralDefinition) {
  std::mt19937 rng(testing::kSeed + 2);
  for (int trial = 0; trial < 1000; ++trial) {
    const GaussDiagram d = testing::random_diagram(rng, 8);
    EXPECT_EQ(arc_labels(d).labels, testing::literal_arc_labels(d)) << serialize(d);
  }
}

TEST(ChordIndexTest, VirtualTrefoil) {
  const GaussDiagram d = code("O1+O2+U1+U2+");
  const ArcLabeling l = arc_labels(d);
  EXPECT_EQ(chord_index(d, l, 1), 2);
  EXPECT_EQ(chord_index(d, l, 2), 0);
  EXPECT_THROW(chord_index(d, ArcLabeling{{0}}, 1), std::invalid_argument);
}

TEST(ChordIndexTest, IsolatedChordFollowsDefinition) {
  // Arcs (T1->H1, H1->T1) carry labels (sign, 0); both endpoints touch both
  // arcs, so the index is max(sign, 0) - min(sign, 0) = 1 for either sign.
  for (const char* s : {"O1+U1+", "O1-U1-"}) {
    const GaussDiagram d = code(s);
    const ArcLabeling l = arc_labels(d);
    EXPECT_EQ(l.labels, testing::literal_arc_labels(d));
    EXPECT_EQ(chord_index(d, l, 1), 1);
  }
}

TEST(ChordIndexTest, WorkedFourCrossingExample) {
  const GaussDiagram d = code("O1-O2+U1-O3+U4-U2+O4-U3+");
  const ArcLabeling l = arc_labels(d);
  EXPECT_EQ(chord_index(d, l, 1), 2);
  EXPECT_EQ(chord_index(d, l, 2), 4);
  EXPECT_EQ(chord_index(d, l, 3), 0);
  EXPECT_EQ(chord_index(d, l, 4), 2);
}

TEST(OddWrithePolynomialTest, Examples) {
  EXPECT_EQ(odd_writhe_polynomial(code("O1+O2+U1+U2+")).to_string(), "t^2 + 1");
  EXPECT_EQ(odd_writhe_polynomial(code("O1-O2+U1-O3+U4-U2+O4-U3+")).to_string(), "t^4 - 2t^2 + 1");
  EXPECT_EQ(odd_writhe_polynomial(code("O1+O2-U1+U3+U4+U2-O4+O3+")).to_string(), "3 - t^-2");
  EXPECT_TRUE(odd_writhe_polynomial(GaussDiagram{}).is_zero());
  EXPECT_TRUE(odd_writhe_polynomial(code("O1+U1+")).is_zero());  // even chord
}

TEST(OddWrithePolynomialTest, MatchesLiteralDefinition) {
  std::mt19937 rng(testing::kSeed + 3);
  for (int trial = 0; trial < 1000; ++trial) {
    const GaussDiagram d = testing::random_diagram(rng, 8);
    EXPECT_EQ(testing::as_map(odd_writhe_polynomial(d)), testing::literal_owp(d)) << serialize(d);
    EXPECT_EQ(odd_writhe(d), testing::literal_odd_writhe(d)) << serialize(d);
  }
}

TEST(OddWrithePolynomialTest, CoefficientSumIsOddWrithe) {
  std::mt19937 rng(testing::kSeed + 4);
  for (int trial = 0; trial < 2000; ++trial) {
    const GaussDiagram d = testing::random_diagram(rng, 8);
    EXPECT_EQ(odd_writhe_polynomial(d).at_one(), odd_writhe(d)) << serialize(d);
  }
}

TEST(OddWrithePolynomialTest, TrefoilRingIsSumOfTrefoils) {
  for (int n = 1; n <= 6; ++n) {
    const LaurentPoly w = odd_writhe_polynomial(trefoil_ring(n));
    EXPECT_EQ(w.at_one(), 2 * n);
    EXPECT_EQ(w.l1_norm(), 2 * n);
  }
}

}  // namespace
}  // namespace vknot
