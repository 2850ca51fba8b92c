#include "vknot/laurent_poly.hpp"

#include <gtest/gtest.h>

namespace vknot {
namespace {

TEST(LaurentPolyTest, DropsZeroCoefficients) {
  LaurentPoly p;
  p.add_term(2, 3);
  p.add_term(2, -3);
  EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE(p.coefficients().empty());
  EXPECT_EQ(LaurentPoly(std::map<int, LaurentPoly::Coefficient>{{1, 0}, {2, 4}}).coefficients().size(), 1u);
}

TEST(LaurentPolyTest, Arithmetic) {
  const LaurentPoly a = LaurentPoly::monomial(4) + LaurentPoly::monomial(2, -2) + LaurentPoly::monomial(0);
  EXPECT_EQ(a.coefficient(2), -2);
  EXPECT_EQ(a.coefficient(3), 0);
  EXPECT_EQ(a.at_one(), 0);
  EXPECT_EQ(a.l1_norm(), 4);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a + LaurentPoly::monomial(2, 2), LaurentPoly::monomial(4) + LaurentPoly::monomial(0));
}

TEST(LaurentPolyTest, Formatting) {
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_EQ((LaurentPoly::monomial(4) + LaurentPoly::monomial(2, -2) + LaurentPoly::monomial(0)).to_string(),
            "t^4 - 2t^2 + 1");
  EXPECT_EQ((LaurentPoly::monomial(2) + LaurentPoly::monomial(0)).to_string(), "t^2 + 1");
  EXPECT_EQ((LaurentPoly::monomial(0, 3) + LaurentPoly::monomial(-2, -1)).to_string(), "3 - t^-2");
  EXPECT_EQ(LaurentPoly::monomial(1, -1).to_string(), "-t");
  EXPECT_EQ(LaurentPoly::monomial(0, -5).to_string(), "-5");
}

}  // namespace
}  // namespace vknot
