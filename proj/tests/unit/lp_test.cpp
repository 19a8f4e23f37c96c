#include <gtest/gtest.h>

#include "scaling/lp.hpp"

using namespace scaling;
using lp::Relation;

TEST(Lp, OpenIntervalsAndEquality) {
  lp::System s(2);
  s.addOpenBox(0, 1, 2).addOpenBox(1, 1, 2);
  s.add({1, 1}, Relation::Equal, 3);
  EXPECT_TRUE(s.feasible());

  lp::System edge(2);
  edge.addOpenBox(0, 1, 2).addOpenBox(1, 1, 2);
  edge.add({1, 1}, Relation::Equal, 4);  // needs both at the excluded upper end
  EXPECT_FALSE(edge.feasible());
}

TEST(Lp, StrictVersusClosed) {
  lp::System strict(1);
  strict.add({1}, Relation::Less, 0).add({-1}, Relation::Less, 0);
  EXPECT_FALSE(strict.feasible());
  lp::System closed(1);
  closed.add({1}, Relation::LessEqual, 0).add({-1}, Relation::LessEqual, 0);
  EXPECT_TRUE(closed.feasible());
}

TEST(Lp, InconsistentEqualities) {
  lp::System s(2);
  s.add({1, 1}, Relation::Equal, 1).add({2, 2}, Relation::Equal, 3);
  EXPECT_FALSE(s.feasible());
  lp::System t(1);
  t.add({0}, Relation::Equal, 0);
  EXPECT_TRUE(t.feasible());
}

TEST(Lp, ThreeVariables) {
  // x + 2y + 3z = 10 with each in (1, 2): range (6, 12).
  for (int rhs : {6, 7, 11, 12}) {
    lp::System s(3);
    s.addOpenBox(0, 1, 2).addOpenBox(1, 1, 2).addOpenBox(2, 1, 2);
    s.add({1, 2, 3}, Relation::Equal, rhs);
    EXPECT_EQ(s.feasible(), rhs > 6 && rhs < 12) << rhs;
  }
}

TEST(Lp, Printing) {
  lp::Constraint c{{1, 0, Rational(-1, 2)}, Relation::Less, 3};
  EXPECT_EQ(lp::toString(c), "1*x0 + -1/2*x2 < 3");
}
