#include <gtest/gtest.h>

#include "scaling/germ.hpp"

using namespace scaling;

namespace {

Germ g(Rational x, Rational plus, Rational minus) { return Germ::make(RMaxValue(std::move(x)), std::move(plus), std::move(minus)); }
LexElement lex(Rational x, Rational h) { return LexElement::make(RMaxValue(std::move(x)), std::move(h)); }

}  // namespace

TEST(GermJoin, LargerValueWins) { EXPECT_EQ(germJoin(g(0, 2, 1), g(-1, 5, -5)), g(0, 2, 1)); }

TEST(GermJoin, TiesTakeTheOuterEnvelope) {
  EXPECT_EQ(germJoin(g(0, 2, 1), g(0, 3, -1)), g(0, 3, -1));
  EXPECT_EQ(germJoin(g(0, 3, 1), g(0, 2, -1)), g(0, 3, -1));
}

TEST(GermJoin, BottomIsNeutral) {
  EXPECT_EQ(germJoin(g(1, 2, 3), Germ::bottom()), g(1, 2, 3));
  EXPECT_EQ(germJoin(Germ::bottom(), Germ::bottom()), Germ::bottom());
}

TEST(GermMul, Componentwise) {
  EXPECT_EQ(germMul(g(1, 2, 0), g(-3, Rational(1, 2), Rational(1, 2))), g(-2, Rational(5, 2), Rational(1, 2)));
  EXPECT_EQ(germMul(Germ::bottom(), g(1, 1, 1)), Germ::bottom());
}

TEST(Germ, OrderAndConvexity) {
  EXPECT_EQ(g(0, 2, 0).order(), 2);
  EXPECT_TRUE(g(0, 2, 0).convex());
  EXPECT_FALSE(g(0, 0, 1).convex());
}

TEST(GermEval, Character) {
  EXPECT_EQ(evalChar(g(7, 1, 0)), RMaxValue(7));
  EXPECT_TRUE(evalChar(Germ::bottom()).isBottom());
}

TEST(Lex, JoinAndMul) {
  EXPECT_EQ(lexJoin(lex(0, 1), lex(0, 2)), lex(0, 2));
  EXPECT_EQ(lexJoin(lex(1, -5), lex(0, 100)), lex(1, -5));
  EXPECT_EQ(lexMul(lex(1, 2), lex(3, 4)), lex(4, 6));
  EXPECT_EQ(lexMul(LexElement::bottom(), lex(3, 4)), LexElement::bottom());
  EXPECT_EQ(lexJoin(LexElement::bottom(), lex(3, 4)), lex(3, 4));
  EXPECT_EQ(evalCharLex(lex(7, 1)), RMaxValue(7));
}

TEST(Lex, OrderIsLexicographic) {
  EXPECT_LT(lex(0, 100), lex(1, -5));
  EXPECT_LT(lex(0, 1), lex(0, 2));
  EXPECT_LT(LexElement::bottom(), lex(-100, -100));
}
