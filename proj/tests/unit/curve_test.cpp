#include <gtest/gtest.h>

#include "scaling/curve.hpp"
#include "scaling/error.hpp"

using namespace scaling;

namespace {

HpScalar hp(Prime p, Rational q) { return HpScalar::fromRational(p, q); }

/// p = 3, kink at 2, slopes 1/3 and -1/3.
CircleFunction tent() {
  return buildCircleFunction(3, {Rational(2)}, {hp(3, Rational(1, 3)), hp(3, Rational(-1, 3))}, RMaxValue(0));
}

Divisor divisor(Prime p, std::vector<std::pair<Rational, Rational>> entries) {
  Divisor d(p);
  for (auto& [where, c] : entries) d.add(where, hp(p, c));
  return d;
}

}  // namespace

TEST(NormalizePoint, Examples) {
  EXPECT_EQ(normalizePoint(2, 5).rep(), Rational(5, 4));
  EXPECT_EQ(normalizePoint(2, 1).rep(), 1);
  EXPECT_EQ(normalizePoint(3, Rational(1, 3)).rep(), 1);
  EXPECT_EQ(normalizePoint(3, Rational(1, 10)).rep(), Rational(27, 10));
  EXPECT_EQ(normalizingExponent(3, Rational(1, 10)), 3);
  EXPECT_THROW(normalizePoint(3, 0), DomainError);
}

TEST(BuildCircleFunction, ClosureIsEnforced) {
  CircleFunction c = buildCircleFunction(3, {}, {HpScalar(3)}, RMaxValue(0));
  EXPECT_TRUE(c.kinks().empty());
  EXPECT_NO_THROW(tent());
  EXPECT_THROW(buildCircleFunction(3, {Rational(2)}, {hp(3, Rational(1, 3)), hp(3, Rational(1, 3))}, RMaxValue(0)),
               DomainError);
  EXPECT_THROW(buildCircleFunction(3, {Rational(3)}, {HpScalar(3), HpScalar(3)}, RMaxValue(0)), DomainError);
  EXPECT_THROW(buildCircleFunction(4, {}, {HpScalar(4)}, RMaxValue(0)), DomainError);
}

TEST(CircleFunction, PeriodicEvaluation) {
  CircleFunction f = tent();
  EXPECT_EQ(f.evalAt(2), RMaxValue(Rational(1, 3)));
  EXPECT_EQ(f.evalAt(6), RMaxValue(Rational(1, 3)));
  EXPECT_EQ(f.evalAt(Rational(2, 3)), RMaxValue(Rational(1, 3)));
  EXPECT_EQ(f.evalAt(3), RMaxValue(0));
}

TEST(CircleFunction, FromWindowMatchesFundamentalDomain) {
  // The tent described on [2, 6]: slope -1/3 on [2, 3], then 1/9 on [3, 6].
  CircleFunction g = CircleFunction::fromWindow(3, 2, {Rational(3)}, {hp(3, Rational(-1, 3)), hp(3, Rational(1, 9))},
                                                RMaxValue(Rational(1, 3)));
  EXPECT_EQ(g, tent());
}

TEST(CircleFunction, FundamentalDomainRoundTrip) {
  CircleFunction f = tent();
  EXPECT_EQ(CircleFunction::fromFundamentalDomain(3, f.onFundamentalDomain()), f);
}

TEST(DivisorOf, Examples) {
  EXPECT_TRUE(divisorOf(CircleFunction::constant(3, 4)).empty());
  Divisor d = divisorOf(tent());
  EXPECT_EQ(d, divisor(3, {{1, Rational(4, 3)}, {2, Rational(-2, 3)}}));
  EXPECT_EQ(degree(d), 0);
  EXPECT_EQ(chiDivisor(d), 0u);
  EXPECT_THROW(divisorOf(CircleFunction::bottom(3)), DomainError);
}

TEST(Divisor, AddRescalesToTheRepresentative) {
  Divisor d(2);
  d.add(3, HpScalar(2, Integer(1)));  // real value 3 at the class of 3/2
  EXPECT_EQ(d.coefficientAt(normalizePoint(2, Rational(3, 2))), HpScalar(2, Integer(2)));
  EXPECT_EQ(degree(d), 3);
  d.add(Rational(3, 2), HpScalar(2, Integer(-2)));
  EXPECT_TRUE(d.empty());
}

TEST(Divisor, DegreeAndChi) {
  EXPECT_EQ(degree(Divisor(2)), 0);
  EXPECT_EQ(degree(divisor(2, {{1, 1}, {Rational(3, 2), Rational(1, 2)}})), Rational(7, 4));
  EXPECT_EQ(chiDivisor(divisor(5, {{1, Rational(7, 5)}})), 3u);
  EXPECT_EQ(chiDivisor(divisor(2, {{1, Rational(7, 2)}, {Rational(5, 4), 3}})), 0u);
  Divisor d = divisor(5, {{2, 3}, {3, Rational(-1, 5)}});
  EXPECT_EQ(jacobianClass(d - d), (JacobianClass{0, 0}));
}

TEST(Divisor, EffectiveAndArithmetic) {
  Divisor a = divisor(3, {{1, 1}, {2, Rational(1, 3)}});
  Divisor b = divisor(3, {{2, Rational(-1, 3)}});
  EXPECT_TRUE(a.isEffective());
  EXPECT_FALSE(b.isEffective());
  EXPECT_EQ(a + b, divisor(3, {{1, 1}}));
  EXPECT_EQ(-(-a), a);
  EXPECT_THROW(a += Divisor(5), MismatchError);
}

TEST(IsPrincipal, Examples) {
  PrincipalityReport empty = isPrincipal(Divisor(3));
  ASSERT_TRUE(empty.witness);
  EXPECT_TRUE(empty.witness->kinks().empty());

  PrincipalityReport obstructed = isPrincipal(divisor(3, {{1, 2}, {2, -1}}));
  EXPECT_FALSE(obstructed.principal());
  EXPECT_TRUE(obstructed.chiObstructs);
  EXPECT_FALSE(obstructed.degreeObstructs);
  EXPECT_EQ(obstructed.chi, 1u);

  PrincipalityReport degreeOff = isPrincipal(divisor(3, {{1, 1}}));
  EXPECT_TRUE(degreeOff.degreeObstructs);
  EXPECT_FALSE(degreeOff.principal());

  Divisor d = divisorOf(tent());
  PrincipalityReport ok = isPrincipal(d);
  ASSERT_TRUE(ok.witness);
  EXPECT_EQ(divisorOf(*ok.witness), d);
}

TEST(IsPrincipal, EveryDegreeZeroDivisorIsPrincipalForTwo) {
  Divisor d = divisor(2, {{1, Rational(-5, 4)}, {Rational(5, 4), 1}});
  ASSERT_EQ(degree(d), 0);
  PrincipalityReport r = isPrincipal(d);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(divisorOf(*r.witness), d);
}

TEST(CircleOps, JoinTimesInverse) {
  CircleFunction f = tent();
  CircleFunction c = CircleFunction::constant(3, Rational(1, 6));
  CircleFunction j = circleJoin(f, c);
  for (Rational x : {Rational(1), Rational(3, 2), Rational(2), Rational(5, 2), Rational(7)}) {
    EXPECT_EQ(j.evalAt(x), join(f.evalAt(x), c.evalAt(x))) << x;
  }
  EXPECT_EQ(divisorOf(circleTimes(f, f)), divisorOf(f) + divisorOf(f));
  EXPECT_EQ(divisorOf(circleInverse(f)), -divisorOf(f));
  EXPECT_EQ(circleJoin(f, CircleFunction::bottom(3)), f);
  EXPECT_THROW(circleInverse(CircleFunction::bottom(3)), DomainError);
  EXPECT_THROW(circleJoin(f, CircleFunction::constant(5, 0)), MismatchError);
}
