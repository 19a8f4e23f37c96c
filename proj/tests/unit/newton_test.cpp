#include <gtest/gtest.h>

#include "scaling/error.hpp"
#include "scaling/newton.hpp"

using namespace scaling;

namespace {

const SlopeGroup kZ{0, 1};

NewtonPolygon poly(std::vector<std::pair<Rational, Rational>> points, SlopeGroup group = kZ) {
  std::vector<Vertex> raw;
  for (auto& [x, y] : points) raw.push_back(Vertex{x, y});
  return reduce(group, std::move(raw));
}

std::vector<Vertex> vs(std::vector<std::pair<Rational, Rational>> points) {
  std::vector<Vertex> out;
  for (auto& [x, y] : points) out.push_back(Vertex{x, y});
  return out;
}

}  // namespace

TEST(Reduce, DominatedDuplicateAbscissa) { EXPECT_EQ(poly({{0, 0}, {0, -1}}).vertices(), vs({{0, 0}})); }

TEST(Reduce, KeepsOnlyUniqueMaximizers) {
  // (0,0) only ties at lambda = 0 and (1,0) is never strictly best.
  EXPECT_EQ(poly({{0, 0}, {1, 0}, {2, 0}}).vertices(), vs({{2, 0}}));
  // (1,0) wins on (0,3); (0,0) merely ties at lambda = 0.
  EXPECT_EQ(poly({{0, 0}, {1, 0}, {2, -3}}).vertices(), vs({{1, 0}, {2, -3}}));
  // Collinear middle vertex dropped.
  EXPECT_EQ(poly({{0, 0}, {1, -1}, {2, -2}, {3, -4}}).vertices(), vs({{0, 0}, {2, -2}, {3, -4}}));
}

TEST(Reduce, EmptyIsZeroAndGroupChecked) {
  EXPECT_TRUE(poly({}).isZero());
  EXPECT_THROW(poly({{Rational(1, 2), 0}}), DomainError);
  EXPECT_NO_THROW(poly({{Rational(1, 9), 0}}, SlopeGroup::hp(3)));
}

TEST(Legendre, Examples) {
  PiecewiseAffine unit = legendre(poly({{0, 0}}));
  EXPECT_EQ(unit.evalAt(5), RMaxValue(0));
  EXPECT_TRUE(unit.kinks().empty());

  PiecewiseAffine hinge = legendre(poly({{0, 0}, {1, -1}}));
  EXPECT_EQ(hinge.kinks(), std::vector<Rational>{1});
  EXPECT_EQ(hinge.slopes(), (std::vector<Rational>{0, 1}));

  PiecewiseAffine f = legendre(poly({{0, 0}, {1, 0}, {2, -3}}));
  EXPECT_EQ(f.kinks(), std::vector<Rational>{3});
  EXPECT_EQ(f.slopes(), (std::vector<Rational>{1, 2}));
  for (Rational x : {Rational(0), Rational(1), Rational(3), Rational(7, 2)}) {
    Rational expect = std::max<Rational>({Rational(0), x, 2 * x - 3});
    EXPECT_EQ(f.evalAt(x), RMaxValue(expect)) << x;
  }

  EXPECT_TRUE(legendre(NewtonPolygon::zero(kZ)).isBottom());
}

TEST(FromFunction, Examples) {
  PiecewiseAffine c = PiecewiseAffine::constant(kZ, Interval::halfLine(), 5);
  EXPECT_EQ(fromFunction(c).vertices(), vs({{0, 5}}));
  PiecewiseAffine hinge = PiecewiseAffine::make(kZ, Interval::halfLine(), RMaxValue(0), {1}, {0, 1});
  EXPECT_EQ(fromFunction(hinge).vertices(), vs({{0, 0}, {1, -1}}));
  EXPECT_TRUE(fromFunction(PiecewiseAffine::bottom(kZ, Interval::halfLine())).isZero());
}

TEST(FromFunction, RejectsNonConvexOrBoundedDomain) {
  PiecewiseAffine concave = PiecewiseAffine::make(kZ, Interval::halfLine(), RMaxValue(0), {1}, {1, 0});
  EXPECT_THROW(fromFunction(concave), DomainError);
  EXPECT_THROW(fromFunction(PiecewiseAffine::constant(kZ, Interval::closed(0, 1), 0)), DomainError);
}

TEST(PolyOps, JoinAndTimes) {
  NewtonPolygon a = poly({{0, 0}, {1, -1}});
  NewtonPolygon b = poly({{0, 1}});
  EXPECT_EQ(polyJoin(a, b).vertices(), vs({{0, 1}, {1, -1}}));
  EXPECT_EQ(polyTimes(a, b).vertices(), vs({{0, 1}, {1, 0}}));
  EXPECT_EQ(polyTimes(a, NewtonPolygon::zero(kZ)), NewtonPolygon::zero(kZ));
  EXPECT_EQ(polyJoin(a, NewtonPolygon::zero(kZ)), a);
  EXPECT_EQ(polyTimes(a, NewtonPolygon::unit(kZ)), a);
  EXPECT_THROW(polyJoin(a, NewtonPolygon::zero(SlopeGroup::hp(2))), MismatchError);
}
