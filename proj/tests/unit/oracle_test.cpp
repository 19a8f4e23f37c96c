#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "scaling/riemann_roch.hpp"

using namespace scaling;

namespace {

Divisor divisor(Prime p, std::vector<std::pair<Rational, Rational>> entries) {
  Divisor d(p);
  for (auto& [where, c] : entries) d.add(where, HpScalar::fromRational(p, c));
  return d;
}

}  // namespace

TEST(Oracle, FirstLevelsForPTwo) {
  Divisor d = divisor(2, {{1, 1}});
  std::vector<std::int64_t> expected{1, 1, 3, 7};
  for (unsigned n = 0; n < expected.size(); ++n) {
    oracle::BruteForceResult r = oracle::bruteForceDimension(d, n);
    EXPECT_EQ(r.dim, expected[n]) << n;
    EXPECT_TRUE(r.inconsistency.empty()) << r.inconsistency;
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(memberH0(*r.witness, d));
  }
}

TEST(Oracle, WitnessHasTheClaimedFreeKinks) {
  Divisor d = divisor(3, {{1, Rational(1, 3)}});
  oracle::BruteForceResult r = oracle::bruteForceDimension(d, 4);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.dim, 25);
  EXPECT_EQ(r.freeKinks, 25);
  EXPECT_LE(normP(*r.witness), 81);
  std::size_t free = 0;
  for (const auto& k : r.witness->kinks()) free += d.support().count(k) == 0 ? 1 : 0;
  EXPECT_EQ(free, 25u);
}

TEST(Oracle, EmptyCases) {
  EXPECT_EQ(oracle::bruteForceDimension(divisor(3, {{2, Rational(-1, 3)}}), 3).dim, 0);
  // deg 0 with chi 1: no constant is admissible and there is no room for kinks.
  EXPECT_EQ(oracle::bruteForceDimension(divisor(3, {{1, 2}, {2, -1}}), 2).dim, 0);
}

TEST(Oracle, BudgetGuard) {
  EXPECT_THROW(oracle::bruteForceDimension(divisor(2, {{1, 1}}), 12), std::runtime_error);
  EXPECT_EQ(oracle::positiveBudget(divisor(3, {{2, Rational(1, 3)}, {1, -1}})), Rational(2, 3));
}
