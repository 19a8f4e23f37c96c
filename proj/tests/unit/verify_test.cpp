#include <gtest/gtest.h>

#include "scaling/error.hpp"
#include "scaling/verify.hpp"

using namespace scaling;

namespace {

verify::Options options(std::uint64_t seed, std::size_t count, std::string fault = "", std::string filter = "") {
  verify::Options o;
  o.seed = seed;
  o.count = count;
  o.fault = std::move(fault);
  o.filter = std::move(filter);
  return o;
}

}  // namespace

TEST(Verify, CleanRunPasses) {
  verify::Result r = verify::run(options(3, 100));
  EXPECT_TRUE(r.ok()) << r.report;
  EXPECT_EQ(r.outcomes.size(), verify::properties().size());
  EXPECT_NE(r.report.find("summary: "), std::string::npos);
}

TEST(Verify, Deterministic) {
  verify::Options o = options(99, 60);
  EXPECT_EQ(verify::run(o).report, verify::run(o).report);
}

TEST(Verify, FilterSelectsByPrefix) {
  verify::Result r = verify::run(options(1, 20, "", "scalars/"));
  ASSERT_EQ(r.outcomes.size(), 4u);
  for (const auto& o : r.outcomes) EXPECT_EQ(o.name.rfind("scalars/", 0), 0u);
}

TEST(Verify, EveryFaultIsCaught) {
  for (const auto& fault : verify::knownFaults()) {
    verify::Result r = verify::run(options(5, 300, fault));
    EXPECT_FALSE(r.ok()) << fault;
    EXPECT_NE(r.report.find("reproducer"), std::string::npos) << fault;
  }
}

TEST(Verify, UnknownFault) { EXPECT_THROW(verify::withFault("no-such-fault"), DomainError); }

TEST(Verify, ZeroCount) {
  verify::Result r = verify::run(options(1, 0));
  EXPECT_TRUE(r.ok());
  EXPECT_NE(r.report.find("no cases"), std::string::npos);
}
