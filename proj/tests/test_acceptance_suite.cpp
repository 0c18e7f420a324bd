#include "signrank/acceptance.hpp"

#include <gtest/gtest.h>

using namespace signrank;

TEST(AcceptanceSuite, ReducedScalePasses) {
  AcceptanceOptions options;
  options.scale = 0.02;
  const auto results = run_acceptance(options);
  ASSERT_EQ(results.size(), 12u);
  for (const auto& r : results) EXPECT_TRUE(r.pass) << format_result_line(r);
}

TEST(AcceptanceSuite, CorruptedDualityFailsCriterionOne) {
  AcceptanceOptions options;
  options.scale = 0.02;
  options.duality = [](const RationalSubspace& l) {
    auto r = verify_duality(l);
    // Drop one vector from sign(L)^perp, as an off-by-one enumeration would.
    auto items = r.perp_of_signs.items();
    items.pop_back();
    r.perp_of_signs = SignVectorSet(l.ambient_dim(), items);
    r.discrepancy = symmetric_difference(r.complement_signs, r.perp_of_signs);
    r.holds = r.discrepancy.empty();
    return r;
  };
  const auto r = criterion_duality(options, *std::make_unique<SignSetAudit>());
  EXPECT_FALSE(r.pass);
}
