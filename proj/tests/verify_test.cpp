#include <gtest/gtest.h>

#include "toriplan/sampling.hpp"
#include "toriplan/verify.hpp"

using namespace toriplan;

namespace {

const SphereKind kS1{Parity::kOdd, 1};
const SphereKind kS2{Parity::kEven, 1};

VerifyConfig small(std::size_t samples = 2000) {
  VerifyConfig c;
  c.samples = samples;
  c.time_samples = 64;
  return c;
}

SimplicialComplex fig8() { return SimplicialComplex::from_facets(2, {VertexSet{1}, VertexSet{2}}); }

}  // namespace

TEST(VerifyPartition, FullOddTorusRealizesAllStrata) {
  const Planner p(PlannerKind::kFullOdd, SimplicialComplex::full(3), kS1);
  const PartitionReport r = verify_partition(p, small());
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.realized_strata, 4);
  EXPECT_EQ(r.theoretical_domains, 4);
  // Generic pairs are never antipodal.
  EXPECT_GT(r.stratum_counts.at(3), r.samples / 3);
}

TEST(VerifyPartition, FullEvenRealizesAllStrata) {
  const Planner p(PlannerKind::kFullEven, SimplicialComplex::full(2), kS2);
  const PartitionReport r = verify_partition(p, small());
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.realized_strata, 5);
  for (int j = 0; j <= 4; ++j) EXPECT_GT(r.stratum_counts.count(j), 0u) << j;
}

TEST(VerifyPartition, OddLowerBoundOnSkeleton) {
  const Planner p(PlannerKind::kRestrictedLiteral, SimplicialComplex::skeleton(5, 2), kS1);
  const PartitionReport r = verify_partition(p, small());
  EXPECT_EQ(r.min_stratum, 1);
  EXPECT_EQ(r.stratum_bound_violations, 0u);
  EXPECT_EQ(r.stratum_counts.count(0), 0u);
  EXPECT_TRUE(r.ok());
}

TEST(VerifyPartition, EvenLowerBoundBreaksOnFigureEight) {
  const Planner p(PlannerKind::kRestrictedLiteral, fig8(), kS2);
  const PartitionReport r = verify_partition(p, small());
  EXPECT_EQ(r.min_stratum, 2);
  EXPECT_GT(r.stratum_bound_violations, 0u);
  ASSERT_TRUE(r.first_bound_violation.has_value());
  EXPECT_NE(r.first_bound_violation->find("stratum=1"), std::string::npos);
  EXPECT_EQ(r.not_unique, 0u);
}

TEST(VerifyContainment, SafeNeverLeaves) {
  for (std::uint64_t i = 0; i < 8; ++i) {
    Rng rng = sample_rng(41, i);
    const SimplicialComplex x = random_complex(2 + static_cast<int>(i % 4), rng);
    for (SphereKind s : {kS1, kS2}) {
      const ContainmentReport r = verify_containment(Planner(PlannerKind::kSafe, x, s), small(300));
      EXPECT_TRUE(r.ok()) << i;
    }
  }
}

TEST(VerifyContainment, LiteralOnUnionClosed) {
  const SimplicialComplex x = SimplicialComplex::from_facets(4, {VertexSet{1, 2, 4}});
  for (SphereKind s : {kS1, kS2}) {
    EXPECT_TRUE(verify_containment(Planner(PlannerKind::kRestrictedLiteral, x, s), small(500)).ok());
  }
}

TEST(VerifyContainment, LiteralOnFigureEightReportsWitnesses) {
  const ContainmentReport r =
      verify_containment(Planner(PlannerKind::kRestrictedLiteral, fig8(), kS1), small(500));
  EXPECT_GT(r.violating_pairs, 0u);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_LE(r.witnesses.size(), ContainmentReport::kMaxWitnesses);
  EXPECT_EQ(r.witnesses.front().support, (VertexSet{1, 2}));
  for (std::size_t i = 1; i < r.witnesses.size(); ++i) {
    EXPECT_LT(r.witnesses[i - 1].sample, r.witnesses[i].sample);
  }
}

TEST(VerifyContinuity, FullTorusLipschitz) {
  const Planner p(PlannerKind::kFullOdd, SimplicialComplex::full(3), kS1);
  const ContinuityReport r = verify_endpoints_continuity(p, small());
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.lipschitz_pairs, 100u);
  EXPECT_LE(r.lipschitz, 10.0);
}

TEST(VerifyContinuity, ConstantInputsHaveZeroError) {
  const Planner p(PlannerKind::kSafe, SimplicialComplex::skeleton(3, 0), kS2);
  const ContinuityReport r = verify_endpoints_continuity(p, small(50));
  EXPECT_EQ(r.max_endpoint_error, 0.0);
  EXPECT_EQ(r.max_sphere_error, 0.0);
}

TEST(Verify, ReportsIndependentOfJobs) {
  const Planner p(PlannerKind::kRestrictedLiteral, SimplicialComplex::skeleton(4, 2), kS2);
  VerifyConfig one = small(600);
  VerifyConfig many = one;
  many.jobs = 4;
  const auto a = verify_partition(p, one);
  const auto b = verify_partition(p, many);
  EXPECT_EQ(a.stratum_counts, b.stratum_counts);
  EXPECT_EQ(a.stratum_bound_violations, b.stratum_bound_violations);
  const auto c = verify_endpoints_continuity(p, one);
  const auto d = verify_endpoints_continuity(p, many);
  EXPECT_EQ(c.lipschitz, d.lipschitz);
  EXPECT_EQ(c.max_sphere_error, d.max_sphere_error);
}

TEST(Verify, SeedChangesSamples) {
  const Planner p(PlannerKind::kFullOdd, SimplicialComplex::full(3), kS1);
  VerifyConfig a = small(400);
  VerifyConfig b = a;
  b.seed = 99;
  EXPECT_NE(verify_endpoints_continuity(p, a).max_sphere_error,
            verify_endpoints_continuity(p, b).max_sphere_error);
}
