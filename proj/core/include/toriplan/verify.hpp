#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toriplan/planner.hpp"

namespace toriplan {

struct VerifyConfig {
  std::size_t samples = 10'000;
  int time_samples = 256;
  std::uint64_t seed = 0;
  int jobs = 1;
  /// Every `directed_every`-th sample is a directed (boundary-forcing) one;
  /// 1 makes all samples directed, 0 none.
  int directed_every = 2;
  /// Perturbation size for the continuity check.
  double delta = 1e-3;
  /// Pairs closer than this to a rule's singular locus are excluded from
  /// the reported Lipschitz bound.
  double regular_margin = 0.1;
};

struct PartitionReport {
  std::size_t samples = 0;
  /// Pairs that fall in zero or several candidate domains.
  std::size_t not_unique = 0;
  /// Pairs whose stratum lies outside [min_stratum, max_stratum].
  std::size_t stratum_bound_violations = 0;
  std::map<int, std::size_t> stratum_counts;
  int realized_strata = 0;
  int theoretical_domains = 0;
  int min_stratum = 0;
  int max_stratum = 0;
  /// First offending pair, if any, as "sample=<i> domain=<...>".
  std::optional<std::string> first_bound_violation;

  bool ok() const { return not_unique == 0 && stratum_bound_violations == 0; }
};

struct ContainmentViolation {
  std::size_t sample = 0;
  double t = 0.0;
  VertexSet support;
  std::string domain;
};

struct ContainmentReport {
  std::size_t samples = 0;
  std::size_t violating_pairs = 0;
  /// Up to `kMaxWitnesses`, sorted by sample index.
  std::vector<ContainmentViolation> witnesses;
  static constexpr std::size_t kMaxWitnesses = 10;

  bool ok() const { return violating_pairs == 0; }
};

struct ContinuityReport {
  std::size_t samples = 0;
  double max_endpoint_error = 0.0;
  double max_sphere_error = 0.0;
  /// sup_t |p(t) - p'(t)| / |(x,y) - (x',y')| over same-domain perturbations
  /// at least `regular_margin` from the singular locus.
  double lipschitz = 0.0;
  std::size_t lipschitz_pairs = 0;
  std::size_t cross_domain_skipped = 0;

  static constexpr double kEndpointLimit = 1e-9;
  static constexpr double kSphereLimit = 1e-10;
  bool ok() const {
    return max_endpoint_error <= kEndpointLimit && max_sphere_error <= kSphereLimit;
  }
};

/// Classifies sampled pairs and checks each lands in exactly one candidate
/// domain (exhaustive over candidates for n <= 6) within the stratum range.
PartitionReport verify_partition(const Planner& planner, const VerifyConfig& config = {});

/// Evaluates planned paths at `time_samples` times and checks membership.
ContainmentReport verify_containment(const Planner& planner, const VerifyConfig& config = {});

/// Endpoint exactness, on-sphere error and an empirical Lipschitz constant.
ContinuityReport verify_endpoints_continuity(const Planner& planner,
                                             const VerifyConfig& config = {});

}  // namespace toriplan
