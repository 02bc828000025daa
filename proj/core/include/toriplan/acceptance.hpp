#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "toriplan/sphere.hpp"

namespace toriplan {

struct AcceptanceConfig {
  std::uint64_t seed = 0;
  int jobs = 1;
  /// Pairs per planner configuration in criterion 5.
  std::size_t planner_samples = 10'000;
  int time_samples = 256;
  Tolerances tol;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool correct = false;
  double seconds = 0.0;
  /// 0 when the criterion has no time limit.
  double budget_seconds = 0.0;
  std::string detail;

  bool within_budget() const { return budget_seconds <= 0.0 || seconds < budget_seconds; }
  bool pass() const { return correct && within_budget(); }
};

constexpr int kCriterionCount = 9;

/// Runs one criterion, 1..kCriterionCount. Throws kIndexOutOfRange otherwise.
CriterionResult run_criterion(int id, const AcceptanceConfig& config = {});

/// Runs `ids` (all criteria when empty) in increasing order.
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config = {},
                                            std::vector<int> ids = {});

}  // namespace toriplan
