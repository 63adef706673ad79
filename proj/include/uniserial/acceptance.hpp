#pragma once

#include <functional>
#include <string>
#include <vector>

#include "uniserial/sixj.hpp"

namespace uniserial {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

constexpr int kCriterionCount = 13;

CriterionResult run_criterion(int id);

/// Runs 1..kCriterionCount in order; `on_result` sees each result as it lands.
std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] 3 recurrence identity: ..."
std::string format_result(const CriterionResult& r);

/// Racah sum in 50-digit binary floating point, independent of the exact engine.
double sixj_float(const SixJArgs& args);

}  // namespace uniserial
