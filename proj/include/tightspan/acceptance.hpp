#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tightspan::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // tolerances used and worst residuals, for the report
};

/// Runs one acceptance criterion (1..13).
CriterionResult run_one(int id, std::uint64_t seed);

/// Runs the full suite in order.
std::vector<CriterionResult> run_all(std::uint64_t seed);

}  // namespace tightspan::acceptance
