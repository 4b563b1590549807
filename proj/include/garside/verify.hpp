#pragma once

#include <optional>
#include <string>
#include <vector>

namespace garside {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool skipped = false;  // no part of the criterion applies to the n filter
  std::string detail;
  double seconds = 0.0;
};

// Runs one acceptance criterion (1..10). With n_filter, only the parts of
// the criterion for that strand count run; a criterion with no such part is
// reported as skipped (and counts as passing for the exit status).
CriterionResult run_criterion(int id, std::optional<int> n_filter = std::nullopt);

// All ten criteria in order.
std::vector<CriterionResult> run_acceptance(std::optional<int> n_filter = std::nullopt);

}  // namespace garside
