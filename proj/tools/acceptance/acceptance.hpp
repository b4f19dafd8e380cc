#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qps::acceptance {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // measured values and the pinned tolerance
};

// Runs the fifteen acceptance criteria in order, printing one PASS/FAIL line
// per criterion to `out` as it goes.  A thrown exception inside a criterion
// marks it failed with the message; the suite always runs to the end.
std::vector<CriterionResult> run_suite(std::ostream& out);

int count_failures(const std::vector<CriterionResult>& results);

}  // namespace qps::acceptance
