#include <iostream>

#include "acceptance/acceptance.hpp"

int main() {
  std::vector<qps::acceptance::CriterionResult> results = qps::acceptance::run_suite(std::cout);
  return qps::acceptance::count_failures(results) > 0 ? 1 : 0;
}
