#pragma once

#include "bswd/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace bswd {

struct Criterion {
  int id = 0;
  std::string title;
  double limit_seconds = 0;
  std::function<Report()> run;
};

/// The ten end-to-end acceptance checks, in order.
std::vector<Criterion> acceptance_criteria();

struct CriterionResult {
  Report report;
  double seconds = 0;
  bool passed() const { return report.passed(); }
};

/// Runs one criterion and appends a runtime check against its limit.
CriterionResult run_criterion(const Criterion& c);

}  // namespace bswd
