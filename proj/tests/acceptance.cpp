#include "bswd/suite.hpp"

#include <cstdio>
#include <cstring>

int main(int argc, char** argv) {
  // Optional argument: a single criterion id to run.
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_passed = true;
  for (const auto& c : bswd::acceptance_criteria()) {
    if (only != 0 && c.id != only) continue;
    const bswd::CriterionResult res = bswd::run_criterion(c);
    std::printf("%s criterion %d: %s [%zu checks, %.3f s, limit %.0f s]\n", res.passed() ? "PASS" : "FAIL", c.id,
                c.title.c_str(), res.report.checks.size(), res.seconds, c.limit_seconds);
    for (const auto& chk : res.report.checks)
      if (chk.status == bswd::Status::Fail)
        std::printf("    failed: %s | %s | %s\n", chk.name.c_str(), chk.paper_ref.c_str(), chk.detail.c_str());
    std::fflush(stdout);
    all_passed = all_passed && res.passed();
  }
  return all_passed ? 0 : 1;
}
