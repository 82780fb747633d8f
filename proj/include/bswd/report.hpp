#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace bswd {

enum class Status { Pass, Fail, Flagged };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct Check {
  std::string name;
  std::string paper_ref;  // name of the mathematical result being checked
  Status status = Status::Pass;
  std::string detail;
};

/// Named list of pass/fail/flagged checks. Flagged marks a result computed
/// outside the parameter hypotheses; it does not count as a failure.
struct Report {
  std::string suite;
  std::vector<Check> checks;

  void add(std::string name, std::string ref, bool ok, std::string detail = "");
  void flag(std::string name, std::string ref, std::string detail);
  void append(const Report& other);

  bool passed() const;
  const Check* first_failure() const;

  nlohmann::ordered_json to_json() const;
  static Report from_json(const nlohmann::ordered_json& j);
};

}  // namespace bswd
