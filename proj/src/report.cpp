#include "bswd/report.hpp"

#include <stdexcept>

namespace bswd {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Flagged: return "flagged";
  }
  return "fail";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "flagged") return Status::Flagged;
  throw std::invalid_argument("unknown check status '" + s + "'");
}

void Report::add(std::string name, std::string ref, bool ok, std::string detail) {
  checks.push_back({std::move(name), std::move(ref), ok ? Status::Pass : Status::Fail, std::move(detail)});
}

void Report::flag(std::string name, std::string ref, std::string detail) {
  checks.push_back({std::move(name), std::move(ref), Status::Flagged, std::move(detail)});
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool Report::passed() const { return first_failure() == nullptr; }

const Check* Report::first_failure() const {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return &c;
  return nullptr;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["paper_ref"] = c.paper_ref;
    e["status"] = to_string(c.status);
    e["detail"] = c.detail;
    j["checks"].push_back(std::move(e));
  }
  return j;
}

Report Report::from_json(const nlohmann::ordered_json& j) {
  Report r;
  r.suite = j.at("suite").get<std::string>();
  for (const auto& e : j.at("checks")) {
    r.checks.push_back({e.at("name").get<std::string>(), e.at("paper_ref").get<std::string>(),
                        status_from_string(e.at("status").get<std::string>()),
                        e.at("detail").get<std::string>()});
  }
  return r;
}

}  // namespace bswd
