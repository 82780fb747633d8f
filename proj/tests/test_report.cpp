#include "bswd/report.hpp"
#include "bswd/scalar.hpp"
#include "bswd/schur_weyl.hpp"

#include "doctest.h"

using namespace bswd;

TEST_CASE("scalar parsing") {
  CHECK(parse_scalar("3") == 3);
  CHECK(parse_scalar("-2") == -2);
  CHECK(parse_scalar("6/4") == Scalar(3, 2));
  CHECK_THROWS_AS(parse_scalar("0.5"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
  CHECK(to_string(parse_scalar("-3/6")) == "-1/2");
  CHECK(power(Scalar(2, 3), -2) == Scalar(9, 4));
}

TEST_CASE("report status and JSON round-trip") {
  Report rep;
  rep.suite = "demo";
  rep.add("holds", "an identity", true);
  rep.flag("outside hypotheses", "an identity", "z = 0");
  CHECK(rep.passed());
  rep.add("fails", "another identity", false, "1 vs 2");
  CHECK_FALSE(rep.passed());
  REQUIRE(rep.first_failure() != nullptr);
  CHECK(rep.first_failure()->name == "fails");

  const std::string text = rep.to_json().dump();
  CHECK(Report::from_json(nlohmann::ordered_json::parse(text)).to_json().dump() == text);
  const auto j = rep.to_json();
  CHECK(j.contains("suite"));
  CHECK(j["checks"][1]["status"] == "flagged");
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("paper_ref"));
    CHECK(c.contains("detail"));
  }
}

TEST_CASE("duality report JSON round-trips byte for byte") {
  const Report rep = duality_report(2, 2, BurauParams::from_q(2, 2));
  const std::string text = rep.to_json().dump(2);
  CHECK(Report::from_json(nlohmann::ordered_json::parse(text)).to_json().dump(2) == text);
}
