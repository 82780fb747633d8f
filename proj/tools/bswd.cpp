#include "bswd/burau.hpp"
#include "bswd/cellular.hpp"
#include "bswd/lie.hpp"
#include "bswd/rook.hpp"
#include "bswd/schur_weyl.hpp"
#include "bswd/suite.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>

using namespace bswd;
using nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void print_report_text(const Report& rep) {
  std::cout << "== " << rep.suite << "\n";
  for (const auto& c : rep.checks) {
    std::cout << "[" << to_string(c.status) << "] " << c.name;
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
  }
}

int run_burau(std::size_t n, const std::string& q1, const std::string& q2, bool reduced, std::optional<unsigned> k) {
  const BurauParams p = BurauParams::make(n, parse_scalar(q1), parse_scalar(q2));
  ordered_json out;
  out["n"] = n;
  out["q1"] = to_string(p.q1);
  out["q2"] = to_string(p.q2);
  out["reduced"] = reduced;
  ordered_json gens = ordered_json::array();
  for (std::size_t i = 1; i < n; ++i) {
    Matrix m = reduced ? reduced_generator(i, p) : unreduced_generator(i, p);
    if (k) m = reduced ? generator_power(i, *k, p) : m.pow(*k);
    gens.push_back({{"i", i}, {"matrix", to_json(m)}});
  }
  if (k) out["power"] = *k;
  out["generators"] = gens;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_rook(std::size_t r, const std::string& action, const std::string& z) {
  if (action == "enumerate") {
    ordered_json out = ordered_json::array();
    for (const auto& d : rook_elements(r)) {
      ordered_json e = d.to_diagram().to_json();
      e["cycles"] = render(cycle_link_decompose(d));
      e["rank"] = d.rank();
      out.push_back(e);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  Report rep = verify_presentation(r, parse_scalar(z));
  if (!is_zero(parse_scalar(z))) rep.append(rescale_iso_check(r, parse_scalar(z)));
  std::cout << rep.to_json().dump(2) << "\n";
  return rep.passed() ? 0 : kExitFail;
}

int run_dims(std::size_t r, const std::string& format) {
  const auto rows = dim_recursion(r);
  if (format == "json")
    std::cout << to_json(rows).dump(2) << "\n";
  else
    std::cout << to_text(rows);
  return 0;
}

int run_duality(std::size_t n, std::size_t r, const std::string& q1, const std::string& q2, bool json,
                std::size_t budget) {
  const BurauParams p = BurauParams::make(n, parse_scalar(q1), parse_scalar(q2));
  const Report rep = duality_report(n, r, p, budget);
  if (json)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    print_report_text(rep);
  return rep.passed() ? 0 : kExitFail;
}

int run_lie(std::size_t n, const std::string& q, const std::string& which) {
  const LieConstants c = LieConstants::make(n, parse_scalar(q));
  const BracketSpace s = bracket_closure(which == "u" ? u_generators(c) : v_generators(c));
  ordered_json out;
  out["n"] = n;
  out["q"] = to_string(c.q);
  out["generators"] = which;
  out["closure_dimension"] = s.dim;
  out["basis_size"] = s.basis.size();
  out["gl_dimension"] = (n - 1) * (n - 1);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_verify_all() {
  for (const auto& c : acceptance_criteria()) {
    const CriterionResult res = run_criterion(c);
    if (!res.passed()) {
      const Check* bad = res.report.first_failure();
      std::cout << "FAIL criterion " << c.id << ": " << c.title << "\n";
      if (bad)
        std::cout << "  identity: " << bad->name << "\n  reference: " << bad->paper_ref << "\n  detail: " << bad->detail
                  << "\n";
      return kExitFail;
    }
    std::cout << "PASS criterion " << c.id << ": " << c.title << " (" << res.report.checks.size() << " checks, "
              << res.seconds << " s)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Burau, rook monoid and Schur-Weyl duality computations"};
  app.require_subcommand(1);

  std::size_t n = 3, r = 2, budget = kTensorBudget;
  std::string q1 = "1", q2 = "-2", q = "2", z = "1", format = "text", action, which = "u";
  bool reduced = false, json = false;
  std::optional<unsigned> power;

  auto* burau = app.add_subcommand("burau", "print generator matrices as JSON");
  burau->add_option("--n", n, "strand count")->required()->check(CLI::Range(2, 64));
  burau->add_option("--q1", q1, "Hecke parameter q1 (p/q)")->required();
  burau->add_option("--q2", q2, "Hecke parameter q2 (p/q)")->required();
  burau->add_flag("--reduced", reduced, "reduced (n-1)-dimensional representation");
  burau->add_option("--power", power, "raise each generator to this power");

  auto* rook = app.add_subcommand("rook", "enumerate rook diagrams or verify the presentation");
  rook->add_option("--r", r, "diagram size")->required()->check(CLI::Range(0, 6));
  rook->add_option("action", action, "enumerate or present")->required()->check(CLI::IsMember({"enumerate", "present"}));
  rook->add_option("--z", z, "parameter z (p/q)");

  auto* dims = app.add_subcommand("dims", "cell module multiplicity table");
  dims->add_option("--r", r, "largest r")->required()->check(CLI::Range(0, 12));
  dims->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* brat = app.add_subcommand("bratteli", "Bratteli diagram as a graph description");
  brat->add_option("--r", r, "depth")->required()->check(CLI::Range(0, 12));
  brat->add_option("--format", format, "dot")->check(CLI::IsMember({"dot"}));

  auto* dual = app.add_subcommand("duality", "verify Schur-Weyl duality on the tensor power");
  dual->add_option("--n", n, "strand count")->required()->check(CLI::Range(2, 64));
  dual->add_option("--r", r, "tensor power")->required()->check(CLI::Range(1, 8));
  dual->add_option("--q1", q1, "Hecke parameter q1 (p/q)")->required();
  dual->add_option("--q2", q2, "Hecke parameter q2 (p/q)")->required();
  dual->add_option("--budget", budget, "largest allowed n^r");
  dual->add_flag("--json", json, "print the report as JSON");

  auto* lie = app.add_subcommand("lie", "Lie closure of the one-parameter generators");
  lie->add_option("--n", n, "strand count")->required()->check(CLI::Range(3, 64));
  lie->add_option("--q", q, "parameter q (p/q)")->required();
  lie->add_option("--generators", which, "u or v")->check(CLI::IsMember({"u", "v"}));

  auto* all = app.add_subcommand("verify-all", "run every acceptance check, stopping at the first failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*burau) return run_burau(n, q1, q2, reduced, power);
    if (*rook) return run_rook(r, action, z);
    if (*dims) return run_dims(r, format);
    if (*brat) {
      std::cout << bratteli(r).to_dot();
      return 0;
    }
    if (*dual) return run_duality(n, r, q1, q2, json, budget);
    if (*lie) return run_lie(n, q, which);
    if (*all) return run_verify_all();
  } catch (const ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
