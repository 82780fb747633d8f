#include "bswd/cellular.hpp"

#include "doctest.h"

#include <functional>

using namespace bswd;

namespace {

// Standard tableaux counted by removing a corner box in every possible way.
unsigned long long count_syt(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (parts.empty()) return 1;
  unsigned long long total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (i + 1 == parts.size() || parts[i + 1] < parts[i]) {
      auto smaller = parts;
      --smaller[i];
      total += count_syt(smaller);
    }
  return total;
}

// Semistandard tableaux with entries <= m, filled cell by cell.
unsigned long long count_ssyt(const std::vector<int>& parts, int m) {
  std::vector<std::vector<int>> t;
  for (int len : parts) t.emplace_back(len, 0);
  std::vector<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j) cells.emplace_back(static_cast<int>(i), j);
  std::function<unsigned long long(std::size_t)> fill = [&](std::size_t c) -> unsigned long long {
    if (c == cells.size()) return 1;
    const auto [i, j] = cells[c];
    unsigned long long total = 0;
    for (int v = 1; v <= m; ++v) {
      if (j > 0 && t[i][j - 1] > v) continue;
      if (i > 0 && t[i - 1][j] >= v) continue;
      t[i][j] = v;
      total += fill(c + 1);
    }
    return total;
  };
  return fill(0);
}

}  // namespace

TEST_CASE("partitions and labels") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(4).front().parts == std::vector<int>{4});
  CHECK(partitions_of(4).back().parts == std::vector<int>{1, 1, 1, 1});
  CHECK(YoungPartition{{2, 1}}.label() == "2,1");
  CHECK(YoungPartition{}.label() == "∅");
  CHECK(cell_labels(3).size() == 1 + 1 + 2 + 3);
}

TEST_CASE("hook length and hook content formulas agree with brute-force tableau counts") {
  for (int k = 0; k <= 7; ++k)
    for (const auto& lambda : partitions_of(k)) {
      CHECK(standard_tableaux_count(lambda) == count_syt(lambda.parts));
      for (int m = 1; m <= 4; ++m)
        if (k <= 5) CHECK(gl_dimension(lambda, m) == count_ssyt(lambda.parts, m));
    }
}

TEST_CASE("dimension recursion: sum of squares is the rook monoid order") {
  const auto rows = dim_recursion(6);
  const std::vector<unsigned long long> orders = {1, 2, 7, 34, 209, 1546, 13327};
  for (std::size_t r = 0; r <= 6; ++r) {
    CHECK(rows[r].sum_of_squares() == orders[r]);
    for (const auto& [label, c] : rows[r].entries) CHECK(c == cell_dim(r, label.lambda));
  }
}

TEST_CASE("Bratteli diagram for r = 3") {
  const BratteliDiagram b = bratteli(3);
  CHECK(b.rows.size() == 4);
  CHECK(b.rows[3].size() == 7);
  const std::string dot = b.to_dot();
  CHECK(dot.find("graph bratteli") != std::string::npos);
  CHECK(dot.find("\"2,1\"") != std::string::npos);
  unsigned long long squares = 0;
  for (auto c : b.path_counts[3]) squares += c * c;
  CHECK(squares == 34);
}

TEST_CASE("cell triples round-trip and anti-involution") {
  for (const auto& d : rook_elements(4)) {
    const CellTriple t = triple_of(d);
    CHECK(t.dom == d.dom());
    CHECK(t.im == d.im());
    CHECK(diagram_of(t, 4) == d);
    const CellTriple ti = triple_of(d.inverse());
    CHECK(ti.dom == t.im);
    CHECK(ti.im == t.dom);
    CHECK(ti.pi == t.pi.inverse());
  }
}

TEST_CASE("U(k) action, theta and the inflation rule") {
  const Scalar z = 3;
  for (const auto& a : rook_elements(3))
    for (std::size_t k = 0; k <= 3; ++k)
      for (const auto& u : k_subsets(3, k)) {
        CHECK(uk_action(a, u, z) == phi(a, u, z));
        CHECK(theta(a, u).has_value() == !is_zero(phi(a, u, z).coeff));
        for (const auto& b : permutations_of(k))
          for (const auto& v : k_subsets(3, k)) CHECK(inflation_rule_holds(a, u, b, v, z));
      }
  CHECK(psi({1, 2}, {1, 2}, z, 3) == 3);
  CHECK(psi({1, 2}, {1, 3}, z, 3) == 0);
}

TEST_CASE("semisimplicity certificates") {
  for (std::size_t r = 1; r <= 3; ++r)
    for (const auto& z : {Scalar(1), Scalar(-1), Scalar(2, 3)}) {
      const auto cert = semisimplicity_certificate(r, z);
      CHECK(cert.gram_nondegenerate);
      CHECK(cert.cell_forms_nondegenerate);
      CHECK(cert.agree());
    }
  CHECK_THROWS_AS(semisimplicity_certificate(2, 0), ParameterError);
}

TEST_CASE("dimension table JSON") {
  const auto j = to_json(dim_recursion(4));
  std::vector<unsigned long long> sums;
  for (const auto& row : j["rows"]) sums.push_back(row["sum_of_squares"].get<unsigned long long>());
  CHECK(sums == std::vector<unsigned long long>{1, 2, 7, 34, 209});
  CHECK(to_text(dim_recursion(2)).find("sum c^2") != std::string::npos);
}
