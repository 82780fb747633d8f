#include "bswd/lie.hpp"

#include "doctest.h"

using namespace bswd;

TEST_CASE("constants a and b") {
  const LieConstants c = LieConstants::make(4, 2);
  CHECK(c.a == Scalar(2, 3));
  CHECK(c.b == Scalar(1, 3));
  const BurauParams p = BurauParams::make(4, 2, 3);
  const LieConstants d = LieConstants::make(4, p.q());
  CHECK(d.a == -p.q2 / (p.q1 - p.q2));
  CHECK(d.b == p.q1 / (p.q1 - p.q2));
  CHECK_THROWS_AS(LieConstants::make(2, 2), ParameterError);
  CHECK_THROWS_AS(LieConstants::make(4, -1), ParameterError);
}

TEST_CASE("H_i is a one-parameter subgroup with tangent h_i") {
  const LieConstants c = LieConstants::make(5, Scalar(-3, 2));
  for (std::size_t i = 1; i < 5; ++i) {
    CHECK(h_subgroup(i, 1, c) == Matrix::identity(4));
    CHECK(h_subgroup(i, 2, c) * h_subgroup(i, 5, c) == h_subgroup(i, 10, c));
    // H_i is affine in z, so the difference quotient is the exact derivative.
    CHECK(h_subgroup(i, 3, c) - h_subgroup(i, 2, c) == h_tangent(i, c));
    CHECK(k_subgroup(i, 2, c) * k_subgroup(i, Scalar(1, 3), c) == k_subgroup(i, Scalar(2, 3), c));
  }
}

TEST_CASE("bracket closures") {
  for (std::size_t n = 3; n <= 5; ++n) {
    const LieConstants c = LieConstants::make(n, 2);
    const std::size_t m = (n - 1) * (n - 1);
    std::vector<Matrix> tangents;
    for (std::size_t i = 1; i < n; ++i) tangents.push_back(h_tangent(i, c));
    CHECK(bracket_closure(tangents).dim == m);
    CHECK(bracket_closure(u_generators(c)).dim == m);
    CHECK(bracket_closure(v_generators(c)).dim == m - 1);
  }
  // Commuting generators span only themselves.
  CHECK(bracket_closure({Matrix::unit(3, 0, 0), Matrix::unit(3, 1, 1)}).dim == 2);
}

TEST_CASE("tridiagonal determinants") {
  for (const auto& q : {Scalar(2), Scalar(-2), Scalar(1, 2), Scalar(-5, 3)})
    for (std::size_t n = 3; n <= 12; ++n) CHECK(tridiagonal_det(n, q).agree());
  // n = 3: 1 - ab with a = 2/3, b = 1/3.
  CHECK(tridiagonal_det(3, 2).direct == Scalar(7, 9));
}

TEST_CASE("scaled generator powers lie on H_i, and on K_i when q1^(n-2) q2 = 1") {
  CHECK(one_param_membership(1, 3, BurauParams::make(4, 2, 3)).passed());
  const Report k = one_param_membership(2, 4, BurauParams::make(3, 2, Scalar(1, 2)));
  CHECK(k.passed());
  CHECK(k.checks.size() == 2);
}
