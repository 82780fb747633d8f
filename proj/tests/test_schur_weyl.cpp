#include "bswd/cellular.hpp"
#include "bswd/schur_weyl.hpp"

#include "doctest.h"

using namespace bswd;

TEST_CASE("tensor indexing matches the Kronecker product") {
  const std::size_t n = 3, r = 3;
  for (std::size_t idx = 0; idx < 27; ++idx) CHECK(tensor_index(tensor_digits(idx, n, r), n) == idx);
  // e_2 (x) e_1 (x) e_3 as a Kronecker product of unit columns.
  auto unit = [&](std::size_t j) {
    Matrix m(n, 1);
    m(j - 1, 0) = 1;
    return m;
  };
  const Matrix v = kron(kron(unit(2), unit(1)), unit(3));
  CHECK(v(tensor_index({2, 1, 3}, n), 0) == 1);
  CHECK_THROWS_AS(tensor_dimension(5, 4), BudgetError);
  CHECK(tensor_dimension(4, 4) == 256);
}

TEST_CASE("rook operators: generator factorization equals the direct formula") {
  for (const auto& [n, r] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {3, 2}, {2, 3}, {3, 3}})
    for (const auto& p : {BurauParams::from_q(n, 2), BurauParams::make(n, 2, 3)}) {
      for (const auto& d : rook_elements(r)) CHECK(rook_tensor_operator(d, p) == rook_tensor_operator_direct(d, p));
    }
}

TEST_CASE("rook operators form a representation of the rook monoid algebra at z = [n]_q") {
  const BurauParams p = BurauParams::make(3, Scalar(1, 2), 3);
  const auto elems = rook_elements(2);
  for (const auto& a : elems)
    for (const auto& b : elems) {
      const ComposeProps props = compose_props(a, b);
      CHECK(rook_tensor_operator(a, p) * rook_tensor_operator(b, p) ==
            power(p.qn(), static_cast<long>(props.dropped)) * rook_tensor_operator(compose(a, b), p));
    }
  CHECK(verify_tensor_presentation(TensorActionPair::build(3, BurauParams::from_q(2, 3))).passed());
}

TEST_CASE("predicted dimensions") {
  CHECK(predicted_centralizer_dim(3, 2) == 7);
  CHECK(predicted_centralizer_dim(2, 2) == 6);
  CHECK(predicted_centralizer_dim(4, 3) == 34);
  CHECK(predicted_centralizer_dim(3, 3) == 33);
  CHECK(predicted_enveloping_dim(2, 2) == 3);
  CHECK(predicted_enveloping_dim(3, 2) == 15);
  CHECK(predicted_enveloping_dim(3, 3) == 35);
}

TEST_CASE("duality at n = 3, r = 2 and the q = 1 control") {
  const Report rep = duality_report(3, 2, BurauParams::make(3, 1, -2));
  CHECK(rep.passed());
  const auto control = TensorActionPair::build(2, BurauParams::make(4, 1, -1, BurauParams::Gate::NonzeroOnly));
  CHECK(centralizer_of_braid(control).dimension == 15);
}

TEST_CASE("Schur algebra intersection at n = 2, r = 2") {
  const TensorActionPair t = TensorActionPair::build(2, BurauParams::from_q(2, Scalar(1, 2)));
  CHECK(schur_algebra(t).dimension == 10);
  const AlgebraBasis sq = schur_algebra_intersection(t);
  CHECK(sq.dimension == 3);
  CHECK(same_subspace(sq, enveloping_braid(t)));
}

TEST_CASE("rational q with [n]_q = n") {
  CHECK(q1_special_solve(3) == std::optional<Scalar>(Scalar(-2)));
  CHECK_FALSE(q1_special_solve(4).has_value());
  for (std::size_t n = 3; n <= 12; ++n) {
    const auto q = q1_special_solve(n);
    if (q) CHECK(quantum_integer(n, *q) == static_cast<long>(n));
  }
}
