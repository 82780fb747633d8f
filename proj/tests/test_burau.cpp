#include "bswd/burau.hpp"
#include "bswd/linalg.hpp"

#include "doctest.h"

using namespace bswd;

namespace {

std::vector<BurauParams> sample(std::size_t n) {
  return {BurauParams::from_q(n, 2), BurauParams::make(n, 2, 3), BurauParams::make(n, Scalar(-1, 2), Scalar(5, 3)),
          BurauParams::from_q(n, Scalar(-3, 7))};
}

// Block diagonal diag(a, b) with a 1 x 1.
Matrix with_leading(const Scalar& a, const Matrix& b) {
  Matrix out(b.rows() + 1, b.cols() + 1);
  out(0, 0) = a;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(i + 1, j + 1) = b(i, j);
  return out;
}

}  // namespace

TEST_CASE("parameter gates") {
  CHECK_THROWS_AS(BurauParams::make(3, 1, -1), ParameterError);  // q = 1
  CHECK_THROWS_AS(BurauParams::make(3, 1, 1), ParameterError);   // q = -1
  CHECK_THROWS_AS(BurauParams::make(3, 0, 2), ParameterError);
  CHECK_THROWS_AS(BurauParams::make(3, 2, 0), ParameterError);
  CHECK_NOTHROW(BurauParams::make(3, 1, -1, BurauParams::Gate::NonzeroOnly));
  CHECK_THROWS_AS(BurauParams::make(3, 0, 1, BurauParams::Gate::NonzeroOnly), ParameterError);
  try {
    BurauParams::make(4, 2, -2);
  } catch (const ParameterError& e) {
    CHECK(std::string(e.what()).find("outside {0,1,-1}") != std::string::npos);
  }
  const BurauParams p = BurauParams::from_q(4, 3);
  CHECK(p.q1 == 1);
  CHECK(p.q2 == -3);
  CHECK(p.q() == 3);
  CHECK(p.qn() == 40);
}

TEST_CASE("quantum integers") {
  CHECK(quantum_integer(1, 5) == 1);
  CHECK(quantum_integer(3, -2) == 3);
  CHECK(quantum_integer(4, Scalar(1, 2)) == Scalar(15, 8));
}

TEST_CASE("n = 2 splitting with (q1, q2) = (1, -2)") {
  const BurauParams p = BurauParams::make(2, 1, -2);
  const Splitting s = decompose_e(p);
  CHECK(s.f0 == Vector{1, 1});
  CHECK(s.f.at(0) == Vector{-2, 1});
  CHECK(determinant(s.change_of_basis) != 0);
}

TEST_CASE("unreduced generators satisfy braid, Hecke and inverse relations") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& p : sample(n)) {
      for (std::size_t i = 1; i < n; ++i) {
        const Matrix b = unreduced_generator(i, p);
        CHECK(((b - Matrix::scalar(n, p.q1)) * (b - Matrix::scalar(n, p.q2))).is_zero());
        CHECK(b * inverse_generator(i, p) == Matrix::identity(n));
        CHECK(inverse_generator(i, p) == inverse(b));
        if (i + 1 < n) {
          const Matrix c = unreduced_generator(i + 1, p);
          CHECK(b * c * b == c * b * c);
        }
        for (std::size_t j = i + 2; j < n; ++j) CHECK(b * unreduced_generator(j, p) == unreduced_generator(j, p) * b);
      }
    }
}

TEST_CASE("E splits as L + F and the reduced matrices are the restriction to F") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& p : sample(n)) {
      const Splitting s = decompose_e(p);
      const Matrix c = s.change_of_basis;
      const Matrix ci = inverse(c);
      CHECK(form(p, s.f0, s.f0) == p.qn());
      for (const auto& f : s.f) CHECK(is_zero(form(p, f, s.f0)));
      for (std::size_t i = 1; i < n; ++i)
        CHECK(ci * unreduced_generator(i, p) * c == with_leading(p.q1, reduced_generator(i, p)));
    }
}

TEST_CASE("closed-form powers match repeated multiplication") {
  std::vector<BurauParams> ps = sample(5);
  ps.push_back(BurauParams::make(5, 3, 3, BurauParams::Gate::NonzeroOnly));
  for (const auto& p : ps)
    for (std::size_t i = 1; i < 5; ++i) {
      Matrix acc = Matrix::identity(4);
      for (unsigned k = 0; k <= 9; ++k) {
        CHECK(generator_power(i, k, p) == acc);
        acc = acc * reduced_generator(i, p);
      }
    }
  CHECK(power_coefficient(3, 2, 3) == 4 + 6 + 9);
  CHECK(power_coefficient(4, 2, 2) == 32);
}

TEST_CASE("reflection squares to one and P is an equivariant projection") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& p : sample(n)) {
      const Matrix pp = projection_p(p);
      CHECK(pp * pp == p.qn() * pp);
      for (std::size_t i = 1; i < n; ++i) {
        const Matrix s = reflection(i, p);
        CHECK(s * s == Matrix::identity(n));
        CHECK(commutator(pp, unreduced_generator(i, p)).is_zero());
      }
    }
  CHECK_THROWS_AS(reflection(1, BurauParams::make(3, 2, 2, BurauParams::Gate::NonzeroOnly)), ParameterError);
}

TEST_CASE("full twist scalars") {
  // n = 2: sigma_1^2 on the 1 x 1 matrix [q2].
  CHECK(full_twist_scalar(BurauParams::make(2, 1, -2)) == 4);
  // n = 3, (1, -2): sigma_1 sigma_2 = [[0, -4], [1, -2]] has characteristic
  // polynomial t^2 + 2t + 4, so its cube is 8.
  CHECK(full_twist_scalar(BurauParams::make(3, 1, -2)) == 8);
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& p : sample(n)) {
      const Scalar base = -power(p.q1, static_cast<long>(n) - 2) * p.q2;
      CHECK(full_twist_scalar(p) == power(base, static_cast<long>(n)));
    }
}

TEST_CASE("matrix JSON round-trips") {
  const Matrix m = reduced_generator(2, BurauParams::make(4, Scalar(-1, 2), Scalar(5, 3)));
  CHECK(matrix_from_json(to_json(m)) == m);
  CHECK(to_json(m).dump() == to_json(matrix_from_json(to_json(m))).dump());
}
