#include "bswd/linalg.hpp"

#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

using namespace bswd;

namespace {

// Leibniz expansion over all permutations; independent of elimination.
Scalar leibniz_det(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = 0;
  do {
    Scalar term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int spread = 4) {
  std::uniform_int_distribution<int> num(-spread, spread), den(1, 3);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(num(rng), den(rng));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j).canonicalize();
  return m;
}

}  // namespace

TEST_CASE("determinant agrees with the Leibniz expansion") {
  std::mt19937 rng(7);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix a = random_matrix(rng, n, n);
      CHECK(determinant(a) == leibniz_det(a));
    }
  CHECK(determinant(Matrix::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(Matrix::from_rows({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("inverse times matrix is the identity; singular input throws") {
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 5; ++n) {
    Matrix a = random_matrix(rng, n, n);
    if (determinant(a) == 0) continue;
    CHECK(inverse(a) * a == Matrix::identity(n));
  }
  CHECK_THROWS_AS(inverse(Matrix::from_rows({{1, 2}, {2, 4}})), std::domain_error);
}

TEST_CASE("rank plus nullity equals the column count and kernel vectors are annihilated") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix b = random_matrix(rng, 3, 2);
    const Matrix c = random_matrix(rng, 2, 5);
    const Matrix a = b * c;  // rank at most 2
    const auto ker = nullspace_basis(a);
    CHECK(rank(a) + ker.size() == 5);
    CHECK(rank(a) <= 2);
    for (const auto& v : ker)
      for (const auto& x : a * v) CHECK(is_zero(x));
  }
}

TEST_CASE("both pivot rules span the same space") {
  std::mt19937 rng(5);
  const Matrix a = random_matrix(rng, 6, 8, 2);
  RowReducer left(8, PivotRule::Leftmost), sparse(8, PivotRule::Sparsest);
  for (std::size_t i = 0; i < 6; ++i) {
    std::vector<Scalar> row(a.entries().begin() + i * 8, a.entries().begin() + (i + 1) * 8);
    left.insert(row);
    sparse.insert(row);
  }
  CHECK(left.rank() == sparse.rank());
  for (const auto& v : sparse.basis()) CHECK(left.contains(v));
  CHECK(left.kernel().size() == sparse.kernel().size());
}

TEST_CASE("commutant of a diagonal matrix with distinct entries is the diagonal algebra") {
  const std::vector<Scalar> d = {1, 2, 5, Scalar(-1, 3)};
  const Matrix diag = Matrix::diagonal(d);
  const AlgebraBasis c = commutant(std::vector<Matrix>{diag});
  CHECK(c.dimension == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(in_span(c, Matrix::unit(4, i, i)));
  CHECK_FALSE(in_span(c, Matrix::unit(4, 0, 1)));
}

TEST_CASE("commutant of a nilpotent Jordan block is the polynomials in it") {
  Matrix j(4, 4);
  for (std::size_t i = 0; i + 1 < 4; ++i) j(i, i + 1) = 1;
  const AlgebraBasis c = commutant(std::vector<Matrix>{j});
  CHECK(c.dimension == 4);
  CHECK(same_subspace(c, linear_span(std::vector<Matrix>{Matrix::identity(4), j, j.pow(2), j.pow(3)})));
}

TEST_CASE("span closure of a cyclic shift is the group algebra of Z/n") {
  Matrix shift(5, 5);
  for (std::size_t i = 0; i < 5; ++i) shift((i + 1) % 5, i) = 1;
  const AlgebraBasis closure = span_closure(std::vector<Matrix>{shift});
  CHECK(closure.dimension == 5);
  CHECK(in_span(closure, shift.pow(4)));
  // Two generic generators produce the full matrix algebra.
  const AlgebraBasis full = span_closure(std::vector<Matrix>{Matrix::from_rows({{0, 1}, {0, 0}}),
                                                             Matrix::from_rows({{0, 0}, {1, 0}})});
  CHECK(full.dimension == 4);
}

TEST_CASE("sparse and dense conversions round-trip") {
  const Vector v = {0, Scalar(1, 2), 0, -3};
  const SparseVector s = to_sparse(v);
  CHECK(s.size() == 2);
  CHECK(to_dense(s, 4) == v);
}
