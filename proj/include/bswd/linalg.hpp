#pragma once

#include "bswd/matrix.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace bswd {

/// Sparse vector: (index, value) pairs sorted by index, no zero values.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

SparseVector to_sparse(std::span<const Scalar> dense);
Vector to_dense(const SparseVector& v, std::size_t dim);

enum class PivotRule {
  /// Leftmost nonzero entry; the stored rows are then the reduced row
  /// echelon form of the row space.
  Leftmost,
  /// Entry whose column occurs in the fewest stored rows, ties broken by
  /// coefficient size. Keeps fill-in low on large sparse systems.
  Sparsest,
};

/// Incrementally maintained reduced row echelon basis of a subspace of
/// Q^dim. Every stored row has coefficient 1 at its pivot and 0 at every
/// other row's pivot.
class RowReducer {
 public:
  explicit RowReducer(std::size_t dim, PivotRule rule = PivotRule::Leftmost);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rank_; }

  /// Adds v to the spanning set; true when it was independent.
  bool insert(SparseVector v);
  bool insert(std::span<const Scalar> dense) { return insert(to_sparse(dense)); }

  /// Remainder of v modulo the current span (zero iff v is in the span).
  SparseVector reduce(SparseVector v) const;
  bool contains(std::span<const Scalar> dense) const { return reduce(to_sparse(dense)).empty(); }

  /// Reduced row echelon basis of the span (leftmost pivots), sorted by pivot.
  std::vector<Vector> basis() const;

  /// Basis of {x : r . x = 0 for all stored rows r}, in reduced row
  /// echelon form.
  std::vector<Vector> kernel() const;

 private:
  void eliminate_pivots(SparseVector& v) const;
  std::size_t choose_pivot(const SparseVector& v) const;
  void count_columns(const SparseVector& v, long delta);

  std::size_t dim_;
  PivotRule rule_;
  std::size_t rank_ = 0;
  std::vector<SparseVector> rows_;            // indexed by pivot column; empty when not a pivot
  std::vector<std::size_t> column_count_;     // rows containing each column (Sparsest rule)
};

/// y += a * x.
void axpy(SparseVector& y, const Scalar& a, const SparseVector& x);

std::size_t rank(const Matrix& a);

/// Exact basis of {x : a x = 0}, in reduced row echelon form.
std::vector<Vector> nullspace_basis(const Matrix& a);

/// Exact determinant of a square matrix (fraction-free elimination).
Scalar determinant(const Matrix& a);

/// Inverse of a square matrix; throws std::domain_error when singular.
Matrix inverse(const Matrix& a);

/// A linear subspace of N x N matrices given by a basis.
struct AlgebraBasis {
  std::size_t dimension = 0;
  std::vector<Matrix> basis;
};

/// All X with g X = X g for every generator. `size` fixes N when `gens`
/// is empty (the answer is then the full matrix space).
AlgebraBasis commutant(std::span<const Matrix> gens, std::size_t size = 0);

/// Smallest unital subalgebra containing the seed matrices.
AlgebraBasis span_closure(std::span<const Matrix> seed);

/// Reduced echelon basis of the linear span of the given matrices.
AlgebraBasis linear_span(std::span<const Matrix> mats);

bool in_span(const AlgebraBasis& space, const Matrix& m);
bool same_subspace(const AlgebraBasis& a, const AlgebraBasis& b);

}  // namespace bswd
