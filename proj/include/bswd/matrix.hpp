#pragma once

#include "bswd/scalar.hpp"

#include "json.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace bswd {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Scalar& value);
  static Matrix diagonal(std::span<const Scalar> diag);
  /// Matrix unit e_{ij} of size n (0-based indices).
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Scalar>> rows);
  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(std::span<const Vector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<Scalar>& entries() const { return entries_; }

  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  /// c when the matrix equals c times the identity.
  std::optional<Scalar> scalar_value() const;
  Matrix pow(unsigned exponent) const;
  Vector column(std::size_t j) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Scalar& c);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& c, Matrix a);
Vector operator*(const Matrix& a, const Vector& v);

/// Kronecker product: block (i, j) of the result is a(i, j) * b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Ring commutator ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

nlohmann::ordered_json to_json(const Matrix& m);
nlohmann::ordered_json to_json(const Vector& v);
Matrix matrix_from_json(const nlohmann::ordered_json& j);

}  // namespace bswd
