#pragma once

#include "bswd/matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bswd {

/// Strand count n and Hecke parameters q1, q2 with q = -q2/q1.
struct BurauParams {
  enum class Gate {
    /// q1, q2 nonzero and q outside {0, 1, -1}: over the rationals this
    /// is exactly "q is not a root of unity".
    NonRootOfUnity,
    /// Only q1, q2 nonzero. Used for the q = 1 control and for q1 = q2.
    NonzeroOnly,
  };

  std::size_t n = 2;
  Scalar q1 = 1;
  Scalar q2 = -2;

  static BurauParams make(std::size_t n, const Scalar& q1, const Scalar& q2,
                          Gate gate = Gate::NonRootOfUnity);
  /// The one-parameter preset (q1, q2) = (1, -q).
  static BurauParams from_q(std::size_t n, const Scalar& q);

  Scalar q() const { return -q2 / q1; }
  /// [n]_q.
  Scalar qn() const;
};

/// [n]_q = 1 + q + ... + q^{n-1}.
Scalar quantum_integer(std::size_t n, const Scalar& q);

/// Generator indices are 1-based (1..n-1), matrices act on column vectors.

/// n x n matrix of sigma_i on E in the basis e_1..e_n.
Matrix unreduced_generator(std::size_t i, const BurauParams& p);
/// (q1 + q2 - beta_i) / (q1 q2).
Matrix inverse_generator(std::size_t i, const BurauParams& p);
/// (n-1) x (n-1) matrix of sigma_i on F in the basis f_1..f_{n-1}.
Matrix reduced_generator(std::size_t i, const BurauParams& p);

/// Phi_k(q1, q2) = sum_{j<k} q1^j q2^{k-1-j}.
Scalar power_coefficient(unsigned k, const Scalar& q1, const Scalar& q2);
/// Closed form of reduced_generator(i)^k.
Matrix generator_power(std::size_t i, unsigned k, const BurauParams& p);

/// J = diag(1, q, ..., q^{n-1}).
Matrix form_matrix(const BurauParams& p);
/// u^T J v.
Scalar form(const BurauParams& p, const Vector& u, const Vector& v);
/// S_i = (2 beta_i - q1 - q2) / (q1 - q2); requires q1 != q2.
Matrix reflection(std::size_t i, const BurauParams& p);
/// Every row equal to (1, q, ..., q^{n-1}).
Matrix projection_p(const BurauParams& p);

struct Splitting {
  Vector f0;               // e_1 + ... + e_n
  std::vector<Vector> f;   // f_i = q2 e_i + q1 e_{i+1}
  Matrix change_of_basis;  // columns f0, f_1, ..., f_{n-1}
};
/// Basis of E adapted to E = L + F; requires [n]_q != 0.
Splitting decompose_e(const BurauParams& p);

/// Scalar by which (sigma_1 ... sigma_{n-1})^n acts on F, found by
/// multiplying out the product.
Scalar full_twist_scalar(const BurauParams& p);

struct BurauRep {
  BurauParams params;
  std::vector<Matrix> unreduced;
  std::vector<Matrix> reduced;
  Matrix form;
  Vector f0;
  std::vector<Vector> f_basis;

  static BurauRep build(const BurauParams& p);
};

}  // namespace bswd
