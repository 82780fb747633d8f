#pragma once

#include "bswd/burau.hpp"
#include "bswd/report.hpp"

#include <cstddef>
#include <vector>

namespace bswd {

/// q with a = q/(1+q), b = 1/(1+q), for (n-1) x (n-1) matrices.
struct LieConstants {
  std::size_t n = 3;
  Scalar q;
  Scalar a;
  Scalar b;

  /// Requires n >= 3 and q outside {0, 1, -1}.
  static LieConstants make(std::size_t n, const Scalar& q);
};

/// u_i = b e_{i,i-1} + e_{ii} + a e_{i,i+1} (terms dropped at the edges).
std::vector<Matrix> u_generators(const LieConstants& c);
/// v_i = b(n-1) e_{i,i-1} + (2-n) e_{ii} + a(n-1) e_{i,i+1} + E(i).
std::vector<Matrix> v_generators(const LieConstants& c);

/// H_i(z) = b(1-z) e_{i,i-1} + z e_{ii} + a(1-z) e_{i,i+1} + E(i).
Matrix h_subgroup(std::size_t i, const Scalar& z, const LieConstants& c);
/// K_i(w) = b(w - w^{2-n}) e_{i,i-1} + w^{2-n} e_{ii} + a(w - w^{2-n}) e_{i,i+1} + w E(i).
Matrix k_subgroup(std::size_t i, const Scalar& w, const LieConstants& c);
/// Derivative of H_i at z = 1: e_{ii} - b e_{i,i-1} - a e_{i,i+1}.
Matrix h_tangent(std::size_t i, const LieConstants& c);

struct BracketSpace {
  std::size_t dim = 0;
  std::vector<Matrix> basis;
};
/// Lie algebra generated by `gens` under the commutator bracket.
BracketSpace bracket_closure(const std::vector<Matrix>& gens);

struct TridiagonalDet {
  Scalar direct;       // determinant of M
  Scalar recursive;    // D_3 = 1-ab, D_4 = 1-2ab, D_n = D_{n-1} - ab D_{n-2}
  Scalar closed_form;  // [n]_q / (1+q)^{n-1}
  bool agree() const { return direct == recursive && recursive == closed_form; }
};
/// M is (n-1) x (n-1) with 1 on the diagonal, a above and b below it.
TridiagonalDet tridiagonal_det(std::size_t n, const Scalar& q);

/// Checks (q1^{-1} sigma_i)^k on F against H_i((-q)^k), and, when
/// q1^{n-2} q2 = 1, sigma_i^k against K_i(q1^k).
Report one_param_membership(std::size_t i, unsigned k, const BurauParams& p);

}  // namespace bswd
