#include "bswd/lie.hpp"

#include "bswd/linalg.hpp"

namespace bswd {

LieConstants LieConstants::make(std::size_t n, const Scalar& q) {
  if (n < 3) throw ParameterError("Lie closure checks need n >= 3");
  if (is_zero(q) || q == 1 || q == -1) throw ParameterError("q must be a rational outside {0,1,-1}");
  LieConstants c;
  c.n = n;
  c.q = q;
  c.a = q / (1 + q);
  c.b = Scalar(1) / (1 + q);
  return c;
}

namespace {

// Row i (0-based a) gets lower * e_{i,i-1} + diag * e_{ii} + upper * e_{i,i+1}
// on top of off_diag * E(i).
Matrix banded_row(std::size_t i, const Scalar& lower, const Scalar& diag, const Scalar& upper,
                  const Scalar& identity_part, std::size_t m) {
  if (i < 1 || i > m) throw std::out_of_range("Lie generator index out of range");
  Matrix out = Matrix::scalar(m, identity_part);
  const std::size_t a = i - 1;
  out(a, a) = diag;
  if (a > 0) out(a, a - 1) = lower;
  if (a + 1 < m) out(a, a + 1) = upper;
  return out;
}

}  // namespace

std::vector<Matrix> u_generators(const LieConstants& c) {
  std::vector<Matrix> out;
  for (std::size_t i = 1; i < c.n; ++i) out.push_back(banded_row(i, c.b, Scalar(1), c.a, Scalar(0), c.n - 1));
  return out;
}

std::vector<Matrix> v_generators(const LieConstants& c) {
  const Scalar m = static_cast<long>(c.n) - 1;
  std::vector<Matrix> out;
  for (std::size_t i = 1; i < c.n; ++i)
    out.push_back(banded_row(i, c.b * m, Scalar(2 - static_cast<long>(c.n)), c.a * m, Scalar(1), c.n - 1));
  return out;
}

Matrix h_subgroup(std::size_t i, const Scalar& z, const LieConstants& c) {
  return banded_row(i, c.b * (1 - z), z, c.a * (1 - z), Scalar(1), c.n - 1);
}

Matrix k_subgroup(std::size_t i, const Scalar& w, const LieConstants& c) {
  const Scalar wd = power(w, 2 - static_cast<long>(c.n));
  return banded_row(i, c.b * (w - wd), wd, c.a * (w - wd), w, c.n - 1);
}

Matrix h_tangent(std::size_t i, const LieConstants& c) {
  return banded_row(i, -c.b, Scalar(1), -c.a, Scalar(0), c.n - 1);
}

BracketSpace bracket_closure(const std::vector<Matrix>& gens) {
  BracketSpace out;
  if (gens.empty()) return out;
  const std::size_t m = gens.front().rows();
  RowReducer red(m * m, PivotRule::Leftmost);
  for (const auto& g : gens)
    if (red.insert(g.entries())) out.basis.push_back(g);
  // Bracket every pair of spanning elements once; new elements are paired
  // with everything found before them.
  for (std::size_t j = 1; j < out.basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      Matrix br = commutator(out.basis[i], out.basis[j]);
      if (red.insert(br.entries())) out.basis.push_back(std::move(br));
    }
  out.dim = out.basis.size();
  return out;
}

TridiagonalDet tridiagonal_det(std::size_t n, const Scalar& q) {
  const LieConstants c = LieConstants::make(n, q);
  const std::size_t m = n - 1;
  Matrix mat = Matrix::identity(m);
  for (std::size_t k = 0; k + 1 < m; ++k) {
    mat(k, k + 1) = c.a;
    mat(k + 1, k) = c.b;
  }
  TridiagonalDet d;
  d.direct = determinant(mat);
  const Scalar ab = c.a * c.b;
  Scalar prev = 1 - ab;       // D_3
  Scalar cur = 1 - 2 * ab;    // D_4
  if (n == 3) {
    d.recursive = prev;
  } else {
    for (std::size_t t = 5; t <= n; ++t) {
      Scalar next = cur - ab * prev;
      prev = cur;
      cur = next;
    }
    d.recursive = cur;
  }
  d.closed_form = quantum_integer(n, q) / power(1 + q, static_cast<long>(n) - 1);
  return d;
}

Report one_param_membership(std::size_t i, unsigned k, const BurauParams& p) {
  const LieConstants c = LieConstants::make(p.n, p.q());
  Report rep;
  rep.suite = "one-parameter subgroups n=" + std::to_string(p.n) + " i=" + std::to_string(i) +
              " k=" + std::to_string(k);
  const Matrix scaled = (Scalar(1) / p.q1) * reduced_generator(i, p);
  const Matrix lhs = scaled.pow(k);
  rep.add("(q1^-1 sigma_i)^k = H_i((-q)^k)", "one-parameter subgroup through scaled generator powers",
          lhs == h_subgroup(i, power(-p.q(), k), c));
  const Scalar det_scalar = power(p.q1, static_cast<long>(p.n) - 2) * p.q2;
  if (det_scalar == 1) {
    rep.add("sigma_i^k = K_i(q1^k) when q1^(n-2) q2 = 1", "one-parameter subgroup at a root-of-unity determinant",
            reduced_generator(i, p).pow(k) == k_subgroup(i, power(p.q1, k), c));
  }
  return rep;
}

}  // namespace bswd
