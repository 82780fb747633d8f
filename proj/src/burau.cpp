#include "bswd/burau.hpp"

#include "bswd/linalg.hpp"

namespace bswd {

namespace {

void check_index(std::size_t i, const BurauParams& p) {
  if (i < 1 || i + 1 > p.n)
    throw std::out_of_range("generator index " + std::to_string(i) + " outside 1.." +
                            std::to_string(p.n - 1));
}

}  // namespace

BurauParams BurauParams::make(std::size_t n, const Scalar& q1, const Scalar& q2, Gate gate) {
  if (n < 2) throw ParameterError("strand count n must be at least 2");
  if (is_zero(q1) || is_zero(q2)) throw ParameterError("q1 and q2 must be nonzero");
  BurauParams p;
  p.n = n;
  p.q1 = q1;
  p.q2 = q2;
  if (gate == Gate::NonRootOfUnity) {
    const Scalar q = p.q();
    if (q == 1 || q == -1) throw ParameterError("q = -q2/q1 must be a rational outside {0,1,-1}");
  }
  return p;
}

BurauParams BurauParams::from_q(std::size_t n, const Scalar& q) { return make(n, Scalar(1), -q); }

Scalar BurauParams::qn() const { return quantum_integer(n, q()); }

Scalar quantum_integer(std::size_t n, const Scalar& q) {
  Scalar sum = 0;
  Scalar term = 1;
  for (std::size_t j = 0; j < n; ++j) {
    sum += term;
    term *= q;
  }
  return sum;
}

Matrix unreduced_generator(std::size_t i, const BurauParams& p) {
  check_index(i, p);
  Matrix m = Matrix::scalar(p.n, p.q1);
  const std::size_t a = i - 1;
  m(a, a) = p.q1 + p.q2;
  m(a, a + 1) = -p.q2;
  m(a + 1, a) = p.q1;
  m(a + 1, a + 1) = 0;
  return m;
}

Matrix inverse_generator(std::size_t i, const BurauParams& p) {
  Matrix m = Matrix::scalar(p.n, p.q1 + p.q2) - unreduced_generator(i, p);
  return (Scalar(1) / (p.q1 * p.q2)) * m;
}

Matrix reduced_generator(std::size_t i, const BurauParams& p) {
  return generator_power(i, 1, p);
}

Scalar power_coefficient(unsigned k, const Scalar& q1, const Scalar& q2) {
  if (q1 != q2) return (power(q1, k) - power(q2, k)) / (q1 - q2);
  Scalar sum = 0;
  for (unsigned j = 0; j < k; ++j) sum += power(q1, j) * power(q2, k - 1 - j);
  return sum;
}

Matrix generator_power(std::size_t i, unsigned k, const BurauParams& p) {
  check_index(i, p);
  const std::size_t m = p.n - 1;
  const Scalar phi = power_coefficient(k, p.q1, p.q2);
  Matrix out = Matrix::scalar(m, power(p.q1, k));
  const std::size_t a = i - 1;  // position of f_i
  out(a, a) = power(p.q2, k);
  if (a > 0) out(a, a - 1) = p.q1 * phi;
  if (a + 1 < m) out(a, a + 1) = -p.q2 * phi;
  return out;
}

Matrix form_matrix(const BurauParams& p) {
  Vector d(p.n);
  Scalar t = 1;
  for (std::size_t j = 0; j < p.n; ++j) {
    d[j] = t;
    t *= p.q();
  }
  return Matrix::diagonal(d);
}

Scalar form(const BurauParams& p, const Vector& u, const Vector& v) {
  const Matrix j = form_matrix(p);
  Scalar s = 0;
  for (std::size_t k = 0; k < p.n; ++k) s += u[k] * j(k, k) * v[k];
  return s;
}

Matrix reflection(std::size_t i, const BurauParams& p) {
  if (p.q1 == p.q2) throw ParameterError("reflection requires q1 != q2");
  Matrix s = Scalar(2) * unreduced_generator(i, p) - Matrix::scalar(p.n, p.q1 + p.q2);
  return (Scalar(1) / (p.q1 - p.q2)) * s;
}

Matrix projection_p(const BurauParams& p) {
  Matrix out(p.n, p.n);
  const Matrix j = form_matrix(p);
  for (std::size_t r = 0; r < p.n; ++r)
    for (std::size_t c = 0; c < p.n; ++c) out(r, c) = j(c, c);
  return out;
}

Splitting decompose_e(const BurauParams& p) {
  if (is_zero(p.qn())) throw ParameterError("[n]_q must be nonzero for E = L + F");
  Splitting s;
  s.f0.assign(p.n, Scalar(1));
  for (std::size_t i = 0; i + 1 < p.n; ++i) {
    Vector f(p.n);
    f[i] = p.q2;
    f[i + 1] = p.q1;
    s.f.push_back(std::move(f));
  }
  std::vector<Vector> cols{s.f0};
  cols.insert(cols.end(), s.f.begin(), s.f.end());
  s.change_of_basis = Matrix::from_columns(cols);
  return s;
}

Scalar full_twist_scalar(const BurauParams& p) {
  Matrix c = Matrix::identity(p.n - 1);
  for (std::size_t i = 1; i < p.n; ++i) c = c * reduced_generator(i, p);
  const auto value = c.pow(static_cast<unsigned>(p.n)).scalar_value();
  if (!value) throw std::logic_error("full twist does not act as a scalar on F");
  return *value;
}

BurauRep BurauRep::build(const BurauParams& p) {
  BurauRep rep;
  rep.params = p;
  for (std::size_t i = 1; i < p.n; ++i) {
    rep.unreduced.push_back(unreduced_generator(i, p));
    rep.reduced.push_back(reduced_generator(i, p));
  }
  rep.form = form_matrix(p);
  Splitting s = decompose_e(p);
  rep.f0 = std::move(s.f0);
  rep.f_basis = std::move(s.f);
  return rep;
}

}  // namespace bswd
