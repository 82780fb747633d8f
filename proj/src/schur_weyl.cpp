#include "bswd/schur_weyl.hpp"

#include "bswd/cellular.hpp"

#include <algorithm>
#include <cstdlib>

namespace bswd {

std::size_t tensor_dimension(std::size_t n, std::size_t r, std::size_t budget) {
  std::size_t dim = 1;
  for (std::size_t t = 0; t < r; ++t) {
    dim *= n;
    if (dim > budget)
      throw BudgetError("n^r = " + std::to_string(n) + "^" + std::to_string(r) + " exceeds the matrix-size budget " +
                        std::to_string(budget));
  }
  return dim;
}

std::size_t tensor_index(const std::vector<int>& js, std::size_t n) {
  std::size_t idx = 0;
  for (int j : js) idx = idx * n + static_cast<std::size_t>(j - 1);
  return idx;
}

std::vector<int> tensor_digits(std::size_t index, std::size_t n, std::size_t r) {
  std::vector<int> js(r);
  for (std::size_t t = r; t-- > 0;) {
    js[t] = static_cast<int>(index % n) + 1;
    index /= n;
  }
  return js;
}

namespace {

Matrix kron_power(const Matrix& m, std::size_t r) {
  Matrix out = Matrix::identity(1);
  for (std::size_t t = 0; t < r; ++t) out = kron(out, m);
  return out;
}

Matrix place_swap(std::size_t i, std::size_t n, std::size_t r) {
  const std::size_t dim = tensor_dimension(n, r, static_cast<std::size_t>(-1));
  Matrix m(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    auto js = tensor_digits(c, n, r);
    std::swap(js[i - 1], js[i]);
    m(tensor_index(js, n), c) = 1;
  }
  return m;
}

}  // namespace

Matrix braid_tensor_gen(std::size_t i, std::size_t r, const BurauParams& p) {
  return kron_power(unreduced_generator(i, p), r);
}

Matrix braid_tensor_inverse(std::size_t i, std::size_t r, const BurauParams& p) {
  return kron_power(inverse_generator(i, p), r);
}

Matrix rook_tensor_gen(GeneratorKind kind, std::size_t index, std::size_t r, const BurauParams& p) {
  switch (kind) {
    case GeneratorKind::S:
      if (index < 1 || index >= r) throw std::out_of_range("s_i index out of range");
      return place_swap(index, p.n, r);
    case GeneratorKind::P: {
      if (index < 1 || index > r) throw std::out_of_range("p_j index out of range");
      const std::size_t before = tensor_dimension(p.n, index - 1, static_cast<std::size_t>(-1));
      const std::size_t after = tensor_dimension(p.n, r - index, static_cast<std::size_t>(-1));
      return kron(kron(Matrix::identity(before), projection_p(p)), Matrix::identity(after));
    }
    case GeneratorKind::PHalf:
      break;
  }
  throw std::invalid_argument("not a rook monoid generator");
}

Matrix rook_tensor_operator(const PartialPermutation& d, const BurauParams& p) {
  const std::size_t r = d.r();
  Matrix op = Matrix::identity(tensor_dimension(p.n, r, static_cast<std::size_t>(-1)));
  const auto dom = d.dom();
  for (std::size_t j = 1; j <= r; ++j)
    if (!std::binary_search(dom.begin(), dom.end(), static_cast<int>(j)))
      op = op * rook_tensor_gen(GeneratorKind::P, j, r, p);
  for (std::size_t i : adjacent_word(canonical_extension(d))) op = op * rook_tensor_gen(GeneratorKind::S, i, r, p);
  return op;
}

Matrix rook_tensor_operator_direct(const PartialPermutation& d, const BurauParams& p) {
  const std::size_t r = d.r();
  const std::size_t n = p.n;
  const std::size_t dim = tensor_dimension(n, r, static_cast<std::size_t>(-1));
  const auto im = d.im();
  const Scalar q = p.q();
  Matrix m(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    const auto js = tensor_digits(c, n, r);
    Scalar coeff = 1;
    for (int b = 1; b <= static_cast<int>(r); ++b)
      if (!std::binary_search(im.begin(), im.end(), b)) coeff *= power(q, js[b - 1] - 1);
    for (std::size_t row = 0; row < dim; ++row) {
      const auto out = tensor_digits(row, n, r);
      bool match = true;
      for (int t = 1; t <= static_cast<int>(r) && match; ++t)
        if (d(t) != 0 && out[t - 1] != js[d(t) - 1]) match = false;
      if (match) m(row, c) = coeff;
    }
  }
  return m;
}

TensorActionPair TensorActionPair::build(std::size_t r, const BurauParams& p, std::size_t budget) {
  tensor_dimension(p.n, r, budget);
  TensorActionPair t;
  t.n = p.n;
  t.r = r;
  t.params = p;
  for (std::size_t i = 1; i < p.n; ++i) {
    t.braid_gens.push_back(braid_tensor_gen(i, r, p));
    t.braid_inverses.push_back(braid_tensor_inverse(i, r, p));
  }
  for (std::size_t i = 1; i < r; ++i) t.rook_s.push_back(rook_tensor_gen(GeneratorKind::S, i, r, p));
  for (std::size_t j = 1; j <= r; ++j) t.rook_p.push_back(rook_tensor_gen(GeneratorKind::P, j, r, p));
  return t;
}

std::vector<Matrix> TensorActionPair::rook_gens() const {
  std::vector<Matrix> g = rook_s;
  g.insert(g.end(), rook_p.begin(), rook_p.end());
  return g;
}

Report verify_tensor_presentation(const TensorActionPair& t) {
  Report rep;
  rep.suite = "tensor presentation n=" + std::to_string(t.n) + " r=" + std::to_string(t.r);
  const Scalar z = t.params.qn();
  const std::size_t dim = tensor_dimension(t.n, t.r, static_cast<std::size_t>(-1));
  auto eval = [&](const Word& w) {
    Matrix m = Matrix::identity(dim);
    for (const auto& l : w) m = m * (l.kind == GeneratorKind::S ? t.rook_s[l.index - 1] : t.rook_p[l.index - 1]);
    return m;
  };
  for (const auto& rel : presentation_relations(t.r))
    rep.add(rel.name, "rook action on the tensor power at z = [n]_q",
            eval(rel.lhs) == power(z, rel.z_power) * eval(rel.rhs));
  return rep;
}

AlgebraBasis centralizer_of_braid(const TensorActionPair& t) { return commutant(t.braid_gens); }

AlgebraBasis rook_image(const TensorActionPair& t) {
  std::vector<Matrix> ops;
  for (const auto& d : rook_elements(t.r)) ops.push_back(rook_tensor_operator(d, t.params));
  return linear_span(ops);
}

AlgebraBasis enveloping_braid(const TensorActionPair& t) {
  std::vector<Matrix> seed = t.braid_gens;
  seed.insert(seed.end(), t.braid_inverses.begin(), t.braid_inverses.end());
  return span_closure(seed);
}

AlgebraBasis schur_algebra(const TensorActionPair& t) {
  const std::size_t dim = tensor_dimension(t.n, t.r, static_cast<std::size_t>(-1));
  return commutant(t.rook_s, dim);
}

AlgebraBasis schur_algebra_intersection(const TensorActionPair& t) {
  std::vector<Matrix> gens = t.rook_s;
  gens.push_back(t.rook_p.front());
  return commutant(gens);
}

unsigned long long predicted_centralizer_dim(std::size_t n, std::size_t r) {
  unsigned long long s = 0;
  for (const auto& l : cell_labels(r))
    if (fits_gl(l, n)) s += cell_dim(r, l.lambda) * cell_dim(r, l.lambda);
  return s;
}

unsigned long long predicted_enveloping_dim(std::size_t n, std::size_t r) {
  unsigned long long s = 0;
  for (const auto& l : cell_labels(r))
    if (fits_gl(l, n)) s += gl_dimension(l.lambda, n - 1) * gl_dimension(l.lambda, n - 1);
  return s;
}

namespace {

bool all_commute(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (!commutator(x, y).is_zero()) return false;
  return true;
}

std::string dims(std::size_t a, std::size_t b) { return std::to_string(a) + " vs " + std::to_string(b); }

}  // namespace

Report duality_report(std::size_t n, std::size_t r, const BurauParams& p, std::size_t budget) {
  if (p.n != n) throw std::invalid_argument("parameter strand count does not match n");
  Report rep;
  rep.suite = "duality n=" + std::to_string(n) + " r=" + std::to_string(r) + " q1=" + to_string(p.q1) +
              " q2=" + to_string(p.q2);
  const TensorActionPair t = TensorActionPair::build(r, p, budget);
  const AlgebraBasis cent = centralizer_of_braid(t);
  const AlgebraBasis image = rook_image(t);
  const AlgebraBasis env = enveloping_braid(t);
  const AlgebraBasis rook_comm = commutant(t.rook_gens());
  const std::string ref = "Schur-Weyl duality between the braid group and the rook monoid algebra";

  rep.add("enveloping algebra of the braid action = commutant of the rook action", ref,
          same_subspace(env, rook_comm), "dims " + dims(env.dimension, rook_comm.dimension));
  rep.add("rook image = commutant of the braid action", ref, same_subspace(image, cent),
          "dims " + dims(image.dimension, cent.dimension));

  const unsigned long long predicted = predicted_centralizer_dim(n, r);
  rep.add("centralizer dimension = sum of squared cell dimensions over Lambda(n,r)", "centralizer dimension formula",
          cent.dimension == predicted, "dims " + dims(cent.dimension, predicted));

  rep.add("braid and rook actions commute", "bimodule structure on the tensor power",
          all_commute(t.braid_gens, t.rook_gens()));

  unsigned long long total = 0;
  for (const auto& l : cell_labels(r))
    if (fits_gl(l, n)) total += gl_dimension(l.lambda, n - 1) * cell_dim(r, l.lambda);
  const std::size_t nr = tensor_dimension(n, r, static_cast<std::size_t>(-1));
  rep.add("sum of dim Delta(lambda) * cell_dim(r, lambda) = n^r", "bimodule decomposition of the tensor power",
          total == nr, std::to_string(total) + " vs " + std::to_string(nr));

  const unsigned long long predicted_env = predicted_enveloping_dim(n, r);
  rep.add("enveloping algebra dimension = sum of dim Delta(lambda)^2", "semisimple enveloping algebra",
          env.dimension == predicted_env, "dims " + dims(env.dimension, predicted_env));

  const std::size_t rook_dim = rook_elements(r).size();
  const bool faithful = image.dimension == rook_dim;
  rep.add("rook action faithful exactly when n > r", "faithfulness of the rook action", faithful == (n > r),
          std::string(faithful ? "faithful" : "not faithful") + ", image dim " + std::to_string(image.dimension) +
              " of " + std::to_string(rook_dim));
  return rep;
}

std::optional<Scalar> q1_special_solve(std::size_t n) {
  if (n < 3) throw std::invalid_argument("q1_special_solve needs n >= 3");
  // Monic integer polynomial: every rational root is an integer dividing n - 1.
  const long c = static_cast<long>(n) - 1;
  for (long d = 2; d <= c; ++d) {
    if (c % d != 0) continue;
    for (long x : {-d, d})
      if (quantum_integer(n, Scalar(x)) == static_cast<long>(n)) return Scalar(x);
  }
  return std::nullopt;
}

}  // namespace bswd
