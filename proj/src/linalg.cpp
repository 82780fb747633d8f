#include "bswd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

namespace bswd {

SparseVector to_sparse(std::span<const Scalar> dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!is_zero(dense[i])) out.emplace_back(i, dense[i]);
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t dim) {
  Vector out(dim);
  for (const auto& [i, x] : v) out[i] = x;
  return out;
}

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x) {
  if (is_zero(a) || x.empty()) return;
  SparseVector out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  Scalar t;
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(std::move(*iy++));
    } else if (iy == y.end() || ix->first < iy->first) {
      t = a * ix->second;
      out.emplace_back(ix->first, t);
      ++ix;
    } else {
      t = a * ix->second;
      iy->second += t;
      if (!is_zero(iy->second)) out.push_back(std::move(*iy));
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

namespace {

const Scalar* find_entry(const SparseVector& v, std::size_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const auto& e, std::size_t i) { return e.first < i; });
  if (it == v.end() || it->first != index) return nullptr;
  return &it->second;
}

Matrix reshape(const Vector& v, std::size_t n) { return Matrix(n, n, v); }

}  // namespace

RowReducer::RowReducer(std::size_t dim, PivotRule rule)
    : dim_(dim), rule_(rule), rows_(dim) {
  if (rule_ == PivotRule::Sparsest) column_count_.assign(dim, 0);
}

void RowReducer::eliminate_pivots(SparseVector& v) const {
  std::vector<std::pair<std::size_t, Scalar>> hits;
  for (const auto& [i, x] : v)
    if (!rows_[i].empty()) hits.emplace_back(i, x);
  if (hits.empty()) return;
  if (hits.size() == 1) {
    axpy(v, -hits[0].second, rows_[hits[0].first]);
    return;
  }
  // Many pivot hits: accumulate densely instead of repeated merges.
  std::map<std::size_t, Scalar> acc;
  for (auto& [i, x] : v) acc.emplace(i, std::move(x));
  Scalar t;
  for (const auto& [p, x] : hits) {
    for (const auto& [j, y] : rows_[p]) {
      t = x * y;
      acc[j] -= t;
    }
  }
  v.clear();
  for (auto& [i, x] : acc)
    if (!is_zero(x)) v.emplace_back(i, std::move(x));
}

std::size_t RowReducer::choose_pivot(const SparseVector& v) const {
  if (rule_ == PivotRule::Leftmost) return v.front().first;
  auto key = [&](const std::pair<std::size_t, Scalar>& e) {
    return std::make_tuple(column_count_[e.first], size_in_bits(e.second), e.first);
  };
  auto best = v.begin();
  auto best_key = key(*best);
  for (auto it = std::next(v.begin()); it != v.end(); ++it) {
    auto k = key(*it);
    if (k < best_key) {
      best_key = k;
      best = it;
    }
  }
  return best->first;
}

void RowReducer::count_columns(const SparseVector& v, long delta) {
  if (rule_ != PivotRule::Sparsest) return;
  for (const auto& e : v) column_count_[e.first] += delta;
}

bool RowReducer::insert(SparseVector v) {
  for (const auto& e : v)
    if (e.first >= dim_) throw std::out_of_range("vector index beyond reducer dimension");
  eliminate_pivots(v);
  if (v.empty()) return false;
  const std::size_t p = choose_pivot(v);
  const Scalar inv = Scalar(1) / *find_entry(v, p);
  for (auto& e : v) e.second *= inv;
  for (std::size_t c = 0; c < dim_; ++c) {
    SparseVector& row = rows_[c];
    if (row.empty()) continue;
    const Scalar* hit = find_entry(row, p);
    if (hit == nullptr) continue;
    const Scalar factor = -*hit;
    count_columns(row, -1);
    axpy(row, factor, v);
    count_columns(row, +1);
  }
  count_columns(v, +1);
  rows_[p] = std::move(v);
  ++rank_;
  return true;
}

SparseVector RowReducer::reduce(SparseVector v) const {
  eliminate_pivots(v);
  return v;
}

std::vector<Vector> RowReducer::basis() const {
  if (rule_ == PivotRule::Leftmost) {
    std::vector<Vector> out;
    out.reserve(rank_);
    for (std::size_t c = 0; c < dim_; ++c)
      if (!rows_[c].empty()) out.push_back(to_dense(rows_[c], dim_));
    return out;
  }
  RowReducer canonical(dim_, PivotRule::Leftmost);
  for (const auto& row : rows_)
    if (!row.empty()) canonical.insert(row);
  return canonical.basis();
}

std::vector<Vector> RowReducer::kernel() const {
  // For each free column f: x_f = 1 and x_p = -row_p[f] at every pivot p.
  std::vector<SparseVector> cols(dim_);
  for (std::size_t p = 0; p < dim_; ++p)
    for (const auto& [j, x] : rows_[p])
      if (j != p) cols[j].emplace_back(p, -x);
  RowReducer canonical(dim_, PivotRule::Leftmost);
  for (std::size_t f = 0; f < dim_; ++f) {
    if (!rows_[f].empty()) continue;
    SparseVector x = std::move(cols[f]);
    x.emplace_back(f, Scalar(1));
    std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    canonical.insert(std::move(x));
  }
  return canonical.basis();
}

std::size_t rank(const Matrix& a) {
  RowReducer red(a.cols(), PivotRule::Sparsest);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    SparseVector row;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) row.emplace_back(j, a(i, j));
    red.insert(std::move(row));
  }
  return red.rank();
}

std::vector<Vector> nullspace_basis(const Matrix& a) {
  RowReducer red(a.cols(), PivotRule::Sparsest);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    SparseVector row;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) row.emplace_back(j, a(i, j));
    red.insert(std::move(row));
  }
  return red.kernel();
}

Scalar determinant(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Scalar(1);
  // Scale each row to integers, then run Bareiss elimination over Z.
  std::vector<mpz_class> m(n * n);
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a(i, j).get_num() * (l / a(i, j).get_den());
  }
  int sign = 1;
  mpz_class prev = 1;
  mpz_class t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap * n + k] == 0) ++swap;
      if (swap == n) return Scalar(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[swap * n + j]);
      sign = -sign;
    }
    const mpz_class& pivot = m[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = m[i * n + j] * pivot;
        t -= m[i * n + k] * m[k * n + j];
        mpz_divexact(m[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i * n + k] = 0;
    }
    prev = pivot;
  }
  Scalar det(m[n * n - 1] * sign, scale);
  det.canonicalize();
  return det;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix m = a;
  Matrix inv = Matrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(m(p, k))) ++p;
    if (p == n) throw std::domain_error("matrix is singular");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    const Scalar piv = Scalar(1) / m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) *= piv;
      inv(k, j) *= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || is_zero(m(i, k))) continue;
      const Scalar f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_zero(m(k, j))) m(i, j) -= f * m(k, j);
        if (!is_zero(inv(k, j))) inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

AlgebraBasis commutant(std::span<const Matrix> gens, std::size_t size) {
  const std::size_t n = gens.empty() ? size : gens.front().rows();
  if (n == 0) throw std::invalid_argument("commutant needs a matrix size");
  for (const auto& g : gens)
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("commutant generators must be square and equal-sized");

  // Unknown X(c, b) sits at index c * n + b. Row (a, b) of g X - X g:
  //   sum_c g(a, c) X(c, b) - sum_c X(a, c) g(c, b).
  RowReducer red(n * n, PivotRule::Sparsest);
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> row_nz(n), col_nz(n);
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < n; ++i) {
      row_nz[i].clear();
      col_nz[i].clear();
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(g(i, j))) {
          row_nz[i].emplace_back(j, g(i, j));
          col_nz[j].emplace_back(i, g(i, j));
        }
    std::map<std::size_t, Scalar> eq;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        eq.clear();
        for (const auto& [c, x] : row_nz[a]) eq[c * n + b] += x;
        for (const auto& [c, x] : col_nz[b]) eq[a * n + c] -= x;
        SparseVector row;
        for (auto& [i, x] : eq)
          if (!is_zero(x)) row.emplace_back(i, std::move(x));
        if (!row.empty()) red.insert(std::move(row));
      }
  }
  AlgebraBasis out;
  for (const auto& v : red.kernel()) out.basis.push_back(reshape(v, n));
  out.dimension = out.basis.size();
  return out;
}

AlgebraBasis span_closure(std::span<const Matrix> seed) {
  if (seed.empty()) throw std::invalid_argument("span_closure needs a nonempty seed");
  const std::size_t n = seed.front().rows();
  for (const auto& g : seed)
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("span_closure seed must be square and equal-sized");

  // Words in the seed, built by left multiplication from the identity. A
  // product that reduces to zero is already in the span and is not
  // expanded further.
  RowReducer red(n * n, PivotRule::Leftmost);
  std::vector<Matrix> frontier{Matrix::identity(n)};
  red.insert(frontier.front().entries());
  for (std::size_t k = 0; k < frontier.size(); ++k) {
    for (const auto& g : seed) {
      Matrix w = g * frontier[k];
      if (red.insert(w.entries())) frontier.push_back(std::move(w));
    }
  }
  AlgebraBasis out;
  for (const auto& v : red.basis()) out.basis.push_back(reshape(v, n));
  out.dimension = out.basis.size();
  return out;
}

AlgebraBasis linear_span(std::span<const Matrix> mats) {
  if (mats.empty()) return {};
  const std::size_t n = mats.front().rows();
  RowReducer red(n * mats.front().cols(), PivotRule::Leftmost);
  for (const auto& m : mats) red.insert(m.entries());
  AlgebraBasis out;
  for (const auto& v : red.basis()) out.basis.emplace_back(n, mats.front().cols(), v);
  out.dimension = out.basis.size();
  return out;
}

bool in_span(const AlgebraBasis& space, const Matrix& m) {
  RowReducer red(m.rows() * m.cols(), PivotRule::Leftmost);
  for (const auto& b : space.basis) red.insert(b.entries());
  return red.contains(m.entries());
}

bool same_subspace(const AlgebraBasis& a, const AlgebraBasis& b) {
  if (a.dimension != b.dimension) return false;
  if (a.basis.empty()) return true;
  const auto& shape = a.basis.front();
  RowReducer red(shape.rows() * shape.cols(), PivotRule::Leftmost);
  for (const auto& m : a.basis) red.insert(m.entries());
  for (const auto& m : b.basis)
    if (!red.contains(m.entries())) return false;
  return true;
}

}  // namespace bswd
