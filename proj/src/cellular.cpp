#include "bswd/cellular.hpp"

#include "bswd/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bswd {

int YoungPartition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string YoungPartition::label() const {
  if (parts.empty()) return "∅";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(parts[i]);
  }
  return s;
}

std::vector<YoungPartition> partitions_of(int k) {
  std::vector<YoungPartition> out;
  std::vector<int> parts;
  std::function<void(int, int)> gen = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back({parts});
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      parts.push_back(p);
      gen(rest - p, p);
      parts.pop_back();
    }
  };
  gen(k, k);
  return out;
}

std::vector<CellLabel> cell_labels(std::size_t r) {
  std::vector<CellLabel> out;
  for (std::size_t k = 0; k <= r; ++k)
    for (auto& lambda : partitions_of(static_cast<int>(k))) out.push_back({k, std::move(lambda)});
  return out;
}

bool fits_gl(const CellLabel& label, std::size_t n) { return label.lambda.length() + 1 <= n; }

CellTriple triple_of(const PartialPermutation& d) {
  CellTriple t;
  t.dom = d.dom();
  t.im = d.im();
  std::vector<int> pi;
  for (int x : t.dom) {
    const auto it = std::lower_bound(t.im.begin(), t.im.end(), d(x));
    pi.push_back(static_cast<int>(it - t.im.begin()) + 1);
  }
  t.pi = PartialPermutation(std::move(pi));
  return t;
}

PartialPermutation diagram_of(const CellTriple& t, std::size_t r) {
  const std::size_t k = t.dom.size();
  if (t.im.size() != k || t.pi.r() != k || !t.pi.is_permutation())
    throw std::invalid_argument("malformed cell triple");
  auto check_subset = [r](const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 1 || s[i] > static_cast<int>(r)) throw std::invalid_argument("cell triple subset out of range");
      if (i > 0 && s[i - 1] >= s[i]) throw std::invalid_argument("cell triple subset not strictly increasing");
    }
  };
  check_subset(t.dom);
  check_subset(t.im);
  std::vector<int> images(r, 0);
  for (std::size_t i = 0; i < k; ++i) images[t.dom[i] - 1] = t.im[t.pi(static_cast<int>(i + 1)) - 1];
  return PartialPermutation(std::move(images));
}

std::vector<std::vector<int>> k_subsets(std::size_t r, std::size_t k) {
  std::vector<std::vector<int>> out;
  if (k > r) return out;
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 1);
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == static_cast<int>(r - k + i)) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

std::vector<PartialPermutation> permutations_of(std::size_t k) {
  std::vector<int> a(k);
  std::iota(a.begin(), a.end(), 1);
  std::vector<PartialPermutation> out;
  do {
    out.emplace_back(a);
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

namespace {

bool subset_of(const std::vector<int>& u, const std::vector<int>& sorted_set) {
  return std::includes(sorted_set.begin(), sorted_set.end(), u.begin(), u.end());
}

std::vector<int> preimage(const PartialPermutation& a, const std::vector<int>& u) {
  std::vector<int> out;
  for (int x = 1; x <= static_cast<int>(a.r()); ++x)
    if (a(x) != 0 && std::binary_search(u.begin(), u.end(), a(x))) out.push_back(x);
  return out;
}

}  // namespace

WeightedSubset phi(const PartialPermutation& a, const std::vector<int>& u, const Scalar& z) {
  if (!subset_of(u, a.im())) return {Scalar(0), {}};
  return {power(z, static_cast<long>(a.r() - a.rank())), preimage(a, u)};
}

std::optional<PartialPermutation> theta(const PartialPermutation& a, const std::vector<int>& u) {
  if (!subset_of(u, a.im())) return std::nullopt;
  std::vector<int> images(a.r(), 0);
  for (int x = 1; x <= static_cast<int>(a.r()); ++x)
    if (a(x) != 0 && std::binary_search(u.begin(), u.end(), a(x))) images[x - 1] = a(x);
  return triple_of(PartialPermutation(std::move(images))).pi;
}

Scalar psi(const std::vector<int>& y, const std::vector<int>& u, const Scalar& z, std::size_t r) {
  if (y != u) return 0;
  return power(z, static_cast<long>(r - u.size()));
}

WeightedSubset uk_generator_action(GeneratorKind kind, std::size_t index, const std::vector<int>& u,
                                   const Scalar& z, std::size_t r) {
  const int j = static_cast<int>(index);
  switch (kind) {
    case GeneratorKind::P:
      if (index < 1 || index > r) throw std::out_of_range("p_j index out of range");
      if (std::binary_search(u.begin(), u.end(), j)) return {Scalar(0), {}};
      return {z, u};
    case GeneratorKind::S: {
      if (index < 1 || index >= r) throw std::out_of_range("s_i index out of range");
      std::vector<int> out;
      for (int x : u) out.push_back(x == j ? j + 1 : x == j + 1 ? j : x);
      std::sort(out.begin(), out.end());
      return {Scalar(1), out};
    }
    case GeneratorKind::PHalf:
      break;
  }
  throw std::invalid_argument("not a rook monoid generator");
}

WeightedSubset uk_action(const PartialPermutation& d, const std::vector<int>& u, const Scalar& z) {
  const std::size_t r = d.r();
  std::vector<Letter> letters;
  std::vector<int> dom = d.dom();
  for (int j = 1; j <= static_cast<int>(r); ++j)
    if (!std::binary_search(dom.begin(), dom.end(), j)) letters.push_back({GeneratorKind::P, static_cast<std::size_t>(j)});
  for (std::size_t i : adjacent_word(canonical_extension(d))) letters.push_back({GeneratorKind::S, i});
  WeightedSubset cur{Scalar(1), u};
  // (x y) . u = x . (y . u): apply the rightmost letter first.
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    WeightedSubset next = uk_generator_action(it->kind, it->index, cur.set, z, r);
    if (is_zero(next.coeff)) return {Scalar(0), {}};
    cur = {cur.coeff * next.coeff, std::move(next.set)};
  }
  return cur;
}

bool inflation_rule_holds(const PartialPermutation& a, const std::vector<int>& u, const PartialPermutation& b,
                          const std::vector<int>& v, const Scalar& z) {
  const std::size_t r = a.r();
  const std::size_t k = u.size();
  const PartialPermutation d = diagram_of({u, b, v}, r);
  const Composite prod = compose_diagrams(a.to_diagram(), d.to_diagram());
  const PartialPermutation c = PartialPermutation::from_diagram(prod.result);
  const WeightedSubset ph = phi(a, u, z);
  const auto th = theta(a, u);
  if (is_zero(ph.coeff) || !th) return c.rank() < k && !th;
  if (c.rank() != k) return false;
  const PartialPermutation expected = diagram_of({ph.set, compose(*th, b), v}, r);
  return c == expected && power(z, static_cast<long>(prod.dropped)) == ph.coeff;
}

unsigned long long DimensionRow::sum_of_squares() const {
  unsigned long long s = 0;
  for (const auto& [label, c] : entries) s += c * c;
  return s;
}

namespace {

std::vector<YoungPartition> remove_one_box(const YoungPartition& lambda) {
  std::vector<YoungPartition> out;
  const auto& p = lambda.parts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i + 1 < p.size() && p[i] == p[i + 1]) continue;
    YoungPartition mu = lambda;
    if (--mu.parts[i] == 0) mu.parts.pop_back();
    out.push_back(std::move(mu));
  }
  return out;
}

bool adds_one_box(const YoungPartition& mu, const YoungPartition& lambda) {
  if (lambda.size() != mu.size() + 1) return false;
  const auto removed = remove_one_box(lambda);
  return std::find(removed.begin(), removed.end(), mu) != removed.end();
}

}  // namespace

std::vector<DimensionRow> dim_recursion(std::size_t max_r) {
  std::vector<DimensionRow> rows;
  rows.push_back({0, {{CellLabel{0, {}}, 1ULL}}});
  for (std::size_t r = 1; r <= max_r; ++r) {
    std::map<YoungPartition, unsigned long long> prev;
    for (const auto& [label, c] : rows.back().entries) prev[label.lambda] = c;
    DimensionRow row{r, {}};
    for (const auto& label : cell_labels(r)) {
      unsigned long long c = 0;
      if (label.k + 1 <= r) c += prev.at(label.lambda);
      for (const auto& mu : remove_one_box(label.lambda)) c += prev.at(mu);
      row.entries.emplace_back(label, c);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

int hook(const YoungPartition& lambda, std::size_t i, int j) {
  int arm = lambda.parts[i] - j - 1;
  int leg = 0;
  for (std::size_t t = i + 1; t < lambda.parts.size() && lambda.parts[t] > j; ++t) ++leg;
  return arm + leg + 1;
}

}  // namespace

unsigned long long standard_tableaux_count(const YoungPartition& lambda) {
  mpz_class num = 1, den = 1;
  for (int t = 2; t <= lambda.size(); ++t) num *= t;
  for (std::size_t i = 0; i < lambda.parts.size(); ++i)
    for (int j = 0; j < lambda.parts[i]; ++j) den *= hook(lambda, i, j);
  return mpz_class(num / den).get_ui();
}

unsigned long long binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b.get_ui();
}

unsigned long long cell_dim(std::size_t r, const YoungPartition& lambda) {
  return binomial(r, static_cast<std::size_t>(lambda.size())) * standard_tableaux_count(lambda);
}

unsigned long long gl_dimension(const YoungPartition& lambda, std::size_t m) {
  if (lambda.length() > m) return 0;
  mpz_class num = 1, den = 1;
  for (std::size_t i = 0; i < lambda.parts.size(); ++i)
    for (int j = 0; j < lambda.parts[i]; ++j) {
      num *= static_cast<long>(m) + j - static_cast<long>(i);
      den *= hook(lambda, i, j);
    }
  return mpz_class(num / den).get_ui();
}

BratteliDiagram bratteli(std::size_t r) {
  BratteliDiagram g;
  for (std::size_t t = 0; t <= r; ++t) {
    std::vector<YoungPartition> row;
    for (auto& label : cell_labels(t)) row.push_back(std::move(label.lambda));
    g.rows.push_back(std::move(row));
  }
  g.path_counts.push_back({1ULL});
  for (std::size_t t = 0; t < r; ++t) {
    const auto& upper = g.rows[t];
    const auto& lower = g.rows[t + 1];
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<unsigned long long> counts(lower.size(), 0);
    for (std::size_t a = 0; a < upper.size(); ++a)
      for (std::size_t b = 0; b < lower.size(); ++b)
        if (upper[a] == lower[b] || adds_one_box(upper[a], lower[b])) {
          edges.emplace_back(a, b);
          counts[b] += g.path_counts[t][a];
        }
    g.edges.push_back(std::move(edges));
    g.path_counts.push_back(std::move(counts));
  }
  return g;
}

std::string BratteliDiagram::to_dot() const {
  std::ostringstream os;
  auto id = [](std::size_t t, std::size_t a) { return "\"r" + std::to_string(t) + "_" + std::to_string(a) + "\""; };
  os << "graph bratteli {\n";
  for (std::size_t t = 0; t < rows.size(); ++t) {
    os << "  subgraph row" << t << " {\n    rank=same;\n";
    for (std::size_t a = 0; a < rows[t].size(); ++a)
      os << "    " << id(t, a) << " [label=\"" << rows[t][a].label() << "\"];\n";
    os << "  }\n";
  }
  for (std::size_t t = 0; t < edges.size(); ++t)
    for (const auto& [a, b] : edges[t]) os << "  " << id(t, a) << " -- " << id(t + 1, b) << ";\n";
  os << "}\n";
  return os.str();
}

SemisimplicityCertificate semisimplicity_certificate(std::size_t r, const Scalar& z) {
  if (is_zero(z)) throw ParameterError("semisimplicity certificate needs z != 0");
  SemisimplicityCertificate cert;
  cert.r = r;
  cert.z = z;
  const auto elems = rook_elements(r);
  std::map<PartialPermutation, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);

  // Trace of left multiplication by the basis diagram x.
  std::vector<Scalar> trace(elems.size());
  for (std::size_t x = 0; x < elems.size(); ++x)
    for (const auto& e : elems)
      if (compose(elems[x], e) == e) trace[x] += power(z, static_cast<long>(compose_props(elems[x], e).dropped));

  Matrix gram(elems.size(), elems.size());
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) {
      const auto n = compose_props(elems[a], elems[b]).dropped;
      gram(a, b) = power(z, static_cast<long>(n)) * trace[index.at(compose(elems[a], elems[b]))];
    }
  cert.gram_determinant = determinant(gram);
  cert.gram_nondegenerate = !is_zero(cert.gram_determinant);

  cert.cell_forms_nondegenerate = true;
  for (std::size_t k = 0; k <= r; ++k) {
    const auto subsets = k_subsets(r, k);
    Matrix form(subsets.size(), subsets.size());
    for (std::size_t a = 0; a < subsets.size(); ++a)
      for (std::size_t b = 0; b < subsets.size(); ++b) form(a, b) = psi(subsets[a], subsets[b], z, r);
    cert.cell_form_determinants.push_back(determinant(form));
    if (is_zero(cert.cell_form_determinants.back())) cert.cell_forms_nondegenerate = false;
  }
  return cert;
}

nlohmann::ordered_json to_json(const std::vector<DimensionRow>& rows) {
  nlohmann::ordered_json j;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json jr;
    jr["r"] = row.r;
    jr["entries"] = nlohmann::ordered_json::array();
    for (const auto& [label, c] : row.entries) {
      nlohmann::ordered_json e;
      e["k"] = label.k;
      e["lambda"] = label.lambda.parts;
      e["label"] = label.lambda.label();
      e["dim"] = c;
      jr["entries"].push_back(std::move(e));
    }
    jr["sum_of_squares"] = row.sum_of_squares();
    j["rows"].push_back(std::move(jr));
  }
  return j;
}

namespace {

std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

std::string pad_left(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return std::string(width > w ? width - w : 0, ' ') + s;
}

}  // namespace

std::string to_text(const std::vector<DimensionRow>& rows) {
  const auto labels = cell_labels(rows.empty() ? 0 : rows.back().r);
  std::vector<std::size_t> width;
  for (const auto& l : labels) width.push_back(std::max<std::size_t>(display_width(l.lambda.label()), 3));
  std::ostringstream os;
  os << pad_left("r", 3);
  for (std::size_t i = 0; i < labels.size(); ++i) os << "  " << pad_left(labels[i].lambda.label(), width[i]);
  os << "  " << pad_left("sum c^2", 8) << "\n";
  for (const auto& row : rows) {
    os << pad_left(std::to_string(row.r), 3);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      std::string cell;
      for (const auto& [label, c] : row.entries)
        if (label == labels[i]) cell = std::to_string(c);
      os << "  " << pad_left(cell, width[i]);
    }
    os << "  " << pad_left(std::to_string(row.sum_of_squares()), 8) << "\n";
  }
  return os.str();
}

}  // namespace bswd
