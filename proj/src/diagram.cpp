#include "bswd/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bswd {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

SetPartitionDiagram::SetPartitionDiagram(std::size_t r, std::vector<std::vector<int>> blocks)
    : r_(r), blocks_(std::move(blocks)) {
  std::vector<bool> seen(2 * r + 1, false);
  std::size_t total = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("diagram block is empty");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > static_cast<int>(2 * r)) throw std::invalid_argument("diagram node out of range");
      if (seen[x]) throw std::invalid_argument("diagram node appears in two blocks");
      seen[x] = true;
      ++total;
    }
  }
  if (total != 2 * r) throw std::invalid_argument("diagram blocks do not cover every node");
  std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

SetPartitionDiagram SetPartitionDiagram::identity(std::size_t r) {
  std::vector<std::vector<int>> blocks;
  for (std::size_t j = 1; j <= r; ++j) blocks.push_back({static_cast<int>(j), static_cast<int>(r + j)});
  return SetPartitionDiagram(r, std::move(blocks));
}

nlohmann::ordered_json SetPartitionDiagram::to_json() const {
  nlohmann::ordered_json j;
  j["r"] = r_;
  j["blocks"] = blocks_;
  return j;
}

SetPartitionDiagram SetPartitionDiagram::from_json(const nlohmann::ordered_json& j) {
  return SetPartitionDiagram(j.at("r").get<std::size_t>(), j.at("blocks").get<std::vector<std::vector<int>>>());
}

Composite compose_diagrams(const SetPartitionDiagram& d1, const SetPartitionDiagram& d2) {
  const std::size_t r = d1.r();
  if (d2.r() != r) throw std::invalid_argument("composing diagrams of different sizes");
  // Virtual nodes: top row 0..r-1, middle r..2r-1, bottom 2r..3r-1.
  UnionFind uf(3 * r);
  auto upper = [](int x) { return static_cast<std::size_t>(x) - 1; };             // d1: top->top, bottom->middle
  auto lower = [r](int x) { return r + static_cast<std::size_t>(x) - 1; };         // d2: top->middle, bottom->bottom
  for (const auto& b : d1.blocks())
    for (int x : b) uf.unite(upper(b.front()), upper(x));
  for (const auto& b : d2.blocks())
    for (int x : b) uf.unite(lower(b.front()), lower(x));

  std::map<std::size_t, std::vector<int>> outer;
  std::vector<bool> touches_outer(3 * r, false);
  for (std::size_t v = 0; v < 3 * r; ++v) {
    if (v >= r && v < 2 * r) continue;
    const std::size_t root = uf.find(v);
    touches_outer[root] = true;
    const int id = v < r ? static_cast<int>(v + 1) : static_cast<int>(v - r + 1);
    outer[root].push_back(id);
  }
  Composite out;
  for (std::size_t v = r; v < 2 * r; ++v) {
    const std::size_t root = uf.find(v);
    if (root == v && !touches_outer[root]) ++out.dropped;
  }
  std::vector<std::vector<int>> blocks;
  for (auto& [root, b] : outer) blocks.push_back(std::move(b));
  out.result = SetPartitionDiagram(r, std::move(blocks));
  return out;
}

SetPartitionDiagram generator_diagram(GeneratorKind kind, std::size_t index, std::size_t r) {
  const bool pair_kind = kind != GeneratorKind::P;
  if (index < 1 || (pair_kind ? index >= r : index > r))
    throw std::out_of_range("generator index out of range");
  const int n = static_cast<int>(r);
  const int i = static_cast<int>(index);
  std::vector<std::vector<int>> blocks;
  for (int j = 1; j <= n; ++j) {
    if (pair_kind && (j == i || j == i + 1)) continue;
    if (kind == GeneratorKind::P && j == i) continue;
    blocks.push_back({j, n + j});
  }
  switch (kind) {
    case GeneratorKind::S:
      blocks.push_back({i, n + i + 1});
      blocks.push_back({i + 1, n + i});
      break;
    case GeneratorKind::P:
      blocks.push_back({i});
      blocks.push_back({n + i});
      break;
    case GeneratorKind::PHalf:
      blocks.push_back({i, i + 1, n + i, n + i + 1});
      break;
  }
  return SetPartitionDiagram(r, std::move(blocks));
}

std::vector<SetPartitionDiagram> all_set_partitions(std::size_t r) {
  const std::size_t m = 2 * r;
  std::vector<SetPartitionDiagram> out;
  if (m == 0) {
    out.emplace_back(0, std::vector<std::vector<int>>{});
    return out;
  }
  // Restricted growth strings a[0] = 0, a[k] <= 1 + max(a[0..k-1]).
  std::vector<std::size_t> a(m, 0), mx(m, 0);
  while (true) {
    std::vector<std::vector<int>> blocks(mx[m - 1] + 1);
    for (std::size_t k = 0; k < m; ++k) blocks[a[k]].push_back(static_cast<int>(k + 1));
    out.emplace_back(r, std::move(blocks));
    std::size_t k = m - 1;
    while (k > 0 && a[k] == mx[k - 1] + 1) --k;
    if (k == 0) break;
    ++a[k];
    mx[k] = std::max(mx[k - 1], a[k]);
    for (std::size_t t = k + 1; t < m; ++t) {
      a[t] = 0;
      mx[t] = mx[k];
    }
  }
  return out;
}

DiagramElement DiagramElement::basis(const SetPartitionDiagram& d, const Scalar& z) {
  DiagramElement e(d.r(), z);
  e.add(d, 1);
  return e;
}

DiagramElement DiagramElement::one(std::size_t r, const Scalar& z) {
  return basis(SetPartitionDiagram::identity(r), z);
}

void DiagramElement::add(const SetPartitionDiagram& d, const Scalar& c) {
  if (d.r() != r_) throw std::invalid_argument("diagram size does not match element");
  if (is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(d, c);
  if (inserted) return;
  it->second += c;
  if (is_zero(it->second)) terms_.erase(it);
}

Scalar DiagramElement::coefficient(const SetPartitionDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void DiagramElement::check_compatible(const DiagramElement& other) const {
  if (r_ != other.r_) throw std::invalid_argument("diagram elements of different sizes");
  if (z_ != other.z_) throw ParameterError("diagram elements carry different z parameters");
}

DiagramElement& DiagramElement::operator+=(const DiagramElement& other) {
  check_compatible(other);
  for (const auto& [d, c] : other.terms_) add(d, c);
  return *this;
}

DiagramElement& DiagramElement::operator-=(const DiagramElement& other) {
  check_compatible(other);
  for (const auto& [d, c] : other.terms_) add(d, -c);
  return *this;
}

DiagramElement& DiagramElement::operator*=(const Scalar& c) {
  if (is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, x] : terms_) x *= c;
  return *this;
}

DiagramElement operator+(DiagramElement a, const DiagramElement& b) { return a += b; }
DiagramElement operator-(DiagramElement a, const DiagramElement& b) { return a -= b; }
DiagramElement operator*(const Scalar& c, DiagramElement a) { return a *= c; }

DiagramElement operator*(const DiagramElement& a, const DiagramElement& b) {
  a.check_compatible(b);
  DiagramElement out(a.r_, a.z_);
  for (const auto& [d1, c1] : a.terms_)
    for (const auto& [d2, c2] : b.terms_) {
      Composite comp = compose_diagrams(d1, d2);
      out.add(comp.result, c1 * c2 * power(a.z_, static_cast<long>(comp.dropped)));
    }
  return out;
}

Matrix left_regular_matrix(const DiagramElement& g, const std::vector<SetPartitionDiagram>& basis) {
  std::map<SetPartitionDiagram, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
  Matrix m(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const DiagramElement prod = g * DiagramElement::basis(basis[j], g.z());
    for (const auto& [d, c] : prod.terms()) {
      auto it = index.find(d);
      if (it == index.end()) throw std::invalid_argument("basis is not closed under the left action");
      m(it->second, j) = c;
    }
  }
  return m;
}

}  // namespace bswd
