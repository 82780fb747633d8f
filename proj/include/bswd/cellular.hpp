#pragma once

#include "bswd/rook.hpp"

#include "json.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bswd {

/// Weakly decreasing positive parts; the empty partition has no parts.
struct YoungPartition {
  std::vector<int> parts;

  int size() const;
  std::size_t length() const { return parts.size(); }
  /// "2,1"; the empty partition renders as "∅".
  std::string label() const;

  auto operator<=>(const YoungPartition&) const = default;
};

/// Partitions of k in reverse lexicographic order: (k), (k-1,1), ..., (1^k).
std::vector<YoungPartition> partitions_of(int k);

struct CellLabel {
  std::size_t k = 0;
  YoungPartition lambda;
  auto operator<=>(const CellLabel&) const = default;
};

/// All (k, lambda) with lambda a partition of k and 0 <= k <= r, ordered
/// by k, then reverse lexicographically.
std::vector<CellLabel> cell_labels(std::size_t r);
/// lambda has at most n - 1 parts.
bool fits_gl(const CellLabel& label, std::size_t n);

/// dom(d), the permutation pi(d) of {1..k}, and im(d), where
/// i pi = j exactly when the i-th smallest domain point maps to the j-th
/// smallest image point.
struct CellTriple {
  std::vector<int> dom;
  PartialPermutation pi;
  std::vector<int> im;
  auto operator<=>(const CellTriple&) const = default;
};
CellTriple triple_of(const PartialPermutation& d);
PartialPermutation diagram_of(const CellTriple& t, std::size_t r);

/// All k-subsets of {1..r} in lexicographic order.
std::vector<std::vector<int>> k_subsets(std::size_t r, std::size_t k);
/// All permutations of {1..k} in lexicographic order.
std::vector<PartialPermutation> permutations_of(std::size_t k);

struct WeightedSubset {
  Scalar coeff;  // zero means the zero vector
  std::vector<int> set;
  bool operator==(const WeightedSubset&) const = default;
};

/// z^{r - rank a} times the preimage of u under a when u lies in im(a);
/// zero otherwise.
WeightedSubset phi(const PartialPermutation& a, const std::vector<int>& u, const Scalar& z);
/// pi of the restriction of a to the preimage of u; nullopt when u is not
/// contained in im(a).
std::optional<PartialPermutation> theta(const PartialPermutation& a, const std::vector<int>& u);
/// z^{r-k} when y = u, else 0 (as a multiple of the identity of S_k).
Scalar psi(const std::vector<int>& y, const std::vector<int>& u, const Scalar& z, std::size_t r);

/// Action of a generator on a k-subset u: p_j u = z u when j is not in u
/// (else 0); s_i u = preimage of u under s_i.
WeightedSubset uk_generator_action(GeneratorKind kind, std::size_t index, const std::vector<int>& u,
                                   const Scalar& z, std::size_t r);
/// Action of any rook diagram, evaluated through its factorization
/// d = p w(d) into generators.
WeightedSubset uk_action(const PartialPermutation& d, const std::vector<int>& u, const Scalar& z);

/// The product a * (u, b, v) (z^N times a diagram) compared with the
/// prediction (phi(a,u), theta(a,u) b, v) in rank k and zero otherwise.
bool inflation_rule_holds(const PartialPermutation& a, const std::vector<int>& u, const PartialPermutation& b,
                          const std::vector<int>& v, const Scalar& z);

struct DimensionRow {
  std::size_t r = 0;
  std::vector<std::pair<CellLabel, unsigned long long>> entries;
  unsigned long long sum_of_squares() const;
};
/// Rows 0..max_r of c^r_lambda from c^r = [in Lambda(r-1)] c^{r-1}_lambda +
/// sum over lambda minus a box.
std::vector<DimensionRow> dim_recursion(std::size_t max_r);

/// Number of standard tableaux of shape lambda (hook length formula).
unsigned long long standard_tableaux_count(const YoungPartition& lambda);
unsigned long long binomial(std::size_t n, std::size_t k);
/// C(r, k) f^lambda.
unsigned long long cell_dim(std::size_t r, const YoungPartition& lambda);
/// Dimension of the irreducible polynomial GL_m module of highest weight
/// lambda: the number of semistandard tableaux with entries <= m.
unsigned long long gl_dimension(const YoungPartition& lambda, std::size_t m);

struct BratteliDiagram {
  std::vector<std::vector<YoungPartition>> rows;
  /// (index in row t, index in row t+1) for each t.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> edges;
  /// Paths from the root to each vertex, per row.
  std::vector<std::vector<unsigned long long>> path_counts;

  std::string to_dot() const;
};
BratteliDiagram bratteli(std::size_t r);

struct SemisimplicityCertificate {
  std::size_t r = 0;
  Scalar z;
  Scalar gram_determinant;
  /// Per rank k: determinant of the psi form on U(k), (z^{r-k})^{C(r,k)}.
  std::vector<Scalar> cell_form_determinants;
  bool gram_nondegenerate = false;
  bool cell_forms_nondegenerate = false;
  bool agree() const { return gram_nondegenerate == cell_forms_nondegenerate; }
};
/// Trace form of the regular representation on the diagram basis, and the
/// per-cell psi forms. Throws ParameterError when z = 0.
SemisimplicityCertificate semisimplicity_certificate(std::size_t r, const Scalar& z);

nlohmann::ordered_json to_json(const std::vector<DimensionRow>& rows);
std::string to_text(const std::vector<DimensionRow>& rows);

}  // namespace bswd
