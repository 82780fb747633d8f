#pragma once

#include "bswd/burau.hpp"
#include "bswd/linalg.hpp"
#include "bswd/report.hpp"
#include "bswd/rook.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bswd {

/// Default ceiling on the tensor-space dimension n^r.
inline constexpr std::size_t kTensorBudget = 256;

class BudgetError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// n^r, throwing BudgetError when it exceeds `budget`.
std::size_t tensor_dimension(std::size_t n, std::size_t r, std::size_t budget = kTensorBudget);

/// Basis tensor e_{j1} (x) ... (x) e_{jr} (1-based j) has index
/// sum_t (j_t - 1) n^{r-t}, matching kron.
std::size_t tensor_index(const std::vector<int>& js, std::size_t n);
std::vector<int> tensor_digits(std::size_t index, std::size_t n, std::size_t r);

/// r-fold Kronecker power of the unreduced generator beta_i.
Matrix braid_tensor_gen(std::size_t i, std::size_t r, const BurauParams& p);
Matrix braid_tensor_inverse(std::size_t i, std::size_t r, const BurauParams& p);

/// s_i swaps tensor places i, i+1; p_j applies P in place j.
Matrix rook_tensor_gen(GeneratorKind kind, std::size_t index, std::size_t r, const BurauParams& p);

/// Operator of a rook diagram as the product of generator operators along
/// d = p_{J} w(d), J the complement of dom(d).
Matrix rook_tensor_operator(const PartialPermutation& d, const BurauParams& p);
/// The same operator evaluated directly on basis tensors: slot t of the
/// output holds e_{j_{t d}} for t in dom(d) and f0 otherwise, scaled by
/// q^{j_b - 1} for every b outside im(d).
Matrix rook_tensor_operator_direct(const PartialPermutation& d, const BurauParams& p);

/// Both tensor-space actions at fixed (n, r).
struct TensorActionPair {
  std::size_t n = 0;
  std::size_t r = 0;
  BurauParams params;
  std::vector<Matrix> braid_gens;
  std::vector<Matrix> braid_inverses;
  std::vector<Matrix> rook_s;  // s_1..s_{r-1}
  std::vector<Matrix> rook_p;  // p_1..p_r

  static TensorActionPair build(std::size_t r, const BurauParams& p, std::size_t budget = kTensorBudget);
  std::vector<Matrix> rook_gens() const;
};

/// Evaluates every rook presentation relation on the tensor operators
/// with z = [n]_q.
Report verify_tensor_presentation(const TensorActionPair& t);

/// Commutant of the braid group action on E^{(x) r}.
AlgebraBasis centralizer_of_braid(const TensorActionPair& t);
/// Span of the operators of every rook diagram.
AlgebraBasis rook_image(const TensorActionPair& t);
/// Algebra generated by the braid generators and their inverses.
AlgebraBasis enveloping_braid(const TensorActionPair& t);
/// Commutant of the place permutations.
AlgebraBasis schur_algebra(const TensorActionPair& t);
/// Elements of the Schur algebra commuting with p_1.
AlgebraBasis schur_algebra_intersection(const TensorActionPair& t);

/// Sum over lambda in Lambda(n, r) of cell_dim(r, lambda)^2.
unsigned long long predicted_centralizer_dim(std::size_t n, std::size_t r);
/// Sum over lambda in Lambda(n, r) of dim Delta(lambda)^2, Delta the
/// GL_{n-1} module.
unsigned long long predicted_enveloping_dim(std::size_t n, std::size_t r);

/// The double-centralizer identities, dimension counts, commuting check
/// and faithfulness verdict for one (n, r, q1, q2).
Report duality_report(std::size_t n, std::size_t r, const BurauParams& p, std::size_t budget = kTensorBudget);

/// A rational q outside {0, 1, -1} with [n]_q = n, found by the rational
/// root test on x^{n-1} + ... + x + (1 - n); nullopt when none exists.
std::optional<Scalar> q1_special_solve(std::size_t n);

}  // namespace bswd
