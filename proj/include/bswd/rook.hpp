#pragma once

#include "bswd/diagram.hpp"
#include "bswd/report.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace bswd {

/// Default ceiling on r for operations that enumerate the whole rook monoid.
inline constexpr std::size_t kRookEnumerationBound = 6;

/// A bijection between two subsets of {1..r}. Maps act on the right, so
/// x (d1 d2) = (x d1) d2.
class PartialPermutation {
 public:
  PartialPermutation() = default;
  /// images[x-1] is the image of x, or 0 when x is outside the domain.
  explicit PartialPermutation(std::vector<int> images);

  static PartialPermutation identity(std::size_t r);
  static PartialPermutation empty(std::size_t r);
  static PartialPermutation from_diagram(const SetPartitionDiagram& d);

  std::size_t r() const { return images_.size(); }
  /// Image of x (1-based), 0 when undefined.
  int operator()(int x) const { return images_[x - 1]; }
  const std::vector<int>& images() const { return images_; }

  std::size_t rank() const;
  std::vector<int> dom() const;
  std::vector<int> im() const;
  bool is_permutation() const { return rank() == r(); }

  PartialPermutation inverse() const;
  SetPartitionDiagram to_diagram() const;

  auto operator<=>(const PartialPermutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Right-action composition: x (a then b) = (x a) b.
PartialPermutation compose(const PartialPermutation& a, const PartialPermutation& b);

/// s_i swaps i and i+1.
PartialPermutation rook_s(std::size_t i, std::size_t r);
/// p_j is the identity with j removed from domain and image.
PartialPermutation rook_p(std::size_t j, std::size_t r);
/// Product of p_j over j in `removed` (identity on the complement).
PartialPermutation p_product(std::size_t r, const std::vector<int>& removed);

/// All partial permutations of {1..r}, sum_k C(r,k)^2 k! of them.
/// Throws std::out_of_range when r exceeds `bound`.
std::vector<PartialPermutation> rook_elements(std::size_t r, std::size_t bound = kRookEnumerationBound);

struct ComposeProps {
  std::size_t rank = 0;
  std::vector<int> dom;
  std::vector<int> im;
  std::size_t dropped = 0;
};
/// Rank, domain, image and dropped-loop count of d1 d2 by set arithmetic
/// (without composing).
ComposeProps compose_props(const PartialPermutation& d1, const PartialPermutation& d2);

struct CycleOrLink {
  bool is_link = false;
  std::vector<int> elements;  // a cycle (i1 .. im) or a chain [j1 .. jm] ending outside the domain
};
/// Disjoint cycles and links, ordered by smallest element. Cycles start
/// at their smallest element; links start at their point outside the image.
std::vector<CycleOrLink> cycle_link_decompose(const PartialPermutation& d);
/// E.g. "[1,2,3](4,5)[8,7,6]".
std::string render(const std::vector<CycleOrLink>& factors);
PartialPermutation reconstruct(std::size_t r, const std::vector<CycleOrLink>& factors);

/// The permutation obtained by closing every link into a cycle.
PartialPermutation canonical_extension(const PartialPermutation& d);
/// Every permutation agreeing with d on dom(d); (r - rank)! of them.
std::vector<PartialPermutation> all_extensions(const PartialPermutation& d);

/// Adjacent transposition indices i1..ik with w = s_{i1} s_{i2} ... s_{ik}.
std::vector<std::size_t> adjacent_word(const PartialPermutation& w);

struct Letter {
  GeneratorKind kind;  // S or P
  std::size_t index;
};
using Word = std::vector<Letter>;

/// A relation lhs = z^{z_power} rhs between words in s_i and p_j.
struct RelationInstance {
  std::string name;
  Word lhs;
  Word rhs;
  unsigned z_power = 0;
};

/// The transposition (i j), i < j, as a word in adjacent transpositions.
Word transposition_word(std::size_t i, std::size_t j);

/// Every instance of the defining relations of the rook monoid algebra at
/// size r, together with (i j) p_i p_j = p_i p_j (i j) = p_i p_j.
std::vector<RelationInstance> presentation_relations(std::size_t r);

/// Evaluates every relation instance in the diagram algebra with
/// parameter z. At z = 0 the p_j^2 instances are flagged.
Report verify_presentation(std::size_t r, const Scalar& z);

/// Checks that d -> z^{rank(d) - r} d is multiplicative from the algebra
/// at parameter 1 to the algebra at parameter z, on every pair of basis
/// diagrams. On generators this is s_i -> s_i, p_j -> z^{-1} p_j.
Report rescale_iso_check(std::size_t r, const Scalar& z);

}  // namespace bswd
