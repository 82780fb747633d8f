#pragma once

#include "bswd/matrix.hpp"

#include "json.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

namespace bswd {

/// A set partition of the 2r nodes of a diagram. Top nodes are 1..r,
/// bottom nodes r+1..2r (bottom node j' has id r+j). Blocks are sorted,
/// and ordered by their smallest node.
class SetPartitionDiagram {
 public:
  SetPartitionDiagram() = default;
  /// Validates that the blocks partition {1..2r} and canonicalizes.
  SetPartitionDiagram(std::size_t r, std::vector<std::vector<int>> blocks);

  static SetPartitionDiagram identity(std::size_t r);

  std::size_t r() const { return r_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  auto operator<=>(const SetPartitionDiagram&) const = default;

  nlohmann::ordered_json to_json() const;
  static SetPartitionDiagram from_json(const nlohmann::ordered_json& j);

 private:
  std::size_t r_ = 0;
  std::vector<std::vector<int>> blocks_;
};

struct Composite {
  SetPartitionDiagram result;
  std::size_t dropped = 0;  // components lying entirely in the middle row
};

/// Stacks d1 above d2, identifying the bottom row of d1 with the top row
/// of d2.
Composite compose_diagrams(const SetPartitionDiagram& d1, const SetPartitionDiagram& d2);

enum class GeneratorKind { S, P, PHalf };

/// s_i (1 <= i < r) crosses columns i, i+1; p_j (1 <= j <= r) isolates
/// j and j'; p_{i+1/2} (1 <= i < r) joins i, i+1, i', (i+1)' into one
/// block. All other columns are vertical edges.
SetPartitionDiagram generator_diagram(GeneratorKind kind, std::size_t index, std::size_t r);

/// Every set partition of the 2r nodes (Bell(2r) of them), in a fixed order.
std::vector<SetPartitionDiagram> all_set_partitions(std::size_t r);

/// Finite linear combination of diagrams in an algebra with parameter z.
class DiagramElement {
 public:
  DiagramElement(std::size_t r, Scalar z) : r_(r), z_(std::move(z)) {}
  static DiagramElement basis(const SetPartitionDiagram& d, const Scalar& z);
  static DiagramElement one(std::size_t r, const Scalar& z);

  std::size_t r() const { return r_; }
  const Scalar& z() const { return z_; }
  const std::map<SetPartitionDiagram, Scalar>& terms() const { return terms_; }

  void add(const SetPartitionDiagram& d, const Scalar& c);
  /// Coefficient of d (zero when absent).
  Scalar coefficient(const SetPartitionDiagram& d) const;

  DiagramElement& operator+=(const DiagramElement& other);
  DiagramElement& operator-=(const DiagramElement& other);
  DiagramElement& operator*=(const Scalar& c);

  friend bool operator==(const DiagramElement& a, const DiagramElement& b) {
    return a.r_ == b.r_ && a.z_ == b.z_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const DiagramElement& other) const;

  std::size_t r_;
  Scalar z_;
  std::map<SetPartitionDiagram, Scalar> terms_;

  friend DiagramElement operator*(const DiagramElement& a, const DiagramElement& b);
};

DiagramElement operator+(DiagramElement a, const DiagramElement& b);
DiagramElement operator-(DiagramElement a, const DiagramElement& b);
DiagramElement operator*(const Scalar& c, DiagramElement a);
/// Bilinear extension of d1 d2 = z^N (d1 o d2).
DiagramElement operator*(const DiagramElement& a, const DiagramElement& b);

/// Matrix of left multiplication by g on the span of `basis` (which must
/// be closed under left multiplication by g). Column j is g * basis[j].
Matrix left_regular_matrix(const DiagramElement& g, const std::vector<SetPartitionDiagram>& basis);

}  // namespace bswd
