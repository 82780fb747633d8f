#include "bswd/cellular.hpp"
#include "bswd/diagram.hpp"
#include "bswd/rook.hpp"

#include "doctest.h"

#include <set>

using namespace bswd;

namespace {

unsigned long long factorial(unsigned k) { return k == 0 ? 1 : k * factorial(k - 1); }

// Bell numbers by the Bell triangle.
unsigned long long bell(std::size_t m) {
  std::vector<unsigned long long> row = {1};
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<unsigned long long> next = {row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = next;
  }
  return row.front();
}

}  // namespace

TEST_CASE("set partition and rook monoid counts") {
  for (std::size_t r = 0; r <= 3; ++r) CHECK(all_set_partitions(r).size() == bell(2 * r));
  for (std::size_t r = 0; r <= 5; ++r) {
    unsigned long long expected = 0;
    for (std::size_t k = 0; k <= r; ++k) expected += binomial(r, k) * binomial(r, k) * factorial(k);
    CHECK(rook_elements(r).size() == expected);
  }
  CHECK_THROWS_AS(rook_elements(7), std::out_of_range);
}

TEST_CASE("diagram validation") {
  CHECK_THROWS(SetPartitionDiagram(2, {{1, 2}, {3}}));          // node 4 missing
  CHECK_THROWS(SetPartitionDiagram(2, {{1, 2}, {2, 3}, {4}}));  // node 2 repeated
  const SetPartitionDiagram d(2, {{4, 1}, {3}, {2}});
  CHECK(d.blocks().front() == std::vector<int>{1, 4});
  CHECK(SetPartitionDiagram::from_json(d.to_json()) == d);
}

TEST_CASE("composition is associative and counts middle components") {
  const auto parts = all_set_partitions(2);
  for (std::size_t a = 0; a < parts.size(); a += 2)
    for (std::size_t b = 0; b < parts.size(); b += 3)
      for (std::size_t c = 0; c < parts.size(); c += 4) {
        const Composite ab = compose_diagrams(parts[a], parts[b]);
        const Composite bc = compose_diagrams(parts[b], parts[c]);
        const Composite left = compose_diagrams(ab.result, parts[c]);
        const Composite right = compose_diagrams(parts[a], bc.result);
        CHECK(left.result == right.result);
        CHECK(ab.dropped + left.dropped == bc.dropped + right.dropped);
      }
  const auto p1 = generator_diagram(GeneratorKind::P, 1, 2);
  const Composite sq = compose_diagrams(p1, p1);
  CHECK(sq.result == p1);
  CHECK(sq.dropped == 1);
  const auto half = generator_diagram(GeneratorKind::PHalf, 1, 2);
  CHECK(half.blocks().size() == 1);
  CHECK(compose_diagrams(half, half).dropped == 0);
}

TEST_CASE("diagram algebra products carry z powers") {
  const Scalar z = 5;
  const auto p2 = DiagramElement::basis(generator_diagram(GeneratorKind::P, 2, 3), z);
  CHECK(p2 * p2 == z * p2);
  const auto one = DiagramElement::one(3, z);
  CHECK(one * p2 == p2);
  CHECK_THROWS_AS(p2 * DiagramElement::one(3, 2), ParameterError);
}

TEST_CASE("partial permutations compose on the right and agree with diagram stacking") {
  const auto elems = rook_elements(3);
  for (const auto& a : elems)
    for (const auto& b : elems) {
      const PartialPermutation ab = compose(a, b);
      for (int x = 1; x <= 3; ++x) CHECK(ab(x) == (a(x) == 0 ? 0 : b(a(x))));
      const Composite c = compose_diagrams(a.to_diagram(), b.to_diagram());
      CHECK(PartialPermutation::from_diagram(c.result) == ab);
      const ComposeProps props = compose_props(a, b);
      CHECK(props.rank == ab.rank());
      CHECK(props.dom == ab.dom());
      CHECK(props.im == ab.im());
      CHECK(props.dropped == c.dropped);
    }
  CHECK(compose(rook_s(1, 3), rook_s(2, 3))(1) == 3);
}

TEST_CASE("cycle and link notation") {
  // 1 -> 2 -> 3 (3 undefined), 4 <-> 5, 8 -> 7 -> 6.
  const PartialPermutation d({2, 3, 0, 5, 4, 0, 6, 7});
  const auto factors = cycle_link_decompose(d);
  CHECK(render(factors) == "[1,2,3](4,5)[8,7,6]");
  CHECK(reconstruct(8, factors) == d);
  for (const auto& e : rook_elements(4)) CHECK(reconstruct(4, cycle_link_decompose(e)) == e);
}

TEST_CASE("extensions and adjacent words") {
  for (const auto& d : rook_elements(4)) {
    const auto ext = all_extensions(d);
    CHECK(ext.size() == [&] {
      unsigned long long f = 1;
      for (std::size_t k = 2; k <= 4 - d.rank(); ++k) f *= k;
      return f;
    }());
    const std::set<PartialPermutation> unique(ext.begin(), ext.end());
    CHECK(unique.size() == ext.size());
    const PartialPermutation w = canonical_extension(d);
    CHECK(unique.count(w) == 1);
    PartialPermutation prod = PartialPermutation::identity(4);
    for (std::size_t i : adjacent_word(w)) prod = compose(prod, rook_s(i, 4));
    CHECK(prod == w);
    // d = p_J w with J the complement of dom(d).
    std::vector<int> missing;
    for (int x = 1; x <= 4; ++x)
      if (d(x) == 0) missing.push_back(x);
    CHECK(compose(p_product(4, missing), w) == d);
  }
}

TEST_CASE("presentation and rescaling") {
  for (std::size_t r = 2; r <= 4; ++r)
    for (const auto& z : {Scalar(1), Scalar(-2), Scalar(3, 4)}) {
      CHECK(verify_presentation(r, z).passed());
      CHECK(rescale_iso_check(r, z).passed());
    }
  const Report at_zero = verify_presentation(3, 0);
  CHECK(at_zero.passed());
  bool flagged = false;
  for (const auto& c : at_zero.checks) flagged = flagged || c.status == Status::Flagged;
  CHECK(flagged);
  CHECK_THROWS_AS(rescale_iso_check(2, 0), ParameterError);
}
