#include "bswd/suite.hpp"

#include "bswd/burau.hpp"
#include "bswd/cellular.hpp"
#include "bswd/lie.hpp"
#include "bswd/linalg.hpp"
#include "bswd/rook.hpp"
#include "bswd/schur_weyl.hpp"

#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

namespace bswd {

namespace {

std::string str(std::size_t x) { return std::to_string(x); }

// Representative parameter pairs: the default preset, a generic pair, and
// a pair with negative q1.
std::vector<std::pair<Scalar, Scalar>> sample_params() {
  return {{Scalar(1), Scalar(-2)}, {Scalar(2), Scalar(3)}, {Scalar(-1, 2), Scalar(5, 3)}};
}

Report dimension_table() {
  Report rep;
  rep.suite = "dimension table";
  const std::string ref = "multiplicities c^r_lambda and dim P'_r";
  const std::vector<std::vector<unsigned long long>> expected = {
      {1}, {1, 1}, {1, 2, 1, 1}, {1, 3, 3, 3, 1, 2, 1}, {1, 4, 6, 6, 4, 8, 4, 1, 3, 2, 3, 1}};
  const std::vector<unsigned long long> squares = {1, 2, 7, 34, 209};
  const auto rows = dim_recursion(4);
  const auto graph = bratteli(4);
  for (std::size_t r = 0; r <= 4; ++r) {
    std::vector<unsigned long long> got, hooks;
    for (const auto& [label, c] : rows[r].entries) {
      got.push_back(c);
      hooks.push_back(cell_dim(r, label.lambda));
    }
    rep.add("row r=" + str(r) + " entries", ref, got == expected[r]);
    rep.add("row r=" + str(r) + " sum of squares = " + std::to_string(squares[r]), ref,
            rows[r].sum_of_squares() == squares[r], std::to_string(rows[r].sum_of_squares()));
    rep.add("row r=" + str(r) + " recursion = binomial * hook length = Bratteli paths", "cell module dimensions",
            got == hooks && got == graph.path_counts[r]);
    rep.add("row r=" + str(r) + " sum of squares = rook monoid size", ref,
            rows[r].sum_of_squares() == rook_elements(r).size());
  }
  return rep;
}

Report centralizer_rank_one() {
  Report rep;
  rep.suite = "centralizer of E";
  const std::string ref = "End of the unreduced representation is spanned by 1 and P";
  for (std::size_t n = 2; n <= 5; ++n) {
    const BurauParams p = BurauParams::from_q(n, 2);
    const TensorActionPair t = TensorActionPair::build(1, p);
    const AlgebraBasis cent = centralizer_of_braid(t);
    rep.add("n=" + str(n) + " centralizer dimension 2", ref, cent.dimension == 2, str(cent.dimension));
    rep.add("n=" + str(n) + " P lies in the centralizer", ref, in_span(cent, projection_p(p)));
  }
  return rep;
}

std::vector<Matrix> seven_element_set(const TensorActionPair& t) {
  const Matrix one = Matrix::identity(t.rook_s[0].rows());
  const Matrix& s = t.rook_s[0];
  const Matrix& p1 = t.rook_p[0];
  const Matrix& p2 = t.rook_p[1];
  return {one, s, p1, p2, s * p1, p1 * s, p1 * p2};
}

Report two_fold_tensor() {
  Report rep;
  rep.suite = "two-fold tensor power";
  const std::string ref = "centralizer of E (x) E";
  for (std::size_t n : {3, 2}) {
    const BurauParams p = BurauParams::from_q(n, 2);
    const TensorActionPair t = TensorActionPair::build(2, p);
    const std::size_t want = n == 3 ? 7 : 6;
    const AlgebraBasis cent = centralizer_of_braid(t);
    rep.add("n=" + str(n) + " centralizer dimension " + str(want), ref, cent.dimension == want, str(cent.dimension));
    const AlgebraBasis span7 = linear_span(seven_element_set(t));
    rep.add("n=" + str(n) + " {1, s, p1, p2, s p1, p1 s, p1 p2} has rank " + str(want), ref,
            span7.dimension == want && same_subspace(span7, cent), str(span7.dimension));
    if (n == 2) {
      const Scalar q = p.q();
      const Matrix& s = t.rook_s[0];
      const Matrix& p1 = t.rook_p[0];
      const Matrix& p2 = t.rook_p[1];
      const Matrix one = Matrix::identity(s.rows());
      const Matrix rel = p1 - s * p1 - p1 * s + p2 - (1 + q) * (one - s);
      rep.add("n=2 dependence p1 - s p1 - p1 s + p2 - (1+q)(1 - s) = 0", ref, rel.is_zero());
    }
  }
  return rep;
}

Report duality_grid() {
  Report rep;
  rep.suite = "duality grid";
  const std::vector<std::pair<std::size_t, std::size_t>> grid = {{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}};
  for (const auto& q : {Scalar(2), Scalar(1, 2), Scalar(-2)})
    for (const auto& [n, r] : grid) {
      Report one = duality_report(n, r, BurauParams::from_q(n, q));
      for (auto& c : one.checks) c.name = one.suite + ": " + c.name;
      rep.append(one);
    }
  return rep;
}

Report special_q() {
  Report rep;
  rep.suite = "q with [n]_q = n";
  const std::string ref = "duality with z = n";
  const auto q3 = q1_special_solve(3);
  rep.add("n=3 solution q = -2", ref, q3 && *q3 == -2, q3 ? to_string(*q3) : "none");
  const auto q4 = q1_special_solve(4);
  rep.add("n=4 has no rational solution", ref, !q4, q4 ? to_string(*q4) : "none");
  const BurauParams p = BurauParams::from_q(3, -2);
  rep.add("[3]_{-2} = 3", ref, p.qn() == 3, to_string(p.qn()));
  Report d = duality_report(3, 2, p);
  for (auto& c : d.checks) c.name = d.suite + ": " + c.name;
  rep.append(d);
  return rep;
}

Matrix displayed_schur_element(const Scalar& x1, const Scalar& x4, const Scalar& x8, const Scalar& q) {
  const Scalar d = q - 1;
  return Matrix::from_rows({
      {x1, q * x4, q * x4, q * q * x8},
      {x4, x1 + d * x4, q * x8, q * x4 + d * q * x8},
      {x4, q * x8, x1 + d * x4, q * x4 + d * q * x8},
      {x8, x4 + d * x8, x4 + d * x8, x1 + 2 * d * x4 + d * d * x8},
  });
}

Report schur_algebras() {
  Report rep;
  rep.suite = "Schur algebras";
  const std::string ref = "S'_q(n,r) = S(n,r) intersect Comm(p_1)";
  const BurauParams p = BurauParams::from_q(2, 2);
  const TensorActionPair t = TensorActionPair::build(2, p);
  const AlgebraBasis s22 = schur_algebra(t);
  rep.add("dim S(2,2) = 10", ref, s22.dimension == 10, str(s22.dimension));

  std::vector<Matrix> shape10;
  for (int k = 0; k < 10; ++k) {
    std::vector<Scalar> x(10);
    x[k] = 1;
    shape10.push_back(Matrix::from_rows({{x[0], x[1], x[1], x[2]},
                                         {x[3], x[4], x[5], x[6]},
                                         {x[3], x[5], x[4], x[6]},
                                         {x[7], x[8], x[8], x[9]}}));
  }
  rep.add("S(2,2) equals the 10-parameter matrix family", ref, same_subspace(s22, linear_span(shape10)));

  const AlgebraBasis sq = schur_algebra_intersection(t);
  rep.add("dim S'_q(2,2) = 3 at q = 2", ref, sq.dimension == 3, str(sq.dimension));
  rep.add("S'_q(2,2) equals the enveloping algebra of the braid action", ref, same_subspace(sq, enveloping_braid(t)));
  const Scalar q = p.q();
  const AlgebraBasis shape3 = linear_span(std::vector<Matrix>{displayed_schur_element(1, 0, 0, q),
                                                              displayed_schur_element(0, 1, 0, q),
                                                              displayed_schur_element(0, 0, 1, q)});
  rep.add("S'_q(2,2) equals the 3-parameter matrix family", ref, same_subspace(sq, shape3));
  return rep;
}

Report rook_presentation() {
  Report rep;
  rep.suite = "rook presentation and rescaling";
  for (std::size_t r : {2, 3})
    for (const auto& z : {Scalar(1), Scalar(3), Scalar(7)}) {
      for (Report one : {verify_presentation(r, z), rescale_iso_check(r, z)}) {
        for (auto& c : one.checks) c.name = one.suite + ": " + c.name;
        rep.append(one);
      }
    }
  return rep;
}

Report cellular_structure() {
  Report rep;
  rep.suite = "cellular structure";
  const std::string ref = "iterated inflation of symmetric group algebras";

  for (const auto& z : {Scalar(1), Scalar(3), Scalar(7)}) {
    const auto elems = rook_elements(3);
    std::size_t bad = 0, total = 0;
    for (const auto& a : elems)
      for (const auto& d : elems) {
        const CellTriple t = triple_of(d);
        ++total;
        if (!inflation_rule_holds(a, t.dom, t.pi, t.im, z)) ++bad;
      }
    rep.add("inflation rule exhaustive at r=3, z=" + to_string(z), ref, bad == 0,
            str(total) + " products, " + str(bad) + " failures");
  }

  {
    std::mt19937 rng(20240501);
    const auto elems = rook_elements(4);
    const Scalar z = 7;
    std::size_t bad = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const auto& a = elems[std::uniform_int_distribution<std::size_t>(0, elems.size() - 1)(rng)];
      const std::size_t k = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
      const auto subsets = k_subsets(4, k);
      const auto perms = permutations_of(k);
      std::uniform_int_distribution<std::size_t> pick_set(0, subsets.size() - 1), pick_perm(0, perms.size() - 1);
      if (!inflation_rule_holds(a, subsets[pick_set(rng)], perms[pick_perm(rng)], subsets[pick_set(rng)], z)) ++bad;
    }
    rep.add("inflation rule on 500 random instances at r=4", ref, bad == 0, str(bad) + " failures");
  }

  for (std::size_t r = 1; r <= 3; ++r) {
    const auto elems = rook_elements(r);
    bool involution = true;
    for (const auto& d : elems) {
      const CellTriple t = triple_of(d);
      involution = involution && triple_of(d.inverse()) == CellTriple{t.im, t.pi.inverse(), t.dom};
    }
    rep.add("anti-involution swaps dom and im and inverts pi, r=" + str(r), ref, involution);

    const Scalar z = 3;
    bool generator_match = true, module_ok = true, psi_sym = true;
    for (std::size_t k = 0; k <= r; ++k) {
      const auto subsets = k_subsets(r, k);
      for (const auto& u : subsets) {
        for (const auto& d : elems) generator_match = generator_match && uk_action(d, u, z) == phi(d, u, z);
        for (const auto& y : subsets) psi_sym = psi_sym && psi(y, u, z, r) == psi(u, y, z, r);
        for (const auto& a : elems)
          for (const auto& b : elems) {
            const WeightedSubset bu = phi(b, u, z);
            WeightedSubset lhs{Scalar(0), {}};
            if (!is_zero(bu.coeff)) {
              const WeightedSubset abu = phi(a, bu.set, z);
              if (!is_zero(abu.coeff)) lhs = {bu.coeff * abu.coeff, abu.set};
            }
            WeightedSubset rhs = phi(compose(a, b), u, z);
            if (!is_zero(rhs.coeff)) rhs.coeff *= power(z, static_cast<long>(compose_props(a, b).dropped));
            module_ok = module_ok && lhs == rhs;
          }
      }
    }
    rep.add("U(k) generator rules reproduce phi_k, r=" + str(r), ref, generator_match);
    rep.add("U(k) is a module: (ab)u = a(bu), r=" + str(r), ref, module_ok);
    rep.add("psi_k is symmetric, r=" + str(r), ref, psi_sym);
  }

  auto certify = [&](std::size_t r, const Scalar& z) {
    const auto cert = semisimplicity_certificate(r, z);
    rep.add("semisimplicity r=" + str(r) + " z=" + to_string(z), ref,
            cert.gram_nondegenerate && cert.cell_forms_nondegenerate && cert.agree(),
            "Gram determinant has " + str(mpz_sizeinbase(cert.gram_determinant.get_num_mpz_t(), 10)) + " digits");
  };
  for (std::size_t r = 1; r <= 3; ++r)
    for (const auto& z : {Scalar(1), Scalar(3), Scalar(7)}) certify(r, z);
  certify(4, 7);
  return rep;
}

Report lie_closure() {
  Report rep;
  rep.suite = "Lie closure and generator powers";
  const std::string ref = "density of the reduced Burau image";
  for (std::size_t n = 3; n <= 5; ++n)
    for (const auto& q : {Scalar(2), Scalar(-2), Scalar(1, 2)}) {
      const LieConstants c = LieConstants::make(n, q);
      const std::size_t m = (n - 1) * (n - 1);
      const BracketSpace gu = bracket_closure(u_generators(c));
      const BracketSpace gv = bracket_closure(v_generators(c));
      bool traceless = true;
      for (const auto& x : gv.basis) traceless = traceless && is_zero(x.trace());
      const std::string tag = "n=" + str(n) + " q=" + to_string(q);
      rep.add(tag + " u generate gl_{n-1}", ref, gu.dim == m, str(gu.dim));
      rep.add(tag + " v generate sl_{n-1}", ref, gv.dim == m - 1 && traceless, str(gv.dim));
    }
  for (const auto& q : {Scalar(2), Scalar(-2), Scalar(1, 2)})
    for (std::size_t n = 3; n <= 10; ++n) {
      const TridiagonalDet d = tridiagonal_det(n, q);
      rep.add("D_" + str(n) + " q=" + to_string(q) + " direct = recursion = [n]_q/(1+q)^{n-1}",
              "tridiagonal determinant", d.agree(), to_string(d.direct));
    }
  for (const auto& [q1, q2] : sample_params())
    for (std::size_t n = 2; n <= 5; ++n) {
      const BurauParams p = BurauParams::make(n, q1, q2);
      bool ok = true;
      for (std::size_t i = 1; i < n; ++i) {
        Matrix acc = Matrix::identity(n - 1);
        for (unsigned k = 1; k <= 8; ++k) {
          acc = acc * reduced_generator(i, p);
          ok = ok && generator_power(i, k, p) == acc;
        }
      }
      const std::string tag = "n=" + str(n) + " (q1,q2)=(" + to_string(q1) + "," + to_string(q2) + ")";
      rep.add(tag + " closed-form powers k<=8", "powers of a reduced generator", ok);
      const Scalar want = power(power(q1, static_cast<long>(n) - 2) * q2, static_cast<long>(n));
      const Scalar got = full_twist_scalar(p);
      rep.add(tag + " full twist = (q1^{n-2} q2)^n", "full twist acts as a scalar", got == want,
              "product " + to_string(got) + ", formula " + to_string(want));
      const Scalar signed_want = power(-power(q1, static_cast<long>(n) - 2) * q2, static_cast<long>(n));
      rep.add(tag + " full twist = (-q1^{n-2} q2)^n", "full twist acts as a scalar", got == signed_want,
              to_string(got));
    }
  {
    const BurauParams p = BurauParams::make(3, 3, 3, BurauParams::Gate::NonzeroOnly);
    bool ok = true;
    Matrix acc = Matrix::identity(2);
    for (unsigned k = 1; k <= 8; ++k) {
      acc = acc * reduced_generator(1, p);
      ok = ok && generator_power(1, k, p) == acc;
    }
    rep.add("n=3 q1=q2=3 powers k<=8 (degenerate closed form)", "powers of a reduced generator", ok);
  }
  for (const auto& [q1, q2] : {std::pair{Scalar(1), Scalar(-2)}, std::pair{Scalar(2), Scalar(3)},
                               std::pair{Scalar(2), Scalar(1, 2)}})
    for (std::size_t n : {3, 4})
      for (std::size_t i = 1; i < n; ++i)
        for (unsigned k = 1; k <= 4; ++k) {
          if (n == 4 && q1 == 2 && q2 == Scalar(1, 2)) continue;
          Report one = one_param_membership(i, k, BurauParams::make(n, q1, q2));
          for (auto& c : one.checks) c.name = one.suite + " (q1,q2)=(" + to_string(q1) + "," + to_string(q2) + "): " + c.name;
          rep.append(one);
        }
  return rep;
}

bool braid_relations_hold(const std::vector<Matrix>& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (j == i + 1) {
        if (g[i] * g[j] * g[i] != g[j] * g[i] * g[j]) return false;
      } else if (g[i] * g[j] != g[j] * g[i]) {
        return false;
      }
    }
  return true;
}

Report property_suites() {
  Report rep;
  rep.suite = "property suites";
  for (const auto& [q1, q2] : sample_params())
    for (std::size_t n = 2; n <= 5; ++n) {
      const BurauParams p = BurauParams::make(n, q1, q2);
      const BurauRep b = BurauRep::build(p);
      bool hecke = true, inverse = true, stated_inverse = true;
      for (std::size_t i = 1; i < n; ++i) {
        for (const Matrix* m : {&b.unreduced[i - 1], &b.reduced[i - 1]}) {
          const std::size_t d = m->rows();
          hecke = hecke && ((*m - Matrix::scalar(d, q1)) * (*m - Matrix::scalar(d, q2))).is_zero();
        }
        inverse = inverse && b.unreduced[i - 1] * inverse_generator(i, p) == Matrix::identity(n);
        const Matrix stated = (Scalar(1) / (q1 * q2)) * (b.unreduced[i - 1] - Matrix::scalar(n, q1 + q2));
        stated_inverse = stated_inverse && b.unreduced[i - 1] * stated == Matrix::identity(n);
      }
      const std::string tag = "n=" + str(n) + " (q1,q2)=(" + to_string(q1) + "," + to_string(q2) + ")";
      rep.add(tag + " braid relations", "braid relations", braid_relations_hold(b.unreduced) &&
                                                                braid_relations_hold(b.reduced));
      rep.add(tag + " Hecke quadratic relation", "Hecke relation", hecke);
      rep.add(tag + " inverse (q1 + q2 - beta_i)/(q1 q2)", "Hecke relation", inverse);
      rep.add(tag + " inverse (beta_i - q1 - q2)/(q1 q2)", "Hecke relation", stated_inverse);
    }

  const std::vector<std::pair<std::size_t, std::size_t>> grid = {{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}};
  for (const auto& [n, r] : grid) {
    const TensorActionPair t = TensorActionPair::build(r, BurauParams::from_q(n, 2));
    bool commute = true;
    for (const auto& x : t.braid_gens)
      for (const auto& y : t.rook_gens()) commute = commute && commutator(x, y).is_zero();
    const std::string tag = "n=" + str(n) + " r=" + str(r);
    rep.add(tag + " braid and rook operators commute", "bimodule structure on the tensor power", commute);
    rep.add(tag + " rook operators satisfy the presentation at z = [n]_q", "rook action on the tensor power",
            verify_tensor_presentation(t).passed());
    const AlgebraBasis cent = centralizer_of_braid(t);
    const AlgebraBasis bicommutant = commutant(cent.basis);
    rep.add(tag + " commutant of the centralizer = enveloping algebra", "double centralizer property",
            same_subspace(bicommutant, enveloping_braid(t)), "dim " + str(bicommutant.dimension));
  }

  const BurauParams trivial_q = BurauParams::make(4, 1, -1, BurauParams::Gate::NonzeroOnly);
  const AlgebraBasis control = centralizer_of_braid(TensorActionPair::build(2, trivial_q));
  rep.add("q=1 control: n=4 r=2 commutant dimension 15", "symmetric group centralizer", control.dimension == 15,
          str(control.dimension));
  return rep;
}

}  // namespace

std::vector<Criterion> acceptance_criteria() {
  return {
      {1, "dimension table c^r_lambda for r <= 4", 1.0, dimension_table},
      {2, "centralizer of E is spanned by 1 and P", 1.0, centralizer_rank_one},
      {3, "centralizer of E (x) E and the n=2 dependence", 5.0, two_fold_tensor},
      {4, "Schur-Weyl duality grid", 600.0, duality_grid},
      {5, "duality at q with [n]_q = n", 10.0, special_q},
      {6, "Schur algebras S(2,2) and S'_q(2,2)", 5.0, schur_algebras},
      {7, "rook presentation and rescaling isomorphism", 30.0, rook_presentation},
      {8, "cellular structure and semisimplicity", 300.0, cellular_structure},
      {9, "Lie closure, tridiagonal determinants, powers, full twist", 30.0, lie_closure},
      {10, "property suites", 600.0, property_suites},
  };
}

CriterionResult run_criterion(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult out;
  try {
    out.report = c.run();
  } catch (const std::exception& e) {
    out.report.suite = c.title;
    out.report.add("criterion raised an exception", c.title, false, e.what());
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream detail;
  detail << std::fixed << std::setprecision(3) << out.seconds << " s (limit " << c.limit_seconds << " s)";
  out.report.add("runtime within limit", c.title, out.seconds < c.limit_seconds, detail.str());
  return out;
}

}  // namespace bswd
