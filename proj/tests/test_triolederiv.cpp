#include "derivation_gen.hpp"
#include "doctest.h"

using namespace triolex;
using namespace triolex::testing;

namespace {

ScalarDerivation vf(PolyVec c) { return ScalarDerivation(std::move(c)); }

// [X,[Y,Z]] = [[X,Y],Z] + s [Y,[X,Z]] with [X,Y] = XY - s YX
bool jacobi_holds(const GradedDerivation& X, const GradedDerivation& Y, const GradedDerivation& Z,
                  const TrioleAlgebra& alg) {
  const int s = bracket_sign(X.degree, Y.degree, alg);
  GradedDerivation lhs = bracket(X, bracket(Y, Z, alg), alg);
  GradedDerivation rhs = add(bracket(bracket(X, Y, alg), Z, alg), scale(bracket(Y, bracket(X, Z, alg), alg), s, alg), alg);
  return flatten(lhs, alg) == flatten(rhs, alg);
}

}  // namespace

TEST_CASE("degree 0 validation examples") {
  const int n = 2;
  TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
  PolyMat G = zero_matrix(n, 2, 2);
  G[0][1] = x(n, 1);
  G[1][0] = -x(n, 1);
  GradedDerivation X = GradedDerivation::degree0(ScalarDerivation::partial(n, 0), G, zero_matrix(n, 1, 1));
  CHECK(validate_derivation(X, id).valid);
  CHECK(check_leibniz(X, id).valid);
  // symmetric G breaks the metric relation
  G[1][0] = x(n, 1);
  Report r = validate_derivation(GradedDerivation::degree0(ScalarDerivation::partial(n, 0), G, zero_matrix(n, 1, 1)), id);
  CHECK_FALSE(r.valid);
  CHECK_FALSE(check_leibniz(GradedDerivation::degree0(ScalarDerivation::partial(n, 0), G, zero_matrix(n, 1, 1)), id).valid);
}

TEST_CASE("degree 2 derivations are unconstrained") {
  const int n = 2;
  TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
  Rng rng(1);
  for (int t = 0; t < 5; ++t) {
    GradedDerivation X = random_deg2(rng, id);
    CHECK(validate_derivation(X, id).valid);
    CHECK(check_leibniz(X, id).valid);
  }
}

TEST_CASE("degree -1 solve") {
  const int n = 2;
  // identity metric of rank 2: g(e0, e1) = 0 forces phi = 0
  TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
  DegreeMinus1Solve s = solve_degree_minus1(id, {Poly::one(n), Poly(n)});
  CHECK_FALSE(s.solvable);
  CHECK_FALSE(s.psi.has_value());
  CHECK(s.system.size() == 2 * 2 * 2 + 2 * 1 * 1);
  // the zero map is always a solution
  DegreeMinus1Solve z = solve_degree_minus1(id, {Poly(n), Poly(n)});
  REQUIRE(z.solvable);
  CHECK(is_zero(*z.psi));
  // rank 1 under plain: psi = 2 phi from g and psi = -phi from P.Q = 0
  CHECK_FALSE(solve_degree_minus1(TrioleAlgebra::identity(n, 1), {Poly::one(n)}).solvable);

  // the alternating metric carries nonzero degree -1 derivations
  TrioleAlgebra alt = TrioleAlgebra::alternating(n);
  DegreeMinus1Solve a = solve_degree_minus1(alt, {Poly::one(n), Poly(n)});
  REQUIRE(a.solvable);
  GradedDerivation X = GradedDerivation::degree_minus1({Poly::one(n), Poly(n)}, *a.psi);
  CHECK(validate_derivation(X, alt).valid);
  CHECK(check_leibniz(X, alt).valid);
  CHECK(*a.psi == PolyMat{{Poly(n)}, {Poly::one(n)}});
  // polynomial phi is solved monomial by monomial
  PolyVec phi{x(n, 0), x(n, 1).pow(2) + c(n, 3)};
  DegreeMinus1Solve b = solve_degree_minus1(alt, phi);
  REQUIRE(b.solvable);
  CHECK(validate_derivation(GradedDerivation::degree_minus1(phi, *b.psi), alt).valid);
  CHECK(check_leibniz(GradedDerivation::degree_minus1(phi, *b.psi), alt).valid);
  TrioleAlgebra nonconst = alt;
  nonconst.at(0, 0, 1) = x(n, 0);
  nonconst.at(0, 1, 0) = -x(n, 0);
  CHECK_THROWS(solve_degree_minus1(nonconst, phi));
}

TEST_CASE("degree -2 derivations do not exist") {
  for (int m = 1; m <= 3; ++m) {
    NonexistenceReport r = reject_degree_minus2(TrioleAlgebra(1, 1, m));
    CHECK(r.nonexistence);
    CHECK(r.solution_dim == 0);
    CHECK(r.rank == m);
    CHECK(r.unknowns == m);
  }
  // rank 1: the single equation reads 2X = 0
  NonexistenceReport one = reject_degree_minus2(TrioleAlgebra(1, 1, 1));
  REQUIRE(one.system.size() == 1);
  CHECK(one.system[0] == RatVec{2});
  CHECK(one.to_json()["nonexistence"] == true);
}

TEST_CASE("apply_derivation examples") {
  const int n = 2;
  TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
  GradedDerivation X0 = GradedDerivation::degree0(ScalarDerivation::partial(n, 0), zero_matrix(n, 2, 2), zero_matrix(n, 1, 1));
  TrioleElement r = apply_derivation(X0, TrioleElement::from_a(id, x(n, 0).pow(2)), id);
  CHECK(r == TrioleElement::from_a(id, c(n, 2) * x(n, 0)));

  GradedDerivation X2 = GradedDerivation::degree2({vf({x(n, 1), Poly(n)})});
  CHECK(apply_derivation(X2, TrioleElement::from_a(id, x(n, 0) * x(n, 1)), id) ==
        TrioleElement::from_q(id, {x(n, 1).pow(2)}));

  PolyMat h{{x(n, 0), c(n, 2)}};
  GradedDerivation X1 = make_degree1(id, {vf({c(n, 1), Poly(n)}), ScalarDerivation(n)}, h);
  PolyVec p{x(n, 1), c(n, 1)};
  CHECK(apply_derivation(X1, TrioleElement::from_p(id, p), id) == TrioleElement::from_q(id, X1.Xp.apply(p)));
  // on constant p only the A-linear part acts
  CHECK(X1.Xp.apply(id.unit_p(1)) == PolyVec{c(n, 2)});
}

TEST_CASE("bracket examples") {
  const int n = 2;
  TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
  auto zero0 = [&](const ScalarDerivation& XA) { return GradedDerivation::degree0(XA, zero_matrix(n, 2, 2), zero_matrix(n, 1, 1)); };
  GradedDerivation X = zero0(ScalarDerivation::partial(n, 0));
  GradedDerivation Y = zero0(vf({x(n, 0), Poly(n)}));
  GradedDerivation Z = bracket(X, Y, id);
  CHECK(Z == zero0(ScalarDerivation::partial(n, 0)));
  CHECK(flatten(bracket(X, X, id), id) == flatten(GradedDerivation::zero(0, id), id));
  GradedDerivation Y2 = GradedDerivation::degree2({vf({Poly(n), x(n, 0)})});
  CHECK(bracket(X, Y2, id) == GradedDerivation::degree2({ScalarDerivation::partial(n, 1)}));
  CHECK(check_bracket_against_evaluation(X, Y2, id).valid);
  CHECK_THROWS(bracket(Y2, Y2, id));
  CHECK_FALSE(admissible_pair(2, 1));
  CHECK(admissible_pair(-1, 2));
}

TEST_CASE("random derivations: validity, Leibniz and brackets") {
  Rng rng(2024);
  for (int t = 0; t < 6; ++t) {
    const int n = uniform(rng, 1, 2);
    TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
    TrioleAlgebra alt = TrioleAlgebra::alternating(n);
    for (const TrioleAlgebra* alg : {&id, &alt}) {
      const bool is_alt = alg == &alt;
      std::vector<GradedDerivation> ds;
      auto deg0 = [&] { return is_alt ? random_deg0_alternating(rng, *alg) : random_deg0_identity(rng, *alg); };
      ds.push_back(deg0());
      ds.push_back(deg0());
      ds.push_back(random_deg1(rng, *alg));
      ds.push_back(random_deg1(rng, *alg));
      ds.push_back(random_deg2(rng, *alg));
      if (is_alt) {
        PolyVec phi = random_vec(rng, n, 2, 1);
        auto s = solve_degree_minus1(*alg, phi);
        REQUIRE(s.solvable);
        ds.push_back(GradedDerivation::degree_minus1(phi, *s.psi));
      }
      for (const auto& X : ds) {
        CAPTURE(X.degree);
        CHECK(validate_derivation(X, *alg).valid);
        CHECK(check_leibniz(X, *alg).valid);
      }
      for (const auto& X : ds)
        for (const auto& Y : ds) {
          if (!admissible_pair(X.degree, Y.degree)) continue;
          CAPTURE(X.degree);
          CAPTURE(Y.degree);
          GradedDerivation Z = bracket(X, Y, *alg);
          CHECK(Z.degree == X.degree + Y.degree);
          CHECK(validate_derivation(Z, *alg).valid);
          CHECK(check_bracket_against_evaluation(X, Y, *alg).valid);
        }
      // graded Jacobi on triples whose nested brackets stay admissible
      for (const auto& X : ds)
        for (const auto& Y : ds)
          for (const auto& W : ds) {
            const int a = X.degree, b = Y.degree, c3 = W.degree;
            if (!admissible_pair(b, c3) || !admissible_pair(a, b + c3) || !admissible_pair(a, b) ||
                !admissible_pair(a + b, c3) || !admissible_pair(a, c3) || !admissible_pair(b, a + c3))
              continue;
            CHECK(jacobi_holds(X, Y, W, *alg));
          }
    }
  }
}

TEST_CASE("degree 0 symbol and kernel") {
  const int n = 2;
  TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
  PolyMat G = zero_matrix(n, 2, 2);
  G[0][1] = c(n, 1);
  G[1][0] = c(n, -1);
  GradedDerivation X = GradedDerivation::degree0(ScalarDerivation::partial(n, 0), G, zero_matrix(n, 1, 1));
  CHECK(symbol_deg0(X) == ScalarDerivation::partial(n, 0));
  CHECK(symbol_deg0(GradedDerivation::zero(0, id)).is_zero());
  GradedDerivation K = end_pair(G, zero_matrix(n, 1, 1), id);
  CHECK(symbol_deg0(K).is_zero());
  CHECK(validate_derivation(K, id).valid);
  for (int C = 0; C < id.mQ; ++C) CHECK(is_zero(degree0_residual(K, id, C)));
  // splitting X -> (X, 0, 0) for constant g
  Rng rng(9);
  for (int t = 0; t < 5; ++t) {
    ScalarDerivation V = random_vector_field(rng, n, 2);
    GradedDerivation S = trivial_splitting(V, id);
    CHECK(symbol_deg0(S) == V);
    CHECK(validate_derivation(S, id).valid);
  }
  // the splitting fails once X(g) != 0
  TrioleAlgebra var = id;
  var.at(0, 1, 1) = c(n, 1) + x(n, 0);
  CHECK_FALSE(validate_derivation(trivial_splitting(ScalarDerivation::partial(n, 0), var), var).valid);
}

TEST_CASE("degree 1 symbol") {
  const int n = 2;
  TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
  GradedDerivation X = make_degree1(id, {ScalarDerivation::partial(n, 0), ScalarDerivation(n)}, zero_matrix(n, 1, 2));
  std::vector<PolyMat> s = symbol_deg1(X, id);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == PolyMat{{c(n, 1), Poly(n)}});
  CHECK(is_zero(s[1]));
  PolyMat h{{x(n, 1), c(n, 1)}};
  GradedDerivation K = make_degree1(id, {ScalarDerivation(n), ScalarDerivation(n)}, h);
  for (const auto& m : symbol_deg1(K, id)) CHECK(is_zero(m));
  CHECK(K.Xp.order() == 0);
  CHECK(degree1_kernel_part(K, id) == h);
  CHECK(validate_derivation(K, id).valid);
  CHECK_THROWS(symbol_deg1(X, TrioleAlgebra(n, 2, 1)));
  // an order-1 part that is not twisted by g is rejected
  GradedDerivation bad = X;
  bad.Xp.at(0, 1) += PolyDiffOp::partial(n, 1);
  CHECK_FALSE(validate_derivation(bad, id).valid);
}

TEST_CASE("module action on derivations") {
  const int n = 2;
  TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
  GradedDerivation X1 = make_degree1(id, {ScalarDerivation::partial(n, 0), ScalarDerivation(n)}, zero_matrix(n, 1, 2));
  GradedDerivation Z = module_action(TrioleElement::from_p(id, id.unit_p(0)), X1, id);
  CHECK(Z.degree == 2);
  CHECK(Z == GradedDerivation::degree2({ScalarDerivation::partial(n, 0)}));

  GradedDerivation X0 = GradedDerivation::degree0(ScalarDerivation::partial(n, 1), zero_matrix(n, 2, 2), zero_matrix(n, 1, 1));
  GradedDerivation qX = module_action(TrioleElement::from_q(id, {x(n, 0)}), X0, id);
  CHECK(qX == GradedDerivation::degree2({ScalarDerivation::partial(n, 1).scaled(x(n, 0))}));
  CHECK_THROWS(module_action(TrioleElement::from_q(id, {x(n, 0)}), X1, id));

  Rng rng(13);
  for (int t = 0; t < 8; ++t) {
    GradedDerivation Y0 = random_deg0_identity(rng, id);
    PolyVec p1 = random_vec(rng, n, 2, 1), p2 = random_vec(rng, n, 2, 1);
    // a zero element carries no degree
    if (is_zero(p1) || is_zero(p2) || is_zero(id.pair(p1, p2))) continue;
    TrioleElement s1 = TrioleElement::from_p(id, p1), s2 = TrioleElement::from_p(id, p2);
    GradedDerivation l0 = module_action(s2, Y0, id);
    CHECK(validate_derivation(l0, id).valid);
    GradedDerivation lhs = module_action(s1, l0, id);
    GradedDerivation rhs = module_action(TrioleElement::from_q(id, id.pair(p1, p2)), Y0, id);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("truncated modules") {
  const int n = 2;
  TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
  TruncatedTriModule reg = TruncatedTriModule::regular(id);
  CHECK(validate_truncated_module(reg, id).valid);
  CHECK(reg.lam1 == id.g);
  CHECK(validate_truncated_module(TruncatedTriModule::zero(id, 2, 2, 2), id).valid);
  Rng rng(19);
  TruncatedTriModule R = TruncatedTriModule::zero(id, 1, 1, 1);
  R.lam0 = {random_matrix(rng, n, 2, 1, 0)};
  R.lam0[0][0][0] = c(n, 1);
  R.lam1 = {PolyMat{{c(n, 1)}, {c(n, 2)}}};
  Report r = validate_truncated_module(R, id);
  CHECK_FALSE(r.valid);
  CHECK(r.check == "compatibility");
  CHECK_FALSE(r.witness.is_null());
  R.lam1 = {PolyMat{{c(n, 1), c(n, 2)}}};
  CHECK(validate_truncated_module(R, id).check == "shape");
}

TEST_CASE("module-valued derivations and Der-operators") {
  const int n = 2;
  TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
  TruncatedTriModule reg = TruncatedTriModule::regular(id);
  Rng rng(29);
  for (int t = 0; t < 4; ++t) {
    for (const auto& X : {random_deg0_identity(rng, id), random_deg1(rng, id), random_deg2(rng, id)}) {
      CHECK(validate_module_derivation(component_ops(X, id), reg, id).valid);
      DerOperator D{component_ops(X, id), X};
      CHECK(validate_der_operator(D, reg, id).valid);
    }
  }
  ComponentOps zero;
  zero.degree = 1;
  CHECK(validate_module_derivation(zero, reg, id).valid);

  // nu-twisted operator R_0 -> R_2 with a Q-valued symbol
  // lam0(e_a, r_0) = f_a, lam1 = 2 g, nu = 2
  TruncatedTriModule R = TruncatedTriModule::zero(id, 1, 2, 1);
  R.lam0 = {PolyMat{{c(n, 1)}, {Poly(n)}}, PolyMat{{Poly(n)}, {c(n, 1)}}};
  R.lam1 = {PolyMat{{c(n, 2), Poly(n)}, {Poly(n), c(n, 2)}}};
  R.nu = {PolyMat{{c(n, 2)}}};
  REQUIRE(validate_truncated_module(R, id).valid);
  GradedDerivation X2 = random_deg2(rng, id);
  DerOperator D = der_operator_deg2(X2, random_matrix(rng, n, 1, 1, 1), R, id);
  CHECK(validate_der_operator(D, R, id).valid);
  // breaking the symbol relation is detected
  DerOperator bad = D;
  bad.symbol = random_deg2(rng, id);
  CHECK_FALSE(validate_der_operator(bad, R, id).valid);
}

TEST_CASE("triolic Lie algebras") {
  TriolicLieAlgebraData ab;
  ab.d0 = 2;
  ab.d1 = 2;
  ab.d2 = 1;
  ab.bracket.assign(2, RatMat(2, RatVec(2, 0)));
  ab.rho1.assign(2, RatMat(2, RatVec(2, 0)));
  ab.rho2.assign(2, RatMat(1, RatVec(1, 0)));
  ab.form = {RatMat{{0}, {1}}, RatMat{{-1}, {0}}};
  CHECK(validate_triolic_lie_algebra(ab).valid);

  // constant-coefficient part of D(T)_+ for the identity metric
  const int n = 1;
  TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
  PolyMat J = zero_matrix(n, 2, 2);
  J[0][1] = c(n, 1);
  J[1][0] = c(n, -1);
  GradedDerivation rot = GradedDerivation::degree0(ScalarDerivation(n), J, zero_matrix(n, 1, 1));
  GradedDerivation dil = GradedDerivation::degree0(ScalarDerivation(n), identity_matrix(n, 2), PolyMat{{c(n, 2)}});
  GradedDerivation tr = GradedDerivation::degree0(ScalarDerivation::partial(n, 0), zero_matrix(n, 2, 2), zero_matrix(n, 1, 1));
  std::vector<GradedDerivation> g1;
  for (int a = 0; a < 2; ++a) {
    PolyMat h = zero_matrix(n, 1, 2);
    h[0][a] = c(n, 1);
    g1.push_back(make_degree1(id, {ScalarDerivation(n), ScalarDerivation(n)}, h));
  }
  for (int a = 0; a < 2; ++a) {
    std::vector<ScalarDerivation> XA1(2, ScalarDerivation(n));
    XA1[a] = ScalarDerivation::partial(n, 0);
    g1.push_back(make_degree1(id, XA1, zero_matrix(n, 1, 2)));
  }
  std::vector<GradedDerivation> g2{GradedDerivation::degree2({ScalarDerivation::partial(n, 0)})};
  TriolicLieAlgebraData L = triolic_lie_from_derivations({rot, dil, tr}, g1, g2, id);
  Report r = validate_triolic_lie_algebra(L);
  CHECK(r.valid);
  // the pairing of the translation-type generators is nonzero
  bool nonzero = false;
  for (const auto& row : L.form)
    for (const auto& v : row)
      for (const auto& e : v) nonzero = nonzero || e != 0;
  CHECK(nonzero);

  TriolicLieAlgebraData broken = L;
  broken.rho2[1][0][0] += 1;
  CHECK_FALSE(validate_triolic_lie_algebra(broken).valid);
}

TEST_CASE("component operators round trip") {
  Rng rng(37);
  TrioleAlgebra alt = TrioleAlgebra::alternating(2);
  for (int t = 0; t < 4; ++t)
    for (const auto& X : {random_deg0_alternating(rng, alt), random_deg1(rng, alt), random_deg2(rng, alt)})
      CHECK(from_component_ops(component_ops(X, alt), alt) == X);
}
