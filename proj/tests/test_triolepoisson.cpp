#include "doctest.h"
#include "support.hpp"
#include "triolex/poisson.hpp"

using namespace triolex;
using namespace triolex::testing;

namespace {

PolyMat symplectic(int n) {
  PolyMat pi = zero_matrix(n, n, n);
  pi[0][1] = c(n, 1);
  pi[1][0] = c(n, -1);
  return pi;
}

// {x0, x1} = x2, {x1, x2} = x1 on n = 3: Jacobiator x2 on (x0, x1, x2) up to sign
PolyMat non_poisson() {
  const int n = 3;
  PolyMat pi = zero_matrix(n, n, n);
  pi[0][1] = x(n, 2);
  pi[1][0] = -x(n, 2);
  pi[1][2] = x(n, 1);
  pi[2][1] = -x(n, 1);
  return pi;
}

// sl2-like: {x0, x1} = x2, {x1, x2} = x0, {x2, x0} = x1
PolyMat linear_poisson() {
  const int n = 3;
  PolyMat pi = zero_matrix(n, n, n);
  auto set = [&](int i, int j, const Poly& p) {
    pi[i][j] = p;
    pi[j][i] = -p;
  };
  set(0, 1, x(n, 2));
  set(1, 2, x(n, 0));
  set(2, 0, x(n, 1));
  return pi;
}

Poly cyclic_jacobi_aaa(const PolyMat& pi, int n) {
  // {x0,{x1,x2}} + {x1,{x2,x0}} + {x2,{x0,x1}}
  auto br = [&](const Poly& f, const Poly& g) {
    Poly r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r += pi[i][j] * f.diff(i) * g.diff(j);
    return r;
  };
  return br(x(n, 0), br(x(n, 1), x(n, 2))) + br(x(n, 1), br(x(n, 2), x(n, 0))) + br(x(n, 2), br(x(n, 0), x(n, 1)));
}

LieAlgebroid rank1_algebroid(int n) {
  LieAlgebroid L = LieAlgebroid::zero(1, n);
  L.anchor[0] = ScalarDerivation::partial(n, 0);
  return L;
}

}  // namespace

TEST_CASE("block names") {
  CHECK(block_name(0, 0) == "AA");
  CHECK(block_name(1, 2) == "PQ");
  CHECK(block_from_name("AP") == std::pair<int, int>{0, 1});
  CHECK(block_from_name("QA") == std::pair<int, int>{2, 0});
  CHECK_THROWS(block_from_name("XA"));
  CHECK_THROWS(block_from_name("AAA"));
}

TEST_CASE("Hamiltonian lift of a constant symplectic structure") {
  const int n = 2;
  TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
  BiDerivation Pi = hamiltonian_lift(symplectic(n), id);
  CHECK(validate_biderivation(Pi, id).valid);
  PoissonReport pr = poisson_check_deg0(Pi, id);
  CHECK(pr.all());
  SchoutenReport sr = schouten_square(Pi, id);
  CHECK(sr.zero);
  CHECK(sr.triples > 0);
  // {x0, x1} = 1 and {x0 e0, x1 e1} = x0 x1 {..} coordinatewise
  TrioleElement a = TrioleElement::from_a(id, x(n, 0)), b = TrioleElement::from_a(id, x(n, 1));
  CHECK(evaluate(Pi, a, b, id) == TrioleElement::from_a(id, Poly::one(n)));
  TrioleElement p = TrioleElement::from_p(id, {x(n, 0), Poly(n)});
  TrioleElement q = TrioleElement::from_p(id, {x(n, 1), Poly(n)});
  CHECK(evaluate(Pi, p, q, id) == TrioleElement::from_q(id, {Poly::one(n)}));
}

TEST_CASE("zero bi-derivations") {
  TrioleAlgebra id = TrioleAlgebra::identity(2, 2);
  for (int h = -2; h <= 2; ++h) CHECK(validate_biderivation(BiDerivation::zero(h), id).valid);
  CHECK(poisson_check_deg0(BiDerivation::zero(0), id).all());
  CHECK(schouten_square(BiDerivation::zero(0), id).zero);
  Report r = validate_biderivation(BiDerivation::zero(-3), id);
  CHECK_FALSE(r.valid);
  CHECK(r.message.find("not characterized") != std::string::npos);
  CHECK_FALSE(validate_biderivation(BiDerivation::zero(-4), id).valid);
  CHECK_FALSE(validate_biderivation(BiDerivation::zero(3), id).valid);
}

TEST_CASE("degree 2 bi-derivations are Q-valued bivectors") {
  const int n = 2;
  TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
  BiDerivation Pi = BiDerivation::zero(2);
  Exp d0{1, 0}, d1{0, 1};
  Pi.add_term(0, 0, 0, 0, 0, d0, d1, x(n, 1));
  Pi.add_term(0, 0, 0, 0, 0, d1, d0, -x(n, 1));
  CHECK(validate_biderivation(Pi, id).valid);
  CHECK(evaluate(Pi, TrioleElement::from_a(id, x(n, 0)), TrioleElement::from_a(id, x(n, 1)), id) ==
        TrioleElement::from_q(id, {x(n, 1)}));
}

TEST_CASE("perturbed PP block breaks condition 4") {
  const int n = 2;
  TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
  BiDerivation Pi = hamiltonian_lift(symplectic(n), id);
  Exp z{0, 0};
  Pi.add_term(1, 1, 0, 0, 1, z, z, x(n, 0));
  Pi.add_term(1, 1, 0, 1, 0, z, z, -x(n, 0));
  REQUIRE(validate_biderivation(Pi, id).valid);
  PoissonReport pr = poisson_check_deg0(Pi, id);
  CHECK(pr.cond[0]);
  CHECK(pr.cond[1]);
  CHECK(pr.cond[2]);
  CHECK_FALSE(pr.cond[3]);
  CHECK_FALSE(pr.witness.is_null());
  CHECK_FALSE(schouten_square(Pi, id).zero);
  // a symmetric zeroth-order PP term violates graded skew-symmetry
  BiDerivation bad = hamiltonian_lift(symplectic(n), id);
  bad.add_term(1, 1, 0, 0, 1, z, z, x(n, 0));
  bad.add_term(1, 1, 0, 1, 0, z, z, x(n, 0));
  CHECK_FALSE(validate_biderivation(bad, id).valid);
}

TEST_CASE("Schouten square of non-Poisson bivectors") {
  const int n = 3;
  TrioleAlgebra id = TrioleAlgebra::identity(n, 1);
  PolyMat pi = non_poisson();
  CHECK_FALSE(cyclic_jacobi_aaa(pi, n).is_zero());
  BiDerivation Pi = hamiltonian_lift(pi, id);
  REQUIRE(validate_biderivation(Pi, id).valid);
  SchoutenReport sr = schouten_square(Pi, id);
  CHECK_FALSE(sr.zero);
  CHECK_FALSE(sr.witness.is_null());
  PoissonReport pr = poisson_check_deg0(Pi, id);
  CHECK_FALSE(pr.cond[0]);
  CHECK_FALSE(pr.all());
  // a linear Poisson structure lifts to a Poisson bi-derivation
  CHECK(cyclic_jacobi_aaa(linear_poisson(), n).is_zero());
  BiDerivation L = hamiltonian_lift(linear_poisson(), id);
  CHECK(poisson_check_deg0(L, id).all());
  CHECK(schouten_square(L, id).zero);
  // every bivector in two variables is Poisson
  TrioleAlgebra id2 = TrioleAlgebra::identity(2, 2);
  PolyMat pi2 = zero_matrix(2, 2, 2);
  pi2[0][1] = x(2, 0);
  pi2[1][0] = -x(2, 0);
  CHECK(schouten_square(hamiltonian_lift(pi2, id2), id2).zero);
}

TEST_CASE("conditions agree with the Schouten square") {
  Rng rng(99);
  for (int t = 0; t < 12; ++t) {
    const int n = 3;
    TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
    PolyMat pi = zero_matrix(n, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Poly p = t % 2 ? random_poly(rng, n, 1, 2) : c(n, small_rational(rng));
        pi[i][j] = p;
        pi[j][i] = -p;
      }
    BiDerivation Pi = hamiltonian_lift(pi, id);
    REQUIRE(validate_biderivation(Pi, id).valid);
    const bool jac = cyclic_jacobi_aaa(pi, n).is_zero();
    CHECK(poisson_check_deg0(Pi, id).all() == schouten_square(Pi, id).zero);
    CHECK(poisson_check_deg0(Pi, id).all() == jac);
  }
}

TEST_CASE("graded skew-symmetry on basis pairs") {
  const int n = 2;
  TrioleAlgebra alt = free_alternating_triole(2, n);
  BiDerivation Pi = algebroid_biderivation(LieAlgebroid::tangent(n), -1, alt);
  auto basis = monomial_test_basis(alt, 1);
  for (const auto& s : basis)
    for (const auto& t : basis) {
      const int ds = s.homogeneous_degree(), dt = t.homogeneous_degree();
      TrioleElement st = evaluate(Pi, s, t, alt), ts = evaluate(Pi, t, s, alt);
      CHECK(ts == st.scaled(-skew_sign(-1, ds, dt, alt)));
    }
  TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
  BiDerivation H = hamiltonian_lift(symplectic(n), id);
  for (const auto& s : monomial_test_basis(id, 1))
    for (const auto& t : monomial_test_basis(id, 1))
      CHECK(evaluate(H, t, s, id) == evaluate(H, s, t, id).scaled(-1));
}

TEST_CASE("Lie algebroid axioms") {
  const int n = 2;
  CHECK(validate_algebroid(LieAlgebroid::tangent(n)).valid);
  CHECK(validate_algebroid(LieAlgebroid::zero(3, n)).valid);
  CHECK(validate_algebroid(rank1_algebroid(n)).valid);

  LieAlgebroid broken = LieAlgebroid::zero(3, n);
  auto set = [&](int a, int b, int g) {
    broken.c[a][b][g] = c(n, 1);
    broken.c[b][a][g] = c(n, -1);
  };
  set(0, 1, 0);
  set(1, 2, 1);
  set(2, 0, 2);
  Report r = validate_algebroid(broken);
  CHECK_FALSE(r.valid);
  CHECK(r.check == "Jacobi");

  LieAlgebroid bad_anchor = LieAlgebroid::zero(2, n);
  bad_anchor.anchor[0] = ScalarDerivation::partial(n, 0);
  bad_anchor.anchor[1] = ScalarDerivation::partial(n, 1).scaled(x(n, 0));
  Report a = validate_algebroid(bad_anchor);
  CHECK_FALSE(a.valid);
  CHECK(a.check == "anchor morphism");

  // [u, a v] = anchor(u)(a) v + a [u, v] for sections
  LieAlgebroid T = LieAlgebroid::tangent(n);
  PolyVec u{x(n, 1), c(n, 1)}, v{x(n, 0) * x(n, 1), Poly(n)};
  Poly f = x(n, 0).pow(2);
  PolyVec fv = v;
  for (auto& e : fv) e *= f;
  PolyVec lhs = section_bracket(T, u, fv);
  PolyVec uv = section_bracket(T, u, v);
  Poly uf = x(n, 1) * f.diff(0) + f.diff(1);
  for (int i = 0; i < n; ++i) CHECK(lhs[i] == uf * v[i] + f * uv[i]);
}

TEST_CASE("degree -1 extraction: tangent algebroid") {
  const int n = 2;
  TrioleAlgebra alt = free_alternating_triole(2, n);
  BiDerivation Pi = algebroid_biderivation(LieAlgebroid::tangent(n), -1, alt);
  CHECK(validate_biderivation(Pi, alt).valid);
  DegMinus1Extraction ex = algebroid_from_deg_minus1(Pi, alt);
  CHECK(ex.valid());
  CHECK(ex.algebroid_report.valid);
  CHECK(ex.z_report.valid);
  CHECK(ex.f_compat.valid);
  CHECK(ex.algebroid.anchor == LieAlgebroid::tangent(n).anchor);
  for (const auto& M : ex.algebroid.c) CHECK(is_zero(M));
  CHECK(ex.Z.size() == 2);

  // g({p, p1}, p2) + g(p1, {p, p2}) = {p, g(p1, p2)} on basis triples
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int d = 0; d < 2; ++d) {
        TrioleElement p = TrioleElement::from_p(alt, alt.unit_p(a));
        PolyVec p1 = alt.unit_p(b), p2 = alt.unit_p(d);
        for (int i = 0; i < n; ++i) {
          p1[i] *= x(n, i) + c(n, 1);
          p2[i] *= x(n, 0);
        }
        TrioleElement lhs = evaluate(Pi, p, TrioleElement::from_q(alt, alt.pair(p1, p2)), alt);
        PolyVec r1 = alt.pair(evaluate(Pi, p, TrioleElement::from_p(alt, p1), alt).p, p2);
        PolyVec r2 = alt.pair(p1, evaluate(Pi, p, TrioleElement::from_p(alt, p2), alt).p);
        for (int A = 0; A < alt.mQ; ++A) CHECK(lhs.q[A] == r1[A] + r2[A]);
      }
}

TEST_CASE("degree -1 extraction: zero and broken brackets") {
  const int n = 2;
  TrioleAlgebra alt = free_alternating_triole(2, n);
  DegMinus1Extraction z = algebroid_from_deg_minus1(BiDerivation::zero(-1), alt);
  CHECK(z.valid());
  for (const auto& X : z.algebroid.anchor) CHECK(X.is_zero());

  // a nonzero anchor is inconsistent under the plain convention
  TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
  CHECK_FALSE(validate_biderivation(algebroid_biderivation(LieAlgebroid::tangent(n), -1, id), id).valid);

  // P of rank 3 over the zero metric with a non-Jacobi bracket table
  TrioleAlgebra flat(n, 3, 1, Convention::koszul);
  LieAlgebroid broken = LieAlgebroid::zero(3, n);
  auto set = [&](int a, int b, int g) {
    broken.c[a][b][g] = c(n, 1);
    broken.c[b][a][g] = c(n, -1);
  };
  set(0, 1, 0);
  set(1, 2, 1);
  set(2, 0, 2);
  DegMinus1Extraction ex = algebroid_from_deg_minus1(algebroid_biderivation(broken, -1, flat), flat);
  CHECK_FALSE(ex.valid());
  CHECK_FALSE(ex.algebroid_report.valid);
  CHECK(ex.algebroid_report.witness.contains("gamma"));
}

TEST_CASE("degree -2 extraction: rank one algebroid") {
  const int n = 2;
  TrioleAlgebra alg(n, 0, 1, Convention::plain);
  BiDerivation Pi = algebroid_biderivation(rank1_algebroid(n), -2, alg);
  DegMinus2Extraction ex = algebroid_from_deg_minus2(Pi, alg);
  CHECK(ex.report.valid);
  CHECK(ex.algebroid.anchor[0] == ScalarDerivation::partial(n, 0));
  // [q1 eps, q2 eps] = (q1 X(q2) - q2 X(q1)) eps
  PolyVec q1{x(n, 0) * x(n, 1)}, q2{x(n, 0).pow(2)};
  PolyVec br = section_bracket(ex.algebroid, q1, q2);
  CHECK(br[0] == q1[0] * q2[0].diff(0) - q2[0] * q1[0].diff(0));
  // Q.Q = 0 forces {a, q q'} = 0, which a nonzero anchor cannot meet
  Report r = validate_biderivation(Pi, alg);
  CHECK_FALSE(r.valid);

  CHECK(algebroid_from_deg_minus2(BiDerivation::zero(-2), alg).report.valid);

  TrioleAlgebra two(n, 0, 2, Convention::plain);
  LieAlgebroid bad = LieAlgebroid::zero(2, n);
  bad.anchor[0] = ScalarDerivation::partial(n, 0);
  bad.anchor[1] = ScalarDerivation::partial(n, 1).scaled(x(n, 0));
  DegMinus2Extraction bx = algebroid_from_deg_minus2(algebroid_biderivation(bad, -2, two), two);
  CHECK_FALSE(bx.report.valid);
  CHECK(bx.report.check == "anchor morphism");
}
