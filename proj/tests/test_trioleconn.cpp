#include "doctest.h"
#include "support.hpp"

using namespace triolex;
using namespace triolex::testing;

namespace {

using Tensor3 = std::vector<PolyMat>;

// R_{ij alpha}^beta = d_i G_{j alpha}^beta - d_j G_{i alpha}^beta + sum_gamma (G_{i gamma}^beta G_{j alpha}^gamma - G_{j gamma}^beta G_{i alpha}^gamma)
PolyMat curvature_oracle(const Tensor3& G, int i, int j) {
  const int m = static_cast<int>(G[0].size());
  const int nv = G[0][0][0].n_vars();
  PolyMat R = zero_matrix(nv, m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Poly r = G[j][a][b].diff(i) - G[i][a][b].diff(j);
      for (int g = 0; g < m; ++g) r += G[i][g][b] * G[j][a][g] - G[j][g][b] * G[i][a][g];
      R[a][b] = r;
    }
  return R;
}

Tensor3 curved_gamma(int n) {
  Tensor3 G(n, zero_matrix(n, 2, 2));
  G[0][0][1] = x(n, 1);
  G[0][1][0] = -x(n, 1);
  return G;
}

PolyMat shear(int n) {
  PolyMat S = identity_matrix(n, 2);
  S[0][1] = x(n, 0);
  return S;
}

TriConnection with_gamma(const TrioleAlgebra& alg, Tensor3 G) {
  TriConnection C = TriConnection::zero(alg);
  C.Gamma = std::move(G);
  return C;
}

Tensor3 random_gamma(Rng& rng, int n, int m, int deg) {
  Tensor3 G;
  for (int i = 0; i < n; ++i) G.push_back(random_matrix(rng, n, m, m, deg));
  return G;
}

// (da ^ w)(i_0..i_k) = sum_s (-1)^s d_{i_s} a w(i_0..^i_s..i_k)
PForm wedge_exact(const Poly& a, const PForm& w) {
  PForm out = PForm::zero(w.n, w.k + 1, w.m);
  for (const auto& idx : k_subsets(w.n, w.k + 1)) {
    PolyVec v(w.m, Poly(a.n_vars()));
    for (int s = 0; s <= w.k; ++s) {
      std::vector<int> rest;
      for (int t = 0; t <= w.k; ++t)
        if (t != s) rest.push_back(idx[t]);
      PolyVec wv = w.value(rest);
      Poly da = a.diff(idx[s]);
      for (int e = 0; e < w.m; ++e) v[e] += (s % 2 ? -da : da) * wv[e];
    }
    out.set(idx, v);
  }
  return out;
}

PForm random_form(Rng& rng, int n, int k, int m, int deg) {
  PForm w = PForm::zero(n, k, m);
  for (const auto& idx : k_subsets(n, k)) w.set(idx, random_vec(rng, n, m, deg));
  return w;
}

}  // namespace

TEST_CASE("compatibility residual examples") {
  const int n = 2;
  TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
  CHECK(is_metric(TriConnection::zero(id), id));
  CHECK(is_metric(with_gamma(id, curved_gamma(n)), id));
  Tensor3 sym(n, zero_matrix(n, 2, 2));
  sym[0][0][1] = sym[0][1][0] = x(n, 1);
  sym[1][0][0] = c(n, 3);
  auto res = compat_residual(with_gamma(id, sym), id);
  for (int i = 0; i < n; ++i) {
    PolyMat expect = sym[i];
    for (auto& row : expect)
      for (auto& e : row) e *= Rational(-2);
    CHECK(res[i][0] == expect);
  }
  // Upsilon compensates a scaling of Gamma
  TriConnection sc = TriConnection::zero(id);
  sc.Gamma[1] = identity_matrix(n, 2);
  sc.Upsilon[1] = PolyMat{{c(n, 2)}};
  CHECK(is_metric(sc, id));
  // nonconstant g needs d_i g in the residual
  TrioleAlgebra var = id;
  var.at(0, 0, 0) = c(n, 1) + x(n, 0);
  CHECK_FALSE(is_metric(TriConnection::zero(var), var));
}

TEST_CASE("curvature examples") {
  const int n = 2;
  TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
  CurvatureTensor R = curvature(with_gamma(id, curved_gamma(n)));
  PolyMat expect{{Poly(n), c(n, -1)}, {c(n, 1), Poly(n)}};
  CHECK(R.RP[0][1] == expect);
  CHECK(R.RP[0][1] == curvature_oracle(curved_gamma(n), 0, 1));
  CHECK(R.RP[1][0] == curvature_oracle(curved_gamma(n), 1, 0));
  CHECK(is_zero(R.RQ[0][1]));
  // pure gauge from the shear S = [[1, x0], [0, 1]]
  Tensor3 pg = pure_gauge(shear(n));
  CHECK_FALSE(is_zero(pg[0]));
  CHECK(curvature(with_gamma(id, pg)).is_zero());
  CHECK(curvature(TriConnection::zero(id)).is_zero());
}

TEST_CASE("flat check examples") {
  const int n = 2;
  TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
  FlatReport z = flat_check(TriConnection::zero(id), id);
  CHECK(z.flat);
  CHECK(z.metric);
  CHECK(z.img_identity);
  CHECK(z.implied);

  FlatReport pg = flat_check(with_gamma(id, pure_gauge(shear(n))), id);
  CHECK(pg.flat);
  CHECK(pg.rp_zero);
  CHECK_FALSE(pg.metric);

  FlatReport cv = flat_check(with_gamma(id, curved_gamma(n)), id);
  CHECK_FALSE(cv.flat);
  CHECK_FALSE(cv.rp_zero);
  CHECK(cv.metric);
  CHECK(cv.report.witness["i"] == 0);
  CHECK(cv.report.witness["j"] == 1);
  CHECK(cv.to_json()["flat"] == false);
}

TEST_CASE("linear vector field residual examples") {
  const int n = 2, m = 2;
  CHECK(is_zero(linear_vectorfield_residual(pure_gauge(shear(n)))[0][1]));
  CHECK(is_zero(linear_vectorfield_residual(Tensor3(n, zero_matrix(n, m, m)))[0][1]));
  auto res = linear_vectorfield_residual(curved_gamma(n));
  // -R(P)_01 contracted with the fibre coordinates u^0 = y2, u^1 = y3
  const int N = n + m;
  Poly u0 = Poly::var(N, 2), u1 = Poly::var(N, 3);
  CHECK(res[0][1][0] == -u1);
  CHECK(res[0][1][1] == u0);
}

TEST_CASE("induced connections") {
  const int n = 2;
  Rng rng(3);
  Tensor3 G = random_gamma(rng, n, 2, 1);
  Tensor3 D = dual_connection(G);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) CHECK(D[i][b][a] == -G[i][a][b]);

  Tensor3 G2 = random_gamma(rng, n, 3, 1);
  Tensor3 T = tensor_connection(G, G2);
  for (int i = 0; i < n; ++i) {
    PolyMat ks = kronecker(G[i], identity_matrix(n, 3));
    PolyMat kt = kronecker(identity_matrix(n, 2), G2[i]);
    for (int r = 0; r < 6; ++r)
      for (int s = 0; s < 6; ++s) CHECK(T[i][r][s] == ks[r][s] + kt[r][s]);
  }

  TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
  for (const auto& M : bil_connection(TriConnection::zero(id))) CHECK(is_zero(M));
  CHECK(induced_connection(with_gamma(id, G), InducedKind::dual) == D);
  CHECK(end_connection(G).size() == static_cast<std::size_t>(n));
  CHECK_THROWS(induced_kind_from_string("sym3"));

  // a metric connection makes the induced bil connection preserve g
  TriConnection C = with_gamma(id, curved_gamma(n));
  Tensor3 B = bil_connection(C);
  PolyVec gvec;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) gvec.push_back(id.at(0, a, b));
  for (int i = 0; i < n; ++i) CHECK(is_zero(covariant_derivative(B, i, gvec)));
}

TEST_CASE("covariant exterior derivative") {
  const int n = 2;
  Tensor3 zero(n, zero_matrix(n, 2, 2));
  PForm p = PForm::section({x(n, 0), Poly(n)}, n);
  PForm dp = covariant_d(p, zero);
  CHECK(dp.k == 1);
  CHECK(dp.value({0}) == PolyVec{c(n, 1), Poly(n)});
  CHECK(is_zero(dp.value({1})));
  CHECK(covariant_d(PForm::section({c(n, 2), c(n, 5)}, n), zero).is_zero());
  // top degree maps to zero
  CHECK(covariant_d(PForm::zero(n, n, 2), zero).is_zero());

  PForm s = PForm::section({c(n, 1), Poly(n)}, n);
  PForm dd = covariant_d(covariant_d(s, curved_gamma(n)), curved_gamma(n));
  CHECK_FALSE(dd.is_zero());
  CHECK(dd == curvature_wedge(curvature_of(curved_gamma(n)), s));
  PolyVec v01 = dd.value({0, 1}), v10 = dd.value({1, 0});
  for (std::size_t e = 0; e < v01.size(); ++e) CHECK(v10[e] == -v01[e]);
}

TEST_CASE("d squared equals curvature wedge") {
  const int n = 3;
  Rng rng(7);
  Tensor3 zero(n, zero_matrix(n, 2, 2));
  Tensor3 curved(n, zero_matrix(n, 2, 2));
  curved[0][0][1] = x(n, 1);
  curved[0][1][0] = -x(n, 1);
  curved[2][0][0] = x(n, 0);
  for (int t = 0; t < 10; ++t) {
    const int k = uniform(rng, 0, 1);
    PForm w = random_form(rng, n, k, 2, 2);
    DSquaredReport flat = d_squared_vs_curvature(w, zero);
    CHECK(flat.equal);
    CHECK(flat.dd.is_zero());
    DSquaredReport r = d_squared_vs_curvature(w, curved);
    CHECK(r.equal);
    CHECK(r.dd == r.rw);
  }
  PForm s = PForm::section({c(n, 1), Poly(n)}, n);
  DSquaredReport r = d_squared_vs_curvature(s, curved);
  CHECK(r.equal);
  CHECK_FALSE(r.dd.is_zero());
  DSquaredReport v = d_squared_vs_curvature(random_form(rng, n, 2, 2, 1), curved);
  CHECK(v.vacuous);
  CHECK(v.equal);
}

TEST_CASE("covariant derivative is a derivation over A") {
  const int n = 3;
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    Tensor3 G = random_gamma(rng, n, 2, 1);
    const int k = uniform(rng, 0, 1);
    PForm w = random_form(rng, n, k, 2, 2);
    Poly a = random_poly(rng, n, 2);
    CHECK(covariant_d(w.scaled(a), G) == wedge_exact(a, w) + covariant_d(w, G).scaled(a));
  }
}

TEST_CASE("nabla-constant sections") {
  const int n = 2;
  Tensor3 zero(n, zero_matrix(n, 2, 2));
  auto h0 = nabla_constant_sections(zero, 3);
  CHECK(h0.size() == 2);
  for (const auto& v : h0)
    for (const auto& e : v) CHECK(e.is_constant());
  CHECK(nabla_constant_sections(curved_gamma(n), 2).empty());
  auto pg = nabla_constant_sections(pure_gauge(shear(n)), 2);
  CHECK(pg.size() == 2);
  PolyMat Sinv = *inverse_over_ring(shear(n));
  for (int col = 0; col < 2; ++col) CHECK(in_span(pg, {Sinv[0][col], Sinv[1][col]}));
  for (const auto& v : pg)
    for (int i = 0; i < n; ++i) CHECK(is_zero(covariant_derivative(pure_gauge(shear(n)), i, v)));
}

TEST_CASE("preserving endomorphisms and tensors") {
  const int n = 2;
  Tensor3 zero(n, zero_matrix(n, 2, 2));
  PolyMat cst{{c(n, 1), c(n, 2)}, {c(n, 3), c(n, 4)}};
  CHECK(preserves_endomorphism(zero, cst));
  PolyMat xid = identity_matrix(n, 2);
  for (auto& row : xid)
    for (auto& e : row) e *= x(n, 0);
  CHECK_FALSE(preserves_endomorphism(zero, xid));
  Rng rng(9);
  CHECK(preserves_endomorphism(random_gamma(rng, n, 2, 1), identity_matrix(n, 2)));

  PolyVec metric{c(n, 1), Poly(n), Poly(n), c(n, 1)};
  CHECK(preserves_tensor(curved_gamma(n), 0, 2, metric));
  CHECK_FALSE(preserves_tensor(pure_gauge(shear(n)), 0, 2, metric));
  CHECK(preserves_tensor(zero, 1, 1, {c(n, 1), Poly(n), Poly(n), c(n, 1)}));
  CHECK_THROWS(valence_acting(zero, 2, 2));

  GaugeSearch gs = gauge_structure_search({1, 0, 0, 1}, 2, 0, 2);
  CHECK(gs.dimension == 1);
  REQUIRE(gs.basis.size() == 1);
  CHECK(gs.basis[0][0][0] == 0);
  CHECK(gs.basis[0][0][1] == -gs.basis[0][1][0]);
  CHECK(gauge_structure_search({0, 1, -1, 0}, 2, 0, 2).dimension == 3);
  CHECK(gauge_structure_search({1, 0, 0, 0, 1, 0, 0, 0, 0}, 3, 1, 1).dimension == 5);
}

TEST_CASE("symmetry checks") {
  const int n = 2;
  std::vector<PolyMat> b{identity_matrix(n, 2)};
  PolyMat skew{{Poly(n), x(n, 0)}, {-x(n, 0), Poly(n)}};
  CHECK(is_orthogonal_inf(skew, b));
  CHECK_FALSE(is_orthogonal_inf(identity_matrix(n, 2), b));
  Rng rng(10);
  CHECK(is_commutant(random_matrix(rng, n, 2, 2, 1), identity_matrix(n, 2)));
  PolyMat rot{{c(n, Rational(3, 5)), c(n, Rational(-4, 5))}, {c(n, Rational(4, 5)), c(n, Rational(3, 5))}};
  CHECK(matmul(transpose(rot), rot) == identity_matrix(n, 2));
  CHECK(is_orthogonal_group(rot, b));
  CHECK_FALSE(is_orthogonal_group(shear(n), b));
  CHECK(symmetry_kind_from_string("commutant") == SymmetryKind::commutant);
}

TEST_CASE("random connections: antisymmetry, oracle, vector fields") {
  Rng rng(50);
  int flat_seen = 0, curved_seen = 0;
  for (int t = 0; t < 50; ++t) {
    const int n = uniform(rng, 2, 3), m = uniform(rng, 1, 2);
    Tensor3 G;
    switch (t % 3) {
      case 0: G = random_gamma(rng, n, m, 1); break;
      case 1: {
        // pure gauge of a unimodular polynomial matrix
        PolyMat S = to_poly(random_unimodular(rng, m), n);
        PolyMat U = identity_matrix(n, m);
        if (m > 1) U[0][1] = random_poly(rng, n, 2);
        G = pure_gauge(matmul(S, U));
        break;
      }
      default: {
        // commuting constant matrices
        PolyMat base = to_poly(random_unimodular(rng, m), n);
        G.assign(n, zero_matrix(n, m, m));
        for (int i = 0; i < n; ++i)
          for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) G[i][a][b] = base[a][b] * small_rational(rng);
        // scalar multiples of one matrix commute
        Rational f = small_rational(rng);
        for (int i = 1; i < n; ++i) {
          G[i] = G[0];
          for (auto& row : G[i])
            for (auto& e : row) e *= f * i;
        }
      }
    }
    auto R = curvature_of(G);
    auto res = linear_vectorfield_residual(G);
    const int N = n + m;
    bool curv_zero = true, res_zero = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        PolyMat neg = R[j][i];
        for (auto& row : neg)
          for (auto& e : row) e = -e;
        CHECK(R[i][j] == neg);
        CHECK(R[i][j] == curvature_oracle(G, i, j));
        curv_zero = curv_zero && is_zero(R[i][j]);
        res_zero = res_zero && is_zero(res[i][j]);
        for (int a = 0; a < m; ++a) {
          Poly expect(N);
          for (int g = 0; g < m; ++g) expect -= R[i][j][g][a].embed(N) * Poly::var(N, n + g);
          CHECK(res[i][j][a] == expect);
        }
      }
    CHECK(curv_zero == res_zero);
    (curv_zero ? flat_seen : curved_seen)++;
  }
  CHECK(flat_seen > 0);
  CHECK(curved_seen > 0);
}

TEST_CASE("gauge covariance of curvature") {
  Rng rng(60);
  for (int t = 0; t < 10; ++t) {
    const int n = 2, m = 2;
    Tensor3 G = random_gamma(rng, n, m, 1);
    PolyMat S = to_poly(random_unimodular(rng, m), n);
    PolyMat Sinv = *inverse_over_ring(S);
    auto R = curvature_of(G);
    auto R2 = curvature_of(gauge_transform(G, S));
    // acting form: R' = S^{-1} R S, stored transposed
    CHECK(transpose(R2[0][1]) == matmul(matmul(Sinv, transpose(R[0][1])), S));
  }
}

TEST_CASE("compatible flat connections satisfy the im(g) identity") {
  Rng rng(70);
  const int n = 2;
  TrioleAlgebra id = TrioleAlgebra::identity(n, 2);
  for (int t = 0; t < 10; ++t) {
    TriConnection C = TriConnection::zero(id);
    PolyMat J{{Poly(n), c(n, 1)}, {c(n, -1), Poly(n)}};
    for (int i = 0; i < n; ++i) {
      Rational f = small_rational(rng), h = small_rational(rng);
      C.Gamma[i] = J;
      for (auto& row : C.Gamma[i])
        for (auto& e : row) e *= f;
      // a scalar part in Gamma is absorbed by Upsilon
      for (int a = 0; a < 2; ++a) C.Gamma[i][a][a] += c(n, h);
      C.Upsilon[i] = PolyMat{{c(n, 2 * h)}};
    }
    REQUIRE(is_metric(C, id));
    FlatReport r = flat_check(C, id);
    CHECK(r.flat);
    CHECK(r.img_identity);
    CHECK(r.implied);
  }
}

TEST_CASE("curvature of a metric connection is skew") {
  Rng rng(80);
  const int n = 3;
  for (int t = 0; t < 10; ++t) {
    Tensor3 G(n, zero_matrix(n, 3, 3));
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
          Poly p = random_poly(rng, n, 1);
          G[i][a][b] = p;
          G[i][b][a] = -p;
        }
    TrioleAlgebra id = TrioleAlgebra::identity(n, 3);
    REQUIRE(is_metric(with_gamma(id, G), id));
    auto R = curvature_of(G);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        PolyMat Rt = transpose(R[i][j]);
        for (auto& row : Rt)
          for (auto& e : row) e = -e;
        CHECK(R[i][j] == Rt);
        CHECK(is_orthogonal_inf(transpose(R[i][j]), id.g));
      }
  }
}
