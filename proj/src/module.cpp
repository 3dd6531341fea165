#include "triolex/module.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace triolex {

using nlohmann::json;

namespace {

std::vector<PolyMat> zero_tensor(int n, int a, int b, int c) {
  return std::vector<PolyMat>(a, zero_matrix(n, b, c));
}

int graded_sign(const TrioleAlgebra& alg, int a, int b) {
  if (alg.convention != Convention::koszul) return 1;
  return ((a * b) % 2 == 0) ? 1 : -1;
}

PolyDiffOp op(const ScalarDerivation& X) { return PolyDiffOp::from_derivation(X); }

PolyVec part_of(const TrioleElement& t, int c) {
  if (c == 0) return PolyVec{t.a};
  return c == 1 ? t.p : t.q;
}

}  // namespace

TruncatedTriModule TruncatedTriModule::zero(const TrioleAlgebra& alg, int r0, int r1, int r2) {
  TruncatedTriModule R;
  R.r0 = r0;
  R.r1 = r1;
  R.r2 = r2;
  R.lam0 = zero_tensor(alg.n, r1, alg.mP, r0);
  R.lam1 = zero_tensor(alg.n, r2, alg.mP, r1);
  R.nu = zero_tensor(alg.n, r2, alg.mQ, r0);
  return R;
}

TruncatedTriModule TruncatedTriModule::regular(const TrioleAlgebra& alg) {
  TruncatedTriModule R = zero(alg, 1, alg.mP, alg.mQ);
  for (int j = 0; j < alg.mP; ++j) R.lam0[j][j][0] = Poly::one(alg.n);
  for (int k = 0; k < alg.mQ; ++k) {
    for (int a = 0; a < alg.mP; ++a)
      for (int j = 0; j < alg.mP; ++j) R.lam1[k][a][j] = alg.at(k, a, j);
    R.nu[k][k][0] = Poly::one(alg.n);
  }
  return R;
}

bool TruncatedTriModule::operator==(const TruncatedTriModule& o) const {
  return r0 == o.r0 && r1 == o.r1 && r2 == o.r2 && lam0 == o.lam0 && lam1 == o.lam1 && nu == o.nu;
}

namespace {

bool tensor_shape(const std::vector<PolyMat>& t, int a, int b, int c, int n) {
  if (static_cast<int>(t.size()) != a) return false;
  for (const auto& m : t) {
    if (static_cast<int>(m.size()) != b) return false;
    for (const auto& row : m) {
      if (static_cast<int>(row.size()) != c) return false;
      for (const auto& p : row)
        if (p.n_vars() != n) return false;
    }
  }
  return true;
}

}  // namespace

Report validate_truncated_module(const TruncatedTriModule& R, const TrioleAlgebra& alg) {
  const int n = alg.n;
  if (!tensor_shape(R.lam0, R.r1, alg.mP, R.r0, n) || !tensor_shape(R.lam1, R.r2, alg.mP, R.r1, n) ||
      !tensor_shape(R.nu, R.r2, alg.mQ, R.r0, n))
    return Report::fail("shape", nullptr, "structure tensors do not match the ranks");
  // lam1(e_a, lam0(e_b, r_i)) = nu(g(e_a, e_b), r_i)
  for (int k = 0; k < R.r2; ++k)
    for (int a = 0; a < alg.mP; ++a)
      for (int b = 0; b < alg.mP; ++b)
        for (int i = 0; i < R.r0; ++i) {
          Poly lhs(n), rhs(n);
          for (int j = 0; j < R.r1; ++j) lhs += R.lam1[k][a][j] * R.lam0[j][b][i];
          for (int A = 0; A < alg.mQ; ++A) rhs += alg.at(A, a, b) * R.nu[k][A][i];
          if (lhs != rhs)
            return Report::fail("compatibility", json{{"k", k}, {"alpha", a}, {"beta", b}, {"i", i}},
                                "lam1(p1, lam0(p2, r)) != nu(g(p1, p2), r)");
        }
  return Report::ok();
}

ModuleElement ModuleElement::zero(const TruncatedTriModule& R, int n_vars) {
  return ModuleElement{PolyVec(R.r0, Poly(n_vars)), PolyVec(R.r1, Poly(n_vars)), PolyVec(R.r2, Poly(n_vars))};
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
  ModuleElement r = *this;
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < r.part(c).size(); ++i) r.part(c)[i] += o.part(c)[i];
  return r;
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const { return *this + o.scaled(-1); }

ModuleElement ModuleElement::scaled(const Rational& c) const {
  ModuleElement r = *this;
  for (int k = 0; k < 3; ++k)
    for (auto& p : r.part(k)) p *= c;
  return r;
}

int ModuleElement::homogeneous_degree() const {
  int deg = -1;
  for (int c = 0; c < 3; ++c)
    if (!is_zero(part(c))) {
      if (deg != -1) return -1;
      deg = c;
    }
  return deg;
}

ModuleElement act(const TrioleElement& t, const ModuleElement& r, const TruncatedTriModule& R,
                  const TrioleAlgebra& alg) {
  ModuleElement out = ModuleElement::zero(R, alg.n);
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < r.part(c).size(); ++i) out.part(c)[i] += t.a * r.part(c)[i];
  for (int a = 0; a < alg.mP; ++a) {
    if (t.p[a].is_zero()) continue;
    for (int j = 0; j < R.r1; ++j)
      for (int i = 0; i < R.r0; ++i)
        if (!R.lam0[j][a][i].is_zero()) out.r1[j] += R.lam0[j][a][i] * t.p[a] * r.r0[i];
    for (int k = 0; k < R.r2; ++k)
      for (int j = 0; j < R.r1; ++j)
        if (!R.lam1[k][a][j].is_zero()) out.r2[k] += R.lam1[k][a][j] * t.p[a] * r.r1[j];
  }
  for (int A = 0; A < alg.mQ; ++A) {
    if (t.q[A].is_zero()) continue;
    for (int k = 0; k < R.r2; ++k)
      for (int i = 0; i < R.r0; ++i)
        if (!R.nu[k][A][i].is_zero()) out.r2[k] += R.nu[k][A][i] * t.q[A] * r.r0[i];
  }
  return out;
}

ComponentOps action_ops(const TrioleElement& t, const TruncatedTriModule& R, const TrioleAlgebra& alg) {
  const int n = alg.n;
  int d = t.homogeneous_degree();
  if (t.is_zero()) d = 0;
  if (d < 0) throw std::invalid_argument("action_ops needs a homogeneous element");
  ComponentOps c;
  c.degree = d;
  if (d == 0) {
    for (int k = 0; k < 3; ++k) c.from[k] = t.a * MatDiffOp::identity(n, R.rank(k));
  } else if (d == 1) {
    PolyMat m0 = zero_matrix(n, R.r1, R.r0), m1 = zero_matrix(n, R.r2, R.r1);
    for (int a = 0; a < alg.mP; ++a) {
      for (int j = 0; j < R.r1; ++j)
        for (int i = 0; i < R.r0; ++i) m0[j][i] += R.lam0[j][a][i] * t.p[a];
      for (int k = 0; k < R.r2; ++k)
        for (int j = 0; j < R.r1; ++j) m1[k][j] += R.lam1[k][a][j] * t.p[a];
    }
    c.from[0] = MatDiffOp::mult(m0, n);
    c.from[1] = MatDiffOp::mult(m1, n);
  } else {
    PolyMat m = zero_matrix(n, R.r2, R.r0);
    for (int A = 0; A < alg.mQ; ++A)
      for (int k = 0; k < R.r2; ++k)
        for (int i = 0; i < R.r0; ++i) m[k][i] += R.nu[k][A][i] * t.q[A];
    c.from[0] = MatDiffOp::mult(m, n);
  }
  return c;
}

std::vector<ModuleElement> module_test_basis(const TruncatedTriModule& R, int n_vars, int max_degree) {
  std::vector<ModuleElement> out;
  for (const auto& e : multi_indices_upto(n_vars, max_degree))
    for (int c = 0; c < 3; ++c)
      for (int i = 0; i < R.rank(c); ++i) {
        ModuleElement m = ModuleElement::zero(R, n_vars);
        m.part(c)[i] = Poly::monomial(e);
        out.push_back(std::move(m));
      }
  return out;
}

GradedDerivation module_action(const TrioleElement& s, const GradedDerivation& X, const TrioleAlgebra& alg) {
  const int n = alg.n;
  const int ds = s.is_zero() ? 0 : s.homogeneous_degree();
  if (ds < 0) throw std::invalid_argument("module_action needs a homogeneous element");
  const int d = ds + X.degree;
  if (d > 2) throw std::invalid_argument("degree overflow: the product has degree above 2");
  if (ds == 0) {
    GradedDerivation Z = X;
    const Poly& a = s.a;
    auto sc = [&](ScalarDerivation& D) { D = D.scaled(a); };
    auto sm = [&](PolyMat& M) {
      for (auto& row : M)
        for (auto& p : row) p = a * p;
    };
    switch (X.degree) {
      case 0: sc(Z.XA), sm(Z.G), sm(Z.H); break;
      case 1:
        for (auto& D : Z.XA1) sc(D);
        Z.Xp = a * Z.Xp;
        break;
      case 2:
        for (auto& D : Z.XA2) sc(D);
        break;
      case -1:
        for (auto& p : Z.phi) p = a * p;
        sm(Z.psi);
        break;
    }
    return Z;
  }
  if (ds == 1 && X.degree == 0) {
    std::vector<ScalarDerivation> XA1;
    for (int b = 0; b < alg.mP; ++b) XA1.push_back(X.XA.scaled(s.p[b]));
    PolyMat gp = zero_matrix(n, alg.mQ, alg.mP);
    for (int B = 0; B < alg.mQ; ++B)
      for (int c = 0; c < alg.mP; ++c)
        for (int b = 0; b < alg.mP; ++b) gp[B][c] += alg.at(B, b, c) * s.p[b];
    const MatDiffOp XP = MatDiffOp::scalar(op(X.XA), alg.mP) + MatDiffOp::mult(X.G, n);
    return GradedDerivation::degree1(std::move(XA1), compose(MatDiffOp::mult(gp, n), XP));
  }
  if (ds == 1 && X.degree == 1) {
    std::vector<ScalarDerivation> XA2(alg.mQ, ScalarDerivation(n));
    for (int B = 0; B < alg.mQ; ++B)
      for (int a = 0; a < alg.mP; ++a)
        for (int b = 0; b < alg.mP; ++b)
          if (!alg.at(B, a, b).is_zero()) XA2[B] = XA2[B] + X.XA1[b].scaled(alg.at(B, a, b) * s.p[a]);
    return GradedDerivation::degree2(std::move(XA2));
  }
  if (ds == 1 && X.degree == -1) {
    PolyMat G = zero_matrix(n, alg.mP, alg.mP), H = zero_matrix(n, alg.mQ, alg.mQ);
    for (int c = 0; c < alg.mP; ++c)
      for (int a = 0; a < alg.mP; ++a) G[c][a] = s.p[c] * X.phi[a];
    for (int C = 0; C < alg.mQ; ++C)
      for (int B = 0; B < alg.mQ; ++B)
        for (int b = 0; b < alg.mP; ++b)
          for (int c = 0; c < alg.mP; ++c) H[C][B] += alg.at(C, b, c) * s.p[b] * X.psi[c][B];
    return GradedDerivation::degree0(ScalarDerivation(n), G, H);
  }
  if (ds == 2 && X.degree == 0) {
    std::vector<ScalarDerivation> XA2;
    for (int B = 0; B < alg.mQ; ++B) XA2.push_back(X.XA.scaled(s.q[B]));
    return GradedDerivation::degree2(std::move(XA2));
  }
  if (ds == 2 && X.degree == -1) {
    PolyMat m = zero_matrix(n, alg.mQ, alg.mP);
    for (int B = 0; B < alg.mQ; ++B)
      for (int a = 0; a < alg.mP; ++a) m[B][a] = s.q[B] * X.phi[a];
    return GradedDerivation::degree1(std::vector<ScalarDerivation>(alg.mP, ScalarDerivation(n)),
                                     MatDiffOp::mult(m, n));
  }
  throw std::invalid_argument("unsupported module action");
}

ModuleElement apply_module_derivation(const ComponentOps& X, const TrioleElement& t, const TruncatedTriModule& R,
                                      const TrioleAlgebra& alg) {
  ModuleElement out = ModuleElement::zero(R, alg.n);
  for (int c = 0; c < 3; ++c) {
    const int target = c + X.degree;
    if (!X.from[c] || target < 0 || target > 2) continue;
    const PolyVec v = X.from[c]->apply(part_of(t, c));
    for (std::size_t i = 0; i < v.size(); ++i) out.part(target)[i] += v[i];
  }
  return out;
}

namespace {

Report check_components(const ComponentOps& X, int d, const std::array<int, 3>& src, const std::array<int, 3>& dst,
                        int n) {
  for (int c = 0; c < 3; ++c) {
    const int target = c + d;
    if (!X.from[c]) continue;
    if (target < 0 || target > 2) {
      if (!X.from[c]->is_zero()) return Report::fail("shape", json{{"component", c}}, "component leaves the grading");
      continue;
    }
    const MatDiffOp& M = *X.from[c];
    if (M.rows() != dst[target] || M.cols() != src[c] || M.n_vars() != n)
      return Report::fail("shape", json{{"component", c}}, "component has the wrong shape");
    if (M.order() > 1) return Report::fail("order", json{{"component", c}, {"order", M.order()}}, "order exceeds 1");
  }
  return Report::ok();
}

}  // namespace

Report validate_module_derivation(const ComponentOps& X, const TruncatedTriModule& R, const TrioleAlgebra& alg,
                                  int max_degree) {
  if (X.degree < 0 || X.degree > 2) return Report::fail("degree", json{{"degree", X.degree}}, "degree must be 0, 1 or 2");
  const std::array<int, 3> src{1, alg.mP, alg.mQ}, dst{R.r0, R.r1, R.r2};
  if (Report r = check_components(X, X.degree, src, dst, alg.n); !r) return r;
  const auto basis = monomial_test_basis(alg, max_degree);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const TrioleElement& s = basis[i];
      const TrioleElement& t = basis[j];
      const int ds = s.homogeneous_degree(), dt = t.homogeneous_degree();
      const ModuleElement lhs = apply_module_derivation(X, multiply(s, t, alg), R, alg);
      // X(s) . t written as a left action with the graded swap sign
      const ModuleElement xs_t = act(t, apply_module_derivation(X, s, R, alg), R, alg)
                                     .scaled(graded_sign(alg, X.degree + ds, dt));
      const ModuleElement s_xt = act(s, apply_module_derivation(X, t, R, alg), R, alg)
                                     .scaled(graded_sign(alg, X.degree, ds));
      if (lhs != xs_t + s_xt)
        return Report::fail("graded Leibniz", json{{"left", i}, {"right", j}}, "X(s t) != X(s) t + sign s X(t)");
    }
  return Report::ok();
}

ModuleElement apply_der_operator(const DerOperator& D, const ModuleElement& r) {
  ModuleElement out{PolyVec(r.r0.size()), PolyVec(r.r1.size()), PolyVec(r.r2.size())};
  int n = 0;
  for (int c = 0; c < 3 && n == 0; ++c)
    if (!r.part(c).empty()) n = r.part(c)[0].n_vars();
  for (int c = 0; c < 3; ++c)
    for (auto& p : out.part(c)) p = Poly(n);
  for (int c = 0; c < 3; ++c) {
    const int target = c + D.ops.degree;
    if (!D.ops.from[c] || target < 0 || target > 2) continue;
    const PolyVec v = D.ops.from[c]->apply(r.part(c));
    for (std::size_t i = 0; i < v.size(); ++i) out.part(target)[i] += v[i];
  }
  return out;
}

Report validate_der_operator(const DerOperator& D, const TruncatedTriModule& R, const TrioleAlgebra& alg,
                             int max_degree) {
  const int d = D.ops.degree;
  if (d != D.symbol.degree) return Report::fail("degree", json{{"operator", d}, {"symbol", D.symbol.degree}});
  if (d < -1 || d > 2) return Report::fail("degree", json{{"degree", d}}, "degree must lie in {-1,0,1,2}");
  if (Report r = validate_derivation(D.symbol, alg); !r) {
    r.check = "symbol: " + r.check;
    return r;
  }
  const std::array<int, 3> ranks{R.r0, R.r1, R.r2};
  if (Report r = check_components(D.ops, d, ranks, ranks, alg.n); !r) return r;
  const auto tb = monomial_test_basis(alg, max_degree);
  const auto rb = module_test_basis(R, alg.n, max_degree);
  for (std::size_t i = 0; i < tb.size(); ++i)
    for (std::size_t j = 0; j < rb.size(); ++j) {
      const TrioleElement& t = tb[i];
      const ModuleElement& r = rb[j];
      const ModuleElement lhs = apply_der_operator(D, act(t, r, R, alg));
      const ModuleElement rhs = act(apply_derivation(D.symbol, t, alg), r, R, alg) +
                                act(t, apply_der_operator(D, r), R, alg)
                                    .scaled(graded_sign(alg, d, t.homogeneous_degree()));
      if (lhs != rhs)
        return Report::fail("Der-Leibniz", json{{"t", i}, {"r", j}}, "D(t r) != X(t) r + sign t D(r)");
    }
  return Report::ok();
}

DerOperator der_operator_deg2(const GradedDerivation& X2, const PolyMat& h, const TruncatedTriModule& R,
                              const TrioleAlgebra& alg) {
  if (X2.degree != 2) throw std::invalid_argument("degree 2 symbol expected");
  const int n = alg.n;
  MatDiffOp M = MatDiffOp::mult(h, n);
  for (int k = 0; k < R.r2; ++k)
    for (int i = 0; i < R.r0; ++i)
      for (int A = 0; A < alg.mQ; ++A)
        if (!R.nu[k][A][i].is_zero()) M.at(k, i) += R.nu[k][A][i] * op(X2.XA2[A]);
  DerOperator D;
  D.ops.degree = 2;
  D.ops.from[0] = M;
  D.symbol = X2;
  return D;
}

namespace {

RatVec combine(const std::vector<RatMat>& table, const RatVec& u, const RatVec& v, int out_dim) {
  RatVec r(out_dim, 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      for (int k = 0; k < out_dim; ++k) r[k] += u[i] * v[j] * table[i][j][k];
    }
  }
  return r;
}

RatVec act_on(const std::vector<RatMat>& rho, const RatVec& a, const RatVec& x) {
  const std::size_t d = x.size();
  RatVec r(d, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t row = 0; row < d; ++row)
      for (std::size_t col = 0; col < d; ++col) r[row] += a[i] * rho[i][row][col] * x[col];
  }
  return r;
}

RatVec unit(int d, int i) {
  RatVec v(d, 0);
  v[i] = 1;
  return v;
}

RatVec sub(RatVec a, const RatVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

RatVec add(RatVec a, const RatVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

bool all_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

bool table_shape(const std::vector<RatMat>& t, int a, int b, int c) {
  if (static_cast<int>(t.size()) != a) return false;
  for (const auto& m : t) {
    if (static_cast<int>(m.size()) != b) return false;
    for (const auto& row : m)
      if (static_cast<int>(row.size()) != c) return false;
  }
  return true;
}

}  // namespace

Report validate_triolic_lie_algebra(const TriolicLieAlgebraData& L) {
  if (!table_shape(L.bracket, L.d0, L.d0, L.d0) || !table_shape(L.rho1, L.d0, L.d1, L.d1) ||
      !table_shape(L.rho2, L.d0, L.d2, L.d2) || !table_shape(L.form, L.d1, L.d1, L.d2))
    return Report::fail("shape", nullptr);
  auto br = [&](const RatVec& u, const RatVec& v) { return combine(L.bracket, u, v, L.d0); };
  auto fm = [&](const RatVec& u, const RatVec& v) { return combine(L.form, u, v, L.d2); };
  for (int i = 0; i < L.d0; ++i)
    for (int j = 0; j < L.d0; ++j)
      if (!all_zero(add(br(unit(L.d0, i), unit(L.d0, j)), br(unit(L.d0, j), unit(L.d0, i)))))
        return Report::fail("skew bracket", json{{"i", i}, {"j", j}});
  for (int i = 0; i < L.d0; ++i)
    for (int j = 0; j < L.d0; ++j)
      for (int k = 0; k < L.d0; ++k) {
        const RatVec a = unit(L.d0, i), b = unit(L.d0, j), c = unit(L.d0, k);
        const RatVec jac = add(add(br(a, br(b, c)), br(b, br(c, a))), br(c, br(a, b)));
        if (!all_zero(jac)) return Report::fail("Jacobi", json{{"i", i}, {"j", j}, {"k", k}});
      }
  auto rep_check = [&](const std::vector<RatMat>& rho, int dim, const char* name) -> Report {
    for (int i = 0; i < L.d0; ++i)
      for (int j = 0; j < L.d0; ++j)
        for (int x = 0; x < dim; ++x) {
          const RatVec a = unit(L.d0, i), b = unit(L.d0, j), v = unit(dim, x);
          const RatVec lhs = act_on(rho, br(a, b), v);
          const RatVec rhs = sub(act_on(rho, a, act_on(rho, b, v)), act_on(rho, b, act_on(rho, a, v)));
          if (lhs != rhs) return Report::fail(name, json{{"i", i}, {"j", j}, {"basis", x}});
        }
    return Report::ok();
  };
  if (Report r = rep_check(L.rho1, L.d1, "rho1 representation"); !r) return r;
  if (Report r = rep_check(L.rho2, L.d2, "rho2 representation"); !r) return r;
  for (int a = 0; a < L.d1; ++a)
    for (int b = 0; b < L.d1; ++b)
      if (!all_zero(add(fm(unit(L.d1, a), unit(L.d1, b)), fm(unit(L.d1, b), unit(L.d1, a)))))
        return Report::fail("skew form", json{{"a", a}, {"b", b}});
  for (int i = 0; i < L.d0; ++i)
    for (int a = 0; a < L.d1; ++a)
      for (int b = 0; b < L.d1; ++b) {
        const RatVec x = unit(L.d0, i), u = unit(L.d1, a), v = unit(L.d1, b);
        const RatVec lhs = act_on(L.rho2, x, fm(u, v));
        const RatVec rhs = add(fm(act_on(L.rho1, x, u), v), fm(u, act_on(L.rho1, x, v)));
        if (lhs != rhs) return Report::fail("rho compatibility", json{{"i", i}, {"a", a}, {"b", b}});
      }
  return Report::ok();
}

namespace {

// coordinates of y in the span of basis, comparing every monomial coefficient of the flattened data
RatVec coordinates(const GradedDerivation& y, const std::vector<GradedDerivation>& basis, const TrioleAlgebra& alg) {
  const PolyVec fy = flatten(y, alg);
  std::vector<PolyVec> fb;
  for (const auto& b : basis) fb.push_back(flatten(b, alg));
  std::set<std::pair<std::size_t, Exp>> keys;
  auto collect = [&](const PolyVec& v) {
    for (std::size_t s = 0; s < v.size(); ++s)
      for (const auto& [e, c] : v[s].terms()) keys.insert({s, e});
  };
  collect(fy);
  for (const auto& v : fb) collect(v);
  RatMat M;
  RatVec rhs;
  for (const auto& [s, e] : keys) {
    RatVec row;
    for (const auto& v : fb) row.push_back(v[s].coeff(e));
    M.push_back(row);
    rhs.push_back(fy[s].coeff(e));
  }
  if (M.empty()) return RatVec(basis.size(), 0);
  auto sol = rational_solve(M, rhs);
  if (!sol) throw std::domain_error("bracket leaves the span of the given derivations");
  return *sol;
}

}  // namespace

TriolicLieAlgebraData triolic_lie_from_derivations(const std::vector<GradedDerivation>& g0,
                                                   const std::vector<GradedDerivation>& g1,
                                                   const std::vector<GradedDerivation>& g2,
                                                   const TrioleAlgebra& alg) {
  TriolicLieAlgebraData L;
  L.d0 = static_cast<int>(g0.size());
  L.d1 = static_cast<int>(g1.size());
  L.d2 = static_cast<int>(g2.size());
  L.bracket.assign(L.d0, RatMat(L.d0));
  for (int i = 0; i < L.d0; ++i)
    for (int j = 0; j < L.d0; ++j) L.bracket[i][j] = coordinates(bracket(g0[i], g0[j], alg), g0, alg);
  L.rho1.assign(L.d0, RatMat(L.d1, RatVec(L.d1, 0)));
  L.rho2.assign(L.d0, RatMat(L.d2, RatVec(L.d2, 0)));
  for (int i = 0; i < L.d0; ++i) {
    for (int c = 0; c < L.d1; ++c) {
      const RatVec col = coordinates(bracket(g0[i], g1[c], alg), g1, alg);
      for (int r = 0; r < L.d1; ++r) L.rho1[i][r][c] = col[r];
    }
    for (int c = 0; c < L.d2; ++c) {
      const RatVec col = coordinates(bracket(g0[i], g2[c], alg), g2, alg);
      for (int r = 0; r < L.d2; ++r) L.rho2[i][r][c] = col[r];
    }
  }
  L.form.assign(L.d1, RatMat(L.d1));
  for (int a = 0; a < L.d1; ++a)
    for (int b = 0; b < L.d1; ++b) L.form[a][b] = coordinates(bracket(g1[a], g1[b], alg), g2, alg);
  return L;
}

}  // namespace triolex
