#include "triolex/derivation.hpp"

#include <stdexcept>

namespace triolex {

using nlohmann::json;

GradedDerivation GradedDerivation::zero(int degree, const TrioleAlgebra& alg) {
  GradedDerivation X;
  X.degree = degree;
  const int n = alg.n;
  switch (degree) {
    case 0:
      X.XA = ScalarDerivation(n);
      X.G = zero_matrix(n, alg.mP, alg.mP);
      X.H = zero_matrix(n, alg.mQ, alg.mQ);
      break;
    case 1:
      X.XA1.assign(alg.mP, ScalarDerivation(n));
      X.Xp = MatDiffOp(n, alg.mQ, alg.mP);
      break;
    case 2:
      X.XA2.assign(alg.mQ, ScalarDerivation(n));
      break;
    case -1:
      X.phi.assign(alg.mP, Poly(n));
      X.psi = zero_matrix(n, alg.mP, alg.mQ);
      break;
    default:
      throw std::invalid_argument("derivation degree must lie in {-1,0,1,2}");
  }
  return X;
}

GradedDerivation GradedDerivation::degree0(const ScalarDerivation& XA, PolyMat G, PolyMat H) {
  GradedDerivation X;
  X.degree = 0;
  X.XA = XA;
  X.G = std::move(G);
  X.H = std::move(H);
  return X;
}

GradedDerivation GradedDerivation::degree1(std::vector<ScalarDerivation> XA1, MatDiffOp Xp) {
  GradedDerivation X;
  X.degree = 1;
  X.XA1 = std::move(XA1);
  X.Xp = std::move(Xp);
  return X;
}

GradedDerivation GradedDerivation::degree2(std::vector<ScalarDerivation> XA2) {
  GradedDerivation X;
  X.degree = 2;
  X.XA2 = std::move(XA2);
  return X;
}

GradedDerivation GradedDerivation::degree_minus1(PolyVec phi, PolyMat psi) {
  GradedDerivation X;
  X.degree = -1;
  X.phi = std::move(phi);
  X.psi = std::move(psi);
  return X;
}

bool GradedDerivation::operator==(const GradedDerivation& o) const {
  if (degree != o.degree) return false;
  switch (degree) {
    case 0: return XA == o.XA && G == o.G && H == o.H;
    case 1: return XA1 == o.XA1 && Xp == o.Xp;
    case 2: return XA2 == o.XA2;
    case -1: return phi == o.phi && psi == o.psi;
  }
  return false;
}

int koszul_kappa(const TrioleAlgebra& alg) { return alg.convention == Convention::koszul ? -1 : 1; }

int bracket_sign(int dx, int dy, const TrioleAlgebra& alg) {
  if (alg.convention != Convention::koszul) return 1;
  return ((dx * dy) % 2 == 0) ? 1 : -1;
}

int component_rank(int c, const TrioleAlgebra& alg) {
  switch (c) {
    case 0: return 1;
    case 1: return alg.mP;
    case 2: return alg.mQ;
  }
  throw std::out_of_range("component index");
}

namespace {

PolyDiffOp op(const ScalarDerivation& X) { return PolyDiffOp::from_derivation(X); }

MatDiffOp column(const std::vector<ScalarDerivation>& Xs, int n) {
  MatDiffOp M(n, static_cast<int>(Xs.size()), 1);
  for (std::size_t i = 0; i < Xs.size(); ++i) M.at(static_cast<int>(i), 0) = op(Xs[i]);
  return M;
}

bool is_derivation_op(const PolyDiffOp& D) {
  return D.order() <= 1 && D.coeff(Exp(D.n_vars(), 0)).is_zero();
}

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

}  // namespace

ComponentOps component_ops(const GradedDerivation& X, const TrioleAlgebra& alg) {
  ComponentOps c;
  c.degree = X.degree;
  const int n = alg.n;
  switch (X.degree) {
    case 0: {
      MatDiffOp a(n, 1, 1);
      a.at(0, 0) = op(X.XA);
      c.from[0] = a;
      c.from[1] = MatDiffOp::scalar(op(X.XA), alg.mP) + MatDiffOp::mult(X.G, n);
      c.from[2] = MatDiffOp::scalar(op(X.XA), alg.mQ) + MatDiffOp::mult(X.H, n);
      break;
    }
    case 1:
      c.from[0] = column(X.XA1, n);
      c.from[1] = X.Xp;
      break;
    case 2:
      c.from[0] = column(X.XA2, n);
      break;
    case -1: {
      c.from[1] = MatDiffOp::mult(PolyMat{X.phi}, n);
      c.from[2] = MatDiffOp::mult(X.psi, n);
      break;
    }
    default:
      throw std::invalid_argument("derivation degree must lie in {-1,0,1,2}");
  }
  return c;
}

GradedDerivation from_component_ops(const ComponentOps& ops, const TrioleAlgebra& alg) {
  const int n = alg.n;
  const int d = ops.degree;
  auto get = [&](int c) {
    if (ops.from[c]) return *ops.from[c];
    return MatDiffOp(n, component_rank(c + d, alg), component_rank(c, alg));
  };
  GradedDerivation X = GradedDerivation::zero(d, alg);
  switch (d) {
    case 0: {
      const PolyDiffOp a = get(0).at(0, 0);
      require(is_derivation_op(a), "A-component is not a derivation");
      X.XA = a.first_order_part();
      const MatDiffOp gp = get(1) - MatDiffOp::scalar(a, alg.mP);
      const MatDiffOp hq = get(2) - MatDiffOp::scalar(a, alg.mQ);
      require(gp.order() == 0 && hq.order() == 0, "module components do not share the scalar symbol");
      X.G = gp.zeroth();
      X.H = hq.zeroth();
      break;
    }
    case 1: {
      const MatDiffOp a = get(0);
      for (int b = 0; b < alg.mP; ++b) {
        require(is_derivation_op(a.at(b, 0)), "A-component is not a P-valued derivation");
        X.XA1[b] = a.at(b, 0).first_order_part();
      }
      X.Xp = get(1);
      break;
    }
    case 2: {
      const MatDiffOp a = get(0);
      for (int B = 0; B < alg.mQ; ++B) {
        require(is_derivation_op(a.at(B, 0)), "A-component is not a Q-valued derivation");
        X.XA2[B] = a.at(B, 0).first_order_part();
      }
      break;
    }
    case -1: {
      const MatDiffOp f = get(1), s = get(2);
      require(f.order() == 0 && s.order() == 0, "degree -1 components must be A-linear");
      X.phi = f.zeroth()[0];
      X.psi = s.zeroth();
      break;
    }
  }
  return X;
}

MatDiffOp twisted_symbol_operator(const std::vector<ScalarDerivation>& XA1, const TrioleAlgebra& alg) {
  MatDiffOp T(alg.n, alg.mQ, alg.mP);
  for (int B = 0; B < alg.mQ; ++B)
    for (int a = 0; a < alg.mP; ++a)
      for (int b = 0; b < alg.mP; ++b)
        if (!alg.at(B, b, a).is_zero()) T.at(B, a) += alg.at(B, b, a) * op(XA1.at(b));
  return T;
}

GradedDerivation make_degree1(const TrioleAlgebra& alg, const std::vector<ScalarDerivation>& XA1, const PolyMat& h) {
  return GradedDerivation::degree1(XA1, twisted_symbol_operator(XA1, alg) + MatDiffOp::mult(h, alg.n));
}

PolyMat degree0_residual(const GradedDerivation& X, const TrioleAlgebra& alg, int C) {
  PolyMat R = zero_matrix(alg.n, alg.mP, alg.mP);
  for (int a = 0; a < alg.mP; ++a)
    for (int b = 0; b < alg.mP; ++b) {
      Poly r = X.XA.apply(alg.at(C, a, b));
      for (int B = 0; B < alg.mQ; ++B) r += alg.at(B, a, b) * X.H[C][B];
      for (int c = 0; c < alg.mP; ++c) {
        r -= alg.at(C, c, b) * X.G[c][a];
        r -= alg.at(C, a, c) * X.G[c][b];
      }
      R[a][b] = r;
    }
  return R;
}

namespace {

bool shape_ok(const PolyMat& m, int r, int c, int n) {
  if (static_cast<int>(m.size()) != r) return false;
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != c) return false;
    for (const auto& p : row)
      if (p.n_vars() != n) return false;
  }
  return true;
}

bool der_ok(const ScalarDerivation& X, int n) {
  if (X.n_vars() != n) return false;
  for (const auto& c : X.coeffs)
    if (c.n_vars() != n) return false;
  return true;
}

}  // namespace

Report validate_derivation(const GradedDerivation& X, const TrioleAlgebra& alg) {
  const int n = alg.n;
  switch (X.degree) {
    case 0: {
      if (!der_ok(X.XA, n) || !shape_ok(X.G, alg.mP, alg.mP, n) || !shape_ok(X.H, alg.mQ, alg.mQ, n))
        return Report::fail("shape", nullptr, "degree 0 components have wrong shape");
      for (int C = 0; C < alg.mQ; ++C) {
        const PolyMat R = degree0_residual(X, alg, C);
        for (int a = 0; a < alg.mP; ++a)
          for (int b = 0; b < alg.mP; ++b)
            if (!R[a][b].is_zero())
              return Report::fail("g-compatibility", json{{"C", C}, {"alpha", a}, {"beta", b}, {"residual", R[a][b].str()}},
                                  "X^Q(g(p1,p2)) != g(X^P p1, p2) + g(p1, X^P p2)");
      }
      return Report::ok();
    }
    case 1: {
      if (static_cast<int>(X.XA1.size()) != alg.mP || X.Xp.rows() != alg.mQ || X.Xp.cols() != alg.mP ||
          X.Xp.n_vars() != n)
        return Report::fail("shape", nullptr, "degree 1 components have wrong shape");
      for (const auto& d : X.XA1)
        if (!der_ok(d, n)) return Report::fail("shape", nullptr, "degree 1 components have wrong shape");
      if (X.Xp.order() > 1) return Report::fail("order", json{{"order", X.Xp.order()}}, "X^P must have order <= 1");
      // x_i o X^P - X^P o x_i = -(multiplication by g(X_A1(x_i), -))
      for (int i = 0; i < n; ++i) {
        const MatDiffOp lhs = delta_a(X.Xp, Poly::var(n, i));
        for (int B = 0; B < alg.mQ; ++B)
          for (int a = 0; a < alg.mP; ++a) {
            Poly m(n);
            for (int b = 0; b < alg.mP; ++b) m += alg.at(B, b, a) * X.XA1[b].coeffs[i];
            if (lhs.at(B, a) != PolyDiffOp::mult(-m))
              return Report::fail("twisted Leibniz", json{{"i", i}, {"B", B}, {"alpha", a}},
                                  "X^P(a p) != g(X_A1(a), p) + a X^P(p)");
          }
      }
      return Report::ok();
    }
    case 2: {
      if (static_cast<int>(X.XA2.size()) != alg.mQ) return Report::fail("shape", nullptr, "degree 2 needs mQ derivations");
      for (const auto& d : X.XA2)
        if (!der_ok(d, n)) return Report::fail("shape", nullptr, "degree 2 components have wrong shape");
      return Report::ok();
    }
    case -1: {
      if (static_cast<int>(X.phi.size()) != alg.mP || !shape_ok(X.psi, alg.mP, alg.mQ, n))
        return Report::fail("shape", nullptr, "degree -1 components have wrong shape");
      const int kappa = koszul_kappa(alg);
      // psi(g(e_a, e_b)) = phi_a e_b + kappa phi_b e_a
      for (int a = 0; a < alg.mP; ++a)
        for (int b = 0; b < alg.mP; ++b)
          for (int c = 0; c < alg.mP; ++c) {
            Poly lhs(n);
            for (int A = 0; A < alg.mQ; ++A) lhs += X.psi[c][A] * alg.at(A, a, b);
            Poly rhs(n);
            if (b == c) rhs += X.phi[a];
            if (a == c) rhs += kappa > 0 ? X.phi[b] : -X.phi[b];
            if (lhs != rhs)
              return Report::fail("psi o g", json{{"alpha", a}, {"beta", b}, {"gamma", c}},
                                  "X(p1 p2) != X(p1) p2 + sign p1 X(p2)");
          }
      // p.q = 0 forces g(e_a, psi(eps_A)) = -kappa phi_a eps_A
      for (int a = 0; a < alg.mP; ++a)
        for (int A = 0; A < alg.mQ; ++A)
          for (int B = 0; B < alg.mQ; ++B) {
            Poly lhs(n);
            for (int b = 0; b < alg.mP; ++b) lhs += alg.at(B, a, b) * X.psi[b][A];
            Poly rhs(n);
            if (A == B) rhs = kappa > 0 ? -X.phi[a] : X.phi[a];
            if (lhs != rhs)
              return Report::fail("P.Q = 0", json{{"alpha", a}, {"A", A}, {"B", B}}, "X(p q) must vanish");
          }
      return Report::ok();
    }
  }
  return Report::fail("degree", json{{"degree", X.degree}}, "derivation degree must lie in {-1,0,1,2}");
}

DegreeMinus1Solve solve_degree_minus1(const TrioleAlgebra& alg, const PolyVec& phi) {
  for (const auto& m : alg.g)
    for (const auto& row : m)
      for (const auto& p : row)
        if (!p.is_constant()) throw std::invalid_argument("degree -1 solver needs a constant metric");
  const int mP = alg.mP, mQ = alg.mQ, n = alg.n;
  const int kappa = koszul_kappa(alg);
  // unknowns psi[c][A] -> c*mQ + A, one system per monomial of phi
  auto cst = [&](int A, int a, int b) { return alg.at(A, a, b).constant_term(); };
  RatMat M;
  std::vector<std::array<int, 3>> tags;
  for (int a = 0; a < mP; ++a)
    for (int b = 0; b < mP; ++b)
      for (int c = 0; c < mP; ++c) {
        RatVec row(mP * mQ, 0);
        for (int A = 0; A < mQ; ++A) row[c * mQ + A] = cst(A, a, b);
        M.push_back(row);
        tags.push_back({0, a * mP + b, c});
      }
  for (int a = 0; a < mP; ++a)
    for (int A = 0; A < mQ; ++A)
      for (int B = 0; B < mQ; ++B) {
        RatVec row(mP * mQ, 0);
        for (int b = 0; b < mP; ++b) row[b * mQ + A] = cst(B, a, b);
        M.push_back(row);
        tags.push_back({1, a * mQ + A, B});
      }
  std::vector<Exp> monos;
  for (const auto& p : phi)
    for (const auto& [e, c] : p.terms())
      if (std::find(monos.begin(), monos.end(), e) == monos.end()) monos.push_back(e);
  DegreeMinus1Solve out;
  PolyMat psi = zero_matrix(n, mP, mQ);
  out.system = json::array();
  for (const auto& row : M) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.get_str());
    out.system.push_back(r);
  }
  for (const auto& e : monos) {
    RatVec rhs;
    for (std::size_t k = 0; k < tags.size(); ++k) {
      const auto& t = tags[k];
      Rational v = 0;
      if (t[0] == 0) {
        const int a = t[1] / mP, b = t[1] % mP, c = t[2];
        if (b == c) v += phi[a].coeff(e);
        if (a == c) v += kappa * phi[b].coeff(e);
      } else {
        const int a = t[1] / mQ, A = t[1] % mQ, B = t[2];
        if (A == B) v = -kappa * phi[a].coeff(e);
      }
      rhs.push_back(v);
    }
    auto sol = rational_solve(M, rhs);
    if (!sol) return out;
    for (int c = 0; c < mP; ++c)
      for (int A = 0; A < mQ; ++A) psi[c][A].add_term(e, (*sol)[c * mQ + A]);
  }
  out.solvable = true;
  out.psi = psi;
  return out;
}

json NonexistenceReport::to_json() const {
  json sys = json::array();
  for (const auto& row : system) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.get_str());
    sys.push_back(r);
  }
  return json{{"nonexistence", nonexistence}, {"unknowns", unknowns}, {"rank", rank},
              {"solution_dim", solution_dim}, {"system", sys}};
}

// X(eps_A) = X_A in A; X(eps_A eps_B) = 0 gives X_A eps_B + X_B eps_A = 0
NonexistenceReport reject_degree_minus2(const TrioleAlgebra& alg) {
  NonexistenceReport r;
  const int m = alg.mQ;
  r.unknowns = m;
  for (int A = 0; A < m; ++A)
    for (int B = 0; B < m; ++B)
      for (int C = 0; C < m; ++C) {
        RatVec row(m, 0);
        if (B == C) row[A] += 1;
        if (A == C) row[B] += 1;
        r.system.push_back(row);
      }
  r.solution_dim = static_cast<int>(rational_kernel(r.system, m).size());
  r.rank = m - r.solution_dim;
  r.nonexistence = r.solution_dim == 0;
  return r;
}

namespace {

PolyVec part(const TrioleElement& t, int c) {
  if (c == 0) return PolyVec{t.a};
  return c == 1 ? t.p : t.q;
}

void add_part(TrioleElement& t, int c, const PolyVec& v) {
  if (c == 0) t.a += v.at(0);
  else if (c == 1)
    for (std::size_t i = 0; i < v.size(); ++i) t.p[i] += v[i];
  else
    for (std::size_t i = 0; i < v.size(); ++i) t.q[i] += v[i];
}

}  // namespace

TrioleElement apply_derivation(const GradedDerivation& X, const TrioleElement& t, const TrioleAlgebra& alg) {
  const ComponentOps ops = component_ops(X, alg);
  TrioleElement out = TrioleElement::zero(alg);
  for (int c = 0; c < 3; ++c) {
    if (!ops.from[c]) continue;
    const int target = c + X.degree;
    if (target < 0 || target > 2) continue;
    add_part(out, target, ops.from[c]->apply(part(t, c)));
  }
  return out;
}

bool admissible_pair(int dx, int dy) {
  const int s = dx + dy;
  return dx >= -1 && dx <= 2 && dy >= -1 && dy <= 2 && s >= -1 && s <= 2;
}

GradedDerivation bracket(const GradedDerivation& X, const GradedDerivation& Y, const TrioleAlgebra& alg) {
  if (!admissible_pair(X.degree, Y.degree))
    throw std::invalid_argument("inadmissible degree pair for the bracket");
  const ComponentOps ox = component_ops(X, alg), oy = component_ops(Y, alg);
  const int dx = X.degree, dy = Y.degree, d = dx + dy;
  const int sign = bracket_sign(dx, dy, alg);
  ComponentOps z;
  z.degree = d;
  for (int c = 0; c < 3; ++c) {
    const int target = c + d;
    if (target < 0 || target > 2) continue;
    MatDiffOp acc(alg.n, component_rank(target, alg), component_rank(c, alg));
    const int my = c + dy, mx = c + dx;
    if (my >= 0 && my <= 2 && oy.from[c] && ox.from[my]) acc += compose(*ox.from[my], *oy.from[c]);
    if (mx >= 0 && mx <= 2 && ox.from[c] && oy.from[mx]) {
      const MatDiffOp yx = compose(*oy.from[mx], *ox.from[c]);
      if (sign > 0) acc -= yx;
      else acc += yx;
    }
    z.from[c] = acc;
  }
  return from_component_ops(z, alg);
}

Report check_bracket_against_evaluation(const GradedDerivation& X, const GradedDerivation& Y,
                                        const TrioleAlgebra& alg, int max_degree) {
  const GradedDerivation Z = bracket(X, Y, alg);
  const int sign = bracket_sign(X.degree, Y.degree, alg);
  const auto basis = monomial_test_basis(alg, max_degree);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const TrioleElement& t = basis[i];
    const TrioleElement xy = apply_derivation(X, apply_derivation(Y, t, alg), alg);
    const TrioleElement yx = apply_derivation(Y, apply_derivation(X, t, alg), alg);
    const TrioleElement expect = sign > 0 ? xy - yx : xy + yx;
    if (apply_derivation(Z, t, alg) != expect)
      return Report::fail("bracket evaluation", json{{"basis_index", i}}, "component bracket disagrees with X Y - sign Y X");
  }
  return Report::ok();
}

Report check_leibniz(const GradedDerivation& X, const TrioleAlgebra& alg, int max_degree) {
  const auto basis = monomial_test_basis(alg, max_degree);
  const int kappa = koszul_kappa(alg);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto& s = basis[i];
      const auto& t = basis[j];
      const int ds = s.homogeneous_degree();
      const int sign = (kappa < 0 && (X.degree * ds) % 2 != 0) ? -1 : 1;
      const TrioleElement lhs = apply_derivation(X, multiply(s, t, alg), alg);
      const TrioleElement rhs = multiply(apply_derivation(X, s, alg), t, alg) +
                                multiply(s, apply_derivation(X, t, alg), alg).scaled(sign);
      if (lhs != rhs) return Report::fail("graded Leibniz", json{{"left", i}, {"right", j}});
    }
  return Report::ok();
}

ScalarDerivation symbol_deg0(const GradedDerivation& X) {
  if (X.degree != 0) throw std::invalid_argument("degree 0 derivation expected");
  return X.XA;
}

GradedDerivation end_pair(const PolyMat& G, const PolyMat& H, const TrioleAlgebra& alg) {
  return GradedDerivation::degree0(ScalarDerivation(alg.n), G, H);
}

GradedDerivation trivial_splitting(const ScalarDerivation& X, const TrioleAlgebra& alg) {
  return GradedDerivation::degree0(X, zero_matrix(alg.n, alg.mP, alg.mP), zero_matrix(alg.n, alg.mQ, alg.mQ));
}

std::vector<PolyMat> symbol_deg1(const GradedDerivation& X, const TrioleAlgebra& alg) {
  if (X.degree != 1) throw std::invalid_argument("degree 1 derivation expected");
  if (!is_nondegenerate(alg)) throw std::domain_error("degenerate metric: symbol identification unavailable");
  std::vector<PolyMat> out;
  for (int i = 0; i < alg.n; ++i) {
    PolyMat M = zero_matrix(alg.n, alg.mQ, alg.mP);
    for (int B = 0; B < alg.mQ; ++B)
      for (int a = 0; a < alg.mP; ++a)
        for (int b = 0; b < alg.mP; ++b) M[B][a] += alg.at(B, b, a) * X.XA1[b].coeffs[i];
    out.push_back(std::move(M));
  }
  return out;
}

PolyMat degree1_kernel_part(const GradedDerivation& X, const TrioleAlgebra& alg) {
  const MatDiffOp rest = X.Xp - twisted_symbol_operator(X.XA1, alg);
  if (rest.order() > 0) throw std::logic_error("not a degree 1 derivation");
  return rest.zeroth();
}

namespace {

std::vector<ScalarDerivation> lin(const std::vector<ScalarDerivation>& a, const std::vector<ScalarDerivation>& b,
                                  const Rational& cb) {
  std::vector<ScalarDerivation> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) {
    ScalarDerivation t = b[i];
    for (auto& c : t.coeffs) c *= cb;
    r[i] = r[i] + t;
  }
  return r;
}

PolyMat lin(const PolyMat& a, const PolyMat& b, const Rational& cb) {
  PolyMat r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j] * cb;
  return r;
}

}  // namespace

GradedDerivation scale(const GradedDerivation& X, const Rational& c, const TrioleAlgebra& alg) {
  GradedDerivation Z = GradedDerivation::zero(X.degree, alg);
  switch (X.degree) {
    case 0:
      Z.XA = lin({Z.XA}, {X.XA}, c)[0];
      Z.G = lin(Z.G, X.G, c);
      Z.H = lin(Z.H, X.H, c);
      break;
    case 1:
      Z.XA1 = lin(Z.XA1, X.XA1, c);
      Z.Xp = Poly::constant(alg.n, c) * X.Xp;
      break;
    case 2: Z.XA2 = lin(Z.XA2, X.XA2, c); break;
    case -1:
      Z.phi = lin(PolyMat{Z.phi}, PolyMat{X.phi}, c)[0];
      Z.psi = lin(Z.psi, X.psi, c);
      break;
  }
  return Z;
}

GradedDerivation add(const GradedDerivation& X, const GradedDerivation& Y, const TrioleAlgebra& alg) {
  if (X.degree != Y.degree) throw std::invalid_argument("degree mismatch");
  (void)alg;
  GradedDerivation Z = X;
  switch (X.degree) {
    case 0:
      Z.XA = X.XA + Y.XA;
      Z.G = lin(X.G, Y.G, 1);
      Z.H = lin(X.H, Y.H, 1);
      break;
    case 1:
      Z.XA1 = lin(X.XA1, Y.XA1, 1);
      Z.Xp = X.Xp + Y.Xp;
      break;
    case 2: Z.XA2 = lin(X.XA2, Y.XA2, 1); break;
    case -1:
      Z.phi = lin(PolyMat{X.phi}, PolyMat{Y.phi}, 1)[0];
      Z.psi = lin(X.psi, Y.psi, 1);
      break;
  }
  return Z;
}

PolyVec flatten(const GradedDerivation& X, const TrioleAlgebra& alg) {
  PolyVec out;
  auto push_der = [&](const ScalarDerivation& d) { out.insert(out.end(), d.coeffs.begin(), d.coeffs.end()); };
  auto push_mat = [&](const PolyMat& m) {
    for (const auto& row : m) out.insert(out.end(), row.begin(), row.end());
  };
  switch (X.degree) {
    case 0:
      push_der(X.XA);
      push_mat(X.G);
      push_mat(X.H);
      break;
    case 1:
      for (const auto& d : X.XA1) push_der(d);
      for (int B = 0; B < X.Xp.rows(); ++B)
        for (int a = 0; a < X.Xp.cols(); ++a)
          for (const auto& s : multi_indices_upto(alg.n, 1)) out.push_back(X.Xp.at(B, a).coeff(s));
      break;
    case 2:
      for (const auto& d : X.XA2) push_der(d);
      break;
    case -1:
      out.insert(out.end(), X.phi.begin(), X.phi.end());
      push_mat(X.psi);
      break;
  }
  return out;
}

}  // namespace triolex
