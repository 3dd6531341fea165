#include "triolex/poisson.hpp"

#include <stdexcept>

namespace triolex {

using nlohmann::json;

namespace {

const char kLetters[3] = {'A', 'P', 'Q'};

PolyVec part_of(const TrioleElement& t, int c) {
  if (c == 0) return PolyVec{t.a};
  return c == 1 ? t.p : t.q;
}

TrioleElement from_part(const TrioleAlgebra& alg, int c, const PolyVec& v) {
  if (c == 0) return TrioleElement::from_a(alg, v[0]);
  return c == 1 ? TrioleElement::from_p(alg, v) : TrioleElement::from_q(alg, v);
}

int degree_of(const TrioleElement& t) { return t.is_zero() ? 0 : t.homogeneous_degree(); }

bool odd(int x) { return (x % 2 + 2) % 2 == 1; }

json poly_vec_json(const PolyVec& v) {
  json j = json::array();
  for (const auto& p : v) j.push_back(p.str());
  return j;
}

json element_json(const TrioleElement& t) {
  return json{{"a", t.a.str()}, {"p", poly_vec_json(t.p)}, {"q", poly_vec_json(t.q)}};
}

json algebroid_json(const LieAlgebroid& L) {
  json c = json::array();
  for (const auto& M : L.c) {
    json rows = json::array();
    for (const auto& row : M) rows.push_back(poly_vec_json(row));
    c.push_back(rows);
  }
  json anchor = json::array();
  for (const auto& X : L.anchor) anchor.push_back(poly_vec_json(X.coeffs));
  return json{{"rank", L.rank}, {"c", c}, {"anchor", anchor}};
}

// homogeneous block evaluation {s_j, t_k} for j <= k
PolyVec eval_block(const std::map<BiTerm, Poly>& terms, const PolyVec& s, const PolyVec& t, int out_rank, int n) {
  PolyVec out(out_rank, Poly(n));
  for (const auto& [term, coeff] : terms) {
    const Poly ds = s[term.a].diff(term.sigma);
    if (ds.is_zero()) continue;
    const Poly dt = t[term.b].diff(term.tau);
    if (dt.is_zero()) continue;
    out[term.out] += coeff * ds * dt;
  }
  return out;
}

}  // namespace

void BiDerivation::add_term(int j, int k, int out, int a, int b, const Exp& sigma, const Exp& tau, const Poly& coeff) {
  if (j > k) throw std::invalid_argument("blocks are stored with j <= k");
  if (coeff.is_zero()) return;
  auto& block = blocks[{j, k}];
  BiTerm key{out, a, b, sigma, tau};
  auto it = block.find(key);
  if (it == block.end()) {
    block.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) block.erase(it);
  if (block.empty()) blocks.erase({j, k});
}

std::string block_name(int j, int k) { return std::string{kLetters[j], kLetters[k]}; }

std::pair<int, int> block_from_name(const std::string& name) {
  auto idx = [&](char c) {
    for (int i = 0; i < 3; ++i)
      if (kLetters[i] == c) return i;
    throw std::invalid_argument("unknown block name: " + name);
  };
  if (name.size() != 2) throw std::invalid_argument("unknown block name: " + name);
  return {idx(name[0]), idx(name[1])};
}

int skew_sign(int h, int ds, int dt, const TrioleAlgebra& alg) {
  if (alg.convention != Convention::koszul) return 1;
  return odd((ds + h) * (dt + h)) ? -1 : 1;
}

int leibniz_sign(int h, int ds, int dt, const TrioleAlgebra& alg) {
  if (alg.convention != Convention::koszul) return 1;
  return odd((ds + h) * dt) ? -1 : 1;
}

TrioleElement evaluate(const BiDerivation& Pi, const TrioleElement& s, const TrioleElement& t,
                       const TrioleAlgebra& alg) {
  TrioleElement out = TrioleElement::zero(alg);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      const int c = j + k + Pi.degree;
      if (c < 0 || c > 2) continue;
      const int lo = std::min(j, k), hi = std::max(j, k);
      auto it = Pi.blocks.find({lo, hi});
      if (it == Pi.blocks.end()) continue;
      const PolyVec sj = part_of(s, j), tk = part_of(t, k);
      if (is_zero(sj) || is_zero(tk)) continue;
      PolyVec v;
      if (j <= k) {
        v = eval_block(it->second, sj, tk, component_rank(c, alg), alg.n);
      } else {
        v = eval_block(it->second, tk, sj, component_rank(c, alg), alg.n);
        const int sign = -skew_sign(Pi.degree, k, j, alg);
        for (auto& p : v) p *= Rational(sign);
      }
      out = out + from_part(alg, c, v);
    }
  return out;
}

Report validate_biderivation(const BiDerivation& Pi, const TrioleAlgebra& alg, int max_degree) {
  const int h = Pi.degree;
  if (h < -4 || h > 2) return Report::fail("degree", json{{"degree", h}}, "bi-derivation degree out of range");
  if (h < -2)
    return Report::fail("degree", json{{"degree", h}}, "brackets of degree -3 and -4 are not characterized");
  for (const auto& [jk, terms] : Pi.blocks) {
    const auto [j, k] = jk;
    const std::string name = (j >= 0 && k <= 2 && j <= k) ? block_name(j, k) : "?";
    if (j < 0 || k > 2 || j > k) return Report::fail("shape", json{{"block", name}}, "invalid block index");
    const int c = j + k + h;
    if ((c < 0 || c > 2) && !terms.empty())
      return Report::fail("shape", json{{"block", name}}, "block leaves the grading");
    for (const auto& [t, coeff] : terms) {
      if (t.out < 0 || t.out >= component_rank(c, alg) || t.a < 0 || t.a >= component_rank(j, alg) || t.b < 0 ||
          t.b >= component_rank(k, alg) || static_cast<int>(t.sigma.size()) != alg.n ||
          static_cast<int>(t.tau.size()) != alg.n || coeff.n_vars() != alg.n)
        return Report::fail("shape", json{{"block", name}}, "term index out of range");
      if (total_degree(t.sigma) > 1 || total_degree(t.tau) > 1)
        return Report::fail("order", json{{"block", name}}, "order exceeds 1 in a slot");
    }
  }
  const auto basis = monomial_test_basis(alg, max_degree);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const int di = degree_of(basis[i]), dj = degree_of(basis[j]);
      if (di != dj) continue;
      const TrioleElement st = evaluate(Pi, basis[i], basis[j], alg);
      const TrioleElement ts = evaluate(Pi, basis[j], basis[i], alg);
      if (ts != st.scaled(-skew_sign(h, di, dj, alg)))
        return Report::fail("graded skew-symmetry", json{{"s", element_json(basis[i])}, {"t", element_json(basis[j])}});
    }
  for (const auto& s : basis)
    for (const auto& t : basis)
      for (const auto& u : basis) {
        const TrioleElement lhs = evaluate(Pi, s, multiply(t, u, alg), alg);
        const TrioleElement rhs = multiply(evaluate(Pi, s, t, alg), u, alg) +
                                  multiply(t, evaluate(Pi, s, u, alg), alg)
                                      .scaled(leibniz_sign(h, degree_of(s), degree_of(t), alg));
        if (lhs != rhs)
          return Report::fail("Leibniz",
                              json{{"s", element_json(s)}, {"t", element_json(t)}, {"u", element_json(u)}},
                              "{s, t u} != {s, t} u + sign t {s, u}");
      }
  return Report::ok();
}

TrioleElement jacobiator(const BiDerivation& Pi, const TrioleElement& s, const TrioleElement& t,
                         const TrioleElement& u, const TrioleAlgebra& alg) {
  const int sign = skew_sign(Pi.degree, degree_of(s), degree_of(t), alg);
  return evaluate(Pi, s, evaluate(Pi, t, u, alg), alg) - evaluate(Pi, evaluate(Pi, s, t, alg), u, alg) -
         evaluate(Pi, t, evaluate(Pi, s, u, alg), alg).scaled(sign);
}

json SchoutenReport::to_json() const { return json{{"zero", zero}, {"triples", triples}, {"witness", witness}}; }

SchoutenReport schouten_square(const BiDerivation& Pi, const TrioleAlgebra& alg, int max_degree) {
  SchoutenReport rep;
  const auto basis = monomial_test_basis(alg, max_degree);
  for (const auto& s : basis)
    for (const auto& t : basis)
      for (const auto& u : basis) {
        const int total = degree_of(s) + degree_of(t) + degree_of(u) + 2 * Pi.degree;
        if (total < 0 || total > 2) continue;
        ++rep.triples;
        const TrioleElement J = jacobiator(Pi, s, t, u, alg);
        if (!J.is_zero() && rep.zero) {
          rep.zero = false;
          rep.witness = json{{"s", element_json(s)}, {"t", element_json(t)}, {"u", element_json(u)},
                             {"residual", element_json(J)}};
        }
      }
  return rep;
}

json PoissonReport::to_json() const {
  return json{{"cond1", cond[0]}, {"cond2", cond[1]}, {"cond3", cond[2]}, {"cond4", cond[3]},
              {"valid", all()},   {"witness", witness}};
}

PoissonReport poisson_check_deg0(const BiDerivation& Pi, const TrioleAlgebra& alg, int max_degree) {
  if (Pi.degree != 0) throw std::invalid_argument("poisson_check_deg0 needs a degree 0 bracket");
  std::vector<TrioleElement> A, P, Q;
  for (const auto& t : monomial_test_basis(alg, max_degree)) {
    switch (degree_of(t)) {
      case 0: A.push_back(t); break;
      case 1: P.push_back(t); break;
      default: Q.push_back(t); break;
    }
  }
  PoissonReport rep;
  auto run = [&](int c, const std::vector<TrioleElement>& X, const std::vector<TrioleElement>& Y,
                 const std::vector<TrioleElement>& Z) {
    for (const auto& s : X)
      for (const auto& t : Y)
        for (const auto& u : Z) {
          const TrioleElement J = jacobiator(Pi, s, t, u, alg);
          if (!J.is_zero()) {
            rep.cond[c] = false;
            if (rep.witness.is_null())
              rep.witness = json{{"condition", c + 1},   {"s", element_json(s)}, {"t", element_json(t)},
                                 {"u", element_json(u)}, {"residual", element_json(J)}};
            return;
          }
        }
  };
  run(0, A, A, A);
  run(1, A, A, P);
  run(2, A, A, Q);
  run(3, A, P, P);
  return rep;
}

BiDerivation hamiltonian_lift(const PolyMat& pi, const TrioleAlgebra& alg) {
  const int n = alg.n;
  BiDerivation Pi = BiDerivation::zero(0);
  auto unit = [&](int i) {
    Exp e(n, 0);
    e[i] = 1;
    return e;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (pi[i][j].is_zero()) continue;
      const Exp ei = unit(i), ej = unit(j);
      Pi.add_term(0, 0, 0, 0, 0, ei, ej, pi[i][j]);
      for (int b = 0; b < alg.mP; ++b) Pi.add_term(0, 1, b, 0, b, ei, ej, pi[i][j]);
      for (int B = 0; B < alg.mQ; ++B) Pi.add_term(0, 2, B, 0, B, ei, ej, pi[i][j]);
      for (int B = 0; B < alg.mQ; ++B)
        for (int a = 0; a < alg.mP; ++a)
          for (int b = 0; b < alg.mP; ++b)
            if (!alg.at(B, a, b).is_zero()) Pi.add_term(1, 1, B, a, b, ei, ej, pi[i][j] * alg.at(B, a, b));
    }
  return Pi;
}

LieAlgebroid LieAlgebroid::zero(int rank, int n_vars) {
  LieAlgebroid L;
  L.rank = rank;
  L.n = n_vars;
  L.c.assign(rank, zero_matrix(n_vars, rank, rank));
  L.anchor.assign(rank, ScalarDerivation(n_vars));
  return L;
}

LieAlgebroid LieAlgebroid::tangent(int n_vars) {
  LieAlgebroid L = zero(n_vars, n_vars);
  for (int i = 0; i < n_vars; ++i) L.anchor[i] = ScalarDerivation::partial(n_vars, i);
  return L;
}

PolyVec section_bracket(const LieAlgebroid& L, const PolyVec& u, const PolyVec& v) {
  PolyVec r(L.rank, Poly(L.n));
  for (int a = 0; a < L.rank; ++a)
    for (int b = 0; b < L.rank; ++b) {
      if (u[a].is_zero() || v[b].is_zero()) continue;
      const Poly uv = u[a] * v[b];
      for (int g = 0; g < L.rank; ++g)
        if (!L.c[a][b][g].is_zero()) r[g] += uv * L.c[a][b][g];
    }
  for (int a = 0; a < L.rank; ++a)
    for (int b = 0; b < L.rank; ++b) {
      if (!u[a].is_zero()) r[b] += u[a] * L.anchor[a].apply(v[b]);
      if (!v[b].is_zero()) r[a] -= v[b] * L.anchor[b].apply(u[a]);
    }
  return r;
}

Report validate_algebroid(const LieAlgebroid& L) {
  if (static_cast<int>(L.c.size()) != L.rank || static_cast<int>(L.anchor.size()) != L.rank)
    return Report::fail("shape", nullptr);
  for (const auto& M : L.c) {
    if (static_cast<int>(M.size()) != L.rank) return Report::fail("shape", nullptr);
    for (const auto& row : M)
      if (static_cast<int>(row.size()) != L.rank) return Report::fail("shape", nullptr);
  }
  for (const auto& X : L.anchor)
    if (X.n_vars() != L.n) return Report::fail("shape", nullptr, "anchor has the wrong number of variables");
  for (int a = 0; a < L.rank; ++a)
    for (int b = 0; b < L.rank; ++b)
      for (int g = 0; g < L.rank; ++g)
        if (L.c[a][b][g] != -L.c[b][a][g])
          return Report::fail("antisymmetry", json{{"alpha", a}, {"beta", b}, {"gamma", g}});
  for (int a = 0; a < L.rank; ++a)
    for (int b = 0; b < L.rank; ++b) {
      ScalarDerivation lhs(L.n);
      for (int g = 0; g < L.rank; ++g)
        if (!L.c[a][b][g].is_zero()) lhs = lhs + L.anchor[g].scaled(L.c[a][b][g]);
      if (lhs != lie_bracket(L.anchor[a], L.anchor[b]))
        return Report::fail("anchor morphism", json{{"alpha", a}, {"beta", b}},
                            "anchor([e_a, e_b]) != [anchor(e_a), anchor(e_b)]");
    }
  auto e = [&](int i) {
    PolyVec v(L.rank, Poly(L.n));
    v[i] = Poly::one(L.n);
    return v;
  };
  for (int a = 0; a < L.rank; ++a)
    for (int b = a + 1; b < L.rank; ++b)
      for (int g = b + 1; g < L.rank; ++g) {
        PolyVec j1 = section_bracket(L, e(a), section_bracket(L, e(b), e(g)));
        const PolyVec j2 = section_bracket(L, e(b), section_bracket(L, e(g), e(a)));
        const PolyVec j3 = section_bracket(L, e(g), section_bracket(L, e(a), e(b)));
        for (int k = 0; k < L.rank; ++k) j1[k] += j2[k] + j3[k];
        if (!is_zero(j1)) return Report::fail("Jacobi", json{{"alpha", a}, {"beta", b}, {"gamma", g}});
      }
  return Report::ok();
}

BiDerivation algebroid_biderivation(const LieAlgebroid& L, int degree, const TrioleAlgebra& alg,
                                   const std::vector<PolyMat>& H) {
  if (degree != -1 && degree != -2) throw std::invalid_argument("algebroid brackets have degree -1 or -2");
  const int comp = -degree;
  if (L.rank != component_rank(comp, alg) || L.n != alg.n)
    throw std::invalid_argument("algebroid rank does not match the triole");
  const int n = alg.n;
  BiDerivation Pi = BiDerivation::zero(degree);
  const Exp zero(n, 0);
  auto unit = [&](int i) {
    Exp e(n, 0);
    e[i] = 1;
    return e;
  };
  for (int b = 0; b < L.rank; ++b)
    for (int i = 0; i < n; ++i) {
      const Poly& X = L.anchor[b].coeffs[i];
      if (X.is_zero()) continue;
      // {a, e_b} = -anchor(e_b)(a)
      Pi.add_term(0, comp, 0, 0, b, unit(i), zero, -X);
      // u^a anchor_a(v^b) e_b - v^b anchor_b(u^a) e_a
      for (int a = 0; a < L.rank; ++a) {
        Pi.add_term(comp, comp, a, b, a, zero, unit(i), X);
        Pi.add_term(comp, comp, a, a, b, unit(i), zero, -X);
      }
      if (degree == -1)
        for (int B = 0; B < alg.mQ; ++B) Pi.add_term(1, 2, B, b, B, zero, unit(i), X);
    }
  for (int a = 0; a < L.rank; ++a)
    for (int b = 0; b < L.rank; ++b)
      for (int g = 0; g < L.rank; ++g) Pi.add_term(comp, comp, g, a, b, zero, zero, L.c[a][b][g]);
  if (degree == -2) {
    // {q, u e_a} = anchor(q)(u) e_a, stored as the (P, Q) block
    for (int B = 0; B < L.rank; ++B)
      for (int i = 0; i < n; ++i) {
        const Poly& X = L.anchor[B].coeffs[i];
        if (X.is_zero()) continue;
        const int sigma_sign = skew_sign(degree, 2, 1, alg);
        for (int a = 0; a < alg.mP; ++a) Pi.add_term(1, 2, a, a, B, unit(i), zero, X * Rational(-sigma_sign));
      }
  }
  bool anchored = false;
  for (const auto& X : L.anchor) anchored = anchored || !X.is_zero();
  if (degree == -1 && anchored && alg.mQ > 0) {
    // {a, g(e_b, e_c)} = -anchor(e_b)(a) e_c - anchor(e_c)(a) e_b fixes {a, eps_A} once each eps_A
    // is a constant combination of the values g(e_b, e_c)
    const int m = alg.mP;
    RatMat sys(alg.mQ, RatVec(m * m));
    for (int A = 0; A < alg.mQ; ++A)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c) {
          if (!alg.at(A, b, c).is_constant())
            throw std::invalid_argument("a nonzero anchor needs a constant metric");
          sys[A][b * m + c] = alg.at(A, b, c).constant_term();
        }
    for (int A = 0; A < alg.mQ; ++A) {
      RatVec rhs(alg.mQ);
      rhs[A] = 1;
      const auto lam = rational_solve(sys, rhs);
      if (!lam) throw std::invalid_argument("a nonzero anchor needs Q spanned by the values of g");
      // F[gamma] = {-, eps_A} as a derivation with values in e_gamma
      std::vector<ScalarDerivation> F(m, ScalarDerivation(n));
      const Rational k1 = -skew_sign(degree, 1, 0, alg);
      const Rational k2 = k1 * leibniz_sign(degree, 0, 1, alg);
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c) {
          const Rational l = (*lam)[b * m + c];
          if (l == 0) continue;
          F[c] = F[c] + L.anchor[b].scaled(Poly(n, l * k1));
          F[b] = F[b] + L.anchor[c].scaled(Poly(n, l * k2));
        }
      const Rational slot = skew_sign(degree, 1, 2, alg) * skew_sign(degree, 2, 0, alg);
      for (int gm = 0; gm < m; ++gm)
        for (int i = 0; i < n; ++i) {
          const Poly& f = F[gm].coeffs[i];
          if (f.is_zero()) continue;
          Pi.add_term(0, 2, gm, 0, A, unit(i), zero, f);
          // {u e_a, eps_A} picks up {u, eps_A} e_a
          for (int a = 0; a < m; ++a)
            for (int B = 0; B < alg.mQ; ++B)
              if (!alg.at(B, gm, a).is_zero()) Pi.add_term(1, 2, B, a, A, unit(i), zero, f * alg.at(B, gm, a) * slot);
        }
    }
  }
  if (degree == -1 && !H.empty()) {
    if (static_cast<int>(H.size()) != L.rank) throw std::invalid_argument("one H matrix per generator of P expected");
    for (int a = 0; a < L.rank; ++a)
      for (int B = 0; B < alg.mQ; ++B)
        for (int A = 0; A < alg.mQ; ++A) Pi.add_term(1, 2, B, a, A, zero, zero, H[a][B][A]);
  }
  return Pi;
}

json DegMinus1Extraction::to_json() const {
  return json{{"valid", valid()},
              {"algebroid", algebroid_json(algebroid)},
              {"algebroid_report", algebroid_report.to_json()},
              {"z_report", z_report.to_json()},
              {"f_compatibility", f_compat.to_json()}};
}

DegMinus1Extraction algebroid_from_deg_minus1(const BiDerivation& Pi, const TrioleAlgebra& alg, int max_degree) {
  if (Pi.degree != -1) throw std::invalid_argument("degree -1 bracket expected");
  const int n = alg.n;
  DegMinus1Extraction out;
  LieAlgebroid L = LieAlgebroid::zero(alg.mP, n);
  for (int b = 0; b < alg.mP; ++b) {
    const TrioleElement eb = TrioleElement::from_p(alg, alg.unit_p(b));
    for (int i = 0; i < n; ++i)
      L.anchor[b].coeffs[i] = evaluate(Pi, eb, TrioleElement::from_a(alg, Poly::var(n, i)), alg).a;
    for (int c = 0; c < alg.mP; ++c) {
      const TrioleElement br = evaluate(Pi, TrioleElement::from_p(alg, alg.unit_p(c)), eb, alg);
      for (int g = 0; g < alg.mP; ++g) L.c[c][b][g] = br.p[g];
    }
  }
  out.algebroid = L;
  out.algebroid_report = validate_algebroid(L);
  for (int a = 0; a < alg.mP; ++a) {
    const TrioleElement ea = TrioleElement::from_p(alg, alg.unit_p(a));
    PolyMat G = zero_matrix(n, alg.mP, alg.mP), H = zero_matrix(n, alg.mQ, alg.mQ);
    for (int b = 0; b < alg.mP; ++b)
      for (int g = 0; g < alg.mP; ++g) G[g][b] = L.c[a][b][g];
    for (int A = 0; A < alg.mQ; ++A) {
      const TrioleElement r = evaluate(Pi, ea, TrioleElement::from_q(alg, alg.unit_q(A)), alg);
      for (int B = 0; B < alg.mQ; ++B) H[B][A] = r.q[B];
    }
    out.Z.push_back(GradedDerivation::degree0(L.anchor[a], G, H));
    if (out.z_report.valid) {
      Report r = validate_derivation(out.Z.back(), alg);
      if (!r) {
        r.witness = json{{"alpha", a}, {"detail", r.witness}};
        out.z_report = r;
      }
    }
  }
  std::vector<TrioleElement> A, P, Q;
  for (const auto& t : monomial_test_basis(alg, max_degree)) {
    switch (degree_of(t)) {
      case 0: A.push_back(t); break;
      case 1: P.push_back(t); break;
      default: Q.push_back(t); break;
    }
  }
  for (const auto& p : P)
    for (const auto& a : A)
      for (const auto& q : Q) {
        const TrioleElement J = jacobiator(Pi, p, a, q, alg);
        if (!J.is_zero() && out.f_compat.valid)
          out.f_compat = Report::fail("f-compatibility",
                                      json{{"p", element_json(p)}, {"a", element_json(a)}, {"q", element_json(q)},
                                           {"residual", element_json(J)}});
      }
  return out;
}

json DegMinus2Extraction::to_json() const {
  return json{{"valid", report.valid}, {"algebroid", algebroid_json(algebroid)}, {"report", report.to_json()}};
}

DegMinus2Extraction algebroid_from_deg_minus2(const BiDerivation& Pi, const TrioleAlgebra& alg) {
  if (Pi.degree != -2) throw std::invalid_argument("degree -2 bracket expected");
  const int n = alg.n;
  LieAlgebroid L = LieAlgebroid::zero(alg.mQ, n);
  for (int B = 0; B < alg.mQ; ++B) {
    const TrioleElement eB = TrioleElement::from_q(alg, alg.unit_q(B));
    for (int i = 0; i < n; ++i)
      L.anchor[B].coeffs[i] = evaluate(Pi, eB, TrioleElement::from_a(alg, Poly::var(n, i)), alg).a;
    for (int A = 0; A < alg.mQ; ++A) {
      const TrioleElement br = evaluate(Pi, TrioleElement::from_q(alg, alg.unit_q(A)), eB, alg);
      for (int C = 0; C < alg.mQ; ++C) L.c[A][B][C] = br.q[C];
    }
  }
  DegMinus2Extraction out;
  out.algebroid = L;
  out.report = validate_algebroid(L);
  return out;
}

}  // namespace triolex
