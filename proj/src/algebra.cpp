#include "triolex/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace triolex {

using nlohmann::json;

std::string to_string(Convention c) {
  switch (c) {
    case Convention::plain: return "plain";
    case Convention::koszul: return "koszul";
    case Convention::none: return "none";
  }
  return "none";
}

Convention convention_from_string(const std::string& s) {
  if (s == "plain") return Convention::plain;
  if (s == "koszul") return Convention::koszul;
  if (s == "none") return Convention::none;
  throw std::invalid_argument("unknown convention '" + s + "'");
}

TrioleAlgebra::TrioleAlgebra(int n_vars, int mP_, int mQ_, Convention c)
    : n(n_vars), mP(mP_), mQ(mQ_), convention(c), g(mQ_, zero_matrix(n_vars, mP_, mP_)) {
  if (n_vars < 0 || mP_ < 0 || mQ_ < 0) throw std::invalid_argument("negative rank");
}

TrioleAlgebra TrioleAlgebra::identity(int n_vars, int mP) {
  TrioleAlgebra t(n_vars, mP, 1);
  t.g[0] = identity_matrix(n_vars, mP);
  return t;
}

TrioleAlgebra TrioleAlgebra::alternating(int n_vars) {
  TrioleAlgebra t(n_vars, 2, 1, Convention::koszul);
  t.at(0, 0, 1) = Poly::one(n_vars);
  t.at(0, 1, 0) = -Poly::one(n_vars);
  return t;
}

PolyVec TrioleAlgebra::unit_p(int alpha) const {
  PolyVec v = zero_p();
  v.at(alpha) = Poly::one(n);
  return v;
}

PolyVec TrioleAlgebra::unit_q(int A) const {
  PolyVec v = zero_q();
  v.at(A) = Poly::one(n);
  return v;
}

PolyVec TrioleAlgebra::pair(const PolyVec& p1, const PolyVec& p2) const {
  if (static_cast<int>(p1.size()) != mP || static_cast<int>(p2.size()) != mP)
    throw std::invalid_argument("rank mismatch");
  PolyVec r = zero_q();
  for (int a = 0; a < mP; ++a) {
    if (p1[a].is_zero()) continue;
    for (int b = 0; b < mP; ++b) {
      if (p2[b].is_zero()) continue;
      const Poly pp = p1[a] * p2[b];
      for (int A = 0; A < mQ; ++A)
        if (!g[A][a][b].is_zero()) r[A] += g[A][a][b] * pp;
    }
  }
  return r;
}

void TrioleAlgebra::check_shapes() const {
  if (static_cast<int>(g.size()) != mQ) throw std::invalid_argument("metric has wrong Q-rank");
  for (const auto& m : g) {
    if (static_cast<int>(m.size()) != mP) throw std::invalid_argument("metric has wrong P-rank");
    for (const auto& row : m) {
      if (static_cast<int>(row.size()) != mP) throw std::invalid_argument("metric has wrong P-rank");
      for (const auto& p : row)
        if (p.n_vars() != n) throw std::invalid_argument("metric entry in wrong ring");
    }
  }
}

bool TrioleAlgebra::operator==(const TrioleAlgebra& o) const {
  return n == o.n && mP == o.mP && mQ == o.mQ && convention == o.convention && g == o.g;
}

// ---------------------------------------------------------------- elements

TrioleElement TrioleElement::zero(const TrioleAlgebra& alg) { return {alg.zero(), alg.zero_p(), alg.zero_q()}; }

TrioleElement TrioleElement::from_a(const TrioleAlgebra& alg, const Poly& a) {
  TrioleElement t = zero(alg);
  t.a = a;
  return t;
}

TrioleElement TrioleElement::from_p(const TrioleAlgebra& alg, const PolyVec& p) {
  TrioleElement t = zero(alg);
  t.p = p;
  return t;
}

TrioleElement TrioleElement::from_q(const TrioleAlgebra& alg, const PolyVec& q) {
  TrioleElement t = zero(alg);
  t.q = q;
  return t;
}

TrioleElement TrioleElement::operator+(const TrioleElement& o) const {
  TrioleElement r = *this;
  r.a += o.a;
  for (std::size_t i = 0; i < p.size(); ++i) r.p[i] += o.p.at(i);
  for (std::size_t i = 0; i < q.size(); ++i) r.q[i] += o.q.at(i);
  return r;
}

TrioleElement TrioleElement::operator-(const TrioleElement& o) const { return *this + o.scaled(-1); }

TrioleElement TrioleElement::scaled(const Rational& c) const {
  TrioleElement r = *this;
  r.a *= c;
  for (auto& x : r.p) x *= c;
  for (auto& x : r.q) x *= c;
  return r;
}

bool TrioleElement::is_zero() const { return a.is_zero() && triolex::is_zero(p) && triolex::is_zero(q); }

int TrioleElement::homogeneous_degree() const {
  const bool ha = !a.is_zero(), hp = !triolex::is_zero(p), hq = !triolex::is_zero(q);
  if (ha + hp + hq != 1) return -1;
  return ha ? 0 : (hp ? 1 : 2);
}

TrioleElement multiply(const TrioleElement& t1, const TrioleElement& t2, const TrioleAlgebra& alg) {
  if (static_cast<int>(t1.p.size()) != alg.mP || static_cast<int>(t2.p.size()) != alg.mP ||
      static_cast<int>(t1.q.size()) != alg.mQ || static_cast<int>(t2.q.size()) != alg.mQ)
    throw std::invalid_argument("rank mismatch");
  TrioleElement r;
  r.a = t1.a * t2.a;
  r.p = alg.zero_p();
  for (int i = 0; i < alg.mP; ++i) r.p[i] = t1.a * t2.p[i] + t2.a * t1.p[i];
  r.q = alg.pair(t1.p, t2.p);
  for (int A = 0; A < alg.mQ; ++A) r.q[A] += t1.a * t2.q[A] + t2.a * t1.q[A];
  return r;
}

std::vector<TrioleElement> monomial_test_basis(const TrioleAlgebra& alg, int max_degree) {
  std::vector<TrioleElement> out;
  for (const auto& e : multi_indices_upto(alg.n, max_degree)) {
    const Poly m = Poly::monomial(e);
    out.push_back(TrioleElement::from_a(alg, m));
    for (int a = 0; a < alg.mP; ++a) {
      PolyVec v = alg.zero_p();
      v[a] = m;
      out.push_back(TrioleElement::from_p(alg, v));
    }
    for (int A = 0; A < alg.mQ; ++A) {
      PolyVec v = alg.zero_q();
      v[A] = m;
      out.push_back(TrioleElement::from_q(alg, v));
    }
  }
  return out;
}

bool is_symmetric(const TrioleAlgebra& alg) {
  for (int A = 0; A < alg.mQ; ++A)
    for (int a = 0; a < alg.mP; ++a)
      for (int b = a + 1; b < alg.mP; ++b)
        if (alg.at(A, a, b) != alg.at(A, b, a)) return false;
  return true;
}

bool is_alternating(const TrioleAlgebra& alg) {
  for (int A = 0; A < alg.mQ; ++A)
    for (int a = 0; a < alg.mP; ++a)
      for (int b = a; b < alg.mP; ++b)
        if (alg.at(A, a, b) != -alg.at(A, b, a)) return false;
  return true;
}

namespace {

json index_witness(int A, int a, int b) { return json{{"A", A}, {"alpha", a}, {"beta", b}}; }

Report check_convention(const TrioleAlgebra& alg) {
  if (alg.convention == Convention::none) return Report::ok();
  for (int A = 0; A < alg.mQ; ++A)
    for (int a = 0; a < alg.mP; ++a)
      for (int b = a; b < alg.mP; ++b) {
        const Poly& x = alg.at(A, a, b);
        const Poly& y = alg.at(A, b, a);
        if (alg.convention == Convention::plain && x != y)
          return Report::fail("symmetry", index_witness(A, a, b), "g(e_a,e_b) != g(e_b,e_a)");
        if (alg.convention == Convention::koszul && x != -y)
          return Report::fail("antisymmetry", index_witness(A, a, b), "g(e_a,e_b) != -g(e_b,e_a)");
      }
  return Report::ok();
}

}  // namespace

Report validate_algebra(const TrioleAlgebra& alg) {
  try {
    alg.check_shapes();
  } catch (const std::exception& e) {
    return Report::fail("shape", nullptr, e.what());
  }
  if (Report r = check_convention(alg); !r) return r;

  const auto basis = monomial_test_basis(alg, 1);
  const int nb = static_cast<int>(basis.size());
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < nb; ++j) {
      const auto& s = basis[i];
      const auto& t = basis[j];
      const TrioleElement st = multiply(s, t, alg);
      const int ds = s.homogeneous_degree(), dt = t.homogeneous_degree();
      if (ds == 2 && dt == 2 && !st.is_zero())
        return Report::fail("Q.Q=0", json{{"left", i}, {"right", j}});
      if (alg.convention != Convention::none) {
        const int sign = (alg.convention == Convention::koszul && ds % 2 == 1 && dt % 2 == 1) ? -1 : 1;
        if (st != multiply(t, s, alg).scaled(sign))
          return Report::fail("graded commutativity", json{{"left", i}, {"right", j}});
      }
      for (int k = 0; k < nb; ++k) {
        const auto& u = basis[k];
        if (multiply(st, u, alg) != multiply(s, multiply(t, u, alg), alg))
          return Report::fail("associativity", json{{"left", i}, {"middle", j}, {"right", k}});
      }
    }
  }
  return Report::ok();
}

PolyMat adjoint_matrix(const TrioleAlgebra& alg) {
  PolyMat m = zero_matrix(alg.n, alg.mP * alg.mQ, alg.mP);
  for (int A = 0; A < alg.mQ; ++A)
    for (int b = 0; b < alg.mP; ++b)
      for (int a = 0; a < alg.mP; ++a) m[A * alg.mP + b][a] = alg.at(A, a, b);
  return m;
}

MatDiffOp adjoint_map(const TrioleAlgebra& alg) { return MatDiffOp::mult(adjoint_matrix(alg), alg.n); }

bool is_nondegenerate(const TrioleAlgebra& alg) {
  if (alg.mP == 0) return true;
  if (alg.mQ == 0) return false;
  return rank(adjoint_matrix(alg)) == alg.mP;
}

PolyVec quadratic_from_bilinear(const TrioleAlgebra& alg, const PolyVec& p) { return alg.pair(p, p); }

std::string to_string(MorphismKind k) {
  switch (k) {
    case MorphismKind::morphism: return "morphism";
    case MorphismKind::isometry: return "isometry";
    case MorphismKind::similarity: return "similarity";
    case MorphismKind::invalid: return "invalid";
  }
  return "invalid";
}

namespace {

bool has_shape(const PolyMat& m, int r, int c) {
  if (static_cast<int>(m.size()) != r) return false;
  return std::all_of(m.begin(), m.end(), [c](const PolyVec& row) { return static_cast<int>(row.size()) == c; });
}

bool square_unit_det(const PolyMat& m) {
  if (m.empty()) return true;
  if (m.size() != m[0].size()) return false;
  return is_unit(det(m));
}

}  // namespace

MorphismReport validate_morphism(const TrioleMorphism& psi, const TrioleAlgebra& src, const TrioleAlgebra& dst) {
  if (!has_shape(psi.psi1, dst.mP, src.mP) || !has_shape(psi.psi2, dst.mQ, src.mQ))
    throw std::invalid_argument("morphism shape mismatch");
  if (src.n != dst.n) throw std::invalid_argument("ring mismatch");
  MorphismReport out;
  // g'(psi1 e_a, psi1 e_b) = psi2 g(e_a, e_b)
  for (int a = 0; a < src.mP; ++a)
    for (int b = 0; b < src.mP; ++b) {
      PolyVec ca(dst.mP), cb(dst.mP);
      for (int r = 0; r < dst.mP; ++r) {
        ca[r] = psi.psi1[r][a];
        cb[r] = psi.psi1[r][b];
      }
      const PolyVec lhs = dst.pair(ca, cb);
      PolyVec gab(src.mQ);
      for (int A = 0; A < src.mQ; ++A) gab[A] = src.at(A, a, b);
      const PolyVec rhs = src.mQ ? matvec(psi.psi2, gab) : dst.zero_q();
      for (int B = 0; B < dst.mQ; ++B)
        if (lhs[B] != rhs[B]) {
          out.report = Report::fail("metric relation", json{{"alpha", a}, {"beta", b}, {"B", B}},
                                    "g'(psi1 p1, psi1 p2) != psi2 g(p1, p2)");
          return out;
        }
    }
  const bool inv1 = src.mP == dst.mP && square_unit_det(psi.psi1);
  const bool inv2 = src.mQ == dst.mQ && square_unit_det(psi.psi2);
  const bool id2 = src.mQ == dst.mQ && psi.psi2 == identity_matrix(src.n, src.mQ);
  if (id2 && inv1) out.kind = MorphismKind::isometry;
  else if (inv1 && inv2) out.kind = MorphismKind::similarity;
  else out.kind = MorphismKind::morphism;
  return out;
}

TrioleAlgebra gauge_act(const PolyMat& rho_P, const PolyMat& rho_Q, const TrioleAlgebra& alg) {
  if (!has_shape(rho_P, alg.mP, alg.mP) || !has_shape(rho_Q, alg.mQ, alg.mQ))
    throw std::invalid_argument("gauge shape mismatch");
  auto inv = inverse_over_ring(rho_P);
  if (!inv || !square_unit_det(rho_Q)) throw std::domain_error("gauge determinant is not a unit");
  const PolyMat& h = *inv;
  TrioleAlgebra out(alg.n, alg.mP, alg.mQ, alg.convention);
  // pulled[B] = h^T g^B h, then mixed over B by rho_Q
  std::vector<PolyMat> pulled;
  for (int B = 0; B < alg.mQ; ++B) pulled.push_back(matmul(transpose(h), matmul(alg.g[B], h)));
  for (int A = 0; A < alg.mQ; ++A)
    for (int B = 0; B < alg.mQ; ++B) {
      if (rho_Q[A][B].is_zero()) continue;
      for (int a = 0; a < alg.mP; ++a)
        for (int b = 0; b < alg.mP; ++b) out.g[A][a][b] += rho_Q[A][B] * pulled[B][a][b];
    }
  return out;
}

Convention sum_convention(Convention a, Convention b) { return a == b ? a : Convention::none; }

Convention product_convention(Convention a, Convention b) {
  if (a == Convention::none || b == Convention::none) return Convention::none;
  return a == b ? Convention::plain : Convention::koszul;
}

TrioleAlgebra orthogonal_sum(const TrioleAlgebra& a, const TrioleAlgebra& b) {
  if (a.mQ != b.mQ) throw std::invalid_argument("Q-rank mismatch");
  if (a.n != b.n) throw std::invalid_argument("ring mismatch");
  TrioleAlgebra out(a.n, a.mP + b.mP, a.mQ, sum_convention(a.convention, b.convention));
  for (int A = 0; A < a.mQ; ++A) {
    for (int i = 0; i < a.mP; ++i)
      for (int j = 0; j < a.mP; ++j) out.at(A, i, j) = a.at(A, i, j);
    for (int i = 0; i < b.mP; ++i)
      for (int j = 0; j < b.mP; ++j) out.at(A, a.mP + i, a.mP + j) = b.at(A, i, j);
  }
  return out;
}

TrioleAlgebra triolic_product(const TrioleAlgebra& a, const TrioleAlgebra& b) {
  if (a.n != b.n) throw std::invalid_argument("ring mismatch");
  TrioleAlgebra out(a.n, a.mP * b.mP, a.mQ * b.mQ, product_convention(a.convention, b.convention));
  for (int A = 0; A < a.mQ; ++A)
    for (int B = 0; B < b.mQ; ++B) out.g[A * b.mQ + B] = kronecker(a.g[A], b.g[B]);
  return out;
}

namespace {

int permutation_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TrioleAlgebra determinant_triole(const TrioleAlgebra& alg) {
  const int m = alg.mP;
  if (m > 4) throw std::invalid_argument("determinant triole limited to P-rank <= 4");
  if (m == 0) throw std::invalid_argument("determinant triole needs positive P-rank");
  const int qr = ipow(alg.mQ, m);
  TrioleAlgebra out(alg.n, 1, qr, Convention::plain);
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const int sgn = permutation_sign(perm);
    // sum over Q index tuples (A_0..A_{m-1}) of prod_i g[A_i][i][perm i]
    for (int idx = 0; idx < qr; ++idx) {
      int rest = idx;
      Poly term = Poly::one(alg.n);
      for (int i = m - 1; i >= 0 && !term.is_zero(); --i) {
        const int Ai = rest % alg.mQ;
        rest /= alg.mQ;
        term *= alg.at(Ai, i, perm[i]);
      }
      if (!term.is_zero()) out.at(idx, 0, 0) += sgn > 0 ? term : -term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

TrioleMorphism determinant_morphism(const TrioleMorphism& psi, int mP) {
  TrioleMorphism out;
  out.psi1 = PolyMat{{det(psi.psi1)}};
  PolyMat k = psi.psi2;
  for (int i = 1; i < mP; ++i) k = kronecker(k, psi.psi2);
  out.psi2 = k;
  return out;
}

TrioleAlgebra free_symmetric_triole(int m, int n_vars) {
  TrioleAlgebra out(n_vars, m, m * (m + 1) / 2, Convention::plain);
  int A = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j, ++A) {
      out.at(A, i, j) = Poly::one(n_vars);
      out.at(A, j, i) = Poly::one(n_vars);
    }
  return out;
}

TrioleAlgebra free_alternating_triole(int m, int n_vars) {
  TrioleAlgebra out(n_vars, m, m * (m - 1) / 2, Convention::koszul);
  int A = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j, ++A) {
      out.at(A, i, j) = Poly::one(n_vars);
      out.at(A, j, i) = -Poly::one(n_vars);
    }
  return out;
}

TrioleAlgebra base_change(const TrioleAlgebra& alg, const PolyVec& images) {
  if (static_cast<int>(images.size()) != alg.n) throw std::invalid_argument("malformed substitution");
  if (images.empty()) throw std::invalid_argument("malformed substitution");
  const int m = images[0].n_vars();
  TrioleAlgebra out(m, alg.mP, alg.mQ, alg.convention);
  for (int A = 0; A < alg.mQ; ++A)
    for (int a = 0; a < alg.mP; ++a)
      for (int b = 0; b < alg.mP; ++b) out.at(A, a, b) = alg.at(A, a, b).subs(images);
  return out;
}

TrioleMorphism base_change(const TrioleMorphism& psi, const PolyVec& images) {
  TrioleMorphism out = psi;
  for (auto& row : out.psi1)
    for (auto& p : row) p = p.subs(images);
  for (auto& row : out.psi2)
    for (auto& p : row) p = p.subs(images);
  return out;
}

// ---------------------------------------------------------------- complements

Submodule orthogonal_complement(const Submodule& S, const TrioleAlgebra& alg) {
  PolyMat rows;
  for (const auto& s : S.generators) {
    if (static_cast<int>(s.size()) != alg.mP) throw std::invalid_argument("generator rank mismatch");
    for (int A = 0; A < alg.mQ; ++A) {
      PolyVec row(alg.mP, alg.zero());
      for (int a = 0; a < alg.mP; ++a)
        for (int b = 0; b < alg.mP; ++b)
          if (!s[b].is_zero()) row[a] += alg.at(A, a, b) * s[b];
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  }
  return Submodule{kernel(rows, alg.mP, alg.n)};
}

bool contains(const Submodule& S, const PolyVec& v) { return in_span(S.generators, v); }

std::string to_string(LagrangianClass c) {
  switch (c) {
    case LagrangianClass::none: return "none";
    case LagrangianClass::sub_lagrangian: return "sub_lagrangian";
    case LagrangianClass::lagrangian: return "lagrangian";
  }
  return "none";
}

LagrangianClass lagrangian_classify(const Submodule& S, const TrioleAlgebra& alg) {
  const Submodule perp = orthogonal_complement(S, alg);
  for (const auto& s : S.generators)
    if (!contains(perp, s)) return LagrangianClass::none;
  for (const auto& v : perp.generators)
    if (!contains(S, v)) return LagrangianClass::sub_lagrangian;
  for (const auto& s : S.generators)
    for (const auto& t : S.generators)
      if (!is_zero(alg.pair(s, t))) return LagrangianClass::sub_lagrangian;
  return LagrangianClass::lagrangian;
}

}  // namespace triolex
