#include "triolex/tridiffop.hpp"

#include <functional>
#include <stdexcept>

namespace triolex {

using nlohmann::json;

namespace {

int kappa_power(const TrioleAlgebra& alg, int a, int b) {
  if (alg.convention != Convention::koszul) return 1;
  return ((a * b) % 2 == 0) ? 1 : -1;
}

MatDiffOp get(const ComponentOps& ops, int c, int rows, int cols, int n) {
  if (ops.from[c]) return *ops.from[c];
  return MatDiffOp(n, rows, cols);
}

PolyVec part_of(const TrioleElement& t, int c) {
  if (c == 0) return PolyVec{t.a};
  return c == 1 ? t.p : t.q;
}

MatDiffOp delta_coords(const MatDiffOp& D, const std::vector<Poly>& fs) {
  MatDiffOp r = D;
  for (const auto& f : fs) r = delta_a(r, f);
  return r;
}

PolyDiffOp delta_coords(const PolyDiffOp& D, const std::vector<Poly>& fs) {
  PolyDiffOp r = D;
  for (const auto& f : fs) r = delta_a(r, f);
  return r;
}

std::vector<Poly> coordinate_word(const std::vector<int>& w, int n) {
  std::vector<Poly> out;
  for (int i : w) out.push_back(Poly::var(n, i));
  return out;
}

}  // namespace

TriDiffOp TriDiffOp::zero(int degree, const TrioleAlgebra& alg) {
  const int n = alg.n;
  switch (degree) {
    case 0: return degree0(MatDiffOp(n, 1, 1), MatDiffOp(n, alg.mP, alg.mP), MatDiffOp(n, alg.mQ, alg.mQ));
    case 1: return degree1(MatDiffOp(n, alg.mP, 1), MatDiffOp(n, alg.mQ, alg.mP));
    case 2: return degree2(MatDiffOp(n, alg.mQ, 1));
  }
  throw std::invalid_argument("differential operators have degree 0, 1 or 2");
}

TriDiffOp TriDiffOp::degree0(const MatDiffOp& DA, const MatDiffOp& DP, const MatDiffOp& DQ) {
  TriDiffOp D;
  D.degree = 0;
  D.DA = DA;
  D.DP = DP;
  D.DQ = DQ;
  return D;
}

TriDiffOp TriDiffOp::degree1(const MatDiffOp& DA1, const MatDiffOp& DP1) {
  TriDiffOp D;
  D.degree = 1;
  D.DA1 = DA1;
  D.DP1 = DP1;
  return D;
}

TriDiffOp TriDiffOp::degree2(const MatDiffOp& DA2) {
  TriDiffOp D;
  D.degree = 2;
  D.DA2 = DA2;
  return D;
}

TriDiffOp TriDiffOp::scalar(const PolyDiffOp& D, const TrioleAlgebra& alg) {
  return degree0(MatDiffOp::scalar(D, 1), MatDiffOp::scalar(D, alg.mP), MatDiffOp::scalar(D, alg.mQ));
}

int TriDiffOp::order() const {
  switch (degree) {
    case 0: return std::max({DA.order(), DP.order(), DQ.order()});
    case 1: return std::max(DA1.order(), DP1.order());
    default: return DA2.order();
  }
}

bool TriDiffOp::operator==(const TriDiffOp& o) const {
  if (degree != o.degree) return false;
  switch (degree) {
    case 0: return DA == o.DA && DP == o.DP && DQ == o.DQ;
    case 1: return DA1 == o.DA1 && DP1 == o.DP1;
    default: return DA2 == o.DA2;
  }
}

ComponentOps to_ops(const TriDiffOp& D, const TrioleAlgebra& alg) {
  (void)alg;
  ComponentOps c;
  c.degree = D.degree;
  switch (D.degree) {
    case 0:
      c.from[0] = D.DA;
      c.from[1] = D.DP;
      c.from[2] = D.DQ;
      break;
    case 1:
      c.from[0] = D.DA1;
      c.from[1] = D.DP1;
      break;
    case 2: c.from[0] = D.DA2; break;
    default: throw std::invalid_argument("differential operators have degree 0, 1 or 2");
  }
  return c;
}

TriDiffOp from_ops(const ComponentOps& ops, const TrioleAlgebra& alg) {
  const int n = alg.n;
  const int mP = alg.mP, mQ = alg.mQ;
  switch (ops.degree) {
    case 0: return TriDiffOp::degree0(get(ops, 0, 1, 1, n), get(ops, 1, mP, mP, n), get(ops, 2, mQ, mQ, n));
    case 1: return TriDiffOp::degree1(get(ops, 0, mP, 1, n), get(ops, 1, mQ, mP, n));
    case 2: return TriDiffOp::degree2(get(ops, 0, mQ, 1, n));
  }
  throw std::invalid_argument("differential operators have degree 0, 1 or 2");
}

TriDiffOp from_derivation(const GradedDerivation& X, const TrioleAlgebra& alg) {
  return from_ops(component_ops(X, alg), alg);
}

ComponentOps compose_ops(const ComponentOps& D, const ComponentOps& E) {
  ComponentOps r;
  r.degree = D.degree + E.degree;
  for (int c = 0; c < 3; ++c) {
    const int mid = c + E.degree, tgt = mid + D.degree;
    if (mid < 0 || mid > 2 || tgt < 0 || tgt > 2 || !E.from[c] || !D.from[mid]) continue;
    r.from[c] = compose(*D.from[mid], *E.from[c]);
  }
  return r;
}

bool is_zero_ops(const ComponentOps& D) {
  for (const auto& f : D.from)
    if (f && !f->is_zero()) return false;
  return true;
}

TriDiffOp compose(const TriDiffOp& D, const TriDiffOp& E, const TrioleAlgebra& alg) {
  if (D.degree + E.degree > 2) throw std::invalid_argument("composite degree exceeds 2");
  return from_ops(compose_ops(to_ops(D, alg), to_ops(E, alg)), alg);
}

TrioleElement apply(const TriDiffOp& D, const TrioleElement& t, const TrioleAlgebra& alg) {
  const ComponentOps ops = to_ops(D, alg);
  TrioleElement out = TrioleElement::zero(alg);
  for (int c = 0; c < 3; ++c) {
    const int tgt = c + D.degree;
    if (!ops.from[c] || tgt > 2) continue;
    const PolyVec v = ops.from[c]->apply(part_of(t, c));
    if (tgt == 0)
      out.a += v[0];
    else
      for (std::size_t i = 0; i < v.size(); ++i) (tgt == 1 ? out.p : out.q)[i] += v[i];
  }
  return out;
}

std::vector<Generator> triole_generators(const TrioleAlgebra& alg) {
  std::vector<Generator> g;
  for (int i = 0; i < alg.n; ++i) g.push_back({"x" + std::to_string(i), TrioleElement::from_a(alg, Poly::var(alg.n, i))});
  for (int a = 0; a < alg.mP; ++a) g.push_back({"e" + std::to_string(a), TrioleElement::from_p(alg, alg.unit_p(a))});
  for (int A = 0; A < alg.mQ; ++A) g.push_back({"eps" + std::to_string(A), TrioleElement::from_q(alg, alg.unit_q(A))});
  return g;
}

ComponentOps delta_op(const ComponentOps& D, const TrioleElement& s, const TruncatedTriModule& src,
                      const TruncatedTriModule& dst, const TrioleAlgebra& alg) {
  const int ds = s.is_zero() ? 0 : s.homogeneous_degree();
  const ComponentOps L = compose_ops(action_ops(s, dst, alg), D);
  const ComponentOps R = compose_ops(D, action_ops(s, src, alg));
  const int sign = kappa_power(alg, ds, D.degree);
  ComponentOps out;
  out.degree = D.degree + ds;
  for (int c = 0; c < 3; ++c) {
    const int tgt = c + out.degree;
    if (tgt < 0 || tgt > 2 || (!L.from[c] && !R.from[c])) continue;
    MatDiffOp acc(alg.n, dst.rank(tgt), src.rank(c));
    if (L.from[c]) acc += *L.from[c];
    if (R.from[c]) {
      if (sign > 0)
        acc -= *R.from[c];
      else
        acc += *R.from[c];
    }
    out.from[c] = acc;
  }
  return out;
}

Report validate_module_diffop(const ComponentOps& D, const TruncatedTriModule& src, const TruncatedTriModule& dst,
                              const TrioleAlgebra& alg, int k) {
  if (D.degree < 0 || D.degree > 2) return Report::fail("degree", json{{"degree", D.degree}});
  if (k < 0) return Report::fail("order", json{{"k", k}}, "order bound must be nonnegative");
  for (int c = 0; c < 3; ++c) {
    if (!D.from[c]) continue;
    const int tgt = c + D.degree;
    if (tgt > 2) {
      if (!D.from[c]->is_zero()) return Report::fail("shape", json{{"component", c}}, "component leaves the grading");
      continue;
    }
    if (D.from[c]->rows() != dst.rank(tgt) || D.from[c]->cols() != src.rank(c) || D.from[c]->n_vars() != alg.n)
      return Report::fail("shape", json{{"component", c}}, "component has the wrong shape");
  }
  const auto gens = triole_generators(alg);
  std::vector<std::string> word;
  json witness = nullptr;
  std::function<bool(const ComponentOps&, std::size_t, int)> walk = [&](const ComponentOps& op, std::size_t start,
                                                                        int depth) -> bool {
    if (depth == k + 1) {
      if (is_zero_ops(op)) return true;
      witness = json{{"delta", word}};
      return false;
    }
    for (std::size_t g = start; g < gens.size(); ++g) {
      const ComponentOps next = delta_op(op, gens[g].element, src, dst, alg);
      if (is_zero_ops(next)) continue;
      word.push_back(gens[g].name);
      const bool ok = walk(next, g, depth + 1);
      word.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  if (!walk(D, 0, 0)) return Report::fail("order", witness, "a (k+1)-fold delta does not vanish");
  return Report::ok();
}

Report validate_diffop(const TriDiffOp& D, const TrioleAlgebra& alg, int k) {
  const TruncatedTriModule R = TruncatedTriModule::regular(alg);
  ComponentOps ops;
  try {
    ops = to_ops(D, alg);
  } catch (const std::invalid_argument& e) {
    return Report::fail("degree", json{{"degree", D.degree}}, e.what());
  }
  return validate_module_diffop(ops, R, R, alg, k);
}

std::vector<std::vector<int>> nondecreasing_words(int count, int len) {
  std::vector<std::vector<int>> out;
  if (len == 0) return {{}};
  if (count <= 0) return out;
  std::vector<int> w(len, 0);
  while (true) {
    out.push_back(w);
    int pos = len - 1;
    while (pos >= 0 && w[pos] == count - 1) --pos;
    if (pos < 0) break;
    ++w[pos];
    for (int q = pos + 1; q < len; ++q) w[q] = w[pos];
  }
  return out;
}

AtiyahDecomposition atiyah_k_decompose(const TriDiffOp& D, const TrioleAlgebra& alg, int k) {
  if (D.degree != 0) throw std::invalid_argument("the Atiyah decomposition needs a degree 0 operator");
  AtiyahDecomposition out;
  out.scalar = D.DA.at(0, 0);
  out.kernel_P = D.DP - MatDiffOp::scalar(out.scalar, alg.mP);
  out.kernel_Q = D.DQ - MatDiffOp::scalar(out.scalar, alg.mQ);
  auto order_ok = [&](const MatDiffOp& M) { return M.is_zero() || M.order() <= k - 1; };
  out.kernel_order_ok = order_ok(out.kernel_P) && order_ok(out.kernel_Q);
  out.reassembles = MatDiffOp::scalar(out.scalar, alg.mP) + out.kernel_P == D.DP &&
                    MatDiffOp::scalar(out.scalar, alg.mQ) + out.kernel_Q == D.DQ;
  out.g_relation = true;
  if (!out.kernel_order_ok || k < 1) return out;
  for (const auto& w : nondecreasing_words(alg.n, k - 1)) {
    const auto fs = coordinate_word(w, alg.n);
    const MatDiffOp MP = delta_coords(out.kernel_P, fs), MQ = delta_coords(out.kernel_Q, fs);
    const ScalarDerivation XA = delta_coords(out.scalar, fs).first_order_part();
    const GradedDerivation X = GradedDerivation::degree0(XA, MP.zeroth(), MQ.zeroth());
    for (int C = 0; C < alg.mQ; ++C)
      if (!is_zero(degree0_residual(X, alg, C))) {
        out.g_relation = false;
        out.witness = json{{"word", w}, {"C", C}};
        return out;
      }
  }
  return out;
}

GradedDerivation symbol_deg0_tensor(const TriDiffOp& D, const std::vector<Poly>& fs, const TrioleAlgebra& alg) {
  if (D.degree != 0) throw std::invalid_argument("degree 0 operator expected");
  const PolyDiffOp SA = delta_coords(D.DA.at(0, 0), fs);
  const MatDiffOp SP = delta_coords(D.DP, fs), SQ = delta_coords(D.DQ, fs);
  if (SA.order() > 1 || SP.order() > 1 || SQ.order() > 1)
    throw std::invalid_argument("operator order exceeds the number of functions plus one");
  const Poly c = SA.coeff(Exp(alg.n, 0));
  PolyMat G = SP.zeroth(), H = SQ.zeroth();
  for (int a = 0; a < alg.mP; ++a) G[a][a] -= c;
  for (int A = 0; A < alg.mQ; ++A) H[A][A] -= c;
  return GradedDerivation::degree0(SA.first_order_part(), G, H);
}

bool symbol_deg0_vanishes(const TriDiffOp& D, int k, const TrioleAlgebra& alg) {
  if (k < 1) return D.order() < 0 || (D.DA.is_zero() && D.DP.is_zero() && D.DQ.is_zero());
  for (const auto& w : nondecreasing_words(alg.n, k - 1)) {
    const GradedDerivation X = symbol_deg0_tensor(D, coordinate_word(w, alg.n), alg);
    if (!X.XA.is_zero() || !is_zero(X.G) || !is_zero(X.H)) return false;
  }
  return true;
}

GradedDerivation symbol_deg1_tensor(const TriDiffOp& D, const std::vector<Poly>& as, const TrioleAlgebra& alg) {
  if (D.degree != 1) throw std::invalid_argument("degree 1 operator expected");
  const MatDiffOp SA = delta_coords(D.DA1, as), SP = delta_coords(D.DP1, as);
  if (SA.order() > 1 || SP.order() > 1)
    throw std::invalid_argument("operator order exceeds the number of functions plus one");
  const PolyMat p0 = SA.zeroth();
  std::vector<ScalarDerivation> XA1;
  for (int b = 0; b < alg.mP; ++b) XA1.push_back(SA.at(b, 0).first_order_part());
  PolyMat gp = zero_matrix(alg.n, alg.mQ, alg.mP);
  for (int B = 0; B < alg.mQ; ++B)
    for (int a = 0; a < alg.mP; ++a)
      for (int b = 0; b < alg.mP; ++b) gp[B][a] += alg.at(B, b, a) * p0[b][0];
  return GradedDerivation::degree1(std::move(XA1), SP - MatDiffOp::mult(gp, alg.n));
}

bool symbol_deg1_vanishes(const TriDiffOp& D, int k, const TrioleAlgebra& alg) {
  if (k < 1) return D.DA1.is_zero() && D.DP1.is_zero();
  for (const auto& w : nondecreasing_words(alg.n, k - 1)) {
    const GradedDerivation X = symbol_deg1_tensor(D, coordinate_word(w, alg.n), alg);
    for (const auto& d : X.XA1)
      if (!d.is_zero()) return false;
    if (!X.Xp.is_zero()) return false;
  }
  return true;
}

QSymTensor gamma_deg2(const MatDiffOp& DA2, int k) {
  const int n = DA2.n_vars();
  QSymTensor t;
  t.n = n;
  t.k = k;
  t.mQ = DA2.rows();
  const Rational sign = (k % 2 == 0) ? 1 : -1;
  for (const auto& w : nondecreasing_words(n, k)) {
    const MatDiffOp d = delta_coords(DA2, coordinate_word(w, n));
    if (d.order() > 0 && !d.is_zero()) throw std::invalid_argument("operator order exceeds k");
    PolyVec v;
    for (const auto& row : d.zeroth()) v.push_back(row[0] * sign);
    if (!is_zero(v)) t.comps[w] = v;
  }
  return t;
}

SymbolTensor mu_deg2(const QSymTensor& t) {
  const int n = t.n, n2 = 2 * n;
  PolyMat m(t.mQ, PolyVec(1, Poly(n2)));
  for (const auto& [w, v] : t.comps) {
    // number of words with this multiset, divided by k!
    Rational weight = 1;
    std::vector<int> mult(n, 0);
    for (int i : w) ++mult[i];
    for (int i = 0; i < n; ++i)
      for (int j = 2; j <= mult[i]; ++j) weight /= j;
    Exp e(n2, 0);
    for (int i = 0; i < n; ++i) e[n + i] = mult[i];
    const Poly xi = Poly::monomial(e, weight);
    for (int B = 0; B < t.mQ; ++B)
      if (!v[B].is_zero()) m[B][0] += v[B].embed(n2, 0) * xi;
  }
  return SymbolTensor(n, t.k, std::move(m));
}

Deg2Symbol symbol_deg2_tensor(const TriDiffOp& D, int k, const TrioleAlgebra& alg) {
  if (D.degree != 2) throw std::invalid_argument("degree 2 operator expected");
  (void)alg;
  Deg2Symbol out;
  out.tensor = gamma_deg2(D.DA2, k);
  out.symbol = principal_symbol(D.DA2, k);
  out.round_trip = mu_deg2(out.tensor) == out.symbol && gamma_deg2(quantize(out.symbol), k) == out.tensor;
  return out;
}

}  // namespace triolex
