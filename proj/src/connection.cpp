#include "triolex/connection.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace triolex {

using nlohmann::json;

namespace {

int n_of(const std::vector<PolyMat>& Gamma) {
  for (const auto& M : Gamma)
    for (const auto& row : M)
      for (const auto& p : row) return p.n_vars();
  return static_cast<int>(Gamma.size());
}

int rank_of(const std::vector<PolyMat>& Gamma) { return Gamma.empty() ? 0 : static_cast<int>(Gamma[0].size()); }

PolyMat diff_matrix(const PolyMat& M, int i) {
  PolyMat r = M;
  for (auto& row : r)
    for (auto& p : row) p = p.diff(i);
  return r;
}

PolyMat sub(const PolyMat& a, const PolyMat& b) {
  PolyMat r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
  return r;
}

PolyMat add(const PolyMat& a, const PolyMat& b) {
  PolyMat r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
  return r;
}

PolyMat neg(const PolyMat& a) {
  PolyMat r = a;
  for (auto& row : r)
    for (auto& p : row) p = -p;
  return r;
}

}  // namespace

TriConnection TriConnection::zero(const TrioleAlgebra& alg) {
  TriConnection C;
  C.Gamma.assign(alg.n, zero_matrix(alg.n, alg.mP, alg.mP));
  C.Upsilon.assign(alg.n, zero_matrix(alg.n, alg.mQ, alg.mQ));
  return C;
}

void check_shapes(const TriConnection& C, const TrioleAlgebra& alg) {
  auto ok = [&](const std::vector<PolyMat>& T, int m) {
    if (static_cast<int>(T.size()) != alg.n) return false;
    for (const auto& M : T) {
      if (static_cast<int>(M.size()) != m) return false;
      for (const auto& row : M) {
        if (static_cast<int>(row.size()) != m) return false;
        for (const auto& p : row)
          if (p.n_vars() != alg.n) return false;
      }
    }
    return true;
  };
  if (!ok(C.Gamma, alg.mP)) throw std::invalid_argument("Gamma must be n x mP x mP");
  if (!ok(C.Upsilon, alg.mQ)) throw std::invalid_argument("Upsilon must be n x mQ x mQ");
}

PolyMat acting_matrix(const std::vector<PolyMat>& Gamma, int i) { return transpose(Gamma.at(i)); }

std::vector<PolyMat> from_acting(const std::vector<PolyMat>& M) {
  std::vector<PolyMat> G;
  for (const auto& m : M) G.push_back(transpose(m));
  return G;
}

GradedDerivation connection_derivation(const TriConnection& C, int i, const TrioleAlgebra& alg) {
  return GradedDerivation::degree0(ScalarDerivation::partial(alg.n, i), acting_matrix(C.Gamma, i),
                                   acting_matrix(C.Upsilon, i));
}

std::vector<std::vector<PolyMat>> compat_residual(const TriConnection& C, const TrioleAlgebra& alg) {
  check_shapes(C, alg);
  std::vector<std::vector<PolyMat>> out(alg.n, std::vector<PolyMat>(alg.mQ, zero_matrix(alg.n, alg.mP, alg.mP)));
  for (int i = 0; i < alg.n; ++i)
    for (int B = 0; B < alg.mQ; ++B)
      for (int a = 0; a < alg.mP; ++a)
        for (int b = 0; b < alg.mP; ++b) {
          Poly r = alg.at(B, a, b).diff(i);
          for (int A = 0; A < alg.mQ; ++A) r += alg.at(A, a, b) * C.Upsilon[i][A][B];
          for (int c = 0; c < alg.mP; ++c) {
            r -= alg.at(B, c, b) * C.Gamma[i][a][c];
            r -= alg.at(B, a, c) * C.Gamma[i][b][c];
          }
          out[i][B][a][b] = std::move(r);
        }
  return out;
}

bool is_metric(const TriConnection& C, const TrioleAlgebra& alg) {
  for (const auto& byB : compat_residual(C, alg))
    for (const auto& M : byB)
      if (!is_zero(M)) return false;
  return true;
}

bool CurvatureTensor::is_zero() const {
  for (const auto* T : {&RP, &RQ})
    for (const auto& row : *T)
      for (const auto& M : row)
        if (!triolex::is_zero(M)) return false;
  return true;
}

std::vector<std::vector<PolyMat>> curvature_of(const std::vector<PolyMat>& Gamma) {
  const int n = static_cast<int>(Gamma.size());
  const int m = rank_of(Gamma);
  const int nv = n_of(Gamma);
  std::vector<std::vector<PolyMat>> R(n, std::vector<PolyMat>(n, zero_matrix(nv, m, m)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // acting form: d_i M_j - d_j M_i + [M_i, M_j]
      const PolyMat Mi = acting_matrix(Gamma, i), Mj = acting_matrix(Gamma, j);
      PolyMat A = sub(diff_matrix(Mj, i), diff_matrix(Mi, j));
      A = add(A, sub(matmul(Mi, Mj), matmul(Mj, Mi)));
      R[i][j] = transpose(A);
      R[j][i] = neg(R[i][j]);
    }
  return R;
}

CurvatureTensor curvature(const TriConnection& C) { return CurvatureTensor{curvature_of(C.Gamma), curvature_of(C.Upsilon)}; }

std::vector<std::vector<std::vector<PolyMat>>> img_flatness(const TriConnection& C, const TrioleAlgebra& alg) {
  check_shapes(C, alg);
  const int n = alg.n, mP = alg.mP, mQ = alg.mQ;
  // W[j][D][a][b] = sum_c g^D_{cb} Gamma_{ja}^c + g^D_{ac} Gamma_{jb}^c
  std::vector<std::vector<PolyMat>> W(n, std::vector<PolyMat>(mQ, zero_matrix(n, mP, mP)));
  for (int j = 0; j < n; ++j)
    for (int D = 0; D < mQ; ++D)
      for (int a = 0; a < mP; ++a)
        for (int b = 0; b < mP; ++b)
          for (int c = 0; c < mP; ++c)
            W[j][D][a][b] += alg.at(D, c, b) * C.Gamma[j][a][c] + alg.at(D, a, c) * C.Gamma[j][b][c];
  auto term = [&](int i, int j, int D, int a, int b) {
    Poly r = W[j][D][a][b].diff(i);
    for (int B = 0; B < mQ; ++B) r += W[j][B][a][b] * C.Upsilon[i][B][D];
    return r;
  };
  std::vector<std::vector<std::vector<PolyMat>>> E(
      n, std::vector<std::vector<PolyMat>>(n, std::vector<PolyMat>(mQ, zero_matrix(n, mP, mP))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int D = 0; D < mQ; ++D)
        for (int a = 0; a < mP; ++a)
          for (int b = 0; b < mP; ++b) E[i][j][D][a][b] = term(i, j, D, a, b) - term(j, i, D, a, b);
  return E;
}

json FlatReport::to_json() const {
  json j = report.to_json();
  j["flat"] = flat;
  j["rp_zero"] = rp_zero;
  j["rq_zero"] = rq_zero;
  j["img_identity"] = img_identity;
  j["implied"] = implied;
  j["metric"] = metric;
  return j;
}

FlatReport flat_check(const TriConnection& C, const TrioleAlgebra& alg) {
  FlatReport out;
  const CurvatureTensor R = curvature(C);
  const int n = alg.n;
  auto first_nonzero = [&](const std::vector<std::vector<PolyMat>>& T) -> json {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!is_zero(T[i][j])) return json{{"i", i}, {"j", j}};
    return nullptr;
  };
  const json wp = first_nonzero(R.RP), wq = first_nonzero(R.RQ);
  out.rp_zero = wp.is_null();
  out.rq_zero = wq.is_null();
  out.metric = is_metric(C, alg);

  const auto E = img_flatness(C, alg);
  json we = nullptr;
  bool implied = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int D = 0; D < alg.mQ; ++D) {
        if (we.is_null() && !is_zero(E[i][j][D])) we = json{{"i", i}, {"j", j}, {"D", D}};
        for (int a = 0; a < alg.mP; ++a)
          for (int b = 0; b < alg.mP; ++b) {
            Poly gr(n);
            for (int A = 0; A < alg.mQ; ++A) gr += alg.at(A, a, b) * R.RQ[i][j][A][D];
            if (gr != E[i][j][D][a][b]) implied = false;
          }
      }
  out.img_identity = we.is_null();
  // the implication only applies to g-compatible connections
  out.implied = out.metric ? implied : false;
  out.flat = out.rp_zero && out.rq_zero && out.img_identity;
  if (!out.rp_zero)
    out.report = Report::fail("curvature of P", wp);
  else if (!out.rq_zero)
    out.report = Report::fail("curvature of Q", wq);
  else if (!out.img_identity)
    out.report = Report::fail("im(g) flatness identity", we);
  return out;
}

std::vector<std::vector<PolyVec>> linear_vectorfield_residual(const std::vector<PolyMat>& Gamma) {
  const int n = static_cast<int>(Gamma.size());
  const int m = rank_of(Gamma);
  const int N = n + m;
  auto lift = [&](const Poly& p) { return p.embed(N, 0); };
  // u_i^alpha = - sum_beta Gamma_{i beta}^alpha u^beta
  std::vector<PolyVec> u(n, PolyVec(m, Poly(N)));
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) u[i][a] -= lift(Gamma[i][b][a]) * Poly::var(N, n + b);
  std::vector<std::vector<PolyVec>> res(n, std::vector<PolyVec>(n, PolyVec(m, Poly(N))));
  auto half = [&](int i, int j, int a) {
    Poly r = u[j][a].diff(i);
    for (int b = 0; b < m; ++b) r += u[i][b] * u[j][a].diff(n + b);
    return r;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < m; ++a) res[i][j][a] = half(i, j, a) - half(j, i, a);
  return res;
}

InducedKind induced_kind_from_string(const std::string& s) {
  if (s == "dual") return InducedKind::dual;
  if (s == "tensorP" || s == "tensor") return InducedKind::tensorP;
  if (s == "end") return InducedKind::end;
  if (s == "bil") return InducedKind::bil;
  throw std::invalid_argument("unknown induced connection kind: " + s);
}

std::vector<PolyMat> dual_connection(const std::vector<PolyMat>& Gamma) {
  std::vector<PolyMat> out;
  for (const auto& G : Gamma) out.push_back(neg(transpose(G)));
  return out;
}

std::vector<PolyMat> tensor_connection(const std::vector<PolyMat>& Gamma, const std::vector<PolyMat>& Gamma2) {
  if (Gamma.size() != Gamma2.size()) throw std::invalid_argument("connections over different bases");
  const int nv = n_of(Gamma);
  const int m = rank_of(Gamma), m2 = rank_of(Gamma2);
  std::vector<PolyMat> out;
  for (std::size_t i = 0; i < Gamma.size(); ++i)
    out.push_back(add(kronecker(Gamma[i], identity_matrix(nv, m2)), kronecker(identity_matrix(nv, m), Gamma2[i])));
  return out;
}

std::vector<PolyMat> end_connection(const std::vector<PolyMat>& Gamma) {
  return tensor_connection(Gamma, dual_connection(Gamma));
}

std::vector<PolyMat> bil_connection(const TriConnection& C) {
  const auto d = dual_connection(C.Gamma);
  return tensor_connection(tensor_connection(d, d), C.Upsilon);
}

std::vector<PolyMat> induced_connection(const TriConnection& C, InducedKind kind) {
  switch (kind) {
    case InducedKind::dual: return dual_connection(C.Gamma);
    case InducedKind::tensorP: return tensor_connection(C.Gamma, C.Gamma);
    case InducedKind::end: return end_connection(C.Gamma);
    case InducedKind::bil: return bil_connection(C);
  }
  throw std::invalid_argument("unknown induced connection kind");
}

PolyVec covariant_derivative(const std::vector<PolyMat>& Gamma, int i, const PolyVec& s) {
  PolyVec r(s.size());
  for (std::size_t b = 0; b < s.size(); ++b) {
    r[b] = s[b].diff(i);
    for (std::size_t a = 0; a < s.size(); ++a)
      if (!Gamma[i][a][b].is_zero()) r[b] += Gamma[i][a][b] * s[a];
  }
  return r;
}

// ---- forms ----

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int q = pos + 1; q < k; ++q) cur[q] = cur[q - 1] + 1;
  }
  return out;
}

PForm PForm::zero(int n, int k, int m) {
  PForm w;
  w.n = n;
  w.k = k;
  w.m = m;
  return w;
}

PForm PForm::section(const PolyVec& p, int n) {
  PForm w = zero(n, 0, static_cast<int>(p.size()));
  w.set({}, p);
  return w;
}

PolyVec PForm::value(const std::vector<int>& idx) const {
  std::vector<int> s = idx;
  int sign = 1;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j + 1 < s.size() - i; ++j)
      if (s[j] > s[j + 1]) {
        std::swap(s[j], s[j + 1]);
        sign = -sign;
      }
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == s[i + 1]) return PolyVec(m, Poly(n));
  auto it = coeffs.find(s);
  if (it == coeffs.end()) return PolyVec(m, Poly(n));
  PolyVec v = it->second;
  if (sign < 0)
    for (auto& p : v) p = -p;
  return v;
}

void PForm::set(const std::vector<int>& sorted_idx, const PolyVec& v) {
  if (triolex::is_zero(v))
    coeffs.erase(sorted_idx);
  else
    coeffs[sorted_idx] = v;
}

bool PForm::is_zero() const { return coeffs.empty(); }

bool PForm::operator==(const PForm& o) const { return n == o.n && k == o.k && m == o.m && coeffs == o.coeffs; }

PForm PForm::scaled(const Poly& a) const {
  PForm w = zero(n, k, m);
  for (const auto& [idx, v] : coeffs) {
    PolyVec r = v;
    for (auto& p : r) p = a * p;
    w.set(idx, r);
  }
  return w;
}

PForm PForm::operator+(const PForm& o) const {
  PForm w = *this;
  for (const auto& [idx, v] : o.coeffs) {
    PolyVec r = w.value(idx);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += v[i];
    w.set(idx, r);
  }
  return w;
}

PForm covariant_d(const PForm& w, const std::vector<PolyMat>& Gamma) {
  PForm out = PForm::zero(w.n, w.k + 1, w.m);
  if (w.k >= w.n) return out;
  for (const auto& idx : k_subsets(w.n, w.k + 1)) {
    PolyVec acc(w.m, Poly(w.n));
    for (int s = 0; s <= w.k; ++s) {
      std::vector<int> rest = idx;
      rest.erase(rest.begin() + s);
      const PolyVec t = covariant_derivative(Gamma, idx[s], w.value(rest));
      for (int a = 0; a < w.m; ++a) acc[a] += (s % 2 == 0) ? t[a] : -t[a];
    }
    out.set(idx, acc);
  }
  return out;
}

PForm curvature_wedge(const std::vector<std::vector<PolyMat>>& R, const PForm& w) {
  PForm out = PForm::zero(w.n, w.k + 2, w.m);
  if (w.k + 2 > w.n) return out;
  for (const auto& idx : k_subsets(w.n, w.k + 2)) {
    PolyVec acc(w.m, Poly(w.n));
    for (int s = 0; s < w.k + 2; ++s)
      for (int t = s + 1; t < w.k + 2; ++t) {
        std::vector<int> rest;
        for (int r = 0; r < w.k + 2; ++r)
          if (r != s && r != t) rest.push_back(idx[r]);
        const PolyVec v = w.value(rest);
        const PolyMat& Rst = R[idx[s]][idx[t]];
        const bool neg_sign = (s + t - 1) % 2 != 0;
        for (int b = 0; b < w.m; ++b)
          for (int a = 0; a < w.m; ++a)
            if (!Rst[a][b].is_zero()) {
              const Poly term = Rst[a][b] * v[a];
              if (neg_sign)
                acc[b] -= term;
              else
                acc[b] += term;
            }
      }
    out.set(idx, acc);
  }
  return out;
}

DSquaredReport d_squared_vs_curvature(const PForm& w, const std::vector<PolyMat>& Gamma) {
  DSquaredReport r;
  if (w.k + 2 > w.n) {
    r.vacuous = true;
    return r;
  }
  r.dd = covariant_d(covariant_d(w, Gamma), Gamma);
  r.rw = curvature_wedge(curvature_of(Gamma), w);
  r.equal = r.dd == r.rw;
  return r;
}

std::vector<PolyVec> nabla_constant_sections(const std::vector<PolyMat>& Gamma, int d_max) {
  const int n = n_of(Gamma);
  const int m = rank_of(Gamma);
  const auto monos = multi_indices_upto(n, d_max);
  const int nm = static_cast<int>(monos.size());
  const int unknowns = m * nm;
  // row key: (i, beta, monomial)
  std::map<std::tuple<int, int, Exp>, RatVec> rows;
  for (int a = 0; a < m; ++a)
    for (int e = 0; e < nm; ++e) {
      PolyVec s(m, Poly(n));
      s[a] = Poly::monomial(monos[e]);
      const int col = a * nm + e;
      for (int i = 0; i < n; ++i) {
        const PolyVec v = covariant_derivative(Gamma, i, s);
        for (int b = 0; b < m; ++b)
          for (const auto& [ex, c] : v[b].terms()) {
            auto& row = rows[{i, b, ex}];
            if (row.empty()) row.assign(unknowns, 0);
            row[col] += c;
          }
      }
    }
  RatMat M;
  for (auto& [key, row] : rows) M.push_back(std::move(row));
  std::vector<PolyVec> out;
  for (const auto& v : rational_kernel(M, unknowns)) {
    PolyVec s(m, Poly(n));
    for (int a = 0; a < m; ++a)
      for (int e = 0; e < nm; ++e)
        if (v[a * nm + e] != 0) s[a] += Poly::monomial(monos[e], v[a * nm + e]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<PolyMat> pure_gauge(const PolyMat& S) {
  const auto inv = inverse_over_ring(S);
  if (!inv) throw std::invalid_argument("gauge matrix is not invertible over A");
  const int n = S.empty() ? 0 : S[0][0].n_vars();
  std::vector<PolyMat> M;
  for (int i = 0; i < n; ++i) M.push_back(matmul(*inv, diff_matrix(S, i)));
  return from_acting(M);
}

std::vector<PolyMat> gauge_transform(const std::vector<PolyMat>& Gamma, const PolyMat& S) {
  const auto inv = inverse_over_ring(S);
  if (!inv) throw std::invalid_argument("gauge matrix is not invertible over A");
  std::vector<PolyMat> M;
  for (std::size_t i = 0; i < Gamma.size(); ++i)
    M.push_back(add(matmul(matmul(*inv, acting_matrix(Gamma, static_cast<int>(i))), S),
                    matmul(*inv, diff_matrix(S, static_cast<int>(i)))));
  return from_acting(M);
}

bool preserves_endomorphism(const std::vector<PolyMat>& Gamma, const PolyMat& phi) {
  for (std::size_t i = 0; i < Gamma.size(); ++i) {
    const PolyMat M = acting_matrix(Gamma, static_cast<int>(i));
    const PolyMat r = add(diff_matrix(phi, static_cast<int>(i)), sub(matmul(M, phi), matmul(phi, M)));
    if (!is_zero(r)) return false;
  }
  return true;
}

namespace {

PolyMat slot_sum(const PolyMat& M, int p, int q, int nv) {
  const int m = static_cast<int>(M.size());
  const int slots = p + q;
  int dim = 1;
  for (int s = 0; s < slots; ++s) dim *= m;
  PolyMat total = zero_matrix(nv, dim, dim);
  const PolyMat Md = neg(transpose(M));
  for (int s = 0; s < slots; ++s) {
    PolyMat acc = identity_matrix(nv, 1);
    for (int t = 0; t < slots; ++t) acc = kronecker(acc, t == s ? (s < p ? M : Md) : identity_matrix(nv, m));
    total = add(total, acc);
  }
  return total;
}

}  // namespace

std::vector<PolyMat> valence_acting(const std::vector<PolyMat>& Gamma, int p, int q) {
  if (p < 0 || q < 0 || p + q > 3) throw std::invalid_argument("valence cap exceeded: p + q must be at most 3");
  const int nv = n_of(Gamma);
  std::vector<PolyMat> out;
  for (std::size_t i = 0; i < Gamma.size(); ++i)
    out.push_back(slot_sum(acting_matrix(Gamma, static_cast<int>(i)), p, q, nv));
  return out;
}

bool preserves_tensor(const std::vector<PolyMat>& Gamma, int p, int q, const PolyVec& xi) {
  const auto A = valence_acting(Gamma, p, q);
  for (std::size_t i = 0; i < A.size(); ++i) {
    PolyVec r = matvec(A[i], xi);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] += xi[k].diff(static_cast<int>(i));
    if (!is_zero(r)) return false;
  }
  return true;
}

json GaugeSearch::to_json() const {
  json b = json::array();
  for (const auto& M : basis) {
    json rows = json::array();
    for (const auto& row : M) {
      json r = json::array();
      for (const auto& x : row) r.push_back(x.get_str());
      rows.push_back(r);
    }
    b.push_back(rows);
  }
  return json{{"dimension", dimension}, {"admits_preserving_connection", true}, {"basis", b}};
}

GaugeSearch gauge_structure_search(const RatVec& xi, int m, int p, int q) {
  if (p < 0 || q < 0 || p + q > 3) throw std::invalid_argument("valence cap exceeded: p + q must be at most 3");
  const int nv = 1;
  PolyVec x;
  for (const auto& c : xi) x.push_back(Poly(nv, c));
  int dim = 1;
  for (int s = 0; s < p + q; ++s) dim *= m;
  if (static_cast<int>(x.size()) != dim) throw std::invalid_argument("tensor has the wrong number of entries");
  // column (r, c) of the linear system is the action of the unit acting matrix E_rc on xi
  RatMat sys(dim, RatVec(m * m, 0));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) {
      PolyMat E = zero_matrix(nv, m, m);
      E[r][c] = Poly::one(nv);
      const PolyVec v = matvec(slot_sum(E, p, q, nv), x);
      for (int k = 0; k < dim; ++k) sys[k][r * m + c] = v[k].constant_term();
    }
  GaugeSearch out;
  for (const auto& v : rational_kernel(sys, m * m)) {
    RatMat G(m, RatVec(m, 0));
    // Gamma[alpha][beta] = M[beta][alpha]
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) G[c][r] = v[r * m + c];
    out.basis.push_back(std::move(G));
  }
  out.dimension = static_cast<int>(out.basis.size());
  return out;
}

SymmetryKind symmetry_kind_from_string(const std::string& s) {
  if (s == "orthogonal_inf") return SymmetryKind::orthogonal_inf;
  if (s == "commutant") return SymmetryKind::commutant;
  if (s == "orthogonal_group") return SymmetryKind::orthogonal_group;
  throw std::invalid_argument("unknown symmetry kind: " + s);
}

bool is_orthogonal_inf(const PolyMat& phi, const std::vector<PolyMat>& b) {
  const std::size_t m = phi.size();
  for (const auto& bA : b)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t c = 0; c < m; ++c) {
        Poly r(bA[a][c].n_vars());
        for (std::size_t k = 0; k < m; ++k) r += bA[k][c] * phi[k][a] + bA[a][k] * phi[k][c];
        if (!r.is_zero()) return false;
      }
  return true;
}

bool is_commutant(const PolyMat& Phi, const PolyMat& psi) { return matmul(Phi, psi) == matmul(psi, Phi); }

bool is_orthogonal_group(const PolyMat& Phi, const std::vector<PolyMat>& b) {
  const PolyMat Pt = transpose(Phi);
  for (const auto& bA : b)
    if (matmul(matmul(Pt, bA), Phi) != bA) return false;
  return true;
}

}  // namespace triolex
