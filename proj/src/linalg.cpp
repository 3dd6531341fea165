#include "triolex/linalg.hpp"

#include <stdexcept>

namespace triolex {

PolyMat zero_matrix(int n_vars, int rows, int cols) { return PolyMat(rows, PolyVec(cols, Poly(n_vars))); }

PolyMat identity_matrix(int n_vars, int r) {
  PolyMat m = zero_matrix(n_vars, r, r);
  for (int i = 0; i < r; ++i) m[i][i] = Poly::one(n_vars);
  return m;
}

PolyMat matmul(const PolyMat& a, const PolyMat& b) {
  if (a.empty()) return {};
  const std::size_t inner = a[0].size();
  if (b.size() != inner) throw std::invalid_argument("shape mismatch");
  if (inner == 0) throw std::invalid_argument("empty inner dimension");
  const int n = a[0][0].n_vars();
  const std::size_t cols = b[0].size();
  PolyMat r = zero_matrix(n, static_cast<int>(a.size()), static_cast<int>(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

PolyVec matvec(const PolyMat& a, const PolyVec& v) {
  if (a.empty()) return {};
  if (a[0].size() != v.size()) throw std::invalid_argument("shape mismatch");
  PolyVec r(a.size(), Poly(v.empty() ? a[0][0].n_vars() : v[0].n_vars()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

PolyMat transpose(const PolyMat& a) {
  if (a.empty()) return {};
  PolyMat r(a[0].size(), PolyVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

PolyMat kronecker(const PolyMat& a, const PolyMat& b) {
  const std::size_t ar = a.size(), ac = ar ? a[0].size() : 0;
  const std::size_t br = b.size(), bc = br ? b[0].size() : 0;
  PolyMat r(ar * br, PolyVec(ac * bc));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) r[i * br + k][j * bc + l] = a[i][j] * b[k][l];
  return r;
}

bool is_zero(const PolyMat& a) {
  for (const auto& row : a)
    if (!is_zero(row)) return false;
  return true;
}

bool is_zero(const PolyVec& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

namespace {

// Bareiss forward elimination in place; returns pivot columns, and the sign of row swaps.
std::vector<int> bareiss(PolyMat& m, int& sign) {
  sign = 1;
  std::vector<int> pivots;
  const int rows = static_cast<int>(m.size());
  if (!rows) return pivots;
  const int cols = static_cast<int>(m[0].size());
  if (!cols) return pivots;
  const int n = m[0][0].n_vars();
  Poly prev = Poly::one(n);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    // prefer the sparsest nonzero pivot to keep intermediate growth small
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero() && (p < 0 || m[i][c].size() < m[p][c].size())) p = i;
    if (p < 0) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      sign = -sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        Poly v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        m[i][j] = v.divexact(prev);
      }
      m[i][c] = Poly(n);
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void normalize(PolyVec& v) {
  for (const auto& p : v) {
    if (p.is_zero()) continue;
    // try to cancel a common polynomial factor equal to one entry
    bool divides = true;
    PolyVec q;
    for (const auto& x : v) {
      try {
        q.push_back(x.divexact(p));
      } catch (const std::domain_error&) {
        divides = false;
        break;
      }
    }
    if (divides) {
      v = q;
      break;
    }
  }
  for (const auto& p : v) {
    if (p.is_zero()) continue;
    Rational lc = p.terms().rbegin()->second;
    for (auto& x : v) x *= 1 / lc;
    break;
  }
}

}  // namespace

int rank(const PolyMat& m) {
  PolyMat w = m;
  int s;
  return static_cast<int>(bareiss(w, s).size());
}

Poly det(const PolyMat& m) {
  const int r = static_cast<int>(m.size());
  if (r == 0) throw std::invalid_argument("empty matrix");
  if (static_cast<int>(m[0].size()) != r) throw std::invalid_argument("determinant of non-square matrix");
  PolyMat w = m;
  int s;
  auto piv = bareiss(w, s);
  if (static_cast<int>(piv.size()) < r) return Poly(m[0][0].n_vars());
  return s > 0 ? w[r - 1][r - 1] : -w[r - 1][r - 1];
}

std::vector<PolyVec> kernel(const PolyMat& m, int cols, int n_vars) {
  std::vector<PolyVec> out;
  PolyMat w = m;
  for (auto& row : w)
    if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("ragged matrix");
  int s;
  auto piv = bareiss(w, s);
  std::vector<bool> is_pivot(cols, false);
  for (int c : piv) is_pivot[c] = true;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    PolyVec y(cols, Poly(n_vars));
    y[f] = Poly::one(n_vars);
    for (int i = static_cast<int>(piv.size()) - 1; i >= 0; --i) {
      const int pc = piv[i];
      Poly acc(n_vars);
      for (int j = pc + 1; j < cols; ++j)
        if (!w[i][j].is_zero() && !y[j].is_zero()) acc -= w[i][j] * y[j];
      const Poly a = w[i][pc];
      for (int j = pc + 1; j < cols; ++j) y[j] *= a;
      y[pc] = acc;
    }
    normalize(y);
    out.push_back(std::move(y));
  }
  return out;
}

bool in_span(const std::vector<PolyVec>& gens, const PolyVec& v) {
  if (is_zero(v)) return true;
  PolyMat m(gens.begin(), gens.end());
  const int r0 = m.empty() ? 0 : rank(m);
  m.push_back(v);
  return rank(m) == r0;
}

bool is_unit(const Poly& p) { return !p.is_zero() && p.is_constant(); }

std::optional<PolyMat> inverse_over_ring(const PolyMat& m) {
  const int r = static_cast<int>(m.size());
  if (r == 0) return PolyMat{};
  const int n = m[0][0].n_vars();
  Poly d = det(m);
  if (!is_unit(d)) return std::nullopt;
  const Rational dinv = 1 / d.constant_term();
  PolyMat inv = zero_matrix(n, r, r);
  if (r == 1) {
    inv[0][0] = Poly(n, dinv);
    return inv;
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      PolyMat minor;
      for (int a = 0; a < r; ++a) {
        if (a == j) continue;
        PolyVec row;
        for (int b = 0; b < r; ++b)
          if (b != i) row.push_back(m[a][b]);
        minor.push_back(row);
      }
      Poly c = det(minor) * dinv;
      inv[i][j] = ((i + j) % 2) ? -c : c;
    }
  return inv;
}

RatMat rref(RatMat m, std::vector<int>* pivots) {
  std::vector<int> piv;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = piv;
  return m;
}

std::vector<RatVec> rational_kernel(const RatMat& m, int cols) {
  std::vector<int> piv;
  RatMat r = m.empty() ? RatMat{} : rref(m, &piv);
  std::vector<bool> is_pivot(cols, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<RatVec> out;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<RatVec> rational_solve(const RatMat& m, const RatVec& b) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  RatMat aug = m;
  for (int i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  std::vector<int> piv;
  RatMat r = rref(aug, &piv);
  RatVec x(cols, 0);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == cols) return std::nullopt;
    x[piv[i]] = r[i][cols];
  }
  return x;
}

}  // namespace triolex
