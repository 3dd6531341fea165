#include "triolex/symbol.hpp"

#include <stdexcept>

namespace triolex {

SymbolTensor::SymbolTensor(int n_vars, int k, int rows, int cols)
    : n_(n_vars), k_(k), rows_(rows), cols_(cols), e_(rows, PolyVec(cols, Poly(2 * n_vars))) {}

SymbolTensor::SymbolTensor(int n_vars, int k, const Poly& body) : SymbolTensor(n_vars, k) {
  e_[0][0] = body;
  check();
}

SymbolTensor::SymbolTensor(int n_vars, int k, PolyMat entries)
    : n_(n_vars), k_(k), rows_(static_cast<int>(entries.size())),
      cols_(entries.empty() ? 0 : static_cast<int>(entries[0].size())), e_(std::move(entries)) {
  check();
}

void SymbolTensor::check() const {
  for (const auto& row : e_) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("ragged symbol matrix");
    for (const auto& p : row) {
      if (p.n_vars() != 2 * n_) throw std::invalid_argument("symbol ring mismatch");
      for (const auto& [e, c] : p.terms()) {
        int d = 0;
        for (int i = n_; i < 2 * n_; ++i) d += e[i];
        if (d != k_) throw std::invalid_argument("symbol is not xi-homogeneous of the stated degree");
      }
    }
  }
}

bool SymbolTensor::is_zero() const {
  for (const auto& row : e_)
    for (const auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

bool SymbolTensor::operator==(const SymbolTensor& o) const {
  if (n_ != o.n_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
  if (is_zero() && o.is_zero()) return true;
  return k_ == o.k_ && e_ == o.e_;
}

SymbolTensor SymbolTensor::operator+(const SymbolTensor& o) const {
  if (o.k_ != k_ || o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("symbol shape mismatch");
  SymbolTensor r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.e_[i][j] += o.e_[i][j];
  return r;
}

SymbolTensor SymbolTensor::operator-(const SymbolTensor& o) const { return *this + o.scaled(-1); }

SymbolTensor SymbolTensor::scaled(const Rational& c) const {
  SymbolTensor r = *this;
  for (auto& row : r.e_)
    for (auto& p : row) p *= c;
  return r;
}

Poly symbol_x(int n_vars, int i) { return Poly::var(2 * n_vars, i); }
Poly symbol_xi(int n_vars, int i) { return Poly::var(2 * n_vars, n_vars + i); }

Poly xi_polynomial(const PolyDiffOp& D, int k) {
  const int n = D.n_vars();
  Poly r(2 * n);
  for (const auto& [sigma, c] : D.terms()) {
    if (total_degree(sigma) != k) continue;
    Exp xi(2 * n, 0);
    for (int i = 0; i < n; ++i) xi[n + i] = sigma[i];
    r += c.embed(2 * n) * Poly::monomial(xi);
  }
  return r;
}

PolyDiffOp quantize(const Poly& xi_poly, int n) {
  if (xi_poly.n_vars() != 2 * n) throw std::invalid_argument("symbol ring mismatch");
  PolyDiffOp D(n);
  for (const auto& [e, c] : xi_poly.terms()) {
    Exp x(e.begin(), e.begin() + n), s(e.begin() + n, e.end());
    D.add_term(s, Poly::monomial(x, c));
  }
  return D;
}

SymbolTensor principal_symbol(const PolyDiffOp& D, int k) {
  if (D.order() > k) throw std::invalid_argument("operator order exceeds symbol degree");
  return SymbolTensor(D.n_vars(), k, xi_polynomial(D, k));
}

SymbolTensor principal_symbol(const MatDiffOp& D, int k) {
  if (D.order() > k) throw std::invalid_argument("operator order exceeds symbol degree");
  PolyMat m(D.rows(), PolyVec(D.cols()));
  for (int i = 0; i < D.rows(); ++i)
    for (int j = 0; j < D.cols(); ++j) m[i][j] = xi_polynomial(D.at(i, j), k);
  return SymbolTensor(D.n_vars(), k, std::move(m));
}

MatDiffOp quantize(const SymbolTensor& s) {
  MatDiffOp M(s.n_vars(), s.rows(), s.cols());
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j) M.at(i, j) = quantize(s.at(i, j), s.n_vars());
  return M;
}

SymbolTensor star(const SymbolTensor& s, const SymbolTensor& t) {
  if (s.n_vars() != t.n_vars() || s.cols() != t.rows()) throw std::invalid_argument("symbol ring mismatch");
  const int n2 = 2 * s.n_vars();
  PolyMat m(s.rows(), PolyVec(t.cols(), Poly(n2)));
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < t.cols(); ++j)
      for (int l = 0; l < s.cols(); ++l) m[i][j] += s.at(i, l) * t.at(l, j);
  return SymbolTensor(s.n_vars(), s.degree_k() + t.degree_k(), std::move(m));
}

// {s,t} = sum_i ds/dxi_i dt/dx_i - ds/dx_i dt/dxi_i
SymbolTensor symbol_poisson(const SymbolTensor& s, const SymbolTensor& t) {
  if (s.n_vars() != t.n_vars()) throw std::invalid_argument("symbol ring mismatch");
  if (!s.is_scalar() || !t.is_scalar()) throw std::invalid_argument("Poisson bracket needs scalar symbols");
  const int n = s.n_vars();
  const int k = s.degree_k() + t.degree_k() - 1;
  Poly r(2 * n);
  for (int i = 0; i < n; ++i) {
    r += s.body().diff(n + i) * t.body().diff(i);
    r -= s.body().diff(i) * t.body().diff(n + i);
  }
  if (k < 0) return SymbolTensor(n, 0, Poly(2 * n));
  return SymbolTensor(n, k, r);
}

HamiltonianDerivation hamiltonian_derivation(const SymbolTensor& s) { return HamiltonianDerivation{s}; }

}  // namespace triolex
