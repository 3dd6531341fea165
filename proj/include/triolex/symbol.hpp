#pragma once

#include "triolex/diffop.hpp"

namespace triolex {

// Homogeneous symbol of degree k in xi, stored as a (rows x cols) matrix of
// polynomials in 2n variables (x_0..x_{n-1}, xi_0..xi_{n-1}). Scalar symbols are 1x1.
class SymbolTensor {
 public:
  SymbolTensor() = default;
  SymbolTensor(int n_vars, int k, int rows = 1, int cols = 1);
  SymbolTensor(int n_vars, int k, const Poly& body);
  SymbolTensor(int n_vars, int k, PolyMat entries);

  int n_vars() const { return n_; }
  int degree_k() const { return k_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_scalar() const { return rows_ == 1 && cols_ == 1; }
  bool is_zero() const;
  const Poly& body() const { return e_.at(0).at(0); }
  const PolyMat& entries() const { return e_; }
  const Poly& at(int r, int c) const { return e_[r][c]; }

  bool operator==(const SymbolTensor& o) const;
  bool operator!=(const SymbolTensor& o) const { return !(*this == o); }
  SymbolTensor operator+(const SymbolTensor& o) const;
  SymbolTensor operator-(const SymbolTensor& o) const;
  SymbolTensor scaled(const Rational& c) const;

 private:
  void check() const;
  int n_ = 0, k_ = 0, rows_ = 1, cols_ = 1;
  PolyMat e_;
};

// polynomial of xi-degree k built from an operator's order-k coefficients
Poly xi_polynomial(const PolyDiffOp& D, int k);
// normal-ordered operator whose top part reads off a xi-polynomial
PolyDiffOp quantize(const Poly& xi_poly, int n_vars);

SymbolTensor principal_symbol(const PolyDiffOp& D, int k);
SymbolTensor principal_symbol(const MatDiffOp& D, int k);
MatDiffOp quantize(const SymbolTensor& s);

SymbolTensor star(const SymbolTensor& s, const SymbolTensor& t);
SymbolTensor symbol_poisson(const SymbolTensor& s, const SymbolTensor& t);

struct HamiltonianDerivation {
  SymbolTensor s;
  SymbolTensor operator()(const SymbolTensor& t) const { return symbol_poisson(s, t); }
};

HamiltonianDerivation hamiltonian_derivation(const SymbolTensor& s);

// variable helpers in the 2n-variable symbol ring
Poly symbol_x(int n_vars, int i);
Poly symbol_xi(int n_vars, int i);

}  // namespace triolex
