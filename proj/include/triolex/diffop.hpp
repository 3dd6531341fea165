#pragma once

#include <map>
#include <vector>

#include "triolex/poly.hpp"

namespace triolex {

// X = sum_i X^i d_i acting on A = Q[x_0..x_{n-1}]
struct ScalarDerivation {
  PolyVec coeffs;

  ScalarDerivation() = default;
  explicit ScalarDerivation(int n_vars) : coeffs(n_vars, Poly(n_vars)) {}
  explicit ScalarDerivation(PolyVec c) : coeffs(std::move(c)) {}

  static ScalarDerivation partial(int n_vars, int i);

  int n_vars() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const;
  Poly apply(const Poly& f) const;

  ScalarDerivation operator+(const ScalarDerivation& o) const;
  ScalarDerivation operator-(const ScalarDerivation& o) const;
  ScalarDerivation operator-() const;
  ScalarDerivation scaled(const Poly& f) const;
  bool operator==(const ScalarDerivation& o) const { return coeffs == o.coeffs; }
  bool operator!=(const ScalarDerivation& o) const { return !(*this == o); }
};

ScalarDerivation lie_bracket(const ScalarDerivation& X, const ScalarDerivation& Y);

// Normal-ordered operator: sum over sigma of coeff_sigma * d^sigma, coefficients on the left.
class PolyDiffOp {
 public:
  using Terms = std::map<Exp, Poly, GrlexLess>;

  PolyDiffOp() = default;
  explicit PolyDiffOp(int n_vars) : n_(n_vars) {}

  static PolyDiffOp zero(int n_vars) { return PolyDiffOp(n_vars); }
  static PolyDiffOp identity(int n_vars) { return mult(Poly::one(n_vars)); }
  static PolyDiffOp mult(const Poly& f);
  static PolyDiffOp partial(int n_vars, int i);
  static PolyDiffOp partial(const Exp& sigma, const Poly& coeff);
  static PolyDiffOp from_derivation(const ScalarDerivation& X);

  int n_vars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;
  Poly coeff(const Exp& sigma) const;

  void add_term(const Exp& sigma, const Poly& c);

  Poly apply(const Poly& f) const;

  PolyDiffOp& operator+=(const PolyDiffOp& o);
  PolyDiffOp& operator-=(const PolyDiffOp& o);
  friend PolyDiffOp operator+(PolyDiffOp a, const PolyDiffOp& b) { return a += b; }
  friend PolyDiffOp operator-(PolyDiffOp a, const PolyDiffOp& b) { return a -= b; }
  PolyDiffOp operator-() const;
  // left multiplication f*Delta (coefficientwise)
  friend PolyDiffOp operator*(const Poly& f, const PolyDiffOp& d);
  friend PolyDiffOp operator*(const Rational& c, const PolyDiffOp& d);

  bool operator==(const PolyDiffOp& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const PolyDiffOp& o) const { return !(*this == o); }

  // terms with |sigma| == k, resp. |sigma| <= k
  PolyDiffOp homogeneous_part(int k) const;
  PolyDiffOp truncated(int k) const;

  // the derivation d_i -> coeff of d_i (only meaningful when order <= 1 and no constant term)
  ScalarDerivation first_order_part() const;

 private:
  int n_ = 0;
  Terms terms_;
};

PolyDiffOp compose(const PolyDiffOp& D, const PolyDiffOp& E);
PolyDiffOp commutator(const PolyDiffOp& D, const PolyDiffOp& E);
// a o D - D o a
PolyDiffOp delta_a(const PolyDiffOp& D, const Poly& a);
PolyDiffOp delta_a(const PolyDiffOp& D, const std::vector<Poly>& as);
int order_of(const PolyDiffOp& D);

class MatDiffOp {
 public:
  MatDiffOp() = default;
  MatDiffOp(int n_vars, int rows, int cols);

  static MatDiffOp zero(int n_vars, int rows, int cols) { return MatDiffOp(n_vars, rows, cols); }
  static MatDiffOp identity(int n_vars, int r);
  static MatDiffOp mult(const PolyMat& m, int n_vars);
  static MatDiffOp scalar(const PolyDiffOp& d, int r);

  int n_vars() const { return n_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  PolyDiffOp& at(int r, int c) { return e_[r][c]; }
  const PolyDiffOp& at(int r, int c) const { return e_[r][c]; }
  const std::vector<std::vector<PolyDiffOp>>& entries() const { return e_; }

  bool is_zero() const;
  int order() const;
  PolyVec apply(const PolyVec& v) const;

  MatDiffOp& operator+=(const MatDiffOp& o);
  MatDiffOp& operator-=(const MatDiffOp& o);
  friend MatDiffOp operator+(MatDiffOp a, const MatDiffOp& b) { return a += b; }
  friend MatDiffOp operator-(MatDiffOp a, const MatDiffOp& b) { return a -= b; }
  MatDiffOp operator-() const;
  friend MatDiffOp operator*(const Poly& f, const MatDiffOp& d);
  bool operator==(const MatDiffOp& o) const;
  bool operator!=(const MatDiffOp& o) const { return !(*this == o); }

  MatDiffOp homogeneous_part(int k) const;
  MatDiffOp truncated(int k) const;
  // matrix of order-0 coefficients
  PolyMat zeroth() const;

 private:
  int n_ = 0, rows_ = 0, cols_ = 0;
  std::vector<std::vector<PolyDiffOp>> e_;
};

MatDiffOp compose(const MatDiffOp& D, const MatDiffOp& E);
MatDiffOp commutator(const MatDiffOp& D, const MatDiffOp& E);
MatDiffOp delta_a(const MatDiffOp& D, const Poly& a);
MatDiffOp delta_a(const MatDiffOp& D, const std::vector<Poly>& as);
int order_of(const MatDiffOp& D);

// all multi-indices of length n with |sigma| <= k (resp. == k), in graded-lex order
std::vector<Exp> multi_indices_upto(int n, int k);
std::vector<Exp> multi_indices_exact(int n, int k);

}  // namespace triolex
