#pragma once

#include <vector>

#include "triolex/derivation.hpp"

namespace triolex {

// R = R_0 (+) R_1 (+) R_2, free of ranks r0, r1, r2, with A-bilinear structure maps
//   lam0[j][alpha][i] : coefficient of f_j in lam0(e_alpha, r_i)      P x R_0 -> R_1
//   lam1[k][alpha][j] : coefficient of h_k in lam1(e_alpha, f_j)      P x R_1 -> R_2
//   nu[k][A][i]       : coefficient of h_k in nu(eps_A, r_i)          Q x R_0 -> R_2
struct TruncatedTriModule {
  int r0 = 0, r1 = 0, r2 = 0;
  std::vector<PolyMat> lam0, lam1, nu;

  static TruncatedTriModule zero(const TrioleAlgebra& alg, int r0, int r1, int r2);
  // T as a module over itself
  static TruncatedTriModule regular(const TrioleAlgebra& alg);

  int rank(int c) const { return c == 0 ? r0 : (c == 1 ? r1 : r2); }
  bool operator==(const TruncatedTriModule& o) const;
};

Report validate_truncated_module(const TruncatedTriModule& R, const TrioleAlgebra& alg);

struct ModuleElement {
  PolyVec r0, r1, r2;

  static ModuleElement zero(const TruncatedTriModule& R, int n_vars);
  PolyVec& part(int c) { return c == 0 ? r0 : (c == 1 ? r1 : r2); }
  const PolyVec& part(int c) const { return c == 0 ? r0 : (c == 1 ? r1 : r2); }
  ModuleElement operator+(const ModuleElement& o) const;
  ModuleElement operator-(const ModuleElement& o) const;
  ModuleElement scaled(const Rational& c) const;
  bool operator==(const ModuleElement& o) const { return r0 == o.r0 && r1 == o.r1 && r2 == o.r2; }
  bool operator!=(const ModuleElement& o) const { return !(*this == o); }
  int homogeneous_degree() const;
};

// left action t . r
ModuleElement act(const TrioleElement& t, const ModuleElement& r, const TruncatedTriModule& R,
                  const TrioleAlgebra& alg);
// the operator r -> t . r for homogeneous t, as components R_c -> R_{c+deg t}
ComponentOps action_ops(const TrioleElement& t, const TruncatedTriModule& R, const TrioleAlgebra& alg);
std::vector<ModuleElement> module_test_basis(const TruncatedTriModule& R, int n_vars, int max_degree);

// lam0(p, X0), lam1(p, X1) and nu(q, X0) on D(T)_+
GradedDerivation module_action(const TrioleElement& s, const GradedDerivation& X, const TrioleAlgebra& alg);

// Derivations T -> R of degree 0, 1, 2: from[c] maps T_c -> R_{c+degree}
Report validate_module_derivation(const ComponentOps& X, const TruncatedTriModule& R, const TrioleAlgebra& alg,
                                  int max_degree = 2);
ModuleElement apply_module_derivation(const ComponentOps& X, const TrioleElement& t, const TruncatedTriModule& R,
                                      const TrioleAlgebra& alg);

// Der-operators on R of degree -1..2 with graded symbol X: from[c] maps R_c -> R_{c+degree}
struct DerOperator {
  ComponentOps ops;
  GradedDerivation symbol;
};

Report validate_der_operator(const DerOperator& D, const TruncatedTriModule& R, const TrioleAlgebra& alg,
                             int max_degree = 2);
ModuleElement apply_der_operator(const DerOperator& D, const ModuleElement& r);

// nu-twisted first-order operator R_0 -> R_2 with Q-valued symbol X2 plus an A-linear part h (r2 x r0)
DerOperator der_operator_deg2(const GradedDerivation& X2, const PolyMat& h, const TruncatedTriModule& R,
                              const TrioleAlgebra& alg);

// g_0 (+) g_1 (+) g_2 with
//   bracket[i][j][k] : coefficient of a_k in [a_i, a_j] on g_0
//   rho1[i], rho2[i] : matrices of a_i acting on g_1, g_2 (column = input)
//   form[a][b][c]    : coefficient of z_c in <f_a, f_b>
struct TriolicLieAlgebraData {
  int d0 = 0, d1 = 0, d2 = 0;
  std::vector<RatMat> bracket;
  std::vector<RatMat> rho1, rho2;
  std::vector<RatMat> form;
};

Report validate_triolic_lie_algebra(const TriolicLieAlgebraData& L);

// structure constants of a bracket-closed family of derivations of degrees 0, 1, 2
TriolicLieAlgebraData triolic_lie_from_derivations(const std::vector<GradedDerivation>& g0,
                                                   const std::vector<GradedDerivation>& g1,
                                                   const std::vector<GradedDerivation>& g2,
                                                   const TrioleAlgebra& alg);

}  // namespace triolex
