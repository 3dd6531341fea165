#pragma once

#include <array>
#include <optional>
#include <vector>

#include "triolex/algebra.hpp"

namespace triolex {

// Graded derivation of degree -1, 0, 1 or 2. Only the members of the active degree are used.
//   deg  0: XA, G (mP x mP), H (mQ x mQ) with X^P = XA + G, X^Q = XA + H,
//           G[gamma][alpha] = coefficient of e_gamma in X^P(e_alpha)
//   deg  1: XA1 (mP derivations, the P-valued derivation of A), Xp (mQ x mP, order <= 1)
//   deg  2: XA2 (mQ derivations, the Q-valued derivation of A)
//   deg -1: phi (length mP, P -> A), psi (mP x mQ, Q -> P)
struct GradedDerivation {
  int degree = 0;
  ScalarDerivation XA;
  PolyMat G, H;
  std::vector<ScalarDerivation> XA1;
  MatDiffOp Xp;
  std::vector<ScalarDerivation> XA2;
  PolyVec phi;
  PolyMat psi;

  static GradedDerivation zero(int degree, const TrioleAlgebra& alg);
  static GradedDerivation degree0(const ScalarDerivation& XA, PolyMat G, PolyMat H);
  static GradedDerivation degree1(std::vector<ScalarDerivation> XA1, MatDiffOp Xp);
  static GradedDerivation degree2(std::vector<ScalarDerivation> XA2);
  static GradedDerivation degree_minus1(PolyVec phi, PolyMat psi);

  bool operator==(const GradedDerivation& o) const;
  bool operator!=(const GradedDerivation& o) const { return !(*this == o); }
};

// +1 when the algebra multiplies without Koszul signs, -1 for the koszul convention
int koszul_kappa(const TrioleAlgebra& alg);
// sign in front of Y o X in [X, Y]
int bracket_sign(int deg_x, int deg_y, const TrioleAlgebra& alg);

// The action of X on each homogeneous component: from[c] maps T_c to T_{c+deg}.
struct ComponentOps {
  int degree = 0;
  std::array<std::optional<MatDiffOp>, 3> from;
};

int component_rank(int c, const TrioleAlgebra& alg);
ComponentOps component_ops(const GradedDerivation& X, const TrioleAlgebra& alg);
GradedDerivation from_component_ops(const ComponentOps& ops, const TrioleAlgebra& alg);

// the order-1 part of a degree-1 derivation forced by g and XA1
MatDiffOp twisted_symbol_operator(const std::vector<ScalarDerivation>& XA1, const TrioleAlgebra& alg);
GradedDerivation make_degree1(const TrioleAlgebra& alg, const std::vector<ScalarDerivation>& XA1, const PolyMat& h);

Report validate_derivation(const GradedDerivation& X, const TrioleAlgebra& alg);
PolyMat degree0_residual(const GradedDerivation& X, const TrioleAlgebra& alg, int C);

// psi solving the degree -1 relations for a given phi (constant metric only)
struct DegreeMinus1Solve {
  bool solvable = false;
  std::optional<PolyMat> psi;
  nlohmann::json system;
};
DegreeMinus1Solve solve_degree_minus1(const TrioleAlgebra& alg, const PolyVec& phi);

struct NonexistenceReport {
  bool nonexistence = true;
  int unknowns = 0;
  int rank = 0;
  int solution_dim = 0;
  RatMat system;
  nlohmann::json to_json() const;
};
NonexistenceReport reject_degree_minus2(const TrioleAlgebra& alg);

TrioleElement apply_derivation(const GradedDerivation& X, const TrioleElement& t, const TrioleAlgebra& alg);
GradedDerivation bracket(const GradedDerivation& X, const GradedDerivation& Y, const TrioleAlgebra& alg);
bool admissible_pair(int deg_x, int deg_y);

// evaluation-level check: apply(bracket) == X Y - sign Y X on a monomial test basis
Report check_bracket_against_evaluation(const GradedDerivation& X, const GradedDerivation& Y,
                                        const TrioleAlgebra& alg, int max_degree = 2);
// graded Leibniz rule checked on products of monomial test basis elements
Report check_leibniz(const GradedDerivation& X, const TrioleAlgebra& alg, int max_degree = 2);

ScalarDerivation symbol_deg0(const GradedDerivation& X);
// kernel element of the degree-0 symbol map: (G, H) with zero symbol
GradedDerivation end_pair(const PolyMat& G, const PolyMat& H, const TrioleAlgebra& alg);
// splitting X -> (X, 0, 0), a derivation exactly when X(g) = 0
GradedDerivation trivial_splitting(const ScalarDerivation& X, const TrioleAlgebra& alg);

// g-sharp composed with XA1, one mQ x mP matrix per coordinate direction
std::vector<PolyMat> symbol_deg1(const GradedDerivation& X, const TrioleAlgebra& alg);
// A-linear remainder h = Xp - twisted symbol part
PolyMat degree1_kernel_part(const GradedDerivation& X, const TrioleAlgebra& alg);

GradedDerivation scale(const GradedDerivation& X, const Rational& c, const TrioleAlgebra& alg);
GradedDerivation add(const GradedDerivation& X, const GradedDerivation& Y, const TrioleAlgebra& alg);
// all coefficient polynomials in a fixed order, for coordinate extraction
PolyVec flatten(const GradedDerivation& X, const TrioleAlgebra& alg);

}  // namespace triolex
