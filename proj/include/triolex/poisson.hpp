#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "triolex/derivation.hpp"

namespace triolex {

// One summand coeff * d^sigma s_a * d^tau t_b in output slot `out`, with |sigma|, |tau| <= 1.
struct BiTerm {
  int out = 0, a = 0, b = 0;
  Exp sigma, tau;
  bool operator<(const BiTerm& o) const {
    return std::tie(out, a, b, sigma, tau) < std::tie(o.out, o.a, o.b, o.sigma, o.tau);
  }
  bool operator==(const BiTerm& o) const {
    return out == o.out && a == o.a && b == o.b && sigma == o.sigma && tau == o.tau;
  }
};

// Bracket of homogeneous degree h. Block (j, k) with j <= k holds {T_j, T_k} -> T_{j+k+h};
// the blocks with j > k follow from graded skew-symmetry.
struct BiDerivation {
  int degree = 0;
  std::map<std::pair<int, int>, std::map<BiTerm, Poly>> blocks;

  static BiDerivation zero(int degree) { return BiDerivation{degree, {}}; }
  void add_term(int j, int k, int out, int a, int b, const Exp& sigma, const Exp& tau, const Poly& coeff);
  bool operator==(const BiDerivation& o) const { return degree == o.degree && blocks == o.blocks; }
};

// "AA", "AP", ... for the block (j, k)
std::string block_name(int j, int k);
std::pair<int, int> block_from_name(const std::string& name);

// sign in {t, s} = -sign {s, t} for homogeneous arguments of degrees ds, dt
int skew_sign(int h, int ds, int dt, const TrioleAlgebra& alg);
// sign in {s, t u} = {s, t} u + sign t {s, u}
int leibniz_sign(int h, int ds, int dt, const TrioleAlgebra& alg);

TrioleElement evaluate(const BiDerivation& Pi, const TrioleElement& s, const TrioleElement& t, const TrioleAlgebra& alg);

Report validate_biderivation(const BiDerivation& Pi, const TrioleAlgebra& alg, int max_degree = 2);

// {s,{t,u}} - {{s,t},u} - sign {t,{s,u}}
TrioleElement jacobiator(const BiDerivation& Pi, const TrioleElement& s, const TrioleElement& t,
                         const TrioleElement& u, const TrioleAlgebra& alg);

struct SchoutenReport {
  bool zero = true;
  long long triples = 0;
  nlohmann::json witness;
  nlohmann::json to_json() const;
};
SchoutenReport schouten_square(const BiDerivation& Pi, const TrioleAlgebra& alg, int max_degree = 2);

struct PoissonReport {
  bool cond[4] = {true, true, true, true};
  nlohmann::json witness;
  bool all() const { return cond[0] && cond[1] && cond[2] && cond[3]; }
  nlohmann::json to_json() const;
};
// (1) Jacobi on A, (2) on (A, A, P), (3) on (A, A, Q), (4) the AQ / PP compatibility on (A, P, P)
PoissonReport poisson_check_deg0(const BiDerivation& Pi, const TrioleAlgebra& alg, int max_degree = 2);

// {s, t} = pi^{ij} d_i s . d_j t on the whole triole, pi antisymmetric n x n
BiDerivation hamiltonian_lift(const PolyMat& pi, const TrioleAlgebra& alg);

// c[alpha][beta][gamma]: coefficient of e_gamma in [e_alpha, e_beta]; anchor[alpha] = alpha(e_alpha)
struct LieAlgebroid {
  int rank = 0;
  int n = 0;
  std::vector<PolyMat> c;
  std::vector<ScalarDerivation> anchor;

  static LieAlgebroid zero(int rank, int n_vars);
  static LieAlgebroid tangent(int n_vars);
};

PolyVec section_bracket(const LieAlgebroid& L, const PolyVec& u, const PolyVec& v);
Report validate_algebroid(const LieAlgebroid& L);

// degree -1 (component 1 = P) or -2 (component 2 = Q) bracket induced by an algebroid structure.
// For degree -1, {e_alpha, q} = anchor(e_alpha)(q) + H[alpha] q, H[alpha][B][A] the coefficient of eps_B
// at eps_A; an empty H means zero.
BiDerivation algebroid_biderivation(const LieAlgebroid& L, int degree, const TrioleAlgebra& alg,
                                   const std::vector<PolyMat>& H = {});

struct DegMinus1Extraction {
  LieAlgebroid algebroid;
  Report algebroid_report;
  std::vector<GradedDerivation> Z;  // {e_alpha, -} as degree zero derivations
  Report z_report;
  Report f_compat;  // Jacobi on (P, A, Q)
  bool valid() const { return algebroid_report.valid && z_report.valid && f_compat.valid; }
  nlohmann::json to_json() const;
};
DegMinus1Extraction algebroid_from_deg_minus1(const BiDerivation& Pi, const TrioleAlgebra& alg, int max_degree = 2);

struct DegMinus2Extraction {
  LieAlgebroid algebroid;
  Report report;
  nlohmann::json to_json() const;
};
DegMinus2Extraction algebroid_from_deg_minus2(const BiDerivation& Pi, const TrioleAlgebra& alg);

}  // namespace triolex
