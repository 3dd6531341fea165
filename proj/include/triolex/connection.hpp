#pragma once

#include <map>
#include <vector>

#include "triolex/derivation.hpp"

namespace triolex {

// Gamma[i][alpha][beta] is the coefficient of e_beta in nabla_i(e_alpha),
// Upsilon[i][A][B] the coefficient of eps_B in Delta_i(eps_A).
// On coordinates the connection acts by (nabla_i p)^beta = d_i p^beta + sum_alpha Gamma[i][alpha][beta] p^alpha.
struct TriConnection {
  std::vector<PolyMat> Gamma;
  std::vector<PolyMat> Upsilon;

  static TriConnection zero(const TrioleAlgebra& alg);
  int n() const { return static_cast<int>(Gamma.size()); }
  bool operator==(const TriConnection& o) const { return Gamma == o.Gamma && Upsilon == o.Upsilon; }
};

void check_shapes(const TriConnection& C, const TrioleAlgebra& alg);

// M_i = Gamma_i^T, the matrix acting on coordinate columns
PolyMat acting_matrix(const std::vector<PolyMat>& Gamma, int i);
std::vector<PolyMat> from_acting(const std::vector<PolyMat>& M);

// nabla_{d_i} as a degree zero derivation (d_i, M_i, Upsilon_i^T)
GradedDerivation connection_derivation(const TriConnection& C, int i, const TrioleAlgebra& alg);

// residual[i][B] is the mP x mP matrix of the g-compatibility defect
std::vector<std::vector<PolyMat>> compat_residual(const TriConnection& C, const TrioleAlgebra& alg);
bool is_metric(const TriConnection& C, const TrioleAlgebra& alg);

struct CurvatureTensor {
  // RP[i][j][alpha][beta], RQ[i][j][A][B]
  std::vector<std::vector<PolyMat>> RP, RQ;
  bool is_zero() const;
};

std::vector<std::vector<PolyMat>> curvature_of(const std::vector<PolyMat>& Gamma);
CurvatureTensor curvature(const TriConnection& C);

// the compatibility identity restricted to im(g); E[i][j][D] is an mP x mP matrix
std::vector<std::vector<std::vector<PolyMat>>> img_flatness(const TriConnection& C, const TrioleAlgebra& alg);

struct FlatReport {
  bool flat = false;
  bool rp_zero = false;
  bool rq_zero = false;
  bool img_identity = false;  // direct evaluation of the im(g) identity
  bool implied = false;       // g . RQ reproduces the identity when compat vanishes
  bool metric = false;
  Report report;
  nlohmann::json to_json() const;
};

FlatReport flat_check(const TriConnection& C, const TrioleAlgebra& alg);

// residual[i][j][alpha], polynomials in x_0..x_{n-1}, u^0..u^{m-1}
std::vector<std::vector<PolyVec>> linear_vectorfield_residual(const std::vector<PolyMat>& Gamma);

enum class InducedKind { dual, tensorP, end, bil };
InducedKind induced_kind_from_string(const std::string& s);

std::vector<PolyMat> dual_connection(const std::vector<PolyMat>& Gamma);
// index alpha * m' + alpha'
std::vector<PolyMat> tensor_connection(const std::vector<PolyMat>& Gamma, const std::vector<PolyMat>& Gamma2);
// End(P) = P (x) P^*, index beta * m + alpha for the entry phi[beta][alpha]
std::vector<PolyMat> end_connection(const std::vector<PolyMat>& Gamma);
// Bil(P, Q) = P^* (x) P^* (x) Q, index (alpha * mP + beta) * mQ + A
std::vector<PolyMat> bil_connection(const TriConnection& C);
std::vector<PolyMat> induced_connection(const TriConnection& C, InducedKind kind);

// covariant derivative of a section s of the module carrying Gamma
PolyVec covariant_derivative(const std::vector<PolyMat>& Gamma, int i, const PolyVec& s);

struct PForm {
  int n = 0;
  int k = 0;
  int m = 0;
  // keyed by strictly increasing index tuples; absent keys are zero
  std::map<std::vector<int>, PolyVec> coeffs;

  static PForm zero(int n, int k, int m);
  static PForm section(const PolyVec& p, int n);
  PolyVec value(const std::vector<int>& idx) const;  // any order, antisymmetrised
  void set(const std::vector<int>& sorted_idx, const PolyVec& v);
  bool is_zero() const;
  bool operator==(const PForm& o) const;
  PForm scaled(const Poly& a) const;
  PForm operator+(const PForm& o) const;
};

std::vector<std::vector<int>> k_subsets(int n, int k);

PForm covariant_d(const PForm& w, const std::vector<PolyMat>& Gamma);
PForm curvature_wedge(const std::vector<std::vector<PolyMat>>& R, const PForm& w);

struct DSquaredReport {
  bool equal = true;
  bool vacuous = false;
  PForm dd, rw;
};
DSquaredReport d_squared_vs_curvature(const PForm& w, const std::vector<PolyMat>& Gamma);

std::vector<PolyVec> nabla_constant_sections(const std::vector<PolyMat>& Gamma, int d_max);

// Gamma for M_i = S^{-1} d_i S, S invertible over A
std::vector<PolyMat> pure_gauge(const PolyMat& S);
// M_i -> S^{-1} M_i S + S^{-1} d_i S
std::vector<PolyMat> gauge_transform(const std::vector<PolyMat>& Gamma, const PolyMat& S);

bool preserves_endomorphism(const std::vector<PolyMat>& Gamma, const PolyMat& phi);

// acting matrices on P^{(x)p} (x) P^{*(x)q}, contravariant slots first; p + q <= 3
std::vector<PolyMat> valence_acting(const std::vector<PolyMat>& Gamma, int p, int q);
bool preserves_tensor(const std::vector<PolyMat>& Gamma, int p, int q, const PolyVec& xi);

struct GaugeSearch {
  int dimension = 0;
  std::vector<RatMat> basis;  // constant Gamma matrices, [alpha][beta]
  nlohmann::json to_json() const;
};
GaugeSearch gauge_structure_search(const RatVec& xi, int m, int p, int q);

enum class SymmetryKind { orthogonal_inf, commutant, orthogonal_group };
SymmetryKind symmetry_kind_from_string(const std::string& s);

// phi[gamma][alpha] is the coefficient of e_gamma in phi(e_alpha); b[A][alpha][beta] as for g
bool is_orthogonal_inf(const PolyMat& phi, const std::vector<PolyMat>& b);
bool is_commutant(const PolyMat& Phi, const PolyMat& psi);
bool is_orthogonal_group(const PolyMat& Phi, const std::vector<PolyMat>& b);

}  // namespace triolex
