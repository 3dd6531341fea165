#pragma once

#include <string>
#include <vector>

#include "triolex/diffop.hpp"
#include "triolex/linalg.hpp"
#include "triolex/report.hpp"

namespace triolex {

enum class Convention { plain, koszul, none };

std::string to_string(Convention c);
Convention convention_from_string(const std::string& s);

// A (+) (P,g) (+) Q with P, Q free of ranks mP, mQ over A = Q[x_0..x_{n-1}].
// g[A][alpha][beta] is the coefficient of eps_A in g(e_alpha, e_beta).
struct TrioleAlgebra {
  int n = 0;
  int mP = 0;
  int mQ = 0;
  Convention convention = Convention::plain;
  std::vector<PolyMat> g;

  TrioleAlgebra() = default;
  TrioleAlgebra(int n_vars, int mP, int mQ, Convention c = Convention::plain);

  static TrioleAlgebra identity(int n_vars, int mP);
  static TrioleAlgebra alternating(int n_vars);

  Poly& at(int A, int a, int b) { return g[A][a][b]; }
  const Poly& at(int A, int a, int b) const { return g[A][a][b]; }

  Poly zero() const { return Poly(n); }
  PolyVec zero_p() const { return PolyVec(mP, Poly(n)); }
  PolyVec zero_q() const { return PolyVec(mQ, Poly(n)); }
  PolyVec unit_p(int alpha) const;
  PolyVec unit_q(int A) const;

  // g(p1, p2) as a Q-vector
  PolyVec pair(const PolyVec& p1, const PolyVec& p2) const;
  void check_shapes() const;
  bool operator==(const TrioleAlgebra& o) const;
};

struct TrioleElement {
  Poly a;
  PolyVec p;
  PolyVec q;

  static TrioleElement zero(const TrioleAlgebra& alg);
  static TrioleElement from_a(const TrioleAlgebra& alg, const Poly& a);
  static TrioleElement from_p(const TrioleAlgebra& alg, const PolyVec& p);
  static TrioleElement from_q(const TrioleAlgebra& alg, const PolyVec& q);

  TrioleElement operator+(const TrioleElement& o) const;
  TrioleElement operator-(const TrioleElement& o) const;
  TrioleElement scaled(const Rational& c) const;
  bool operator==(const TrioleElement& o) const { return a == o.a && p == o.p && q == o.q; }
  bool operator!=(const TrioleElement& o) const { return !(*this == o); }
  bool is_zero() const;
  // -1 when the element mixes degrees or is zero
  int homogeneous_degree() const;
};

TrioleElement multiply(const TrioleElement& t1, const TrioleElement& t2, const TrioleAlgebra& alg);

// 1, x_i and their products with the module bases, homogeneous
std::vector<TrioleElement> monomial_test_basis(const TrioleAlgebra& alg, int max_degree);

bool is_symmetric(const TrioleAlgebra& alg);
bool is_alternating(const TrioleAlgebra& alg);

Report validate_algebra(const TrioleAlgebra& alg);

// rows indexed by (A, beta) -> A*mP + beta, columns by alpha; entry g[A][alpha][beta]
PolyMat adjoint_matrix(const TrioleAlgebra& alg);
MatDiffOp adjoint_map(const TrioleAlgebra& alg);
bool is_nondegenerate(const TrioleAlgebra& alg);
PolyVec quadratic_from_bilinear(const TrioleAlgebra& alg, const PolyVec& p);

struct TrioleMorphism {
  PolyMat psi1;  // mP' x mP
  PolyMat psi2;  // mQ' x mQ
};

enum class MorphismKind { morphism, isometry, similarity, invalid };
std::string to_string(MorphismKind k);

struct MorphismReport {
  MorphismKind kind = MorphismKind::invalid;
  Report report;
};

MorphismReport validate_morphism(const TrioleMorphism& psi, const TrioleAlgebra& src, const TrioleAlgebra& dst);

TrioleAlgebra gauge_act(const PolyMat& rho_P, const PolyMat& rho_Q, const TrioleAlgebra& alg);

TrioleAlgebra orthogonal_sum(const TrioleAlgebra& a, const TrioleAlgebra& b);
TrioleAlgebra triolic_product(const TrioleAlgebra& a, const TrioleAlgebra& b);
TrioleAlgebra determinant_triole(const TrioleAlgebra& alg);
// (id, det psi1, psi2^{(x)mP}) between the determinant trioles
TrioleMorphism determinant_morphism(const TrioleMorphism& psi, int mP);
TrioleAlgebra free_symmetric_triole(int m, int n_vars);
TrioleAlgebra free_alternating_triole(int m, int n_vars);
TrioleAlgebra base_change(const TrioleAlgebra& alg, const PolyVec& images);
TrioleMorphism base_change(const TrioleMorphism& psi, const PolyVec& images);

Convention sum_convention(Convention a, Convention b);
Convention product_convention(Convention a, Convention b);

struct Submodule {
  std::vector<PolyVec> generators;
};

Submodule orthogonal_complement(const Submodule& S, const TrioleAlgebra& alg);
bool contains(const Submodule& S, const PolyVec& v);

enum class LagrangianClass { none, sub_lagrangian, lagrangian };
std::string to_string(LagrangianClass c);
LagrangianClass lagrangian_classify(const Submodule& S, const TrioleAlgebra& alg);

}  // namespace triolex
