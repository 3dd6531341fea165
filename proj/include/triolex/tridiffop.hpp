#pragma once

#include <map>
#include <string>
#include <vector>

#include "triolex/module.hpp"
#include "triolex/symbol.hpp"

namespace triolex {

// Graded differential operator of degree 0, 1 or 2:
//   deg 0: DA (1x1), DP (mP x mP), DQ (mQ x mQ)
//   deg 1: DA1 (mP x 1), DP1 (mQ x mP)
//   deg 2: DA2 (mQ x 1)
struct TriDiffOp {
  int degree = 0;
  MatDiffOp DA, DP, DQ, DA1, DP1, DA2;

  static TriDiffOp zero(int degree, const TrioleAlgebra& alg);
  static TriDiffOp degree0(const MatDiffOp& DA, const MatDiffOp& DP, const MatDiffOp& DQ);
  static TriDiffOp degree1(const MatDiffOp& DA1, const MatDiffOp& DP1);
  static TriDiffOp degree2(const MatDiffOp& DA2);
  // D_A I on P and Q
  static TriDiffOp scalar(const PolyDiffOp& D, const TrioleAlgebra& alg);

  int order() const;
  bool operator==(const TriDiffOp& o) const;
};

ComponentOps to_ops(const TriDiffOp& D, const TrioleAlgebra& alg);
TriDiffOp from_ops(const ComponentOps& ops, const TrioleAlgebra& alg);
TriDiffOp from_derivation(const GradedDerivation& X, const TrioleAlgebra& alg);

TriDiffOp compose(const TriDiffOp& D, const TriDiffOp& E, const TrioleAlgebra& alg);
TrioleElement apply(const TriDiffOp& D, const TrioleElement& t, const TrioleAlgebra& alg);

// graded operators between truncated modules
ComponentOps compose_ops(const ComponentOps& D, const ComponentOps& E);
bool is_zero_ops(const ComponentOps& D);

struct Generator {
  std::string name;
  TrioleElement element;
};
// x_i, e_alpha, eps_A
std::vector<Generator> triole_generators(const TrioleAlgebra& alg);

// delta_s(D) = s o D - kappa^{|s||D|} D o s
ComponentOps delta_op(const ComponentOps& D, const TrioleElement& s, const TruncatedTriModule& src,
                      const TruncatedTriModule& dst, const TrioleAlgebra& alg);

// order <= k: every (k+1)-fold delta over generators vanishes; the witness names the failing word
Report validate_module_diffop(const ComponentOps& D, const TruncatedTriModule& src, const TruncatedTriModule& dst,
                              const TrioleAlgebra& alg, int k);
Report validate_diffop(const TriDiffOp& D, const TrioleAlgebra& alg, int k);

struct AtiyahDecomposition {
  PolyDiffOp scalar;
  MatDiffOp kernel_P, kernel_Q;
  bool kernel_order_ok = false;
  bool g_relation = false;
  bool reassembles = false;
  nlohmann::json witness;
  bool ok() const { return kernel_order_ok && g_relation && reassembles; }
};
AtiyahDecomposition atiyah_k_decompose(const TriDiffOp& D, const TrioleAlgebra& alg, int k);

// nondecreasing words of length len in 0..count-1
std::vector<std::vector<int>> nondecreasing_words(int count, int len);

// (delta_{f_1..f_{k-1}} D_P, delta_{f..} D_Q) with the value at 1 removed, as a degree 0 derivation
GradedDerivation symbol_deg0_tensor(const TriDiffOp& D, const std::vector<Poly>& fs, const TrioleAlgebra& alg);
// true when the tensor vanishes on all coordinate tuples of length k-1
bool symbol_deg0_vanishes(const TriDiffOp& D, int k, const TrioleAlgebra& alg);

// delta_{a_1..a_{k-1}} of a degree 1 operator with the multiplication part removed
GradedDerivation symbol_deg1_tensor(const TriDiffOp& D, const std::vector<Poly>& as, const TrioleAlgebra& alg);
bool symbol_deg1_vanishes(const TriDiffOp& D, int k, const TrioleAlgebra& alg);

// symmetric Q-valued k-tensor: comps[I] for nondecreasing words I of coordinate indices
struct QSymTensor {
  int n = 0, k = 0, mQ = 0;
  std::map<std::vector<int>, PolyVec> comps;
  bool operator==(const QSymTensor& o) const { return n == o.n && k == o.k && mQ == o.mQ && comps == o.comps; }
};

// t^I = (-1)^k delta_I D_A2
QSymTensor gamma_deg2(const MatDiffOp& DA2, int k);
// (1/k!) sum over words I of t^I xi_I
SymbolTensor mu_deg2(const QSymTensor& t);

struct Deg2Symbol {
  QSymTensor tensor;
  SymbolTensor symbol;
  bool round_trip = false;
};
Deg2Symbol symbol_deg2_tensor(const TriDiffOp& D, int k, const TrioleAlgebra& alg);

}  // namespace triolex
