#pragma once

#include "support.hpp"
#include "triolex/module.hpp"
#include "triolex/tridiffop.hpp"

namespace triolex::testing {

inline ScalarDerivation random_vector_field(Rng& rng, int n, int max_deg) {
  return ScalarDerivation(random_vec(rng, n, n, max_deg));
}

// degree 0 derivations of the identity metric (mQ = 1): G = h/2 + skew, H = h
inline GradedDerivation random_deg0_identity(Rng& rng, const TrioleAlgebra& alg) {
  const int n = alg.n, m = alg.mP;
  Poly h = random_poly(rng, n, 1);
  PolyMat G = zero_matrix(n, m, m);
  for (int i = 0; i < m; ++i) {
    G[i][i] = h * Rational(1, 2);
    for (int j = i + 1; j < m; ++j) {
      Poly s = random_poly(rng, n, 1, 2);
      G[i][j] = s;
      G[j][i] = -s;
    }
  }
  return GradedDerivation::degree0(random_vector_field(rng, n, 2), G, PolyMat{{h}});
}

// degree 0 derivations of the 2x2 alternating metric: tr G = h
inline GradedDerivation random_deg0_alternating(Rng& rng, const TrioleAlgebra& alg) {
  const int n = alg.n;
  Poly h = random_poly(rng, n, 1);
  PolyMat G = random_matrix(rng, n, 2, 2, 1);
  G[1][1] = h - G[0][0];
  return GradedDerivation::degree0(random_vector_field(rng, n, 2), G, PolyMat{{h}});
}

inline GradedDerivation random_deg1(Rng& rng, const TrioleAlgebra& alg) {
  std::vector<ScalarDerivation> XA1;
  for (int a = 0; a < alg.mP; ++a) XA1.push_back(random_vector_field(rng, alg.n, 1));
  return make_degree1(alg, XA1, random_matrix(rng, alg.n, alg.mQ, alg.mP, 1));
}

inline GradedDerivation random_deg2(Rng& rng, const TrioleAlgebra& alg) {
  std::vector<ScalarDerivation> XA2;
  for (int A = 0; A < alg.mQ; ++A) XA2.push_back(random_vector_field(rng, alg.n, 2));
  return GradedDerivation::degree2(XA2);
}

// sum of a scalar operator of order exactly k and a degree 0 derivation: valid at order max(k, 1)
inline TriDiffOp random_deg0_op(Rng& rng, const TrioleAlgebra& alg, int k) {
  TriDiffOp S = TriDiffOp::scalar(random_diffop_exact(rng, alg.n, k, 1), alg);
  TriDiffOp X = from_derivation(random_deg0_identity(rng, alg), alg);
  return TriDiffOp::degree0(S.DA + X.DA, S.DP + X.DP, S.DQ + X.DQ);
}

}  // namespace triolex::testing
