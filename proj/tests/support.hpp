#pragma once

#include <random>
#include <vector>

#include "triolex/connection.hpp"
#include "triolex/diffop.hpp"
#include "triolex/symbol.hpp"

namespace triolex::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational small_rational(Rng& rng) {
  int num = uniform(rng, -5, 5);
  int den = uniform(rng, 1, 3);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Exp random_exp(Rng& rng, int n, int max_deg) {
  Exp e(n, 0);
  int budget = uniform(rng, 0, max_deg);
  for (int k = 0; k < budget; ++k) e[uniform(rng, 0, n - 1)]++;
  return e;
}

inline Poly random_poly(Rng& rng, int n, int max_deg, int max_terms = 4) {
  Poly p(n);
  int terms = uniform(rng, 0, max_terms);
  for (int t = 0; t < terms; ++t) {
    Rational c = small_rational(rng);
    p.add_term(random_exp(rng, n, max_deg), c);
  }
  return p;
}

inline Poly random_nonzero_poly(Rng& rng, int n, int max_deg) {
  for (;;) {
    Poly p = random_poly(rng, n, max_deg, 3);
    if (!p.is_zero()) return p;
  }
}

inline PolyDiffOp random_diffop(Rng& rng, int n, int order, int coeff_deg, int max_terms = 4) {
  PolyDiffOp D(n);
  int terms = uniform(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) D.add_term(random_exp(rng, n, order), random_poly(rng, n, coeff_deg, 2));
  return D;
}

// order exactly k (a nonzero top coefficient is forced)
inline PolyDiffOp random_diffop_exact(Rng& rng, int n, int k, int coeff_deg) {
  PolyDiffOp D = random_diffop(rng, n, k, coeff_deg);
  Exp top(n, 0);
  for (int j = 0; j < k; ++j) top[uniform(rng, 0, n - 1)]++;
  D.add_term(top, random_nonzero_poly(rng, n, coeff_deg));
  if (D.order() != k) return random_diffop_exact(rng, n, k, coeff_deg);
  return D;
}

inline PolyMat random_matrix(Rng& rng, int n, int rows, int cols, int max_deg, int max_terms = 2) {
  PolyMat m(rows, PolyVec(cols, Poly(n)));
  for (auto& row : m)
    for (auto& e : row) e = random_poly(rng, n, max_deg, max_terms);
  return m;
}

inline PolyVec random_vec(Rng& rng, int n, int len, int max_deg) {
  PolyVec v(len, Poly(n));
  for (auto& e : v) e = random_poly(rng, n, max_deg, 3);
  return v;
}

inline RatMat random_unimodular(Rng& rng, int m) {
  // product of elementary matrices, determinant 1
  RatMat S(m, RatVec(m, 0));
  for (int i = 0; i < m; ++i) S[i][i] = 1;
  for (int step = 0; step < 3 * m; ++step) {
    int i = uniform(rng, 0, m - 1), j = uniform(rng, 0, m - 1);
    if (i == j) continue;
    Rational c = uniform(rng, -2, 2);
    for (int k = 0; k < m; ++k) S[i][k] += c * S[j][k];
  }
  return S;
}

inline PolyMat to_poly(const RatMat& m, int n) {
  PolyMat out(m.size(), PolyVec(m.empty() ? 0 : m[0].size(), Poly(n)));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out[i][j] = Poly::constant(n, m[i][j]);
  return out;
}

inline Poly x(int n, int i) { return Poly::var(n, i); }
inline Poly c(int n, const Rational& v) { return Poly::constant(n, v); }

inline Exp ex(std::initializer_list<int> e) { return Exp(e); }

}  // namespace triolex::testing

namespace triolex::testing {

// Recovers the normal-ordered coefficients of an operator of order <= k from its
// action on the monomials x^sigma, |sigma| <= k:
//   D(x^sigma) = sum_tau c_tau d^tau x^sigma, triangular in sigma.
template <class Action>
PolyDiffOp operator_from_action(Action&& act, int n, int k) {
  PolyDiffOp out(n);
  for (const Exp& sigma : multi_indices_upto(n, k)) {
    Poly mono = Poly::monomial(sigma);
    Poly rest = act(mono) - out.apply(mono);
    Rational fact = 1;
    for (int e : sigma)
      for (int j = 2; j <= e; ++j) fact *= j;
    // d^sigma x^sigma = sigma!, lower terms already accounted for
    out.add_term(sigma, rest * Rational(1 / fact));
  }
  return out;
}

// random symmetric (plain) or skew (koszul) metric
inline TrioleAlgebra random_metric(Rng& rng, int n, int mP, int mQ, Convention conv, int max_deg = 1) {
  TrioleAlgebra alg(n, mP, mQ, conv);
  for (int A = 0; A < mQ; ++A)
    for (int a = 0; a < mP; ++a)
      for (int b = a; b < mP; ++b) {
        if (conv == Convention::koszul && a == b) continue;
        Poly v = random_poly(rng, n, max_deg, 2);
        alg.at(A, a, b) = v;
        alg.at(A, b, a) = conv == Convention::koszul ? -v : v;
      }
  return alg;
}

inline std::vector<Poly> monomials_upto(int n, int k) {
  std::vector<Poly> out;
  for (const Exp& e : multi_indices_upto(n, k)) out.push_back(Poly::monomial(e));
  return out;
}

}  // namespace triolex::testing
