#pragma once

#include <optional>
#include <vector>

#include "triolex/poly.hpp"

namespace triolex {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

PolyMat zero_matrix(int n_vars, int rows, int cols);
PolyMat identity_matrix(int n_vars, int r);
PolyMat matmul(const PolyMat& a, const PolyMat& b);
PolyVec matvec(const PolyMat& a, const PolyVec& v);
PolyMat transpose(const PolyMat& a);
PolyMat kronecker(const PolyMat& a, const PolyMat& b);
bool is_zero(const PolyMat& a);
bool is_zero(const PolyVec& v);

// Fraction-free elimination over Q[x]; ranks and determinants are those over the fraction field.
int rank(const PolyMat& m);
Poly det(const PolyMat& m);

// Basis of {v : m v = 0} over the fraction field, each vector with polynomial entries.
std::vector<PolyVec> kernel(const PolyMat& m, int cols, int n_vars);

// true when v lies in the fraction-field span of gens
bool in_span(const std::vector<PolyVec>& gens, const PolyVec& v);

// inverse over A, present only when det is a nonzero constant
std::optional<PolyMat> inverse_over_ring(const PolyMat& m);
bool is_unit(const Poly& p);

// exact rational linear algebra
RatMat rref(RatMat m, std::vector<int>* pivots = nullptr);
std::vector<RatVec> rational_kernel(const RatMat& m, int cols);
// particular solution of m x = b, if one exists
std::optional<RatVec> rational_solve(const RatMat& m, const RatVec& b);

}  // namespace triolex
