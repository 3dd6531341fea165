#pragma once

#include <stdexcept>
#include <string>

#include "triolex/connection.hpp"
#include "triolex/poisson.hpp"
#include "triolex/tridiffop.hpp"

namespace triolex {

// Thrown for malformed input: bad polynomial syntax, wrong shapes, missing keys.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Polynomials are written as strings in x0..x{n-1}, e.g. "3/2*x0^2*x1 - x2 + 1".
// With xi_offset >= 0 the names xi0, xi1, ... denote variables xi_offset, xi_offset + 1, ...
Poly parse_poly(const std::string& s, int n_vars, int xi_offset = -1);
// x0..x{n-1}, xi0..xi{n-1}
std::vector<std::string> symbol_names(int n);
Rational parse_rational(const std::string& s);

nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const PolyVec& v);
nlohmann::json to_json(const PolyMat& m);
nlohmann::json to_json(const std::vector<PolyMat>& t);
nlohmann::json to_json(const RatMat& m);
nlohmann::json to_json(const ScalarDerivation& X);
nlohmann::json to_json(const PolyDiffOp& D);
nlohmann::json to_json(const MatDiffOp& D);
nlohmann::json to_json(const SymbolTensor& s);
nlohmann::json to_json(const TrioleAlgebra& alg);
nlohmann::json to_json(const TrioleElement& t);
nlohmann::json to_json(const GradedDerivation& X);
nlohmann::json to_json(const TriConnection& C);
nlohmann::json to_json(const BiDerivation& Pi);
nlohmann::json to_json(const TriDiffOp& D);
nlohmann::json to_json(const TruncatedTriModule& R);
nlohmann::json to_json(const TrioleMorphism& m);
nlohmann::json to_json(const LieAlgebroid& L);
nlohmann::json to_json(const PForm& w);

Poly poly_from_json(const nlohmann::json& j, int n);
PolyVec polyvec_from_json(const nlohmann::json& j, int n, int len = -1);
PolyMat polymat_from_json(const nlohmann::json& j, int n, int rows = -1, int cols = -1);
RatMat ratmat_from_json(const nlohmann::json& j);
ScalarDerivation derivation_from_json(const nlohmann::json& j, int n);
PolyDiffOp polydiffop_from_json(const nlohmann::json& j, int n);
MatDiffOp matdiffop_from_json(const nlohmann::json& j, int n, int rows = -1, int cols = -1);
SymbolTensor symbol_from_json(const nlohmann::json& j);
TrioleAlgebra algebra_from_json(const nlohmann::json& j);
TrioleElement element_from_json(const nlohmann::json& j, const TrioleAlgebra& alg);
GradedDerivation graded_derivation_from_json(const nlohmann::json& j, const TrioleAlgebra& alg);
TriConnection connection_from_json(const nlohmann::json& j, const TrioleAlgebra& alg);
BiDerivation biderivation_from_json(const nlohmann::json& j, const TrioleAlgebra& alg);
TriDiffOp tridiffop_from_json(const nlohmann::json& j, const TrioleAlgebra& alg);
TruncatedTriModule module_from_json(const nlohmann::json& j, const TrioleAlgebra& alg);
TrioleMorphism morphism_from_json(const nlohmann::json& j, int n);
LieAlgebroid algebroid_from_json(const nlohmann::json& j);
PForm pform_from_json(const nlohmann::json& j);

}  // namespace triolex
