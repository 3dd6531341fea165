#include "triolex/serialize.hpp"

#include <cctype>

namespace triolex {

using nlohmann::json;

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& s, int n, int xi_offset) : s_(s), n_(n), xi_(xi_offset) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SchemaError("polynomial \"" + s_ + "\": " + what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  Poly expr() {
    Poly acc(n_);
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    Poly t = term();
    acc = negate ? -t : t;
    while (true) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = power();
    while (true) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        acc = acc * power();
      } else if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        const Rational d{mpz_class(digits())};
        if (d == 0) fail("division by zero");
        acc *= Rational(1) / d;
      } else {
        break;
      }
    }
    return acc;
  }

  Poly power() {
    Poly base = atom();
    if (eat('^')) {
      const std::string e = digits();
      if (e.size() > 6) fail("exponent too large");
      base = base.pow(std::stoi(e));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly(n_, Rational(mpz_class(digits())));
    if (c == 'x') {
      ++pos_;
      const bool xi = pos_ < s_.size() && s_[pos_] == 'i';
      if (xi) {
        if (xi_ < 0) fail("xi variables are only allowed in symbols");
        ++pos_;
      }
      const std::string d = digits();
      if (d.size() > 6) fail("variable index too large");
      const int i = std::stoi(d) + (xi ? xi_ : 0);
      if (xi && i >= n_) fail("variable xi" + d + " out of range");
      if (i >= n_) fail("variable x" + d + " outside x0..x" + std::to_string(n_ - 1));
      return Poly::var(n_, i);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  int n_;
  int xi_;
  std::size_t pos_ = 0;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw SchemaError(what);
}

const json& field(const json& j, const char* key) {
  require(j.is_object(), std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  require(it != j.end(), std::string("missing key '") + key + "'");
  return *it;
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  require(v.is_number_integer(), std::string("key '") + key + "' must be an integer");
  return v.get<int>();
}

Exp exp_from_json(const json& j, int n) {
  require(j.is_array() && static_cast<int>(j.size()) == n, "multi-index must have one entry per variable");
  Exp e;
  for (const auto& v : j) {
    require(v.is_number_integer() && v.get<int>() >= 0, "multi-index entries must be nonnegative integers");
    e.push_back(v.get<int>());
  }
  return e;
}

json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  require(j.is_string(), "integers are JSON numbers or digit strings");
  try {
    return mpz_class(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw SchemaError("malformed integer \"" + j.get<std::string>() + "\"");
  }
}

std::vector<ScalarDerivation> derivations_from_json(const json& j, int n, int len) {
  require(j.is_array() && static_cast<int>(j.size()) == len, "derivation list has the wrong length");
  std::vector<ScalarDerivation> out;
  for (const auto& d : j) out.push_back(derivation_from_json(d, n));
  return out;
}

json derivations_json(const std::vector<ScalarDerivation>& ds) {
  json j = json::array();
  for (const auto& d : ds) j.push_back(to_json(d));
  return j;
}

std::vector<PolyMat> tensor_from_json(const json& j, int n, int len, int rows, int cols) {
  require(j.is_array() && static_cast<int>(j.size()) == len, "tensor has the wrong number of slices");
  std::vector<PolyMat> out;
  for (const auto& m : j) out.push_back(polymat_from_json(m, n, rows, cols));
  return out;
}

}  // namespace

Poly parse_poly(const std::string& s, int n_vars, int xi_offset) { return PolyParser(s, n_vars, xi_offset).parse(); }

std::vector<std::string> symbol_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 0; i < n; ++i) names.push_back("xi" + std::to_string(i));
  return names;
}

Rational parse_rational(const std::string& s) {
  try {
    Rational r(s);
    r.canonicalize();
    if (r.get_den() == 0) throw SchemaError("zero denominator");
    return r;
  } catch (const std::invalid_argument&) {
    throw SchemaError("malformed rational \"" + s + "\"");
  }
}

json to_json(const Poly& p) {
  json j = json::array();
  for (const auto& [e, c] : p.terms()) j.push_back(json{{"exp", e}, {"num", integer_json(c.get_num())}, {"den", integer_json(c.get_den())}});
  return j;
}

json to_json(const PolyVec& v) {
  json j = json::array();
  for (const auto& p : v) j.push_back(to_json(p));
  return j;
}

json to_json(const PolyMat& m) {
  json j = json::array();
  for (const auto& r : m) j.push_back(to_json(r));
  return j;
}

json to_json(const std::vector<PolyMat>& t) {
  json j = json::array();
  for (const auto& m : t) j.push_back(to_json(m));
  return j;
}

json to_json(const RatMat& m) {
  json j = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const auto& c : r) row.push_back(c.get_str());
    j.push_back(row);
  }
  return j;
}

json to_json(const ScalarDerivation& X) { return to_json(X.coeffs); }

json to_json(const PolyDiffOp& D) {
  json j = json::array();
  for (const auto& [sigma, c] : D.terms()) j.push_back(json{{"dexp", sigma}, {"coeff", to_json(c)}});
  return j;
}

json to_json(const MatDiffOp& D) {
  json entries = json::array();
  for (int r = 0; r < D.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < D.cols(); ++c) row.push_back(to_json(D.at(r, c)));
    entries.push_back(row);
  }
  return json{{"rows", D.rows()}, {"cols", D.cols()}, {"entries", entries}};
}

json to_json(const SymbolTensor& s) {
  return json{{"n", s.n_vars()}, {"k", s.degree_k()}, {"entries", to_json(s.entries())}};
}

json to_json(const TrioleAlgebra& alg) {
  return json{{"n", alg.n}, {"mP", alg.mP}, {"mQ", alg.mQ}, {"convention", to_string(alg.convention)},
              {"g", to_json(alg.g)}};
}

json to_json(const TrioleElement& t) { return json{{"a", to_json(t.a)}, {"p", to_json(t.p)}, {"q", to_json(t.q)}}; }

json to_json(const GradedDerivation& X) {
  json j{{"deg", X.degree}};
  switch (X.degree) {
    case 0:
      j["XA"] = to_json(X.XA);
      j["G"] = to_json(X.G);
      j["H"] = to_json(X.H);
      break;
    case 1:
      j["XA1"] = derivations_json(X.XA1);
      j["Xp"] = to_json(X.Xp);
      break;
    case 2: j["XA2"] = derivations_json(X.XA2); break;
    case -1:
      j["phi"] = to_json(X.phi);
      j["psi"] = to_json(X.psi);
      break;
    default: throw SchemaError("derivation degree outside -1..2");
  }
  return j;
}

json to_json(const TriConnection& C) { return json{{"Gamma", to_json(C.Gamma)}, {"Upsilon", to_json(C.Upsilon)}}; }

json to_json(const BiDerivation& Pi) {
  json blocks = json::object();
  for (const auto& [jk, terms] : Pi.blocks) {
    json arr = json::array();
    for (const auto& [t, c] : terms) {
      if (c.is_zero()) continue;
      arr.push_back(json{{"out", t.out}, {"a", t.a}, {"b", t.b}, {"sigma", t.sigma}, {"tau", t.tau}, {"coeff", to_json(c)}});
    }
    if (!arr.empty()) blocks[block_name(jk.first, jk.second)] = arr;
  }
  return json{{"deg", Pi.degree}, {"blocks", blocks}};
}

json to_json(const TriDiffOp& D) {
  json j{{"deg", D.degree}};
  switch (D.degree) {
    case 0:
      j["DA"] = to_json(D.DA);
      j["DP"] = to_json(D.DP);
      j["DQ"] = to_json(D.DQ);
      break;
    case 1:
      j["DA1"] = to_json(D.DA1);
      j["DP1"] = to_json(D.DP1);
      break;
    case 2: j["DA2"] = to_json(D.DA2); break;
    default: throw SchemaError("operator degree outside 0..2");
  }
  return j;
}

json to_json(const TruncatedTriModule& R) {
  return json{{"ranks", {R.r0, R.r1, R.r2}}, {"lam0", to_json(R.lam0)}, {"lam1", to_json(R.lam1)}, {"nu", to_json(R.nu)}};
}

json to_json(const TrioleMorphism& m) { return json{{"psi1", to_json(m.psi1)}, {"psi2", to_json(m.psi2)}}; }

json to_json(const LieAlgebroid& L) {
  return json{{"rank", L.rank}, {"n", L.n}, {"c", to_json(L.c)}, {"anchor", derivations_json(L.anchor)}};
}

json to_json(const PForm& w) {
  json coeffs = json::array();
  for (const auto& [idx, v] : w.coeffs) {
    if (is_zero(v)) continue;
    coeffs.push_back(json{{"idx", idx}, {"value", to_json(v)}});
  }
  return json{{"n", w.n}, {"k", w.k}, {"m", w.m}, {"coeffs", coeffs}};
}

Poly poly_from_json(const json& j, int n) {
  if (j.is_number_integer()) return Poly(n, Rational(j.get<long>()));
  if (j.is_string()) return parse_poly(j.get<std::string>(), n);
  require(j.is_array(), "polynomial must be a term array, a string or an integer");
  Poly p(n);
  for (const auto& t : j) {
    const Exp e = exp_from_json(field(t, "exp"), n);
    const mpz_class num = integer_from_json(field(t, "num")), den = integer_from_json(field(t, "den"));
    require(den > 0, "denominators must be positive");
    Rational c(num, den);
    c.canonicalize();
    p.add_term(e, c);
  }
  return p;
}

PolyVec polyvec_from_json(const json& j, int n, int len) {
  require(j.is_array(), "expected an array of polynomials");
  require(len < 0 || static_cast<int>(j.size()) == len,
          "polynomial vector has length " + std::to_string(j.size()) + ", expected " + std::to_string(len));
  PolyVec v;
  for (const auto& p : j) v.push_back(poly_from_json(p, n));
  return v;
}

PolyMat polymat_from_json(const json& j, int n, int rows, int cols) {
  require(j.is_array(), "expected a matrix");
  require(rows < 0 || static_cast<int>(j.size()) == rows,
          "matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
  PolyMat m;
  int width = cols;
  for (const auto& r : j) {
    m.push_back(polyvec_from_json(r, n, width));
    width = static_cast<int>(m.back().size());
  }
  return m;
}

RatMat ratmat_from_json(const json& j) {
  require(j.is_array(), "expected a rational matrix");
  RatMat m;
  for (const auto& r : j) {
    require(r.is_array(), "expected a rational row");
    RatVec row;
    for (const auto& c : r) {
      if (c.is_number_integer())
        row.push_back(Rational(c.get<long>()));
      else {
        require(c.is_string(), "rational entries are integers or strings");
        row.push_back(parse_rational(c.get<std::string>()));
      }
    }
    require(m.empty() || row.size() == m[0].size(), "ragged rational matrix");
    m.push_back(row);
  }
  return m;
}

ScalarDerivation derivation_from_json(const json& j, int n) { return ScalarDerivation(polyvec_from_json(j, n, n)); }

PolyDiffOp polydiffop_from_json(const json& j, int n) {
  require(j.is_array(), "differential operator must be an array of terms");
  PolyDiffOp D(n);
  for (const auto& t : j) D.add_term(exp_from_json(field(t, "dexp"), n), poly_from_json(field(t, "coeff"), n));
  return D;
}

MatDiffOp matdiffop_from_json(const json& j, int n, int rows, int cols) {
  const int r = int_field(j, "rows"), c = int_field(j, "cols");
  require((rows < 0 || r == rows) && (cols < 0 || c == cols),
          "operator is " + std::to_string(r) + "x" + std::to_string(c) + ", expected " + std::to_string(rows) + "x" +
              std::to_string(cols));
  const json& e = field(j, "entries");
  require(e.is_array() && static_cast<int>(e.size()) == r, "operator entries do not match rows");
  MatDiffOp D(n, r, c);
  for (int a = 0; a < r; ++a) {
    require(e[a].is_array() && static_cast<int>(e[a].size()) == c, "operator entries do not match cols");
    for (int b = 0; b < c; ++b) D.at(a, b) = polydiffop_from_json(e[a][b], n);
  }
  return D;
}

SymbolTensor symbol_from_json(const json& j) {
  const int n = int_field(j, "n"), k = int_field(j, "k");
  require(n >= 0 && k >= 0, "symbol sizes must be nonnegative");
  const json& e = field(j, "entries");
  require(e.is_array(), "symbol entries must be a matrix");
  PolyMat m;
  for (const auto& r : e) {
    require(r.is_array() && (m.empty() || r.size() == m[0].size()), "symbol entries must be a matrix");
    PolyVec row;
    for (const auto& p : r) row.push_back(p.is_string() ? parse_poly(p.get<std::string>(), 2 * n, n) : poly_from_json(p, 2 * n));
    m.push_back(row);
  }
  try {
    return SymbolTensor(n, k, std::move(m));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

TrioleAlgebra algebra_from_json(const json& j) {
  const int n = int_field(j, "n"), mP = int_field(j, "mP"), mQ = int_field(j, "mQ");
  require(n >= 0 && mP >= 0 && mQ >= 0, "algebra sizes must be nonnegative");
  const json& cv = field(j, "convention");
  require(cv.is_string(), "convention must be a string");
  Convention c;
  try {
    c = convention_from_string(cv.get<std::string>());
  } catch (const std::exception&) {
    throw SchemaError("unknown convention \"" + cv.get<std::string>() + "\"");
  }
  TrioleAlgebra alg(n, mP, mQ, c);
  alg.g = tensor_from_json(field(j, "g"), n, mQ, mP, mP);
  return alg;
}

TrioleElement element_from_json(const json& j, const TrioleAlgebra& alg) {
  TrioleElement t;
  t.a = poly_from_json(field(j, "a"), alg.n);
  t.p = polyvec_from_json(field(j, "p"), alg.n, alg.mP);
  t.q = polyvec_from_json(field(j, "q"), alg.n, alg.mQ);
  return t;
}

GradedDerivation graded_derivation_from_json(const json& j, const TrioleAlgebra& alg) {
  const int n = alg.n, mP = alg.mP, mQ = alg.mQ;
  switch (int_field(j, "deg")) {
    case 0:
      return GradedDerivation::degree0(derivation_from_json(field(j, "XA"), n), polymat_from_json(field(j, "G"), n, mP, mP),
                                       polymat_from_json(field(j, "H"), n, mQ, mQ));
    case 1:
      return GradedDerivation::degree1(derivations_from_json(field(j, "XA1"), n, mP),
                                       matdiffop_from_json(field(j, "Xp"), n, mQ, mP));
    case 2: return GradedDerivation::degree2(derivations_from_json(field(j, "XA2"), n, mQ));
    case -1:
      return GradedDerivation::degree_minus1(polyvec_from_json(field(j, "phi"), n, mP),
                                             polymat_from_json(field(j, "psi"), n, mP, mQ));
  }
  throw SchemaError("derivation degree outside -1..2");
}

TriConnection connection_from_json(const json& j, const TrioleAlgebra& alg) {
  TriConnection C;
  C.Gamma = tensor_from_json(field(j, "Gamma"), alg.n, alg.n, alg.mP, alg.mP);
  C.Upsilon = tensor_from_json(field(j, "Upsilon"), alg.n, alg.n, alg.mQ, alg.mQ);
  return C;
}

BiDerivation biderivation_from_json(const json& j, const TrioleAlgebra& alg) {
  BiDerivation Pi = BiDerivation::zero(int_field(j, "deg"));
  const json& blocks = field(j, "blocks");
  require(blocks.is_object(), "blocks must be an object");
  for (const auto& [name, terms] : blocks.items()) {
    std::pair<int, int> jk;
    try {
      jk = block_from_name(name);
    } catch (const std::exception&) {
      throw SchemaError("unknown block \"" + name + "\"");
    }
    require(terms.is_array(), "block terms must be an array");
    for (const auto& t : terms) {
      const int out = int_field(t, "out"), a = int_field(t, "a"), b = int_field(t, "b");
      const int tgt = jk.first + jk.second + Pi.degree;
      require(tgt >= 0 && tgt <= 2, "block " + name + " leaves the grading");
      require(out >= 0 && out < component_rank(tgt, alg) && a >= 0 && a < component_rank(jk.first, alg) && b >= 0 &&
                  b < component_rank(jk.second, alg),
              "bracket term index out of range in block " + name);
      const Exp sigma = exp_from_json(field(t, "sigma"), alg.n), tau = exp_from_json(field(t, "tau"), alg.n);
      require(total_degree(sigma) <= 1 && total_degree(tau) <= 1, "bracket terms have order at most 1 in each slot");
      Pi.add_term(jk.first, jk.second, out, a, b, sigma, tau, poly_from_json(field(t, "coeff"), alg.n));
    }
  }
  return Pi;
}

TriDiffOp tridiffop_from_json(const json& j, const TrioleAlgebra& alg) {
  const int n = alg.n, mP = alg.mP, mQ = alg.mQ;
  switch (int_field(j, "deg")) {
    case 0:
      return TriDiffOp::degree0(matdiffop_from_json(field(j, "DA"), n, 1, 1), matdiffop_from_json(field(j, "DP"), n, mP, mP),
                                matdiffop_from_json(field(j, "DQ"), n, mQ, mQ));
    case 1:
      return TriDiffOp::degree1(matdiffop_from_json(field(j, "DA1"), n, mP, 1),
                                matdiffop_from_json(field(j, "DP1"), n, mQ, mP));
    case 2: return TriDiffOp::degree2(matdiffop_from_json(field(j, "DA2"), n, mQ, 1));
  }
  throw SchemaError("operator degree outside 0..2");
}

TruncatedTriModule module_from_json(const json& j, const TrioleAlgebra& alg) {
  const json& ranks = field(j, "ranks");
  require(ranks.is_array() && ranks.size() == 3, "ranks must list three integers");
  TruncatedTriModule R = TruncatedTriModule::zero(alg, ranks[0].get<int>(), ranks[1].get<int>(), ranks[2].get<int>());
  require(R.r0 >= 0 && R.r1 >= 0 && R.r2 >= 0, "ranks must be nonnegative");
  R.lam0 = tensor_from_json(field(j, "lam0"), alg.n, R.r1, alg.mP, R.r0);
  R.lam1 = tensor_from_json(field(j, "lam1"), alg.n, R.r2, alg.mP, R.r1);
  R.nu = tensor_from_json(field(j, "nu"), alg.n, R.r2, alg.mQ, R.r0);
  return R;
}

TrioleMorphism morphism_from_json(const json& j, int n) {
  return TrioleMorphism{polymat_from_json(field(j, "psi1"), n), polymat_from_json(field(j, "psi2"), n)};
}

LieAlgebroid algebroid_from_json(const json& j) {
  const int rank = int_field(j, "rank"), n = int_field(j, "n");
  require(rank >= 0 && n >= 0, "algebroid sizes must be nonnegative");
  LieAlgebroid L = LieAlgebroid::zero(rank, n);
  L.c = tensor_from_json(field(j, "c"), n, rank, rank, rank);
  L.anchor = derivations_from_json(field(j, "anchor"), n, rank);
  return L;
}

PForm pform_from_json(const json& j) {
  const int n = int_field(j, "n"), k = int_field(j, "k"), m = int_field(j, "m");
  require(n >= 0 && k >= 0 && k <= n && m >= 0, "form sizes out of range");
  PForm w = PForm::zero(n, k, m);
  const json& coeffs = field(j, "coeffs");
  require(coeffs.is_array(), "form coefficients must be an array");
  for (const auto& c : coeffs) {
    const auto idx = field(c, "idx").get<std::vector<int>>();
    require(static_cast<int>(idx.size()) == k, "form index has the wrong length");
    for (std::size_t a = 0; a < idx.size(); ++a)
      require(idx[a] >= 0 && idx[a] < n && (a == 0 || idx[a - 1] < idx[a]), "form index must increase strictly");
    w.set(idx, polyvec_from_json(field(c, "value"), n, m));
  }
  return w;
}

}  // namespace triolex
