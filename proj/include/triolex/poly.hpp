#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace triolex {

using Rational = mpq_class;
using Exp = std::vector<int>;

// Graded-lexicographic: total degree first, then lexicographic with x_0 heaviest.
struct GrlexLess {
  bool operator()(const Exp& a, const Exp& b) const;
};

int total_degree(const Exp& e);

class Poly {
 public:
  using Terms = std::map<Exp, Rational, GrlexLess>;

  Poly() = default;
  explicit Poly(int n_vars);
  Poly(int n_vars, const Rational& c);

  static Poly zero(int n_vars) { return Poly(n_vars); }
  static Poly one(int n_vars) { return Poly(n_vars, Rational(1)); }
  static Poly constant(int n_vars, const Rational& c) { return Poly(n_vars, c); }
  static Poly var(int n_vars, int i);
  static Poly monomial(const Exp& e, const Rational& c = 1);

  int n_vars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coeff(const Exp& e) const;
  int degree() const;  // -1 for zero
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exp& e, const Rational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly diff(int i) const;
  Poly diff(const Exp& sigma) const;
  Poly pow(int k) const;

  // substitute x_i -> images[i]; result lives in the ring of the images
  Poly subs(const std::vector<Poly>& images) const;
  Rational eval(const std::vector<Rational>& point) const;

  // exact quotient; throws std::domain_error when d does not divide *this
  Poly divexact(const Poly& d) const;

  // embed into a ring with more variables, old variable i goes to slot offset+i
  Poly embed(int new_n, int offset = 0) const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int n_ = 0;
  Terms terms_;
};

using PolyVec = std::vector<Poly>;
using PolyMat = std::vector<std::vector<Poly>>;

// exact partial derivative along axis i (0-based)
Poly partial_derivative(const Poly& f, int i);

Rational binomial(int n, int k);

}  // namespace triolex
