#include "triolex/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace triolex {

bool GrlexLess::operator()(const Exp& a, const Exp& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  // among equal degree, x_0^d comes last so that x_0 is the leading variable
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

int total_degree(const Exp& e) { return std::accumulate(e.begin(), e.end(), 0); }

Poly::Poly(int n_vars) : n_(n_vars) {
  if (n_vars < 0) throw std::invalid_argument("negative variable count");
}

Poly::Poly(int n_vars, const Rational& c) : Poly(n_vars) {
  if (c != 0) terms_.emplace(Exp(n_vars, 0), c);
}

Poly Poly::var(int n_vars, int i) {
  if (i < 0 || i >= n_vars) throw std::out_of_range("variable index out of range");
  Exp e(n_vars, 0);
  e[i] = 1;
  return monomial(e);
}

Poly Poly::monomial(const Exp& e, const Rational& c) {
  Poly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational Poly::constant_term() const { return coeff(Exp(n_, 0)); }

Rational Poly::coeff(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.rbegin()->first);
}

void Poly::add_term(const Exp& e, const Rational& c) {
  if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

static void check_ring(const Poly& a, const Poly& b) {
  if (a.n_vars() != b.n_vars()) throw std::invalid_argument("ring mismatch");
}

Poly& Poly::operator+=(const Poly& o) {
  check_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_ring(a, b);
  Poly r(a.n_);
  Exp e(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

bool Poly::operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

Poly Poly::diff(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("axis out of range");
  Poly r(n_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exp f = e;
    f[i] -= 1;
    r.add_term(f, c * e[i]);
  }
  return r;
}

Poly Poly::diff(const Exp& sigma) const {
  if (static_cast<int>(sigma.size()) != n_) throw std::invalid_argument("multi-index length mismatch");
  Poly r(n_);
  for (const auto& [e, c] : terms_) {
    Rational k = c;
    Exp f = e;
    bool dead = false;
    for (int i = 0; i < n_ && !dead; ++i) {
      for (int s = 0; s < sigma[i]; ++s) {
        if (f[i] == 0) {
          dead = true;
          break;
        }
        k *= f[i];
        f[i] -= 1;
      }
    }
    if (!dead) r.add_term(f, k);
  }
  return r;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  Poly r = one(n_);
  Poly b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

Poly Poly::subs(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != n_) throw std::invalid_argument("malformed substitution");
  const int m = images.empty() ? 0 : images[0].n_vars();
  for (const auto& im : images)
    if (im.n_vars() != m) throw std::invalid_argument("malformed substitution");
  Poly r(m);
  for (const auto& [e, c] : terms_) {
    Poly t(m, c);
    for (int i = 0; i < n_; ++i)
      if (e[i]) t *= images[i].pow(e[i]);
    r += t;
  }
  return r;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != n_) throw std::invalid_argument("point dimension mismatch");
  Rational r = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    r += t;
  }
  return r;
}

Poly Poly::divexact(const Poly& d) const {
  check_ring(*this, d);
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  const auto& [ld, lc] = *d.terms_.rbegin();
  Poly q(n_), r = *this;
  Exp t(n_);
  while (!r.is_zero()) {
    const auto& [lr, rc] = *r.terms_.rbegin();
    for (int i = 0; i < n_; ++i) {
      t[i] = lr[i] - ld[i];
      if (t[i] < 0) throw std::domain_error("inexact polynomial division");
    }
    Poly m = monomial(t, rc / lc);
    q += m;
    r -= m * d;
  }
  return q;
}

Poly Poly::embed(int new_n, int offset) const {
  if (offset < 0 || offset + n_ > new_n) throw std::invalid_argument("bad embedding");
  Poly r(new_n);
  for (const auto& [e, c] : terms_) {
    Exp f(new_n, 0);
    for (int i = 0; i < n_; ++i) f[offset + i] = e[i];
    r.add_term(f, c);
  }
  return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool mono = total_degree(e) > 0;
    if (!mono || a != 1) os << a.get_str();
    bool star = mono && a != 1;
    for (int i = 0; i < n_; ++i) {
      if (!e[i]) continue;
      if (star) os << "*";
      star = true;
      os << (names.size() > static_cast<std::size_t>(i) ? names[i] : "x" + std::to_string(i));
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

Poly partial_derivative(const Poly& f, int i) { return f.diff(i); }

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

}  // namespace triolex
