#include "triolex/diffop.hpp"

#include <algorithm>
#include <stdexcept>

namespace triolex {

ScalarDerivation ScalarDerivation::partial(int n_vars, int i) {
  ScalarDerivation X(n_vars);
  X.coeffs.at(i) = Poly::one(n_vars);
  return X;
}

bool ScalarDerivation::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Poly& p) { return p.is_zero(); });
}

Poly ScalarDerivation::apply(const Poly& f) const {
  if (f.n_vars() != n_vars()) throw std::invalid_argument("ring mismatch");
  Poly r(n_vars());
  for (int i = 0; i < n_vars(); ++i)
    if (!coeffs[i].is_zero()) r += coeffs[i] * f.diff(i);
  return r;
}

ScalarDerivation ScalarDerivation::operator+(const ScalarDerivation& o) const {
  ScalarDerivation r = *this;
  for (int i = 0; i < n_vars(); ++i) r.coeffs[i] += o.coeffs.at(i);
  return r;
}

ScalarDerivation ScalarDerivation::operator-(const ScalarDerivation& o) const {
  ScalarDerivation r = *this;
  for (int i = 0; i < n_vars(); ++i) r.coeffs[i] -= o.coeffs.at(i);
  return r;
}

ScalarDerivation ScalarDerivation::operator-() const {
  ScalarDerivation r = *this;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

ScalarDerivation ScalarDerivation::scaled(const Poly& f) const {
  ScalarDerivation r = *this;
  for (auto& c : r.coeffs) c *= f;
  return r;
}

ScalarDerivation lie_bracket(const ScalarDerivation& X, const ScalarDerivation& Y) {
  const int n = X.n_vars();
  ScalarDerivation Z(n);
  for (int i = 0; i < n; ++i) Z.coeffs[i] = X.apply(Y.coeffs[i]) - Y.apply(X.coeffs[i]);
  return Z;
}

// ---------------------------------------------------------------- PolyDiffOp

PolyDiffOp PolyDiffOp::mult(const Poly& f) {
  PolyDiffOp D(f.n_vars());
  D.add_term(Exp(f.n_vars(), 0), f);
  return D;
}

PolyDiffOp PolyDiffOp::partial(int n_vars, int i) {
  Exp s(n_vars, 0);
  s.at(i) = 1;
  return partial(s, Poly::one(n_vars));
}

PolyDiffOp PolyDiffOp::partial(const Exp& sigma, const Poly& coeff) {
  PolyDiffOp D(coeff.n_vars());
  D.add_term(sigma, coeff);
  return D;
}

PolyDiffOp PolyDiffOp::from_derivation(const ScalarDerivation& X) {
  const int n = X.n_vars();
  PolyDiffOp D(n);
  for (int i = 0; i < n; ++i) {
    Exp s(n, 0);
    s[i] = 1;
    D.add_term(s, X.coeffs[i]);
  }
  return D;
}

int PolyDiffOp::order() const {
  if (terms_.empty()) return 0;
  return total_degree(terms_.rbegin()->first);
}

Poly PolyDiffOp::coeff(const Exp& sigma) const {
  auto it = terms_.find(sigma);
  return it == terms_.end() ? Poly(n_) : it->second;
}

void PolyDiffOp::add_term(const Exp& sigma, const Poly& c) {
  if (static_cast<int>(sigma.size()) != n_ || c.n_vars() != n_)
    throw std::invalid_argument("ring mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(sigma, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly PolyDiffOp::apply(const Poly& f) const {
  if (f.n_vars() != n_) throw std::invalid_argument("ring mismatch");
  Poly r(n_);
  for (const auto& [s, c] : terms_) r += c * f.diff(s);
  return r;
}

PolyDiffOp& PolyDiffOp::operator+=(const PolyDiffOp& o) {
  if (o.n_ != n_) throw std::invalid_argument("ring mismatch");
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

PolyDiffOp& PolyDiffOp::operator-=(const PolyDiffOp& o) {
  if (o.n_ != n_) throw std::invalid_argument("ring mismatch");
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

PolyDiffOp PolyDiffOp::operator-() const {
  PolyDiffOp r(n_);
  for (const auto& [s, c] : terms_) r.terms_.emplace(s, -c);
  return r;
}

PolyDiffOp operator*(const Poly& f, const PolyDiffOp& d) {
  PolyDiffOp r(d.n_);
  for (const auto& [s, c] : d.terms_) r.add_term(s, f * c);
  return r;
}

PolyDiffOp operator*(const Rational& k, const PolyDiffOp& d) {
  PolyDiffOp r(d.n_);
  for (const auto& [s, c] : d.terms_) r.add_term(s, c * k);
  return r;
}

PolyDiffOp PolyDiffOp::homogeneous_part(int k) const {
  PolyDiffOp r(n_);
  for (const auto& [s, c] : terms_)
    if (total_degree(s) == k) r.terms_.emplace(s, c);
  return r;
}

PolyDiffOp PolyDiffOp::truncated(int k) const {
  PolyDiffOp r(n_);
  for (const auto& [s, c] : terms_)
    if (total_degree(s) <= k) r.terms_.emplace(s, c);
  return r;
}

ScalarDerivation PolyDiffOp::first_order_part() const {
  ScalarDerivation X(n_);
  for (int i = 0; i < n_; ++i) {
    Exp s(n_, 0);
    s[i] = 1;
    X.coeffs[i] = coeff(s);
  }
  return X;
}

namespace {

void sub_indices(const Exp& sigma, std::size_t pos, Exp& cur, std::vector<Exp>& out) {
  if (pos == sigma.size()) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= sigma[pos]; ++v) {
    cur[pos] = v;
    sub_indices(sigma, pos + 1, cur, out);
  }
}

}  // namespace

// d^sigma o (b d^tau) = sum_{rho <= sigma} C(sigma,rho) d^rho(b) d^{sigma-rho+tau}
PolyDiffOp compose(const PolyDiffOp& D, const PolyDiffOp& E) {
  if (D.n_vars() != E.n_vars()) throw std::invalid_argument("ring mismatch");
  const int n = D.n_vars();
  PolyDiffOp R(n);
  for (const auto& [sigma, a] : D.terms()) {
    std::vector<Exp> rhos;
    Exp cur(n, 0);
    sub_indices(sigma, 0, cur, rhos);
    for (const auto& rho : rhos) {
      Rational binom = 1;
      for (int i = 0; i < n; ++i) binom *= binomial(sigma[i], rho[i]);
      for (const auto& [tau, b] : E.terms()) {
        Poly db = b.diff(rho);
        if (db.is_zero()) continue;
        Exp s(n);
        for (int i = 0; i < n; ++i) s[i] = sigma[i] - rho[i] + tau[i];
        R.add_term(s, (a * db) * binom);
      }
    }
  }
  return R;
}

PolyDiffOp commutator(const PolyDiffOp& D, const PolyDiffOp& E) { return compose(D, E) - compose(E, D); }

PolyDiffOp delta_a(const PolyDiffOp& D, const Poly& a) {
  return compose(PolyDiffOp::mult(a), D) - compose(D, PolyDiffOp::mult(a));
}

PolyDiffOp delta_a(const PolyDiffOp& D, const std::vector<Poly>& as) {
  PolyDiffOp R = D;
  for (const auto& a : as) R = delta_a(R, a);
  return R;
}

int order_of(const PolyDiffOp& D) { return D.order(); }

// ---------------------------------------------------------------- MatDiffOp

MatDiffOp::MatDiffOp(int n_vars, int rows, int cols)
    : n_(n_vars), rows_(rows), cols_(cols), e_(rows, std::vector<PolyDiffOp>(cols, PolyDiffOp(n_vars))) {}

MatDiffOp MatDiffOp::identity(int n_vars, int r) { return scalar(PolyDiffOp::identity(n_vars), r); }

MatDiffOp MatDiffOp::mult(const PolyMat& m, int n_vars) {
  const int r = static_cast<int>(m.size());
  const int c = r ? static_cast<int>(m[0].size()) : 0;
  MatDiffOp M(n_vars, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) M.e_[i][j] = PolyDiffOp::mult(m[i].at(j));
  return M;
}

MatDiffOp MatDiffOp::scalar(const PolyDiffOp& d, int r) {
  MatDiffOp M(d.n_vars(), r, r);
  for (int i = 0; i < r; ++i) M.e_[i][i] = d;
  return M;
}

bool MatDiffOp::is_zero() const {
  for (const auto& row : e_)
    for (const auto& d : row)
      if (!d.is_zero()) return false;
  return true;
}

int MatDiffOp::order() const {
  int k = 0;
  for (const auto& row : e_)
    for (const auto& d : row) k = std::max(k, d.order());
  return k;
}

PolyVec MatDiffOp::apply(const PolyVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("shape mismatch");
  PolyVec r(rows_, Poly(n_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += e_[i][j].apply(v[j]);
  return r;
}

static void check_shape(const MatDiffOp& a, const MatDiffOp& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.n_vars() != b.n_vars())
    throw std::invalid_argument("shape mismatch");
}

MatDiffOp& MatDiffOp::operator+=(const MatDiffOp& o) {
  check_shape(*this, o);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) e_[i][j] += o.e_[i][j];
  return *this;
}

MatDiffOp& MatDiffOp::operator-=(const MatDiffOp& o) {
  check_shape(*this, o);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) e_[i][j] -= o.e_[i][j];
  return *this;
}

MatDiffOp MatDiffOp::operator-() const {
  MatDiffOp r = *this;
  for (auto& row : r.e_)
    for (auto& d : row) d = -d;
  return r;
}

MatDiffOp operator*(const Poly& f, const MatDiffOp& d) {
  MatDiffOp r = d;
  for (auto& row : r.e_)
    for (auto& x : row) x = f * x;
  return r;
}

bool MatDiffOp::operator==(const MatDiffOp& o) const {
  return n_ == o.n_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

MatDiffOp MatDiffOp::homogeneous_part(int k) const {
  MatDiffOp r = *this;
  for (auto& row : r.e_)
    for (auto& d : row) d = d.homogeneous_part(k);
  return r;
}

MatDiffOp MatDiffOp::truncated(int k) const {
  MatDiffOp r = *this;
  for (auto& row : r.e_)
    for (auto& d : row) d = d.truncated(k);
  return r;
}

PolyMat MatDiffOp::zeroth() const {
  PolyMat m(rows_, PolyVec(cols_, Poly(n_)));
  const Exp z(n_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m[i][j] = e_[i][j].coeff(z);
  return m;
}

MatDiffOp compose(const MatDiffOp& D, const MatDiffOp& E) {
  if (D.cols() != E.rows() || D.n_vars() != E.n_vars()) throw std::invalid_argument("shape mismatch");
  MatDiffOp R(D.n_vars(), D.rows(), E.cols());
  for (int i = 0; i < D.rows(); ++i)
    for (int j = 0; j < E.cols(); ++j)
      for (int k = 0; k < D.cols(); ++k) {
        if (D.at(i, k).is_zero() || E.at(k, j).is_zero()) continue;
        R.at(i, j) += compose(D.at(i, k), E.at(k, j));
      }
  return R;
}

MatDiffOp commutator(const MatDiffOp& D, const MatDiffOp& E) { return compose(D, E) - compose(E, D); }

MatDiffOp delta_a(const MatDiffOp& D, const Poly& a) {
  MatDiffOp R = D;
  for (int i = 0; i < D.rows(); ++i)
    for (int j = 0; j < D.cols(); ++j) R.at(i, j) = delta_a(D.at(i, j), a);
  return R;
}

MatDiffOp delta_a(const MatDiffOp& D, const std::vector<Poly>& as) {
  MatDiffOp R = D;
  for (const auto& a : as) R = delta_a(R, a);
  return R;
}

int order_of(const MatDiffOp& D) { return D.order(); }

std::vector<Exp> multi_indices_exact(int n, int k) {
  std::vector<Exp> out;
  Exp cur(n, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (n == 0) {
    if (k == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, k);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

std::vector<Exp> multi_indices_upto(int n, int k) {
  std::vector<Exp> out;
  for (int d = 0; d <= k; ++d) {
    auto part = multi_indices_exact(n, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace triolex
