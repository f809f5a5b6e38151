#pragma once

#include "bcwitt/errors.hpp"
#include "bcwitt/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bcw {

/// Dense univariate polynomial, coefficients ascending (constant term first).
/// The highest stored coefficient is nonzero; the zero polynomial stores
/// nothing and has degree -1.
template <class Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }
  static Polynomial one() { return constant(Scalar(1)); }
  static Polynomial monomial(const Scalar& c, std::size_t degree) {
    std::vector<Scalar> v(degree + 1, Scalar(0));
    v[degree] = c;
    return Polynomial(std::move(v));
  }
  /// 1 - a t^d
  static Polynomial one_minus(const Scalar& a, std::size_t d = 1) {
    std::vector<Scalar> v(d + 1, Scalar(0));
    v[0] = Scalar(1);
    v[d] -= a;
    return Polynomial(std::move(v));
  }

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  Scalar operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

  template <class X>
  X evaluate(const X& x) const {
    X acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

template <class Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& p, std::uint64_t e) {
  Polynomial<Scalar> result = Polynomial<Scalar>::one();
  Polynomial<Scalar> base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

/// p(t^n)
template <class Scalar>
Polynomial<Scalar> substitute_power(const Polynomial<Scalar>& p, std::size_t n) {
  if (n == 0) throw std::invalid_argument("substitute_power: n must be positive");
  if (p.is_zero()) return {};
  std::vector<Scalar> out(static_cast<std::size_t>(p.degree()) * n + 1, Scalar(0));
  for (std::size_t i = 0; i < p.size(); ++i) out[i * n] = p[i];
  return Polynomial<Scalar>(std::move(out));
}

/// p(t + shift), computed by Horner steps on the shifted variable.
template <class Scalar>
Polynomial<Scalar> taylor_shift(const Polynomial<Scalar>& p, const Scalar& shift) {
  Polynomial<Scalar> acc;
  const Polynomial<Scalar> lin{shift, Scalar(1)};
  for (long i = p.degree(); i >= 0; --i) acc = acc * lin + Polynomial<Scalar>::constant(p[static_cast<std::size_t>(i)]);
  return acc;
}

/// Coefficients t^0..t^n of p (zero padded).
template <class Scalar>
std::vector<Scalar> truncated_coeffs(const Polynomial<Scalar>& p, std::size_t n) {
  std::vector<Scalar> out(n + 1, Scalar(0));
  for (std::size_t i = 0; i <= n && i < p.size(); ++i) out[i] = p[i];
  return out;
}

template <class Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p) {
  if (p.size() <= 1) return {};
  std::vector<Scalar> out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * Scalar(static_cast<long>(i));
  return Polynomial<Scalar>(std::move(out));
}

/// Quotient and remainder over a field.
inline std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {RatPolynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational lead = b.leading();
  for (long i = a.degree(); i >= db; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] / lead;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = c;
    for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

/// Exact quotient a / b in Z[t]. Returns false (leaving q untouched) when b
/// does not divide a.
inline bool try_exact_divide(const IntPolynomial& a, const IntPolynomial& b, IntPolynomial& q) {
  if (b.is_zero()) throw std::invalid_argument("exact_divide: division by zero polynomial");
  if (a.is_zero()) {
    q = IntPolynomial{};
    return true;
  }
  const long db = b.degree();
  if (a.degree() < db) return false;
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - db + 1), Integer(0));
  const Integer lead = b.leading();
  for (long i = a.degree(); i >= db; --i) {
    const Integer& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (top % lead != 0) return false;
    const Integer c = top / lead;
    quot[static_cast<std::size_t>(i - db)] = c;
    for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  for (const auto& r : rem)
    if (r != 0) return false;
  q = IntPolynomial(std::move(quot));
  return true;
}

inline IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial q;
  if (!try_exact_divide(a, b, q)) throw DomainError(ErrorKind::NotDivisible, "polynomial division leaves a remainder");
  return q;
}

/// Monic gcd over Q (zero if both inputs are zero).
inline RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());
}

template <class To, class From>
Polynomial<To> polynomial_cast(const Polynomial<From>& p) {
  std::vector<To> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(scalar_cast<To>(c));
  return Polynomial<To>(std::move(out));
}

/// Coefficients 0..n of the power series num/den (den(0) must be invertible).
template <class Scalar>
std::vector<Rational> series_quotient(const Polynomial<Scalar>& num, const Polynomial<Scalar>& den, std::size_t n) {
  if (den[0] == 0) throw std::invalid_argument("series_quotient: denominator has zero constant term");
  const Rational d0 = scalar_cast<Rational>(den[0]);
  std::vector<Rational> out(n + 1, Rational(0));
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc = scalar_cast<Rational>(num[k]);
    const std::size_t top = std::min<std::size_t>(k, den.size() == 0 ? 0 : den.size() - 1);
    for (std::size_t j = 1; j <= top; ++j) acc -= scalar_cast<Rational>(den[j]) * out[k - j];
    out[k] = acc / d0;
  }
  return out;
}

}  // namespace bcw
