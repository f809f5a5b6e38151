#pragma once

// Big Witt vectors W(R) = 1 + tR[[t]] in truncated and rational form.
//
// Witt addition is the series product; everything multiplicative goes
// through the ghost map t d/dt log Z(t) = sum_m N_m t^m, which turns Witt
// operations into componentwise ones. Ghost <-> series conversion uses the
// Newton recursion m c_m = sum_{i=1..m} N_i c_{m-i}.

#include "bcwitt/errors.hpp"
#include "bcwitt/polynomial.hpp"
#include "bcwitt/scalar.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bcw {

/// 1 + c_1 t + ... + c_N t^N (mod t^{N+1}), exact rational coefficients.
class WittVector {
 public:
  WittVector() = default;
  /// coeffs holds c_1..c_N; the truncation N is coeffs.size() and must be >= 1.
  explicit WittVector(std::vector<Rational> coeffs);
  /// The neutral element 1 at truncation N.
  static WittVector one(std::size_t trunc);

  std::size_t trunc() const { return coeffs_.size(); }
  /// Coefficient of t^i, i in 0..N.
  Rational coeff(std::size_t i) const { return i == 0 ? Rational(1) : coeffs_.at(i - 1); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_integral() const;

  friend bool operator==(const WittVector&, const WittVector&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Ghost components N_1..N_N. T is Rational, Integer, or IntPolynomial (ghosts
/// that are polynomials in an indeterminate q).
template <class T>
struct GhostVector {
  std::vector<T> values;

  std::size_t trunc() const { return values.size(); }
  /// 1-based, like the ghost index m.
  const T& operator[](std::size_t m) const { return values.at(m - 1); }

  friend GhostVector operator+(const GhostVector& a, const GhostVector& b) {
    check_same(a, b);
    GhostVector out{a.values};
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
    return out;
  }
  friend GhostVector operator*(const GhostVector& a, const GhostVector& b) {
    check_same(a, b);
    GhostVector out{a.values};
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= b.values[i];
    return out;
  }
  friend bool operator==(const GhostVector&, const GhostVector&) = default;

 private:
  static void check_same(const GhostVector& a, const GhostVector& b) {
    if (a.values.size() != b.values.size()) throw std::invalid_argument("ghost vectors have different truncations");
  }
};

template <class To, class From>
GhostVector<To> ghost_cast(const GhostVector<From>& g) {
  GhostVector<To> out;
  out.values.reserve(g.values.size());
  for (const auto& v : g.values) out.values.push_back(scalar_cast<To>(v));
  return out;
}

/// Specializes polynomial-in-q ghosts at a value of q.
template <class X>
GhostVector<X> evaluate_ghosts(const GhostVector<IntPolynomial>& g, const X& q) {
  GhostVector<X> out;
  out.values.reserve(g.values.size());
  for (const auto& p : g.values) out.values.push_back(p.evaluate(q));
  return out;
}

GhostVector<Rational> ghost(const WittVector& w);
WittVector unghost(const GhostVector<Rational>& g);
inline WittVector unghost(const GhostVector<Integer>& g) { return unghost(ghost_cast<Rational>(g)); }

/// Series product.
WittVector witt_add(const WittVector& a, const WittVector& b);
/// Additive inverse: the series reciprocal.
WittVector witt_neg(const WittVector& a);
WittVector witt_sub(const WittVector& a, const WittVector& b);
/// Ghost-componentwise product; [a] * [b] = [ab].
WittVector witt_mul(const WittVector& a, const WittVector& b);
/// n-fold Witt sum of a with itself (series power a^n); n may be negative.
WittVector witt_scale(long n, const WittVector& a);

/// The Witt quotient S with S * Q = P, for P, Q whose ghost components are
/// integers and q_m | p_m for every m. Throws NotDivisible otherwise.
WittVector witt_divide(const WittVector& p, const WittVector& q);

/// [a] = 1/(1 - a t)
WittVector teichmuller(const Rational& a, std::size_t trunc);

/// F_n: ghost(F_n w)_m = ghost(w)_{nm}, truncation floor(N/n).
/// Throws TruncationTooSmall when floor(N/n) = 0.
WittVector frobenius(std::size_t n, const WittVector& w);

/// V_n: P(t) -> P(t^n), same truncation.
WittVector verschiebung(std::size_t n, const WittVector& w);

/// Drops coefficients above t^trunc (trunc <= w.trunc()).
WittVector truncate(const WittVector& w, std::size_t trunc);

/// num / den with num(0) = den(0) = 1 and gcd(num, den) = 1 over Q.
template <class Scalar>
class RationalWitt {
 public:
  RationalWitt() : num_(Polynomial<Scalar>::one()), den_(Polynomial<Scalar>::one()) {}
  RationalWitt(Polynomial<Scalar> num, Polynomial<Scalar> den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_[0] != 1 || den_[0] != 1)
      throw std::invalid_argument("rational Witt vector needs constant terms equal to 1");
    reduce();
  }
  /// 1/den
  static RationalWitt inverse_of(Polynomial<Scalar> den) { return RationalWitt(Polynomial<Scalar>::one(), std::move(den)); }

  const Polynomial<Scalar>& num() const { return num_; }
  const Polynomial<Scalar>& den() const { return den_; }
  bool is_one() const { return num_.degree() == 0 && den_.degree() == 0; }

  WittVector expand(std::size_t trunc) const {
    if (trunc == 0) throw std::invalid_argument("truncation must be >= 1");
    auto c = series_quotient(num_, den_, trunc);
    return WittVector(std::vector<Rational>(c.begin() + 1, c.end()));
  }

  friend bool operator==(const RationalWitt&, const RationalWitt&) = default;

 private:
  void reduce() {
    const auto n = polynomial_cast<Rational>(num_);
    const auto d = polynomial_cast<Rational>(den_);
    auto g = gcd(n, d);
    if (g.degree() <= 0) return;
    g *= Rational(1) / g[0];
    num_ = polynomial_cast<Scalar>(divmod(n, g).first);
    den_ = polynomial_cast<Scalar>(divmod(d, g).first);
  }

  Polynomial<Scalar> num_;
  Polynomial<Scalar> den_;
};

using IntRationalWitt = RationalWitt<Integer>;
using RatRationalWitt = RationalWitt<Rational>;

/// Witt sum of rational vectors (product of the functions).
template <class Scalar>
RationalWitt<Scalar> rational_add(const RationalWitt<Scalar>& p, const RationalWitt<Scalar>& q) {
  return RationalWitt<Scalar>(p.num() * q.num(), p.den() * q.den());
}

/// The series ratio p / q, i.e. the Witt difference p -_W q, reduced to a
/// quotient of polynomials with constant term 1.
template <class Scalar>
RationalWitt<Scalar> rational_div(const RationalWitt<Scalar>& p, const RationalWitt<Scalar>& q) {
  return RationalWitt<Scalar>(p.num() * q.den(), p.den() * q.num());
}

/// (num/den)^e for an integer e (negative exponents swap num and den).
template <class Scalar>
RationalWitt<Scalar> rational_pow(const RationalWitt<Scalar>& p, long e) {
  const auto k = static_cast<std::uint64_t>(e < 0 ? -e : e);
  if (e >= 0) return RationalWitt<Scalar>(pow(p.num(), k), pow(p.den(), k));
  return RationalWitt<Scalar>(pow(p.den(), k), pow(p.num(), k));
}

template <class Scalar>
GhostVector<Rational> ghost(const RationalWitt<Scalar>& r, std::size_t trunc) {
  return ghost(r.expand(trunc));
}

/// Ghost components of a rational vector that are known to be integers.
template <class Scalar>
GhostVector<Integer> integer_ghost(const RationalWitt<Scalar>& r, std::size_t trunc) {
  return ghost_cast<Integer>(ghost(r, trunc));
}

}  // namespace bcw
