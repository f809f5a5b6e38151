#pragma once

// The group ring Z[Q/Z] and the integral Bost-Connes maps sigma_n, rho_n.

#include "bcwitt/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace bcw {

/// An element r of Q/Z, stored as num/den with 0 <= num < den and
/// gcd(num, den) = 1. Zero is 0/1.
class QZFraction {
 public:
  QZFraction() = default;
  /// Reduces num/den into [0, 1). den must be positive.
  QZFraction(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  QZFraction operator+(const QZFraction& o) const;
  /// n * r mod 1
  QZFraction scaled(std::int64_t n) const;

  /// Ordered by (den, num).
  friend std::strong_ordering operator<=>(const QZFraction& a, const QZFraction& b) {
    if (auto c = a.den_ <=> b.den_; c != 0) return c;
    return a.num_ <=> b.num_;
  }
  friend bool operator==(const QZFraction&, const QZFraction&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Finite Z-linear combination sum c_r e(r). No zero coefficients are stored.
class QZElement {
 public:
  using Terms = std::map<QZFraction, Integer>;

  QZElement() = default;
  explicit QZElement(Terms terms);

  /// c * e(r)
  static QZElement basis(const QZFraction& r, const Integer& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const QZFraction& r) const;

  /// Adds c * e(r) in place.
  void add_term(const QZFraction& r, const Integer& c);

  QZElement& operator+=(const QZElement& o);
  QZElement& operator-=(const QZElement& o);
  QZElement& operator*=(const Integer& c);

  friend QZElement operator+(QZElement a, const QZElement& b) { return a += b; }
  friend QZElement operator-(QZElement a, const QZElement& b) { return a -= b; }
  friend QZElement operator*(QZElement a, const Integer& c) { return a *= c; }
  friend QZElement operator*(const Integer& c, QZElement a) { return a *= c; }
  friend QZElement operator*(const QZElement& a, const QZElement& b);
  friend bool operator==(const QZElement&, const QZElement&) = default;

 private:
  Terms terms_;
};

/// e(r) -> e(n r)
QZElement sigma(std::int64_t n, const QZElement& a);

/// e(r) -> sum of e(r') over the n solutions of n r' = r.
QZElement rho(std::int64_t n, const QZElement& a);

/// n * pi_n = sum over the n solutions of n r = 0.
QZElement pi_n_times_n(std::int64_t n);

/// Element of Z[(Q/Z)_F] (x) Z[(Q/Z)^F] for a finite set F of primes.
class SplitQZElement {
 public:
  using Key = std::pair<QZFraction, QZFraction>;
  using Terms = std::map<Key, Integer>;

  SplitQZElement() = default;
  /// Validates that every key is F-smooth x F-coprime.
  SplitQZElement(std::set<std::int64_t> primes, Terms terms);

  const std::set<std::int64_t>& primes() const { return primes_; }
  const Terms& terms() const { return terms_; }

  friend bool operator==(const SplitQZElement&, const SplitQZElement&) = default;

 private:
  std::set<std::int64_t> primes_;
  Terms terms_;
};

/// Unique decomposition r = r_F + r^F with den(r_F) F-smooth and den(r^F)
/// coprime to F.
std::pair<QZFraction, QZFraction> split_fraction(const std::set<std::int64_t>& primes, const QZFraction& r);

SplitQZElement split(const std::set<std::int64_t>& primes, const QZElement& a);
QZElement unsplit(const SplitQZElement& s);

/// Sum of e(r) over the primitive d-th roots of unity r = k/d, gcd(k, d) = 1.
QZElement primitive_roots(std::int64_t d);

}  // namespace bcw
