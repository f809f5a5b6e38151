#pragma once

// Grothendieck classes of torified varieties, as polynomials in T = [G_m] = L - 1
// with nonnegative coefficients, plus the signed L-basis form.

#include "bcwitt/polynomial.hpp"
#include "bcwitt/scalar.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace bcw {

/// sum_k a_k T^k with every a_k >= 0.
class TorifiedClass {
 public:
  TorifiedClass() = default;
  /// a_0..a_D; throws std::invalid_argument on a negative entry.
  explicit TorifiedClass(std::vector<Integer> coeffs);
  explicit TorifiedClass(IntPolynomial poly);

  static TorifiedClass point() { return TorifiedClass(std::vector<Integer>{1}); }
  /// T^k, a split torus of dimension k.
  static TorifiedClass torus(std::size_t k) { return TorifiedClass(IntPolynomial::monomial(1, k)); }

  const IntPolynomial& poly() const { return poly_; }
  Integer coeff(std::size_t k) const { return poly_[k]; }
  long degree() const { return poly_.degree(); }
  bool is_zero() const { return poly_.is_zero(); }

  friend TorifiedClass operator+(const TorifiedClass& a, const TorifiedClass& b) {
    return TorifiedClass(a.poly_ + b.poly_);
  }
  friend TorifiedClass operator*(const TorifiedClass& a, const TorifiedClass& b) {
    return TorifiedClass(a.poly_ * b.poly_);
  }
  friend TorifiedClass operator*(const Integer& n, const TorifiedClass& a) { return TorifiedClass(a.poly_ * n); }
  friend bool operator==(const TorifiedClass&, const TorifiedClass&) = default;

 private:
  IntPolynomial poly_;
};

/// Laurent polynomial in L^{1/2}. Exponents are stored doubled, so the key 1
/// means L^{1/2} and -2 means L^{-1}.
class LClass {
 public:
  using Terms = std::map<std::int64_t, Integer>;

  LClass() = default;
  explicit LClass(Terms doubled_terms);
  /// Integer exponents: coeffs[i] is the coefficient of L^i.
  static LClass from_coeffs(const std::vector<Integer>& coeffs);

  const Terms& doubled_terms() const { return terms_; }
  /// Coefficient of L^{doubled/2}.
  Integer coeff_doubled(std::int64_t doubled) const;
  bool has_half_twist() const;

  friend bool operator==(const LClass&, const LClass&) = default;

 private:
  Terms terms_;
};

/// Substitutes T = L - 1.
LClass t_to_l(const TorifiedClass& c);

/// Substitutes L = T + 1. Throws HalfTwistPresent for half-integer exponents
/// and NotEffectivelyTorified when a T coefficient is negative or an exponent
/// is negative.
TorifiedClass l_to_t(const LClass& c);

/// #X(F_{1^m}) = sum_k a_k m^k.
Integer f1m_points(const TorifiedClass& c, std::int64_t m);

/// a_0, the Euler characteristic.
Integer euler_characteristic(const TorifiedClass& c);

struct BBPiece {
  TorifiedClass fixed_component;
  std::size_t fiber_dim = 0;
};

/// sum_i [Z_i] (T + 1)^{d_i}
TorifiedClass bb_assemble(const std::vector<BBPiece>& pieces);

/// L^{-dim/2} [X] for an integral-exponent class.
LClass virtual_motive(const LClass& c, std::int64_t dim);

/// A class together with the level N through which its Zhat-action factors.
struct LeveledClass {
  TorifiedClass cls;
  std::int64_t level = 1;

  friend bool operator==(const LeveledClass&, const LeveledClass&) = default;
};

/// Precomposition with sigma_n leaves the class and level unchanged.
LeveledClass bc_sigma(std::int64_t n, const LeveledClass& x);
/// Product with Z_n under the geometric Verschiebung: n [X], level N n.
LeveledClass bc_rho(std::int64_t n, const LeveledClass& x);

}  // namespace bcw
