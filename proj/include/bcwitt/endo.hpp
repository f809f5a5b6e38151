#pragma once

// K_0-level model of the endomorphism category: an object (E, f) is the
// matrix of f on a free module E = Q^d.

#include "bcwitt/matrix.hpp"
#include "bcwitt/witt.hpp"

#include <cstddef>

namespace bcw {

class EndoObject {
 public:
  /// The zero object.
  EndoObject() = default;
  explicit EndoObject(RatMatrix matrix);
  /// dim x dim diagonal object with the given eigenvalues.
  static EndoObject diagonal(const std::vector<Rational>& entries);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const RatMatrix& matrix() const { return matrix_; }

  friend bool operator==(const EndoObject& a, const EndoObject& b) {
    return a.matrix_.rows() == b.matrix_.rows() && a.matrix_ == b.matrix_;
  }

 private:
  RatMatrix matrix_ = RatMatrix(0, 0);
};

struct GradedEndoObject {
  EndoObject plus;
  EndoObject minus;

  friend bool operator==(const GradedEndoObject&, const GradedEndoObject&) = default;
};

EndoObject direct_sum(const EndoObject& a, const EndoObject& b);
EndoObject tensor(const EndoObject& a, const EndoObject& b);

/// L(E, f) = det(1 - t M(f))^{-1}
RatRationalWitt l_map(const EndoObject& e);

/// Ghosts trace(M^m), m = 1..trunc.
GhostVector<Rational> trace_ghosts(const EndoObject& e, std::size_t trunc);

/// F_n(E, f) = (E, f^n)
EndoObject endo_frobenius(std::size_t n, const EndoObject& e);
/// V_n(E, f) = (E^n, block companion with f in the corner)
EndoObject endo_verschiebung(std::size_t n, const EndoObject& e);

/// [E+, f+] - [E-, f-] in W_0: det(1 - t M-) / det(1 - t M+).
RatRationalWitt delta(const GradedEndoObject& g);

/// Reads the linear factorization prod(1 - alpha_i t) / prod(1 - beta_j t)
/// off z and returns plus = diag(beta_j), minus = diag(alpha_i). Throws
/// NotSplit when num or den has an irreducible factor of degree > 1 over Q.
GradedEndoObject phi_mu(const RatRationalWitt& z);

/// Rational roots of p with multiplicity, ascending; the remaining cofactor
/// (no rational roots) is written to `rest`.
std::vector<Rational> rational_roots(const RatPolynomial& p, RatPolynomial& rest);

}  // namespace bcw
