#pragma once

// F_1 and Hasse-Weil zeta functions of torified classes and the Witt-ring
// relations between them.

#include "bcwitt/polynomial.hpp"
#include "bcwitt/torified.hpp"
#include "bcwitt/witt.hpp"

#include <cstddef>
#include <cstdint>

namespace bcw {

/// Z_{F_1}(X, t) = exp(sum_m #X(F_{1^m}) t^m / m), truncated.
struct F1Zeta {
  TorifiedClass source;
  GhostVector<Integer> ghosts;
  WittVector series;
};

F1Zeta f1_zeta(const TorifiedClass& c, std::size_t trunc);

/// A rational function num/den with integer coefficients (not necessarily a
/// Witt vector: polylogarithms vanish at t = 0).
struct RationalFunction {
  IntPolynomial num;
  IntPolynomial den;
};

/// Li_{1-k}(t) = sum_{l<k} l! S(k, l+1) (t/(1-t))^{l+1}, as N(t)/(1-t)^k.
RationalFunction polylog_rational(std::int64_t k);

/// Z_{F_q}(T^k, t) = prod_j (1 - q^j t)^{-(-1)^{k-j} C(k,j)}.
IntRationalWitt torus_hw_zeta(std::size_t k, const Integer& q);

/// Hasse-Weil zeta of a torified class for a concrete q >= 2, as the Witt sum
/// of Z_{F_q}(T^k, t)^{a_k}.
IntRationalWitt hw_zeta(const TorifiedClass& c, const Integer& q);

/// Ghosts sum_k a_k (q^m - 1)^k for concrete q.
GhostVector<Integer> hw_ghosts(const TorifiedClass& c, const Integer& q, std::size_t trunc);

/// Ghosts sum_k a_k (q^m - 1)^k as polynomials in q.
GhostVector<IntPolynomial> hw_ghosts_symbolic(const TorifiedClass& c, std::size_t trunc);

/// Z_{0,k,q} = (1 - t)^{-(q-1)^k}
IntRationalWitt z0(std::size_t k, const Integer& q);

/// Ghosts (1 + q + ... + q^{m-1})^k of Z_{1,k,q}.
GhostVector<Integer> z1_ghosts(std::size_t k, const Integer& q, std::size_t trunc);
GhostVector<IntPolynomial> z1_ghosts_symbolic(std::size_t k, std::size_t trunc);

/// Z_{F_q}(T^k, t) /_W Z_{0,k,q} by ghost division of the two rational
/// vectors. The quotient is checked against the Z_{1,k,q} ghosts; NotDivisible
/// is raised if some ghost component does not divide. The quotient has integer
/// ghosts but its series coefficients need not be integers (q = 3, k = 1 gives
/// 1 + t + 5/2 t^2 + ...).
GhostVector<Integer> hw_quotient_check(std::size_t k, const Integer& q, std::size_t trunc);

/// The Witt sum over k of (Z_{F_q}(T^k) /_W Z_{0,k,q})^{a_k} with q kept
/// symbolic: the quotient ghosts (q^m - 1)^k / (q - 1)^k are formed by exact
/// division in Z[q].
GhostVector<IntPolynomial> hw_quotient_sum_symbolic(const TorifiedClass& c, std::size_t trunc);

/// Evaluates polynomial-in-q ghosts at q = 1.
GhostVector<Integer> q_to_1_limit(const GhostVector<IntPolynomial>& g);

}  // namespace bcw
