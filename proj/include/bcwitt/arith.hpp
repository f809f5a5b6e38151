#pragma once

#include "bcwitt/polynomial.hpp"
#include "bcwitt/scalar.hpp"

#include <cstdint>
#include <vector>

namespace bcw {

// Number-theoretic helpers. All take n >= 1 and throw std::invalid_argument
// otherwise.

int moebius(std::int64_t n);
std::int64_t totient(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
std::vector<std::int64_t> prime_factors(std::int64_t n);
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Stirling number of the second kind, from the alternating binomial sum
/// S(k,r) = (1/r!) sum_j (-1)^{r-j} C(r,j) j^k.
Integer stirling2(std::int64_t k, std::int64_t r);

/// The m-th cyclotomic polynomial, monic (so Phi_1 = t - 1).
IntPolynomial cyclotomic(std::int64_t m);

/// Multiset {m_i} with prod Phi_{m_i} = +-p, ascending. Throws
/// DomainError(NotQuasiUnipotent) when p has a root off the roots of unity.
std::vector<std::int64_t> cyclotomic_factor(const IntPolynomial& p);

}  // namespace bcw
