#include "bcwitt/zeta.hpp"

#include "bcwitt/arith.hpp"
#include "bcwitt/errors.hpp"

#include <stdexcept>
#include <string>

namespace bcw {

namespace {

void require_trunc(std::size_t trunc) {
  if (trunc == 0) throw std::invalid_argument("truncation must be >= 1");
}

void require_q(const Integer& q) {
  if (q < 2) throw std::invalid_argument("q must be an integer >= 2");
}

// q^m - 1 in Z[q]
IntPolynomial q_power_minus_one(std::size_t m) { return IntPolynomial::monomial(1, m) - IntPolynomial::one(); }

// 1 + q + ... + q^{m-1} in Z[q]
IntPolynomial q_number(std::size_t m) { return IntPolynomial(std::vector<Integer>(m, Integer(1))); }

}  // namespace

F1Zeta f1_zeta(const TorifiedClass& c, std::size_t trunc) {
  require_trunc(trunc);
  GhostVector<Integer> g;
  g.values.reserve(trunc);
  for (std::size_t m = 1; m <= trunc; ++m) g.values.push_back(f1m_points(c, static_cast<std::int64_t>(m)));
  WittVector series = unghost(g);
  return {c, std::move(g), std::move(series)};
}

RationalFunction polylog_rational(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("polylog_rational: k must be >= 1");
  const IntPolynomial t = IntPolynomial::monomial(1, 1);
  const IntPolynomial one_minus_t = IntPolynomial::one_minus(1);
  IntPolynomial num;
  for (std::int64_t l = 0; l < k; ++l) {
    const Integer c = factorial(l) * stirling2(k, l + 1);
    num += pow(t, static_cast<std::uint64_t>(l + 1)) * pow(one_minus_t, static_cast<std::uint64_t>(k - 1 - l)) * c;
  }
  return {num, pow(one_minus_t, static_cast<std::uint64_t>(k))};
}

IntRationalWitt torus_hw_zeta(std::size_t k, const Integer& q) {
  require_q(q);
  IntPolynomial num = IntPolynomial::one(), den = IntPolynomial::one();
  for (std::size_t j = 0; j <= k; ++j) {
    const Integer c = binomial(static_cast<std::int64_t>(k), static_cast<std::int64_t>(j));
    const IntPolynomial factor = pow(IntPolynomial::one_minus(ipow(q, j)), static_cast<std::uint64_t>(c));
    // exponent -(-1)^{k-j} C(k,j): denominator when k-j is even
    if ((k - j) % 2 == 0) den *= factor;
    else num *= factor;
  }
  return IntRationalWitt(num, den);
}

IntRationalWitt hw_zeta(const TorifiedClass& c, const Integer& q) {
  require_q(q);
  // Collect the exponent of each (1 - q^j t) across all tori, then build the
  // product once.
  std::vector<Integer> exponent(static_cast<std::size_t>(c.degree() + 1), Integer(0));
  for (std::size_t k = 0; k < c.poly().size(); ++k) {
    const Integer& a = c.coeff(k);
    if (a == 0) continue;
    for (std::size_t j = 0; j <= k; ++j) {
      const Integer term = a * binomial(static_cast<std::int64_t>(k), static_cast<std::int64_t>(j));
      if ((k - j) % 2 == 0) exponent[j] += term;
      else exponent[j] -= term;
    }
  }
  IntPolynomial num = IntPolynomial::one(), den = IntPolynomial::one();
  for (std::size_t j = 0; j < exponent.size(); ++j) {
    const Integer& e = exponent[j];
    if (e == 0) continue;
    const IntPolynomial factor = IntPolynomial::one_minus(ipow(q, j));
    if (e > 0) den *= pow(factor, static_cast<std::uint64_t>(e));
    else num *= pow(factor, static_cast<std::uint64_t>(-e));
  }
  return IntRationalWitt(num, den);
}

GhostVector<Integer> hw_ghosts(const TorifiedClass& c, const Integer& q, std::size_t trunc) {
  require_trunc(trunc);
  GhostVector<Integer> out;
  for (std::size_t m = 1; m <= trunc; ++m) {
    const Integer base = ipow(q, m) - 1;
    out.values.push_back(c.poly().evaluate(base));
  }
  return out;
}

GhostVector<IntPolynomial> hw_ghosts_symbolic(const TorifiedClass& c, std::size_t trunc) {
  require_trunc(trunc);
  GhostVector<IntPolynomial> out;
  for (std::size_t m = 1; m <= trunc; ++m) {
    const IntPolynomial base = q_power_minus_one(m);
    IntPolynomial acc;
    for (std::size_t k = 0; k < c.poly().size(); ++k)
      if (c.coeff(k) != 0) acc += pow(base, k) * c.coeff(k);
    out.values.push_back(std::move(acc));
  }
  return out;
}

IntRationalWitt z0(std::size_t k, const Integer& q) {
  require_q(q);
  const Integer e = ipow(q - 1, k);
  return IntRationalWitt::inverse_of(pow(IntPolynomial::one_minus(1), static_cast<std::uint64_t>(e)));
}

GhostVector<Integer> z1_ghosts(std::size_t k, const Integer& q, std::size_t trunc) {
  return evaluate_ghosts(z1_ghosts_symbolic(k, trunc), q);
}

GhostVector<IntPolynomial> z1_ghosts_symbolic(std::size_t k, std::size_t trunc) {
  require_trunc(trunc);
  GhostVector<IntPolynomial> out;
  for (std::size_t m = 1; m <= trunc; ++m) out.values.push_back(pow(q_number(m), k));
  return out;
}

GhostVector<Integer> hw_quotient_check(std::size_t k, const Integer& q, std::size_t trunc) {
  require_trunc(trunc);
  const WittVector numerator = torus_hw_zeta(k, q).expand(trunc);
  const WittVector divisor = z0(k, q).expand(trunc);
  const WittVector quotient = witt_divide(numerator, divisor);
  auto g = ghost_cast<Integer>(ghost(quotient));
  if (g != z1_ghosts(k, q, trunc))
    throw std::logic_error("Witt quotient disagrees with Z_1 ghosts for k=" + std::to_string(k) + ", q=" + to_string(q));
  return g;
}

GhostVector<IntPolynomial> hw_quotient_sum_symbolic(const TorifiedClass& c, std::size_t trunc) {
  require_trunc(trunc);
  const IntPolynomial q_minus_one = q_power_minus_one(1);
  GhostVector<IntPolynomial> out;
  for (std::size_t m = 1; m <= trunc; ++m) {
    IntPolynomial acc;
    for (std::size_t k = 0; k < c.poly().size(); ++k) {
      if (c.coeff(k) == 0) continue;
      const IntPolynomial quotient = exact_divide(pow(q_power_minus_one(m), k), pow(q_minus_one, k));
      acc += quotient * c.coeff(k);
    }
    out.values.push_back(std::move(acc));
  }
  return out;
}

GhostVector<Integer> q_to_1_limit(const GhostVector<IntPolynomial>& g) { return evaluate_ghosts(g, Integer(1)); }

}  // namespace bcw
