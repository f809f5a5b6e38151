#include "bcwitt/endo.hpp"

#include "bcwitt/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace bcw {

namespace {

// Positive divisors of |n| (n != 0) by trial division.
std::vector<Integer> integer_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<std::pair<Integer, unsigned>> factors;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

// Primitive integer polynomial proportional to p.
IntPolynomial integerize(const RatPolynomial& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) l = boost::multiprecision::lcm(l, denominator_of(c));
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    out.push_back(numerator_of(c * Rational(l)));
    content = boost::multiprecision::gcd(content, out.back());
  }
  if (content > 1)
    for (auto& x : out) x /= content;
  return IntPolynomial(std::move(out));
}

}  // namespace

EndoObject::EndoObject(RatMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("endomorphism matrix must be square");
}

EndoObject EndoObject::diagonal(const std::vector<Rational>& entries) {
  RatMatrix m = RatMatrix::Zero(static_cast<Eigen::Index>(entries.size()), static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = entries[i];
  return EndoObject(std::move(m));
}

EndoObject direct_sum(const EndoObject& a, const EndoObject& b) { return EndoObject(block_sum(a.matrix(), b.matrix())); }

EndoObject tensor(const EndoObject& a, const EndoObject& b) { return EndoObject(kronecker(a.matrix(), b.matrix())); }

RatRationalWitt l_map(const EndoObject& e) { return RatRationalWitt::inverse_of(det_one_minus_t(e.matrix())); }

GhostVector<Rational> trace_ghosts(const EndoObject& e, std::size_t trunc) {
  GhostVector<Rational> out;
  RatMatrix power = RatMatrix::Identity(e.matrix().rows(), e.matrix().cols());
  for (std::size_t m = 1; m <= trunc; ++m) {
    power = (power * e.matrix()).eval();
    out.values.push_back(e.dim() == 0 ? Rational(0) : Rational(power.trace()));
  }
  return out;
}

EndoObject endo_frobenius(std::size_t n, const EndoObject& e) {
  if (n == 0) throw std::invalid_argument("endo_frobenius: n must be >= 1");
  return EndoObject(matrix_power(e.matrix(), n));
}

EndoObject endo_verschiebung(std::size_t n, const EndoObject& e) {
  if (n == 0) throw std::invalid_argument("endo_verschiebung: n must be >= 1");
  return EndoObject(verschiebung_block(e.matrix(), n));
}

RatRationalWitt delta(const GradedEndoObject& g) {
  return RatRationalWitt(det_one_minus_t(g.minus.matrix()), det_one_minus_t(g.plus.matrix()));
}

std::vector<Rational> rational_roots(const RatPolynomial& p, RatPolynomial& rest) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<Rational> roots;
  rest = p;
  while (rest.degree() > 0 && rest[0] == 0) {
    roots.emplace_back(0);
    rest = RatPolynomial(std::vector<Rational>(rest.coeffs().begin() + 1, rest.coeffs().end()));
  }
  if (rest.degree() > 0) {
    const IntPolynomial ip = integerize(rest);
    std::set<Rational> candidates;
    for (const auto& u : integer_divisors(ip[0]))
      for (const auto& v : integer_divisors(ip.leading())) {
        candidates.insert(Rational(u, v));
        candidates.insert(Rational(-u, v));
      }
    for (const auto& r : candidates) {
      const RatPolynomial linear{Rational(-r), Rational(1)};
      while (rest.degree() > 0 && rest.evaluate(r) == 0) {
        roots.push_back(r);
        rest = divmod(rest, linear).first;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

GradedEndoObject phi_mu(const RatRationalWitt& z) {
  // A root r of prod(1 - a t) corresponds to the eigenvalue a = 1/r.
  auto eigenvalues = [](const RatPolynomial& p, const char* which) {
    RatPolynomial rest;
    auto roots = rational_roots(p, rest);
    if (rest.degree() > 0)
      throw DomainError(ErrorKind::NotSplit, std::string(which) + " has an irreducible factor of degree " +
                                                 std::to_string(rest.degree()) + " over Q");
    std::vector<Rational> out;
    for (const auto& r : roots) out.push_back(Rational(1) / r);
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto alphas = eigenvalues(z.num(), "numerator");
  const auto betas = eigenvalues(z.den(), "denominator");
  return {EndoObject::diagonal(betas), EndoObject::diagonal(alphas)};
}

}  // namespace bcw
