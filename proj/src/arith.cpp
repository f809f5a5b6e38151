#include "bcwitt/arith.hpp"

#include "bcwitt/errors.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bcw {

namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": argument must be >= 1");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto slash = s.find('/');
  const Integer num = parse_integer(s.substr(0, slash));
  if (slash == std::string::npos) return Rational(num);
  const Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  return Rational(num, den);
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("malformed integer '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("malformed integer '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s);
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& r) {
  if (is_integral(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

template <>
Integer scalar_cast<Integer, Rational>(const Rational& x) {
  if (!is_integral(x)) throw std::invalid_argument("non-integral value " + to_string(x));
  return numerator_of(x);
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out *= (n - k + i);
    out /= i;
  }
  return out;
}

Integer factorial(std::int64_t n) {
  Integer out = 1;
  for (std::int64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

Integer ipow(const Integer& base, std::uint64_t exp) {
  Integer result = 1, b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp > 0) b *= b;
  }
  return result;
}

Rational rpow(const Rational& base, std::uint64_t exp) {
  return Rational(ipow(numerator_of(base), exp), ipow(denominator_of(base), exp));
}

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotQuasiUnipotent: return "NotQuasiUnipotent";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::DegenerateIterate: return "DegenerateIterate";
    case ErrorKind::NotEffectivelyTorified: return "NotEffectivelyTorified";
    case ErrorKind::HalfTwistPresent: return "HalfTwistPresent";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
  }
  return "Unknown";
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  require_positive(n, "prime_factors");
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

int moebius(std::int64_t n) {
  require_positive(n, "moebius");
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::int64_t totient(std::int64_t n) {
  require_positive(n, "totient");
  std::int64_t out = n;
  for (auto p : prime_factors(n)) out = out / p * (p - 1);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  require_positive(n, "divisors");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

Integer stirling2(std::int64_t k, std::int64_t r) {
  if (k < 0 || r < 0) throw std::invalid_argument("stirling2: arguments must be nonnegative");
  if (r > k) return 0;
  Integer acc = 0;
  for (std::int64_t j = 0; j <= r; ++j) {
    Integer term = binomial(r, j) * ipow(Integer(j), static_cast<std::uint64_t>(k));
    if ((r - j) % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc / factorial(r);
}

IntPolynomial cyclotomic(std::int64_t m) {
  require_positive(m, "cyclotomic");
  static std::mutex mu;
  static std::map<std::int64_t, IntPolynomial> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  // Phi_m = prod_{d|m} (t^d - 1)^{mu(m/d)}: multiply the positive factors,
  // then divide out the negative ones exactly.
  IntPolynomial num = IntPolynomial::one(), den = IntPolynomial::one();
  for (auto d : divisors(m)) {
    const int mu_val = moebius(m / d);
    if (mu_val == 0) continue;
    IntPolynomial factor = IntPolynomial::monomial(1, static_cast<std::size_t>(d)) - IntPolynomial::one();
    if (mu_val > 0) num *= factor;
    else den *= factor;
  }
  IntPolynomial result = exact_divide(num, den);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(m, result);
  return result;
}

std::vector<std::int64_t> cyclotomic_factor(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("cyclotomic_factor: zero polynomial");
  if (p.leading() != 1 && p.leading() != -1)
    throw DomainError(ErrorKind::NotQuasiUnipotent, "leading coefficient is not +-1");
  IntPolynomial rest = p.leading() == 1 ? p : -p;
  std::vector<std::int64_t> out;
  // phi(d) >= sqrt(d/2), so d <= 2 deg^2 covers every candidate.
  for (std::int64_t d = 1; rest.degree() > 0 && d <= 2 * rest.degree() * rest.degree() + 2; ++d) {
    if (totient(d) > rest.degree()) continue;
    const IntPolynomial phi = cyclotomic(d);
    IntPolynomial q;
    while (rest.degree() >= phi.degree() && try_exact_divide(rest, phi, q)) {
      out.push_back(d);
      rest = q;
    }
  }
  if (rest.degree() > 0)
    throw DomainError(ErrorKind::NotQuasiUnipotent,
                      "a factor of degree " + std::to_string(rest.degree()) + " has a root that is not a root of unity");
  return out;
}

}  // namespace bcw
