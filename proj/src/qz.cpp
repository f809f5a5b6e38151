#include "bcwitt/qz.hpp"

#include "bcwitt/arith.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace bcw {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("Q/Z denominator overflow");
  return out;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a modulo m (gcd(a, m) = 1, m >= 1).
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  return mod(old_s, m);
}

bool is_smooth(std::int64_t n, const std::set<std::int64_t>& primes) {
  for (auto p : primes)
    while (n % p == 0) n /= p;
  return n == 1;
}

bool is_coprime_to(std::int64_t n, const std::set<std::int64_t>& primes) {
  for (auto p : primes)
    if (n % p == 0) return false;
  return true;
}

}  // namespace

QZFraction::QZFraction(std::int64_t num, std::int64_t den) {
  if (den < 1) throw std::invalid_argument("QZFraction: denominator must be positive");
  num = mod(num, den);
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

QZFraction QZFraction::operator+(const QZFraction& o) const {
  const std::int64_t l = std::lcm(den_, o.den_);
  return QZFraction(num_ * (l / den_) + o.num_ * (l / o.den_), l);
}

QZFraction QZFraction::scaled(std::int64_t n) const {
  // n r = (n num) / den; reduce n first to keep the product small.
  return QZFraction(checked_mul(mod(n, den_), num_), den_);
}

QZElement::QZElement(Terms terms) {
  for (auto& [r, c] : terms)
    if (c != 0) terms_.emplace(r, std::move(c));
}

QZElement QZElement::basis(const QZFraction& r, const Integer& c) {
  QZElement out;
  out.add_term(r, c);
  return out;
}

Integer QZElement::coefficient(const QZFraction& r) const {
  auto it = terms_.find(r);
  return it == terms_.end() ? Integer(0) : it->second;
}

void QZElement::add_term(const QZFraction& r, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(r, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

QZElement& QZElement::operator+=(const QZElement& o) {
  for (const auto& [r, c] : o.terms_) add_term(r, c);
  return *this;
}

QZElement& QZElement::operator-=(const QZElement& o) {
  for (const auto& [r, c] : o.terms_) add_term(r, -c);
  return *this;
}

QZElement& QZElement::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [r, x] : terms_) x *= c;
  return *this;
}

QZElement operator*(const QZElement& a, const QZElement& b) {
  QZElement out;
  for (const auto& [r, x] : a.terms_)
    for (const auto& [s, y] : b.terms_) out.add_term(r + s, x * y);
  return out;
}

QZElement sigma(std::int64_t n, const QZElement& a) {
  if (n < 1) throw std::invalid_argument("sigma: n must be >= 1");
  QZElement out;
  for (const auto& [r, c] : a.terms()) out.add_term(r.scaled(n), c);
  return out;
}

QZElement rho(std::int64_t n, const QZElement& a) {
  if (n < 1) throw std::invalid_argument("rho: n must be >= 1");
  QZElement out;
  for (const auto& [r, c] : a.terms()) {
    // r' = (r + j)/n = (num + j den) / (n den), j = 0..n-1
    const std::int64_t den = checked_mul(n, r.den());
    for (std::int64_t j = 0; j < n; ++j) out.add_term(QZFraction(r.num() + j * r.den(), den), c);
  }
  return out;
}

QZElement pi_n_times_n(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("pi_n_times_n: n must be >= 1");
  QZElement out;
  for (std::int64_t j = 0; j < n; ++j) out.add_term(QZFraction(j, n), 1);
  return out;
}

QZElement primitive_roots(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("primitive_roots: d must be >= 1");
  QZElement out;
  for (std::int64_t k = 0; k < d; ++k)
    if (std::gcd(k, d) == 1) out.add_term(QZFraction(k, d), 1);
  return out;
}

SplitQZElement::SplitQZElement(std::set<std::int64_t> primes, Terms terms) : primes_(std::move(primes)) {
  if (primes_.empty()) throw std::invalid_argument("split: prime set must be nonempty");
  for (auto p : primes_)
    if (p < 2 || prime_factors(p).size() != 1 || prime_factors(p)[0] != p)
      throw std::invalid_argument("split: " + std::to_string(p) + " is not prime");
  for (auto& [key, c] : terms) {
    if (!is_smooth(key.first.den(), primes_) || !is_coprime_to(key.second.den(), primes_))
      throw std::invalid_argument("split: key does not respect the prime decomposition");
    if (c != 0) terms_.emplace(key, std::move(c));
  }
}

std::pair<QZFraction, QZFraction> split_fraction(const std::set<std::int64_t>& primes, const QZFraction& r) {
  std::int64_t smooth = 1, rest = r.den();
  for (auto p : primes)
    while (rest % p == 0) {
      rest /= p;
      smooth *= p;
    }
  // a/(s t) = x/s + y/t  <=>  a = x t + y s (mod s t)
  const std::int64_t x = mod(checked_mul(mod(r.num(), smooth), inverse_mod(rest, smooth)), smooth);
  const std::int64_t y = mod(checked_mul(mod(r.num(), rest), inverse_mod(smooth, rest)), rest);
  return {QZFraction(x, smooth), QZFraction(y, rest)};
}

SplitQZElement split(const std::set<std::int64_t>& primes, const QZElement& a) {
  SplitQZElement::Terms terms;
  for (const auto& [r, c] : a.terms()) terms[split_fraction(primes, r)] += c;
  return SplitQZElement(primes, std::move(terms));
}

QZElement unsplit(const SplitQZElement& s) {
  QZElement out;
  for (const auto& [key, c] : s.terms()) out.add_term(key.first + key.second, c);
  return out;
}

}  // namespace bcw
