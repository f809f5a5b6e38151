#include "bcwitt/witt.hpp"

#include <string>

namespace bcw {

namespace {

void require_same_trunc(const WittVector& a, const WittVector& b) {
  if (a.trunc() != b.trunc())
    throw std::invalid_argument("Witt vectors have different truncations (" + std::to_string(a.trunc()) + " vs " +
                                std::to_string(b.trunc()) + ")");
}

// Full coefficient list c_0..c_N.
std::vector<Rational> series_of(const WittVector& w) {
  std::vector<Rational> c;
  c.reserve(w.trunc() + 1);
  c.emplace_back(1);
  c.insert(c.end(), w.coeffs().begin(), w.coeffs().end());
  return c;
}

WittVector from_series(const std::vector<Rational>& c) { return WittVector(std::vector<Rational>(c.begin() + 1, c.end())); }

}  // namespace

WittVector::WittVector(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("Witt vector truncation must be >= 1");
}

WittVector WittVector::one(std::size_t trunc) {
  if (trunc == 0) throw std::invalid_argument("Witt vector truncation must be >= 1");
  return WittVector(std::vector<Rational>(trunc, Rational(0)));
}

bool WittVector::is_integral() const {
  for (const auto& c : coeffs_)
    if (!bcw::is_integral(c)) return false;
  return true;
}

GhostVector<Rational> ghost(const WittVector& w) {
  const auto c = series_of(w);
  const std::size_t n = w.trunc();
  GhostVector<Rational> g;
  g.values.resize(n);
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc = Rational(static_cast<long>(m)) * c[m];
    for (std::size_t i = 1; i < m; ++i) acc -= g.values[i - 1] * c[m - i];
    g.values[m - 1] = acc;
  }
  return g;
}

WittVector unghost(const GhostVector<Rational>& g) {
  const std::size_t n = g.trunc();
  if (n == 0) throw std::invalid_argument("ghost vector truncation must be >= 1");
  std::vector<Rational> c(n + 1);
  c[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= m; ++i) acc += g.values[i - 1] * c[m - i];
    c[m] = acc / static_cast<long>(m);
  }
  return from_series(c);
}

WittVector witt_add(const WittVector& a, const WittVector& b) {
  require_same_trunc(a, b);
  const auto x = series_of(a), y = series_of(b);
  std::vector<Rational> out(x.size(), Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; i + j < x.size(); ++j) out[i + j] += x[i] * y[j];
  return from_series(out);
}

WittVector witt_neg(const WittVector& a) {
  const auto x = series_of(a);
  std::vector<Rational> out(x.size(), Rational(0));
  out[0] = 1;
  for (std::size_t k = 1; k < x.size(); ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc -= x[j] * out[k - j];
    out[k] = acc;
  }
  return from_series(out);
}

WittVector witt_sub(const WittVector& a, const WittVector& b) { return witt_add(a, witt_neg(b)); }

WittVector witt_mul(const WittVector& a, const WittVector& b) {
  require_same_trunc(a, b);
  return unghost(ghost(a) * ghost(b));
}

WittVector witt_scale(long n, const WittVector& a) {
  auto g = ghost(a);
  for (auto& v : g.values) v *= n;
  return unghost(g);
}

WittVector witt_divide(const WittVector& p, const WittVector& q) {
  require_same_trunc(p, q);
  const auto gp = ghost(p), gq = ghost(q);
  GhostVector<Rational> out;
  out.values.resize(gp.trunc());
  for (std::size_t i = 0; i < gp.trunc(); ++i) {
    const auto& a = gp.values[i];
    const auto& b = gq.values[i];
    if (!bcw::is_integral(a) || !bcw::is_integral(b))
      throw DomainError(ErrorKind::NotDivisible, "ghost components are not integers");
    if (b == 0) {
      if (a != 0) throw DomainError(ErrorKind::NotDivisible, "ghost component " + std::to_string(i + 1) + " of divisor is 0");
      out.values[i] = 0;
      continue;
    }
    if (numerator_of(a) % numerator_of(b) != 0)
      throw DomainError(ErrorKind::NotDivisible, "ghost component " + std::to_string(i + 1) + ": " + to_string(b) +
                                                     " does not divide " + to_string(a));
    out.values[i] = a / b;
  }
  return unghost(out);
}

WittVector teichmuller(const Rational& a, std::size_t trunc) {
  if (trunc == 0) throw std::invalid_argument("Witt vector truncation must be >= 1");
  std::vector<Rational> c(trunc);
  Rational p = 1;
  for (auto& x : c) {
    p *= a;
    x = p;
  }
  return WittVector(std::move(c));
}

WittVector frobenius(std::size_t n, const WittVector& w) {
  if (n == 0) throw std::invalid_argument("frobenius: n must be >= 1");
  const std::size_t out_trunc = w.trunc() / n;
  if (out_trunc == 0)
    throw DomainError(ErrorKind::TruncationTooSmall,
                      "floor(" + std::to_string(w.trunc()) + "/" + std::to_string(n) + ") = 0");
  if (n == 1) return w;
  const auto g = ghost(w);
  GhostVector<Rational> out;
  out.values.reserve(out_trunc);
  for (std::size_t m = 1; m <= out_trunc; ++m) out.values.push_back(g[n * m]);
  return unghost(out);
}

WittVector verschiebung(std::size_t n, const WittVector& w) {
  if (n == 0) throw std::invalid_argument("verschiebung: n must be >= 1");
  std::vector<Rational> c(w.trunc(), Rational(0));
  for (std::size_t i = 1; i * n <= w.trunc(); ++i) c[i * n - 1] = w.coeff(i);
  return WittVector(std::move(c));
}

WittVector truncate(const WittVector& w, std::size_t trunc) {
  if (trunc == 0 || trunc > w.trunc()) throw std::invalid_argument("truncate: bad truncation");
  return WittVector(std::vector<Rational>(w.coeffs().begin(), w.coeffs().begin() + static_cast<long>(trunc)));
}

}  // namespace bcw
