#include "bcwitt/dynamical.hpp"

#include "bcwitt/arith.hpp"
#include "bcwitt/errors.hpp"

#include <stdexcept>
#include <string>

namespace bcw {

namespace {

void require_trunc(std::size_t trunc) {
  if (trunc == 0) throw std::invalid_argument("truncation must be >= 1");
}

}  // namespace

ToralMap::ToralMap(IntMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) throw std::invalid_argument("toral map needs a nonempty square matrix");
}

WittVector LefschetzZeta::expand(std::size_t trunc) const {
  require_trunc(trunc);
  // ghost of (1 - t^d)^{-s} is d s at multiples of d
  GhostVector<Integer> g;
  g.values.assign(trunc, Integer(0));
  for (const auto& [d, s] : exponents)
    for (auto m = static_cast<std::size_t>(d); m <= trunc; m += static_cast<std::size_t>(d)) g.values[m - 1] += s * d;
  return unghost(g);
}

std::vector<Integer> lefschetz_numbers(const ToralMap& f, std::size_t trunc) {
  require_trunc(trunc);
  std::vector<Integer> out;
  out.reserve(trunc);
  const IntMatrix& m = f.matrix();
  IntMatrix power = IntMatrix::Identity(m.rows(), m.cols());
  for (std::size_t n = 1; n <= trunc; ++n) {
    power = (power * m).eval();
    // det(I - A) = det(1 - tA) at t = 1
    out.push_back(det_one_minus_t(power).evaluate(Integer(1)));
  }
  return out;
}

WittVector lefschetz_zeta_series(const ToralMap& f, std::size_t trunc) {
  return unghost(GhostVector<Integer>{lefschetz_numbers(f, trunc)});
}

LefschetzZeta lefschetz_zeta_closed(const ToralMap& f) {
  const auto indices = cyclotomic_factor(characteristic_polynomial(f.matrix()));
  std::int64_t period = 1;
  for (auto mi : indices) period = lcm(period, mi);

  auto fixed_count = [&](std::int64_t k) {
    Integer acc = 1;
    for (auto mi : indices) {
      const std::int64_t reduced = mi / gcd(k, mi);
      const Integer base = cyclotomic(reduced).evaluate(Integer(1));
      acc *= ipow(base, static_cast<std::uint64_t>(totient(mi) / totient(reduced)));
    }
    return acc;
  };

  LefschetzZeta out;
  out.period = period;
  for (auto d : divisors(period)) {
    Integer acc = 0;
    for (auto k : divisors(d)) acc += fixed_count(k) * moebius(d / k);
    if (acc % d != 0) throw std::logic_error("Lefschetz exponent s_" + std::to_string(d) + " is not an integer");
    acc /= d;
    if (acc != 0) out.exponents.emplace(d, acc);
  }
  return out;
}

GhostVector<Integer> dynamical_ghosts(const ToralMap& f, std::size_t trunc, ZetaKind kind) {
  auto a = lefschetz_numbers(f, trunc);
  if (kind == ZetaKind::ArtinMazur) {
    for (std::size_t n = 0; n < a.size(); ++n) {
      if (a[n] == 0) throw DegenerateIterateError(static_cast<long long>(n + 1));
      if (a[n] < 0) a[n] = -a[n];
    }
  }
  return GhostVector<Integer>{std::move(a)};
}

WittVector artin_mazur_series(const ToralMap& f, std::size_t trunc) {
  return unghost(dynamical_ghosts(f, trunc, ZetaKind::ArtinMazur));
}

WittVector torified_dynamical_zeta(const std::vector<ToralMap>& parts, std::size_t trunc, ZetaKind kind) {
  require_trunc(trunc);
  WittVector acc = WittVector::one(trunc);
  for (const auto& part : parts) acc = witt_add(acc, unghost(dynamical_ghosts(part, trunc, kind)));
  return acc;
}

QZElement spectral_euler(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("spectral_euler: matrix must be square");
  QZElement out;
  if (m.rows() == 0) return out;
  for (auto d : cyclotomic_factor(characteristic_polynomial(m))) out += primitive_roots(d);
  return out;
}

}  // namespace bcw
