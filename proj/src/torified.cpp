#include "bcwitt/torified.hpp"

#include "bcwitt/arith.hpp"
#include "bcwitt/errors.hpp"

#include <stdexcept>
#include <string>

namespace bcw {

namespace {

void require_nonnegative(const IntPolynomial& p) {
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] < 0) throw std::invalid_argument("torified class has negative coefficient at T^" + std::to_string(k));
}

}  // namespace

TorifiedClass::TorifiedClass(std::vector<Integer> coeffs) : poly_(std::move(coeffs)) { require_nonnegative(poly_); }

TorifiedClass::TorifiedClass(IntPolynomial poly) : poly_(std::move(poly)) { require_nonnegative(poly_); }

LClass::LClass(Terms doubled_terms) {
  for (auto& [e, c] : doubled_terms)
    if (c != 0) terms_.emplace(e, std::move(c));
}

LClass LClass::from_coeffs(const std::vector<Integer>& coeffs) {
  Terms t;
  for (std::size_t i = 0; i < coeffs.size(); ++i) t[2 * static_cast<std::int64_t>(i)] = coeffs[i];
  return LClass(std::move(t));
}

Integer LClass::coeff_doubled(std::int64_t doubled) const {
  auto it = terms_.find(doubled);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool LClass::has_half_twist() const {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return true;
  return false;
}

LClass t_to_l(const TorifiedClass& c) {
  const IntPolynomial in_l = taylor_shift(c.poly(), Integer(-1));
  return LClass::from_coeffs(in_l.coeffs());
}

TorifiedClass l_to_t(const LClass& c) {
  if (c.has_half_twist()) throw DomainError(ErrorKind::HalfTwistPresent, "class has a half-integer Tate twist");
  std::vector<Integer> coeffs;
  for (const auto& [e, x] : c.doubled_terms()) {
    if (e < 0) throw DomainError(ErrorKind::NotEffectivelyTorified, "negative power of L has no polynomial T-expansion");
    const auto i = static_cast<std::size_t>(e / 2);
    if (coeffs.size() <= i) coeffs.resize(i + 1, Integer(0));
    coeffs[i] = x;
  }
  const IntPolynomial in_t = taylor_shift(IntPolynomial(std::move(coeffs)), Integer(1));
  for (std::size_t k = 0; k < in_t.size(); ++k)
    if (in_t[k] < 0)
      throw DomainError(ErrorKind::NotEffectivelyTorified,
                        "coefficient of T^" + std::to_string(k) + " is " + to_string(in_t[k]));
  return TorifiedClass(in_t);
}

Integer f1m_points(const TorifiedClass& c, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("f1m_points: m must be >= 1");
  return c.poly().evaluate(Integer(m));
}

Integer euler_characteristic(const TorifiedClass& c) { return c.coeff(0); }

TorifiedClass bb_assemble(const std::vector<BBPiece>& pieces) {
  IntPolynomial acc;
  const IntPolynomial affine_line{Integer(1), Integer(1)};
  for (const auto& piece : pieces) acc += piece.fixed_component.poly() * pow(affine_line, piece.fiber_dim);
  return TorifiedClass(acc);
}

LClass virtual_motive(const LClass& c, std::int64_t dim) {
  if (c.has_half_twist()) throw std::invalid_argument("virtual_motive: input must have integral exponents");
  if (dim < 0) throw std::invalid_argument("virtual_motive: dimension must be >= 0");
  LClass::Terms shifted;
  for (const auto& [e, x] : c.doubled_terms()) shifted[e - dim] = x;
  return LClass(std::move(shifted));
}

LeveledClass bc_sigma(std::int64_t n, const LeveledClass& x) {
  if (n < 1) throw std::invalid_argument("bc_sigma: n must be >= 1");
  return x;
}

LeveledClass bc_rho(std::int64_t n, const LeveledClass& x) {
  if (n < 1) throw std::invalid_argument("bc_rho: n must be >= 1");
  return {Integer(n) * x.cls, x.level * n};
}

}  // namespace bcw
