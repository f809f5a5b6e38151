#pragma once

// Lefschetz and Artin-Mazur zeta functions of toral endomorphisms, and the
// spectral Euler characteristic with values in Z[Q/Z].
//
// Homology of the torus T^d is the exterior algebra on H_1 = Z^d, which is
// what makes the Lefschetz number of f^n equal det(I - M^n).

#include "bcwitt/matrix.hpp"
#include "bcwitt/qz.hpp"
#include "bcwitt/witt.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace bcw {

/// Toral endomorphism given by its action M on H_1 = Z^d.
class ToralMap {
 public:
  explicit ToralMap(IntMatrix m);
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const IntMatrix& matrix() const { return m_; }

 private:
  IntMatrix m_;
};

/// prod_d (1 - t^d)^{-s_d}, only nonzero exponents stored.
struct LefschetzZeta {
  std::map<std::int64_t, Integer> exponents;
  std::int64_t period = 1;  ///< lcm of the cyclotomic indices

  WittVector expand(std::size_t trunc) const;
};

enum class ZetaKind { Lefschetz, ArtinMazur };

/// a_n = det(I - M^n), n = 1..trunc.
std::vector<Integer> lefschetz_numbers(const ToralMap& f, std::size_t trunc);

/// exp(sum_n a_n t^n / n)
WittVector lefschetz_zeta_series(const ToralMap& f, std::size_t trunc);

/// Closed product form for quasi-unipotent f: s_d = (1/d) sum_{k|d} F_k mu(d/k)
/// with F_k = prod_i Phi_{m_i/(k,m_i)}(1)^{phi(m_i)/phi(m_i/(k,m_i))}.
LefschetzZeta lefschetz_zeta_closed(const ToralMap& f);

/// exp(sum_n |det(I - M^n)| t^n / n). Throws DegenerateIterateError when some
/// det(I - M^n) vanishes.
WittVector artin_mazur_series(const ToralMap& f, std::size_t trunc);

/// Zeta of a torified variety whose tori carry the given maps: the Witt sum
/// (series product) of the per-torus zetas.
WittVector torified_dynamical_zeta(const std::vector<ToralMap>& parts, std::size_t trunc, ZetaKind kind);

/// Ghosts of the per-kind zeta (the signed or absolute fixed point counts).
GhostVector<Integer> dynamical_ghosts(const ToralMap& f, std::size_t trunc, ZetaKind kind);

/// sum over eigenvalues of M (with multiplicity) of the matching e(r). Throws
/// NotQuasiUnipotent when some eigenvalue is not a root of unity.
QZElement spectral_euler(const IntMatrix& m);

}  // namespace bcw
