#pragma once

// Finite sets with a Z/NZ-action (a Zhat-action of level N) and equivariant
// maps between them. Isomorphism classes of Z/NZ-sets are determined by the
// multiset of orbit sizes, which is what the comparisons below use.

#include "bcwitt/qz.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace bcw {

class CyclicAction {
 public:
  CyclicAction() = default;
  /// perm is the image of the generator; perm^level must be the identity.
  CyclicAction(std::int64_t level, std::vector<std::size_t> perm);

  static CyclicAction trivial(std::size_t size, std::int64_t level = 1);
  /// One orbit of size n, level n.
  static CyclicAction cycle(std::size_t n);

  std::int64_t level() const { return level_; }
  std::size_t size() const { return perm_.size(); }
  const std::vector<std::size_t>& perm() const { return perm_; }
  /// Generator applied k times.
  std::size_t apply(std::size_t point, std::uint64_t k = 1) const;

  friend bool operator==(const CyclicAction&, const CyclicAction&) = default;

 private:
  std::int64_t level_ = 1;
  std::vector<std::size_t> perm_;
};

/// Equivariant map total -> base of actions with the same level.
class RelativeObject {
 public:
  RelativeObject(CyclicAction total, CyclicAction base, std::vector<std::size_t> map);

  const CyclicAction& total() const { return total_; }
  const CyclicAction& base() const { return base_; }
  const std::vector<std::size_t>& map() const { return map_; }

  friend bool operator==(const RelativeObject&, const RelativeObject&) = default;

 private:
  CyclicAction total_;
  CyclicAction base_;
  std::vector<std::size_t> map_;
};

/// Orbits of the generator, each listed from its smallest point.
std::vector<std::vector<std::size_t>> orbits(const CyclicAction& a);
/// Sorted orbit sizes.
std::vector<std::size_t> orbit_type(const CyclicAction& a);
/// Sorted (orbit size in total, size of the image orbit in base).
std::vector<std::pair<std::size_t, std::size_t>> orbit_type(const RelativeObject& x);

/// alpha o sigma_n: generator g -> g^n, same level.
CyclicAction sigma_action(std::int64_t n, const CyclicAction& a);

/// Geometric Verschiebung on S x {0..n-1}: point (s, i) has index s n + i and
/// (s, i) -> (s, i+1) for i < n-1, (s, n-1) -> (alpha(s), 0). Level N n.
CyclicAction verschiebung_action(std::int64_t n, const CyclicAction& a);

/// Fixed set of g^k, ascending.
std::vector<std::size_t> periodic_points(const CyclicAction& a, std::int64_t k);

/// Disjoint union (levels must match; the second copy is shifted).
CyclicAction disjoint_union(const CyclicAction& a, const CyclicAction& b);
/// Product with the diagonal action, level lcm; point (i, j) has index i |b| + j.
CyclicAction product(const CyclicAction& a, const CyclicAction& b);

RelativeObject disjoint_union(const RelativeObject& a, const RelativeObject& b);
/// Product of total with an action c mapping to base x c, used to compare
/// rho_n o sigma_n with the product by (Z_n, cyclic).
RelativeObject product(const RelativeObject& x, const CyclicAction& c);

RelativeObject bc_sigma(std::int64_t n, const RelativeObject& x);
/// Verschiebung on total and base, with the map f x id.
RelativeObject bc_rho(std::int64_t n, const RelativeObject& x);

/// sum over orbits O of sum_{|O| r = 0} e(r).
QZElement euler_char(const CyclicAction& a);

}  // namespace bcw
