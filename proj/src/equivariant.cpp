#include "bcwitt/equivariant.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bcw {

namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": argument must be >= 1");
}

std::int64_t checked_level(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("action level overflow");
  return out;
}

}  // namespace

CyclicAction::CyclicAction(std::int64_t level, std::vector<std::size_t> perm) : level_(level), perm_(std::move(perm)) {
  require_positive(level_, "CyclicAction level");
  std::vector<bool> seen(perm_.size(), false);
  for (auto p : perm_) {
    if (p >= perm_.size() || seen[p]) throw std::invalid_argument("CyclicAction: not a permutation");
    seen[p] = true;
  }
  for (const auto& orbit : orbits(*this))
    if (level_ % static_cast<std::int64_t>(orbit.size()) != 0)
      throw std::invalid_argument("CyclicAction: orbit of size " + std::to_string(orbit.size()) +
                                  " does not divide the level " + std::to_string(level_));
}

CyclicAction CyclicAction::trivial(std::size_t size, std::int64_t level) {
  std::vector<std::size_t> perm(size);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return CyclicAction(level, std::move(perm));
}

CyclicAction CyclicAction::cycle(std::size_t n) {
  if (n == 0) throw std::invalid_argument("CyclicAction::cycle: n must be >= 1");
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = (i + 1) % n;
  return CyclicAction(static_cast<std::int64_t>(n), std::move(perm));
}

std::size_t CyclicAction::apply(std::size_t point, std::uint64_t k) const {
  k %= static_cast<std::uint64_t>(level_);
  for (std::uint64_t i = 0; i < k; ++i) point = perm_[point];
  return point;
}

RelativeObject::RelativeObject(CyclicAction total, CyclicAction base, std::vector<std::size_t> map)
    : total_(std::move(total)), base_(std::move(base)), map_(std::move(map)) {
  if (total_.level() != base_.level()) throw std::invalid_argument("RelativeObject: levels differ");
  if (map_.size() != total_.size()) throw std::invalid_argument("RelativeObject: map has wrong length");
  for (std::size_t x = 0; x < map_.size(); ++x) {
    if (map_[x] >= base_.size()) throw std::invalid_argument("RelativeObject: map leaves the base");
    if (map_[total_.perm()[x]] != base_.perm()[map_[x]]) throw std::invalid_argument("RelativeObject: map is not equivariant");
  }
}

std::vector<std::vector<std::size_t>> orbits(const CyclicAction& a) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(a.size(), false);
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t x = s; !seen[x]; x = a.perm()[x]) {
      seen[x] = true;
      orbit.push_back(x);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<std::size_t> orbit_type(const CyclicAction& a) {
  std::vector<std::size_t> out;
  for (const auto& o : orbits(a)) out.push_back(o.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> orbit_type(const RelativeObject& x) {
  std::vector<std::size_t> base_orbit_size(x.base().size());
  for (const auto& o : orbits(x.base()))
    for (auto p : o) base_orbit_size[p] = o.size();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& o : orbits(x.total())) out.emplace_back(o.size(), base_orbit_size[x.map()[o.front()]]);
  std::sort(out.begin(), out.end());
  return out;
}

CyclicAction sigma_action(std::int64_t n, const CyclicAction& a) {
  require_positive(n, "sigma_action");
  std::vector<std::size_t> perm(a.size());
  for (std::size_t s = 0; s < a.size(); ++s) perm[s] = a.apply(s, static_cast<std::uint64_t>(n));
  return CyclicAction(a.level(), std::move(perm));
}

CyclicAction verschiebung_action(std::int64_t n, const CyclicAction& a) {
  require_positive(n, "verschiebung_action");
  const auto nn = static_cast<std::size_t>(n);
  std::vector<std::size_t> perm(a.size() * nn);
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t i = 0; i < nn; ++i) perm[s * nn + i] = (i + 1 < nn) ? s * nn + i + 1 : a.perm()[s] * nn;
  return CyclicAction(checked_level(a.level(), n), std::move(perm));
}

std::vector<std::size_t> periodic_points(const CyclicAction& a, std::int64_t k) {
  require_positive(k, "periodic_points");
  std::vector<std::size_t> out;
  for (const auto& o : orbits(a))
    if (k % static_cast<std::int64_t>(o.size()) == 0) out.insert(out.end(), o.begin(), o.end());
  std::sort(out.begin(), out.end());
  return out;
}

CyclicAction disjoint_union(const CyclicAction& a, const CyclicAction& b) {
  if (a.level() != b.level()) throw std::invalid_argument("disjoint_union: levels differ");
  std::vector<std::size_t> perm = a.perm();
  for (auto p : b.perm()) perm.push_back(p + a.size());
  return CyclicAction(a.level(), std::move(perm));
}

CyclicAction product(const CyclicAction& a, const CyclicAction& b) {
  std::vector<std::size_t> perm(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) perm[i * b.size() + j] = a.perm()[i] * b.size() + b.perm()[j];
  return CyclicAction(std::lcm(a.level(), b.level()), std::move(perm));
}

RelativeObject disjoint_union(const RelativeObject& a, const RelativeObject& b) {
  std::vector<std::size_t> map = a.map();
  for (auto p : b.map()) map.push_back(p + a.base().size());
  return RelativeObject(disjoint_union(a.total(), b.total()), disjoint_union(a.base(), b.base()), std::move(map));
}

RelativeObject product(const RelativeObject& x, const CyclicAction& c) {
  std::vector<std::size_t> map(x.total().size() * c.size());
  for (std::size_t i = 0; i < x.total().size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) map[i * c.size() + j] = x.map()[i] * c.size() + j;
  return RelativeObject(product(x.total(), c), product(x.base(), c), std::move(map));
}

RelativeObject bc_sigma(std::int64_t n, const RelativeObject& x) {
  return RelativeObject(sigma_action(n, x.total()), sigma_action(n, x.base()), x.map());
}

RelativeObject bc_rho(std::int64_t n, const RelativeObject& x) {
  require_positive(n, "bc_rho");
  const auto nn = static_cast<std::size_t>(n);
  std::vector<std::size_t> map(x.total().size() * nn);
  for (std::size_t s = 0; s < x.total().size(); ++s)
    for (std::size_t i = 0; i < nn; ++i) map[s * nn + i] = x.map()[s] * nn + i;
  return RelativeObject(verschiebung_action(n, x.total()), verschiebung_action(n, x.base()), std::move(map));
}

QZElement euler_char(const CyclicAction& a) {
  QZElement out;
  for (const auto& o : orbits(a)) out += pi_n_times_n(static_cast<std::int64_t>(o.size()));
  return out;
}

}  // namespace bcw
