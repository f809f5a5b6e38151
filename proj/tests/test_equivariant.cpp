#include "bcwitt/equivariant.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace bcw;
using namespace bcw::testing;

namespace {

QZElement e(std::int64_t num, std::int64_t den, std::int64_t c = 1) { return QZElement::basis(QZFraction(num, den), Integer(c)); }

using Sizes = std::vector<std::size_t>;

}  // namespace

TEST_CASE("actions are validated", "[equivariant]") {
  CHECK_THROWS_AS(CyclicAction(2, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(CyclicAction(2, {1, 2, 0}), std::invalid_argument);  // 3-cycle at level 2
  CHECK_THROWS_AS(CyclicAction(0, {}), std::invalid_argument);
  CHECK(CyclicAction(6, {1, 2, 0}).level() == 6);
  CHECK_THROWS_AS(RelativeObject(CyclicAction::cycle(2), CyclicAction::trivial(1, 1), {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(RelativeObject(CyclicAction::cycle(2), CyclicAction::cycle(2), {0, 0}), std::invalid_argument);
}

TEST_CASE("sigma action", "[equivariant]") {
  const CyclicAction six = CyclicAction::cycle(6);
  CHECK(orbit_type(sigma_action(2, six)) == Sizes{3, 3});
  CHECK(sigma_action(1, six) == six);
  CHECK(sigma_action(6, six) == CyclicAction::trivial(6, 6));
}

TEST_CASE("geometric Verschiebung", "[equivariant]") {
  const CyclicAction point = CyclicAction::trivial(1, 5);
  const CyclicAction v = verschiebung_action(3, point);
  CHECK(v.level() == 15);
  CHECK(orbit_type(v) == Sizes{3});
  const CyclicAction two = CyclicAction::cycle(2);
  CHECK(orbit_type(verschiebung_action(2, two)) == Sizes{4});
  CHECK(verschiebung_action(2, two).level() == 4);

  Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const CyclicAction a = random_action(rng, uniform(rng, 1, 8), static_cast<std::size_t>(uniform(rng, 0, 10)));
    for (std::int64_t n = 1; n <= 4; ++n) {
      const CyclicAction vn = verschiebung_action(n, a);
      // (Phi_n)^n = alpha x id
      for (std::size_t s = 0; s < a.size(); ++s)
        for (std::int64_t i = 0; i < n; ++i) {
          const auto nn = static_cast<std::size_t>(n);
          CHECK(vn.apply(s * nn + static_cast<std::size_t>(i), static_cast<std::uint64_t>(n)) ==
                a.perm()[s] * nn + static_cast<std::size_t>(i));
        }
    }
  }
}

TEST_CASE("periodic points", "[equivariant]") {
  const CyclicAction six = CyclicAction::cycle(6);
  CHECK(periodic_points(six, 6).size() == 6);
  CHECK(periodic_points(six, 4).empty());
  CHECK(periodic_points(CyclicAction::trivial(4, 3), 5).size() == 4);
}

TEST_CASE("periodic point identities", "[equivariant][property]") {
  Rng rng(72);
  for (int trial = 0; trial < 100; ++trial) {
    const CyclicAction a = random_action(rng, uniform(rng, 1, 8), static_cast<std::size_t>(uniform(rng, 0, 12)));
    for (std::int64_t n = 1; n <= 4; ++n)
      for (std::int64_t k = 1; k <= 32; ++k) {
        CHECK(periodic_points(sigma_action(n, a), k) == periodic_points(a, n * k));
        const auto p = periodic_points(verschiebung_action(n, a), k);
        if (k % n != 0) {
          CHECK(p.empty());
        } else {
          std::vector<std::size_t> expected;
          for (auto s : periodic_points(a, k / n))
            for (std::int64_t i = 0; i < n; ++i) expected.push_back(s * static_cast<std::size_t>(n) + static_cast<std::size_t>(i));
          CHECK(p == expected);
        }
      }
  }
}

TEST_CASE("Euler characteristic", "[equivariant]") {
  CHECK(euler_char(CyclicAction::trivial(1)) == e(0, 1));
  CHECK(euler_char(CyclicAction::cycle(3)) == e(0, 1) + e(1, 3) + e(2, 3));
  CHECK(euler_char(CyclicAction(3, {1, 2, 0, 3})) == e(0, 1, 2) + e(1, 3) + e(2, 3));
}

TEST_CASE("Euler characteristic intertwines the Bost-Connes maps", "[equivariant][property]") {
  Rng rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    const auto level = uniform(rng, 1, 8);
    const CyclicAction a = random_action(rng, level, static_cast<std::size_t>(uniform(rng, 0, 12)));
    const CyclicAction b = random_action(rng, level, static_cast<std::size_t>(uniform(rng, 0, 6)));
    const QZElement chi = euler_char(a);
    for (std::int64_t n = 1; n <= 6; ++n) {
      CHECK(euler_char(sigma_action(n, a)) == sigma(n, chi));
      CHECK(euler_char(verschiebung_action(n, a)) == rho(n, chi));
      if (std::gcd(n, level) == 1) CHECK(orbit_type(sigma_action(n, a)) == orbit_type(a));
    }
    CHECK(euler_char(disjoint_union(a, b)) == chi + euler_char(b));
    CHECK(euler_char(product(a, b)) == chi * euler_char(b));
  }
}

TEST_CASE("relative objects", "[equivariant]") {
  const CyclicAction point = CyclicAction::trivial(1);
  const RelativeObject pp(point, point, {0});
  const RelativeObject r = bc_rho(2, pp);
  CHECK(orbit_type(r.total()) == Sizes{2});
  CHECK(orbit_type(r.base()) == Sizes{2});

  const RelativeObject x(CyclicAction::cycle(3), CyclicAction::trivial(1, 3), {0, 0, 0});
  CHECK(orbit_type(bc_sigma(2, bc_rho(2, x))) == orbit_type(disjoint_union(x, x)));
  const CyclicAction z2 = CyclicAction::cycle(2);
  CHECK(orbit_type(bc_rho(2, bc_sigma(2, x))) == orbit_type(product(x, z2)));

  Rng rng(74);
  for (int trial = 0; trial < 40; ++trial) {
    const auto level = uniform(rng, 1, 6);
    const CyclicAction base = random_action(rng, level, static_cast<std::size_t>(uniform(rng, 1, 4)));
    // total: each base orbit lifted by a cover of a level-compatible size
    const CyclicAction total = product(base, random_action(rng, level, static_cast<std::size_t>(uniform(rng, 1, 3))));
    std::vector<std::size_t> map(total.size());
    const std::size_t fiber = total.size() / base.size();
    for (std::size_t i = 0; i < total.size(); ++i) map[i] = i / fiber;
    const RelativeObject y(total, base, map);
    for (std::int64_t n = 1; n <= 4; ++n) {
      CHECK(orbit_type(bc_sigma(n, bc_rho(n, y))) == orbit_type([&] {
              RelativeObject acc = y;
              for (std::int64_t i = 1; i < n; ++i) acc = disjoint_union(acc, y);
              return acc;
            }()));
      CHECK(orbit_type(bc_rho(n, bc_sigma(n, y))) == orbit_type(product(y, CyclicAction::cycle(static_cast<std::size_t>(n)))));
    }
  }
}
