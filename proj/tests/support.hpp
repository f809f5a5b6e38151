#pragma once

// Seeded generators and independent reference implementations used by the
// unit and acceptance tests. The oracles deliberately avoid the library's
// own algorithms (Newton recursion, Berkowitz, cyclotomic trial division).

#include "bcwitt/arith.hpp"
#include "bcwitt/equivariant.hpp"
#include "bcwitt/matrix.hpp"
#include "bcwitt/qz.hpp"
#include "bcwitt/torified.hpp"
#include "bcwitt/witt.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace bcw::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// ---- generators

inline QZElement random_qz(Rng& rng, std::int64_t max_den = 24, int max_terms = 6) {
  QZElement out;
  const auto terms = uniform(rng, 0, max_terms);
  for (std::int64_t i = 0; i < terms; ++i) {
    const auto den = uniform(rng, 1, max_den);
    out.add_term(QZFraction(uniform(rng, 0, den - 1), den), Integer(uniform(rng, -5, 5)));
  }
  return out;
}

inline WittVector random_witt(Rng& rng, std::size_t trunc, std::int64_t bound = 4, bool rational = false) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < trunc; ++i) {
    Rational x(uniform(rng, -bound, bound));
    if (rational) x /= uniform(rng, 1, 3);
    c.push_back(x);
  }
  return WittVector(std::move(c));
}

inline TorifiedClass random_class(Rng& rng, int max_degree = 5, std::int64_t bound = 6) {
  std::vector<Integer> c;
  const auto d = uniform(rng, 0, max_degree);
  for (std::int64_t i = 0; i <= d; ++i) c.emplace_back(uniform(rng, 0, bound));
  return TorifiedClass(std::move(c));
}

inline IntMatrix random_int_matrix(Rng& rng, Eigen::Index dim, std::int64_t bound = 3) {
  IntMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = Integer(uniform(rng, -bound, bound));
  return m;
}

/// An action of level N on `size` points: random orbit sizes dividing N, then
/// a random relabeling.
inline CyclicAction random_action(Rng& rng, std::int64_t level, std::size_t size) {
  std::vector<std::int64_t> divs;
  for (std::int64_t d = 1; d <= level; ++d)
    if (level % d == 0) divs.push_back(d);
  std::vector<std::size_t> labels(size);
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  std::shuffle(labels.begin(), labels.end(), rng);
  std::vector<std::size_t> perm(size);
  std::size_t pos = 0;
  while (pos < size) {
    std::int64_t d;
    do d = divs[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(divs.size()) - 1))];
    while (pos + static_cast<std::size_t>(d) > size);
    for (std::int64_t i = 0; i < d; ++i)
      perm[labels[pos + static_cast<std::size_t>(i)]] = labels[pos + static_cast<std::size_t>((i + 1) % d)];
    pos += static_cast<std::size_t>(d);
  }
  return CyclicAction(level, std::move(perm));
}

/// Action with the given orbit sizes, points relabeled by `labels`.
inline CyclicAction action_from_cycle_type(std::int64_t level, const std::vector<std::size_t>& sizes,
                                           const std::vector<std::size_t>& labels) {
  std::vector<std::size_t> perm(labels.size());
  std::size_t pos = 0;
  for (auto d : sizes) {
    for (std::size_t i = 0; i < d; ++i) perm[labels[pos + i]] = labels[pos + (i + 1) % d];
    pos += d;
  }
  return CyclicAction(level, std::move(perm));
}

/// Calls f on every nonincreasing sequence of parts from `parts` with sum <= max_sum.
inline void for_each_multiset(const std::vector<std::size_t>& parts, std::size_t max_sum,
                              const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t sum) {
    f(current);
    for (std::size_t i = start; i < parts.size(); ++i) {
      if (sum + parts[i] > max_sum) continue;
      current.push_back(parts[i]);
      rec(i, sum + parts[i]);
      current.pop_back();
    }
  };
  rec(0, 0);
}

// ---- oracles

inline int moebius_oracle(std::int64_t n) {
  int sign = 1;
  for (std::int64_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

inline std::int64_t totient_oracle(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

/// Set partitions of {1..k} into r blocks, by the recurrence on the last element.
inline Integer stirling2_oracle(std::int64_t k, std::int64_t r) {
  std::vector<std::vector<Integer>> s(static_cast<std::size_t>(k) + 1, std::vector<Integer>(static_cast<std::size_t>(k) + 2, 0));
  s[0][0] = 1;
  for (std::int64_t n = 1; n <= k; ++n)
    for (std::int64_t j = 1; j <= n; ++j) {
      const auto un = static_cast<std::size_t>(n), uj = static_cast<std::size_t>(j);
      s[un][uj] = Integer(j) * s[un - 1][uj] + s[un - 1][uj - 1];
    }
  if (r < 0 || r > k) return 0;
  return s[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)];
}

/// Ghosts from the log derivative t Z'(t) / Z(t) by naive series division.
inline std::vector<Rational> ghost_oracle(const std::vector<Rational>& series) {
  const std::size_t n = series.size() - 1;  // series[0] = 1
  std::vector<Rational> deriv(n + 1, Rational(0));
  for (std::size_t i = 1; i <= n; ++i) deriv[i] = series[i] * Rational(static_cast<long>(i));
  std::vector<Rational> q(n + 1, Rational(0));
  for (std::size_t i = 0; i <= n; ++i) {
    Rational acc = deriv[i];
    for (std::size_t j = 1; j <= i; ++j) acc -= series[j] * q[i - j];
    q[i] = acc;
  }
  return std::vector<Rational>(q.begin() + 1, q.end());
}

inline std::vector<Rational> ghost_oracle(const WittVector& w) {
  std::vector<Rational> s{Rational(1)};
  s.insert(s.end(), w.coeffs().begin(), w.coeffs().end());
  return ghost_oracle(s);
}

/// exp(sum_m g_m t^m / m) through the exponential series sum_k x^k / k!.
inline std::vector<Rational> exp_oracle(const std::vector<Rational>& ghosts) {
  const std::size_t n = ghosts.size();
  std::vector<Rational> x(n + 1, Rational(0));
  for (std::size_t m = 1; m <= n; ++m) x[m] = ghosts[m - 1] / Rational(static_cast<long>(m));
  std::vector<Rational> out(n + 1, Rational(0)), power(n + 1, Rational(0));
  power[0] = 1;
  Rational fact = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) {
      std::vector<Rational> next(n + 1, Rational(0));
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 1; i + j <= n; ++j) next[i + j] += power[i] * x[j];
      power = std::move(next);
      fact *= Rational(static_cast<long>(k));
    }
    for (std::size_t i = 0; i <= n; ++i) out[i] += power[i] / fact;
  }
  return out;
}

/// Leibniz expansion of the determinant.
template <class Scalar>
Scalar det_oracle(const Matrix<Scalar>& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  Scalar total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Scalar term(inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < n; ++i) term *= m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(p[i]));
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// sum_k (-1)^k tr(Lambda^k A) as a sum of signed principal minors: the
/// alternating trace on the exterior algebra, i.e. the Lefschetz number.
inline Integer exterior_trace_oracle(const IntMatrix& a) {
  const auto n = static_cast<std::size_t>(a.rows());
  Integer total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Eigen::Index> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) idx.push_back(static_cast<Eigen::Index>(i));
    IntMatrix minor(static_cast<Eigen::Index>(idx.size()), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j)
        minor(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(idx[i], idx[j]);
    const Integer d = idx.empty() ? Integer(1) : det_oracle(minor);
    total += (idx.size() % 2 == 0) ? d : Integer(-d);
  }
  return total;
}

/// Z[Q/Z] elements with denominators dividing L as functions on Z/L, so the
/// product is cyclic convolution.
struct QZOracle {
  std::int64_t modulus;
  std::vector<Integer> values;

  QZOracle(std::int64_t l, const QZElement& a) : modulus(l), values(static_cast<std::size_t>(l), Integer(0)) {
    for (const auto& [r, c] : a.terms()) values[static_cast<std::size_t>(r.num() * (l / r.den()))] += c;
  }

  QZOracle convolve(const QZOracle& o) const {
    QZOracle out(modulus, QZElement{});
    for (std::int64_t i = 0; i < modulus; ++i) {
      if (values[static_cast<std::size_t>(i)] == 0) continue;
      for (std::int64_t j = 0; j < modulus; ++j)
        if (o.values[static_cast<std::size_t>(j)] != 0)
          out.values[static_cast<std::size_t>((i + j) % modulus)] += values[static_cast<std::size_t>(i)] * o.values[static_cast<std::size_t>(j)];
    }
    return out;
  }

  QZElement to_element() const {
    QZElement out;
    for (std::int64_t i = 0; i < modulus; ++i) out.add_term(QZFraction(i, modulus), values[static_cast<std::size_t>(i)]);
    return out;
  }
};

/// Brute-force Q/Z roots of t^n - e(r) by scanning k/(n den).
inline QZElement rho_oracle(std::int64_t n, const QZElement& a) {
  QZElement out;
  for (const auto& [r, c] : a.terms()) {
    const std::int64_t big = n * r.den();
    for (std::int64_t k = 0; k < big; ++k) {
      const QZFraction s(k, big);
      if (s.scaled(n) == r) out.add_term(s, c);
    }
  }
  return out;
}

}  // namespace bcw::testing
