#pragma once

#include "bcwitt/polynomial.hpp"
#include "bcwitt/scalar.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace bcw {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// Coefficients of det(I - tA), ascending. Computed with Berkowitz's
/// division-free recursion, so it works over any commutative ring.
///
/// Berkowitz yields det(tI - A) with descending coefficients; read ascending,
/// the same vector is the reversed polynomial det(I - tA).
template <class Scalar>
Polynomial<Scalar> det_one_minus_t(const Matrix<Scalar>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det_one_minus_t: matrix must be square");
  const Eigen::Index n = a.rows();
  if (n == 0) return Polynomial<Scalar>::one();

  std::vector<Scalar> vect{Scalar(1), Scalar(-a(0, 0))};
  for (Eigen::Index r = 1; r < n; ++r) {
    const Matrix<Scalar> sub = a.topLeftCorner(r, r);
    const Matrix<Scalar> row = a.block(r, 0, 1, r);
    Matrix<Scalar> col = a.block(0, r, r, 1);

    // Toeplitz column: 1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S
    std::vector<Scalar> c(static_cast<std::size_t>(r) + 2);
    c[0] = Scalar(1);
    c[1] = Scalar(-a(r, r));
    for (Eigen::Index k = 0; k < r; ++k) {
      c[static_cast<std::size_t>(k) + 2] = Scalar(-(row * col)(0, 0));
      if (k + 1 < r) col = (sub * col).eval();
    }

    std::vector<Scalar> next(static_cast<std::size_t>(r) + 2, Scalar(0));
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t j = 0; j <= i && j < vect.size(); ++j) next[i] += c[i - j] * vect[j];
    vect = std::move(next);
  }
  return Polynomial<Scalar>(std::move(vect));
}

/// det(tI - A), monic of degree dim(A).
template <class Scalar>
Polynomial<Scalar> characteristic_polynomial(const Matrix<Scalar>& a) {
  const auto rev = det_one_minus_t(a);
  std::vector<Scalar> out(static_cast<std::size_t>(a.rows()) + 1, Scalar(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[out.size() - 1 - i] = rev[i];
  return Polynomial<Scalar>(std::move(out));
}

template <class Scalar>
Scalar determinant(const Matrix<Scalar>& a) {
  const auto chi = characteristic_polynomial(a);
  Scalar c = chi[0];
  return (a.rows() % 2 == 0) ? c : Scalar(-c);
}

template <class Scalar>
Matrix<Scalar> matrix_power(const Matrix<Scalar>& a, std::uint64_t e) {
  Matrix<Scalar> result = Matrix<Scalar>::Identity(a.rows(), a.cols());
  Matrix<Scalar> base = a;
  while (e > 0) {
    if (e & 1U) result = (result * base).eval();
    e >>= 1U;
    if (e > 0) base = (base * base).eval();
  }
  return result;
}

/// Block-diagonal sum.
template <class Scalar>
Matrix<Scalar> block_sum(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> out = Matrix<Scalar>::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

template <class Scalar>
Matrix<Scalar> kronecker(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// The n x n block companion form with `f` in the top-right corner and
/// identity blocks on the subdiagonal. Its n-th power is diag(f, ..., f).
template <class Scalar>
Matrix<Scalar> verschiebung_block(const Matrix<Scalar>& f, std::size_t n) {
  if (n == 0) throw std::invalid_argument("verschiebung_block: n must be positive");
  const Eigen::Index d = f.rows();
  const auto nn = static_cast<Eigen::Index>(n);
  Matrix<Scalar> out = Matrix<Scalar>::Zero(d * nn, d * nn);
  if (d == 0) return out;
  out.block(0, (nn - 1) * d, d, d) = f;
  for (Eigen::Index i = 1; i < nn; ++i) out.block(i * d, (i - 1) * d, d, d) = Matrix<Scalar>::Identity(d, d);
  return out;
}

/// Companion matrix of a monic polynomial (last column holds -c_0..-c_{d-1}).
template <class Scalar>
Matrix<Scalar> companion_matrix(const Polynomial<Scalar>& p) {
  if (p.degree() < 1 || p.leading() != 1) throw std::invalid_argument("companion_matrix: need monic of degree >= 1");
  const auto d = static_cast<Eigen::Index>(p.degree());
  Matrix<Scalar> out = Matrix<Scalar>::Zero(d, d);
  for (Eigen::Index i = 1; i < d; ++i) out(i, i - 1) = Scalar(1);
  for (Eigen::Index i = 0; i < d; ++i) out(i, d - 1) = Scalar(-p[static_cast<std::size_t>(i)]);
  return out;
}

template <class To, class From>
Matrix<To> matrix_cast(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = scalar_cast<To>(m(i, j));
  return out;
}

}  // namespace bcw
