// Small, deliberately naive reference computations used as test oracles.
#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "lorhom/matrix.hpp"

namespace oracle {

using lorhom::Matrix;
using lorhom::Rational;
using lorhom::Vector;

// Leibniz expansion; fine up to 7x7.
inline Rational det_leibniz(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total;
  do {
    Rational term = 1;
    for (std::size_t i = 0; i < n && sgn(term) != 0; ++i) term *= m(i, perm[i]);
    if (sgn(term) == 0) continue;
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    total += (inv % 2 == 0) ? term : Rational(-term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Plain Gauss-Jordan solve of A x = b, no pivoting tricks.
inline std::optional<Vector> gauss_solve(Matrix a, Vector b) {
  const std::size_t r = a.rows(), c = a.cols();
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t k = row;
    while (k < r && a(k, col) == 0) ++k;
    if (k == r) continue;
    for (std::size_t j = 0; j < c; ++j) std::swap(a(k, j), a(row, j));
    std::swap(b[k], b[row]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rational f = a(i, col) / a(row, col);
      for (std::size_t j = 0; j < c; ++j) a(i, j) -= f * a(row, j);
      b[i] -= f * b[row];
    }
    piv.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < r; ++i)
    if (b[i] != 0) return std::nullopt;
  Vector x(c);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = b[i] / a(i, piv[i]);
  return x;
}

inline std::size_t rank_naive(Matrix a) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t k = row;
    while (k < a.rows() && a(k, col) == 0) ++k;
    if (k == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(k, j), a(row, j));
    for (std::size_t i = row + 1; i < a.rows(); ++i) {
      Rational f = a(i, col) / a(row, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    ++row;
  }
  return row;
}

// Coordinates of x in the span of the given matrices (flattened least-effort solve).
inline std::optional<Vector> coords_in(const std::vector<Matrix>& basis, const Matrix& x) {
  const std::size_t flat = x.rows() * x.cols();
  Matrix a(flat, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < flat; ++i) a(i, j) = basis[j].entries()[i];
  return gauss_solve(a, x.entries());
}

// B(b_i, b_j) = trace(ad_i ad_j), ad computed by solving for bracket coordinates.
inline Matrix killing_bruteforce(const std::vector<Matrix>& basis) {
  const std::size_t n = basis.size();
  std::vector<Matrix> ad(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto c = coords_in(basis, basis[i] * basis[j] - basis[j] * basis[i]);
      for (std::size_t k = 0; k < n; ++k) ad[i](k, j) = (*c)[k];
    }
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = (ad[i] * ad[j]).trace();
  return b;
}

// Count of positive/negative eigen-directions by Jacobi's rule on leading minors;
// only valid when all leading minors are nonzero.
inline std::optional<std::pair<int, int>> jacobi_signature(const Matrix& g) {
  Rational prev = 1;
  int plus = 0, minus = 0;
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    Rational d = det_leibniz(g.block(0, k, 0, k));
    if (d == 0) return std::nullopt;
    if (sgn(d) == sgn(prev)) ++plus; else ++minus;
    prev = d;
  }
  return std::make_pair(plus, minus);
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int range) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = static_cast<long>(rng() % static_cast<unsigned>(2 * range + 1)) - range;
  return m;
}

}  // namespace oracle
