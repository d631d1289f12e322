#include "lorhom/subspace.hpp"

#include <stdexcept>

#include "lorhom/linalg.hpp"

namespace lorhom {

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return Subspace(ambient);
  return row_space(Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vector(ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::row_space(const Matrix& m) {
  Subspace s(m.cols());
  auto e = rref(m);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    s.basis_.push_back(e.reduced.row_vector(r));
  }
  s.pivots_ = std::move(e.pivots);
  return s;
}

Matrix Subspace::matrix() const {
  return Matrix::from_rows(basis_, ambient_);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("subspace membership: dimension mismatch");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational f = r[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (sgn(basis_[i][j]) != 0) r[j] -= f * basis_[i][j];
    }
  }
  return lorhom::is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("subspace containment: dimension mismatch");
  for (const auto& v : other.basis_) {
    if (!contains(v)) return false;
  }
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  Vector c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v.at(pivots_[i]);
  if (combine(c) != v) throw std::invalid_argument("vector not in subspace");
  return c;
}

Vector Subspace::combine(const Vector& coords) const {
  if (coords.size() != basis_.size()) throw std::invalid_argument("coordinate count mismatch");
  Vector r(ambient_);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (sgn(coords[i]) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (sgn(basis_[i][j]) != 0) r[j] += coords[i] * basis_[i][j];
    }
  }
  return r;
}

Vector EchelonBasis::reduce(Vector v) const {
  if (v.size() != ambient_) throw std::invalid_argument("echelon basis: dimension mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (sgn(rows_[i][j]) != 0) v[j] -= f * rows_[i][j];
    }
  }
  return v;
}

bool EchelonBasis::contains(const Vector& v) const { return lorhom::is_zero(reduce(v)); }

bool EchelonBasis::insert(const Vector& v) {
  Vector r = reduce(v);
  std::size_t piv = 0;
  while (piv < ambient_ && sgn(r[piv]) == 0) ++piv;
  if (piv == ambient_) return false;
  const Rational inv = 1 / r[piv];
  for (auto& x : r) {
    if (sgn(x) != 0) x *= inv;
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  accepted_.push_back(v);
  return true;
}

}  // namespace lorhom
