#pragma once

#include <cstddef>
#include <vector>

#include "lorhom/matrix.hpp"
#include "lorhom/rational.hpp"

namespace lorhom {

/// Subspace of ℚ^n stored by its reduced row echelon basis, so equal
/// subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of ℚ^n.
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient);
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Basis as the rows of a matrix.
  Matrix matrix() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v with respect to basis(); throws if v is not in the space.
  Vector coordinates(const Vector& v) const;
  /// Σ coords[i] · basis()[i].
  Vector combine(const Vector& coords) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Incrementally built basis. Vectors are reduced in insertion order; a
/// vector is accepted only if it is independent of everything before it.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient) : ambient_(ambient) {}

  /// Returns true if v was independent (and is now in the span).
  bool insert(const Vector& v);
  bool contains(const Vector& v) const;
  /// v reduced against the current rows; zero iff v lies in the span.
  Vector reduce(Vector v) const;

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  /// The accepted vectors, unmodified, in insertion order.
  const std::vector<Vector>& accepted() const { return accepted_; }
  Subspace subspace() const { return Subspace::span(ambient_, accepted_); }

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vector> accepted_;
};

}  // namespace lorhom
