#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lorhom/linalg.hpp"
#include "lorhom/matrix.hpp"
#include "lorhom/subspace.hpp"

namespace lorhom {

/// Raised for structural problems: non-closed bases, dependent bases,
/// violated preconditions of Lie-theoretic constructions.
class LieError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A real Lie algebra given by a basis of square matrices. Elements are
/// handled as coordinate vectors with respect to that basis. Structure
/// constants, ad matrices and the Killing form are computed once at
/// construction; copies share the immutable data.
class MatrixLieAlgebra {
 public:
  MatrixLieAlgebra() = default;

  /// Throws LieError on a dependent basis or when some bracket leaves the span.
  static MatrixLieAlgebra from_basis(std::size_t ambient_size, std::vector<Matrix> basis);
  /// Same, but drops dependent matrices and closes the span under brackets.
  static MatrixLieAlgebra generated_by(std::size_t ambient_size, const std::vector<Matrix>& gens);
  /// Abstract algebra from c[i][j] = coordinates of [b_i, b_j]. Intended for
  /// tests and fixtures. Antisymmetry is always checked, Jacobi on request.
  static MatrixLieAlgebra from_structure_constants(std::size_t dim,
                                                   const std::vector<std::vector<Vector>>& c,
                                                   bool check_jacobi = true);

  std::size_t dim() const { return d_ ? d_->dim : 0; }
  std::size_t ambient_size() const { return d_ ? d_->ambient : 0; }
  bool is_abstract() const { return d_ && d_->abstract; }
  const std::vector<Matrix>& basis() const;
  const Matrix& basis(std::size_t i) const { return basis().at(i); }

  /// Σ coords[i] b_i.
  Matrix element(const Vector& coords) const;
  std::optional<Vector> try_coordinates(const Matrix& x) const;
  /// Throws LieError if x is not in the algebra.
  Vector coordinates(const Matrix& x) const;

  const Vector& structure_constant(std::size_t i, std::size_t j) const { return d_->c[i][j]; }
  Vector bracket(const Vector& x, const Vector& y) const;
  const Matrix& ad_basis(std::size_t i) const { return d_->ad[i]; }
  Matrix ad(const Vector& x) const;

  const Matrix& killing() const { return d_->killing; }
  Rational killing(const Vector& x, const Vector& y) const;
  Matrix killing_on(const Subspace& s) const;

  Subspace full() const { return Subspace::full(dim()); }
  Subspace zero() const { return Subspace(dim()); }

 private:
  struct Data {
    std::size_t ambient = 0;
    std::size_t dim = 0;
    bool abstract = false;
    std::vector<Matrix> basis;
    // rref of flattened basis, with the transform back to the basis
    std::vector<std::size_t> pivots;
    Matrix reduced;
    Matrix transform;
    std::vector<std::vector<Vector>> c;
    std::vector<Matrix> ad;
    Matrix killing;
  };
  static void finish(Data& d);
  std::shared_ptr<const Data> d_;
};

/// Subalgebra of a parent given by a span in parent coordinates.
struct SubalgebraHandle {
  MatrixLieAlgebra parent;
  Subspace span;

  /// Throws LieError if span is not bracket-closed.
  static SubalgebraHandle make(const MatrixLieAlgebra& parent, const Subspace& span);
  /// The subalgebra as an algebra in its own right (intrinsic Killing form).
  MatrixLieAlgebra intrinsic() const;
};

/// span{[a, b] : a ∈ A, b ∈ B}.
Subspace bracket_span(const MatrixLieAlgebra& g, const Subspace& a, const Subspace& b);
bool is_subalgebra(const MatrixLieAlgebra& g, const Subspace& s);
/// Smallest subalgebra containing s.
Subspace generated_subalgebra(const MatrixLieAlgebra& g, const Subspace& s);
/// Algebra on the span s, with matrices (or abstract constants) inherited from g.
MatrixLieAlgebra restrict_to(const MatrixLieAlgebra& g, const Subspace& s);

Subspace centralizer(const MatrixLieAlgebra& g, const Subspace& target);
Subspace centralizer(const MatrixLieAlgebra& g, const Vector& element);
Subspace normalizer(const MatrixLieAlgebra& g, const Subspace& sub);
Subspace center(const MatrixLieAlgebra& g);
SubalgebraHandle derived_subalgebra(const MatrixLieAlgebra& g);
bool is_semisimple(const MatrixLieAlgebra& g);
bool is_abelian(const MatrixLieAlgebra& g);
/// B_parent negative definite on sub. Throws LieError if parent is not semisimple.
bool is_compact_subalgebra(const MatrixLieAlgebra& parent, const Subspace& sub);
/// Killing form orthocomplement of s in g.
Subspace killing_orthocomplement(const MatrixLieAlgebra& g, const Subspace& s);

/// Property checks used by tests and self-verification.
bool satisfies_jacobi(const MatrixLieAlgebra& g);
bool killing_is_invariant(const MatrixLieAlgebra& g);

/// Minimal ideals (plus the center when nonzero), pairwise commuting and
/// Killing-orthogonal. Throws LieError when an ideal cannot be split over ℚ.
std::vector<SubalgebraHandle> ideal_decomposition(const MatrixLieAlgebra& g);

}  // namespace lorhom
