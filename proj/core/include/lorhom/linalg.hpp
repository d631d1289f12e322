#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lorhom/matrix.hpp"
#include "lorhom/polynomial.hpp"
#include "lorhom/subspace.hpp"

namespace lorhom {

struct Signature {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  std::size_t dim() const { return n_plus + n_minus + n_zero; }
  bool is_positive_definite() const { return n_minus == 0 && n_zero == 0; }
  bool is_negative_definite() const { return n_plus == 0 && n_zero == 0; }
  bool is_lorentzian() const { return n_minus == 1 && n_zero == 0; }
  bool is_nondegenerate() const { return n_zero == 0; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Rational determinant(const Matrix& m);

/// Null space {v : m v = 0}.
Subspace kernel(const Matrix& m);
/// Column space.
Subspace image(const Matrix& m);

/// A particular solution of m x = rhs, if any.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);
std::optional<Matrix> inverse(const Matrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
/// {v : <v, a> = 0 for all a in s} with the standard dot product.
Subspace annihilator(const Subspace& s);
/// Orthocomplement of s inside the ambient space with respect to the form gram.
Subspace orthocomplement(const Subspace& s, const Matrix& gram);
/// Orthocomplement of s inside `within`, with respect to gram.
Subspace orthocomplement_in(const Subspace& s, const Subspace& within, const Matrix& gram);

/// Gram matrix of gram restricted to the span of `basis` vectors.
Matrix restrict_form(const Matrix& gram, const std::vector<Vector>& basis);

/// Sylvester signature by symmetric (Lagrange) diagonalization.
/// Throws std::invalid_argument for a non-symmetric input.
Signature signature(const Matrix& gram);

/// Congruence diagonalization: returns (P, D) with P^T gram P = D diagonal.
std::pair<Matrix, Vector> diagonalize_form(const Matrix& gram);

/// A vector v with v^T gram v < 0, if one exists.
std::optional<Vector> negative_direction(const Matrix& gram);

Polynomial characteristic_polynomial(const Matrix& m);
Polynomial minimal_polynomial(const Matrix& m);

struct Eigenspace {
  Rational eigenvalue;
  Subspace space;
};
/// Rational eigenvalues in increasing order with their eigenspaces.
std::vector<Eigenspace> rational_eigenspaces(const Matrix& m);

/// Diagonalizable over ℂ, i.e. the minimal polynomial is squarefree.
bool is_semisimple_operator(const Matrix& m);

}  // namespace lorhom
