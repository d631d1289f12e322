#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lorhom/lie_algebra.hpp"

namespace lorhom {

/// ℝ^{1,n+1} in the ordered Witt basis (p, e_1 … e_n, q):
/// g(p,q) = 1, g(p,p) = g(q,q) = 0, g(e_i,e_j) = δ_ij.
struct MinkowskiSpace {
  std::size_t n = 0;
  Matrix gram;

  std::size_t dim() const { return n + 2; }
  Vector p() const;
  Vector q() const;
  /// e_i for i = 1..n.
  Vector e(std::size_t i) const;
  Rational inner(const Vector& u, const Vector& v) const;
};

MinkowskiSpace minkowski(std::size_t n);

/// The endomorphism x ↦ g(v,x)u − g(u,x)v.
Matrix bivector(const Vector& u, const Vector& v, const Matrix& gram);
Matrix bivector(const Vector& u, const Vector& v, const MinkowskiSpace& space);

/// X^T G + G X = 0.
bool is_skew(const Matrix& x, const Matrix& gram);

/// Standard basis of so(m) for m×m skew-symmetric matrices: E_ij − E_ji, i < j.
std::vector<Matrix> so_basis(std::size_t m);

/// Embeds an n×n matrix acting on E = span(e_1 … e_n) into gl(V).
Matrix embed_E(const MinkowskiSpace& space, const Matrix& k);

/// so(V) with its depth-one grading by ad_{p∧q}.
struct GradedLorentzAlgebra {
  MinkowskiSpace space;
  MatrixLieAlgebra algebra;
  Subspace g_minus, g_zero, g_plus;
  /// Coordinates of p∧q in algebra.
  Vector grading_element;
};

/// Full so(V); basis: p∧e_i, p∧q, e_i∧e_j (i<j), q∧e_i.
MatrixLieAlgebra so_algebra(const MinkowskiSpace& space);
GradedLorentzAlgebra lorentz_algebra(const MinkowskiSpace& space);

/// Subalgebra of so(n+1) acting on the orthogonal complement of the timelike
/// vector p − q/2, given by (n+1)×(n+1) skew-symmetric generators in the
/// orthonormal basis (p + q/2, e_1 … e_n).
MatrixLieAlgebra subalgebra_type1(const MinkowskiSpace& space, const std::vector<Matrix>& generators);
Vector type1_timelike(const MinkowskiSpace& space);

/// so(V(H)) + k with H = span(e_1 … e_k); k_part acts on H^⊥ = span(e_{k+1} … e_n)
/// by (n−k)×(n−k) skew-symmetric matrices.
MatrixLieAlgebra subalgebra_type2(const MinkowskiSpace& space, std::size_t k,
                                  const std::vector<Matrix>& k_part);

/// ℝ(p∧q + C0) ⊕ k with C0 and k_part n×n skew-symmetric on E, [C0, k] = 0.
MatrixLieAlgebra subalgebra_type3(const MinkowskiSpace& space, const Matrix& c0,
                                  const std::vector<Matrix>& k_part);

/// ℝp∧q + so(E) + p∧E.
MatrixLieAlgebra parabolic(const MinkowskiSpace& space);

/// {p∧X + φ(X) : X ∈ E′} + k with E = E′ ⊕ E″ split by coordinate indices
/// (1-based). phi holds one |E″|×|E″| skew matrix per vector of E′, k_part
/// acts on E″. φ(E′) must be commutative, commute with k and meet it trivially.
MatrixLieAlgebra twisted_subalgebra(const MinkowskiSpace& space, const std::vector<std::size_t>& e_prime,
                                     const std::vector<std::size_t>& e_second,
                                     const std::vector<Matrix>& phi, const std::vector<Matrix>& k_part);

struct NamedAlgebra {
  std::string name;
  MatrixLieAlgebra algebra;
};
/// so(n+1), h_k (1 ≤ k ≤ n−1) and the parabolic, in standard position.
std::vector<NamedAlgebra> maximal_subalgebra_instances(const MinkowskiSpace& space);

}  // namespace lorhom
