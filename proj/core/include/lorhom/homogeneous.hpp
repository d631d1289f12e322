#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lorhom/classifier.hpp"
#include "lorhom/lie_algebra.hpp"
#include "lorhom/module_decomp.hpp"

namespace lorhom {

/// g = l ⊕ m with [l, m] ⊆ m. All subspaces are in g coordinates.
struct ReductiveDecomposition {
  MatrixLieAlgebra g;
  SubalgebraHandle l;
  Subspace m;
  /// The distinguished piece of C_m(l). Equal to C_m(l) unless a constructor
  /// fixed a smaller normal form (contact decompositions use ℝZ).
  Subspace m_l;
  Subspace m_prime;
  /// Coordinate matrix of a Cartan involution, when one is known.
  std::optional<Matrix> theta;
  /// m = m_l ⊕ m_prime.
  bool split = false;
};

/// Generic constructor: checks that m complements l, that [l, m] ⊆ m and that
/// l acts faithfully on m. m_l = C_m(l), m_prime = [l, m].
ReductiveDecomposition make_decomposition(const MatrixLieAlgebra& g, const Subspace& l, const Subspace& m,
                                          std::optional<Matrix> theta = std::nullopt);

/// m = Killing orthocomplement of l. Requires B nondegenerate on l.
ReductiveDecomposition reductive_complement(const MatrixLieAlgebra& g, const Subspace& l,
                                            std::optional<Matrix> theta = std::nullopt);

/// h ⋉ ℝ^N realized by (N+1)×(N+1) affine matrices; l = h, m = translations.
/// m's basis is the standard basis of ℝ^N, in order.
ReductiveDecomposition flat_model(const MatrixLieAlgebra& h);

/// ad_l on m in m's basis coordinates, one matrix per basis vector of l.
std::vector<Matrix> isotropy_action(const ReductiveDecomposition& dec);

/// Throws LieError when B is not negative definite on l.
bool is_admissible(const ReductiveDecomposition& dec);

enum class AdmissibleType { Ia, Ib_compact, Ib_split, Ic, None };
std::string to_string(AdmissibleType t);

struct CheckResult {
  std::string name;
  Tri status = Tri::Unknown;
  std::string detail;
};

struct AdmissibilityReport {
  bool admissible = false;
  AdmissibleType subtype = AdmissibleType::None;
  std::optional<Vector> Z_witness;
  Tri minimality = Tri::Unknown;
  /// Name of the first failing minimality condition, if any.
  std::string failing_condition;
  Signature ml_killing;  // intrinsic Killing form of m_l
  Signature ml_restricted;  // B_g restricted to m_l
  std::vector<CheckResult> checks;
};

AdmissibilityReport classify_admissible(const ReductiveDecomposition& dec);

struct InvariantForm {
  Subspace domain;
  /// Gram matrix in the basis of domain.
  Matrix gram;
  Signature signature;
  bool invariance_certificate = false;
};

/// Invariance of gram under ad_l acting on m: A^T G + G A = 0.
bool is_l_invariant(const ReductiveDecomposition& dec, const Matrix& gram);

/// Restriction of B_θ(X, Y) = −B(X, θY) to m.
InvariantForm invariant_euclidean_metric(const ReductiveDecomposition& dec, const Matrix& theta);

/// g_λ = g_m − λ (g_m Z)(g_m Z)^T with Z in g coordinates (must lie in m).
/// The certificate checks g_m and the rank-one term separately, so it holds
/// for every λ at once.
InvariantForm lorentz_metric(const ReductiveDecomposition& dec, const InvariantForm& g_m, const Vector& Z,
                             const Rational& lambda);
/// 1 / g_m(Z, Z).
Rational lambda_threshold(const ReductiveDecomposition& dec, const InvariantForm& g_m, const Vector& Z);

enum class LorentzModel { Minkowski, deSitter, antiDeSitter, SL2R_cover, Symmetric3D, Inconsistent };
std::string to_string(LorentzModel m);

struct TypeIIAnalysis {
  bool consistent = false;
  /// so(W) + W and k + U, in g coordinates.
  SubalgebraHandle lorentz_ideal, riemannian_ideal;
  Subspace W, U;
  LorentzModel model = LorentzModel::Inconsistent;
  /// c normalized so that c > 0 is de Sitter; for dim W = 3 also c2.
  Rational c, c2;
  std::optional<Vector> fixed_witness;
  std::vector<CheckResult> checks;
};

/// gram_m: the Lorentzian metric on m, in m's basis.
TypeIIAnalysis analyze_typeII(const ReductiveDecomposition& dec, const Matrix& gram_m,
                              const DecompositionOptions& opts = {});

struct TypeIIIAnalysis {
  bool consistent = false;
  Rational lambda;
  /// Action of the d witness on E, in m coordinates.
  Matrix C0;
  /// [[p, q], E] = 0, equivalently λ·C0 = 0.
  bool dichotomy = false;
  std::optional<Vector> fixed_witness;
  std::string verdict;
  std::vector<CheckResult> checks;
};

TypeIIIAnalysis analyze_typeIII(const ReductiveDecomposition& dec, const Matrix& gram_m,
                                const DecompositionOptions& opts = {});

struct E0Result {
  bool trivial = false;
  /// A vector of E (or W^⊥) killed by k, in m coordinates.
  std::optional<Vector> witness;
};

/// Vectors of E annihilated by the compact part; Type II or III isotropy only.
E0Result check_E0_trivial(const ReductiveDecomposition& dec, const Matrix& gram_m,
                          const DecompositionOptions& opts = {});

}  // namespace lorhom
