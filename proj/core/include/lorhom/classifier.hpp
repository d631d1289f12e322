#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lorhom/lorentz.hpp"
#include "lorhom/module_decomp.hpp"

namespace lorhom {

enum class SubalgebraType { TypeI, TypeII, TypeIII, NotTotallyReducible, Indeterminate };
std::string to_string(SubalgebraType t);

struct SubalgebraClassification {
  SubalgebraType verdict = SubalgebraType::Indeterminate;
  /// TypeI: orthocomplement of the fixed timelike line. TypeII: the Lorentzian
  /// block. TypeIII: the plane spanned by the two isotropic lines.
  Subspace W;
  /// TypeI: a fixed timelike vector.
  std::optional<Vector> timelike;
  /// Compact part, in the coordinates of h.
  Subspace k_part;
  /// TypeIII: coordinates in h of the element acting by +1 on the first
  /// isotropic line, trace-orthogonal to k_part.
  std::optional<Vector> d_witness;
  /// TypeIII: d − p′∧q′ with g(p′,q′) = 1 spanning the isotropic lines.
  std::optional<Matrix> C0;
  /// TypeIII: the aligned isotropic pair (p′, q′).
  std::optional<std::pair<Vector, Vector>> isotropic_pair;
  /// Invariant components of V (empty when decomposition failed).
  std::vector<Subspace> components;
  /// NotTotallyReducible: invariant subspace without invariant complement.
  std::optional<Subspace> witness;
  std::vector<std::string> diagnostics;
};

/// Classifies h ⊂ so(V, gram) for any Lorentzian gram.
SubalgebraClassification classify(const Matrix& gram, const MatrixLieAlgebra& h,
                                  const DecompositionOptions& opts = {});
SubalgebraClassification classify(const MinkowskiSpace& space, const MatrixLieAlgebra& h,
                                  const DecompositionOptions& opts = {});

Tri is_totally_reducible(const Matrix& gram, const MatrixLieAlgebra& h, const DecompositionOptions& opts = {});
Tri is_totally_reducible(const MinkowskiSpace& space, const MatrixLieAlgebra& h,
                         const DecompositionOptions& opts = {});

}  // namespace lorhom
