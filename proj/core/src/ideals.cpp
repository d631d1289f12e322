#include <algorithm>

#include "lorhom/lie_algebra.hpp"
#include "lorhom/module_decomp.hpp"

namespace lorhom {

std::vector<SubalgebraHandle> ideal_decomposition(const MatrixLieAlgebra& g) {
  std::vector<SubalgebraHandle> out;
  if (g.dim() == 0) return out;
  const Subspace z = center(g);
  const Subspace derived = bracket_span(g, g.full(), g.full());
  if (z.dim() + derived.dim() != g.dim() || !subspace_intersection(z, derived).is_zero() ||
      !signature(g.killing_on(derived)).is_nondegenerate()) {
    throw LieError("algebra is not reductive with nondegenerate Killing form on the derived part");
  }
  if (!derived.is_zero()) {
    const auto rep = Representation::adjoint(g).restrict(derived);
    const auto dec = irreducible_decomposition(rep);
    if (dec.status != Decomposition::Status::Complete) {
      throw LieError("indecomposable adjoint module over Q: " + dec.diagnostic);
    }
    for (const auto& c : dec.components) {
      std::vector<Vector> vs;
      for (const auto& v : c.basis()) vs.push_back(derived.combine(v));
      out.push_back({g, Subspace::span(g.dim(), vs)});
    }
  }
  if (!z.is_zero()) out.push_back({g, z});
  return out;
}

}  // namespace lorhom
