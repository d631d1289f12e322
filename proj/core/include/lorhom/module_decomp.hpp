#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lorhom/lie_algebra.hpp"

namespace lorhom {

/// Three-valued verdict for questions that exact search may leave open.
enum class Tri { Yes, No, Unknown };
std::string to_string(Tri t);

/// Action of a Lie algebra on ℚ^dim, one matrix per basis element.
class Representation {
 public:
  /// Checks action([X,Y]) = [action X, action Y] on basis pairs.
  static Representation from_action(MatrixLieAlgebra algebra, std::vector<Matrix> action);
  static Representation defining(const MatrixLieAlgebra& g);
  static Representation adjoint(const MatrixLieAlgebra& g);
  /// ad_l acting on m, in the coordinates of m's basis. Requires [l, m] ⊆ m.
  static Representation isotropy(const MatrixLieAlgebra& g, const Subspace& l, const Subspace& m);

  const MatrixLieAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& action() const { return action_; }
  /// Σ x_i action_i for algebra coordinates x.
  Matrix act(const Vector& x) const;
  /// Sub-representation on an invariant subspace, in that subspace's basis.
  Representation restrict(const Subspace& invariant) const;

 private:
  MatrixLieAlgebra algebra_;
  std::size_t dim_ = 0;
  std::vector<Matrix> action_;
};

struct DecompositionOptions {
  std::uint64_t seed = default_seed();
  /// Random enveloping-algebra elements tried per block.
  int random_trials = 24;
  std::size_t max_dim = 32;

  /// 20240601 unless LORHOM_SEED is set in the environment.
  static std::uint64_t default_seed();
};

struct Decomposition {
  enum class Status { Complete, NotCompletelyReducible, Unresolved };
  Status status = Status::Complete;
  /// Sorted by (dimension, echelon basis). On Unresolved some blocks are
  /// reported whole; `certified` says which ones are proven irreducible.
  std::vector<Subspace> components;
  std::vector<bool> certified;
  /// For NotCompletelyReducible: an invariant subspace with no invariant complement.
  std::optional<Subspace> witness;
  std::string diagnostic;
};
std::string to_string(Decomposition::Status s);

Subspace fixed_space(const Representation& rep);
Subspace cyclic_submodule(const Representation& rep, const Vector& v);
bool is_invariant(const Representation& rep, const Subspace& s);
/// An invariant complement of the invariant subspace s, if one exists.
std::optional<Subspace> invariant_complement(const Representation& rep, const Subspace& s);

Decomposition irreducible_decomposition(const Representation& rep,
                                        const DecompositionOptions& opts = {});
Tri is_completely_reducible(const Representation& rep, const DecompositionOptions& opts = {});

/// Matrices commuting with the whole action (the module endomorphisms).
std::vector<Matrix> commutant(const Representation& rep);

}  // namespace lorhom
