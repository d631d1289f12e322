#include "doctest.h"
#include "fixtures.hpp"
#include "lorhom/lorentz.hpp"
#include "lorhom/module_decomp.hpp"

using namespace lorhom;

namespace {

// Invariance, directness and the cyclic irreducibility certificate.
void check_decomposition(const Representation& rep, const Decomposition& d) {
  REQUIRE(d.status == Decomposition::Status::Complete);
  Subspace total(rep.dim());
  std::size_t dims = 0;
  for (const auto& c : d.components) {
    CHECK(is_invariant(rep, c));
    total = subspace_sum(total, c);
    dims += c.dim();
    for (const auto& v : c.basis()) CHECK(cyclic_submodule(rep, v) == c);
  }
  CHECK(dims == rep.dim());
  CHECK(total.is_full());
  for (std::size_t i = 1; i < d.components.size(); ++i)
    CHECK(d.components[i - 1].dim() <= d.components[i].dim());
}

}  // namespace

TEST_CASE("fixed spaces") {
  const auto zero_alg = MatrixLieAlgebra::from_basis(3, {});
  CHECK(fixed_space(Representation::defining(zero_alg)) == Subspace::full(3));
  const auto so3 = MatrixLieAlgebra::from_basis(3, fixture::so3_generators());
  CHECK(fixed_space(Representation::defining(so3)).is_zero());
  const auto s = minkowski(2);
  const auto t1 = subalgebra_type1(s, so_basis(3));
  CHECK(fixed_space(Representation::defining(t1)) == Subspace::span(4, {type1_timelike(s)}));
}

TEST_CASE("cyclic submodules") {
  const auto triv = MatrixLieAlgebra::from_basis(3, {});
  const Vector v{1, 2, 3};
  CHECK(cyclic_submodule(Representation::defining(triv), v) == Subspace::span(3, {v}));
  const auto so3 = MatrixLieAlgebra::from_basis(3, fixture::so3_generators());
  CHECK(cyclic_submodule(Representation::defining(so3), unit_vector(3, 0)).is_full());
  const auto s = minkowski(3);
  const auto par = parabolic(s);
  CHECK(cyclic_submodule(Representation::defining(par), s.p()) == Subspace::span(5, {s.p()}));
}

TEST_CASE("type II algebra on V") {
  const auto s = minkowski(3);
  {
    const auto rep = Representation::defining(subalgebra_type2(s, 1, so_basis(2)));
    const auto d = irreducible_decomposition(rep);
    check_decomposition(rep, d);
    REQUIRE(d.components.size() == 2);
    CHECK(d.components[0] == Subspace::span(5, {s.e(2), s.e(3)}));
    CHECK(d.components[1] == Subspace::span(5, {s.p(), s.e(1), s.q()}));
  }
  {
    const auto rep = Representation::defining(subalgebra_type2(s, 1, {}));
    const auto d = irreducible_decomposition(rep);
    check_decomposition(rep, d);
    REQUIRE(d.components.size() == 3);
    CHECK(d.components[2].dim() == 3);
  }
}

TEST_CASE("type III algebra splits into eigenlines") {
  const auto s = minkowski(3);
  const auto rep = Representation::defining(subalgebra_type3(s, Matrix(3, 3), {}));
  const auto d = irreducible_decomposition(rep);
  check_decomposition(rep, d);
  REQUIRE(d.components.size() == 5);
  std::vector<Subspace> expect{Subspace::span(5, {s.p()}), Subspace::span(5, {s.q()})};
  for (std::size_t i = 1; i <= 3; ++i) expect.push_back(Subspace::span(5, {s.e(i)}));
  for (const auto& e : expect) CHECK(std::find(d.components.begin(), d.components.end(), e) != d.components.end());
}

TEST_CASE("non completely reducible fixtures") {
  const auto s = minkowski(3);
  const Matrix phi{{0, 1}, {-1, 0}};
  const auto rep = Representation::defining(twisted_subalgebra(s, {1}, {2, 3}, {phi}, {}));
  const auto d = irreducible_decomposition(rep);
  CHECK(d.status == Decomposition::Status::NotCompletelyReducible);
  REQUIRE(d.witness);
  CHECK(is_invariant(rep, *d.witness));
  CHECK_FALSE(invariant_complement(rep, *d.witness));
  // the witness is degenerate for g
  CHECK_FALSE(signature(restrict_form(s.gram, d.witness->basis())).is_nondegenerate());
  CHECK(is_completely_reducible(rep) == Tri::No);

  const auto par = Representation::defining(parabolic(s));
  CHECK(is_completely_reducible(par) == Tri::No);
  CHECK_FALSE(invariant_complement(par, Subspace::span(5, {s.p()})));
}

TEST_CASE("completely reducible verdicts") {
  const auto so3 = MatrixLieAlgebra::from_basis(3, fixture::so3_generators());
  CHECK(is_completely_reducible(Representation::defining(so3)) == Tri::Yes);
  CHECK(is_completely_reducible(Representation::adjoint(so3)) == Tri::Yes);
  const auto su2 = MatrixLieAlgebra::from_basis(4, fixture::su2_realified());
  const auto rep = Representation::defining(su2);
  const auto d = irreducible_decomposition(rep);
  // ℂ² realified is irreducible over ℚ with quaternionic commutant
  check_decomposition(rep, d);
  CHECK(d.components.size() == 1);
  CHECK(commutant(rep).size() == 4);
  CHECK(is_completely_reducible(Representation::defining(MatrixLieAlgebra::from_basis(4, {}))) == Tri::Yes);
}

TEST_CASE("rotation blocks stay whole over Q") {
  const auto u1 = MatrixLieAlgebra::from_basis(4, {direct_sum(Matrix{{0, -1}, {1, 0}}, Matrix{{0, -2}, {2, 0}})});
  const auto rep = Representation::defining(u1);
  const auto d = irreducible_decomposition(rep);
  check_decomposition(rep, d);
  REQUIRE(d.components.size() == 2);
  CHECK(d.certified[0]);
  CHECK(d.certified[1]);
  // equal angles: isotypic block ℚ(i)², still splits into two planes
  const auto u1b = MatrixLieAlgebra::from_basis(4, {direct_sum(Matrix{{0, -1}, {1, 0}}, Matrix{{0, -1}, {1, 0}})});
  const auto rep2 = Representation::defining(u1b);
  const auto d2 = irreducible_decomposition(rep2);
  check_decomposition(rep2, d2);
  CHECK(d2.components.size() == 2);
}

TEST_CASE("decomposition is idempotent and seed independent in outcome") {
  const auto s = minkowski(4);
  const auto rep = Representation::defining(subalgebra_type2(s, 2, {}));
  const auto d = irreducible_decomposition(rep);
  check_decomposition(rep, d);
  for (const auto& c : d.components) {
    const auto sub = rep.restrict(c);
    const auto again = irreducible_decomposition(sub);
    REQUIRE(again.components.size() == 1);
    CHECK(again.components[0].is_full());
  }
  DecompositionOptions other;
  other.seed = 99;
  CHECK(irreducible_decomposition(rep, other).components.size() == d.components.size());
}

TEST_CASE("representation validation and isotropy") {
  const auto so3 = MatrixLieAlgebra::from_basis(3, fixture::so3_generators());
  auto bad = so3.basis();
  bad[0] = bad[0] * Rational(2);
  CHECK_THROWS_AS(Representation::from_action(so3, bad), LieError);
  const auto s = minkowski(2);
  const auto g = so_algebra(s);
  const auto l = Subspace::span(g.dim(), {g.coordinates(bivector(s.e(1), s.e(2), s))});
  const auto m = killing_orthocomplement(g, l);
  const auto iso = Representation::isotropy(g, l, m);
  CHECK(iso.dim() == 5);
  CHECK(fixed_space(iso).dim() == 1);  // p∧q
  CHECK_THROWS_AS(irreducible_decomposition(Representation::adjoint(so_algebra(minkowski(7)))), LieError);
}
