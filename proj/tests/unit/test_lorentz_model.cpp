#include "doctest.h"
#include "lorhom/lorentz.hpp"

using namespace lorhom;

TEST_CASE("Minkowski spaces in the Witt basis") {
  const auto s0 = minkowski(0);
  CHECK(s0.gram == Matrix{{0, 1}, {1, 0}});
  CHECK(signature(minkowski(2).gram) == Signature{3, 1, 0});
  CHECK(signature(minkowski(5).gram) == Signature{6, 1, 0});
  const auto s = minkowski(3);
  CHECK(s.inner(s.p(), s.q()) == 1);
  CHECK(s.inner(s.p(), s.p()) == 0);
  CHECK(s.inner(s.e(2), s.e(2)) == 1);
  CHECK(s.inner(s.e(1), s.e(2)) == 0);
}

TEST_CASE("bivector convention") {
  const auto s = minkowski(2);
  const Matrix pq = bivector(s.p(), s.q(), s);
  // (u∧v)x = g(v,x)u − g(u,x)v applied by hand
  CHECK(pq.apply(s.p()) == s.p());
  CHECK(pq.apply(s.q()) == Rational(-1) * s.q());
  CHECK(is_zero(pq.apply(s.e(1))));
  CHECK(is_skew(pq, s.gram));
  const Matrix rot = bivector(s.e(1), s.e(2), s);
  CHECK(rot.apply(s.e(2)) == s.e(1));
  CHECK(rot.apply(s.e(1)) == Rational(-1) * s.e(2));
  CHECK(rational_eigenspaces(rot.block(1, 2, 1, 2)).empty());
  CHECK(bivector(s.e(1), s.e(1), s).is_zero());
}

TEST_CASE("grading dimensions") {
  struct Row {
    std::size_t n, minus, zero, plus;
  };
  for (const auto& r : {Row{0, 0, 1, 0}, Row{2, 2, 2, 2}, Row{3, 3, 4, 3}}) {
    const auto gl = lorentz_algebra(minkowski(r.n));
    CHECK(gl.algebra.dim() == (r.n + 2) * (r.n + 1) / 2);
    CHECK(gl.g_minus.dim() == r.minus);
    CHECK(gl.g_zero.dim() == r.zero);
    CHECK(gl.g_plus.dim() == r.plus);
  }
}

TEST_CASE("grading is compatible with the bracket") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto gl = lorentz_algebra(minkowski(n));
    const Subspace* parts[3] = {&gl.g_minus, &gl.g_zero, &gl.g_plus};
    for (int i = -1; i <= 1; ++i)
      for (int j = -1; j <= 1; ++j) {
        const auto br = bracket_span(gl.algebra, *parts[i + 1], *parts[j + 1]);
        if (i + j < -1 || i + j > 1) {
          CHECK(br.is_zero());
        } else {
          CHECK(parts[i + j + 1]->contains(br));
        }
      }
    // g^1 = p∧E by direct construction
    std::vector<Vector> pe;
    for (std::size_t i = 1; i <= n; ++i) pe.push_back(gl.algebra.coordinates(bivector(gl.space.p(), gl.space.e(i), gl.space)));
    CHECK(gl.g_plus == Subspace::span(gl.algebra.dim(), pe));
  }
}

TEST_CASE("every constructed algebra is g-skew") {
  const auto s = minkowski(4);
  std::vector<MatrixLieAlgebra> algs{so_algebra(s), parabolic(s), subalgebra_type1(s, so_basis(5)),
                                     subalgebra_type2(s, 2, so_basis(2)),
                                     subalgebra_type3(s, Matrix{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}, {})};
  for (const auto& g : algs)
    for (const auto& b : g.basis()) CHECK(is_skew(b, s.gram));
}

TEST_CASE("type I constructor") {
  const auto s = minkowski(2);
  const auto h = subalgebra_type1(s, so_basis(3));
  CHECK(h.dim() == 3);
  const Vector t = type1_timelike(s);
  CHECK(s.inner(t, t) < 0);
  for (const auto& b : h.basis()) CHECK(is_zero(b.apply(t)));
  CHECK_THROWS_AS(subalgebra_type1(s, {Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}}), LieError);
}

TEST_CASE("type II constructor") {
  const auto s = minkowski(3);
  const auto h = subalgebra_type2(s, 1, so_basis(2));
  CHECK(h.dim() == 4);  // so(1,2) + so(2)
  // V(H) and H^⊥ invariant and nondegenerate
  const auto vh = Subspace::span(5, {s.p(), s.e(1), s.q()});
  const auto perp = Subspace::span(5, {s.e(2), s.e(3)});
  for (const auto& b : h.basis()) {
    for (const auto& v : vh.basis()) CHECK(vh.contains(b.apply(v)));
    for (const auto& v : perp.basis()) CHECK(perp.contains(b.apply(v)));
  }
  CHECK(signature(restrict_form(s.gram, vh.basis())) == Signature{2, 1, 0});
  CHECK(signature(restrict_form(s.gram, perp.basis())) == Signature{2, 0, 0});
  CHECK(subalgebra_type2(s, 2, {}).dim() == 6);
  CHECK_THROWS_AS(subalgebra_type2(s, 3, {}), LieError);
  CHECK_THROWS_AS(subalgebra_type2(s, 0, {}), LieError);
}

TEST_CASE("type III constructor") {
  const auto s = minkowski(2);
  const Matrix c0{{0, 1}, {-1, 0}};  // e1∧e2 on E
  const auto h = subalgebra_type3(s, c0, {});
  REQUIRE(h.dim() == 1);
  CHECK(h.basis(0) == bivector(s.p(), s.q(), s) + bivector(s.e(1), s.e(2), s));
  const auto s3 = minkowski(3);
  const Matrix c{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}};
  const Matrix bad{{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}};
  CHECK_THROWS_WITH_AS(subalgebra_type3(s3, c, {bad}), doctest::Contains("[C0, k_0] != 0"), LieError);
}

TEST_CASE("parabolic subalgebra") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto s = minkowski(n);
    const auto h = parabolic(s);
    CHECK(h.dim() == 1 + n * (n - 1) / 2 + n);
    const auto line = Subspace::span(s.dim(), {s.p()});
    for (const auto& b : h.basis()) CHECK(line.contains(b.apply(s.p())));
  }
}

TEST_CASE("non-totally-reducible construction") {
  const auto s = minkowski(3);
  const Matrix phi{{0, 1}, {-1, 0}};  // e2∧e3 on E''
  const auto h = twisted_subalgebra(s, {1}, {2, 3}, {phi}, {});
  REQUIRE(h.dim() == 1);
  CHECK(h.basis(0) == bivector(s.p(), s.e(1), s) + bivector(s.e(2), s.e(3), s));
  const auto abelian = twisted_subalgebra(s, {1, 2}, {3}, {Matrix(1, 1), Matrix(1, 1)}, {});
  CHECK(abelian.dim() == 2);
  CHECK(is_abelian(abelian));
  // φ(E') meeting k
  CHECK_THROWS_AS(twisted_subalgebra(s, {1}, {2, 3}, {phi}, {phi}), LieError);
}

TEST_CASE("maximal subalgebra instances") {
  const auto s = minkowski(2);
  const auto inst = maximal_subalgebra_instances(s);
  REQUIRE(inst.size() == 3);
  CHECK(inst[0].algebra.dim() == 3);
  CHECK(inst[1].algebra.dim() == 3);
  CHECK(inst[2].algebra.dim() == 4);
  const auto s4 = minkowski(4);
  for (const auto& [name, alg] : maximal_subalgebra_instances(s4)) {
    if (name == "h_2") CHECK(alg.dim() == 7);
  }
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto inst_n = maximal_subalgebra_instances(minkowski(n));
    for (const auto& [name, alg] : inst_n) {
      if (name.rfind("h_", 0) == 0) {
        const std::size_t k = std::stoul(name.substr(2));
        CHECK(alg.dim() == (k + 2) * (k + 1) / 2 + (n - k) * (n - k - 1) / 2);
      }
    }
    CHECK(inst_n.front().algebra.dim() == (n + 1) * n / 2);
  }
}
