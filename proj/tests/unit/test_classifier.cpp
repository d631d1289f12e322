#include <random>

#include "doctest.h"
#include "lorhom/classifier.hpp"
#include "oracles.hpp"

using namespace lorhom;

namespace {

MatrixLieAlgebra scramble(const MatrixLieAlgebra& h, std::mt19937_64& rng) {
  const std::size_t d = h.dim();
  Matrix p = oracle::random_matrix(rng, d, d, 2);
  while (d > 0 && oracle::det_leibniz(p) == 0) p = p + Matrix::identity(d);
  std::vector<Matrix> mats;
  for (std::size_t j = 0; j < d; ++j) {
    Vector col = p.column(j);
    mats.push_back(h.element(col));
  }
  return MatrixLieAlgebra::from_basis(h.ambient_size(), mats);
}

std::vector<Matrix> centralizer_in_so(std::size_t n, const Matrix& c0) {
  const auto so = MatrixLieAlgebra::from_basis(n, so_basis(n));
  std::vector<Matrix> out;
  const auto c = centralizer(so, so.coordinates(c0));
  for (const auto& v : c.basis()) out.push_back(so.element(v));
  return out;
}

// Subspace of h spanned by matrices embedded from E.
Subspace span_in(const MatrixLieAlgebra& h, const std::vector<Matrix>& mats) {
  std::vector<Vector> vs;
  for (const auto& m : mats) vs.push_back(h.coordinates(m));
  return Subspace::span(h.dim(), vs);
}

}  // namespace

TEST_CASE("reference examples") {
  const auto s3 = minkowski(2);
  CHECK(classify(s3, subalgebra_type1(s3, so_basis(3))).verdict == SubalgebraType::TypeI);

  const auto s = minkowski(3);
  const auto c2 = classify(s, subalgebra_type2(s, 1, so_basis(2)));
  CHECK(c2.verdict == SubalgebraType::TypeII);
  CHECK(c2.W.dim() == 3);

  const auto s2 = minkowski(2);
  const Matrix c0{{0, 1}, {-1, 0}};
  const auto c3 = classify(s2, subalgebra_type3(s2, c0, {}));
  REQUIRE(c3.verdict == SubalgebraType::TypeIII);
  CHECK(*c3.C0 == embed_E(s2, c0));
  CHECK(c3.isotropic_pair->first == s2.p());
  CHECK(c3.isotropic_pair->second == s2.q());
}

TEST_CASE("total reducibility verdicts") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto s = minkowski(n);
    CHECK(is_totally_reducible(s, parabolic(s)) == Tri::No);
    CHECK(classify(s, parabolic(s)).verdict == SubalgebraType::NotTotallyReducible);
    CHECK(is_totally_reducible(s, MatrixLieAlgebra::from_basis(s.dim(), {})) == Tri::Yes);
  }
  const auto s = minkowski(3);
  const auto tw = twisted_subalgebra(s, {1}, {2, 3}, {Matrix{{0, 1}, {-1, 0}}}, {});
  CHECK(is_totally_reducible(s, tw) == Tri::No);
  const auto c = classify(s, tw);
  CHECK(c.verdict == SubalgebraType::NotTotallyReducible);
  CHECK(c.witness.has_value());
}

TEST_CASE("non-skew input is rejected") {
  const auto s = minkowski(1);
  const auto bad = MatrixLieAlgebra::from_basis(3, {Matrix::identity(3)});
  CHECK_THROWS_WITH_AS(classify(s, bad), doctest::Contains("not skew"), LieError);
}

TEST_CASE("round trip: type I") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto s = minkowski(n);
    const auto c = classify(s, subalgebra_type1(s, so_basis(n + 1)));
    REQUIRE(c.verdict == SubalgebraType::TypeI);
    CHECK(*c.timelike == normalized_leading(type1_timelike(s)));
    CHECK(c.W == orthocomplement(Subspace::span(s.dim(), {type1_timelike(s)}), s.gram));
    // one rotation only: still type I
    const auto one = classify(s, subalgebra_type1(s, {so_basis(n + 1).front()}));
    CHECK(one.verdict == SubalgebraType::TypeI);
  }
}

TEST_CASE("round trip: type II") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto s = minkowski(n);
    for (std::size_t k = 1; k + 1 <= n; ++k) {
      for (bool full : {false, true}) {
        const auto kp = full ? so_basis(n - k) : std::vector<Matrix>{};
        const auto h = subalgebra_type2(s, k, kp);
        const auto c = classify(s, h);
        REQUIRE(c.verdict == SubalgebraType::TypeII);
        std::vector<Vector> vh{s.p()};
        for (std::size_t i = 1; i <= k; ++i) vh.push_back(s.e(i));
        vh.push_back(s.q());
        CHECK(c.W == Subspace::span(s.dim(), vh));
        std::vector<Matrix> embedded;
        for (const auto& m : kp) {
          Matrix x(s.dim(), s.dim());
          x.set_block(k + 1, k + 1, m);
          embedded.push_back(x);
        }
        CHECK(c.k_part == span_in(h, embedded));
        if (!c.k_part.is_zero()) CHECK(signature(restrict_form(Matrix(h.dim(), h.dim()) + [&] {
                                         Matrix t(h.dim(), h.dim());
                                         for (std::size_t i = 0; i < h.dim(); ++i)
                                           for (std::size_t j = 0; j < h.dim(); ++j)
                                             t(i, j) = (h.basis(i) * h.basis(j)).trace();
                                         return t;
                                       }(), c.k_part.basis()))
                                           .is_negative_definite());
      }
    }
  }
}

TEST_CASE("round trip: type III") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto s = minkowski(n);
    std::vector<Matrix> c0s{Matrix(n, n)};
    for (const auto& b : so_basis(n)) c0s.push_back(b);
    for (const auto& c0 : c0s) {
      for (bool full : {false, true}) {
        const auto kp = full ? centralizer_in_so(n, c0) : std::vector<Matrix>{};
        const auto h = subalgebra_type3(s, c0, kp);
        const auto c = classify(s, h);
        REQUIRE(c.verdict == SubalgebraType::TypeIII);
        CHECK(c.W == Subspace::span(s.dim(), {s.p(), s.q()}));
        std::vector<Matrix> embedded;
        for (const auto& m : kp) embedded.push_back(embed_E(s, m));
        CHECK(c.k_part == span_in(h, embedded));
        // C0 agrees modulo the compact part
        const Matrix diff = *c.C0 - embed_E(s, c0);
        if (diff.is_zero()) {
          CHECK(true);
        } else {
          auto coords = h.try_coordinates(diff);
          REQUIRE(coords);
          CHECK(c.k_part.contains(*coords));
        }
        // [d, k] = 0 and d acts by +1 on p
        const Matrix d = h.element(*c.d_witness);
        CHECK(d.apply(s.p()) == s.p());
        CHECK(d.apply(s.q()) == Rational(-1) * s.q());
        for (const auto& kv : c.k_part.basis()) CHECK(commutator(d, h.element(kv)).is_zero());
      }
    }
  }
}

TEST_CASE("verdict is invariant under basis scrambles") {
  std::mt19937_64 rng(21);
  const auto s = minkowski(3);
  std::vector<MatrixLieAlgebra> hs{subalgebra_type1(s, so_basis(4)), subalgebra_type2(s, 1, so_basis(2)),
                                   subalgebra_type3(s, so_basis(3)[0], {}), parabolic(s)};
  for (const auto& h : hs) {
    const auto v = classify(s, h).verdict;
    for (int t = 0; t < 3; ++t) CHECK(classify(s, scramble(h, rng)).verdict == v);
  }
}

TEST_CASE("type I iff a fixed timelike vector") {
  const auto s = minkowski(3);
  std::vector<MatrixLieAlgebra> hs{subalgebra_type1(s, so_basis(4)), subalgebra_type2(s, 2, {}),
                                   subalgebra_type3(s, Matrix(3, 3), {}), subalgebra_type1(s, {so_basis(4)[2]})};
  for (const auto& h : hs) {
    const auto fixed = fixed_space(Representation::defining(h));
    const bool timelike = !fixed.is_zero() && signature(restrict_form(s.gram, fixed.basis())).n_minus > 0;
    CHECK((classify(s, h).verdict == SubalgebraType::TypeI) == timelike);
  }
}

TEST_CASE("classification works for a non-Witt Lorentzian metric") {
  // diag(-1, 1, 1): so(1,2) itself is type II with W = everything
  const Matrix g = Matrix::diagonal({Rational(-1), Rational(1), Rational(1)});
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) basis.push_back(bivector(unit_vector(3, i), unit_vector(3, j), g));
  const auto h = MatrixLieAlgebra::from_basis(3, basis);
  const auto c = classify(g, h);
  CHECK(c.verdict == SubalgebraType::TypeII);
  CHECK(c.W.is_full());
}
