// Decompositions with Type II / Type III isotropy, built by hand.
#pragma once

#include <functional>

#include "fixtures.hpp"
#include "lorhom/homogeneous.hpp"
#include "lorhom/lorentz.hpp"

namespace fixture {

using lorhom::Rational;
using lorhom::ReductiveDecomposition;
using lorhom::Subspace;
using lorhom::Vector;
using lorhom::operator*;

inline Subspace units(std::size_t n, std::size_t from, std::size_t to) {
  std::vector<Vector> v;
  for (std::size_t i = from; i < to; ++i) v.push_back(lorhom::unit_vector(n, i));
  return Subspace::span(n, v);
}

// Abstract algebra l ⊕ m with l abelian acting on m by `acts` (m-coordinates)
// and [m_i, m_j] given in full coordinates (l first, then m). Jacobi unchecked.
inline MatrixLieAlgebra abstract_extension(const std::vector<Matrix>& acts, std::size_t dm,
                                           const std::function<Vector(std::size_t, std::size_t)>& mm) {
  const std::size_t dl = acts.size(), n = dl + dm;
  std::vector<std::vector<Vector>> c(n, std::vector<Vector>(n, lorhom::zero_vector(n)));
  for (std::size_t i = 0; i < dl; ++i)
    for (std::size_t j = 0; j < dm; ++j) {
      Vector v = lorhom::zero_vector(n);
      for (std::size_t k = 0; k < dm; ++k) v[dl + k] = acts[i](k, j);
      c[i][dl + j] = v;
      c[dl + j][i] = Rational(-1) * v;
    }
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < dm; ++j)
      if (i != j) c[dl + i][dl + j] = mm(i, j);
  return MatrixLieAlgebra::from_structure_constants(n, c, false);
}

struct Analyzable {
  ReductiveDecomposition dec;
  Matrix gram;  // on m
};

// (so(W) ⋉ W) ⊕ e(2) with W = R^{1,3} and [w1, w2] = eps·w1∧w2.
inline Analyzable typeII_lorentz_factor(int eps) {
  const auto s = lorhom::minkowski(2);
  const Matrix& G = s.gram;
  auto lorentz_part = [&](const Matrix& a, const Vector& w) {
    Matrix x(5, 5);
    x.set_block(0, 0, a);
    const Vector gw = G.apply(w);
    for (std::size_t i = 0; i < 4; ++i) {
      x(i, 4) = w[i];
      x(4, i) = Rational(eps) * gw[i];
    }
    return lorhom::direct_sum(x, Matrix(3, 3));
  };
  auto euclid_part = [](const Rational& rot, const Rational& u1, const Rational& u2) {
    return lorhom::direct_sum(Matrix(5, 5), Matrix{{0, -rot, u1}, {rot, 0, u2}, {0, 0, 0}});
  };
  std::vector<Matrix> basis;
  const auto soW = lorhom::so_algebra(s);
  for (const auto& a : soW.basis()) basis.push_back(lorentz_part(a, lorhom::zero_vector(4)));
  basis.push_back(euclid_part(1, 0, 0));
  for (std::size_t i = 0; i < 4; ++i) basis.push_back(lorentz_part(Matrix(4, 4), lorhom::unit_vector(4, i)));
  basis.push_back(euclid_part(0, 1, 0));
  basis.push_back(euclid_part(0, 0, 1));
  const auto g = MatrixLieAlgebra::from_basis(8, basis);
  return {lorhom::make_decomposition(g, units(13, 0, 7), units(13, 7, 13)),
          lorhom::direct_sum(G, Matrix::identity(2))};
}

// SL(2,R) as (sl2 ⊕ sl2)/diagonal; metric half the trace form, so c2 = 1.
inline Analyzable typeII_group_space() {
  std::vector<Matrix> basis;
  for (const auto& x : sl2_basis()) basis.push_back(lorhom::direct_sum(x, x));
  for (const auto& x : sl2_basis()) basis.push_back(lorhom::direct_sum(Matrix(2, 2), x));
  const auto g = MatrixLieAlgebra::from_basis(4, basis);
  Matrix gram(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) gram(i, j) = (sl2_basis()[i] * sl2_basis()[j]).trace() / 2;
  return {lorhom::make_decomposition(g, units(6, 0, 3), units(6, 3, 6)), gram};
}

// λ = 0: flat model of R(p∧q + e1∧e2) + R(e1∧e2 + e3∧e4) on R^{1,5}.
inline Analyzable typeIII_flat() {
  const auto s = lorhom::minkowski(4);
  const Matrix e12 = Matrix::unit(4, 4, 1, 0) - Matrix::unit(4, 4, 0, 1);
  const Matrix e34 = Matrix::unit(4, 4, 3, 2) - Matrix::unit(4, 4, 2, 3);
  return {lorhom::flat_model(lorhom::subalgebra_type3(s, e12, {e12 + e34})), s.gram};
}

// λ = 2, C0 = 0: sl2 on the isotropic plane plus e(2) on E.
inline Analyzable typeIII_curved() {
  using lorhom::direct_sum;
  const Matrix d{{Rational(1, 2), 0}, {0, Rational(-1, 2)}};
  std::vector<Matrix> basis{direct_sum(d, Matrix(3, 3)),
                            direct_sum(Matrix(2, 2), Matrix{{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}),
                            direct_sum(Matrix::unit(2, 2, 0, 1), Matrix(3, 3)),
                            direct_sum(Matrix(2, 2), Matrix::unit(3, 3, 0, 2)),
                            direct_sum(Matrix(2, 2), Matrix::unit(3, 3, 1, 2)),
                            direct_sum(Matrix::unit(2, 2, 1, 0), Matrix(3, 3))};
  const auto g = MatrixLieAlgebra::from_basis(5, basis);
  return {lorhom::make_decomposition(g, units(6, 0, 2), units(6, 2, 6)), lorhom::minkowski(2).gram};
}

// λ = 1 and C0 = e1∧e2 at once; not a Lie algebra.
inline Analyzable typeIII_violation() {
  const auto s = lorhom::minkowski(4);
  const Matrix d = lorhom::bivector(s.p(), s.q(), s) + lorhom::bivector(s.e(1), s.e(2), s);
  const Matrix k = lorhom::bivector(s.e(1), s.e(2), s) + lorhom::bivector(s.e(3), s.e(4), s);
  // l = (d, k), m = (p, e1..e4, q); [p, q] = d, other m brackets vanish.
  const auto g = abstract_extension({d, k}, 6, [](std::size_t i, std::size_t j) {
    Vector v = lorhom::zero_vector(8);
    if (i == 0 && j == 5) v[0] = 1;
    if (i == 5 && j == 0) v[0] = -1;
    return v;
  });
  return {lorhom::make_decomposition(g, units(8, 0, 2), units(8, 2, 8)), s.gram};
}

}  // namespace fixture
