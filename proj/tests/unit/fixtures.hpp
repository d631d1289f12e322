// Small hand-built algebras shared by several test files.
#pragma once

#include "lorhom/lie_algebra.hpp"

namespace fixture {

using lorhom::Matrix;
using lorhom::MatrixLieAlgebra;

// so(3) rotation generators L_x, L_y, L_z.
inline std::vector<Matrix> so3_generators() {
  return {Matrix{{0, 0, 0}, {0, 0, -1}, {0, 1, 0}}, Matrix{{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}},
          Matrix{{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}};
}

// su(2) realified: i·σ_k as 4x4 real matrices (complex a+bi -> [[a,-b],[b,a]]).
inline std::vector<Matrix> su2_realified() {
  // iσ3 = diag(i, -i), iσ1 = [[0,i],[i,0]], iσ2 = [[0,1],[-1,0]]
  const Matrix J{{0, -1}, {1, 0}};
  const Matrix I2 = Matrix::identity(2);
  Matrix a(4, 4), b(4, 4), c(4, 4);
  a.set_block(0, 0, J);
  a.set_block(2, 2, -J);
  b.set_block(0, 2, J);
  b.set_block(2, 0, J);
  c.set_block(0, 2, I2);
  c.set_block(2, 0, -I2);
  return {a, b, c};
}

// sl(2,R): H, E, F.
inline std::vector<Matrix> sl2_basis() {
  return {Matrix{{1, 0}, {0, -1}}, Matrix{{0, 1}, {0, 0}}, Matrix{{0, 0}, {1, 0}}};
}

inline Matrix block_diag(const Matrix& a, const Matrix& b) { return lorhom::direct_sum(a, b); }

// Direct sum of two matrix algebras, block-diagonally embedded.
inline MatrixLieAlgebra direct_sum_algebra(const MatrixLieAlgebra& a, const MatrixLieAlgebra& b) {
  std::vector<Matrix> basis;
  for (const auto& x : a.basis()) basis.push_back(lorhom::direct_sum(x, Matrix(b.ambient_size(), b.ambient_size())));
  for (const auto& y : b.basis()) basis.push_back(lorhom::direct_sum(Matrix(a.ambient_size(), a.ambient_size()), y));
  return MatrixLieAlgebra::from_basis(a.ambient_size() + b.ambient_size(), basis);
}

}  // namespace fixture
