#include "lorhom/lorentz.hpp"

#include <sstream>

namespace lorhom {

Vector MinkowskiSpace::p() const { return unit_vector(dim(), 0); }
Vector MinkowskiSpace::q() const { return unit_vector(dim(), n + 1); }
Vector MinkowskiSpace::e(std::size_t i) const {
  if (i < 1 || i > n) throw std::out_of_range("e_i index out of range");
  return unit_vector(dim(), i);
}
Rational MinkowskiSpace::inner(const Vector& u, const Vector& v) const { return dot(u, gram.apply(v)); }

MinkowskiSpace minkowski(std::size_t n) {
  MinkowskiSpace s;
  s.n = n;
  s.gram = Matrix(n + 2, n + 2);
  s.gram(0, n + 1) = 1;
  s.gram(n + 1, 0) = 1;
  for (std::size_t i = 1; i <= n; ++i) s.gram(i, i) = 1;
  return s;
}

Matrix bivector(const Vector& u, const Vector& v, const Matrix& gram) {
  const Vector gu = gram.apply(u);
  const Vector gv = gram.apply(v);
  const std::size_t d = u.size();
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m(i, j) = u[i] * gv[j] - v[i] * gu[j];
  }
  return m;
}

Matrix bivector(const Vector& u, const Vector& v, const MinkowskiSpace& space) {
  return bivector(u, v, space.gram);
}

bool is_skew(const Matrix& x, const Matrix& gram) { return (x.transpose() * gram + gram * x).is_zero(); }

std::vector<Matrix> so_basis(std::size_t m) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      Matrix x(m, m);
      x(i, j) = 1;
      x(j, i) = -1;
      out.push_back(std::move(x));
    }
  }
  return out;
}

Matrix embed_E(const MinkowskiSpace& space, const Matrix& k) {
  if (k.rows() != space.n || k.cols() != space.n) throw LieError("matrix on E has wrong size");
  Matrix x(space.dim(), space.dim());
  x.set_block(1, 1, k);
  return x;
}

namespace {

void require_skew_symmetric(const Matrix& k, std::size_t size, const char* what) {
  if (k.rows() != size || k.cols() != size) {
    std::ostringstream os;
    os << what << ": expected a " << size << "x" << size << " matrix";
    throw LieError(os.str());
  }
  if (!(k + k.transpose()).is_zero()) throw LieError(std::string(what) + ": matrix is not skew-symmetric");
}

Matrix embed_indices(std::size_t d, const std::vector<std::size_t>& idx, const Matrix& k) {
  Matrix x(d, d);
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b) x(idx[a], idx[b]) = k(a, b);
  }
  return x;
}

}  // namespace

MatrixLieAlgebra so_algebra(const MinkowskiSpace& s) {
  std::vector<Matrix> basis;
  for (std::size_t i = 1; i <= s.n; ++i) basis.push_back(bivector(s.p(), s.e(i), s));
  basis.push_back(bivector(s.p(), s.q(), s));
  for (std::size_t i = 1; i <= s.n; ++i) {
    for (std::size_t j = i + 1; j <= s.n; ++j) basis.push_back(bivector(s.e(i), s.e(j), s));
  }
  for (std::size_t i = 1; i <= s.n; ++i) basis.push_back(bivector(s.q(), s.e(i), s));
  return MatrixLieAlgebra::from_basis(s.dim(), std::move(basis));
}

GradedLorentzAlgebra lorentz_algebra(const MinkowskiSpace& space) {
  GradedLorentzAlgebra out;
  out.space = space;
  out.algebra = so_algebra(space);
  out.grading_element = out.algebra.coordinates(bivector(space.p(), space.q(), space));
  const std::size_t dim = out.algebra.dim();
  out.g_minus = Subspace(dim);
  out.g_zero = Subspace(dim);
  out.g_plus = Subspace(dim);
  for (const auto& es : rational_eigenspaces(out.algebra.ad(out.grading_element))) {
    if (es.eigenvalue == -1) {
      out.g_minus = es.space;
    } else if (es.eigenvalue == 0) {
      out.g_zero = es.space;
    } else if (es.eigenvalue == 1) {
      out.g_plus = es.space;
    } else {
      throw LieError("unexpected eigenvalue of the grading element");
    }
  }
  return out;
}

Vector type1_timelike(const MinkowskiSpace& s) { return s.p() - Rational(1, 2) * s.q(); }

MatrixLieAlgebra subalgebra_type1(const MinkowskiSpace& s, const std::vector<Matrix>& generators) {
  const std::size_t m = s.n + 1;
  // orthonormal frame of t^⊥: F^T G F = I
  std::vector<Vector> frame{s.p() + Rational(1, 2) * s.q()};
  for (std::size_t i = 1; i <= s.n; ++i) frame.push_back(s.e(i));
  const Matrix F = Matrix::from_columns(frame, s.dim());
  const Matrix Fpinv = F.transpose() * s.gram;
  std::vector<Matrix> gens;
  for (const auto& k : generators) {
    require_skew_symmetric(k, m, "type I generator");
    gens.push_back(F * k * Fpinv);
  }
  return MatrixLieAlgebra::generated_by(s.dim(), gens);
}

MatrixLieAlgebra subalgebra_type2(const MinkowskiSpace& s, std::size_t k, const std::vector<Matrix>& k_part) {
  if (k < 1 || k + 1 > s.n) {
    std::ostringstream os;
    os << "type II requires 1 <= k <= n-1 (k = " << k << ", n = " << s.n << ")";
    throw LieError(os.str());
  }
  std::vector<Vector> vh{s.p()};
  for (std::size_t i = 1; i <= k; ++i) vh.push_back(s.e(i));
  vh.push_back(s.q());
  std::vector<Matrix> gens;
  for (std::size_t a = 0; a < vh.size(); ++a) {
    for (std::size_t b = a + 1; b < vh.size(); ++b) gens.push_back(bivector(vh[a], vh[b], s));
  }
  std::vector<std::size_t> perp;
  for (std::size_t i = k + 1; i <= s.n; ++i) perp.push_back(i);
  for (const auto& m : k_part) {
    require_skew_symmetric(m, perp.size(), "type II compact part");
    gens.push_back(embed_indices(s.dim(), perp, m));
  }
  return MatrixLieAlgebra::generated_by(s.dim(), gens);
}

MatrixLieAlgebra subalgebra_type3(const MinkowskiSpace& s, const Matrix& c0, const std::vector<Matrix>& k_part) {
  require_skew_symmetric(c0, s.n, "C0");
  for (std::size_t i = 0; i < k_part.size(); ++i) {
    require_skew_symmetric(k_part[i], s.n, "type III compact part");
    if (!commutator(c0, k_part[i]).is_zero()) {
      std::ostringstream os;
      os << "[C0, k_" << i << "] != 0: compact part must centralize C0";
      throw LieError(os.str());
    }
  }
  std::vector<Matrix> gens{bivector(s.p(), s.q(), s) + embed_E(s, c0)};
  for (const auto& m : k_part) gens.push_back(embed_E(s, m));
  return MatrixLieAlgebra::generated_by(s.dim(), gens);
}

MatrixLieAlgebra parabolic(const MinkowskiSpace& s) {
  std::vector<Matrix> basis{bivector(s.p(), s.q(), s)};
  for (const auto& k : so_basis(s.n)) basis.push_back(embed_E(s, k));
  for (std::size_t i = 1; i <= s.n; ++i) basis.push_back(bivector(s.p(), s.e(i), s));
  return MatrixLieAlgebra::from_basis(s.dim(), std::move(basis));
}

MatrixLieAlgebra twisted_subalgebra(const MinkowskiSpace& s, const std::vector<std::size_t>& e_prime,
                                     const std::vector<std::size_t>& e_second,
                                     const std::vector<Matrix>& phi, const std::vector<Matrix>& k_part) {
  std::vector<bool> used(s.n + 1, false);
  for (auto i : e_prime) {
    if (i < 1 || i > s.n || used[i]) throw LieError("E' indices must be distinct and in 1..n");
    used[i] = true;
  }
  for (auto i : e_second) {
    if (i < 1 || i > s.n || used[i]) throw LieError("E'' indices must be distinct, in 1..n and disjoint from E'");
    used[i] = true;
  }
  if (e_prime.size() + e_second.size() != s.n) throw LieError("E' and E'' must split E");
  if (phi.size() != e_prime.size()) throw LieError("phi needs one matrix per basis vector of E'");
  const std::size_t m = e_second.size();
  for (const auto& f : phi) require_skew_symmetric(f, m, "phi");
  for (const auto& k : k_part) require_skew_symmetric(k, m, "compact part");
  for (std::size_t a = 0; a < phi.size(); ++a) {
    for (std::size_t b = a + 1; b < phi.size(); ++b) {
      if (!commutator(phi[a], phi[b]).is_zero()) {
        std::ostringstream os;
        os << "phi(E') is not commutative: [phi_" << a << ", phi_" << b << "] != 0";
        throw LieError(os.str());
      }
    }
    for (std::size_t c = 0; c < k_part.size(); ++c) {
      if (!commutator(phi[a], k_part[c]).is_zero()) {
        std::ostringstream os;
        os << "phi(E') does not commute with k: [phi_" << a << ", k_" << c << "] != 0";
        throw LieError(os.str());
      }
    }
  }
  {
    // φ(E′) ∩ k = 0
    EchelonBasis kb(m * m);
    std::size_t rk = 0;
    for (const auto& k : k_part) rk += kb.insert(k.entries()) ? 1 : 0;
    EchelonBasis pb(m * m);
    std::size_t rp = 0;
    for (const auto& f : phi) {
      rp += pb.insert(f.entries()) ? 1 : 0;
      kb.insert(f.entries());
    }
    if (kb.dim() != rk + rp) throw LieError("phi(E') meets k nontrivially");
  }
  std::vector<Matrix> gens;
  for (std::size_t a = 0; a < e_prime.size(); ++a) {
    gens.push_back(bivector(s.p(), s.e(e_prime[a]), s) + embed_indices(s.dim(), e_second, phi[a]));
  }
  for (const auto& k : k_part) gens.push_back(embed_indices(s.dim(), e_second, k));
  return MatrixLieAlgebra::generated_by(s.dim(), gens);
}

std::vector<NamedAlgebra> maximal_subalgebra_instances(const MinkowskiSpace& s) {
  if (s.n < 2) throw LieError("maximal subalgebra instances need n >= 2");
  std::vector<NamedAlgebra> out;
  out.push_back({"so(" + std::to_string(s.n + 1) + ")", subalgebra_type1(s, so_basis(s.n + 1))});
  for (std::size_t k = 1; k + 1 <= s.n; ++k) {
    out.push_back({"h_" + std::to_string(k), subalgebra_type2(s, k, so_basis(s.n - k))});
  }
  out.push_back({"parabolic", parabolic(s)});
  return out;
}

}  // namespace lorhom
