#include "lorhom/lie_algebra.hpp"

#include <sstream>

namespace lorhom {

namespace {

Vector flatten(const Matrix& m) { return m.entries(); }

}  // namespace

void MatrixLieAlgebra::finish(Data& d) {
  const std::size_t n = d.dim;
  d.ad.assign(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& cij = d.c[i][j];
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(cij[k]) != 0) d.ad[i](k, j) = cij[k];
      }
    }
  }
  d.killing = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      // trace(ad_i ad_j) = Σ_{a,b} ad_i(a,b) ad_j(b,a)
      Rational t;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          const auto& x = d.ad[i](a, b);
          if (sgn(x) == 0) continue;
          const auto& y = d.ad[j](b, a);
          if (sgn(y) != 0) t += x * y;
        }
      }
      d.killing(i, j) = t;
      d.killing(j, i) = t;
    }
  }
}

MatrixLieAlgebra MatrixLieAlgebra::from_basis(std::size_t ambient_size, std::vector<Matrix> basis) {
  auto d = std::make_shared<Data>();
  d->ambient = ambient_size;
  d->dim = basis.size();
  const std::size_t flat = ambient_size * ambient_size;
  for (const auto& b : basis) {
    if (b.rows() != ambient_size || b.cols() != ambient_size) {
      throw LieError("basis matrix has wrong size");
    }
  }
  const std::size_t n = basis.size();
  Matrix aug(n, flat + n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = basis[i].entries();
    for (std::size_t j = 0; j < flat; ++j) aug(i, j) = e[j];
    aug(i, flat + i) = 1;
  }
  auto e = rref(aug);
  std::size_t r = 0;
  while (r < e.pivots.size() && e.pivots[r] < flat) ++r;
  if (r < n) throw LieError("dependent basis");
  d->pivots = e.pivots;
  d->reduced = e.reduced.block(0, n, 0, flat);
  d->transform = e.reduced.block(0, n, flat, n);
  d->basis = std::move(basis);

  MatrixLieAlgebra g;
  g.d_ = d;
  d->c.assign(n, std::vector<Vector>(n, Vector(n)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Matrix br = commutator(d->basis[i], d->basis[j]);
      auto co = g.try_coordinates(br);
      if (!co) {
        std::ostringstream os;
        os << "not closed under bracket: [b" << i << ", b" << j << "] leaves the span";
        throw LieError(os.str());
      }
      d->c[i][j] = *co;
      d->c[j][i] = Rational(-1) * *co;
    }
  }
  finish(*d);
  return g;
}

MatrixLieAlgebra MatrixLieAlgebra::generated_by(std::size_t ambient_size,
                                                const std::vector<Matrix>& gens) {
  EchelonBasis eb(ambient_size * ambient_size);
  std::vector<Matrix> basis;
  auto add = [&](const Matrix& m) {
    if (eb.insert(flatten(m))) {
      basis.push_back(m);
      return true;
    }
    return false;
  };
  for (const auto& g : gens) add(g);
  std::size_t done = 0;
  // closure: bracket every new element against everything before it
  while (done < basis.size()) {
    for (std::size_t i = 0; i < done; ++i) add(commutator(basis[i], basis[done]));
    ++done;
  }
  return from_basis(ambient_size, std::move(basis));
}

MatrixLieAlgebra MatrixLieAlgebra::from_structure_constants(
    std::size_t dim, const std::vector<std::vector<Vector>>& c, bool check_jacobi) {
  if (c.size() != dim) throw LieError("structure constant table has wrong size");
  for (std::size_t i = 0; i < dim; ++i) {
    if (c[i].size() != dim) throw LieError("structure constant table has wrong size");
    for (std::size_t j = 0; j < dim; ++j) {
      if (c[i][j].size() != dim) throw LieError("structure constant table has wrong size");
      if (c[i][j] + c[j][i] != zero_vector(dim)) {
        std::ostringstream os;
        os << "structure constants not antisymmetric at (" << i << ", " << j << ")";
        throw LieError(os.str());
      }
    }
  }
  auto d = std::make_shared<Data>();
  d->ambient = dim;
  d->dim = dim;
  d->abstract = true;
  d->c = c;
  finish(*d);
  MatrixLieAlgebra g;
  g.d_ = d;
  if (check_jacobi && !satisfies_jacobi(g)) throw LieError("structure constants violate the Jacobi identity");
  return g;
}

const std::vector<Matrix>& MatrixLieAlgebra::basis() const {
  static const std::vector<Matrix> empty;
  if (!d_) return empty;
  if (d_->abstract) throw LieError("abstract algebra has no matrix basis");
  return d_->basis;
}

Matrix MatrixLieAlgebra::element(const Vector& coords) const {
  const auto& b = basis();
  if (coords.size() != b.size()) throw LieError("coordinate vector has wrong length");
  Matrix m(ambient_size(), ambient_size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (sgn(coords[i]) != 0) m += coords[i] * b[i];
  }
  return m;
}

std::optional<Vector> MatrixLieAlgebra::try_coordinates(const Matrix& x) const {
  if (!d_) return std::nullopt;
  if (d_->abstract) throw LieError("abstract algebra has no matrix coordinates");
  if (x.rows() != d_->ambient || x.cols() != d_->ambient) return std::nullopt;
  const auto& flat = x.entries();
  const std::size_t n = d_->dim;
  Vector cr(n);
  Vector residual = flat;
  for (std::size_t r = 0; r < n; ++r) {
    cr[r] = flat[d_->pivots[r]];
    if (sgn(cr[r]) == 0) continue;
    for (std::size_t j = 0; j < flat.size(); ++j) {
      const auto& v = d_->reduced(r, j);
      if (sgn(v) != 0) residual[j] -= cr[r] * v;
    }
  }
  if (!lorhom::is_zero(residual)) return std::nullopt;
  return d_->transform.apply_left(cr);
}

Vector MatrixLieAlgebra::coordinates(const Matrix& x) const {
  auto c = try_coordinates(x);
  if (!c) throw LieError("matrix is not an element of the algebra");
  return *c;
}

Vector MatrixLieAlgebra::bracket(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  Vector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0 || i == j) continue;
      const Rational f = x[i] * y[j];
      const auto& cij = d_->c[i][j];
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(cij[k]) != 0) r[k] += f * cij[k];
      }
    }
  }
  return r;
}

Matrix MatrixLieAlgebra::ad(const Vector& x) const {
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) != 0) m += x[i] * d_->ad[i];
  }
  return m;
}

Rational MatrixLieAlgebra::killing(const Vector& x, const Vector& y) const {
  return dot(x, d_->killing.apply(y));
}

Matrix MatrixLieAlgebra::killing_on(const Subspace& s) const {
  return restrict_form(d_->killing, s.basis());
}

SubalgebraHandle SubalgebraHandle::make(const MatrixLieAlgebra& parent, const Subspace& span) {
  if (!is_subalgebra(parent, span)) throw LieError("span is not closed under bracket");
  return {parent, span};
}

MatrixLieAlgebra SubalgebraHandle::intrinsic() const { return restrict_to(parent, span); }

Subspace bracket_span(const MatrixLieAlgebra& g, const Subspace& a, const Subspace& b) {
  EchelonBasis eb(g.dim());
  for (const auto& x : a.basis()) {
    for (const auto& y : b.basis()) eb.insert(g.bracket(x, y));
  }
  return eb.subspace();
}

bool is_subalgebra(const MatrixLieAlgebra& g, const Subspace& s) {
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (!s.contains(g.bracket(b[i], b[j]))) return false;
    }
  }
  return true;
}

Subspace generated_subalgebra(const MatrixLieAlgebra& g, const Subspace& s) {
  EchelonBasis eb(g.dim());
  std::vector<Vector> elems;
  for (const auto& v : s.basis()) {
    if (eb.insert(v)) elems.push_back(v);
  }
  for (std::size_t done = 0; done < elems.size(); ++done) {
    for (std::size_t i = 0; i < done; ++i) {
      Vector br = g.bracket(elems[i], elems[done]);
      if (eb.insert(br)) elems.push_back(std::move(br));
    }
  }
  return Subspace::span(g.dim(), elems);
}

MatrixLieAlgebra restrict_to(const MatrixLieAlgebra& g, const Subspace& s) {
  if (!is_subalgebra(g, s)) throw LieError("span is not closed under bracket");
  if (!g.is_abstract()) {
    std::vector<Matrix> mats;
    for (const auto& v : s.basis()) mats.push_back(g.element(v));
    return MatrixLieAlgebra::from_basis(g.ambient_size(), std::move(mats));
  }
  const std::size_t k = s.dim();
  std::vector<std::vector<Vector>> c(k, std::vector<Vector>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) c[i][j] = s.coordinates(g.bracket(s.basis()[i], s.basis()[j]));
  }
  return MatrixLieAlgebra::from_structure_constants(k, c, false);
}

Subspace centralizer(const MatrixLieAlgebra& g, const Subspace& target) {
  if (target.is_zero()) return g.full();
  std::vector<Matrix> parts;
  for (const auto& t : target.basis()) parts.push_back(g.ad(t));
  return kernel(stack(parts));
}

Subspace centralizer(const MatrixLieAlgebra& g, const Vector& element) {
  return kernel(g.ad(element));
}

Subspace normalizer(const MatrixLieAlgebra& g, const Subspace& sub) {
  if (sub.is_zero() || sub.is_full()) return g.full();
  // X normalizes S iff ann(S) · ad_s X = 0 for every basis vector s of S.
  const Matrix ann = annihilator(sub).matrix();
  std::vector<Matrix> parts;
  for (const auto& s : sub.basis()) parts.push_back(ann * g.ad(s));
  return kernel(stack(parts));
}

Subspace center(const MatrixLieAlgebra& g) { return centralizer(g, g.full()); }

SubalgebraHandle derived_subalgebra(const MatrixLieAlgebra& g) {
  return {g, bracket_span(g, g.full(), g.full())};
}

bool is_semisimple(const MatrixLieAlgebra& g) {
  if (g.dim() == 0) return true;
  return sgn(determinant(g.killing())) != 0;
}

bool is_abelian(const MatrixLieAlgebra& g) { return bracket_span(g, g.full(), g.full()).is_zero(); }

bool is_compact_subalgebra(const MatrixLieAlgebra& parent, const Subspace& sub) {
  if (!is_semisimple(parent)) throw LieError("parent not semisimple: compactness criterion unsound");
  if (sub.is_zero()) return true;
  return signature(parent.killing_on(sub)).is_negative_definite();
}

Subspace killing_orthocomplement(const MatrixLieAlgebra& g, const Subspace& s) {
  return orthocomplement(s, g.killing());
}

bool satisfies_jacobi(const MatrixLieAlgebra& g) {
  const std::size_t n = g.dim();
  // [ad_i, ad_j] = ad_{[i,j]} is equivalent to Jacobi on basis triples
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (commutator(g.ad_basis(i), g.ad_basis(j)) != g.ad(g.structure_constant(i, j))) return false;
    }
  }
  return true;
}

bool killing_is_invariant(const MatrixLieAlgebra& g) {
  // B(ad_X Y, Z) + B(Y, ad_X Z) = 0  ⇔  ad_X^T K + K ad_X = 0
  const Matrix& k = g.killing();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const Matrix& a = g.ad_basis(i);
    if (!(a.transpose() * k + k * a).is_zero()) return false;
  }
  return true;
}

}  // namespace lorhom
