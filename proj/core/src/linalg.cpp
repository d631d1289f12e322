#include "lorhom/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lorhom {

RowEchelon rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = c; j < a.cols(); ++j) swap(a(p, j), a(r, j));
    }
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) {
      if (sgn(a(r, j)) != 0) a(r, j) *= inv;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) {
        if (sgn(a(c, j)) != 0) a(i, j) -= f * a(c, j);
      }
    }
  }
  return det;
}

Subspace kernel(const Matrix& m) {
  const auto e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: right-hand side size mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = rhs[i];
  const auto e = rref(aug);
  Vector x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(n));
  const auto e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspace sum: dimension mismatch");
  std::vector<Vector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

Subspace annihilator(const Subspace& s) {
  if (s.is_zero()) return Subspace::full(s.ambient_dim());
  return kernel(s.matrix());
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("subspace intersection: dimension mismatch");
  }
  const auto na = annihilator(a);
  const auto nb = annihilator(b);
  std::vector<Vector> rows = na.basis();
  rows.insert(rows.end(), nb.basis().begin(), nb.basis().end());
  if (rows.empty()) return Subspace::full(a.ambient_dim());
  return kernel(Matrix::from_rows(rows, a.ambient_dim()));
}

Subspace orthocomplement(const Subspace& s, const Matrix& gram) {
  if (gram.rows() != s.ambient_dim() || !gram.is_square()) {
    throw std::invalid_argument("orthocomplement: form size mismatch");
  }
  if (s.is_zero()) return Subspace::full(s.ambient_dim());
  return kernel(s.matrix() * gram);
}

Subspace orthocomplement_in(const Subspace& s, const Subspace& within, const Matrix& gram) {
  if (within.is_zero()) return within;
  if (s.is_zero()) return within;
  const Matrix w = within.matrix();
  const Matrix cond = s.matrix() * gram * w.transpose();
  const auto k = kernel(cond);
  std::vector<Vector> vs;
  for (const auto& c : k.basis()) vs.push_back(within.combine(c));
  return Subspace::span(within.ambient_dim(), vs);
}

Matrix restrict_form(const Matrix& gram, const std::vector<Vector>& basis) {
  const std::size_t k = basis.size();
  Matrix r(k, k);
  std::vector<Vector> gb;
  gb.reserve(k);
  for (const auto& b : basis) gb.push_back(gram.apply(b));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      r(i, j) = dot(basis[i], gb[j]);
      if (i != j) r(j, i) = dot(basis[j], gb[i]);
    }
  }
  return r;
}

std::pair<Matrix, Vector> diagonalize_form(const Matrix& gram) {
  if (!gram.is_symmetric()) throw std::invalid_argument("signature: form is not symmetric");
  const std::size_t n = gram.rows();
  Matrix a = gram;
  Matrix p = Matrix::identity(n);
  auto swap_idx = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t t = 0; t < n; ++t) swap(a(i, t), a(j, t));
    for (std::size_t t = 0; t < n; ++t) swap(a(t, i), a(t, j));
    for (std::size_t t = 0; t < n; ++t) swap(p(t, i), p(t, j));
  };
  // basis vector i += f * basis vector j
  auto add_idx = [&](std::size_t i, std::size_t j, const Rational& f) {
    for (std::size_t t = 0; t < n; ++t) {
      if (sgn(a(j, t)) != 0) a(i, t) += f * a(j, t);
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (sgn(a(t, j)) != 0) a(t, i) += f * a(t, j);
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (sgn(p(t, j)) != 0) p(t, i) += f * p(t, j);
    }
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i) {
      if (sgn(a(i, i)) != 0) {
        piv = i;
        break;
      }
    }
    if (piv == n) {
      // all remaining diagonal entries vanish: use an off-diagonal pair
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (sgn(a(i, j)) != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) break;
      add_idx(pi, pj, 1);
      piv = pi;
    }
    swap_idx(k, piv);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (sgn(a(k, j)) == 0) continue;
      add_idx(j, k, -a(k, j) / a(k, k));
    }
  }
  Vector d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
  return {std::move(p), std::move(d)};
}

Signature signature(const Matrix& gram) {
  const auto [p, d] = diagonalize_form(gram);
  Signature s;
  for (const auto& x : d) {
    const int t = sgn(x);
    if (t > 0) {
      ++s.n_plus;
    } else if (t < 0) {
      ++s.n_minus;
    } else {
      ++s.n_zero;
    }
  }
  return s;
}

std::optional<Vector> negative_direction(const Matrix& gram) {
  const auto [p, d] = diagonalize_form(gram);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (sgn(d[i]) < 0) return p.column(i);
  }
  return std::nullopt;
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  Matrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(h(i, c)) != 0) {
        piv = i;
        break;
      }
    }
    if (piv == n) continue;
    if (piv != c + 1) {
      for (std::size_t j = 0; j < n; ++j) swap(h(piv, j), h(c + 1, j));
      for (std::size_t i = 0; i < n; ++i) swap(h(i, piv), h(i, c + 1));
    }
    for (std::size_t i = c + 2; i < n; ++i) {
      if (sgn(h(i, c)) == 0) continue;
      const Rational u = h(i, c) / h(c + 1, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(h(c + 1, j)) != 0) h(i, j) -= u * h(c + 1, j);
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (sgn(h(r, i)) != 0) h(r, c + 1) += u * h(r, i);
      }
    }
  }
  // p_k = (x - h_kk) p_{k-1} - Σ_{i<k} h_ik (Π_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<Polynomial> p(n + 1);
  p[0] = Polynomial::constant(1);
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = Polynomial::linear_root(h(k - 1, k - 1)) * p[k - 1];
    Rational prod = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      prod *= h(i, i - 1);
      if (sgn(prod) == 0) break;
      const Rational& hik = h(i - 1, k - 1);
      if (sgn(hik) != 0) p[k] = p[k] - (prod * hik) * p[i - 1];
    }
  }
  return p[n];
}

namespace {

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  return divide(a * b, gcd(a, b)).quotient.monic();
}

}  // namespace

Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("minimal polynomial of non-square matrix");
  const std::size_t n = m.rows();
  Polynomial result = Polynomial::constant(1);
  for (std::size_t s = 0; s < n; ++s) {
    Vector v = unit_vector(n, s);
    if (lorhom::is_zero(result(m).apply(v))) continue;
    // Krylov sequence v, Mv, ... until the first dependency.
    std::vector<Vector> seq{v};
    EchelonBasis eb(n);
    eb.insert(v);
    while (true) {
      Vector next = m.apply(seq.back());
      if (eb.contains(next)) {
        const auto coeffs = solve(Matrix::from_columns(seq, n), next);
        std::vector<Rational> c(seq.size() + 1);
        for (std::size_t i = 0; i < seq.size(); ++i) c[i] = -(*coeffs)[i];
        c[seq.size()] = 1;
        result = lcm(result, Polynomial(std::move(c)));
        break;
      }
      eb.insert(next);
      seq.push_back(std::move(next));
    }
  }
  return result;
}

std::vector<Eigenspace> rational_eigenspaces(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("eigenspaces of non-square matrix");
  std::vector<Eigenspace> out;
  const std::size_t n = m.rows();
  if (n == 0) return out;
  for (const auto& r : rational_roots(characteristic_polynomial(m))) {
    out.push_back({r, kernel(m - r * Matrix::identity(n))});
  }
  return out;
}

bool is_semisimple_operator(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("semisimplicity of non-square matrix");
  if (m.rows() == 0) return true;
  return squarefree_part(characteristic_polynomial(m))(m).is_zero();
}

}  // namespace lorhom
