#include "lorhom/matrix.hpp"

#include <stdexcept>

namespace lorhom {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  Matrix m(rows, cols);
  m(i, j) = 1;
  return m;
}

Vector Matrix::row_vector(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn((*this)(i, j)) != 0) t(j, i) = (*this)(i, j);
    }
  }
  return t;
}

Rational Matrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  Vector r(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (sgn(v[j]) == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const auto& a = (*this)(i, j);
      if (sgn(a) != 0) r[i] += a * v[j];
    }
  }
  return r;
}

Vector Matrix::apply_left(const Vector& v) const {
  if (v.size() != rows_) throw std::invalid_argument("vector-matrix size mismatch");
  Vector r(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (sgn(v[i]) == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& a = (*this)(i, j);
      if (sgn(a) != 0) r[j] += v[i] * a;
    }
  }
  return r;
}

Matrix Matrix::block(std::size_t r0, std::size_t rcount, std::size_t c0, std::size_t ccount) const {
  if (r0 + rcount > rows_ || c0 + ccount > cols_) throw std::out_of_range("block out of range");
  Matrix b(rcount, ccount);
  for (std::size_t i = 0; i < rcount; ++i) {
    for (std::size_t j = 0; j < ccount; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  }
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw std::out_of_range("block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (sgn(o.data_[k]) != 0) data_[k] += o.data_[k];
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (sgn(o.data_[k]) != 0) data_[k] -= o.data_[k];
  }
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) {
    if (sgn(x) != 0) x *= s;
  }
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator-(Matrix a) { return a *= Rational(-1); }
Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
Matrix operator*(Matrix a, const Rational& s) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product size mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const auto& y = b(k, j);
        if (sgn(y) != 0) c(i, j) += x * y;
      }
    }
  }
  return c;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (sgn(b(k, l)) != 0) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return m;
}

Matrix stack(const std::vector<Matrix>& parts) {
  std::size_t rows = 0;
  std::size_t cols = parts.empty() ? 0 : parts.front().cols();
  for (const auto& p : parts) {
    if (p.cols() != cols) throw std::invalid_argument("stack: column count mismatch");
    rows += p.rows();
  }
  Matrix m(rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    m.set_block(r, 0, p);
    r += p.rows();
  }
  return m;
}

}  // namespace lorhom
