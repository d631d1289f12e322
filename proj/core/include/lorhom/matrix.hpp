#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "lorhom/rational.hpp"

namespace lorhom {

/// Dense row-major matrix over the rationals. Arithmetic skips zero entries,
/// which keeps the mostly-sparse Lie algebra bases cheap.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& d);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  /// Single-entry matrix E_ij.
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  Vector row_vector(std::size_t i) const;
  Vector column(std::size_t j) const;
  /// Entries in row-major order.
  const std::vector<Rational>& entries() const { return data_; }

  bool is_zero() const;
  bool is_symmetric() const;
  Matrix transpose() const;
  Rational trace() const;
  Vector apply(const Vector& v) const;
  /// Row vector times matrix: v^T M.
  Vector apply_left(const Vector& v) const;

  /// Rows [first, first+count) and columns [c0, c0+ccount).
  Matrix block(std::size_t r0, std::size_t rcount, std::size_t c0, std::size_t ccount) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(const Rational& s, Matrix a);
Matrix operator*(Matrix a, const Rational& s);
Matrix operator*(const Matrix& a, const Matrix& b);

/// [a, b] = ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Block-diagonal direct sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Kronecker product.
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Vertical concatenation (column counts must agree).
Matrix stack(const std::vector<Matrix>& parts);

}  // namespace lorhom
