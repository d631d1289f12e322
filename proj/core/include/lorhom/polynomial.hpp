#pragma once

#include <vector>

#include "lorhom/matrix.hpp"
#include "lorhom/rational.hpp"

namespace lorhom {

/// Univariate polynomial over ℚ, coefficients stored low degree first.
/// The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial x();
  /// x - r
  static Polynomial linear_root(const Rational& r);

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational operator()(const Rational& t) const;
  /// Horner evaluation at a square matrix.
  Matrix operator()(const Matrix& m) const;
  int sign_at(const Rational& t) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> c_;

  friend Polynomial operator+(const Polynomial&, const Polynomial&);
  friend Polynomial operator-(const Polynomial&, const Polynomial&);
  friend Polynomial operator*(const Polynomial&, const Polynomial&);
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& s, const Polynomial& a);

struct PolyDivision {
  Polynomial quotient;
  Polynomial remainder;
};
PolyDivision divide(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'), monic.
Polynomial squarefree_part(const Polynomial& p);

/// Distinct rational roots in increasing order (exact).
std::vector<Rational> rational_roots(const Polynomial& p);

/// Multiplicity of r as a root of p.
int root_multiplicity(const Polynomial& p, const Rational& r);

}  // namespace lorhom
