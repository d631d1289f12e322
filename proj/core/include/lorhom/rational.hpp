#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lorhom {

/// Exact rational number. Always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Dense coordinate vector over the rationals.
using Vector = std::vector<Rational>;

/// "num/den", with the denominator omitted when it is 1.
std::string to_string(const Rational& r);

/// Parses "a", "-a", "a/b". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
Rational dot(const Vector& a, const Vector& b);

/// Lexicographic comparison, used for canonical ordering of bases.
bool lex_less(const Vector& a, const Vector& b);

/// Scales v so that its first nonzero entry is 1. Returns v unchanged if zero.
Vector normalized_leading(Vector v);

}  // namespace lorhom
