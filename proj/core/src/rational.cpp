#include "lorhom/rational.hpp"

#include <stdexcept>

namespace lorhom {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto valid_int = [](std::string_view t) {
    std::size_t i = 0;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v.size());
  if (sgn(s) == 0) return r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) r[i] = s * v[i];
  }
  return r;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

bool lex_less(const Vector& a, const Vector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

Vector normalized_leading(Vector v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) {
      const Rational inv = 1 / x;
      for (auto& y : v) {
        if (sgn(y) != 0) y *= inv;
      }
      break;
    }
  }
  return v;
}

}  // namespace lorhom
