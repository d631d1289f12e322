#include "lorhom/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace lorhom {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }
Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }
Polynomial Polynomial::linear_root(const Rational& r) { return Polynomial({-r, Rational(1)}); }

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return Rational(1) / leading() * *this;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Matrix Polynomial::operator()(const Matrix& m) const {
  if (!m.is_square()) throw std::invalid_argument("polynomial evaluated at non-square matrix");
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  const Matrix id = Matrix::identity(n);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * m;
    if (sgn(*it) != 0) acc += *it * id;
  }
  return acc;
}

int Polynomial::sign_at(const Rational& t) const { return sgn((*this)(t)); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
  std::vector<Rational> r = a.coefficients();
  for (auto& x : r) x *= s;
  return Polynomial(std::move(r));
}

PolyDivision divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lead = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational f = rem[static_cast<std::size_t>(k + db)] / lead;
    quot[static_cast<std::size_t>(k)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= f * b.coefficient(static_cast<std::size_t>(j));
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divide(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return divide(p, gcd(p, p.derivative())).quotient.monic();
}

namespace {

// Integer-coefficient primitive multiple of p (positive leading coefficient).
std::vector<mpz_class> primitive_integer(const Polynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p.coefficients()) l = lcm(l, c.get_den());
  std::vector<mpz_class> z;
  mpz_class g = 0;
  for (const auto& c : p.coefficients()) {
    mpz_class v = c.get_num() * (l / c.get_den());
    z.push_back(v);
    g = gcd(g, v);
  }
  if (g < 0) g = -g;
  for (auto& v : z) v /= g;
  if (z.back() < 0) {
    for (auto& v : z) v = -v;
  }
  return z;
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Polynomial r = divide(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    chain.push_back(Rational(-1) * r);
  }
  return chain;
}

int sign_changes(const std::vector<Polynomial>& chain, const Rational& t) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = q.sign_at(t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& input) {
  if (input.degree() <= 0) return {};
  Polynomial p = squarefree_part(input);
  std::vector<Rational> roots;

  // Any rational root of the primitive integer form is k / a_n for an integer k,
  // so distinct candidates are at least 1/a_n apart.
  const auto z = primitive_integer(p);
  const Rational grid = Rational(mpz_class(1), z.back());

  // Cheap pass over small integers and halves first; deflate what we find.
  for (int den = 1; den <= 2 && p.degree() > 0; ++den) {
    for (int num = -8 * den; num <= 8 * den && p.degree() > 0; ++num) {
      Rational r(num, den);
      r.canonicalize();
      if (p.sign_at(r) == 0) {
        roots.push_back(r);
        p = divide(p, Polynomial::linear_root(r)).quotient;
      }
    }
  }

  if (p.degree() > 0) {
    Rational bound = 1;
    for (std::size_t i = 0; i + 1 < p.coefficients().size(); ++i) {
      Rational q = abs(p.coefficients()[i] / p.leading());
      if (q + 1 > bound) bound = q + 1;
    }
    const auto chain = sturm_chain(p);
    // Isolate roots in (lo, hi] by bisection until the interval is shorter than
    // the candidate grid, then test the single grid point it can contain.
    struct Interval {
      Rational lo, hi;
      int vlo, vhi;
    };
    std::vector<Interval> work{{-bound, bound, sign_changes(chain, -bound), sign_changes(chain, bound)}};
    while (!work.empty()) {
      Interval iv = work.back();
      work.pop_back();
      const int count = iv.vlo - iv.vhi;
      if (count == 0) continue;
      if (iv.hi - iv.lo < grid) {
        // interval (lo, hi] with width < grid holds at most one multiple of grid
        mpz_class k;
        Rational t = iv.hi / grid;
        mpz_fdiv_q(k.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
        Rational cand = Rational(k) * grid;
        if (cand > iv.lo && p.sign_at(cand) == 0) roots.push_back(cand);
        continue;
      }
      Rational mid = (iv.lo + iv.hi) / 2;
      const int vm = sign_changes(chain, mid);
      work.push_back({iv.lo, mid, iv.vlo, vm});
      work.push_back({mid, iv.hi, vm, iv.vhi});
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

int root_multiplicity(const Polynomial& p, const Rational& r) {
  if (p.is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
  int m = 0;
  Polynomial q = p;
  const Polynomial lin = Polynomial::linear_root(r);
  while (q.degree() > 0) {
    auto d = divide(q, lin);
    if (!d.remainder.is_zero()) break;
    q = d.quotient;
    ++m;
  }
  return m;
}

}  // namespace lorhom
