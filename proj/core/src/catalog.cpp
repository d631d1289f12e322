#include "lorhom/catalog.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lorhom/linalg.hpp"

namespace lorhom {

namespace {

using Sign = std::vector<int>;

// a + ib at complex position (j, k) of a realified matrix.
void add_c(Matrix& m, std::size_t j, std::size_t k, const Rational& a, const Rational& b) {
  m(2 * j, 2 * k) += a;
  m(2 * j, 2 * k + 1) -= b;
  m(2 * j + 1, 2 * k) += b;
  m(2 * j + 1, 2 * k + 1) += a;
}

// Quaternion a + bi + cj + dk at position (j, k): left multiplication matrix.
void add_h(Matrix& m, std::size_t j, std::size_t k, const std::array<Rational, 4>& q) {
  const auto& [a, b, c, d] = q;
  const Rational L[4][4] = {{a, -b, -c, -d}, {b, a, -d, c}, {c, d, a, -b}, {d, -c, b, a}};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t s = 0; s < 4; ++s) m(4 * j + r, 4 * k + s) += L[r][s];
}

std::array<Rational, 4> conj(const std::array<Rational, 4>& q) { return {q[0], -q[1], -q[2], -q[3]}; }

const std::array<std::array<Rational, 4>, 4> kQuat = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};

Sign signs(std::size_t p, std::size_t q) {
  Sign s(p, 1);
  s.insert(s.end(), q, -1);
  return s;
}

// u(N, sign) ∩ su restricted to coordinates [lo, hi).
std::vector<Matrix> su_block(std::size_t N, const Sign& s, std::size_t lo, std::size_t hi) {
  std::vector<Matrix> out;
  for (std::size_t j = lo; j + 1 < hi; ++j) {
    Matrix m(2 * N, 2 * N);
    add_c(m, j, j, 0, 1);
    add_c(m, j + 1, j + 1, 0, -1);
    out.push_back(std::move(m));
  }
  for (std::size_t j = lo; j < hi; ++j)
    for (std::size_t k = j + 1; k < hi; ++k) {
      Matrix a(2 * N, 2 * N), b(2 * N, 2 * N);
      if (s[j] == s[k]) {
        add_c(a, j, k, 1, 0), add_c(a, k, j, -1, 0);
        add_c(b, j, k, 0, 1), add_c(b, k, j, 0, 1);
      } else {
        add_c(a, j, k, 1, 0), add_c(a, k, j, 1, 0);
        add_c(b, j, k, 0, 1), add_c(b, k, j, 0, -1);
      }
      out.push_back(std::move(a));
      out.push_back(std::move(b));
    }
  return out;
}

std::vector<Matrix> so_block(std::size_t N, const Sign& s, std::size_t lo, std::size_t hi) {
  std::vector<Matrix> out;
  for (std::size_t j = lo; j < hi; ++j)
    for (std::size_t k = j + 1; k < hi; ++k) {
      Matrix a(N, N);
      a(j, k) = 1;
      a(k, j) = s[j] == s[k] ? -1 : 1;
      out.push_back(std::move(a));
    }
  return out;
}

std::vector<Matrix> sp_block(std::size_t N, const Sign& s, std::size_t lo, std::size_t hi) {
  std::vector<Matrix> out;
  for (std::size_t j = lo; j < hi; ++j)
    for (std::size_t u = 1; u < 4; ++u) {
      Matrix m(4 * N, 4 * N);
      add_h(m, j, j, kQuat[u]);
      out.push_back(std::move(m));
    }
  for (std::size_t j = lo; j < hi; ++j)
    for (std::size_t k = j + 1; k < hi; ++k)
      for (std::size_t u = 0; u < 4; ++u) {
        Matrix m(4 * N, 4 * N);
        add_h(m, j, k, kQuat[u]);
        auto c = conj(kQuat[u]);
        if (s[j] == s[k])
          for (auto& x : c) x = -x;
        add_h(m, k, j, c);
        out.push_back(std::move(m));
      }
  return out;
}

std::vector<Matrix> sp2n_basis(std::size_t n) {
  std::vector<Matrix> out;
  const std::size_t N = 2 * n;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Matrix m(N, N);
      m(j, k) = 1;
      m(n + k, n + j) = -1;
      out.push_back(std::move(m));
    }
  for (int half = 0; half < 2; ++half)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        Matrix m(N, N);
        const std::size_t r0 = half ? n : 0, c0 = half ? 0 : n;
        m(r0 + j, c0 + k) = 1;
        m(r0 + k, c0 + j) = 1;
        out.push_back(std::move(m));
      }
  return out;
}

// so*(2n): [[Z1, Z2], [−conj Z2, conj Z1]], Z1 ∈ u(n), Z2 skew-symmetric.
std::vector<Matrix> so_n_H_basis(std::size_t n) {
  std::vector<Matrix> out;
  const std::size_t R = 4 * n;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix m(R, R);
    add_c(m, j, j, 0, 1);
    add_c(m, n + j, n + j, 0, -1);
    out.push_back(std::move(m));
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      Matrix a(R, R), b(R, R), c(R, R), d(R, R);
      add_c(a, j, k, 1, 0), add_c(a, k, j, -1, 0), add_c(a, n + j, n + k, 1, 0), add_c(a, n + k, n + j, -1, 0);
      add_c(b, j, k, 0, 1), add_c(b, k, j, 0, 1), add_c(b, n + j, n + k, 0, -1), add_c(b, n + k, n + j, 0, -1);
      add_c(c, j, n + k, 1, 0), add_c(c, k, n + j, -1, 0), add_c(c, n + j, k, -1, 0), add_c(c, n + k, j, 1, 0);
      add_c(d, j, n + k, 0, 1), add_c(d, k, n + j, 0, -1), add_c(d, n + j, k, 0, 1), add_c(d, n + k, j, 0, -1);
      for (auto* x : {&a, &b, &c, &d}) out.push_back(std::move(*x));
    }
  return out;
}

bool is_compact_family(Family f) { return f == Family::su_n || f == Family::so_n || f == Family::sp_n; }

Subspace span_of(const MatrixLieAlgebra& g, const std::vector<Matrix>& ms) {
  std::vector<Vector> v;
  for (const auto& m : ms) v.push_back(g.coordinates(m));
  return Subspace::span(g.dim(), v);
}

Subspace line(std::size_t n, const Vector& v) { return Subspace::span(n, {v}); }

std::string fmt(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

Rational abs_r(const Rational& r) { return sgn(r) < 0 ? Rational(-r) : r; }

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::su_pq: return "su_pq";
    case Family::so_pq: return "so_pq";
    case Family::sp2n_R: return "sp2n_R";
    case Family::sp_pq: return "sp_pq";
    case Family::so_n_H: return "so_n_H";
    case Family::su_n: return "su_n";
    case Family::so_n: return "so_n";
    case Family::sp_n: return "sp_n";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& s) {
  for (Family f : {Family::su_pq, Family::so_pq, Family::sp2n_R, Family::sp_pq, Family::so_n_H, Family::su_n,
                   Family::so_n, Family::sp_n}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

std::string realification_note(Family f) {
  switch (f) {
    case Family::su_pq:
    case Family::su_n:
      return "complex (p+q)x(p+q) matrices, a+ib -> [[a,-b],[b,a]]";
    case Family::so_n_H:
      return "complex 2n x 2n model [[Z1,Z2],[-conj Z2,conj Z1]], a+ib -> [[a,-b],[b,a]]";
    case Family::sp_pq:
    case Family::sp_n:
      return "quaternionic matrices, a+bi+cj+dk -> left multiplication on (1,i,j,k)";
    case Family::so_pq:
    case Family::so_n:
    case Family::sp2n_R:
      return "real matrices";
  }
  return {};
}

std::size_t expected_dimension(const ClassicalAlgebraSpec& s) {
  const std::size_t N = s.p + s.q;
  switch (s.family) {
    case Family::su_pq: return N * N - 1;
    case Family::su_n: return s.p * s.p - 1;
    case Family::so_pq: return N * (N - 1) / 2;
    case Family::so_n: return s.p * (s.p - 1) / 2;
    case Family::sp2n_R: return s.p * (2 * s.p + 1);
    case Family::sp_pq: return N * (2 * N + 1);
    case Family::sp_n: return s.p * (2 * s.p + 1);
    case Family::so_n_H: return s.p * (2 * s.p - 1);
  }
  return 0;
}

BuiltAlgebra build_algebra(const ClassicalAlgebraSpec& spec) {
  const std::size_t p = spec.p, q = spec.q;
  std::vector<Matrix> basis;
  std::size_t amb = 0;
  switch (spec.family) {
    case Family::su_pq:
    case Family::sp_pq:
    case Family::so_pq:
      if (p < 1 || q < 1) throw std::invalid_argument(to_string(spec.family) + " needs p, q >= 1");
      break;
    default:
      if (p < 1) throw std::invalid_argument(to_string(spec.family) + " needs n >= 1");
      if (q != 0) throw std::invalid_argument(to_string(spec.family) + " takes a single parameter n");
  }
  switch (spec.family) {
    case Family::su_pq:
      amb = 2 * (p + q);
      basis = su_block(p + q, signs(p, q), 0, p + q);
      break;
    case Family::su_n:
      if (p < 2) throw std::invalid_argument("su_n needs n >= 2");
      amb = 2 * p;
      basis = su_block(p, signs(p, 0), 0, p);
      break;
    case Family::so_pq:
      if ((p * q) % 2 != 0) {
        throw std::invalid_argument("so(p,q) needs pq even: otherwise rk k < rk g and no compact Cartan exists");
      }
      amb = p + q;
      basis = so_block(p + q, signs(p, q), 0, p + q);
      break;
    case Family::so_n:
      if (p < 2) throw std::invalid_argument("so_n needs n >= 2");
      amb = p;
      basis = so_block(p, signs(p, 0), 0, p);
      break;
    case Family::sp2n_R:
      amb = 2 * p;
      basis = sp2n_basis(p);
      break;
    case Family::sp_pq:
      amb = 4 * (p + q);
      basis = sp_block(p + q, signs(p, q), 0, p + q);
      break;
    case Family::sp_n:
      amb = 4 * p;
      basis = sp_block(p, signs(p, 0), 0, p);
      break;
    case Family::so_n_H:
      amb = 4 * p;
      basis = so_n_H_basis(p);
      break;
  }
  BuiltAlgebra b;
  b.spec = spec;
  b.g = MatrixLieAlgebra::from_basis(amb, std::move(basis));
  const std::size_t d = b.g.dim();
  if (is_compact_family(spec.family)) {
    b.theta = Matrix::identity(d);
  } else {
    std::vector<Vector> cols;
    for (const auto& m : b.g.basis()) cols.push_back(b.g.coordinates(-m.transpose()));
    b.theta = Matrix::from_columns(cols, d);
  }
  b.k = kernel(b.theta - Matrix::identity(d));
  b.p = kernel(b.theta + Matrix::identity(d));
  return b;
}

std::string to_string(const ContactElementSpec& s) {
  std::ostringstream os;
  os << to_string(s.family) << "(" << s.p;
  if (s.family == Family::su_pq || s.family == Family::so_pq || s.family == Family::sp_pq) os << "," << s.q;
  os << ")[" << fmt(s.first);
  if (!s.second.empty()) os << ";" << fmt(s.second);
  os << "]";
  return os.str();
}

std::pair<std::vector<Rational>, std::vector<Rational>> parse_eigen(const std::string& text) {
  std::pair<std::vector<Rational>, std::vector<Rational>> out;
  const auto semi = text.find(';');
  auto parse_list = [](const std::string& s, std::vector<Rational>& v) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto b = item.find_first_not_of(" \t");
      if (b == std::string::npos) continue;
      const auto e = item.find_last_not_of(" \t");
      v.push_back(parse_rational(item.substr(b, e - b + 1)));
    }
  };
  parse_list(text.substr(0, semi), out.first);
  if (semi != std::string::npos) parse_list(text.substr(semi + 1), out.second);
  return out;
}

ContactAnalysis analyze_contact(const ContactElementSpec& s) {
  ContactAnalysis r;
  ClassicalAlgebraSpec as{s.family, s.p, s.q};
  if (s.family == Family::sp2n_R || s.family == Family::so_n_H) as.q = 0;
  r.algebra = build_algebra(as);
  const auto& g = r.algebra.g;
  const std::size_t amb = g.ambient_size();
  auto need = [](bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
  };
  std::ostringstream v;
  auto violate = [&](const std::string& m) { r.violations.push_back(m); };
  Matrix Z(amb, amb);

  switch (s.family) {
    case Family::su_pq: {
      need(s.first.size() == s.p && s.second.size() == s.q, "su_pq eigenvalue data needs p then q values");
      Rational tr;
      for (const auto& x : s.first) tr += x;
      for (const auto& x : s.second) tr += x;
      if (sgn(tr) != 0) violate("sum b_j dim V_j + sum c_a dim U_a = " + to_string(tr) + " != 0");
      for (std::size_t j = 0; j < s.p; ++j)
        for (std::size_t a = 0; a < s.q; ++a)
          if (s.first[j] == s.second[a] && r.violations.size() < 8) {
            violate("b" + std::to_string(j + 1) + " = c" + std::to_string(a + 1) + " = " + to_string(s.first[j]) +
                    " violates b_j != c_alpha");
          }
      for (std::size_t j = 0; j < s.p; ++j) add_c(Z, j, j, 0, s.first[j]);
      for (std::size_t a = 0; a < s.q; ++a) add_c(Z, s.p + a, s.p + a, 0, s.second[a]);
      if (sgn(tr) != 0) {
        r.notes.push_back("Z is not traceless; no contact element built");
        return r;
      }
      break;
    }
    case Family::so_pq: {
      need(2 * s.first.size() <= s.p && 2 * s.second.size() <= s.q,
           "so_pq eigenvalue data lists one value per 2-plane");
      std::size_t v0 = s.p, u0 = s.q;
      for (const auto& b : s.first) v0 -= sgn(b) != 0 ? 2 : 0;
      for (const auto& c : s.second) u0 -= sgn(c) != 0 ? 2 : 0;
      if (v0 > 0 && u0 > 0) {
        violate("V0 (dim " + std::to_string(v0) + ") and U0 (dim " + std::to_string(u0) +
                ") both nonzero: one of them must be trivial");
      }
      for (std::size_t j = 0; j < s.first.size(); ++j)
        for (std::size_t a = 0; a < s.second.size(); ++a) {
          const auto& b = s.first[j];
          const auto& c = s.second[a];
          if (sgn(b) != 0 && sgn(c) != 0 && abs_r(b) == abs_r(c)) {
            violate("b" + std::to_string(j + 1) + " = " + to_string(b) + ", c" + std::to_string(a + 1) + " = " +
                    to_string(c) + " violates |b_j| != |c_alpha|");
          }
        }
      for (std::size_t j = 0; j < s.first.size(); ++j) {
        Z(2 * j, 2 * j + 1) = -s.first[j];
        Z(2 * j + 1, 2 * j) = s.first[j];
      }
      for (std::size_t a = 0; a < s.second.size(); ++a) {
        const std::size_t o = s.p + 2 * a;
        Z(o, o + 1) = -s.second[a];
        Z(o + 1, o) = s.second[a];
      }
      break;
    }
    case Family::sp2n_R:
    case Family::so_n_H: {
      need(s.first.size() == s.p && s.second.empty(), to_string(s.family) + " eigenvalue data needs n values");
      const auto& z = s.first;
      if (s.family == Family::sp2n_R) {
        for (std::size_t j = 0; j < z.size(); ++j)
          if (sgn(z[j]) == 0) violate("z" + std::to_string(j + 1) + " = 0 violates z_j != 0");
      }
      for (std::size_t j = 0; j < z.size(); ++j)
        for (std::size_t k = j + 1; k < z.size(); ++k) {
          if (sgn(z[j] + z[k]) == 0) {
            violate("z" + std::to_string(j + 1) + " + z" + std::to_string(k + 1) + " = 0 violates z_j + z_k != 0");
          }
          if (z[j] == z[k]) {
            r.notes.push_back("repeated value z" + std::to_string(j + 1) + " = z" + std::to_string(k + 1) +
                              ": C_k(Z) is larger than the Cartan subalgebra");
          }
        }
      if (s.family == Family::sp2n_R) {
        for (std::size_t j = 0; j < z.size(); ++j) {
          Z(j, s.p + j) = z[j];
          Z(s.p + j, j) = -z[j];
        }
      } else {
        for (std::size_t j = 0; j < z.size(); ++j) {
          add_c(Z, j, j, 0, z[j]);
          add_c(Z, s.p + j, s.p + j, 0, -z[j]);
        }
      }
      break;
    }
    case Family::sp_pq: {
      need(s.first.size() == s.p && s.second.size() == s.q, "sp_pq eigenvalue data needs p then q values");
      const auto p0 = std::count_if(s.first.begin(), s.first.end(), [](const Rational& x) { return sgn(x) == 0; });
      const auto q0 = std::count_if(s.second.begin(), s.second.end(), [](const Rational& x) { return sgn(x) == 0; });
      if (p0 > 0 && q0 > 0) violate("p0 and q0 both nonzero: at least one must be zero");
      for (std::size_t j = 0; j < s.p; ++j)
        for (std::size_t a = 0; a < s.q; ++a) {
          const auto& b = s.first[j];
          const auto& c = s.second[a];
          if (sgn(b) != 0 && abs_r(b) == abs_r(c)) {
            violate("z" + std::to_string(j + 1) + " = " + to_string(b) + ", z'" + std::to_string(a + 1) + " = " +
                    to_string(c) + " violates |z_j| != |z'_alpha|");
          }
        }
      for (std::size_t j = 0; j < s.p; ++j) add_h(Z, j, j, {0, s.first[j], 0, 0});
      for (std::size_t a = 0; a < s.q; ++a) add_h(Z, s.p + a, s.p + a, {0, s.second[a], 0, 0});
      break;
    }
    default:
      throw std::invalid_argument("contact elements are defined for su_pq, so_pq, sp2n_R, sp_pq, so_n_H");
  }
  if (Z.is_zero()) {
    violate("Z = 0");
    return r;
  }
  r.Z = g.coordinates(Z);
  r.cp = subspace_intersection(centralizer(g, *r.Z), r.algebra.p);
  if (!r.cp.is_zero()) r.cp_witness = r.cp.basis()[0];
  return r;
}

ReductiveDecomposition contact_decomposition(const BuiltAlgebra& a, const Vector& Z) {
  const auto& g = a.g;
  const Subspace h = centralizer(g, Z);
  if (!a.k.contains(h)) throw LieError("C_g(Z) is not contained in k: C_p(Z) != 0");
  const Subspace l = orthocomplement_in(line(g.dim(), Z), h, g.killing());
  const Subspace mp = killing_orthocomplement(g, h);
  if (!mp.contains(bracket_span(g, h, mp))) throw LieError("[h, m'] is not contained in m'");
  auto dec = make_decomposition(g, l, subspace_sum(line(g.dim(), Z), mp), a.theta);
  dec.m_l = line(g.dim(), Z);
  dec.m_prime = mp;
  dec.split = true;
  return dec;
}

ReductiveDecomposition contact_decomposition(const ContactElementSpec& spec) {
  const auto a = analyze_contact(spec);
  if (!a.violations.empty()) throw LieError(a.violations.front());
  if (a.cp_witness) {
    std::ostringstream os;
    os << "C_p(Z) != 0 (dim " << a.cp.dim() << "), witness coordinates (";
    for (std::size_t i = 0; i < a.cp_witness->size(); ++i) os << (i ? "," : "") << to_string((*a.cp_witness)[i]);
    os << ")";
    throw LieError(os.str());
  }
  return contact_decomposition(a.algebra, *a.Z);
}

ReductiveDecomposition semisimple_sum_decomposition(const std::vector<ContactElementSpec>& cases) {
  if (cases.empty()) throw std::invalid_argument("no cases");
  if (cases.size() == 1) return contact_decomposition(cases.front());
  std::vector<ContactAnalysis> parts;
  std::vector<ReductiveDecomposition> decs;
  for (const auto& c : cases) {
    parts.push_back(analyze_contact(c));
    if (!parts.back().Z) throw LieError("all Z_i must be nonzero");
    decs.push_back(contact_decomposition(c));
  }
  std::size_t amb = 0, dim = 0;
  for (const auto& p : parts) amb += p.algebra.g.ambient_size(), dim += p.algebra.g.dim();
  std::vector<Matrix> basis;
  Matrix theta(dim, dim);
  std::vector<std::size_t> off;
  std::size_t ao = 0, co = 0;
  for (const auto& p : parts) {
    off.push_back(co);
    for (const auto& b : p.algebra.g.basis()) {
      Matrix m(amb, amb);
      m.set_block(ao, ao, b);
      basis.push_back(std::move(m));
    }
    theta.set_block(co, co, p.algebra.theta);
    ao += p.algebra.g.ambient_size();
    co += p.algebra.g.dim();
  }
  auto g = MatrixLieAlgebra::from_basis(amb, std::move(basis));
  auto embed = [&](std::size_t i, const Vector& v) {
    Vector out = zero_vector(dim);
    std::copy(v.begin(), v.end(), out.begin() + off[i]);
    return out;
  };
  Vector Z = zero_vector(dim);
  std::vector<Vector> lv, mpv, zs;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Vector zi = embed(i, *parts[i].Z);
    zs.push_back(zi);
    Z = Z + zi;
    for (const auto& x : decs[i].l.span.basis()) lv.push_back(embed(i, x));
    for (const auto& x : decs[i].m_prime.basis()) mpv.push_back(embed(i, x));
  }
  const Subspace zspan = Subspace::span(dim, zs);
  const Subspace lhat = orthocomplement_in(line(dim, Z), zspan, g.killing());
  for (const auto& x : lhat.basis()) lv.push_back(x);
  const Subspace l = Subspace::span(dim, lv), mp = Subspace::span(dim, mpv);
  auto dec = make_decomposition(g, l, subspace_sum(line(dim, Z), mp), theta);
  dec.m_l = line(dim, Z);
  dec.m_prime = mp;
  dec.split = true;
  return dec;
}

std::vector<std::string> wolf_names() {
  return {"so_p4", "so_p4_nc", "sp_p1", "sp_p1_nc", "su_p11_para", "su_p2", "su_p2_nc"};
}

WolfCase wolf_decomposition(const std::string& name, std::size_t p) {
  if (p < 1) throw std::invalid_argument("p >= 1 required");
  WolfCase w;
  w.name = name;
  w.p = p;
  w.expected = AdmissibleType::Ib_compact;
  std::vector<Matrix> lm, mlm;
  if (name == "su_p2" || name == "su_p2_nc" || name == "su_p11_para") {
    const std::size_t N = p + 2;
    Sign s;
    if (name == "su_p2") {
      w.algebra = build_algebra({Family::su_n, N, 0});
      s = signs(N, 0);
      w.formula = "su(p+2) = (RI + su(p)) + (su(2) + C^p x C^2)";
    } else if (name == "su_p2_nc") {
      w.algebra = build_algebra({Family::su_pq, p, 2});
      s = signs(p, 2);
      w.formula = "su(p,2) = (RI + su(p)) + (su(2) + C^p x C^2)";
    } else {
      w.algebra = build_algebra({Family::su_pq, p + 1, 1});
      s = signs(p + 1, 1);
      w.expected = AdmissibleType::Ib_split;
      w.formula = "su(p+1,1) = (RI + su(p)) + (su(1,1) + C^p x C^{1,1})";
    }
    Matrix I(2 * N, 2 * N);
    for (std::size_t j = 0; j < p; ++j) add_c(I, j, j, 0, 2);
    for (std::size_t j = p; j < N; ++j) add_c(I, j, j, 0, -Rational(static_cast<long>(p)));
    lm = su_block(N, s, 0, p);
    lm.push_back(I);
    mlm = su_block(N, s, p, N);
    w.expected_mprime_dim = 4 * p;
  } else if (name == "so_p4" || name == "so_p4_nc") {
    const std::size_t N = p + 4;
    Sign s;
    if (name == "so_p4") {
      w.algebra = build_algebra({Family::so_n, N, 0});
      s = signs(N, 0);
      w.formula = "so(p+4) = (so(p) + so(3)) + (so(3) + R^p x R^4)";
    } else {
      w.algebra = build_algebra({Family::so_pq, p, 4});
      s = signs(p, 4);
      w.formula = "so(p,4) = (so(p) + so(3)) + (so(3) + R^p x R^4)";
    }
    lm = so_block(N, s, 0, p);
    auto e = [&](std::size_t a, std::size_t b) {
      Matrix m(N, N);
      m(p + a, p + b) = 1;
      m(p + b, p + a) = -1;
      return m;
    };
    // self-dual and anti-self-dual halves of so(4)
    lm.push_back(e(0, 1) + e(2, 3));
    lm.push_back(e(0, 2) - e(1, 3));
    lm.push_back(e(0, 3) + e(1, 2));
    mlm = {e(0, 1) - e(2, 3), e(0, 2) + e(1, 3), e(0, 3) - e(1, 2)};
    w.expected_mprime_dim = 4 * p;
  } else if (name == "sp_p1" || name == "sp_p1_nc") {
    const std::size_t N = p + 1;
    Sign s;
    if (name == "sp_p1") {
      w.algebra = build_algebra({Family::sp_n, N, 0});
      s = signs(N, 0);
      w.formula = "sp(p+1) = sp(p) + (sp(1) + H^p)";
    } else {
      w.algebra = build_algebra({Family::sp_pq, p, 1});
      s = signs(p, 1);
      w.formula = "sp(p,1) = sp(p) + (sp(1) + H^{p,1})";
    }
    lm = sp_block(N, s, 0, p);
    mlm = sp_block(N, s, p, N);
    w.expected_mprime_dim = 4 * p;
  } else {
    throw std::invalid_argument("unknown Wolf row '" + name + "'");
  }
  const auto& g = w.algebra.g;
  w.expected_ml = span_of(g, mlm);
  w.dec = reductive_complement(g, span_of(g, lm), w.algebra.theta);
  return w;
}

std::vector<ExceptionalStub> exceptional_stubs() {
  return {
      {"e6", "e6 = su(6) + (su(2) + L^3 C^6 x C^2)", 78, 35, 3, 40},
      {"e7", "e7 = so(12) + (su(2) + D12 x C^2)", 133, 66, 3, 64},
      {"e8", "e8 = e7 + (su(2) + 56 x C^2)", 248, 133, 3, 112},
      {"f4", "f4 = sp(3) + (su(2) + L^3_0 H^6 x C^2)", 52, 21, 3, 28},
      {"g2", "g2 = su(2) + (su(2) + S^3 C^2 x C^2)", 14, 3, 3, 8},
      {"e6(2)", "e6(2) = su(6) + (su(2) + L^3 C^6 x C^2)", 78, 35, 3, 40},
      {"e7(-5)", "e7(-5) = so(12) + (su(2) + D12 x C^2)", 133, 66, 3, 64},
      {"e8(-24)", "e8(-24) = e7 + (su(2) + 56 x C^2)", 248, 133, 3, 112},
      {"f4(4)", "f4(4) = sp(3) + (su(2) + L^3_0 H^6 x C^2)", 52, 21, 3, 28},
      {"g2(2)", "g2(2) = su(2) + (su(2) + S^3 C^2 x C^2)", 14, 3, 3, 8},
  };
}

CatalogCase wolf_case(const std::string& name, std::size_t p) {
  return {name + "(p=" + std::to_string(p) + ")", [name, p] {
            const auto w = wolf_decomposition(name, p);
            CaseData d;
            d.dec = w.dec;
            d.theta = w.algebra.theta;
            d.expected_ml = w.expected_ml;
            d.expected_ml_dim = 3;
            d.expected_mprime_dim = w.expected_mprime_dim;
            d.expected = w.expected;
            d.formula = w.formula;
            return d;
          }};
}

CatalogCase contact_case(const ContactElementSpec& spec) {
  return {to_string(spec), [spec] {
            CaseData d;
            const auto a = analyze_contact(spec);
            d.violations = a.violations;
            d.cp_witness = a.cp_witness;
            d.expected = AdmissibleType::Ia;
            d.expected_ml_dim = 1;
            d.formula = "g = l + RZ + m', h = C_g(Z) = l + RZ";
            if (a.violations.empty() && !a.cp_witness && a.Z) {
              d.dec = contact_decomposition(a.algebra, *a.Z);
              d.theta = a.algebra.theta;
              d.expected_ml = line(a.algebra.g.dim(), *a.Z);
              d.expected_mprime_dim = d.dec->m_prime.dim();
            }
            return d;
          }};
}

CatalogCase sum_case(const std::vector<ContactElementSpec>& specs) {
  std::string name = "sum";
  for (const auto& s : specs) name += "+" + to_string(s);
  return {name, [specs] {
            CaseData d;
            d.expected = AdmissibleType::Ia;
            d.expected_ml_dim = 1;
            d.formula = "g = (sum l_i + l^) + (RZ + sum m'_i), Z = sum Z_i";
            for (const auto& s : specs) {
              const auto a = analyze_contact(s);
              d.violations.insert(d.violations.end(), a.violations.begin(), a.violations.end());
              if (a.cp_witness && !d.cp_witness) d.cp_witness = a.cp_witness;
            }
            if (d.violations.empty() && !d.cp_witness) {
              d.dec = semisimple_sum_decomposition(specs);
              d.theta = d.dec->theta;
              d.expected_ml = d.dec->m_l;
              d.expected_mprime_dim = d.dec->m_prime.dim();
            }
            return d;
          }};
}

namespace {

CheckResult chk(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? Tri::Yes : Tri::No, std::move(detail)};
}

std::string sig_str(const Signature& s) {
  return "(" + std::to_string(s.n_plus) + "," + std::to_string(s.n_minus) + "," + std::to_string(s.n_zero) + ")";
}

void run_suite(const CaseData& d, CaseReport& r) {
  const auto& dec = *d.dec;
  const auto& g = dec.g;
  r.dim_g = g.dim();
  r.dim_l = dec.l.span.dim();
  r.dim_ml = dec.m_l.dim();
  r.dim_mprime = dec.m_prime.dim();

  r.checks.push_back(chk("bracket closure", satisfies_jacobi(g)));
  r.checks.push_back(chk("reductive complement [l,m] in m", dec.m.contains(bracket_span(g, dec.l.span, dec.m))));
  r.checks.push_back(chk("effective", true, "l acts faithfully on m"));
  const bool compact = dec.l.span.is_zero() || signature(g.killing_on(dec.l.span)).is_negative_definite();
  r.checks.push_back(chk("l compact", compact));
  r.checks.push_back(chk("dimension bookkeeping", r.dim_l + r.dim_ml + r.dim_mprime == r.dim_g && dec.split,
                         std::to_string(r.dim_l) + "+" + std::to_string(r.dim_ml) + "+" +
                             std::to_string(r.dim_mprime) + "=" + std::to_string(r.dim_g)));
  r.checks.push_back(chk("[l,m_l] = 0", bracket_span(g, dec.l.span, dec.m_l).is_zero()));
  r.checks.push_back(chk("[l,m'] in m'", dec.m_prime.contains(bracket_span(g, dec.l.span, dec.m_prime))));
  if (d.expected_ml) r.checks.push_back(chk("m_l matches construction", dec.m_l == *d.expected_ml));
  r.checks.push_back(chk("dim m_l", r.dim_ml == d.expected_ml_dim));
  if (d.expected_mprime_dim) r.checks.push_back(chk("dim m'", r.dim_mprime == d.expected_mprime_dim));
  if (!compact) return;

  const auto adm = classify_admissible(dec);
  r.admissibility = adm;
  r.checks.push_back(chk("admissible", adm.admissible));
  r.checks.push_back(chk("subtype", adm.subtype == d.expected,
                         to_string(adm.subtype) + " (expected " + to_string(d.expected) + ")"));
  if (d.expected == AdmissibleType::Ib_compact) {
    r.checks.push_back(chk("m_l Killing restriction negative definite", adm.ml_restricted.is_negative_definite(),
                           sig_str(adm.ml_restricted)));
  }
  if (d.expected == AdmissibleType::Ib_split) {
    r.checks.push_back(chk("m_l Killing signature (2,1,0)", adm.ml_killing == Signature{2, 1, 0},
                           sig_str(adm.ml_killing)));
  }
  for (const auto& c : adm.checks) {
    if (c.name != "admissible") r.checks.push_back(c);
  }
  r.checks.push_back({"minimality", adm.minimality, adm.failing_condition});

  if (!d.theta || !adm.Z_witness) return;
  try {
    const auto gm = invariant_euclidean_metric(dec, *d.theta);
    r.checks.push_back(chk("g_m positive definite", gm.signature.is_positive_definite()));
    const Vector& Z = *adm.Z_witness;
    const Rational t = lambda_threshold(dec, gm, Z);
    r.threshold = t;
    const std::size_t dm = dec.m.dim();
    bool inv = true;
    const std::pair<Rational, Signature> samples[] = {
        {t / 2, Signature{dm, 0, 0}}, {t, Signature{dm - 1, 0, 1}}, {2 * t, Signature{dm - 1, 1, 0}}};
    for (const auto& [lam, expect] : samples) {
      const auto f = lorentz_metric(dec, gm, Z, lam);
      inv = inv && f.invariance_certificate;
      r.metric_samples.push_back({lam, f.signature});
      const char* label = lam < t ? "metric Euclidean below threshold"
                                  : (lam == t ? "metric degenerate at threshold" : "metric Lorentzian above threshold");
      r.checks.push_back(chk(label, f.signature == expect, "lambda=" + to_string(lam) + " " + sig_str(f.signature)));
    }
    r.checks.push_back(chk("metric ad_l-invariant", inv));
  } catch (const LieError& e) {
    r.checks.push_back(chk("metric synthesis", false, e.what()));
  }
}

}  // namespace

CaseReport verify_case(const CatalogCase& c) {
  CaseReport r;
  r.name = c.name;
  try {
    const CaseData d = c.build();
    r.formula = d.formula;
    if (!d.violations.empty() || d.cp_witness) {
      std::string detail;
      for (const auto& v : d.violations) detail += (detail.empty() ? "" : "; ") + v;
      if (d.cp_witness) detail += std::string(detail.empty() ? "" : "; ") + "C_p(Z) != 0";
      r.checks.push_back(chk("constraints", false, detail));
    } else {
      r.checks.push_back(chk("constraints", true));
      if (d.dec) {
        run_suite(d, r);
      } else {
        r.checks.push_back(chk("construction", false, "no decomposition produced"));
      }
    }
  } catch (const std::exception& e) {
    r.checks.push_back(chk("construction", false, e.what()));
  }
  r.overall = Tri::Yes;
  for (const auto& ch : r.checks) {
    if (ch.status == Tri::No) r.overall = Tri::No;
    if (ch.status == Tri::Unknown && r.overall == Tri::Yes) r.overall = Tri::Unknown;
  }
  return r;
}

std::vector<CaseReport> verify_cases(const std::vector<CatalogCase>& cases, unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<CaseReport> out(cases.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) out[i] = verify_case(cases[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < std::min<std::size_t>(workers, cases.size()); ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

std::vector<CatalogCase> standard_cases() {
  std::vector<CatalogCase> cs;
  for (const char* n : {"su_p2", "so_p4", "sp_p1"})
    for (std::size_t p = 1; p <= 3; ++p) cs.push_back(wolf_case(n, p));
  for (const char* n : {"su_p2_nc", "sp_p1_nc", "su_p11_para", "so_p4_nc"})
    for (std::size_t p = 1; p <= 2; ++p) cs.push_back(wolf_case(n, p));
  const ContactElementSpec su11{Family::su_pq, 1, 1, {1}, {-1}};
  const ContactElementSpec sp4{Family::sp2n_R, 2, 0, {1, 2}, {}};
  cs.push_back(contact_case(su11));
  cs.push_back(contact_case({Family::su_pq, 2, 1, {1, -1}, {0}}));
  cs.push_back(contact_case({Family::su_pq, 2, 2, {1, 2}, {-1, -2}}));
  cs.push_back(contact_case(sp4));
  cs.push_back(contact_case({Family::so_pq, 2, 2, {1}, {2}}));
  cs.push_back(contact_case({Family::sp_pq, 1, 1, {1}, {2}}));
  cs.push_back(contact_case({Family::so_n_H, 2, 0, {1, 2}, {}}));
  cs.push_back(sum_case({su11, su11}));
  cs.push_back(sum_case({su11, sp4}));
  return cs;
}

}  // namespace lorhom
