#include "lorhom/homogeneous.hpp"

#include <sstream>

#include "lorhom/linalg.hpp"
#include "lorhom/lorentz.hpp"

namespace lorhom {

namespace {

Subspace line(std::size_t n, const Vector& v) { return Subspace::span(n, {v}); }

// Matrix of ad_x on m, in m's basis coordinates.
Matrix ad_on(const MatrixLieAlgebra& g, const Vector& x, const Subspace& m) {
  Matrix a(m.dim(), m.dim());
  for (std::size_t j = 0; j < m.dim(); ++j) {
    const Vector br = g.bracket(x, m.basis()[j]);
    if (!m.contains(br)) throw LieError("[l, m] is not contained in m");
    const Vector c = m.coordinates(br);
    for (std::size_t i = 0; i < m.dim(); ++i) a(i, j) = c[i];
  }
  return a;
}

// Vectors v in `within` with A v = 0 for every A.
Subspace joint_kernel_in(const std::vector<Matrix>& ops, const Subspace& within) {
  if (ops.empty()) return within;
  const Subspace k = kernel(stack(ops));
  return subspace_intersection(k, within);
}

std::string vec_str(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
  os << ')';
  return os.str();
}

CheckResult check(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? Tri::Yes : Tri::No, std::move(detail)};
}

// g = l ⊕ m coordinate splitting.
struct Splitter {
  std::size_t dl = 0;
  Matrix inv;
  Splitter(const Subspace& l, const Subspace& m) : dl(l.dim()) {
    std::vector<Vector> cols = l.basis();
    cols.insert(cols.end(), m.basis().begin(), m.basis().end());
    auto i = inverse(Matrix::from_columns(cols, l.ambient_dim()));
    if (!i) throw LieError("l and m do not span g");
    inv = std::move(*i);
  }
  // (l coordinates, m coordinates)
  std::pair<Vector, Vector> operator()(const Vector& x) const {
    const Vector c = inv.apply(x);
    return {Vector(c.begin(), c.begin() + dl), Vector(c.begin() + dl, c.end())};
  }
};

Matrix act(const std::vector<Matrix>& ops, const Vector& x, std::size_t n) {
  Matrix r(n, n);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (sgn(x[i]) != 0) r += x[i] * ops[i];
  }
  return r;
}

// Coefficient c with a = c·b, if any.
std::optional<Rational> proportional(const Matrix& a, const Matrix& b) {
  std::optional<Rational> c;
  for (std::size_t i = 0; i < b.entries().size(); ++i) {
    if (sgn(b.entries()[i]) != 0) {
      c = a.entries()[i] / b.entries()[i];
      break;
    }
  }
  if (!c) return a.is_zero() ? std::optional<Rational>(Rational(0)) : std::nullopt;
  if (a != *c * b) return std::nullopt;
  return c;
}

MatrixLieAlgebra isotropy_image(const ReductiveDecomposition& dec) {
  return MatrixLieAlgebra::from_basis(dec.m.dim(), isotropy_action(dec));
}

}  // namespace

std::string to_string(AdmissibleType t) {
  switch (t) {
    case AdmissibleType::Ia: return "Ia";
    case AdmissibleType::Ib_compact: return "Ib_compact";
    case AdmissibleType::Ib_split: return "Ib_split";
    case AdmissibleType::Ic: return "Ic";
    case AdmissibleType::None: return "None";
  }
  return "?";
}

std::string to_string(LorentzModel m) {
  switch (m) {
    case LorentzModel::Minkowski: return "Minkowski";
    case LorentzModel::deSitter: return "deSitter";
    case LorentzModel::antiDeSitter: return "antiDeSitter";
    case LorentzModel::SL2R_cover: return "SL2R_cover";
    case LorentzModel::Symmetric3D: return "Symmetric3D";
    case LorentzModel::Inconsistent: return "Inconsistent";
  }
  return "?";
}

ReductiveDecomposition make_decomposition(const MatrixLieAlgebra& g, const Subspace& l, const Subspace& m,
                                          std::optional<Matrix> theta) {
  if (l.ambient_dim() != g.dim() || m.ambient_dim() != g.dim()) throw LieError("subspace ambient mismatch");
  ReductiveDecomposition d;
  d.g = g;
  d.l = SubalgebraHandle::make(g, l);
  if (l.dim() + m.dim() != g.dim() || !subspace_sum(l, m).is_full()) {
    throw LieError("m is not a complement of l");
  }
  d.m = m;
  // ad_on throws when [l, m] leaves m
  std::vector<Vector> flat;
  for (const auto& x : l.basis()) flat.push_back(Vector(ad_on(g, x, m).entries()));
  if (Subspace::span(m.dim() * m.dim(), flat).dim() != l.dim()) {
    throw LieError("isotropy representation of l on m is not faithful");
  }
  d.m_l = subspace_intersection(centralizer(g, l), m);
  d.m_prime = bracket_span(g, l, m);
  d.split = d.m_l.dim() + d.m_prime.dim() == m.dim() && subspace_sum(d.m_l, d.m_prime) == m;
  d.theta = std::move(theta);
  return d;
}

ReductiveDecomposition reductive_complement(const MatrixLieAlgebra& g, const Subspace& l,
                                            std::optional<Matrix> theta) {
  if (!l.is_zero() && !signature(g.killing_on(l)).is_nondegenerate()) {
    throw LieError("B degenerate on l: no canonical complement");
  }
  return make_decomposition(g, l, killing_orthocomplement(g, l), std::move(theta));
}

ReductiveDecomposition flat_model(const MatrixLieAlgebra& h) {
  const std::size_t n = h.ambient_size();
  std::vector<Matrix> basis;
  for (const auto& b : h.basis()) {
    Matrix a(n + 1, n + 1);
    a.set_block(0, 0, b);
    basis.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < n; ++i) basis.push_back(Matrix::unit(n + 1, n + 1, i, n));
  auto g = MatrixLieAlgebra::from_basis(n + 1, std::move(basis));
  std::vector<Vector> lv, mv;
  for (std::size_t i = 0; i < h.dim(); ++i) lv.push_back(unit_vector(g.dim(), i));
  for (std::size_t i = 0; i < n; ++i) mv.push_back(unit_vector(g.dim(), h.dim() + i));
  return make_decomposition(g, Subspace::span(g.dim(), lv), Subspace::span(g.dim(), mv));
}

std::vector<Matrix> isotropy_action(const ReductiveDecomposition& dec) {
  std::vector<Matrix> out;
  for (const auto& x : dec.l.span.basis()) out.push_back(ad_on(dec.g, x, dec.m));
  return out;
}

bool is_admissible(const ReductiveDecomposition& dec) {
  const Subspace& l = dec.l.span;
  if (!l.is_zero() && !signature(dec.g.killing_on(l)).is_negative_definite()) {
    throw LieError("compactness criterion failed on l: B is not negative definite there");
  }
  return !dec.m_l.is_zero();
}

AdmissibilityReport classify_admissible(const ReductiveDecomposition& dec) {
  AdmissibilityReport r;
  const auto& g = dec.g;
  const Subspace& l = dec.l.span;
  const Subspace& ml = dec.m_l;
  r.admissible = is_admissible(dec);
  r.checks.push_back(check("admissible", r.admissible, "m_l dimension " + std::to_string(ml.dim())));
  if (!r.admissible) {
    r.minimality = Tri::No;
    r.failing_condition = "m_l = 0";
    return r;
  }

  const Subspace cml = subspace_intersection(centralizer(g, l), dec.m);
  r.checks.push_back(check("m_l_centralizes_l", cml.contains(ml)));
  const bool sub = is_subalgebra(g, ml);
  r.checks.push_back(check("m_l_subalgebra", sub));
  r.ml_restricted = signature(g.killing_on(ml));
  if (sub) r.ml_killing = signature(restrict_to(g, ml).killing());

  const Subspace zg = center(g);
  const Subspace l_plus_ml = subspace_sum(l, ml);

  auto centralizer_is_l_plus = [&](const Vector& z) {
    return centralizer(g, z) == subspace_sum(l, line(g.dim(), z));
  };

  std::vector<CheckResult> mins;
  if (ml.dim() == 1) {
    const Vector& z = ml.basis()[0];
    const bool compact = sgn(g.killing(z, z)) < 0;
    const bool central = zg.contains(z);
    if (compact && !central) {
      r.subtype = AdmissibleType::Ia;
      r.Z_witness = z;
      mins.push_back(check("C_g(Z) = l + RZ", centralizer_is_l_plus(z)));
      mins.push_back(check("N_g(m_l) = l + m_l", normalizer(g, ml) == l_plus_ml));
    } else {
      r.subtype = AdmissibleType::Ic;
    }
  } else if (sub && ml.dim() == 3 && r.ml_killing.is_nondegenerate()) {
    if (r.ml_killing == Signature{0, 3, 0}) {
      r.subtype = AdmissibleType::Ib_compact;
    } else if (r.ml_killing == Signature{2, 1, 0}) {
      r.subtype = AdmissibleType::Ib_split;
    }
    if (r.subtype != AdmissibleType::None) {
      mins.push_back(check("C_g(m_l) = l", centralizer(g, ml) == l));
      const auto neg = negative_direction(g.killing_on(ml));
      if (neg) {
        const Vector z = ml.combine(*neg);
        r.Z_witness = z;
        mins.push_back(check("C_g(Z) = l + RZ", centralizer_is_l_plus(z), "Z = " + vec_str(z)));
      } else {
        mins.push_back({"C_g(Z) = l + RZ", Tri::No, "m_l has no compact line"});
      }
      mins.push_back(check("N_g(m_l) = l + m_l", normalizer(g, ml) == l_plus_ml));
    }
  } else if (sub && is_abelian(restrict_to(g, ml))) {
    if (negative_direction(g.killing_on(ml))) {
      r.checks.push_back(check("no compact non-central line", false,
                               "abelian m_l of dimension " + std::to_string(ml.dim()) + " has a compact line"));
    } else {
      r.subtype = AdmissibleType::Ic;
    }
  }

  if (r.subtype == AdmissibleType::Ic) {
    r.checks.push_back(check("no compact non-central line", true));
    r.minimality = Tri::Unknown;
    r.failing_condition = "minimality of abelian m_l is not certified";
  } else if (r.subtype == AdmissibleType::None) {
    r.minimality = Tri::Unknown;
    r.failing_condition = "m_l matches none of the three shapes";
  } else {
    r.minimality = Tri::Yes;
    for (const auto& c : mins) {
      if (c.status != Tri::Yes && r.minimality == Tri::Yes) {
        r.minimality = Tri::No;
        r.failing_condition = c.name;
      }
    }
  }
  r.checks.insert(r.checks.end(), mins.begin(), mins.end());
  return r;
}

bool is_l_invariant(const ReductiveDecomposition& dec, const Matrix& gram) {
  for (const auto& a : isotropy_action(dec)) {
    if (!(a.transpose() * gram + gram * a).is_zero()) return false;
  }
  return true;
}

InvariantForm invariant_euclidean_metric(const ReductiveDecomposition& dec, const Matrix& theta) {
  const auto& g = dec.g;
  const std::size_t n = g.dim();
  if (theta.rows() != n || theta.cols() != n) throw LieError("theta has the wrong size");
  if (theta * theta != Matrix::identity(n)) throw LieError("theta is not an involution");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = theta.apply(g.structure_constant(i, j));
      const Vector rhs = g.bracket(theta.column(i), theta.column(j));
      if (lhs != rhs) throw LieError("theta is not an automorphism");
    }
  }
  for (const auto& x : dec.l.span.basis()) {
    if (theta.apply(x) != x) throw LieError("l not contained in theta-fixed subalgebra");
  }
  const Matrix btheta = -(g.killing() * theta);
  if (!btheta.is_symmetric() || !signature(btheta).is_positive_definite()) {
    throw LieError("B_theta not positive definite: theta is not a Cartan involution");
  }
  InvariantForm f;
  f.domain = dec.m;
  f.gram = restrict_form(btheta, dec.m.basis());
  f.signature = signature(f.gram);
  f.invariance_certificate = is_l_invariant(dec, f.gram);
  return f;
}

namespace {
Vector metric_dual(const ReductiveDecomposition& dec, const InvariantForm& g_m, const Vector& Z) {
  if (is_zero(Z)) throw LieError("Z = 0");
  if (!dec.m.contains(Z)) throw LieError("Z is not in m");
  if (!centralizer(dec.g, dec.l.span).contains(Z)) throw LieError("Z does not commute with l");
  return g_m.gram.apply(dec.m.coordinates(Z));
}
}  // namespace

Rational lambda_threshold(const ReductiveDecomposition& dec, const InvariantForm& g_m, const Vector& Z) {
  const Vector w = metric_dual(dec, g_m, Z);
  const Rational n = dot(dec.m.coordinates(Z), w);
  if (sgn(n) == 0) throw LieError("g_m(Z, Z) = 0");
  return 1 / n;
}

InvariantForm lorentz_metric(const ReductiveDecomposition& dec, const InvariantForm& g_m, const Vector& Z,
                             const Rational& lambda) {
  const Vector w = metric_dual(dec, g_m, Z);
  const std::size_t k = w.size();
  Matrix outer(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (sgn(w[i]) == 0) continue;
    for (std::size_t j = 0; j < k; ++j) outer(i, j) = w[i] * w[j];
  }
  InvariantForm f;
  f.domain = dec.m;
  f.gram = g_m.gram - lambda * outer;
  f.signature = signature(f.gram);
  f.invariance_certificate = is_l_invariant(dec, g_m.gram) && is_l_invariant(dec, outer);
  return f;
}

TypeIIAnalysis analyze_typeII(const ReductiveDecomposition& dec, const Matrix& gram_m,
                              const DecompositionOptions& opts) {
  TypeIIAnalysis r;
  const auto& g = dec.g;
  const Subspace& lsp = dec.l.span;
  const std::size_t dm = dec.m.dim();
  const auto ops = isotropy_action(dec);
  const auto cls = classify(gram_m, isotropy_image(dec), opts);
  if (cls.verdict != SubalgebraType::TypeII) {
    r.checks.push_back(check("isotropy is Type II", false, "classified as " + to_string(cls.verdict)));
    return r;
  }
  r.checks.push_back(check("isotropy is Type II", true));
  const Subspace Wm = cls.W;
  const Subspace Um = orthocomplement(Wm, gram_m);

  std::vector<Matrix> kops;
  for (const auto& x : cls.k_part.basis()) kops.push_back(act(ops, x, dm));
  const Subspace fixed = joint_kernel_in(kops, Um);
  if (!fixed.is_zero()) r.fixed_witness = fixed.basis()[0];
  r.checks.push_back(check("k fixes no vector of W^perp", fixed.is_zero(),
                           fixed.is_zero() ? "" : "fixed vector " + vec_str(fixed.basis()[0])));

  // so(W) inside l: elements acting trivially on U.
  std::vector<Vector> rows;
  for (const auto& u : Um.basis()) {
    for (std::size_t c = 0; c < dm; ++c) {
      Vector row(ops.size());
      for (std::size_t i = 0; i < ops.size(); ++i) row[i] = ops[i].apply(u)[c];
      rows.push_back(std::move(row));
    }
  }
  const Subspace soW_l =
      rows.empty() ? Subspace::full(ops.size()) : kernel(Matrix::from_rows(rows, ops.size()));

  auto to_g_l = [&](const Subspace& s) {
    std::vector<Vector> v;
    for (const auto& x : s.basis()) v.push_back(lsp.combine(x));
    return Subspace::span(g.dim(), v);
  };
  auto to_g_m = [&](const Subspace& s) {
    std::vector<Vector> v;
    for (const auto& x : s.basis()) v.push_back(dec.m.combine(x));
    return Subspace::span(g.dim(), v);
  };
  const Subspace soW = to_g_l(soW_l), kg = to_g_l(cls.k_part), W = to_g_m(Wm), U = to_g_m(Um);
  r.W = W;
  r.U = U;

  const Subspace WW = bracket_span(g, W, W), WU = bracket_span(g, W, U), kU = bracket_span(g, kg, U);
  r.checks.push_back(check("[W,W] in so(W)+W", subspace_sum(soW, W).contains(WW)));
  r.checks.push_back(check("[W,U] = 0", WU.is_zero()));
  r.checks.push_back(check("[k,U] in U", U.contains(kU)));

  const Subspace I1 = subspace_sum(soW, W), I2 = subspace_sum(kg, U);
  const bool ideals = is_subalgebra(g, I1) && is_subalgebra(g, I2) && bracket_span(g, I1, I2).is_zero() &&
                      I1.dim() + I2.dim() == g.dim() && subspace_sum(I1, I2).is_full();
  r.checks.push_back(check("g = (so(W)+W) + (k+U) as ideals", ideals));
  if (ideals) {
    r.lorentz_ideal = SubalgebraHandle::make(g, I1);
    r.riemannian_ideal = SubalgebraHandle::make(g, I2);
  }

  // Bracket constants on W.
  const Splitter split(lsp, dec.m);
  const auto& wb = Wm.basis();
  const std::size_t m = wb.size();
  std::optional<Rational> c1;
  bool c1_ok = true;
  std::vector<std::vector<Vector>> wpart(m, std::vector<Vector>(m, zero_vector(dm)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto [x, y] = split(g.bracket(dec.m.combine(wb[i]), dec.m.combine(wb[j])));
      wpart[i][j] = y;
      wpart[j][i] = Rational(-1) * y;
      const auto c = proportional(act(ops, x, dm), bivector(wb[i], wb[j], gram_m));
      if (!c || (c1 && *c1 != *c)) {
        c1_ok = false;
      } else {
        c1 = c;
      }
    }
  }
  r.checks.push_back(check("so(W) part of [W,W] is c·w1^w2", c1_ok));
  bool c2_ok = true;
  if (m > 3) {
    bool zero = true;
    for (const auto& row : wpart)
      for (const auto& y : row) zero = zero && is_zero(y);
    c2_ok = zero;
    r.checks.push_back(check("[W,W] has no W part", zero));
  } else if (m == 3) {
    auto T = [&](std::size_t a, std::size_t b, std::size_t c) { return dot(gram_m.apply(wpart[a][b]), wb[c]); };
    r.c2 = T(0, 1, 2);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t c = 0; c < 3; ++c) {
          Rational expect = 0;
          if (a != b && b != c && a != c) {
            const int parity = ((a < b) + (b < c) + (a < c)) % 2 == 1 ? 1 : -1;
            expect = parity * r.c2;
          }
          if (T(a, b, c) != expect) c2_ok = false;
        }
    r.checks.push_back(check("W part of [W,W] is c2·phi(w1^w2)", c2_ok));
  }

  // Positive c is de Sitter. With (u∧v)x = g(v,x)u − g(u,x)v the bracket
  // coefficient of so(1,m) is −1.
  r.c = c1 ? Rational(-*c1) : Rational(0);
  bool all = true;
  for (const auto& c : r.checks) all = all && c.status == Tri::Yes;
  if (!all || !c1) {
    r.model = LorentzModel::Inconsistent;
    r.consistent = false;
    return r;
  }
  if (m == 3 && sgn(r.c2) != 0) {
    r.model = sgn(r.c) == 0 ? LorentzModel::SL2R_cover : LorentzModel::Symmetric3D;
  } else if (sgn(r.c) > 0) {
    r.model = LorentzModel::deSitter;
  } else if (sgn(r.c) < 0) {
    r.model = LorentzModel::antiDeSitter;
  } else {
    r.model = LorentzModel::Minkowski;
  }
  if (sgn(r.c) != 0 && sgn(r.c2) == 0) {
    // so(1,m) has m noncompact directions, so(2,m−1) has 2(m−1).
    const Signature s = signature(restrict_to(g, I1).killing());
    const std::size_t expect = r.model == LorentzModel::deSitter ? m : 2 * (m - 1);
    r.checks.push_back(check("Killing signature of so(W)+W", s.n_plus == expect && s.is_nondegenerate(),
                             std::to_string(s.n_plus) + " positive directions"));
  }
  r.consistent = true;
  for (const auto& c : r.checks) r.consistent = r.consistent && c.status == Tri::Yes;
  if (!r.consistent) r.model = LorentzModel::Inconsistent;
  return r;
}

TypeIIIAnalysis analyze_typeIII(const ReductiveDecomposition& dec, const Matrix& gram_m,
                                const DecompositionOptions& opts) {
  TypeIIIAnalysis r;
  const auto& g = dec.g;
  const Subspace& lsp = dec.l.span;
  const std::size_t dm = dec.m.dim();
  const auto ops = isotropy_action(dec);
  const auto cls = classify(gram_m, isotropy_image(dec), opts);
  if (cls.verdict != SubalgebraType::TypeIII) {
    r.checks.push_back(check("isotropy is Type III", false, "classified as " + to_string(cls.verdict)));
    r.verdict = "not Type III";
    return r;
  }
  r.checks.push_back(check("isotropy is Type III", true));
  const auto& [pm, qm] = *cls.isotropic_pair;
  const Subspace Em = orthocomplement(Subspace::span(dm, {pm, qm}), gram_m);
  std::vector<Matrix> kops;
  for (const auto& x : cls.k_part.basis()) kops.push_back(act(ops, x, dm));
  const Subspace fixed = joint_kernel_in(kops, Em);
  if (!fixed.is_zero()) r.fixed_witness = fixed.basis()[0];
  r.checks.push_back(check("k fixes no vector of E", fixed.is_zero(),
                           fixed.is_zero() ? "" : "fixed vector " + vec_str(fixed.basis()[0])));

  const Vector& dl = *cls.d_witness;
  r.C0 = act(ops, dl, dm) - bivector(pm, qm, gram_m);

  const Vector p = dec.m.combine(pm), q = dec.m.combine(qm);
  std::vector<Vector> ev;
  for (const auto& e : Em.basis()) ev.push_back(dec.m.combine(e));
  const Subspace E = Subspace::span(g.dim(), ev);
  const Splitter split(lsp, dec.m);

  const Vector pq = g.bracket(p, q);
  const auto [x, y] = split(pq);
  r.checks.push_back(check("[p,q] in l", is_zero(y)));
  // x = λ d + κ with κ in k.
  std::vector<Vector> cols{dl};
  cols.insert(cols.end(), cls.k_part.basis().begin(), cls.k_part.basis().end());
  const auto sol = solve(Matrix::from_columns(cols, lsp.dim()), x);
  r.checks.push_back(check("[p,q] in Rd + k", sol.has_value()));
  if (sol) r.lambda = (*sol)[0];

  bool pE = true, qE = true, dich = true, EE = true;
  const Subspace kg = [&] {
    std::vector<Vector> v;
    for (const auto& b : cls.k_part.basis()) v.push_back(lsp.combine(b));
    return Subspace::span(g.dim(), v);
  }();
  for (const auto& e : ev) {
    pE = pE && is_zero(g.bracket(p, e));
    qE = qE && is_zero(g.bracket(q, e));
    dich = dich && is_zero(g.bracket(pq, e));
  }
  for (std::size_t i = 0; i < ev.size(); ++i)
    for (std::size_t j = i + 1; j < ev.size(); ++j) {
      const Vector b = g.bracket(ev[i], ev[j]);
      EE = EE && subspace_sum(kg, E).contains(b);
    }
  r.checks.push_back(check("[p,E] = 0", pE));
  r.checks.push_back(check("[q,E] = 0", qE));
  r.checks.push_back(check("[E,E] in k + E", EE));
  r.dichotomy = dich;
  r.checks.push_back(check("lambda = 0 or C0 = 0", dich,
                           "lambda = " + to_string(r.lambda) + (r.C0.is_zero() ? ", C0 = 0" : ", C0 != 0")));
  r.consistent = true;
  for (const auto& c : r.checks) r.consistent = r.consistent && c.status == Tri::Yes;
  if (!r.consistent) {
    r.verdict = dich ? "inconsistent bracket relations" : "structural inconsistency: lambda and C0 both nonzero";
  } else {
    r.verdict = sgn(r.lambda) == 0 ? "flat 2-dimensional Lorentz factor times a Riemannian factor"
                                   : "curved 2-dimensional Lorentz factor times a Riemannian factor";
  }
  return r;
}

E0Result check_E0_trivial(const ReductiveDecomposition& dec, const Matrix& gram_m, const DecompositionOptions& opts) {
  const std::size_t dm = dec.m.dim();
  const auto ops = isotropy_action(dec);
  const auto cls = classify(gram_m, isotropy_image(dec), opts);
  Subspace E;
  if (cls.verdict == SubalgebraType::TypeII) {
    E = orthocomplement(cls.W, gram_m);
  } else if (cls.verdict == SubalgebraType::TypeIII) {
    const auto& [p, q] = *cls.isotropic_pair;
    E = orthocomplement(Subspace::span(dm, {p, q}), gram_m);
  } else {
    throw LieError("E0 check needs Type II or Type III isotropy, got " + to_string(cls.verdict));
  }
  std::vector<Matrix> kops;
  for (const auto& x : cls.k_part.basis()) kops.push_back(act(ops, x, dm));
  const Subspace fixed = joint_kernel_in(kops, E);
  E0Result r;
  r.trivial = fixed.is_zero();
  if (!r.trivial) r.witness = fixed.basis()[0];
  return r;
}

}  // namespace lorhom
