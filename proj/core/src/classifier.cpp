#include "lorhom/classifier.hpp"

#include <sstream>

namespace lorhom {

std::string to_string(SubalgebraType t) {
  switch (t) {
    case SubalgebraType::TypeI: return "TypeI";
    case SubalgebraType::TypeII: return "TypeII";
    case SubalgebraType::TypeIII: return "TypeIII";
    case SubalgebraType::NotTotallyReducible: return "NotTotallyReducible";
    case SubalgebraType::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

namespace {

void require_lorentzian_skew(const Matrix& gram, const MatrixLieAlgebra& h) {
  if (!gram.is_symmetric() || !signature(gram).is_lorentzian()) {
    throw LieError("metric is not Lorentzian");
  }
  if (h.is_abstract() || h.ambient_size() != gram.rows()) {
    throw LieError("algebra does not act on the given space");
  }
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (!is_skew(h.basis(i), gram)) {
      std::ostringstream os;
      os << "not skew: basis element " << i << " does not preserve the metric";
      throw LieError(os.str());
    }
  }
}

// Linear map h → gl(W) in W coordinates, one column per basis element of h.
Matrix restriction_map(const MatrixLieAlgebra& h, const Subspace& w) {
  const std::size_t k = w.dim();
  Matrix out(k * k, h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Vector c = w.coordinates(h.basis(i).apply(w.basis()[j]));
      for (std::size_t r = 0; r < k; ++r) out(r * k + j, i) = c[r];
    }
  }
  return out;
}

Rational trace_form(const Matrix& a, const Matrix& b) { return (a * b).trace(); }

}  // namespace

SubalgebraClassification classify(const Matrix& gram, const MatrixLieAlgebra& h, const DecompositionOptions& opts) {
  require_lorentzian_skew(gram, h);
  const std::size_t dim_v = gram.rows();
  SubalgebraClassification out;
  out.W = Subspace(dim_v);
  out.k_part = Subspace(h.dim());

  const auto rep = Representation::defining(h);
  const auto dec = irreducible_decomposition(rep, opts);
  if (dec.status == Decomposition::Status::NotCompletelyReducible) {
    out.verdict = SubalgebraType::NotTotallyReducible;
    out.witness = dec.witness;
    out.diagnostics.push_back(dec.diagnostic);
    return out;
  }
  if (dec.status == Decomposition::Status::Unresolved) {
    out.verdict = SubalgebraType::Indeterminate;
    out.components = dec.components;
    out.diagnostics.push_back(dec.diagnostic);
    return out;
  }
  out.components = dec.components;

  // Type I: a fixed timelike vector
  const Subspace fixed = fixed_space(rep);
  if (!fixed.is_zero()) {
    const Matrix gf = restrict_form(gram, fixed.basis());
    if (auto neg = negative_direction(gf)) {
      out.verdict = SubalgebraType::TypeI;
      const Vector t = fixed.combine(*neg);
      out.timelike = normalized_leading(t);
      out.W = orthocomplement(Subspace::span(dim_v, {t}), gram);
      out.k_part = h.full();
      return out;
    }
  }

  // Type II: a Lorentzian component of dimension ≥ 3 carrying all of so(W)
  for (const auto& c : dec.components) {
    if (c.dim() < 3) continue;
    const auto sig = signature(restrict_form(gram, c.basis()));
    if (!sig.is_lorentzian()) continue;
    const Matrix r = restriction_map(h, c);
    const std::size_t image = rank(r);
    const std::size_t full = c.dim() * (c.dim() - 1) / 2;
    if (image != full) {
      std::ostringstream os;
      os << "Lorentzian component of dimension " << c.dim() << " with restricted image of dimension " << image
         << " < " << full;
      out.diagnostics.push_back(os.str());
      continue;
    }
    out.verdict = SubalgebraType::TypeII;
    out.W = c;
    out.k_part = kernel(r);
    return out;
  }

  // Type III: two isotropic invariant lines pairing nontrivially
  std::vector<const Subspace*> iso;
  for (const auto& c : dec.components) {
    if (c.dim() == 1 && sgn(dot(c.basis()[0], gram.apply(c.basis()[0]))) == 0) iso.push_back(&c);
  }
  for (std::size_t a = 0; a < iso.size(); ++a) {
    for (std::size_t b = a + 1; b < iso.size(); ++b) {
      const Vector& va = iso[a]->basis()[0];
      const Vector& vb = iso[b]->basis()[0];
      if (sgn(dot(va, gram.apply(vb))) == 0) continue;
      // ℓ1 is the line with the earlier pivot, matching p in the Witt order
      const bool a_first = iso[a]->pivots()[0] < iso[b]->pivots()[0];
      const Vector p1 = a_first ? va : vb;
      const Vector q1raw = a_first ? vb : va;
      const Vector q1 = (1 / dot(p1, gram.apply(q1raw))) * q1raw;
      // χ(X): eigenvalue of X on ℓ1
      Vector chi(h.dim());
      const std::size_t piv = a_first ? iso[a]->pivots()[0] : iso[b]->pivots()[0];
      for (std::size_t i = 0; i < h.dim(); ++i) chi[i] = h.basis(i).apply(p1)[piv] / p1[piv];
      if (is_zero(chi)) continue;
      Matrix chi_row(1, h.dim());
      for (std::size_t i = 0; i < h.dim(); ++i) chi_row(0, i) = chi[i];
      const Subspace k = kernel(chi_row);
      // d: χ(d) = 1 and trace(d K) = 0 for K in k
      Matrix sys(1 + k.dim(), h.dim());
      Vector rhs(1 + k.dim());
      for (std::size_t i = 0; i < h.dim(); ++i) sys(0, i) = chi[i];
      rhs[0] = 1;
      for (std::size_t r = 0; r < k.dim(); ++r) {
        const Matrix kr = h.element(k.basis()[r]);
        for (std::size_t i = 0; i < h.dim(); ++i) sys(r + 1, i) = trace_form(h.basis(i), kr);
      }
      const auto d = solve(sys, rhs);
      if (!d) {
        out.diagnostics.push_back("trace form degenerate on the compact part");
        continue;
      }
      out.verdict = SubalgebraType::TypeIII;
      out.W = Subspace::span(dim_v, {p1, q1});
      out.k_part = k;
      out.d_witness = *d;
      out.C0 = h.element(*d) - bivector(p1, q1, gram);
      out.isotropic_pair = std::make_pair(p1, q1);
      return out;
    }
  }

  out.verdict = SubalgebraType::Indeterminate;
  out.diagnostics.push_back("no timelike fixed vector, full Lorentzian block or paired isotropic lines");
  return out;
}

SubalgebraClassification classify(const MinkowskiSpace& space, const MatrixLieAlgebra& h,
                                  const DecompositionOptions& opts) {
  return classify(space.gram, h, opts);
}

Tri is_totally_reducible(const Matrix& gram, const MatrixLieAlgebra& h, const DecompositionOptions& opts) {
  require_lorentzian_skew(gram, h);
  return is_completely_reducible(Representation::defining(h), opts);
}

Tri is_totally_reducible(const MinkowskiSpace& space, const MatrixLieAlgebra& h, const DecompositionOptions& opts) {
  return is_totally_reducible(space.gram, h, opts);
}

}  // namespace lorhom
