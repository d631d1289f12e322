#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lorhom/homogeneous.hpp"

namespace lorhom {

/// Classical real forms. Complex entries a+ib are realified as 2×2 blocks
/// [[a, −b], [b, a]]; quaternion entries a+bi+cj+dk as the 4×4 matrix of left
/// multiplication in the basis (1, i, j, k).
enum class Family { su_pq, so_pq, sp2n_R, sp_pq, so_n_H, su_n, so_n, sp_n };
std::string to_string(Family f);
std::optional<Family> parse_family(const std::string& s);

struct ClassicalAlgebraSpec {
  Family family = Family::su_n;
  /// (p, q) for the indefinite families; p = n for the others.
  std::size_t p = 0, q = 0;
};
std::string realification_note(Family f);
/// Real dimension by the family formula.
std::size_t expected_dimension(const ClassicalAlgebraSpec& spec);

struct BuiltAlgebra {
  ClassicalAlgebraSpec spec;
  MatrixLieAlgebra g;
  /// Coordinate matrix of the Cartan involution (identity for compact families).
  Matrix theta;
  Subspace k, p;
};

/// Throws std::invalid_argument for out-of-range parameters.
BuiltAlgebra build_algebra(const ClassicalAlgebraSpec& spec);

/// Eigenvalue data of a contact element in the standard compact Cartan
/// subalgebra. `first`/`second` list the diagonal entries on the positive and
/// negative blocks:
///   su_pq : p then q values, Z = diag(i·first, i·second);
///   so_pq : rotation speeds of 2-planes in ℝ^p and ℝ^q, the rest is V0/U0;
///   sp2n_R: n values z, Z = [[0, diag z], [−diag z, 0]];
///   sp_pq : p then q values, Z = diag(i·first, i·second) over ℍ;
///   so_n_H: n values z, Z = diag(i z, −i z) in the complex 2n model.
struct ContactElementSpec {
  Family family = Family::su_pq;
  std::size_t p = 0, q = 0;
  std::vector<Rational> first, second;
};
std::string to_string(const ContactElementSpec& s);
/// "1,2;-1" → first = (1, 2), second = (−1).
std::pair<std::vector<Rational>, std::vector<Rational>> parse_eigen(const std::string& text);

struct ContactAnalysis {
  BuiltAlgebra algebra;
  std::optional<Vector> Z;
  /// Violated constraints; empty means the data is valid.
  std::vector<std::string> violations;
  /// Observations that are not violations.
  std::vector<std::string> notes;
  Subspace cp;  // C_p(Z)
  std::optional<Vector> cp_witness;
};

/// Builds the algebra and Z and evaluates every constraint. Never throws for
/// invalid eigenvalue data; throws std::invalid_argument for shape errors.
ContactAnalysis analyze_contact(const ContactElementSpec& spec);

/// g = l + ℝZ + m′ with h = C_g(Z) = l ⊕ ℝZ, l ⊥_B Z, m′ = h^⊥.
/// m_l is set to ℝZ. Throws LieError naming the violated constraint or the
/// C_p(Z) witness.
ReductiveDecomposition contact_decomposition(const ContactElementSpec& spec);
ReductiveDecomposition contact_decomposition(const BuiltAlgebra& a, const Vector& Z);

/// Direct sum of contact cases with Z = Σ Z_i; l gains the orthocomplement
/// of Z in span{Z_i}. A single case delegates to contact_decomposition.
ReductiveDecomposition semisimple_sum_decomposition(const std::vector<ContactElementSpec>& cases);

/// Type Ib rows: su_p2, so_p4, sp_p1 (compact), su_p2_nc, so_p4_nc, sp_p1_nc,
/// su_p11_para.
struct WolfCase {
  std::string name;
  std::size_t p = 0;
  BuiltAlgebra algebra;
  ReductiveDecomposition dec;
  Subspace expected_ml;
  std::size_t expected_mprime_dim = 0;
  AdmissibleType expected = AdmissibleType::None;
  std::string formula;
};
std::vector<std::string> wolf_names();
WolfCase wolf_decomposition(const std::string& name, std::size_t p);

struct ExceptionalStub {
  std::string name;
  std::string formula;
  std::size_t dim_g, dim_l, dim_ml, dim_mprime;
};
/// Exceptional rows carried as dimension data only; not verifiable here.
std::vector<ExceptionalStub> exceptional_stubs();

/// What a case builder hands to the verifier.
struct CaseData {
  std::optional<ReductiveDecomposition> dec;
  std::optional<Matrix> theta;
  std::optional<Subspace> expected_ml;
  std::size_t expected_ml_dim = 0;
  std::size_t expected_mprime_dim = 0;
  AdmissibleType expected = AdmissibleType::None;
  std::vector<std::string> violations;
  std::optional<Vector> cp_witness;
  std::string formula;
};

struct CatalogCase {
  std::string name;
  std::function<CaseData()> build;
};

CatalogCase wolf_case(const std::string& name, std::size_t p);
CatalogCase contact_case(const ContactElementSpec& spec);
CatalogCase sum_case(const std::vector<ContactElementSpec>& specs);

struct MetricSample {
  Rational lambda;
  Signature signature;
};

struct CaseReport {
  std::string name;
  std::string formula;
  std::vector<CheckResult> checks;
  Tri overall = Tri::Unknown;
  std::optional<AdmissibilityReport> admissibility;
  std::size_t dim_g = 0, dim_l = 0, dim_ml = 0, dim_mprime = 0;
  std::optional<Rational> threshold;
  std::vector<MetricSample> metric_samples;
};

/// Runs the full suite on one case. Failures are report entries, not exceptions.
CaseReport verify_case(const CatalogCase& c);
/// Runs cases on a worker pool; reports come back sorted by name.
std::vector<CaseReport> verify_cases(const std::vector<CatalogCase>& cases, unsigned workers = 0);

/// The registered regression set.
std::vector<CatalogCase> standard_cases();

}  // namespace lorhom
