#include <random>

#include "doctest.h"
#include "lorhom/catalog.hpp"
#include "oracles.hpp"

using namespace lorhom;

namespace {

struct DimRow {
  ClassicalAlgebraSpec spec;
  std::size_t dim_g, dim_k;
};

// Dimensions written out by hand from the matrix descriptions.
std::vector<DimRow> dim_table() {
  return {
      {{Family::su_pq, 1, 1}, 3, 1},   {{Family::su_pq, 2, 1}, 8, 4},   {{Family::su_pq, 2, 2}, 15, 7},
      {{Family::so_pq, 2, 2}, 6, 2},   {{Family::so_pq, 2, 3}, 10, 4},  {{Family::so_pq, 4, 2}, 15, 7},
      {{Family::sp2n_R, 1}, 3, 1},     {{Family::sp2n_R, 2}, 10, 4},    {{Family::sp2n_R, 3}, 21, 9},
      {{Family::sp_pq, 1, 1}, 10, 6},  {{Family::sp_pq, 2, 1}, 21, 13}, {{Family::so_n_H, 2}, 6, 4},
      {{Family::so_n_H, 3}, 15, 9},    {{Family::su_n, 2}, 3, 3},       {{Family::su_n, 3}, 8, 8},
      {{Family::so_n, 4}, 6, 6},       {{Family::sp_n, 1}, 3, 3},       {{Family::sp_n, 2}, 10, 10},
  };
}

// dim C_p(Z) by brute force on matrices: dim p minus the rank of the [Z, p_i].
std::size_t cp_dim_bruteforce(const ContactAnalysis& a) {
  const auto& g = a.algebra.g;
  if (!a.Z) return a.algebra.p.dim();
  const Matrix Z = g.element(*a.Z);
  const auto& pb = a.algebra.p.basis();
  const std::size_t flat = g.ambient_size() * g.ambient_size();
  Matrix cols(flat, pb.size());
  for (std::size_t j = 0; j < pb.size(); ++j) {
    const Matrix x = g.element(pb[j]);
    const Matrix br = Z * x - x * Z;
    for (std::size_t i = 0; i < flat; ++i) cols(i, j) = br.entries()[i];
  }
  return pb.size() - oracle::rank_naive(cols);
}

std::vector<Rational> rv(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("family dimensions and Cartan involutions") {
  for (const auto& row : dim_table()) {
    CAPTURE(to_string(row.spec.family));
    CAPTURE(row.spec.p);
    CAPTURE(row.spec.q);
    const auto a = build_algebra(row.spec);
    CHECK(a.g.dim() == row.dim_g);
    CHECK(expected_dimension(row.spec) == row.dim_g);
    CHECK(a.k.dim() == row.dim_k);
    CHECK(a.k.dim() + a.p.dim() == a.g.dim());

    const std::size_t n = a.g.dim();
    CHECK(a.theta * a.theta == Matrix::identity(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Vector ti = a.theta.column(i), tj = a.theta.column(j);
        CHECK(a.theta.apply(a.g.structure_constant(i, j)) == a.g.bracket(ti, tj));
      }
    // B_theta(x, y) = -B(x, theta y)
    const Matrix btheta = Rational(-1) * a.g.killing() * a.theta;
    CHECK(signature(btheta).is_positive_definite());
    CHECK(is_semisimple(a.g));
    if (n <= 10) CHECK(oracle::killing_bruteforce(a.g.basis()) == a.g.killing());
  }
}

TEST_CASE("compact families are compact") {
  for (const ClassicalAlgebraSpec s : {ClassicalAlgebraSpec{Family::su_n, 3}, ClassicalAlgebraSpec{Family::so_n, 5},
                                       ClassicalAlgebraSpec{Family::sp_n, 2}}) {
    const auto a = build_algebra(s);
    CHECK(signature(a.g.killing()).is_negative_definite());
    CHECK(a.p.is_zero());
  }
}

TEST_CASE("bad parameters") {
  CHECK_THROWS_AS(build_algebra({Family::so_pq, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(build_algebra({Family::su_pq, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(build_algebra({Family::sp_n, 0}), std::invalid_argument);
  CHECK_FALSE(parse_family("e8"));
  CHECK(parse_family("sp2n_R") == Family::sp2n_R);
  const auto [a, b] = parse_eigen("1,2;-1");
  CHECK(a == rv({1, 2}));
  CHECK(b == rv({-1}));
  CHECK_THROWS(parse_eigen("1,x"));
}

TEST_CASE("contact constraints match C_p(Z)") {
  // Hand-stated conditions for each family; C_p(Z) counted independently.
  auto sweep = [](Family f, std::size_t p, std::size_t q, std::size_t n1, std::size_t n2, auto valid) {
    std::vector<int> vals{-2, -1, 0, 1, 2};
    std::vector<std::size_t> idx(n1 + n2, 0);
    std::size_t checked = 0;
    while (true) {
      std::vector<Rational> a, b;
      for (std::size_t i = 0; i < n1; ++i) a.emplace_back(vals[idx[i]]);
      for (std::size_t i = 0; i < n2; ++i) b.emplace_back(vals[idx[n1 + i]]);
      const ContactElementSpec spec{f, p, q, a, b};
      CAPTURE(to_string(spec));
      const auto an = analyze_contact(spec);
      const bool ok = valid(a, b);
      CHECK(an.violations.empty() == ok);
      if (an.Z) {
        const std::size_t cp = cp_dim_bruteforce(an);
        CHECK(cp == an.cp.dim());
        CHECK(an.cp_witness.has_value() == (cp > 0));
        if (ok) CHECK(cp == 0);
      }
      ++checked;
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == vals.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
    return checked;
  };
  auto nonzero = [](const std::vector<Rational>& v) {
    for (const auto& x : v)
      if (sgn(x) != 0) return true;
    return false;
  };

  SUBCASE("su(2,1)") {
    sweep(Family::su_pq, 2, 1, 2, 1, [&](const auto& b, const auto& c) {
      if (b[0] + b[1] + c[0] != 0 || !nonzero(b)) return false;
      return b[0] != c[0] && b[1] != c[0];
    });
  }
  SUBCASE("sp(4,R)") {
    sweep(Family::sp2n_R, 2, 0, 2, 0, [](const auto& z, const auto&) {
      return sgn(z[0]) != 0 && sgn(z[1]) != 0 && sgn(z[0] + z[1]) != 0;
    });
  }
  SUBCASE("so(2,H)") {
    sweep(Family::so_n_H, 2, 0, 2, 0, [&](const auto& z, const auto&) { return nonzero(z) && sgn(z[0] + z[1]) != 0; });
  }
  SUBCASE("so(2,2)") {
    sweep(Family::so_pq, 2, 2, 1, 1, [&](const auto& b, const auto& c) {
      if (!nonzero(b) && !nonzero(c)) return false;
      if (sgn(b[0]) == 0 && sgn(c[0]) == 0) return false;
      return abs(b[0]) != abs(c[0]) || sgn(b[0]) == 0;
    });
  }
  SUBCASE("sp(1,1)") {
    sweep(Family::sp_pq, 1, 1, 1, 1, [&](const auto& b, const auto& c) {
      if (sgn(b[0]) == 0 && sgn(c[0]) == 0) return false;
      return abs(b[0]) != abs(c[0]);
    });
  }
}

TEST_CASE("repeated eigenvalues in sp(4,R)") {
  // Repeated z gives no C_p(Z); opposite z does.
  const auto same = analyze_contact({Family::sp2n_R, 2, 0, rv({1, 1}), {}});
  CHECK(same.violations.empty());
  CHECK_FALSE(same.notes.empty());
  CHECK(same.cp.is_zero());
  const auto opposite = analyze_contact({Family::sp2n_R, 2, 0, rv({1, -1}), {}});
  CHECK_FALSE(opposite.violations.empty());
  CHECK(opposite.cp.dim() == 2);
  CHECK_THROWS_AS(contact_decomposition(ContactElementSpec{Family::sp2n_R, 2, 0, rv({1, -1}), {}}), LieError);
}

TEST_CASE("contact decompositions") {
  for (const ContactElementSpec s : {
           ContactElementSpec{Family::su_pq, 2, 1, rv({1, -1}), rv({0})},
           ContactElementSpec{Family::sp2n_R, 2, 0, rv({1, 2}), {}},
           ContactElementSpec{Family::so_pq, 2, 2, rv({1}), rv({2})},
           ContactElementSpec{Family::sp_pq, 1, 1, rv({1}), rv({2})},
       }) {
    CAPTURE(to_string(s));
    const auto dec = contact_decomposition(s);
    CHECK(dec.m_l.dim() == 1);
    CHECK(dec.split);
    const auto rep = classify_admissible(dec);
    CHECK(rep.subtype == AdmissibleType::Ia);
    CHECK(rep.minimality == Tri::Yes);
    REQUIRE(dec.theta);
    const auto gm = invariant_euclidean_metric(dec, *dec.theta);
    CHECK(gm.invariance_certificate);
    CHECK(gm.signature.is_positive_definite());
  }
}

TEST_CASE("semisimple sums") {
  const ContactElementSpec a{Family::su_pq, 1, 1, rv({1}), rv({-1})};
  const ContactElementSpec b{Family::sp2n_R, 2, 0, rv({1, 2}), {}};
  const auto dec = semisimple_sum_decomposition({a, b});
  CHECK(dec.g.dim() == 13);
  CHECK(dec.m_l.dim() == 1);
  CHECK(classify_admissible(dec).subtype == AdmissibleType::Ia);
  CHECK_THROWS_AS(semisimple_sum_decomposition({}), std::invalid_argument);
}

TEST_CASE("wolf rows") {
  struct Row {
    std::string name;
    std::size_t p, dim_g, dim_l, dim_ml, dim_mprime;
    AdmissibleType type;
  };
  const std::vector<Row> rows{
      {"su_p2", 1, 8, 1, 3, 4, AdmissibleType::Ib_compact},
      {"su_p2", 2, 15, 4, 3, 8, AdmissibleType::Ib_compact},
      {"so_p4", 1, 10, 3, 3, 4, AdmissibleType::Ib_compact},
      {"so_p4", 2, 15, 4, 3, 8, AdmissibleType::Ib_compact},
      {"sp_p1", 1, 10, 3, 3, 4, AdmissibleType::Ib_compact},
      {"sp_p1", 2, 21, 10, 3, 8, AdmissibleType::Ib_compact},
      {"su_p2_nc", 1, 8, 1, 3, 4, AdmissibleType::Ib_compact},
      {"sp_p1_nc", 1, 10, 3, 3, 4, AdmissibleType::Ib_compact},
      {"so_p4_nc", 2, 15, 4, 3, 8, AdmissibleType::Ib_compact},
      {"su_p11_para", 1, 8, 1, 3, 4, AdmissibleType::Ib_split},
      {"su_p11_para", 2, 15, 4, 3, 8, AdmissibleType::Ib_split},
  };
  for (const auto& r : rows) {
    CAPTURE(r.name);
    CAPTURE(r.p);
    const auto w = wolf_decomposition(r.name, r.p);
    CHECK(w.dec.g.dim() == r.dim_g);
    CHECK(w.dec.l.span.dim() == r.dim_l);
    CHECK(w.dec.m_l.dim() == r.dim_ml);
    CHECK(w.dec.m_prime.dim() == r.dim_mprime);
    CHECK(w.dec.m_l == w.expected_ml);
    const auto rep = classify_admissible(w.dec);
    CHECK(rep.subtype == r.type);
    CHECK(rep.minimality == Tri::Yes);
  }
  CHECK_THROWS_AS(wolf_decomposition("nope", 1), std::invalid_argument);
  CHECK_THROWS_AS(wolf_decomposition("su_p2", 0), std::invalid_argument);
}

TEST_CASE("exceptional rows are consistent dimension data") {
  for (const auto& s : exceptional_stubs()) {
    CAPTURE(s.name);
    CHECK(s.dim_l + s.dim_ml + s.dim_mprime == s.dim_g);
  }
}

TEST_CASE("verification suite") {
  SUBCASE("a good case passes every check") {
    const auto r = verify_case(wolf_case("su_p2", 1));
    CHECK(r.overall == Tri::Yes);
    REQUIRE(r.threshold);
    REQUIRE(r.metric_samples.size() == 3);
    CHECK(r.metric_samples[0].signature.is_positive_definite());
    CHECK(r.metric_samples[1].signature.n_zero == 1);
    CHECK(r.metric_samples[2].signature.is_lorentzian());
  }
  SUBCASE("a corrupted case fails only its constraint check") {
    const auto r = verify_case(contact_case({Family::sp2n_R, 2, 0, rv({1, -1}), {}}));
    CHECK(r.overall == Tri::No);
    std::size_t failing = 0;
    for (const auto& c : r.checks) {
      if (c.status == Tri::No) {
        ++failing;
        CHECK(c.name == "constraints");
      }
    }
    CHECK(failing == 1);
  }
  SUBCASE("construction errors are reported, not thrown") {
    const auto r = verify_case({"broken", [] { return CaseData{}; }});
    CHECK(r.overall == Tri::No);
  }
}

TEST_CASE("standard cases, parallel and deterministic") {
  const auto cases = standard_cases();
  REQUIRE(cases.size() >= 20);
  const auto one = verify_cases(cases, 1);
  const auto four = verify_cases(cases, 4);
  REQUIRE(one.size() == cases.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CAPTURE(one[i].name);
    CHECK(one[i].overall == Tri::Yes);
    CHECK(one[i].name == four[i].name);
    CHECK(one[i].checks.size() == four[i].checks.size());
    CHECK(std::is_sorted(one.begin(), one.end(), [](const auto& a, const auto& b) { return a.name < b.name; }));
  }
}

TEST_CASE("metric signature flips exactly at the threshold") {
  std::mt19937_64 rng(7);
  for (const auto& c : standard_cases()) {
    const auto d = c.build();
    if (!d.dec || !d.theta) continue;
    const auto rep = classify_admissible(*d.dec);
    if (!rep.Z_witness) continue;
    const auto gm = invariant_euclidean_metric(*d.dec, *d.theta);
    const Rational t = lambda_threshold(*d.dec, gm, *rep.Z_witness);
    for (int trial = 0; trial < 3; ++trial) {
      const Rational lam = t * Rational(static_cast<long>(rng() % 40), 10);
      const auto s = lorentz_metric(*d.dec, gm, *rep.Z_witness, lam).signature;
      CAPTURE(c.name);
      if (lam < t) CHECK(s.is_positive_definite());
      if (lam == t) CHECK(s.n_zero == 1);
      if (lam > t) CHECK(s.is_lorentzian());
    }
  }
}
