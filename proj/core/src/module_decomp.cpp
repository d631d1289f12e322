#include "lorhom/module_decomp.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

namespace lorhom {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(Decomposition::Status s) {
  switch (s) {
    case Decomposition::Status::Complete: return "complete";
    case Decomposition::Status::NotCompletelyReducible: return "not_completely_reducible";
    case Decomposition::Status::Unresolved: return "unresolved";
  }
  return "unresolved";
}

std::uint64_t DecompositionOptions::default_seed() {
  if (const char* s = std::getenv("LORHOM_SEED")) {
    char* end = nullptr;
    const auto v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0') return v;
  }
  return 20240601ULL;
}

Representation Representation::from_action(MatrixLieAlgebra algebra, std::vector<Matrix> action) {
  if (action.size() != algebra.dim()) throw LieError("one action matrix per basis element required");
  const std::size_t d = action.empty() ? 0 : action.front().rows();
  for (const auto& a : action) {
    if (a.rows() != d || a.cols() != d) throw LieError("action matrices must be square of equal size");
  }
  Representation r;
  r.algebra_ = std::move(algebra);
  r.dim_ = d;
  r.action_ = std::move(action);
  for (std::size_t i = 0; i < r.action_.size(); ++i) {
    for (std::size_t j = i + 1; j < r.action_.size(); ++j) {
      if (commutator(r.action_[i], r.action_[j]) != r.act(r.algebra_.structure_constant(i, j))) {
        std::ostringstream os;
        os << "action does not preserve the bracket of b" << i << " and b" << j;
        throw LieError(os.str());
      }
    }
  }
  return r;
}

Representation Representation::defining(const MatrixLieAlgebra& g) {
  Representation r;
  r.algebra_ = g;
  r.dim_ = g.ambient_size();
  r.action_ = g.basis();
  return r;
}

Representation Representation::adjoint(const MatrixLieAlgebra& g) {
  Representation r;
  r.algebra_ = g;
  r.dim_ = g.dim();
  for (std::size_t i = 0; i < g.dim(); ++i) r.action_.push_back(g.ad_basis(i));
  return r;
}

Representation Representation::isotropy(const MatrixLieAlgebra& g, const Subspace& l, const Subspace& m) {
  Representation r;
  r.algebra_ = restrict_to(g, l);
  r.dim_ = m.dim();
  for (const auto& x : l.basis()) {
    Matrix a(m.dim(), m.dim());
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const Vector br = g.bracket(x, m.basis()[j]);
      if (!m.contains(br)) throw LieError("[l, m] is not contained in m");
      const Vector c = m.coordinates(br);
      for (std::size_t i = 0; i < m.dim(); ++i) a(i, j) = c[i];
    }
    r.action_.push_back(std::move(a));
  }
  return r;
}

Matrix Representation::act(const Vector& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < action_.size(); ++i) {
    if (sgn(x[i]) != 0) m += x[i] * action_[i];
  }
  return m;
}

namespace {

using Ops = std::vector<Matrix>;

// Operators restricted to an invariant subspace, in its basis coordinates.
Ops restrict_ops(const Ops& ops, const Subspace& s) {
  Ops out;
  for (const auto& a : ops) {
    Matrix r(s.dim(), s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j) {
      const Vector c = s.coordinates(a.apply(s.basis()[j]));
      for (std::size_t i = 0; i < s.dim(); ++i) r(i, j) = c[i];
    }
    out.push_back(std::move(r));
  }
  return out;
}

Subspace spin(const Ops& ops, std::size_t d, const Vector& v) {
  EchelonBasis eb(d);
  if (!eb.insert(v)) return Subspace(d);
  for (std::size_t done = 0; done < eb.accepted().size() && eb.dim() < d; ++done) {
    const Vector u = eb.accepted()[done];
    for (const auto& a : ops) eb.insert(a.apply(u));
  }
  return eb.subspace();
}

bool invariant_under(const Ops& ops, const Subspace& s) {
  for (const auto& a : ops) {
    for (const auto& v : s.basis()) {
      if (!s.contains(a.apply(v))) return false;
    }
  }
  return true;
}

// Module projection π: V → S with π|_S = id and π A = A|_S π; its kernel is
// an invariant complement. Solved as one linear system in the entries of π.
std::optional<Subspace> complement_of(const Ops& ops, std::size_t d, const Subspace& s) {
  const std::size_t k = s.dim();
  if (k == 0) return Subspace::full(d);
  if (k == d) return Subspace(d);
  const Ops rs = restrict_ops(ops, s);
  const std::size_t unknowns = k * d;
  std::vector<Vector> rows;
  Vector rhs;
  auto idx = [d](std::size_t r, std::size_t c) { return r * d + c; };
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t j = 0; j < k; ++j) {
      Vector eq(unknowns);
      for (std::size_t c = 0; c < d; ++c) eq[idx(r, c)] = s.basis()[j][c];
      rows.push_back(std::move(eq));
      rhs.push_back(r == j ? 1 : 0);
    }
  }
  for (std::size_t a = 0; a < ops.size(); ++a) {
    const Matrix& A = ops[a];
    const Matrix& R = rs[a];
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        Vector eq(unknowns);
        for (std::size_t t = 0; t < d; ++t) {
          if (sgn(A(t, c)) != 0) eq[idx(r, t)] += A(t, c);
        }
        for (std::size_t t = 0; t < k; ++t) {
          if (sgn(R(r, t)) != 0) eq[idx(t, c)] -= R(r, t);
        }
        if (lorhom::is_zero(eq)) continue;
        rows.push_back(std::move(eq));
        rhs.push_back(0);
      }
    }
  }
  const auto sol = solve(Matrix::from_rows(rows, unknowns), rhs);
  if (!sol) return std::nullopt;
  Matrix pi(k, d);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < d; ++c) pi(r, c) = (*sol)[idx(r, c)];
  }
  return kernel(pi);
}

// Greedy subset of the operators whose Lie closure spans all of them.
Ops lie_generators(const Ops& ops) {
  if (ops.empty()) return {};
  const std::size_t d = ops.front().rows();
  EchelonBasis closure(d * d);
  std::vector<Matrix> closed;
  Ops gens;
  for (const auto& a : ops) {
    if (closure.contains(a.entries())) continue;
    gens.push_back(a);
    closure.insert(a.entries());
    closed.push_back(a);
    for (std::size_t done = 0; done < closed.size(); ++done) {
      for (std::size_t i = 0; i < done; ++i) {
        Matrix br = commutator(closed[i], closed[done]);
        if (closure.insert(br.entries())) closed.push_back(std::move(br));
      }
    }
  }
  return gens;
}

bool is_scalar(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j && sgn(m(i, j)) != 0) return false;
      if (i == j && m(i, i) != m(0, 0)) return false;
    }
  }
  return true;
}

// Commutant of a module with cyclic vector v: an endomorphism X is fixed by
// w = Xv, and the relations of the spin basis cut out the admissible w.
std::vector<Matrix> commutant_cyclic(const Ops& ops, std::size_t d, const Vector& v) {
  std::vector<Matrix> words{Matrix::identity(d)};
  std::vector<Vector> us{v};
  EchelonBasis eb(d);
  eb.insert(v);
  for (std::size_t done = 0; done < us.size() && us.size() < d; ++done) {
    for (const auto& a : ops) {
      Vector u = a.apply(us[done]);
      if (eb.insert(u)) {
        us.push_back(std::move(u));
        words.push_back(a * words[done]);
        if (us.size() == d) break;
      }
    }
  }
  if (us.size() != d) throw LieError("vector is not cyclic");
  const Matrix U = Matrix::from_columns(us, d);
  std::vector<Matrix> conds;
  for (const auto& a : ops) {
    for (std::size_t j = 0; j < d; ++j) {
      const auto gamma = solve(U, a.apply(us[j]));
      Matrix c = a * words[j];
      for (std::size_t l = 0; l < d; ++l) {
        if (sgn((*gamma)[l]) != 0) c -= (*gamma)[l] * words[l];
      }
      if (!c.is_zero()) conds.push_back(std::move(c));
    }
  }
  Subspace ws = conds.empty() ? Subspace::full(d) : kernel(stack(conds));
  const Matrix Uinv = *inverse(U);
  std::vector<Matrix> out;
  for (const auto& w : ws.basis()) {
    std::vector<Vector> cols;
    for (const auto& word : words) cols.push_back(word.apply(w));
    out.push_back(Matrix::from_columns(cols, d) * Uinv);
  }
  return out;
}

// Associative algebra generated by the operators and the identity.
std::vector<Matrix> enveloping_algebra(const Ops& ops, std::size_t d) {
  EchelonBasis eb(d * d);
  std::vector<Matrix> basis{Matrix::identity(d)};
  eb.insert(basis.front().entries());
  for (std::size_t done = 0; done < basis.size() && basis.size() < d * d; ++done) {
    for (const auto& a : ops) {
      Matrix p = a * basis[done];
      if (eb.insert(p.entries())) basis.push_back(std::move(p));
    }
  }
  return basis;
}

Rational trace_product(const Matrix& a, const Matrix& b) {
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) != 0 && sgn(b(j, i)) != 0) t += a(i, j) * b(j, i);
    }
  }
  return t;
}

enum class BlockVerdict { Irreducible, Split, NotCR, Unresolved };

struct BlockOutcome {
  BlockVerdict verdict;
  Subspace piece;  // Split: invariant subspace with complement; NotCR: witness
  Subspace other;  // Split: the complement
  std::string note;
};

class Engine {
 public:
  Engine(const DecompositionOptions& o) : opts_(o), rng_(o.seed) {}

  BlockOutcome analyze(const Ops& ops, std::size_t d) {
    if (d <= 1) return {BlockVerdict::Irreducible, {}, {}, ""};
    // 1. cyclic submodules of coordinate vectors and of dual coordinate vectors
    for (std::size_t j = 0; j < d; ++j) {
      auto s = spin(ops, d, unit_vector(d, j));
      if (s.dim() < d) return try_split(ops, d, s);
    }
    Ops dual;
    for (const auto& a : ops) dual.push_back(a.transpose());
    for (std::size_t j = 0; j < d; ++j) {
      auto w = spin(dual, d, unit_vector(d, j));
      if (w.dim() < d) return try_split(ops, d, annihilator(w));
    }
    // 2. eigenvectors of enveloping-algebra elements
    for (const auto& x : probe_elements(ops, d)) {
      if (auto r = split_from_element(ops, dual, d, x)) return *r;
    }
    // 3. commutant and enveloping algebra
    return certify(ops, d);
  }

 private:
  std::vector<Matrix> probe_elements(const Ops& ops, std::size_t d) {
    std::vector<Matrix> xs(ops.begin(), ops.end());
    for (std::size_t i = 0; i < ops.size(); ++i) {
      for (std::size_t j = 0; j < ops.size(); ++j) xs.push_back(ops[i] * ops[j]);
    }
    for (int t = 0; t < opts_.random_trials; ++t) {
      Matrix x(d, d);
      for (std::size_t i = 0; i < ops.size(); ++i) {
        x += small() * ops[i];
        if (i + 1 < ops.size()) x += small() * (ops[i] * ops[i + 1]);
      }
      xs.push_back(std::move(x));
    }
    return xs;
  }

  Rational small() { return Rational(static_cast<long>(rng_() % 7) - 3); }

  std::optional<BlockOutcome> split_from_element(const Ops& ops, const Ops& dual, std::size_t d,
                                                 const Matrix& x) {
    for (const auto& es : rational_eigenspaces(x)) {
      if (es.space.dim() == d) continue;
      for (const auto& v : es.space.basis()) {
        auto s = spin(ops, d, v);
        if (s.dim() < d) return try_split(ops, d, s);
      }
    }
    for (const auto& es : rational_eigenspaces(x.transpose())) {
      if (es.space.dim() == d) continue;
      for (const auto& v : es.space.basis()) {
        auto w = spin(dual, d, v);
        if (w.dim() < d) return try_split(ops, d, annihilator(w));
      }
    }
    return std::nullopt;
  }

  BlockOutcome try_split(const Ops& ops, std::size_t d, const Subspace& s) {
    auto c = complement_of(ops, d, s);
    if (!c) return {BlockVerdict::NotCR, s, {}, "invariant subspace without invariant complement"};
    return {BlockVerdict::Split, s, *c, ""};
  }

  BlockOutcome certify(const Ops& ops, std::size_t d) {
    // every coordinate vector is cyclic at this point
    const auto comm = commutant_cyclic(ops, d, unit_vector(d, 0));
    if (comm.size() > 1) {
      // zero divisors in the commutant give proper invariant kernels
      std::vector<Matrix> probes = comm;
      for (std::size_t i = 0; i < comm.size(); ++i) {
        for (std::size_t j = 0; j < comm.size(); ++j) probes.push_back(comm[i] * comm[j]);
      }
      for (int t = 0; t < opts_.random_trials; ++t) {
        Matrix x(d, d);
        for (const auto& c : comm) x += small() * c;
        probes.push_back(std::move(x));
      }
      for (const auto& x : probes) {
        if (is_scalar(x)) continue;
        for (const auto& es : rational_eigenspaces(x)) {
          if (es.space.dim() < d) return try_split(ops, d, es.space);
        }
      }
    }
    const auto env = enveloping_algebra(ops, d);
    if (env.size() == d * d) return {BlockVerdict::Irreducible, {}, {}, "absolutely irreducible"};
    // Dickson: the radical of a matrix algebra in characteristic 0 is the
    // kernel of its trace form.
    const std::size_t n = env.size();
    Matrix tf(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        tf(i, j) = trace_product(env[i], env[j]);
        tf(j, i) = tf(i, j);
      }
    }
    const auto rad = kernel(tf);
    if (!rad.is_zero()) {
      std::vector<Vector> cols;
      for (const auto& r : rad.basis()) {
        Matrix j(d, d);
        for (std::size_t i = 0; i < n; ++i) {
          if (sgn(r[i]) != 0) j += r[i] * env[i];
        }
        for (std::size_t c = 0; c < d; ++c) cols.push_back(j.column(c));
      }
      return try_split(ops, d, Subspace::span(d, cols));
    }
    if (comm.size() == 1) return {BlockVerdict::Irreducible, {}, {}, "commutant is the scalars"};
    if (is_division_algebra(comm, d)) {
      return {BlockVerdict::Irreducible, {}, {}, "commutant is a division algebra"};
    }
    std::ostringstream os;
    os << "cannot split over Q: commutant of dimension " << comm.size()
       << " has no rational zero divisor found";
    return {BlockVerdict::Unresolved, {}, {}, os.str()};
  }

  // Certificates for a commutant without zero divisors found by search:
  // a field of degree 2 or 3 generated by one element, or a definite
  // quaternion algebra.
  static bool is_division_algebra(const std::vector<Matrix>& comm, std::size_t d) {
    const std::size_t e = comm.size();
    bool commutative = true;
    for (std::size_t i = 0; i < e && commutative; ++i) {
      for (std::size_t j = i + 1; j < e; ++j) {
        if (!commutator(comm[i], comm[j]).is_zero()) {
          commutative = false;
          break;
        }
      }
    }
    if (commutative && (e == 2 || e == 3)) {
      for (const auto& c : comm) {
        if (is_scalar(c)) continue;
        const auto mp = minimal_polynomial(c);
        if (mp.degree() == static_cast<int>(e) && rational_roots(mp).empty()) return true;
      }
      return false;
    }
    if (!commutative && e == 4) {
      const Matrix id = Matrix::identity(d);
      const Matrix* xp = nullptr;
      for (const auto& c : comm) {
        if (!is_scalar(c)) {
          xp = &c;
          break;
        }
      }
      if (!xp) return false;
      auto mp = minimal_polynomial(*xp);
      if (mp.degree() != 2) return false;
      // i = x - t/2 with i² = a scalar
      const Matrix i = *xp + (mp.coefficient(1) / 2) * id;
      const Matrix i2 = i * i;
      if (!is_scalar(i2)) return false;
      for (const auto& y : comm) {
        const Matrix j = commutator(i, y);
        if (j.is_zero()) continue;
        const Matrix j2 = j * j;
        if (!is_scalar(j2)) return false;
        return sgn(i2(0, 0)) < 0 && sgn(j2(0, 0)) < 0;
      }
    }
    return false;
  }

  DecompositionOptions opts_;
  std::mt19937_64 rng_;
};

bool lex_less_basis(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (lex_less(a.basis()[i], b.basis()[i])) return true;
    if (lex_less(b.basis()[i], a.basis()[i])) return false;
  }
  return false;
}

Subspace lift(const Subspace& block, const Subspace& s) {
  std::vector<Vector> vs;
  for (const auto& v : s.basis()) vs.push_back(block.combine(v));
  return Subspace::span(block.ambient_dim(), vs);
}

}  // namespace

Subspace fixed_space(const Representation& rep) {
  if (rep.action().empty()) return Subspace::full(rep.dim());
  return kernel(stack(rep.action()));
}

Subspace cyclic_submodule(const Representation& rep, const Vector& v) {
  if (v.size() != rep.dim()) throw std::invalid_argument("cyclic_submodule: dimension mismatch");
  if (lorhom::is_zero(v)) throw std::invalid_argument("cyclic_submodule: zero vector");
  return spin(rep.action(), rep.dim(), v);
}

bool is_invariant(const Representation& rep, const Subspace& s) { return invariant_under(rep.action(), s); }

Representation Representation::restrict(const Subspace& invariant) const {
  if (!invariant_under(action_, invariant)) throw LieError("subspace is not invariant");
  Representation r;
  r.algebra_ = algebra_;
  r.dim_ = invariant.dim();
  r.action_ = restrict_ops(action_, invariant);
  return r;
}

std::optional<Subspace> invariant_complement(const Representation& rep, const Subspace& s) {
  if (!is_invariant(rep, s)) throw LieError("subspace is not invariant");
  return complement_of(rep.action(), rep.dim(), s);
}

std::vector<Matrix> commutant(const Representation& rep) {
  const std::size_t d = rep.dim();
  std::vector<Vector> rows;
  // X A - A X = 0 in the entries of X
  for (const auto& a : rep.action()) {
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        Vector eq(d * d);
        for (std::size_t t = 0; t < d; ++t) {
          if (sgn(a(t, c)) != 0) eq[r * d + t] += a(t, c);
          if (sgn(a(r, t)) != 0) eq[t * d + c] -= a(r, t);
        }
        if (!lorhom::is_zero(eq)) rows.push_back(std::move(eq));
      }
    }
  }
  const Subspace k = rows.empty() ? Subspace::full(d * d) : kernel(Matrix::from_rows(rows, d * d));
  std::vector<Matrix> out;
  for (const auto& v : k.basis()) {
    Matrix m(d, d);
    for (std::size_t i = 0; i < d * d; ++i) m(i / d, i % d) = v[i];
    out.push_back(std::move(m));
  }
  return out;
}

Decomposition irreducible_decomposition(const Representation& rep, const DecompositionOptions& opts) {
  const std::size_t d = rep.dim();
  if (d > opts.max_dim) {
    std::ostringstream os;
    os << "representation dimension " << d << " exceeds the bound " << opts.max_dim;
    throw LieError(os.str());
  }
  Decomposition out;
  if (d == 0) return out;
  Engine engine(opts);
  const Ops gens = lie_generators(rep.action());

  struct Work {
    Subspace block;
    Ops ops;
  };
  std::vector<Work> stack_{{Subspace::full(d), gens}};
  std::vector<std::pair<Subspace, bool>> found;
  std::vector<std::string> notes;
  while (!stack_.empty()) {
    Work w = std::move(stack_.back());
    stack_.pop_back();
    const std::size_t b = w.block.dim();
    auto res = engine.analyze(w.ops, b);
    switch (res.verdict) {
      case BlockVerdict::Irreducible:
        found.emplace_back(w.block, true);
        break;
      case BlockVerdict::Unresolved:
        found.emplace_back(w.block, false);
        notes.push_back(res.note);
        break;
      case BlockVerdict::NotCR:
        out.status = Decomposition::Status::NotCompletelyReducible;
        out.witness = lift(w.block, res.piece);
        out.diagnostic = "not completely reducible: " + res.note;
        return out;
      case BlockVerdict::Split: {
        for (const Subspace* part : {&res.other, &res.piece}) {
          Subspace sub = lift(w.block, *part);
          Ops r = restrict_ops(w.ops, *part);
          stack_.push_back({std::move(sub), std::move(r)});
        }
        break;
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return lex_less_basis(a.first, b.first); });
  for (auto& [s, cert] : found) {
    out.components.push_back(s);
    out.certified.push_back(cert);
  }
  if (!notes.empty()) {
    out.status = Decomposition::Status::Unresolved;
    out.diagnostic = notes.front();
  }
  return out;
}

Tri is_completely_reducible(const Representation& rep, const DecompositionOptions& opts) {
  const auto d = irreducible_decomposition(rep, opts);
  switch (d.status) {
    case Decomposition::Status::Complete: return Tri::Yes;
    case Decomposition::Status::NotCompletelyReducible: return Tri::No;
    case Decomposition::Status::Unresolved: return Tri::Unknown;
  }
  return Tri::Unknown;
}

}  // namespace lorhom
