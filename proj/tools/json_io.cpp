#include "json_io.hpp"

#include <fstream>

namespace lorhom::cli {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row_vector(i)));
  return out;
}

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis()) basis.push_back(to_json(v));
  return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", basis}};
}

Json to_json(const Signature& s) { return {{"plus", s.n_plus}, {"minus", s.n_minus}, {"zero", s.n_zero}}; }

std::string tri_name(Tri t) {
  switch (t) {
    case Tri::Yes: return "pass";
    case Tri::No: return "fail";
    case Tri::Unknown: break;
  }
  return "indeterminate";
}

Json to_json(const CheckResult& c) {
  Json j{{"name", c.name}, {"status", tri_name(c.status)}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

Json to_json(const MatrixLieAlgebra& g) {
  Json basis = Json::array();
  for (const auto& b : g.basis()) basis.push_back(to_json(b));
  return {{"ambient_size", g.ambient_size()}, {"basis", basis}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw UsageError("expected a rational string, got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw UsageError("bad rational '" + j.get<std::string>() + "'");
  }
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw UsageError("expected a nonempty matrix (array of rows)");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) throw UsageError("matrix rows must be arrays");
  const std::size_t cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw UsageError("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

namespace {

std::vector<Matrix> basis_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ambient_size") || !j.contains("basis"))
    throw UsageError("algebra input needs \"ambient_size\" and \"basis\"");
  if (!j["ambient_size"].is_number_unsigned()) throw UsageError("ambient_size must be a nonnegative integer");
  if (!j["basis"].is_array()) throw UsageError("basis must be an array of matrices");
  const auto k = j["ambient_size"].get<std::size_t>();
  std::vector<Matrix> basis;
  for (const auto& b : j["basis"]) {
    Matrix m = matrix_from_json(b);
    if (m.rows() != k || m.cols() != k) throw UsageError("basis matrix is not ambient_size x ambient_size");
    basis.push_back(std::move(m));
  }
  return basis;
}

}  // namespace

MatrixLieAlgebra algebra_from_json(const Json& j) {
  auto basis = basis_from_json(j);
  return MatrixLieAlgebra::from_basis(j["ambient_size"].get<std::size_t>(), std::move(basis));
}

Subspace span_from_json(const Json& j, const MatrixLieAlgebra& g) {
  const auto basis = basis_from_json(j);
  if (j["ambient_size"].get<std::size_t>() != g.ambient_size()) throw UsageError("ambient_size differs from g");
  std::vector<Vector> v;
  for (const auto& b : basis) v.push_back(g.coordinates(b));
  return Subspace::span(g.dim(), v);
}

Matrix keyed_matrix_from_json(const Json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) throw UsageError("input needs \"" + key + "\"");
  return matrix_from_json(j[key]);
}

}  // namespace lorhom::cli
