#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "lorhom/catalog.hpp"
#include "lorhom/classifier.hpp"
#include "lorhom/homogeneous.hpp"

namespace lorhom::cli {

using Json = nlohmann::ordered_json;

/// Bad command line, unreadable file, malformed or schema-violating input.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Rational& r);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Subspace& s);
Json to_json(const Signature& s);
Json to_json(const CheckResult& c);
Json to_json(const MatrixLieAlgebra& g);
std::string tri_name(Tri t);

/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
/// {"ambient_size": k, "basis": [k×k matrices]}; closure is checked.
MatrixLieAlgebra algebra_from_json(const Json& j);
/// Same layout, but only a span: basis matrices are mapped into g.
Subspace span_from_json(const Json& j, const MatrixLieAlgebra& g);
/// {"<key>": matrix}.
Matrix keyed_matrix_from_json(const Json& j, const std::string& key);

}  // namespace lorhom::cli
