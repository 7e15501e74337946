#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "intsimplex/embedding.hpp"
#include "intsimplex/matrix.hpp"
#include "intsimplex/rational.hpp"

namespace intsimplex::io {

using nlohmann::json;

/// Malformed input, located by 1-based line and column when the failure is
/// syntactic, or by a JSON path when it is semantic.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Integers become JSON numbers when they fit in 64 bits; everything else is
/// a "p/q" (or "p") string.
json to_json(const Rational& r);
/// Accepts JSON integers and "p" / "p/q" strings.
Rational rational_from_json(const json& j, const std::string& where);

json to_json(const RationalMatrix& m);
RationalMatrix rational_matrix_from_json(const json& j, const std::string& where);

/// Matrix file: {"n": 3, "sq_dists": [[0, 1, "9/4"], ...]}.
std::string write_matrix_file(const SquaredDistanceMatrix& a);
SquaredDistanceMatrix read_matrix_file(std::string_view text);

/// Embedding file: {"ambient_dim", "points", "gram", "partition", "lambda_sq"}.
/// Coordinates are written in shortest round-trip form.
std::string write_embedding_file(const Embedding& e);
Embedding read_embedding_file(std::string_view text);

/// One matrix file per line, for census representatives (squared distances).
std::string write_representatives(const std::vector<IntMatrix>& distances);

/// Parses text as JSON, converting parse failures to FormatError with a
/// line:column position.
json parse_json(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace intsimplex::io
