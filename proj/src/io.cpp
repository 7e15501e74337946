#include "intsimplex/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "intsimplex/census.hpp"

namespace intsimplex::io {

namespace {

std::string line_col(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(where + ": missing field '" + key + "'");
  return j.at(key);
}

std::size_t size_from_json(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw FormatError(where + ": expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

json to_json(const Rational& r) {
  if (r.is_integer() && r.numerator().fits_slong_p()) return json(r.numerator().get_si());
  return json(r.to_string());
}

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw FormatError(where + ": " + e.what());
    }
  }
  throw FormatError(where + ": expected an integer or a \"p/q\" string");
}

json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix rational_matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw FormatError(where + ": expected an array of rows");
  const std::size_t n = j.size();
  RationalMatrix m = RationalMatrix::square(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_where = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != n) {
      throw FormatError(row_where + ": expected a row of " + std::to_string(n) + " entries");
    }
    for (std::size_t c = 0; c < n; ++c) {
      m(i, c) = rational_from_json(j[i][c], row_where + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t at = e.byte == 0 ? 0 : e.byte - 1;
    throw FormatError("malformed JSON at " + line_col(text, at) + ": " + e.what());
  }
}

std::string write_matrix_file(const SquaredDistanceMatrix& a) {
  json j;
  j["n"] = a.size();
  j["sq_dists"] = to_json(a.entries());
  return j.dump() + "\n";
}

SquaredDistanceMatrix read_matrix_file(std::string_view text) {
  const json j = parse_json(text);
  const std::size_t n = size_from_json(field(j, "n", "matrix file"), "n");
  RationalMatrix m = rational_matrix_from_json(field(j, "sq_dists", "matrix file"), "sq_dists");
  if (m.rows() != n) {
    throw FormatError("sq_dists: has " + std::to_string(m.rows()) + " rows but n = " + std::to_string(n));
  }
  try {
    return SquaredDistanceMatrix(std::move(m));
  } catch (const InvalidMatrix& e) {
    throw FormatError(std::string("sq_dists: ") + e.what());
  }
}

std::string write_embedding_file(const Embedding& e) {
  json j;
  j["ambient_dim"] = e.ambient_dim;
  j["points"] = e.points;
  j["gram"] = to_json(e.gram);
  j["partition"] = e.partition.parts();
  j["lambda_sq"] = to_json(e.lambda_sq);
  return j.dump() + "\n";
}

Embedding read_embedding_file(std::string_view text) {
  const json j = parse_json(text);
  Embedding e;
  e.ambient_dim = size_from_json(field(j, "ambient_dim", "embedding file"), "ambient_dim");
  const json& pts = field(j, "points", "embedding file");
  if (!pts.is_array()) throw FormatError("points: expected an array");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string where = "points[" + std::to_string(i) + "]";
    if (!pts[i].is_array() || pts[i].size() != e.ambient_dim) {
      throw FormatError(where + ": expected " + std::to_string(e.ambient_dim) + " coordinates");
    }
    std::vector<double> p;
    for (const auto& x : pts[i]) {
      if (!x.is_number()) throw FormatError(where + ": non-numeric coordinate");
      p.push_back(x.get<double>());
    }
    e.points.push_back(std::move(p));
  }
  e.gram = rational_matrix_from_json(field(j, "gram", "embedding file"), "gram");
  const json& parts = field(j, "partition", "embedding file");
  if (!parts.is_array()) throw FormatError("partition: expected an array");
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    sizes.push_back(size_from_json(parts[i], "partition[" + std::to_string(i) + "]"));
  }
  try {
    e.partition = Partition(std::move(sizes));
  } catch (const std::invalid_argument& ex) {
    throw FormatError(std::string("partition: ") + ex.what());
  }
  e.lambda_sq = rational_from_json(field(j, "lambda_sq", "embedding file"), "lambda_sq");
  if (e.points.size() != e.partition.n() || e.gram.rows() != e.partition.n()) {
    throw FormatError("embedding file: point count, gram size and partition disagree");
  }
  for (std::size_t b = 0; b < e.partition.size(); ++b) {
    e.block_of.insert(e.block_of.end(), e.partition.parts()[b], b);
  }
  return e;
}

std::string write_representatives(const std::vector<IntMatrix>& distances) {
  std::string out;
  for (const auto& m : distances) out += write_matrix_file(to_squared(m));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << contents;
}

}  // namespace intsimplex::io
