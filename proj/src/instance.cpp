#include "pqh/io.hpp"

#include "pqh/error.hpp"
#include "pqh/kernels.hpp"

#include <fstream>
#include <sstream>

namespace pqh {

namespace {

const Json& field(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("instance: missing field '") + key + "'");
  return doc.at(key);
}

} // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  throw ParseError("expected a rational as \"p\" or \"p/q\", got " + j.dump());
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (const auto& x : m.row(i)) row.push_back(to_json(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError(what + ": expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != cols)
      throw ParseError(what + ": row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(row[c]);
  }
  return m;
}

ParsedInstance parse_instance(const Json& doc) {
  if (!doc.is_object()) throw ParseError("instance: top level must be an object");
  const Json& nj = field(doc, "n");
  if (!nj.is_number_unsigned() || nj.get<std::uint64_t>() == 0) throw ParseError("instance: n must be a positive integer");
  const std::size_t n = nj.get<std::size_t>();
  Matrix omega = matrix_from_json(field(doc, "omega_E"), 2 * n, 2 * n, "omega_E");

  const Json& vj = field(doc, "vectors");
  if (!vj.is_array()) throw ParseError("vectors: expected an array of rows");
  Matrix vectors = matrix_from_json(vj, vj.size(), 4 * n, "vectors");

  std::optional<HBasisChange> h_basis;
  if (doc.contains("h_basis") && !doc.at("h_basis").is_null())
    h_basis = HBasisChange(matrix_from_json(doc.at("h_basis"), 2, 2, "h_basis"));

  ModelSpace space(n, std::move(omega));
  Subspace u = Subspace::span(vectors);
  std::vector<std::string> warnings;
  if (u.dim() < vectors.rows())
    warnings.push_back("vectors: " + std::to_string(vectors.rows()) + " rows span a subspace of dimension " +
                       std::to_string(u.dim()));
  return {std::move(space), std::move(vectors), std::move(u), std::move(h_basis), std::move(warnings)};
}

ParsedInstance parse_instance_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
  return parse_instance(doc);
}

ParsedInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance_text(ss.str());
}

Json instance_to_json(const Instance& inst) {
  Json doc;
  doc["n"] = inst.space.n();
  doc["omega_E"] = to_json(inst.space.omega());
  doc["vectors"] = to_json(inst.vectors);
  if (inst.h_basis) doc["h_basis"] = to_json(inst.h_basis->matrix());
  return doc;
}

} // namespace pqh
