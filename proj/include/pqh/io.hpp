#pragma once

// JSON instance files and report serialization. Rationals travel as
// canonical strings ("p" or "p/q", q > 1); JSON integers are accepted on
// input, floating-point numbers never.

#include "pqh/classify.hpp"
#include "pqh/generate.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace pqh {

using Json = nlohmann::ordered_json;

struct ParsedInstance {
  ModelSpace space;
  Matrix vectors;  // rows as given
  Subspace subspace;
  std::optional<HBasisChange> h_basis;
  std::vector<std::string> warnings;
};

/// Malformed documents throw ParseError; a degenerate or non-skew omega_E
/// throws InvariantError.
ParsedInstance parse_instance(const Json& doc);
ParsedInstance parse_instance_text(const std::string& text);
ParsedInstance read_instance_file(const std::string& path);
Json instance_to_json(const Instance& inst);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json to_json(const Matrix& m);
/// Expects exactly rows x cols entries.
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& what);
Json to_json(const Operator& a);
Operator operator_from_json(const Json& j);
Json to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);
Json to_json(const UFTForm& u);
UFTForm uft_from_json(const Json& j);
Json to_json(const SignatureTriple& s);

Json report_to_json(const ClassificationReport& r);
ClassificationReport report_from_json(const Json& j);
std::string report_text(const ClassificationReport& r);

/// Addend with its own classification report.
Json addend_to_json(const ModelSpace& space, const Addend& a);

std::string operator_text(const Operator& a);
std::string signature_text(const SignatureTriple& s);

} // namespace pqh
