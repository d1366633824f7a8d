#include "pqh/io.hpp"

#include "pqh/error.hpp"

#include <sstream>

namespace pqh {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("report: missing field '") + key + "'");
  return j.at(key);
}

std::size_t need_size(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number_unsigned()) throw ParseError(std::string("report: '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

bool need_bool(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_boolean()) throw ParseError(std::string("report: '") + key + "' must be a boolean");
  return v.get<bool>();
}

std::optional<Operator> optional_operator(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return operator_from_json(j);
}

Json optional_json(const std::optional<Operator>& a) { return a ? to_json(*a) : Json(nullptr); }

// Flag table shared by emission, parsing and the text form.
struct FlagRef {
  const char* name;
  bool ClassificationReport::*member;
};
constexpr FlagRef kFlags[] = {
    {"para_quaternionic", &ClassificationReport::para_quaternionic},
    {"pure", &ClassificationReport::pure},
    {"complex", &ClassificationReport::complex},
    {"weakly_para_complex", &ClassificationReport::weakly_para_complex},
    {"para_complex", &ClassificationReport::para_complex},
    {"nilpotent", &ClassificationReport::nilpotent},
    {"real", &ClassificationReport::real},
    {"hermitian", &ClassificationReport::hermitian},
    {"totally_complex", &ClassificationReport::totally_complex},
    {"totally_para_complex", &ClassificationReport::totally_para_complex},
    {"totally_real", &ClassificationReport::totally_real},
};

std::string rows_text(const Matrix& m) {
  if (m.rows() == 0) return "none";
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "") << "(";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << to_string(m(i, c));
    os << ")";
  }
  return os.str();
}

} // namespace

Json to_json(const Operator& a) { return Json::array({to_json(a.alpha), to_json(a.beta), to_json(a.gamma)}); }

Operator operator_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("operator: expected [alpha, beta, gamma]");
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2])};
}

Json to_json(const Subspace& s) {
  Json j;
  j["ambient"] = s.ambient();
  j["basis"] = to_json(s.basis());
  return j;
}

Subspace subspace_from_json(const Json& j) {
  const std::size_t ambient = need_size(j, "ambient");
  const Json& b = need(j, "basis");
  if (!b.is_array()) throw ParseError("subspace: basis must be an array");
  const Subspace s = Subspace::span(matrix_from_json(b, b.size(), ambient, "subspace basis"));
  if (s.is_zero()) return Subspace(ambient);
  return s;
}

Json to_json(const UFTForm& u) {
  Json j;
  j["h_basis"] = to_json(u.h_basis.matrix());
  j["F"] = to_json(u.f);
  j["T"] = to_json(u.t);
  return j;
}

UFTForm uft_from_json(const Json& j) {
  HBasisChange h(matrix_from_json(need(j, "h_basis"), 2, 2, "h_basis"));
  Subspace f = subspace_from_json(need(j, "F"));
  Matrix t = matrix_from_json(need(j, "T"), f.ambient(), f.dim(), "T");
  return {std::move(h), std::move(f), std::move(t)};
}

Json to_json(const SignatureTriple& s) { return Json::array({s.positive, s.null, s.negative}); }

Json report_to_json(const ClassificationReport& r) {
  Json j;
  j["dim"] = r.dim;
  Json flags;
  for (const auto& f : kFlags) flags[f.name] = r.*(f.member);
  j["flags"] = std::move(flags);
  j["nilpotent_degree"] = r.nilpotent_degree;
  j["witnesses"] = {{"complex", optional_json(r.complex_witness)},
                    {"para_complex", optional_json(r.para_complex_witness)},
                    {"nilpotent", optional_json(r.nilpotent_witness)}};
  j["stabilizer"] = to_json(r.stabilizer);
  j["signature"] = to_json(r.signature);
  j["u0"] = to_json(r.u0);
  j["uft"] = r.uft ? to_json(*r.uft) : Json(nullptr);
  return j;
}

ClassificationReport report_from_json(const Json& j) {
  ClassificationReport r;
  r.dim = need_size(j, "dim");
  const Json& flags = need(j, "flags");
  for (const auto& f : kFlags) r.*(f.member) = need_bool(flags, f.name);
  const Json& deg = need(j, "nilpotent_degree");
  if (!deg.is_number_integer()) throw ParseError("report: nilpotent_degree must be an integer");
  r.nilpotent_degree = deg.get<int>();
  const Json& w = need(j, "witnesses");
  r.complex_witness = optional_operator(need(w, "complex"));
  r.para_complex_witness = optional_operator(need(w, "para_complex"));
  r.nilpotent_witness = optional_operator(need(w, "nilpotent"));
  const Json& st = need(j, "stabilizer");
  if (!st.is_array()) throw ParseError("report: stabilizer must be an array");
  r.stabilizer = matrix_from_json(st, st.size(), 3, "stabilizer");
  const Json& sig = need(j, "signature");
  if (!sig.is_array() || sig.size() != 3) throw ParseError("report: signature must be [p, s, q]");
  for (const auto& x : sig)
    if (!x.is_number_unsigned()) throw ParseError("report: signature entries must be non-negative integers");
  r.signature.positive = sig[0].get<std::size_t>();
  r.signature.null = sig[1].get<std::size_t>();
  r.signature.negative = sig[2].get<std::size_t>();
  r.u0 = subspace_from_json(need(j, "u0"));
  const Json& u = need(j, "uft");
  if (!u.is_null()) r.uft = uft_from_json(u);
  return r;
}

std::string operator_text(const Operator& a) {
  return "(" + to_string(a.alpha) + ", " + to_string(a.beta) + ", " + to_string(a.gamma) + ")";
}

std::string signature_text(const SignatureTriple& s) {
  return "(" + std::to_string(s.positive) + ", " + std::to_string(s.null) + ", " + std::to_string(s.negative) + ")";
}

std::string report_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << "dim: " << r.dim << "\n";
  os << "signature: " << signature_text(r.signature) << "\n";
  os << "flags:";
  bool any = false;
  for (const auto& f : kFlags)
    if (r.*(f.member)) {
      os << " " << f.name;
      any = true;
    }
  os << (any ? "" : " none") << "\n";
  if (r.complex_witness) os << "complex witness: " << operator_text(*r.complex_witness) << "\n";
  if (r.para_complex_witness) os << "para-complex witness: " << operator_text(*r.para_complex_witness) << "\n";
  if (r.nilpotent_witness)
    os << "nilpotent witness: " << operator_text(*r.nilpotent_witness) << " (degree " << r.nilpotent_degree << ")\n";
  os << "stabilizer: " << rows_text(r.stabilizer) << "\n";
  os << "U0: dim " << r.u0.dim() << "\n";
  if (r.uft) os << "U^{F,T}: dim F " << r.uft->f.dim() << ", h basis " << rows_text(r.uft->h_basis.matrix()) << "\n";
  else os << "U^{F,T}: none\n";
  return os.str();
}

Json addend_to_json(const ModelSpace& space, const Addend& a) {
  Json j;
  j["kind"] = to_string(a.kind);
  j["dim"] = a.space.dim();
  j["basis"] = to_json(a.space.basis());
  j["witness"] = optional_json(a.witness);
  j["factor"] = a.factor ? Json(a.factor->str()) : Json(nullptr);
  j["report"] = report_to_json(classify(space, a.space));
  return j;
}

} // namespace pqh
