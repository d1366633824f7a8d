#include "pqh/error.hpp"
#include "pqh/io.hpp"
#include "pqh/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace pqh;

namespace {

struct Options {
  std::string path;
  bool json = false;
  std::string mode = "generic";
  std::uint64_t seed = 1;
  std::size_t samples = 20;
  std::size_t count = 100;
  std::optional<std::size_t> dim;
  std::string kind = "random";
  std::size_t n = 2;
  std::size_t x = 0;
  std::size_t y = 0;
  std::string basis;
};

ParsedInstance load(const Options& o) {
  if (o.path.empty()) throw ParseError("an instance path is required");
  ParsedInstance inst = read_instance_file(o.path);
  for (const auto& w : inst.warnings) std::cerr << "warning: " << w << "\n";
  return inst;
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

std::string indent(const std::string& text, const std::string& pad) {
  std::istringstream in(text);
  std::ostringstream out;
  for (std::string line; std::getline(in, line);) out << pad << line << "\n";
  return out.str();
}

// "a,b,c,d" -> [[a, b], [c, d]].
HBasisChange parse_basis(const std::string& s) {
  std::vector<Rational> v;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) v.push_back(parse_rational(item));
  if (v.size() != 4) throw ParseError("--basis expects four rationals a,b,c,d");
  return HBasisChange(Matrix{{v[0], v[1]}, {v[2], v[3]}});
}

int cmd_classify(const Options& o) {
  const ParsedInstance in = load(o);
  const ClassificationReport r = classify(in.space, in.subspace);
  emit(o, report_to_json(r), report_text(r));
  return 0;
}

Json addend_list(const ModelSpace& space, const std::vector<Addend>& addends) {
  Json arr = Json::array();
  for (const auto& a : addends) arr.push_back(addend_to_json(space, a));
  return arr;
}

std::string addend_text(const ModelSpace& space, const std::vector<Addend>& addends) {
  std::ostringstream os;
  for (const auto& a : addends) {
    os << to_string(a.kind) << " " << a.space.dim();
    if (a.witness) os << " witness " << operator_text(*a.witness);
    if (a.factor) os << " factor " << a.factor->str();
    os << "\n" << indent(report_text(classify(space, a.space)), "  ");
  }
  if (addends.empty()) os << "zero subspace: no addends\n";
  return os.str();
}

std::string decomposable_text(const DecomposableAddend& d) {
  return "decomposable " + std::to_string(d.addend.dim()) + " direction (" + to_string(d.h[0]) + ", " +
         to_string(d.h[1]) + ")\n";
}

Json decomposable_json(const DecomposableAddend& d) {
  Json j;
  j["direction"] = Json::array({to_json(d.h[0]), to_json(d.h[1])});
  j["fiber"] = to_json(d.fiber);
  j["addend"] = to_json(d.addend);
  return j;
}

std::string uft_text(const UFTForm& u) {
  std::ostringstream os;
  os << "h basis: " << to_string(u.h_basis.matrix()) << "\n";
  os << "F (dim " << u.f.dim() << "):\n" << indent(to_string(u.f.basis()), "  ");
  os << "T (columns T f_j):\n" << indent(to_string(u.t), "  ");
  return os.str();
}

int cmd_decompose(const Options& o) {
  const ParsedInstance in = load(o);
  const Subspace& u = in.subspace;
  Json j;
  std::ostringstream text;
  j["mode"] = o.mode;
  if (o.mode == "generic") {
    const auto addends = generic_decompose(u);
    j["addends"] = addend_list(in.space, addends);
    text << addend_text(in.space, addends);
  } else if (o.mode == "form1") {
    const Form1 f = decompose_form1(u);
    j["decomposable"] = f.decomposable ? decomposable_json(*f.decomposable) : Json(nullptr);
    j["remainder"] = to_json(f.remainder);
    if (f.decomposable) text << decomposable_text(*f.decomposable);
    text << "U^{F,T} " << f.remainder.f.dim() << "\n" << indent(uft_text(f.remainder), "  ");
  } else if (o.mode == "form2") {
    const Form2 f = decompose_form2(u);
    j["decomposables"] = Json::array();
    for (const auto& d : f.decomposables) {
      j["decomposables"].push_back(decomposable_json(d));
      text << decomposable_text(d);
    }
    j["remainder"] = to_json(f.remainder);
    text << "U^{F,T} " << f.remainder.f.dim() << "\n" << indent(uft_text(f.remainder), "  ");
  } else if (o.mode == "nilpotent") {
    const KindWitnesses w = kind_witnesses(stabilizer(u));
    if (!w.nilpotent) throw InvariantError("decompose: subspace is not preserved by a nilpotent structure");
    const NilpotentFragment f = check_nilpotent(in.space, u, *w.nilpotent);
    j["witness"] = to_json(f.witness);
    j["degree"] = f.degree;
    j["kernel_direction"] = Json::array({to_json(f.kernel_direction[0]), to_json(f.kernel_direction[1])});
    j["para_quaternionic"] = to_json(f.pq_part);
    j["decomposable"] = to_json(f.dec_part);
    j["real"] = to_json(f.real_part);
    text << "witness " << operator_text(f.witness) << " degree " << f.degree << "\n";
    text << "para_quaternionic " << f.pq_part.dim() << "\n";
    text << "decomposable " << f.dec_part.dim() << "\n";
    text << "real " << f.real_part.dim() << "\n";
  } else {
    throw ParseError("unknown mode: " + o.mode);
  }
  emit(o, j, text.str());
  return 0;
}

int cmd_signature(const Options& o) {
  const ParsedInstance in = load(o);
  const SignatureTriple s = signature(in.space, in.subspace);
  emit(o, Json{{"signature", to_json(s)}}, signature_text(s) + "\n");
  return 0;
}

int cmd_uft(const Options& o) {
  const ParsedInstance in = load(o);
  std::optional<UFTForm> f;
  if (in.h_basis) f = to_uft(in.subspace, *in.h_basis);
  else f = to_uft(in.subspace);
  if (!f) {
    const std::string why = "no U^{F,T} presentation: every direction h meets U in a decomposable vector (U0 = " +
                            std::to_string(maximal_pq(in.subspace).dim()) + "-dimensional)";
    emit(o, Json{{"uft", nullptr}, {"reason", why}}, why + "\n");
    return 0;
  }
  emit(o, Json{{"uft", to_json(*f)}}, uft_text(*f));
  return 0;
}

int cmd_product(const Options& o) {
  const ParsedInstance in = load(o);
  if (o.x >= in.vectors.rows() || o.y >= in.vectors.rows())
    throw ParseError("product: vector index out of range");
  HBasisChange basis = in.h_basis.value_or(HBasisChange{});
  if (!o.basis.empty()) basis = parse_basis(o.basis);
  const Vector x(in.vectors.row_vector(o.x)), y(in.vectors.row_vector(o.y));
  const ParaQuaternion p = hermitian_product(in.space, x, y, basis);
  const Rational n_im = norm(p.imaginary());
  Json triple = Json::array();
  std::ostringstream text;
  text << "admissible basis:";
  for (const Operator& a : {Operator::I(), Operator::J(), Operator::K()}) {
    const Operator b = operator_from_basis(basis, a);
    triple.push_back(to_json(b));
    text << " " << operator_text(b);
  }
  text << "\nX.Y = " << p.str() << "\nN(Im) = " << to_string(n_im) << "\n";
  Json j;
  j["basis"] = std::move(triple);
  j["product"] = Json::array({to_json(p.q0), to_json(p.q1), to_json(p.q2), to_json(p.q3)});
  j["norm_imaginary"] = to_json(n_im);
  emit(o, j, text.str());
  return 0;
}

int cmd_standardize(const Options& o) {
  if (o.path.empty()) throw ParseError("standardize: a path is required");
  std::ifstream f(o.path);
  if (!f) throw ParseError("cannot open " + o.path);
  Json doc;
  try {
    doc = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("standardize: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("I") || !doc.contains("J") || !doc.contains("K") || !doc["I"].is_array())
    throw ParseError("standardize: expected an object with matrices I, J, K");
  const std::size_t d = doc["I"].size();
  const Matrix i = matrix_from_json(doc["I"], d, d, "I");
  const Matrix jm = matrix_from_json(doc["J"], d, d, "J");
  const Matrix k = matrix_from_json(doc["K"], d, d, "K");
  const Standardization s = standardize(i, jm, k);
  emit(o, Json{{"m", s.m}, {"change", to_json(s.change)}},
       "m = " + std::to_string(s.m) + "\nbasis (columns):\n" + indent(to_string(s.change), "  "));
  return 0;
}

std::size_t report_oracle(const std::string& label, const OracleResult& a, const OracleResult& b, bool json, Json& out) {
  const std::size_t bad = a.violations.size() + b.violations.size();
  Json v = Json::array();
  for (const auto& s : a.violations) v.push_back(s);
  for (const auto& s : b.violations) v.push_back(s);
  if (json) out.push_back({{"instance", label}, {"confirmations", a.confirmations + b.confirmations}, {"violations", v}});
  else if (bad) for (const auto& s : v) std::cout << label << ": " << s.get<std::string>() << "\n";
  return bad;
}

int cmd_oracle(const Options& o) {
  Json runs = Json::array();
  std::size_t bad = 0, checks = 0, instances = 0;
  auto run = [&](const std::string& label, const ModelSpace& space, const Subspace& u, std::uint64_t seed) {
    const OracleResult a = oracle_check(space, u, classify(space, u), seed, o.samples);
    const OracleResult b = oracle_decomposition(space, u, generic_decompose(u));
    checks += a.confirmations + b.confirmations;
    ++instances;
    bad += report_oracle(label, a, b, o.json, runs);
  };
  if (!o.path.empty()) {
    const ParsedInstance in = load(o);
    run(o.path, in.space, in.subspace, o.seed);
  } else {
    for (InstanceKind k : all_instance_kinds())
      for (std::size_t n = 1; n <= 3; ++n)
        for (std::uint64_t s = o.seed; s < o.seed + o.count; ++s) {
          const Instance inst = generate(k, s, n);
          run(to_string(k) + " n=" + std::to_string(n) + " seed=" + std::to_string(s), inst.space,
              Subspace::span(inst.vectors), s);
        }
  }
  if (o.json)
    std::cout << Json{{"instances", instances}, {"confirmations", checks}, {"violations", bad}, {"runs", runs}}.dump(2)
              << "\n";
  else
    std::cout << instances << " instances, " << checks << " confirmations, " << bad << " violations\n";
  return bad ? 4 : 0;
}

int cmd_gen(const Options& o) {
  const Instance inst = generate(instance_kind_from_string(o.kind), o.seed, o.n, o.dim);
  std::cout << instance_to_json(inst).dump(2) << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification of subspaces of para-quaternionic Hermitian spaces"};
  app.require_subcommand(1);
  Options o;

  auto with_path = [&](CLI::App* c) {
    c->add_option("path", o.path, "Instance file (JSON)");
    c->add_flag("--json", o.json, "Machine-readable output");
    return c;
  };
  auto* classify_cmd = with_path(app.add_subcommand("classify", "Classification report"));
  auto* decompose_cmd = with_path(app.add_subcommand("decompose", "Addend decomposition"));
  decompose_cmd->add_option("--mode", o.mode, "generic, form1, form2 or nilpotent")
      ->check(CLI::IsMember({"generic", "form1", "form2", "nilpotent"}));
  auto* signature_cmd = with_path(app.add_subcommand("signature", "Signature (p, s, q) of the induced metric"));
  auto* uft_cmd = with_path(app.add_subcommand("uft", "U^{F,T} presentation"));
  auto* product_cmd = with_path(app.add_subcommand("product", "Hermitian product of two input vectors"));
  product_cmd->add_option("--x", o.x, "Index of X among the input vectors");
  product_cmd->add_option("--y", o.y, "Index of Y among the input vectors");
  product_cmd->add_option("--basis", o.basis, "Symplectic basis of H as a,b,c,d (columns are the basis vectors)");
  auto* standardize_cmd = with_path(app.add_subcommand("standardize", "Model basis for a triple I, J, K"));
  auto* oracle_cmd = with_path(app.add_subcommand("oracle", "Cross-check classification against raw definitions"));
  oracle_cmd->add_option("--seed", o.seed, "First seed");
  oracle_cmd->add_option("--samples", o.samples, "Random probes per instance");
  oracle_cmd->add_option("--count", o.count, "Seeds per kind and n when no path is given");
  auto* gen_cmd = app.add_subcommand("gen", "Random instance of a given kind");
  gen_cmd->add_option("--seed", o.seed, "Seed");
  gen_cmd->add_option("--dim", o.dim, "Subspace dimension");
  gen_cmd->add_option("--kind", o.kind, "Instance kind");
  gen_cmd->add_option("--n", o.n, "Half-dimension of E")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*classify_cmd) return cmd_classify(o);
    if (*decompose_cmd) return cmd_decompose(o);
    if (*signature_cmd) return cmd_signature(o);
    if (*uft_cmd) return cmd_uft(o);
    if (*product_cmd) return cmd_product(o);
    if (*standardize_cmd) return cmd_standardize(o);
    if (*oracle_cmd) return cmd_oracle(o);
    if (*gen_cmd) return cmd_gen(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const CrossCheckError& e) {
    std::cerr << "cross-check failure: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
