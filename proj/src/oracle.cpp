#include "pqh/oracle.hpp"

#include "pqh/generate.hpp"
#include "pqh/poly.hpp"

#include <sstream>

namespace pqh {

namespace {

std::size_t sign_changes(const std::vector<Rational>& c) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& x : c) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::string op_str(const Operator& a) {
  return "(" + to_string(a.alpha) + ", " + to_string(a.beta) + ", " + to_string(a.gamma) + ")";
}

class Recorder {
public:
  explicit Recorder(OracleResult& r) : r_(r) {}
  void check(bool ok, const std::string& what) {
    if (ok) ++r_.confirmations;
    else r_.violations.push_back(what);
  }

private:
  OracleResult& r_;
};

// {x in U : Ix, Jx, Kx in U}, via preimages instead of images.
Subspace quaternionic_core(const Subspace& u, std::size_t n) {
  Subspace w = u;
  for (const Operator& a : {Operator::I(), Operator::J(), Operator::K()})
    w = intersect(w, preimage(operator_matrix(a, n), u));
  return w;
}

// Operators probed by the oracle: the grid {-2..2}^3 minus 0, then samples.
std::vector<Operator> probe_operators(std::uint64_t seed, std::size_t samples) {
  std::vector<Operator> ops;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        if (a || b || c) ops.push_back({a, b, c});
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    Operator op{rng.rational(), rng.rational(), rng.rational()};
    if (!op.is_zero()) ops.push_back(op);
  }
  return ops;
}

// Matrix of A on U in coordinates of U's basis; requires AU in U.
Matrix restricted(const Operator& a, const Subspace& u) {
  Matrix m(u.dim(), u.dim());
  for (std::size_t j = 0; j < u.dim(); ++j) {
    const auto c = u.coordinates(apply_operator(a, u.vector(j)).coords());
    for (std::size_t i = 0; i < u.dim(); ++i) m(i, j) = c[i];
  }
  return m;
}

} // namespace

SignatureTriple descartes_inertia(const Matrix& symmetric) {
  const Poly p = charpoly(symmetric);
  std::vector<Rational> c = p.coeffs();
  std::size_t zeros = 0;
  while (zeros < c.size() && sgn(c[zeros]) == 0) ++zeros;
  SignatureTriple t;
  t.null = zeros;
  t.positive = sign_changes(c);
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  t.negative = sign_changes(c);
  return t;
}

OracleResult oracle_check(const ModelSpace& space, const Subspace& u, const ClassificationReport& r,
                          std::uint64_t seed, std::size_t samples) {
  OracleResult out;
  Recorder rec(out);
  const std::size_t n = space.n();

  rec.check(r.dim == u.dim(), "dimension differs from the subspace");

  // U0, purity, para-quaternionic.
  const Subspace core = quaternionic_core(u, n);
  rec.check(core == r.u0, "U0 differs from {x in U : Ix, Jx, Kx in U}");
  rec.check(r.para_quaternionic == (core == u), "para_quaternionic flag disagrees with U0 = U");
  rec.check(r.pure == core.is_zero(), "pure flag disagrees with U0 = 0");

  // Metric.
  const Matrix g = gram(space, u);
  const SignatureTriple desc = descartes_inertia(g);
  rec.check(desc == r.signature, "signature disagrees with Descartes count on the characteristic polynomial");
  rec.check(r.signature.null == u.dim() - kernels::rank(g), "null index differs from corank of the Gram matrix");
  // The zero subspace carries no flags beyond para_quaternionic and pure.
  rec.check(r.hermitian == (!u.is_zero() && kernels::rank(g) == u.dim()), "hermitian flag disagrees with Gram rank");

  // Witnesses: membership and type.
  auto witness = [&](const std::optional<Operator>& w, bool flag, int sign, const char* name) {
    rec.check(flag == w.has_value(), std::string(name) + ": flag and witness presence disagree");
    if (!w) return;
    rec.check(preserves(*w, u), std::string(name) + ": witness " + op_str(*w) + " does not preserve U");
    rec.check(sgn(w->q()) == sign && !w->is_zero(), std::string(name) + ": witness has the wrong q-sign");
  };
  if (!u.is_zero()) {
    witness(r.complex_witness, r.complex, 1, "complex");
    witness(r.para_complex_witness, r.weakly_para_complex, -1, "weakly_para_complex");
    witness(r.nilpotent_witness, r.nilpotent, 0, "nilpotent");
  }

  // Stabilizer rows preserve U; probed invariant operators lie in it and
  // refute missing flags.
  const Subspace stab_span = Subspace::span(r.stabilizer);
  for (std::size_t i = 0; i < r.stabilizer.rows(); ++i) {
    const Operator a{r.stabilizer(i, 0), r.stabilizer(i, 1), r.stabilizer(i, 2)};
    rec.check(preserves(a, u), "stabilizer element " + op_str(a) + " does not preserve U");
  }
  const std::vector<Operator> probes = probe_operators(seed, samples);
  for (const Operator& a : probes) {
    if (!preserves(a, u)) continue;
    rec.check(stab_span.contains(std::vector<Rational>{a.alpha, a.beta, a.gamma}),
              "invariant operator " + op_str(a) + " missing from the stabilizer");
    if (u.is_zero()) continue;
    const int s = sgn(a.q());
    if (s > 0) rec.check(r.complex, "complex flag false but " + op_str(a) + " preserves U");
    if (s < 0) rec.check(r.weakly_para_complex, "weakly_para_complex flag false but " + op_str(a) + " preserves U");
    if (s == 0) rec.check(r.nilpotent, "nilpotent flag false but " + op_str(a) + " preserves U");
  }

  // Strictness: eigenvalues of A on U are +-sqrt(-q), so d+ = d- iff tr(A|U) = 0.
  if (r.para_complex_witness)
    rec.check(r.para_complex == (sgn(trace(restricted(*r.para_complex_witness, u))) == 0),
              "para_complex flag disagrees with tr(A|U) = 0");
  if (r.nilpotent_witness)
    rec.check(r.nilpotent_degree == (image(*r.nilpotent_witness, u).is_zero() ? 1 : 2),
              "nilpotent degree disagrees with AU = 0");

  // Totally-X flags from the defining orthogonality relations.
  if (!u.is_zero()) {
    const bool tc = r.complex_witness && r.hermitian && orthogonal_under(space, u, partners(*r.complex_witness));
    rec.check(r.totally_complex == tc, "totally_complex flag disagrees with A^perp U orthogonal to U");
    const bool tpc = r.para_complex_witness && r.para_complex && r.hermitian &&
                     orthogonal_under(space, u, partners(*r.para_complex_witness));
    rec.check(r.totally_para_complex == tpc, "totally_para_complex flag disagrees with A^perp U orthogonal to U");
    const bool tr = r.real && r.hermitian && orthogonal_under(space, u, {Operator::I(), Operator::J(), Operator::K()});
    rec.check(r.totally_real == tr, "totally_real flag disagrees with IU, JU, KU orthogonal to U");
  }

  // Real: any A with X, AX in U and AX != 0 spans a complex, para-complex
  // or nilpotent piece, which refutes the flag.
  if (r.real) {
    rec.check(r.pure, "real subspace is not pure");
    rec.check(u.dim() <= 2 * n, "real subspace exceeds dim 2n");
    if (r.totally_real) rec.check(u.dim() <= n, "totally real subspace exceeds dim n");
    for (const Operator& a : probes) {
      const Subspace w = intersect(u, preimage(operator_matrix(a, n), u));
      rec.check(image(a, w).is_zero(), "real flag refuted by " + op_str(a));
    }
  }

  // U^{F,T} presentation round-trip; absence only for non-pure U.
  if (r.uft) rec.check(from_uft(*r.uft) == u, "U^{F,T} presentation does not reproduce U");
  else rec.check(!r.pure, "pure subspace reported without a U^{F,T} presentation");

  // N(Im(X.Y)) under random admissible basis changes.
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t k = std::min<std::size_t>(u.dim(), 3);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Vector x = u.vector(i), y = u.vector(j);
      const Rational base = norm(hermitian_product(space, x, y).imaginary());
      for (std::size_t s = 0; s < std::min<std::size_t>(samples, 5); ++s)
        rec.check(norm(hermitian_product(space, x, y, random_sl2(rng)).imaginary()) == base,
                  "N(Im(X.Y)) changed under an admissible basis change");
    }
  return out;
}

OracleResult oracle_decomposition(const ModelSpace& space, const Subspace& u, const std::vector<Addend>& addends) {
  OracleResult out;
  Recorder rec(out);
  Subspace total(u.ambient());
  std::size_t dims = 0;
  for (const auto& a : addends) {
    total = sum(total, a.space);
    dims += a.space.dim();
    rec.check(contains(u, a.space), to_string(a.kind) + " addend is not contained in U");
    if (a.witness) rec.check(preserves(*a.witness, a.space), to_string(a.kind) + " witness does not preserve its addend");
    const ClassificationReport r = classify(space, a.space);
    bool ok = true;
    switch (a.kind) {
    case AddendKind::ParaQuaternionic: ok = r.para_quaternionic; break;
    case AddendKind::Decomposable: ok = r.nilpotent && r.nilpotent_degree == 1 && r.weakly_para_complex; break;
    case AddendKind::Complex: ok = r.complex && r.pure; break;
    case AddendKind::WeaklyParaComplex: ok = r.weakly_para_complex && r.pure; break;
    case AddendKind::Algebraic: ok = r.stabilizer.rows() == 0 && !r.real; break;
    case AddendKind::Real: ok = r.real; break;
    }
    rec.check(ok, to_string(a.kind) + " addend does not re-classify as declared");
  }
  rec.check(total == u, "addends do not span U");
  rec.check(dims == u.dim(), "addends do not form a direct sum");
  return out;
}

} // namespace pqh
