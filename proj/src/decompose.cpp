#include "pqh/classify.hpp"

#include "pqh/error.hpp"

namespace pqh {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw CrossCheckError(what);
}

// {B in Q~ : g(BU, U) = 0}, rows in (alpha, beta, gamma) coordinates.
Matrix metric_partner_space(const ModelSpace& space, const Subspace& u) {
  const Matrix gu = kernels::matmul(space.gram(), u.basis().transpose());
  std::vector<Matrix> blocks;
  for (const Operator& b : {Operator::I(), Operator::J(), Operator::K()})
    blocks.push_back(kernels::matmul(kernels::matmul(u.basis(), operator_matrix(b, space.n()).transpose()), gu));
  Matrix sys(0, 3);
  for (std::size_t i = 0; i < blocks[0].rows(); ++i)
    for (std::size_t j = 0; j < blocks[0].cols(); ++j)
      sys.append_row(std::vector<Rational>{blocks[0](i, j), blocks[1](i, j), blocks[2](i, j)});
  if (sys.rows() == 0) return Matrix::identity(3);
  return kernels::nullspace(sys);
}

// The unique A (up to scale) with A^perp = L, when L is a plane.
std::optional<Operator> partner_axis(const Matrix& l) {
  if (l.rows() != 2) return std::nullopt;
  Matrix polar(2, 3);
  for (std::size_t i = 0; i < 2; ++i) {
    polar(i, 0) = l(i, 0);
    polar(i, 1) = -l(i, 1);
    polar(i, 2) = -l(i, 2);
  }
  const Matrix ns = kernels::nullspace(polar);
  return Operator{ns(0, 0), ns(0, 1), ns(0, 2)};
}

Subspace graph_of(const UFTForm& u, const Matrix& f_rows) {
  Matrix rows(0, 2 * u.dim_e());
  for (std::size_t i = 0; i < f_rows.rows(); ++i)
    rows.append_row(from_basis(u.h_basis, Vector(f_rows.row(i), u.apply(f_rows.row(i)))).coords());
  return Subspace::span(std::move(rows));
}

} // namespace

ClassificationReport classify(const ModelSpace& space, const Subspace& u) {
  if (u.ambient() != space.dim()) throw InvariantError("classify: subspace does not belong to the model space");
  ClassificationReport r;
  r.dim = u.dim();
  r.u0 = maximal_pq(u);
  r.uft = to_uft(u);
  if (u.is_zero()) {
    r.para_quaternionic = true;
    r.pure = true;
    r.stabilizer = Matrix::identity(3);
    return r;
  }

  const Stabilizer st = stabilizer(u);
  r.stabilizer = st.basis;
  r.para_quaternionic = is_para_quaternionic(space, u).para_quaternionic;
  r.pure = r.u0.is_zero();
  r.signature = signature(space, u);
  r.hermitian = r.signature.null == 0;
  if (r.para_quaternionic) {
    require(r.dim % 2 == 0, "classify: para-quaternionic subspace of odd dimension");
    if (r.hermitian) require(r.signature.positive == r.signature.negative, "classify: Hermitian para-quaternionic part is not neutral");
  }

  const KindWitnesses w = kind_witnesses(st);
  const auto axis = partner_axis(metric_partner_space(space, u));
  const bool axis_in_stab = axis && st.contains(*axis);

  if (w.complex) {
    const bool use_axis = axis_in_stab && sgn(axis->q()) > 0;
    const Operator a = use_axis ? *axis : *w.complex;
    const ComplexFragment frag = check_complex(space, u, a);
    r.complex = true;
    r.complex_witness = a;
    r.totally_complex = r.hermitian && use_axis;
    if (r.pure) require(frag.totally_complex == r.totally_complex, "classify: totally complex flag disagrees with theorem");
  }
  if (w.para_complex) {
    const bool use_axis = axis_in_stab && sgn(axis->q()) < 0;
    const Operator a = use_axis ? *axis : *w.para_complex;
    const ParaComplexFragment frag = check_para_complex(space, u, a);
    r.weakly_para_complex = true;
    r.para_complex = frag.para_complex;
    r.para_complex_witness = a;
    r.totally_para_complex = r.hermitian && use_axis && frag.para_complex;
    if (r.pure)
      require(frag.totally_para_complex == r.totally_para_complex, "classify: totally para-complex flag disagrees with theorem");
  }
  if (w.nilpotent) {
    const NilpotentFragment frag = check_nilpotent(space, u, *w.nilpotent);
    r.nilpotent = true;
    r.nilpotent_witness = *w.nilpotent;
    r.nilpotent_degree = frag.degree;
  }

  r.real = is_real(u);
  if (r.real) {
    require(r.pure && st.dim() == 0, "classify: real subspace with nontrivial stabilizer");
    require(r.dim <= 2 * space.n(), "classify: real subspace with dim U > 2n");
    if (r.hermitian) r.totally_real = check_totally_real(space, u).totally_real;
  }
  return r;
}

std::string to_string(AddendKind k) {
  switch (k) {
  case AddendKind::ParaQuaternionic: return "para_quaternionic";
  case AddendKind::Decomposable: return "decomposable";
  case AddendKind::Complex: return "complex";
  case AddendKind::WeaklyParaComplex: return "weakly_para_complex";
  case AddendKind::Algebraic: return "algebraic";
  case AddendKind::Real: return "real";
  }
  return "unknown";
}

AddendKind addend_kind_from_string(const std::string& s) {
  for (AddendKind k : {AddendKind::ParaQuaternionic, AddendKind::Decomposable, AddendKind::Complex,
                       AddendKind::WeaklyParaComplex, AddendKind::Algebraic, AddendKind::Real})
    if (to_string(k) == s) return k;
  throw ParseError("unknown addend kind: " + s);
}

Operator quadratic_witness(const Poly& p) {
  if (p.degree() != 2 || p.lead() != 1) throw InvariantError("quadratic_witness: expected a monic quadratic");
  // x^2 - P x - Q
  const Rational pp = -p.coeff(1);
  const Rational qq = -p.coeff(0);
  return {1 - qq, -1 - qq, -pp};
}

std::vector<Addend> generic_decompose(const Subspace& u) {
  std::vector<Addend> out;
  const Subspace u0 = maximal_pq(u);
  if (!u0.is_zero()) out.push_back({AddendKind::ParaQuaternionic, u0, Operator::I(), std::nullopt});
  const Subspace u1 = echelon_complement(u, u0);
  if (u1.is_zero()) return out;

  const Form2 f2 = decompose_form2(u1);
  for (const auto& d : f2.decomposables) {
    const KindWitnesses w = kind_witnesses(stabilizer(d.addend));
    out.push_back({AddendKind::Decomposable, d.addend, w.para_complex, std::nullopt});
  }

  const UFTForm& rest = f2.remainder;
  const Subspace rest_space = from_uft(rest);
  if (rest_space.is_zero()) return out;
  if (!rest.injective()) throw InvariantError("generic_decompose: remainder has a non-injective presentation");

  const InvariantCore core = invariant_core(rest);
  Subspace socles(u.ambient());
  if (!core.w.is_zero()) {
    for (const auto& [p, mult] : factor(minpoly(core.t))) {
      (void)mult;
      const Matrix ker = kernels::nullspace(eval_matrix(p, core.t));
      const Matrix f_rows = kernels::matmul(ker, core.w.basis());
      Subspace add = graph_of(rest, f_rows);
      socles = sum(socles, add);
      if (p.degree() >= 3) {
        out.push_back({AddendKind::Algebraic, std::move(add), std::nullopt, p});
        continue;
      }
      const Poly quad = p.degree() == 2 ? p : p * Poly::linear_root(-p.coeff(0) + 1);
      const Operator a = operator_from_basis(rest.h_basis, quadratic_witness(quad));
      require(preserves(a, add), "generic_decompose: quadratic witness does not preserve its addend");
      const AddendKind kind = sgn(a.q()) > 0 ? AddendKind::Complex : AddendKind::WeaklyParaComplex;
      out.push_back({kind, std::move(add), a, p});
    }
  }
  Subspace real = echelon_complement(rest_space, socles);
  if (!real.is_zero()) out.push_back({AddendKind::Real, std::move(real), std::nullopt, std::nullopt});
  return out;
}

} // namespace pqh
