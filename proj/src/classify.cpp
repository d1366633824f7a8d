#include "pqh/classify.hpp"

#include "pqh/error.hpp"

namespace pqh {

namespace {

// a + b sqrt(d), d > 0 not a rational square.
struct Quad {
  Rational a, b;
};

std::size_t rank_quadratic(std::vector<std::vector<Quad>> m, const Rational& d) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  auto is_zero = [](const Quad& x) { return sgn(x.a) == 0 && sgn(x.b) == 0; };
  auto mul = [&](const Quad& x, const Quad& y) { return Quad{x.a * y.a + d * x.b * y.b, x.a * y.b + x.b * y.a}; };
  auto inv = [&](const Quad& x) {
    const Rational n = x.a * x.a - d * x.b * x.b;
    return Quad{x.a / n, -x.b / n};
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Quad pinv = inv(m[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (is_zero(m[i][c])) continue;
      const Quad f = mul(m[i][c], pinv);
      for (std::size_t j = c; j < cols; ++j) {
        const Quad t = mul(f, m[r][j]);
        m[i][j].a -= t.a;
        m[i][j].b -= t.b;
      }
    }
    ++r;
  }
  return r;
}

Matrix omega_on(const ModelSpace& space, const Matrix& rows_a, const Matrix& rows_b) {
  Matrix m(rows_a.rows(), rows_b.rows());
  for (std::size_t i = 0; i < rows_a.rows(); ++i)
    for (std::size_t j = 0; j < rows_b.rows(); ++j) m(i, j) = space.omega_e(rows_a.row(i), rows_b.row(j));
  return m;
}

Matrix columns_as_rows(const Matrix& t) { return t.transpose(); }

// Graph vectors h1' (x) f_j + h2' (x) T f_j in fixed coordinates.
Matrix graph_rows(const UFTForm& u) {
  Matrix rows(0, 2 * u.dim_e());
  for (std::size_t j = 0; j < u.f.dim(); ++j)
    rows.append_row(from_basis(u.h_basis, Vector(u.f.basis().row(j), u.t.col_vector(j))).coords());
  return rows;
}

bool nondegenerate(const Matrix& m) { return m.rows() == 0 || sgn(kernels::determinant(m)) != 0; }

void require(bool ok, const char* what) {
  if (!ok) throw CrossCheckError(what);
}

// Matrix of T on the T-invariant F, in coordinates relative to F's basis.
Matrix restrict_to_f(const UFTForm& u) {
  const std::size_t k = u.f.dim();
  Matrix m(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    const std::vector<Rational> img = u.t.col_vector(j);
    if (!u.f.contains(img)) throw CrossCheckError("presentation: F is not T-invariant");
    const auto c = u.f.coordinates(img);
    for (std::size_t i = 0; i < k; ++i) m(i, j) = c[i];
  }
  return m;
}

HVector kernel_direction(const Matrix& m2) {
  const Matrix ker = kernels::nullspace(m2);
  if (ker.rows() != 1) throw InvariantError("nilpotent witness: kernel on H is not a line");
  return {ker(0, 0), ker(0, 1)};
}

} // namespace

bool Stabilizer::contains(const Operator& a) const {
  return Subspace::span(basis).contains(std::vector<Rational>{a.alpha, a.beta, a.gamma});
}

bool preserves(const Operator& a, const Subspace& u) {
  for (std::size_t i = 0; i < u.dim(); ++i)
    if (!u.contains(apply_operator(a, u.vector(i)).coords())) return false;
  return true;
}

Stabilizer stabilizer(const Subspace& u) {
  if (u.is_zero()) return {Matrix::identity(3)};
  Matrix sys(0, 3);
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const Vector x = u.vector(i);
    const auto ri = u.residual(apply_operator(Operator::I(), x).coords());
    const auto rj = u.residual(apply_operator(Operator::J(), x).coords());
    const auto rk = u.residual(apply_operator(Operator::K(), x).coords());
    for (std::size_t c = 0; c < ri.size(); ++c)
      if (sgn(ri[c]) != 0 || sgn(rj[c]) != 0 || sgn(rk[c]) != 0) sys.append_row(std::vector<Rational>{ri[c], rj[c], rk[c]});
  }
  if (sys.rows() == 0) return {Matrix::identity(3)};
  return {kernels::nullspace(sys)};
}

KindWitnesses kind_witnesses(const Stabilizer& s) {
  KindWitnesses w;
  switch (s.dim()) {
  case 0:
    break;
  case 1: {
    const Operator a = s.element(0);
    const int sg = sgn(a.q());
    if (sg > 0) w.complex = a;
    else if (sg < 0) w.para_complex = a;
    else w.nilpotent = a;
    break;
  }
  case 2: {
    const Operator b0 = s.element(0), b1 = s.element(1);
    const Rational a = b0.q(), b = q_polar(b0, b1), c = b1.q();
    const Rational disc = b * b - a * c;
    auto comb = [&](const Rational& x, const Rational& y) { return x * b0 + y * b1; };
    // Positive values.
    if (sgn(a) > 0) w.complex = b0;
    else if (sgn(c) > 0) w.complex = b1;
    else if (sgn(a) < 0 && sgn(disc) > 0) w.complex = comb(b, -a);
    else if (sgn(a) == 0 && sgn(b) != 0) w.complex = comb((1 - c) / (2 * b), 1);
    // Negative values.
    if (sgn(a) < 0) w.para_complex = b0;
    else if (sgn(c) < 0) w.para_complex = b1;
    else if (sgn(a) > 0 && sgn(disc) > 0) w.para_complex = comb(b, -a);
    else if (sgn(a) == 0 && sgn(b) != 0) w.para_complex = comb((-1 - c) / (2 * b), 1);
    // Isotropic directions.
    if (sgn(a) == 0) w.nilpotent = b0;
    else if (sgn(disc) >= 0) {
      if (const auto r = rational_sqrt(disc)) w.nilpotent = comb(-b + *r, a);
    }
    break;
  }
  default:
    w.complex = Operator::I();
    w.para_complex = Operator::K();
    w.nilpotent = Operator{1, -1, 0};
  }
  return w;
}

ParaQuaternionicCheck is_para_quaternionic(const ModelSpace& space, const Subspace& u) {
  ParaQuaternionicCheck out;
  out.para_quaternionic = stabilizer(u).dim() == 3;
  require(out.para_quaternionic == (maximal_pq(u) == u), "para-quaternionic: stabilizer and U0 disagree");
  out.e_prime = p1p2(u).e1;
  if (!out.para_quaternionic) return out;
  require(tensor_h(out.e_prime) == u, "para-quaternionic: U != H (x) p1(U)");
  const Matrix om = omega_on(space, out.e_prime.basis(), out.e_prime.basis());
  out.hermitian = nondegenerate(om);
  Matrix rows(0, space.dim());
  for (const HVector& h : {HVector{1, 0}, HVector{0, 1}})
    for (std::size_t i = 0; i < out.e_prime.dim(); ++i) rows.append_row(Vector::decomposable(h, out.e_prime.basis().row(i)).coords());
  const Matrix g = kernels::matmul(kernels::matmul(rows, space.gram()), rows.transpose());
  const std::size_t k = out.e_prime.dim();
  Matrix block(2 * k, 2 * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      block(i, k + j) = om(i, j);
      block(k + i, j) = -om(i, j);
    }
  out.gram_matches_block = g == block;
  require(out.hermitian == (signature(space, u).null == 0), "para-quaternionic: Hermitian test disagrees with signature");
  return out;
}

Subspace invariant_complement(const Operator& a, const Subspace& u, const Subspace& u0) {
  if (u0.is_zero()) return u;
  const Subspace c = echelon_complement(u, u0);
  if (c.is_zero()) return c;
  const Matrix stacked = vstack(u0.basis(), c.basis());
  // Component along c of x in u.
  auto project = [&](const std::vector<Rational>& x) {
    Matrix sys = stacked.transpose();
    Matrix aug(sys.rows(), sys.cols() + 1);
    for (std::size_t i = 0; i < sys.rows(); ++i) {
      for (std::size_t j = 0; j < sys.cols(); ++j) aug(i, j) = sys(i, j);
      aug(i, sys.cols()) = -x[i];
    }
    const Matrix ns = kernels::nullspace(aug);
    if (ns.rows() != 1 || sgn(ns(0, sys.cols())) == 0) throw InvariantError("invariant_complement: vector not in U");
    const Rational scale = ns(0, sys.cols());
    std::vector<Rational> out(x.size());
    for (std::size_t r = 0; r < c.dim(); ++r) {
      const Rational coef = ns(0, u0.dim() + r) / scale;
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += coef * c.basis()(r, j);
    }
    return out;
  };
  const Rational q = a.q();
  Matrix rows(0, u.ambient());
  for (std::size_t r = 0; r < c.dim(); ++r) {
    const Vector x = c.vector(r);
    // A^{-1} = -A / q.
    const Vector pax(project(apply_operator(a, x).coords()));
    const Vector back = (Rational(-1) / q) * apply_operator(a, pax);
    rows.append_row((Rational(1, 2) * (x + back)).coords());
  }
  Subspace out = Subspace::span(std::move(rows));
  require(out.dim() == c.dim() && intersect(out, u0).is_zero() && preserves(a, out),
          "invariant_complement: averaged projection failed");
  return out;
}

ScaledPresentation scaled_presentation(const Operator& a, const Subspace& part) {
  const Rational q = a.q();
  if (sgn(q) == 0) throw InvariantError("scaled presentation: witness is nilpotent");
  const Matrix m = a.matrix2();
  Rational c;
  HVector v;
  for (const HVector& cand : {HVector{1, 0}, HVector{0, 1}, HVector{1, 1}}) {
    c = (a.alpha + a.beta) * cand[0] * cand[0] + 2 * a.gamma * cand[0] * cand[1] + (a.alpha - a.beta) * cand[1] * cand[1];
    if (sgn(c) != 0) {
      v = cand;
      break;
    }
  }
  if (sgn(c) == 0) throw InvariantError("scaled presentation: zero witness");
  const Rational mv0 = m(0, 0) * v[0] + m(0, 1) * v[1];
  const Rational mv1 = m(1, 0) * v[0] + m(1, 1) * v[1];
  const HBasisChange s(Matrix{{v[0], mv0 / c}, {v[1], mv1 / c}});
  ScaledPresentation out{a, c, c * c / q, to_uft(part, s)};
  const Matrix t = restrict_to_f(out.uft);
  require(t * t == -out.kappa * Matrix::identity(t.rows()), "scaled presentation: T^2 != -kappa Id");
  return out;
}

std::vector<Operator> partners(const Operator& a) {
  const Matrix ns = kernels::nullspace(Matrix{{a.alpha, -a.beta, -a.gamma}});
  std::vector<Operator> out;
  for (std::size_t r = 0; r < ns.rows(); ++r) out.push_back({ns(r, 0), ns(r, 1), ns(r, 2)});
  return out;
}

bool orthogonal_under(const ModelSpace& space, const Subspace& u, const std::vector<Operator>& bs) {
  if (u.is_zero()) return true;
  const Matrix gu = kernels::matmul(space.gram(), u.basis().transpose());
  for (const auto& b : bs) {
    const Matrix bx = kernels::matmul(u.basis(), operator_matrix(b, space.n()).transpose());
    if (!kernels::matmul(bx, gu).is_zero()) return false;
  }
  return true;
}

namespace {

void require_witness(const Operator& a, const Subspace& u, int expected_sign, const char* what) {
  if (sgn(a.q()) != expected_sign || a.is_zero()) throw InvariantError(std::string(what) + ": witness has the wrong type");
  if (!preserves(a, u)) throw InvariantError(std::string(what) + ": witness does not preserve U");
}

// omega(Tf_i, Tf_j) == kappa omega(f_i, f_j) for all i, j.
bool scaled_omega_condition(const ModelSpace& space, const UFTForm& u, const Rational& kappa) {
  const Matrix tf = columns_as_rows(u.t);
  return omega_on(space, tf, tf) == kappa * omega_on(space, u.f.basis(), u.f.basis());
}

} // namespace

ComplexFragment check_complex(const ModelSpace& space, const Subspace& u, const Operator& a) {
  require_witness(a, u, 1, "check_complex");
  ComplexFragment out;
  out.witness = a;
  out.part = invariant_complement(a, u, maximal_pq(u));
  out.presentation = scaled_presentation(a, out.part);
  const UFTForm& pres = out.presentation.uft;
  const Rational& c = out.presentation.c;
  const Rational q = a.q();

  out.g_f = induced_gF(space, pres);
  out.signature = signature(space, out.part);
  require(kernels::inertia(out.g_f) == out.signature, "check_complex: g_F and Gram signatures differ");
  require(out.signature.positive % 2 == 0 && out.signature.null % 2 == 0 && out.signature.negative % 2 == 0,
          "check_complex: signature is not of type (2p,2s,2q)");
  out.hermitian = out.signature.null == 0;

  const Matrix om = omega_on(space, pres.f.basis(), pres.f.basis());
  const Matrix tf = columns_as_rows(pres.t);
  out.kahler = -(c * om + (q / c) * omega_on(space, tf, tf));
  const Matrix x = graph_rows(pres);
  const Matrix ax = kernels::matmul(x, operator_matrix(a, space.n()).transpose());
  require(kernels::matmul(kernels::matmul(ax, space.gram()), x.transpose()) == out.kahler,
          "check_complex: Kahler form disagrees with g(A.,.)");

  out.f_symplectic = nondegenerate(om);
  out.t_preserves_omega = scaled_omega_condition(space, pres, out.presentation.kappa);
  out.gram_test = orthogonal_under(space, out.part, partners(a));
  out.totally_complex = out.hermitian && out.gram_test;
  require(out.totally_complex == (out.f_symplectic && out.t_preserves_omega),
          "check_complex: totally complex tests disagree");
  return out;
}

ParaComplexFragment check_para_complex(const ModelSpace& space, const Subspace& u, const Operator& a) {
  require_witness(a, u, -1, "check_para_complex");
  ParaComplexFragment out;
  out.witness = a;
  const Subspace u0 = maximal_pq(u);
  out.part = invariant_complement(a, u, u0);
  out.presentation = scaled_presentation(a, out.part);
  const UFTForm& pres = out.presentation.uft;
  const Rational q = a.q();
  const Rational d = -q;
  const std::size_t k = out.part.dim();

  // (d+ - d-)^2 = tr(T)^2 / (-kappa); the sign of the eigenvalue of A on
  // the graph vector of a T-eigenvector f is sign(c) sign(tau).
  const Rational tr = trace(restrict_to_f(pres));
  const auto delta = rational_sqrt(tr * tr / -out.presentation.kappa);
  require(delta && delta->get_den() == 1 && *delta <= static_cast<long>(k), "check_para_complex: eigenspace defect is not integral");
  const long dl = delta->get_num().get_si();
  const long signed_delta = sgn(out.presentation.c) * sgn(tr) < 0 ? -dl : dl;
  require((static_cast<long>(k) + signed_delta) % 2 == 0, "check_para_complex: eigenspace dimensions have wrong parity");
  out.d_plus = static_cast<std::size_t>((static_cast<long>(k) + signed_delta) / 2) + u0.dim() / 2;
  out.d_minus = static_cast<std::size_t>((static_cast<long>(k) - signed_delta) / 2) + u0.dim() / 2;
  out.para_complex = out.d_plus == out.d_minus;

  // m = rank of [g(P+ u_i, P- u_j)] = rank(s G - H), s = sqrt(-q), H_ij = g(u_i, A u_j).
  const Matrix g = gram(space, out.part);
  const Matrix au = kernels::matmul(out.part.basis(), operator_matrix(a, space.n()).transpose());
  const Matrix h = kernels::matmul(kernels::matmul(out.part.basis(), space.gram()), au.transpose());
  if (const auto s = rational_sqrt(d)) {
    out.m = kernels::rank(*s * g - h);
  } else {
    std::vector<std::vector<Quad>> mq(k, std::vector<Quad>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) mq[i][j] = {-h(i, j), g(i, j)};
    out.m = rank_quadratic(std::move(mq), d);
  }
  out.signature = signature(space, out.part);
  require(out.signature.positive == out.m && out.signature.negative == out.m && out.signature.null == k - 2 * out.m,
          "check_para_complex: signature is not (m, k-2m, m)");
  out.hermitian = out.signature.null == 0;
  if (!out.para_complex) require(!out.hermitian, "check_para_complex: weakly para-complex part is nondegenerate");

  const Matrix om = omega_on(space, pres.f.basis(), pres.f.basis());
  out.f_symplectic = nondegenerate(om);
  out.omega_condition = scaled_omega_condition(space, pres, out.presentation.kappa);
  out.gram_test = orthogonal_under(space, out.part, partners(a));
  out.totally_para_complex = out.para_complex && out.hermitian && out.gram_test;
  require(out.totally_para_complex == (out.f_symplectic && out.omega_condition),
          "check_para_complex: totally para-complex tests disagree");

  if (const auto s = rational_sqrt(d)) {
    const Matrix m2 = a.matrix2();
    EigenPresentation e;
    e.plus = normalize_direction(kernel_direction(m2 - *s * Matrix::identity(2)));
    e.minus = normalize_direction(kernel_direction(m2 + *s * Matrix::identity(2)));
    e.e_plus = fiber(out.part, e.plus);
    e.e_minus = fiber(out.part, e.minus);
    require(sum(tensor(e.plus, e.e_plus), tensor(e.minus, e.e_minus)) == out.part &&
                e.e_plus.dim() + u0.dim() / 2 == out.d_plus && e.e_minus.dim() + u0.dim() / 2 == out.d_minus,
            "check_para_complex: eigenspace presentation disagrees");
    out.eigen = std::move(e);
  }
  const Stabilizer st = stabilizer(u);
  out.witness_family = st.dim() == 2 ? st.basis : Matrix(0, 3);
  return out;
}

NilpotentFragment check_nilpotent(const ModelSpace& space, const Subspace& u, const Operator& a) {
  require_witness(a, u, 0, "check_nilpotent");
  NilpotentFragment out;
  out.witness = a;
  out.degree = u.is_zero() ? 0 : (image(a, u).is_zero() ? 1 : 2);
  out.kernel_direction = normalize_direction(kernel_direction(a.matrix2()));
  const HVector& h = out.kernel_direction;
  const HBasisChange s = sgn(h[0]) != 0 ? HBasisChange(Matrix{{h[0], 0}, {h[1], 1 / h[0]}})
                                        : HBasisChange(Matrix{{h[0], -1 / h[1]}, {h[1], 0}});
  const Subspace p2 = p1p2(u, s).e2;
  // h1' (x) e for e in p2, in fixed coordinates.
  Matrix lifted(0, u.ambient());
  for (std::size_t i = 0; i < p2.dim(); ++i) lifted.append_row(Vector::decomposable(h, p2.basis().row(i)).coords());
  out.criterion = contains(u, Subspace::span(std::move(lifted)));
  require(out.criterion, "check_nilpotent: h1 (x) p2(U) is not contained in U");

  const Subspace u0 = maximal_pq(u);
  out.e0 = p1p2(u0).e1;
  out.pq_part = u0;
  const Subspace f1 = fiber(u, h);
  out.e1pp = echelon_complement(f1, out.e0);
  out.dec_part = tensor(h, out.e1pp);
  out.real_part = echelon_complement(u, sum(out.pq_part, out.dec_part));
  require(sum(sum(out.pq_part, out.dec_part), out.real_part) == u &&
              out.pq_part.dim() + out.dec_part.dim() + out.real_part.dim() == u.dim(),
          "check_nilpotent: decomposition does not recompose");
  out.p2_symplectic = nondegenerate(omega_on(space, p2.basis(), p2.basis()));
  return out;
}

bool is_real(const Subspace& u) {
  if (u.is_zero() || !maximal_pq(u).is_zero()) return false;
  const auto pres = to_uft(u);
  if (!pres) return false;
  return invariant_core(injectivize(*pres)).w.is_zero();
}

TotallyRealCheck check_totally_real(const ModelSpace& space, const Subspace& u) {
  if (!is_real(u)) throw InvariantError("check_totally_real: subspace is not real");
  if (signature(space, u).null != 0) throw InvariantError("check_totally_real: subspace is not Hermitian");
  TotallyRealCheck out;
  const UFTForm pres = injectivize(*to_uft(u));
  const Matrix tf = columns_as_rows(pres.t);
  const Matrix& f = pres.f.basis();
  out.e1_isotropic = omega_on(space, f, f).is_zero();
  out.e2_isotropic = omega_on(space, tf, tf).is_zero();
  const Matrix tf_f = omega_on(space, tf, f);
  out.t_skew = tf_f == tf_f.transpose();  // omega(Tf, f') = -omega(f, Tf')
  out.gram_test = orthogonal_under(space, u, {Operator::I(), Operator::J(), Operator::K()});
  out.totally_real = out.gram_test;
  require(out.totally_real == (out.e1_isotropic && out.e2_isotropic && out.t_skew),
          "check_totally_real: omega conditions disagree with the Gram test");
  out.e1_e2_disjoint = intersect(pres.f, Subspace::span(tf)).is_zero();
  const Matrix x = graph_rows(pres);
  const Matrix g = kernels::matmul(kernels::matmul(x, space.gram()), x.transpose());
  out.gram_formula = g == Rational(2) * omega_on(space, f, tf);
  if (out.totally_real) {
    require(out.e1_e2_disjoint, "check_totally_real: E1 and E2 intersect");
    require(out.gram_formula, "check_totally_real: Gram differs from 2 omega(e, Te')");
    require(u.dim() <= space.n(), "check_totally_real: dim U > n");
  }
  return out;
}

} // namespace pqh
