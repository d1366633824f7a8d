// Acceptance run: one PASS/FAIL line per criterion, all comparisons exact.
// Usage: acceptance [path-to-pqh golden-dir]; without arguments the golden
// replay of criterion 11 is skipped and only in-process determinism runs.

#include "pqh/error.hpp"
#include "pqh/io.hpp"
#include "pqh/oracle.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace pqh;
using Clock = std::chrono::steady_clock;

namespace {

class Tally {
public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    failures_ += ok ? 0 : 1;
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (!ok()) os << ", " << failures_ << " failed; first: " << first_failure_;
    return os.str();
  }

private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

// (a, b) -> (S (x) P)(a, b) for S in SL(H), P in Sp(E).
Matrix move(const Matrix& rows, const HBasisChange& s, const Matrix& p) {
  const std::size_t d = p.rows();
  const Matrix& m = s.matrix();
  Matrix out(0, rows.cols());
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    const Vector x(rows.row_vector(i));
    const auto a = p * x.h1_part(), b = p * x.h2_part();
    std::vector<Rational> c(2 * d);
    for (std::size_t j = 0; j < d; ++j) {
      c[j] = m(0, 0) * a[j] + m(0, 1) * b[j];
      c[d + j] = m(1, 0) * a[j] + m(1, 1) * b[j];
    }
    out.append_row(c);
  }
  return out;
}

// Graph rows h1 (x) f_i + h2 (x) T f_i, where T acts on the coordinates of
// F = rowspace(f) by the matrix tc (column i = coordinates of T f_i).
Matrix graph(const Matrix& f, const Matrix& tc) {
  Matrix rows(0, 2 * f.cols());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    std::vector<Rational> tf(f.cols());
    for (std::size_t j = 0; j < f.rows(); ++j)
      for (std::size_t c = 0; c < f.cols(); ++c) tf[c] += tc(j, i) * f(j, c);
    rows.append_row(Vector(f.row(i), tf).coords());
  }
  return rows;
}

Matrix block_repeat(const Matrix& b, std::size_t copies) {
  Matrix m(2 * copies, 2 * copies);
  for (std::size_t k = 0; k < copies; ++k)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(2 * k + i, 2 * k + j) = b(i, j);
  return m;
}

Matrix omega_on(const ModelSpace& sp, const Matrix& a, const Matrix& b) {
  return kernels::matmul(kernels::matmul(a, sp.omega()), b.transpose());
}

Matrix columns_as_rows(const Matrix& t) { return t.transpose(); }

// Structure T = P T0 P^-1 on F, either on a random F or on the Darboux
// span(e_1..e_k) with P symplectic (which keeps omega-conditions intact).
struct FT {
  ModelSpace space;
  Subspace u;
};
FT random_ft(Rng& rng, std::size_t n, const Matrix& t0, bool darboux) {
  const std::size_t k = t0.rows(), d = 2 * n;
  ModelSpace sp = ModelSpace::standard(n);
  Matrix f(k, d), p;
  if (darboux) {
    for (std::size_t i = 0; i < k; ++i) f(i, i) = 1;
    p = random_symplectic(rng, block_repeat(Matrix{{0, 1}, {-1, 0}}, k / 2));
  } else {
    f = random_independent_rows(rng, k, d);
    p = random_invertible(rng, k);
  }
  const Matrix rows = graph(f, p * t0 * kernels::inverse(p));
  return {sp, Subspace::span(move(rows, random_sl2(rng), random_symplectic(rng, sp.omega())))};
}

// ---------------------------------------------------------------------------

Tally criterion_algebra() {
  Tally t;
  for (std::size_t n = 1; n <= 4; ++n) {
    const Matrix i = operator_matrix(Operator::I(), n), j = operator_matrix(Operator::J(), n),
                 k = operator_matrix(Operator::K(), n), id = Matrix::identity(4 * n);
    const Matrix g = ModelSpace::standard(n).gram();
    const std::string at = " (n = " + std::to_string(n) + ")";
    t.check(i * i == -id, "I^2 != -Id" + at);
    t.check(j * j == id, "J^2 != Id" + at);
    t.check(k * k == id, "K^2 != Id" + at);
    t.check(i * j == k, "IJ != K" + at);
    t.check(i * j == -(j * i) && i * k == -(k * i) && j * k == -(k * j), "anticommutation fails" + at);
    for (const Matrix* a : {&i, &j, &k}) t.check(a->transpose() * g == -(g * *a), "structure not g-skew" + at);
  }
  return t;
}

Tally criterion_neutrality() {
  Tally t;
  for (std::size_t n = 1; n <= 4; ++n) {
    const ModelSpace sp = ModelSpace::standard(n);
    t.check(signature(sp, Subspace::whole(4 * n)) == SignatureTriple{2 * n, 0, 2 * n},
            "V not neutral for n = " + std::to_string(n));
    t.check(descartes_inertia(sp.gram()) == SignatureTriple{2 * n, 0, 2 * n}, "Descartes count not neutral");
    bool rejected = false;
    try {
      metric_g(sp, Vector(std::vector<Rational>(4 * n + 2)), Vector(std::vector<Rational>(4 * n + 2)));
    } catch (const InvariantError&) {
      rejected = true;
    }
    t.check(rejected, "model accepted a vector outside dimension 4n");
    rejected = false;
    try {
      ModelSpace(n, ModelSpace::standard(n + 1).omega());
    } catch (const InvariantError&) {
      rejected = true;
    }
    t.check(rejected, "model accepted omega_E of the wrong size");
  }
  return t;
}

Tally criterion_para_quaternionic() {
  Tally t;
  Rng rng(3001);
  for (int s = 0; s < 200; ++s) {
    const std::size_t n = 1 + rng.below(3), d = 2 * n;
    const ModelSpace sp = ModelSpace::standard(n);
    const Subspace ep = Subspace::span(random_matrix(rng, 1 + rng.below(d), d));
    // Half the samples are H (x) E', half are H (x) E' plus a random vector.
    Subspace u = tensor_h(ep);
    if (s % 2) u = sum(u, Subspace::span(random_matrix(rng, 1, 2 * d)));
    const P1P2 pp = p1p2(u);
    const bool is_tensor = u == tensor_h(sum(pp.e1, pp.e2));
    t.check(is_tensor == (stabilizer(u).dim() == 3), "H (x) E' disagrees with dim stab = 3");
    t.check(is_tensor == (maximal_pq(u) == u), "H (x) E' disagrees with U0 = U");
    t.check((s % 2 == 0) <= is_tensor, "H (x) E' not recognized");
    if (!is_tensor) continue;
    // Basis h1 (x) e_i, h2 (x) e_i: Gram = [[0, w], [-w, 0]] with w = omega|E'.
    const Matrix e = ep.basis();
    Matrix rows(0, 2 * d);
    for (std::size_t i = 0; i < e.rows(); ++i) rows.append_row(Vector::decomposable({1, 0}, e.row(i)).coords());
    for (std::size_t i = 0; i < e.rows(); ++i) rows.append_row(Vector::decomposable({0, 1}, e.row(i)).coords());
    const Matrix w = omega_on(sp, e, e);
    const Matrix z(e.rows(), e.rows());
    const Matrix g = kernels::matmul(kernels::matmul(rows, sp.gram()), rows.transpose());
    t.check(g == vstack(hstack(z, w), hstack(-w, z)), "para-quaternionic Gram is not block form");
    const auto r = classify(sp, u);
    t.check(r.hermitian == (sgn(kernels::determinant(w)) != 0), "Hermitian disagrees with omega|E' nondegenerate");
  }
  return t;
}

Tally criterion_complex() {
  Tally t;
  Rng rng(4001);
  const Matrix rot{{0, -1}, {1, 0}};
  for (int s = 0; s < 200; ++s) {
    const std::size_t n = 1 + rng.below(3);
    const std::size_t k = 2 * (1 + rng.below(n));
    const FT ft = random_ft(rng, n, block_repeat(rot, k / 2), s % 2 == 0);
    const auto r = classify(ft.space, ft.u);
    t.check(r.complex && r.pure, "complex graph not classified as complex");
    if (!r.complex) continue;
    const ComplexFragment f = check_complex(ft.space, ft.u, *r.complex_witness);
    // g_F against the Gram of the graph vectors computed by metric_g.
    const UFTForm& p = f.presentation.uft;
    const std::size_t m = p.f.dim();
    Matrix pulled(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const Vector xi = from_basis(p.h_basis, Vector(p.f.basis().row(i), p.apply(p.f.basis().row(i))));
        const Vector xj = from_basis(p.h_basis, Vector(p.f.basis().row(j), p.apply(p.f.basis().row(j))));
        pulled(i, j) = metric_g(ft.space, xi, xj);
      }
    t.check(pulled == f.g_f, "g_F differs from the pulled-back metric");
    const Matrix tf = columns_as_rows(p.t);
    const bool omega_preserved =
        r.hermitian && omega_on(ft.space, tf, tf) == f.presentation.kappa * omega_on(ft.space, p.f.basis(), p.f.basis());
    const bool gram_test = r.hermitian && orthogonal_under(ft.space, ft.u, partners(*r.complex_witness));
    t.check(r.totally_complex == omega_preserved, "totally_complex disagrees with T preserving omega");
    t.check(r.totally_complex == gram_test, "totally_complex disagrees with the Gram test");
    if (s % 2 == 0) t.check(r.totally_complex, "Darboux complex graph not totally complex");
  }
  return t;
}

Tally criterion_para_complex() {
  Tally t;
  Rng rng(5001);
  for (int s = 0; s < 200; ++s) {
    const std::size_t n = 1 + rng.below(3);
    const std::size_t k = 2 * (1 + rng.below(n));
    // Balanced eigenvalues on even samples, arbitrary split otherwise.
    const std::size_t plus = s % 2 == 0 ? k / 2 : rng.below(k + 1);
    Matrix t0(k, k);
    if (s % 4 == 0) {
      t0 = block_repeat(Matrix{{1, 0}, {0, -1}}, k / 2);
    } else {
      for (std::size_t i = 0; i < k; ++i) t0(i, i) = i < plus ? 1 : -1;
    }
    const FT ft = random_ft(rng, n, t0, s % 4 == 0);
    const auto r = classify(ft.space, ft.u);
    t.check(r.weakly_para_complex, "product-structure graph not weakly para-complex");
    if (!r.weakly_para_complex) continue;
    const ParaComplexFragment f = check_para_complex(ft.space, ft.u, *r.para_complex_witness);
    const std::size_t dim = f.part.dim();
    t.check(f.signature == SignatureTriple{f.m, dim - 2 * f.m, f.m}, "signature is not (m, k - 2m, m)");
    if (r.para_complex && r.hermitian)
      t.check(r.signature.positive == r.signature.negative, "strict Hermitian para-complex not neutral");
    if (!r.pure) continue;
    const UFTForm& p = f.presentation.uft;
    const Matrix tf = columns_as_rows(p.t);
    const bool omega_condition = r.para_complex && r.hermitian &&
                                 omega_on(ft.space, tf, tf) ==
                                     f.presentation.kappa * omega_on(ft.space, p.f.basis(), p.f.basis());
    const bool gram_test =
        r.para_complex && r.hermitian && orthogonal_under(ft.space, ft.u, partners(*r.para_complex_witness));
    t.check(r.totally_para_complex == omega_condition, "totally_para_complex disagrees with the omega condition");
    t.check(r.totally_para_complex == gram_test, "totally_para_complex disagrees with the Gram test");
    if (s % 4 == 0) t.check(r.totally_para_complex, "Darboux para-complex graph not totally para-complex");
  }
  return t;
}

Tally criterion_real() {
  Tally t;
  const ModelSpace sp1 = ModelSpace::standard(1), sp2 = ModelSpace::standard(2);
  auto rows = [](std::vector<std::vector<Rational>> r) { return Subspace::span(Matrix::from_rows(r, r[0].size())); };
  struct Curated {
    const ModelSpace* sp;
    Subspace u;
    bool real, totally_real;
    const char* name;
  };
  const std::vector<Curated> curated = {
      {&sp1, rows({{1, 0, 0, 1}}), true, true, "h1 (x) e1 + h2 (x) e2"},
      {&sp2, rows({{1, 0, 0, 0, 0, 0, 1, 0}}), true, false, "h1 (x) e1 + h2 (x) e3 (isotropic)"},
      {&sp2, rows({{1, 0, 0, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 1}}), true, true, "two orthogonal real lines"},
      {&sp2, rows({{1, 0, 0, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 2}}), true, true, "T = diag scaling"},
      {&sp1, rows({{1, 0, 0, 1}, {0, 1, -1, 0}}), false, false, "complex plane"},
      {&sp1, rows({{1, 0, 0, 0}}), false, false, "decomposable line"},
  };
  for (const auto& c : curated) {
    const auto r = classify(*c.sp, c.u);
    t.check(r.real == c.real, std::string("real flag wrong on ") + c.name);
    t.check(r.totally_real == c.totally_real, std::string("totally_real flag wrong on ") + c.name);
  }
  Rng rng(6001);
  for (int s = 0; s < 100; ++s) {
    const Instance in = generate(InstanceKind::TotallyReal, 6001 + s, 1 + rng.below(3), std::nullopt);
    const Subspace u = Subspace::span(in.vectors);
    const auto r = classify(in.space, u);
    t.check(r.totally_real, "generated totally real subspace not detected");
    const auto p = to_uft(u);
    if (!p) continue;
    const Matrix tf = columns_as_rows(p->t);
    const Matrix graph_rows = [&] {
      Matrix m(0, u.ambient());
      for (std::size_t i = 0; i < p->f.dim(); ++i)
        m.append_row(from_basis(p->h_basis, Vector(p->f.basis().row(i), tf.row(i))).coords());
      return m;
    }();
    const Matrix gram_direct = kernels::matmul(kernels::matmul(graph_rows, in.space.gram()), graph_rows.transpose());
    t.check(gram_direct == Rational(2) * omega_on(in.space, p->f.basis(), tf), "totally real Gram != 2 omega(e, Te')");
  }
  for (int s = 0; s < 500; ++s) {
    const std::size_t n = 1 + rng.below(3);
    const Instance in = generate(s % 2 ? InstanceKind::Random : InstanceKind::Real, 7001 + s, n,
                                 s % 2 ? rng.below(4 * n + 1) : 1 + rng.below(n));
    const auto r = classify(in.space, Subspace::span(in.vectors));
    if (r.real) t.check(r.dim <= 2 * n, "real subspace with dim > 2n");
    if (r.totally_real) t.check(r.dim <= n, "totally real subspace with dim > n");
  }
  return t;
}

Tally criterion_nilpotent() {
  Tally t;
  Rng rng(8001);
  for (int s = 0; s < 200; ++s) {
    const std::size_t n = 1 + rng.below(3);
    const InstanceKind kind = s % 3 == 0 ? InstanceKind::Decomposable : InstanceKind::Nilpotent;
    const std::size_t dim = kind == InstanceKind::Decomposable ? 1 + rng.below(2 * n) : 2 + rng.below(2 * n - 1);
    const Instance in = generate(kind, 8001 + s, n, dim);
    const Subspace u = Subspace::span(in.vectors);
    const auto r = classify(in.space, u);
    t.check(r.nilpotent, "nilpotent-stabilized instance not flagged");
    if (!r.nilpotent) continue;
    const NilpotentFragment f = check_nilpotent(in.space, u, *r.nilpotent_witness);
    const bool decomposable = u == tensor(f.kernel_direction, fiber(u, f.kernel_direction));
    t.check(decomposable == (f.degree == 1), "decomposable disagrees with degree 1");
    t.check(f.criterion == preserves(*r.nilpotent_witness, u), "h (x) p2(U) criterion disagrees with invariance");
    t.check(sum(sum(f.pq_part, f.dec_part), f.real_part) == u &&
                f.pq_part.dim() + f.dec_part.dim() + f.real_part.dim() == u.dim(),
            "nilpotent decomposition does not recompose");
    t.check(contains(f.pq_part, maximal_pq(u)) && maximal_pq(f.pq_part) == f.pq_part, "H (x) E0 part is not para-quaternionic");
    t.check(image(*r.nilpotent_witness, f.dec_part).is_zero(), "decomposable part not killed by the witness");
  }
  return t;
}

Tally criterion_uft() {
  Tally t;
  Rng rng(9001);
  std::size_t round_trips = 0;
  for (int s = 0; s < 400 && round_trips < 200; ++s) {
    const std::size_t n = 1 + rng.below(3);
    const InstanceKind kind = all_instance_kinds()[rng.below(all_instance_kinds().size())];
    Instance in = generate(InstanceKind::Random, 9001 + s, n, rng.below(4 * n + 1));
    try {
      in = generate(kind, 9001 + s, n, std::nullopt);
    } catch (const InvariantError&) {
    }
    const Subspace u = Subspace::span(in.vectors);
    std::size_t tried = 0;
    const auto h = find_transversal_direction(u, &tried);
    if (h) {
      t.check(tried <= u.dim() + 2, "transversal search needed more than dim U + 2 candidates");
    } else {
      // No transversal: every direction tried at random must meet U.
      bool all_meet = true;
      for (int k = 0; k < 20 && all_meet; ++k) {
        HVector d{rng.rational(), rng.rational()};
        if (sgn(d[0]) == 0 && sgn(d[1]) == 0) d[1] = 1;
        all_meet = !fiber(u, d).is_zero();
      }
      t.check(all_meet, "transversal search missed an existing direction");
      continue;
    }
    const UFTForm f = to_uft(u, HBasisChange::with_second(*h));
    t.check(from_uft(f) == u, "U^{F,T} presentation does not reproduce U");
    const HBasisChange c = random_sl2(rng);
    try {
      t.check(from_uft(uft_change_basis(f, c)) == u, "basis change changed the span");
      ++round_trips;
    } catch (const InvariantError&) {
      // new second vector meets U: the formula does not apply
    }
    if (maximal_pq(u).is_zero()) {
      const PencilSpectrum p = decomposable_spectrum(u);
      t.check(p.directions.size() <= u.dim(), "more decomposable directions than dim U");
    }
  }
  t.check(round_trips >= 200, "fewer than 200 basis-change round-trips");
  return t;
}

Tally criterion_generic() {
  Tally t;
  Rng rng(10001);
  for (int s = 0; s < 200; ++s) {
    const std::size_t n = 1 + rng.below(3);
    const std::size_t cap = std::min<std::size_t>(6, 4 * n);
    Subspace u;
    ModelSpace sp = ModelSpace::standard(n);
    if (s % 3 == 0) {
      u = Subspace::span(generate(InstanceKind::Random, 10001 + s, n, rng.below(cap + 1)).vectors);
    } else {
      // Structured pieces plus random vectors exercise every addend kind.
      const InstanceKind kinds[] = {InstanceKind::Complex, InstanceKind::ParaComplex, InstanceKind::Nilpotent,
                                    InstanceKind::ParaQuaternionic, InstanceKind::Decomposable};
      const InstanceKind k = kinds[rng.below(5)];
      u = Subspace::span(generate(k, 10001 + s, n, std::nullopt).vectors);
      const std::size_t extra = rng.below(cap - u.dim() + 1);
      u = sum(u, Subspace::span(random_matrix(rng, extra, 4 * n)));
    }
    const auto addends = generic_decompose(u);
    const OracleResult o = oracle_decomposition(sp, u, addends);
    t.check(o.ok(), o.ok() ? "" : o.violations.front());
    for (const auto& a : addends)
      if (a.factor && a.witness && a.factor->degree() <= 2)
        t.check(preserves(*a.witness, a.space), "quadratic witness fails on its addend");
  }
  // Invariance identity for A = (1 - q, -1 - q, -p) on companion graphs.
  for (int s = 0; s < 200; ++s) {
    const Rational p = rng.rational(), q = rng.rational();
    const Operator a = quadratic_witness(Poly({-q, -p, 1}));
    const Matrix tm{{0, q}, {1, p}};
    Matrix f(2, 2);
    f(0, 0) = f(1, 1) = 1;
    t.check(a == Operator{1 - q, -1 - q, -p} && preserves(a, Subspace::span(graph(f, tm))),
            "quadratic witness identity fails");
  }
  return t;
}

Tally criterion_product() {
  Tally t;
  Rng rng(11001);
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = 1 + rng.below(3);
    const ModelSpace sp = ModelSpace::standard(n);
    const Matrix xy = random_matrix(rng, 2, 4 * n);
    const Vector x(xy.row_vector(0)), y(xy.row_vector(1));
    const Rational base = norm(hermitian_product(sp, x, y).imaginary());
    for (int k = 0; k < 20; ++k)
      t.check(norm(hermitian_product(sp, x, y, random_sl2(rng)).imaginary()) == base, "N(Im(X.Y)) not invariant");
  }
  return t;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Replays every golden case through the CLI binary.
void golden_replay(Tally& t, const std::string& pqh, const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> cases;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".args") cases.push_back(e.path());
  std::sort(cases.begin(), cases.end());
  t.check(!cases.empty(), "no golden cases found");
  for (const auto& c : cases) {
    std::istringstream args(slurp(c));
    std::string cmd = "cd '" + dir.string() + "' && '" + std::filesystem::absolute(pqh).string() + "'";
    for (std::string a; std::getline(args, a);)
      if (!a.empty()) cmd += " '" + a + "'";
    cmd += " 2>/dev/null";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    std::array<char, 4096> buf{};
    for (std::size_t got; (got = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), got);
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    auto expected = c;
    t.check(out == slurp(expected.replace_extension(".out")), "golden output differs: " + c.filename().string());
    t.check(std::to_string(code) + "\n" == slurp(expected.replace_extension(".code")),
            "golden exit code differs: " + c.filename().string());
  }
}

Tally criterion_determinism(const std::optional<std::pair<std::string, std::string>>& golden, double elapsed) {
  Tally t;
  for (InstanceKind k : all_instance_kinds()) {
    auto emit = [&] {
      const Instance in = generate(k, 42, 2);
      const Subspace u = Subspace::span(in.vectors);
      Json j = instance_to_json(in);
      j["report"] = report_to_json(classify(in.space, u));
      for (const auto& a : generic_decompose(u)) j["addends"].push_back(addend_to_json(in.space, a));
      return j.dump();
    };
    const std::string first = emit();
    t.check(first == emit(), "output not byte-identical for kind " + to_string(k));
    const Instance in = generate(k, 42, 2);
    const auto r = classify(in.space, Subspace::span(in.vectors));
    t.check(report_from_json(Json::parse(report_to_json(r).dump())) == r, "report does not round-trip");
  }
  if (golden) golden_replay(t, golden->first, golden->second);
  t.check(elapsed < 60.0, "criteria 1-10 took " + std::to_string(elapsed) + " s");
  return t;
}

} // namespace

int main(int argc, char** argv) {
  std::optional<std::pair<std::string, std::string>> golden;
  if (argc == 3) golden = std::make_pair(std::string(argv[1]), std::string(argv[2]));

  const std::vector<std::pair<const char*, std::function<Tally()>>> criteria = {
      {"algebra conformance", criterion_algebra},
      {"neutrality", criterion_neutrality},
      {"para-quaternionic characterization", criterion_para_quaternionic},
      {"complex theorem round-trip", criterion_complex},
      {"para-complex theorem", criterion_para_complex},
      {"real and totally real", criterion_real},
      {"nilpotent", criterion_nilpotent},
      {"U^{F,T} machinery", criterion_uft},
      {"generic decomposition", criterion_generic},
      {"Hermitian product invariance", criterion_product},
  };
  bool all = true;
  double total = 0;
  auto report = [&](std::size_t id, const char* name, const Tally& t, double secs) {
    std::printf("criterion %2zu %s  %-36s %s, %.2f s\n", id, t.ok() ? "PASS" : "FAIL", name, t.summary().c_str(), secs);
    std::fflush(stdout);
    all = all && t.ok();
  };
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Tally t;
    try {
      t = criteria[i].second();
    } catch (const std::exception& e) {
      t.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    total += secs;
    report(i + 1, criteria[i].first, t, secs);
  }
  const auto start = Clock::now();
  Tally t;
  try {
    t = criterion_determinism(golden, total);
  } catch (const std::exception& e) {
    t.check(false, std::string("exception: ") + e.what());
  }
  report(11, "end-to-end determinism", t, std::chrono::duration<double>(Clock::now() - start).count());
  return all ? 0 : 1;
}
