#include "pqh/generate.hpp"

#include "pqh/error.hpp"
#include "pqh/kernels.hpp"

namespace pqh {

Rational Rng::rational() {
  const std::uint64_t r = eng_();
  const long num = static_cast<long>(r % 19) - 9;
  const long den = 1 + static_cast<long>((r >> 8) % 3);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational Rng::nonzero() {
  for (;;) {
    Rational x = rational();
    if (sgn(x) != 0) return x;
  }
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (auto& x : m.raw()) x = rng.rational();
  return m;
}

Matrix random_independent_rows(Rng& rng, std::size_t rows, std::size_t cols) {
  for (;;) {
    Matrix m = random_matrix(rng, rows, cols);
    if (kernels::rank(m) == rows) return m;
  }
}

Matrix random_invertible(Rng& rng, std::size_t n) { return random_independent_rows(rng, n, n); }

Matrix random_symplectic(Rng& rng, const Matrix& omega) {
  const std::size_t d = omega.rows();
  Matrix p = Matrix::identity(d);
  for (std::size_t step = 0; step < d + 2; ++step) {
    Matrix v(d, 1);
    for (std::size_t i = 0; i < d; ++i) v(i, 0) = rng.rational();
    const Rational c = rng.rational();
    p = (Matrix::identity(d) + c * (v * v.transpose() * omega)) * p;
  }
  return p;
}

HBasisChange random_sl2(Rng& rng) {
  const Rational a = rng.rational(), b = rng.rational();
  return HBasisChange(Matrix{{1, a}, {0, 1}} * Matrix{{1, 0}, {b, 1}});
}

namespace {

constexpr std::pair<InstanceKind, const char*> kKindNames[] = {
    {InstanceKind::ParaQuaternionic, "para_quaternionic"},
    {InstanceKind::Complex, "complex"},
    {InstanceKind::TotallyComplex, "totally_complex"},
    {InstanceKind::ParaComplex, "para_complex"},
    {InstanceKind::TotallyParaComplex, "totally_para_complex"},
    {InstanceKind::Nilpotent, "nilpotent"},
    {InstanceKind::Decomposable, "decomposable"},
    {InstanceKind::Real, "real"},
    {InstanceKind::TotallyReal, "totally_real"},
    {InstanceKind::Random, "random"},
};

void require_dim(bool ok, InstanceKind k, std::size_t dim, std::size_t n) {
  if (!ok)
    throw InvariantError("gen: dimension " + std::to_string(dim) + " is not admissible for kind " + to_string(k) +
                         " with n = " + std::to_string(n));
}

// Rows h1 (x) f_i + h2 (x) T f_i, with T given on the rows of `f` by the
// coordinate matrix tc (column i = coordinates of T f_i).
Matrix graph(const Matrix& f, const Matrix& tc) {
  const std::size_t d = f.cols();
  Matrix rows(0, 2 * d);
  for (std::size_t i = 0; i < f.rows(); ++i) {
    std::vector<Rational> tf(d);
    for (std::size_t j = 0; j < f.rows(); ++j)
      for (std::size_t c = 0; c < d; ++c) tf[c] += tc(j, i) * f(j, c);
    rows.append_row(Vector(f.row(i), tf).coords());
  }
  return rows;
}

// Block diagonal of copies of a 2x2 block.
Matrix repeat_block(const Matrix& b, std::size_t copies) {
  Matrix m(2 * copies, 2 * copies);
  for (std::size_t k = 0; k < copies; ++k)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(2 * k + i, 2 * k + j) = b(i, j);
  return m;
}

Matrix darboux_rows(std::size_t count, std::size_t d) {
  Matrix f(count, d);
  for (std::size_t i = 0; i < count; ++i) f(i, i) = 1;
  return f;
}

Matrix conjugate(const Matrix& p, const Matrix& t) { return p * t * kernels::inverse(p); }

Matrix tensor_rows(const std::array<Rational, 2>& h, const Matrix& e) {
  Matrix rows(0, 2 * e.cols());
  for (std::size_t i = 0; i < e.rows(); ++i) rows.append_row(Vector::decomposable(h, e.row(i)).coords());
  return rows;
}

// Graph of a structure T = P T0 P^{-1} on a random subspace F.
Matrix structure_graph(Rng& rng, const Matrix& t0, std::size_t d_e) {
  const std::size_t k = t0.rows();
  const Matrix f = random_independent_rows(rng, k, d_e);
  return graph(f, conjugate(random_invertible(rng, k), t0));
}

// Graph of T0 conjugated by a symplectic map of the Darboux subspace
// span(e_1..e_k), which keeps omega-conditions on (F, T) intact.
Matrix darboux_graph(Rng& rng, const Matrix& t0, std::size_t d_e) {
  const std::size_t k = t0.rows();
  const Matrix p = random_symplectic(rng, repeat_block(Matrix{{0, 1}, {-1, 0}}, k / 2));
  return graph(darboux_rows(k, d_e), conjugate(p, t0));
}

// (a, b) -> (S (x) P)(a, b): an element of SL(H) x Sp(E).
Matrix move(const Matrix& rows, const HBasisChange& s, const Matrix& p) {
  const std::size_t d = p.rows();
  Matrix out(0, rows.cols());
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    const Vector x(rows.row_vector(i));
    const std::vector<Rational> a = p * x.h1_part();
    const std::vector<Rational> b = p * x.h2_part();
    std::vector<Rational> c(2 * d);
    for (std::size_t j = 0; j < d; ++j) {
      c[j] = s.matrix()(0, 0) * a[j] + s.matrix()(0, 1) * b[j];
      c[d + j] = s.matrix()(1, 0) * a[j] + s.matrix()(1, 1) * b[j];
    }
    out.append_row(c);
  }
  return out;
}

} // namespace

std::string to_string(InstanceKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "unknown";
}

InstanceKind instance_kind_from_string(const std::string& s) {
  for (const auto& [kind, name] : kKindNames)
    if (s == name) return kind;
  throw ParseError("unknown kind: " + s);
}

std::vector<InstanceKind> all_instance_kinds() {
  std::vector<InstanceKind> out;
  for (const auto& [kind, name] : kKindNames) out.push_back(kind);
  return out;
}

std::size_t default_dim(InstanceKind k) {
  switch (k) {
  case InstanceKind::Decomposable:
  case InstanceKind::Real:
  case InstanceKind::TotallyReal:
    return 1;
  default:
    return 2;
  }
}

Instance generate(InstanceKind kind, std::uint64_t seed, std::size_t n, std::optional<std::size_t> dim_opt) {
  if (n == 0) throw InvariantError("gen: n must be positive");
  const std::size_t dim = dim_opt.value_or(default_dim(kind));
  const std::size_t de = 2 * n;
  ModelSpace space = ModelSpace::standard(n);
  Rng rng(seed);
  const Matrix rot{{0, -1}, {1, 0}};
  const Matrix refl{{1, 0}, {0, -1}};

  Matrix rows;
  switch (kind) {
  case InstanceKind::ParaQuaternionic: {
    require_dim(dim % 2 == 0 && dim <= 4 * n, kind, dim, n);
    const Matrix e = random_independent_rows(rng, dim / 2, de);
    rows = vstack(tensor_rows({1, 0}, e), tensor_rows({0, 1}, e));
    break;
  }
  case InstanceKind::Complex:
    require_dim(dim % 2 == 0 && dim >= 2 && dim <= de, kind, dim, n);
    rows = structure_graph(rng, repeat_block(rot, dim / 2), de);
    break;
  case InstanceKind::ParaComplex: {
    require_dim(dim % 2 == 0 && dim >= 2 && dim <= de, kind, dim, n);
    Matrix t0(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) t0(i, i) = i < dim / 2 ? 1 : -1;
    rows = structure_graph(rng, t0, de);
    break;
  }
  case InstanceKind::TotallyComplex:
    require_dim(dim % 2 == 0 && dim >= 2 && dim <= de, kind, dim, n);
    rows = darboux_graph(rng, repeat_block(rot, dim / 2), de);
    break;
  case InstanceKind::TotallyParaComplex:
    require_dim(dim % 2 == 0 && dim >= 2 && dim <= de, kind, dim, n);
    rows = darboux_graph(rng, repeat_block(refl, dim / 2), de);
    break;
  case InstanceKind::Nilpotent: {
    // span{h1 (x) y_j, h1 (x) x_j + h2 (x) y_j}: invariant under I - J.
    require_dim(dim >= 2 && dim <= de, kind, dim, n);
    for (;;) {
      const std::size_t r = dim / 2;
      const Matrix y = random_independent_rows(rng, r, de);
      const Matrix x = random_matrix(rng, r, de);
      Matrix cand = tensor_rows({1, 0}, y);
      for (std::size_t j = 0; j < r; ++j) cand.append_row(Vector(x.row(j), y.row(j)).coords());
      if (dim % 2 == 1) cand.append_row(Vector::decomposable({1, 0}, random_matrix(rng, 1, de).row(0)).coords());
      if (kernels::rank(cand) == dim) {
        rows = std::move(cand);
        break;
      }
    }
    break;
  }
  case InstanceKind::Decomposable: {
    require_dim(dim >= 1 && dim <= de, kind, dim, n);
    std::array<Rational, 2> h{rng.rational(), rng.rational()};
    if (sgn(h[0]) == 0 && sgn(h[1]) == 0) h[1] = 1;
    rows = tensor_rows(h, random_independent_rows(rng, dim, de));
    break;
  }
  case InstanceKind::Real: {
    // F cap TF = 0 forces a trivial invariant core.
    require_dim(dim >= 1 && dim <= n, kind, dim, n);
    const Matrix ft = random_independent_rows(rng, 2 * dim, de);
    rows = Matrix(0, 2 * de);
    for (std::size_t i = 0; i < dim; ++i) rows.append_row(Vector(ft.row(i), ft.row(dim + i)).coords());
    break;
  }
  case InstanceKind::TotallyReal: {
    // T e_{2i-1} = sum_j s_ij e_{2j} with s symmetric invertible.
    require_dim(dim >= 1 && dim <= n, kind, dim, n);
    Matrix s(dim, dim);
    do {
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) s(i, j) = s(j, i) = rng.rational();
    } while (sgn(kernels::determinant(s)) == 0);
    rows = Matrix(0, 2 * de);
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<Rational> f(de), tf(de);
      f[2 * i] = 1;
      for (std::size_t j = 0; j < dim; ++j) tf[2 * j + 1] = s(i, j);
      rows.append_row(Vector(f, tf).coords());
    }
    break;
  }
  case InstanceKind::Random:
    require_dim(dim <= 4 * n, kind, dim, n);
    rows = random_independent_rows(rng, dim, 4 * n);
    break;
  }

  const HBasisChange s = random_sl2(rng);
  const Matrix p = random_symplectic(rng, space.omega());
  return {std::move(space), move(rows, s, p), std::nullopt};
}

} // namespace pqh
