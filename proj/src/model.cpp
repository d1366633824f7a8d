#include "pqh/model.hpp"

#include "pqh/error.hpp"
#include "pqh/kernels.hpp"

#include <algorithm>
#include <optional>

namespace pqh {

namespace {

Matrix gram_of(const Matrix& omega) {
  const std::size_t m = omega.rows();
  Matrix g(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      g(i, m + j) = omega(i, j);
      g(m + i, j) = -omega(i, j);
    }
  return g;
}

// omega^H(u, v) with omega^H(h1, h2) = 1.
Rational omega_h(const std::array<Rational, 2>& u, const std::array<Rational, 2>& v) {
  return u[0] * v[1] - u[1] * v[0];
}

std::array<Rational, 2> combine(const std::array<Rational, 2>& u, const std::array<Rational, 2>& v) {
  return {u[0] + v[0], u[1] + v[1]};
}

Matrix structure_matrix(const Operator& a, std::size_t m) { return kron(a.matrix2(), Matrix::identity(m)); }

} // namespace

ModelSpace::ModelSpace(std::size_t n, Matrix omega) : n_(n), omega_(std::move(omega)) {
  if (n == 0) throw InvariantError("model space: n must be positive");
  if (omega_.rows() != 2 * n || omega_.cols() != 2 * n)
    throw InvariantError("model space: omega_E must be " + std::to_string(2 * n) + "x" + std::to_string(2 * n));
  if (!omega_.is_skew()) throw InvariantError("model space: omega_E is not skew-symmetric");
  if (sgn(kernels::determinant(omega_)) == 0) throw InvariantError("model space: omega_E is degenerate");
  gram_ = gram_of(omega_);
}

ModelSpace ModelSpace::standard(std::size_t n) {
  Matrix omega(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    omega(2 * i, 2 * i + 1) = 1;
    omega(2 * i + 1, 2 * i) = -1;
  }
  return ModelSpace(n, std::move(omega));
}

Rational ModelSpace::omega_e(std::span<const Rational> e, std::span<const Rational> f) const {
  return bilinear(e, omega_, f);
}

Vector::Vector(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.size() % 2 != 0) throw InvariantError("vector: odd coordinate count");
}

Vector::Vector(std::span<const Rational> h1_part, std::span<const Rational> h2_part) {
  if (h1_part.size() != h2_part.size()) throw InvariantError("vector: part sizes differ");
  coords_.assign(h1_part.begin(), h1_part.end());
  coords_.insert(coords_.end(), h2_part.begin(), h2_part.end());
}

Vector Vector::zero(std::size_t dim_e) { return Vector(std::vector<Rational>(2 * dim_e)); }

Vector Vector::decomposable(const std::array<Rational, 2>& h, std::span<const Rational> e) {
  std::vector<Rational> c(2 * e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    c[i] = h[0] * e[i];
    c[e.size() + i] = h[1] * e[i];
  }
  return Vector(std::move(c));
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.coords().size() != b.coords().size()) throw InvariantError("vector: dimension mismatch");
  std::vector<Rational> c(a.coords());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords()[i];
  return Vector(std::move(c));
}

Vector operator*(const Rational& s, const Vector& a) {
  std::vector<Rational> c(a.coords());
  for (auto& x : c) x *= s;
  return Vector(std::move(c));
}

Matrix Operator::matrix2() const { return Matrix{{-gamma, beta - alpha}, {alpha + beta, gamma}}; }

Operator Operator::from_matrix2(const Matrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw InvariantError("operator: expected a 2x2 matrix");
  if (sgn(m(0, 0) + m(1, 1)) != 0) throw InvariantError("operator: matrix is not traceless");
  const Rational half(1, 2);
  return {half * (m(1, 0) - m(0, 1)), half * (m(1, 0) + m(0, 1)), m(1, 1)};
}

Operator operator+(const Operator& a, const Operator& b) {
  return {a.alpha + b.alpha, a.beta + b.beta, a.gamma + b.gamma};
}

Operator operator*(const Rational& s, const Operator& a) { return {s * a.alpha, s * a.beta, s * a.gamma}; }

Rational q_polar(const Operator& a, const Operator& b) {
  return a.alpha * b.alpha - a.beta * b.beta - a.gamma * b.gamma;
}

HBasisChange::HBasisChange() : s_(Matrix::identity(2)) {}

HBasisChange::HBasisChange(Matrix s) : s_(std::move(s)) {
  if (s_.rows() != 2 || s_.cols() != 2) throw InvariantError("basis change: expected a 2x2 matrix");
  if (s_(0, 0) * s_(1, 1) - s_(0, 1) * s_(1, 0) != 1) throw InvariantError("basis change: determinant is not 1");
}

HBasisChange HBasisChange::with_second(const std::array<Rational, 2>& h) {
  if (sgn(h[0]) != 0) return HBasisChange(Matrix{{0, h[0]}, {-1 / h[0], h[1]}});
  if (sgn(h[1]) == 0) throw InvariantError("basis change: zero vector");
  return HBasisChange(Matrix{{1 / h[1], 0}, {0, h[1]}});
}

Matrix HBasisChange::inverse_matrix() const { return Matrix{{s_(1, 1), -s_(0, 1)}, {-s_(1, 0), s_(0, 0)}}; }

Matrix operator_matrix(const Operator& a, std::size_t n) { return structure_matrix(a, 2 * n); }

Vector apply_operator(const Operator& a, const Vector& x) {
  const Matrix m = a.matrix2();
  const auto e = x.h1_part();
  const auto f = x.h2_part();
  std::vector<Rational> c(x.coords().size());
  const std::size_t d = x.dim_e();
  for (std::size_t i = 0; i < d; ++i) {
    c[i] = m(0, 0) * e[i] + m(0, 1) * f[i];
    c[d + i] = m(1, 0) * e[i] + m(1, 1) * f[i];
  }
  return Vector(std::move(c));
}

Rational metric_g(const ModelSpace& space, const Vector& x, const Vector& y) {
  if (x.dim_e() != space.dim_e() || y.dim_e() != space.dim_e())
    throw InvariantError("metric: vector does not belong to the model space");
  return space.omega_e(x.h1_part(), y.h2_part()) - space.omega_e(x.h2_part(), y.h1_part());
}

ParaQuaternion hermitian_product(const ModelSpace& space, const Vector& x, const Vector& y,
                                 const HBasisChange& basis) {
  const Operator i = operator_from_basis(basis, Operator::I());
  const Operator j = operator_from_basis(basis, Operator::J());
  const Operator k = operator_from_basis(basis, Operator::K());
  return {metric_g(space, x, y), metric_g(space, x, apply_operator(i, y)), -metric_g(space, x, apply_operator(j, y)),
          -metric_g(space, x, apply_operator(k, y))};
}

Operator change_admissible_basis(const HBasisChange& s, const Operator& a) {
  return Operator::from_matrix2(s.inverse_matrix() * a.matrix2() * s.matrix());
}

Operator operator_from_basis(const HBasisChange& s, const Operator& a_in_s) {
  return Operator::from_matrix2(s.matrix() * a_in_s.matrix2() * s.inverse_matrix());
}

namespace {

Vector mix(const Matrix& m, const Vector& x) {
  const std::size_t d = x.dim_e();
  const auto e = x.h1_part();
  const auto f = x.h2_part();
  std::vector<Rational> c(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    c[i] = m(0, 0) * e[i] + m(0, 1) * f[i];
    c[d + i] = m(1, 0) * e[i] + m(1, 1) * f[i];
  }
  return Vector(std::move(c));
}

} // namespace

Vector to_basis(const HBasisChange& s, const Vector& x) { return mix(s.inverse_matrix(), x); }

Vector from_basis(const HBasisChange& s, const Vector& x_in_s) { return mix(s.matrix(), x_in_s); }

Standardization standardize(const Matrix& i_mat, const Matrix& j_mat, const Matrix& k_mat) {
  const std::size_t d = i_mat.rows();
  for (const Matrix* m : {&i_mat, &j_mat, &k_mat})
    if (m->rows() != d || m->cols() != d) throw InvariantError("standardize: matrices must be square of equal size");
  if (d == 0 || d % 2 != 0) throw InvariantError("standardize: dimension must be positive and even");
  const Matrix id = Matrix::identity(d);
  if (i_mat * i_mat != -id) throw InvariantError("standardize: I^2 != -Id");
  if (j_mat * j_mat != id) throw InvariantError("standardize: J^2 != Id");
  if (k_mat * k_mat != id) throw InvariantError("standardize: K^2 != Id");
  if (i_mat * j_mat != k_mat) throw InvariantError("standardize: IJ != K");
  if (j_mat * i_mat != -k_mat) throw InvariantError("standardize: JI != -K");

  const Matrix plus = kernels::nullspace(j_mat - id);
  const std::size_t m = d / 2;
  if (plus.rows() != m) throw InvariantError("standardize: eigenspaces of J have unequal dimensions");

  Matrix change(d, d);
  for (std::size_t r = 0; r < m; ++r) {
    const auto e = plus.row(r);
    const std::vector<Rational> ke = k_mat * e;
    for (std::size_t t = 0; t < d; ++t) {
      change(t, r) = e[t] - ke[t];
      change(t, m + r) = e[t] + ke[t];
    }
  }
  if (sgn(kernels::determinant(change)) == 0) throw InvariantError("standardize: degenerate eigenbasis");
  return {m, std::move(change)};
}

Matrix recover_omega_e(const Matrix& gram, const HBasisChange& basis) {
  const std::size_t dim = gram.rows();
  if (gram.cols() != dim || dim == 0 || dim % 4 != 0)
    throw InvariantError("recover_omega_E: Gram matrix must be 4n x 4n");
  const std::size_t m = dim / 2;
  const auto h1 = basis.first();
  const auto h2 = basis.second();
  const std::array<std::pair<std::array<Rational, 2>, std::array<Rational, 2>>, 4> pairs{{
      {h1, h2},
      {combine(h1, h2), h2},
      {h1, combine(h1, h2)},
      {h2, h1},
  }};

  std::optional<Matrix> omega;
  for (const auto& [h, hp] : pairs) {
    const Rational w = omega_h(h, hp);
    Matrix cand(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Rational> ei(m);
      ei[i] = 1;
      const Vector x = Vector::decomposable(h, ei);
      const std::vector<Rational> gx = row_times(x.coords(), gram);
      for (std::size_t j = 0; j < m; ++j) {
        std::vector<Rational> ej(m);
        ej[j] = 1;
        const Vector y = Vector::decomposable(hp, ej);
        cand(i, j) = dot(gx, y.coords()) / w;
      }
    }
    if (!omega) omega = std::move(cand);
    else if (*omega != cand) throw InvariantError("recover_omega_E: metric is not Hermitian (pair dependence)");
  }
  if (!omega->is_skew() || sgn(kernels::determinant(*omega)) == 0)
    throw InvariantError("recover_omega_E: recovered form is not symplectic");

  // Compare against omega^H (x) omega^E in the fixed basis; det S = 1 keeps omega^H unchanged.
  if (gram_of(*omega) != gram) throw InvariantError("recover_omega_E: metric is not Hermitian");
  return *omega;
}

} // namespace pqh
