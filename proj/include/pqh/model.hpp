#pragma once

// The standard para-quaternionic Hermitian space V = H (x) E with
// dim H = 2, dim E = 2n, structure sl(H) and metric g = omega^H (x) omega^E.
//
// Coordinates: a vector X = h1 (x) e + h2 (x) e' is stored as the 4n-tuple
// (e_1..e_2n, e'_1..e'_2n). Operators A = alpha I + beta J + gamma K are
// stored by their coordinates relative to the fixed symplectic basis
// (h1, h2); changes of basis are explicit HBasisChange values.

#include "pqh/matrix.hpp"
#include "pqh/pq_algebra.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace pqh {

class ModelSpace {
public:
  /// Throws InvariantError unless omega is 2n x 2n, skew and invertible.
  ModelSpace(std::size_t n, Matrix omega);

  /// omega^E in Darboux form: omega(e_{2i-1}, e_{2i}) = 1.
  static ModelSpace standard(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t dim_e() const { return 2 * n_; }
  std::size_t dim() const { return 4 * n_; }
  const Matrix& omega() const { return omega_; }
  /// Gram matrix of g on V: [[0, omega], [-omega, 0]].
  const Matrix& gram() const { return gram_; }

  Rational omega_e(std::span<const Rational> e, std::span<const Rational> f) const;

  friend bool operator==(const ModelSpace& a, const ModelSpace& b) { return a.omega_ == b.omega_; }

private:
  std::size_t n_;
  Matrix omega_;
  Matrix gram_;
};

class Vector {
public:
  explicit Vector(std::vector<Rational> coords);
  Vector(std::span<const Rational> h1_part, std::span<const Rational> h2_part);
  static Vector zero(std::size_t dim_e);
  /// h (x) e for h = (h[0] h1 + h[1] h2).
  static Vector decomposable(const std::array<Rational, 2>& h, std::span<const Rational> e);

  std::size_t dim_e() const { return coords_.size() / 2; }
  /// e in X = h1 (x) e + h2 (x) e'.
  std::span<const Rational> h1_part() const { return {coords_.data(), dim_e()}; }
  /// e' in X = h1 (x) e + h2 (x) e'.
  std::span<const Rational> h2_part() const { return {coords_.data() + dim_e(), dim_e()}; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;

  friend bool operator==(const Vector&, const Vector&) = default;

private:
  std::vector<Rational> coords_;
};

Vector operator+(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& a);

struct Operator {
  Rational alpha, beta, gamma;

  static Operator I() { return {1, 0, 0}; }
  static Operator J() { return {0, 1, 0}; }
  static Operator K() { return {0, 0, 1}; }

  /// alpha^2 - beta^2 - gamma^2; A^2 = -q(A) Id.
  Rational q() const { return alpha * alpha - beta * beta - gamma * gamma; }
  bool is_zero() const { return sgn(alpha) == 0 && sgn(beta) == 0 && sgn(gamma) == 0; }
  /// Action on H in the basis (h1, h2): [[-gamma, beta - alpha], [alpha + beta, gamma]].
  Matrix matrix2() const;
  static Operator from_matrix2(const Matrix& m);
  std::array<Rational, 3> coords() const { return {alpha, beta, gamma}; }

  friend bool operator==(const Operator&, const Operator&) = default;
};

Operator operator+(const Operator& a, const Operator& b);
Operator operator*(const Rational& s, const Operator& a);

/// Polar form of q: <A, B> = a1 a2 - b1 b2 - c1 c2.
Rational q_polar(const Operator& a, const Operator& b);

/// An element of SL(H). Columns are the new basis vectors (h1', h2')
/// expressed in the current basis (h1, h2).
class HBasisChange {
public:
  HBasisChange();
  /// Throws InvariantError unless det s = 1.
  explicit HBasisChange(Matrix s);
  /// A symplectic basis whose second vector is h (h nonzero).
  static HBasisChange with_second(const std::array<Rational, 2>& h);

  const Matrix& matrix() const { return s_; }
  Matrix inverse_matrix() const;
  std::array<Rational, 2> first() const { return {s_(0, 0), s_(1, 0)}; }
  std::array<Rational, 2> second() const { return {s_(0, 1), s_(1, 1)}; }
  bool is_identity() const { return s_ == Matrix::identity(2); }

  friend bool operator==(const HBasisChange&, const HBasisChange&) = default;

private:
  Matrix s_;
};

/// 4n x 4n matrix of A acting on column coordinate vectors.
Matrix operator_matrix(const Operator& a, std::size_t n);

Vector apply_operator(const Operator& a, const Vector& x);

Rational metric_g(const ModelSpace& space, const Vector& x, const Vector& y);

/// X.Y = g(X,Y) + i g(X,I'Y) - j g(X,J'Y) - k g(X,K'Y) for the admissible
/// basis (I',J',K') attached to the symplectic basis `basis` of H.
ParaQuaternion hermitian_product(const ModelSpace& space, const Vector& x, const Vector& y,
                                 const HBasisChange& basis = {});

/// Coordinates of the same endomorphism relative to the new basis.
Operator change_admissible_basis(const HBasisChange& s, const Operator& a);

/// Inverse of change_admissible_basis: coordinates given relative to `s`
/// mapped back to the fixed basis.
Operator operator_from_basis(const HBasisChange& s, const Operator& a_in_s);

/// Coordinates of X relative to the basis (h1', h2') given by s.
Vector to_basis(const HBasisChange& s, const Vector& x);
Vector from_basis(const HBasisChange& s, const Vector& x_in_s);

/// Result of standardize: columns of `change` form a basis of R^{2m} in
/// which the given triple is the model structure on H (x) E^m, with columns
/// ordered (h1 (x) e_1..e_m, h2 (x) e_1..e_m).
struct Standardization {
  std::size_t m;
  Matrix change;
};

/// Puts an abstract para-hypercomplex triple on R^{2m} into model form.
/// Throws InvariantError when the relations -I^2 = J^2 = K^2 = Id, IJ = K
/// and anticommutation fail, or when the eigenspaces of J differ in
/// dimension.
Standardization standardize(const Matrix& i_mat, const Matrix& j_mat, const Matrix& k_mat);

/// Recovers omega^E from a Gram matrix of a para-quaternionic Hermitian
/// metric in model coordinates, relative to the symplectic basis `basis`.
/// The ratio g(h (x) e, h' (x) e') / omega^H(h, h') is evaluated for a fixed
/// list of pairs (h, h') and must agree for all of them; otherwise the
/// metric is not Hermitian and InvariantError is thrown.
Matrix recover_omega_e(const Matrix& gram, const HBasisChange& basis = {});

} // namespace pqh
