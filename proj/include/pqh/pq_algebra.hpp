#pragma once

#include "pqh/matrix.hpp"

#include <string>

namespace pqh {

/// Para-quaternion (split quaternion) q0 + q1 i + q2 j + q3 k with
/// -i^2 = j^2 = k^2 = 1 and ij = -ji = k.
struct ParaQuaternion {
  Rational q0, q1, q2, q3;

  static ParaQuaternion one() { return {1, 0, 0, 0}; }
  static ParaQuaternion i() { return {0, 1, 0, 0}; }
  static ParaQuaternion j() { return {0, 0, 1, 0}; }
  static ParaQuaternion k() { return {0, 0, 0, 1}; }

  ParaQuaternion imaginary() const { return {0, q1, q2, q3}; }
  std::string str() const;

  friend bool operator==(const ParaQuaternion&, const ParaQuaternion&) = default;
};

ParaQuaternion operator+(const ParaQuaternion& a, const ParaQuaternion& b);
ParaQuaternion operator-(const ParaQuaternion& a, const ParaQuaternion& b);
ParaQuaternion operator*(const Rational& s, const ParaQuaternion& a);

ParaQuaternion pq_mul(const ParaQuaternion& a, const ParaQuaternion& b);
inline ParaQuaternion operator*(const ParaQuaternion& a, const ParaQuaternion& b) { return pq_mul(a, b); }

ParaQuaternion conj(const ParaQuaternion& a);

/// N(q) = q conj(q) = q0^2 + q1^2 - q2^2 - q3^2.
Rational norm(const ParaQuaternion& a);

struct ConjNorm {
  ParaQuaternion conjugate;
  Rational norm;
};
ConjNorm pq_conj_norm(const ParaQuaternion& a);

/// Algebra isomorphism onto Mat_2(Q):
///   q -> [[q0 - q3, q2 - q1], [q2 + q1, q0 + q3]].
Matrix phi_to_mat2(const ParaQuaternion& a);
ParaQuaternion phi_from_mat2(const Matrix& m);

} // namespace pqh
