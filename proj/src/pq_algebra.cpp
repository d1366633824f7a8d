#include "pqh/pq_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace pqh {

ParaQuaternion operator+(const ParaQuaternion& a, const ParaQuaternion& b) {
  return {a.q0 + b.q0, a.q1 + b.q1, a.q2 + b.q2, a.q3 + b.q3};
}

ParaQuaternion operator-(const ParaQuaternion& a, const ParaQuaternion& b) {
  return {a.q0 - b.q0, a.q1 - b.q1, a.q2 - b.q2, a.q3 - b.q3};
}

ParaQuaternion operator*(const Rational& s, const ParaQuaternion& a) {
  return {s * a.q0, s * a.q1, s * a.q2, s * a.q3};
}

// Multiplication table: i^2 = -1, j^2 = k^2 = 1, ij = k, jk = -i, ki = j.
ParaQuaternion pq_mul(const ParaQuaternion& a, const ParaQuaternion& b) {
  ParaQuaternion c;
  c.q0 = a.q0 * b.q0 - a.q1 * b.q1 + a.q2 * b.q2 + a.q3 * b.q3;
  c.q1 = a.q0 * b.q1 + a.q1 * b.q0 - a.q2 * b.q3 + a.q3 * b.q2;
  c.q2 = a.q0 * b.q2 + a.q2 * b.q0 - a.q1 * b.q3 + a.q3 * b.q1;
  c.q3 = a.q0 * b.q3 + a.q3 * b.q0 + a.q1 * b.q2 - a.q2 * b.q1;
  return c;
}

ParaQuaternion conj(const ParaQuaternion& a) { return {a.q0, -a.q1, -a.q2, -a.q3}; }

Rational norm(const ParaQuaternion& a) { return a.q0 * a.q0 + a.q1 * a.q1 - a.q2 * a.q2 - a.q3 * a.q3; }

ConjNorm pq_conj_norm(const ParaQuaternion& a) { return {conj(a), norm(a)}; }

Matrix phi_to_mat2(const ParaQuaternion& a) {
  return Matrix{{a.q0 - a.q3, a.q2 - a.q1}, {a.q2 + a.q1, a.q0 + a.q3}};
}

ParaQuaternion phi_from_mat2(const Matrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("phi_from_mat2: expected a 2x2 matrix");
  const Rational half(1, 2);
  return {half * (m(0, 0) + m(1, 1)), half * (m(1, 0) - m(0, 1)), half * (m(1, 0) + m(0, 1)),
          half * (m(1, 1) - m(0, 0))};
}

std::string ParaQuaternion::str() const {
  // Zero terms dropped, unit coefficients elided: "1 - k", "-1/2i + j".
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& c, const char* unit) {
    if (sgn(c) == 0) return;
    const Rational a = abs(c);
    if (first) os << (sgn(c) < 0 ? "-" : "");
    else os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (*unit == '\0' || a != 1) os << to_string(a);
    os << unit;
  };
  term(q0, "");
  term(q1, "i");
  term(q2, "j");
  term(q3, "k");
  if (first) os << "0";
  return os.str();
}

} // namespace pqh
