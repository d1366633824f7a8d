#pragma once

#include "pqh/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pqh {

/// Univariate polynomial over Q, coefficients stored low degree first and
/// kept trimmed (the zero polynomial has no coefficients).
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c);
  static Poly x();
  /// x - r
  static Poly linear_root(const Rational& r);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

  Poly monic() const;
  Poly derivative() const;
  Rational eval(const Rational& t) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& a);
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Canonical text form, highest degree first, e.g. "x^2 - 2*x + 1/2".
  std::string str() const;

private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};
DivMod divmod(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);  // monic, gcd(0,0) = 0

/// Lexicographic order on (degree, coefficients) used to sort factor lists.
bool poly_less(const Poly& a, const Poly& b);

/// p(M) by Horner's rule.
Matrix eval_matrix(const Poly& p, const Matrix& m);

/// det(x I - M), via Faddeev-LeVerrier.
Poly charpoly(const Matrix& m);

/// Monic minimal polynomial, via the first linear dependency among
/// I, M, M^2, ...
Poly minpoly(const Matrix& m);

/// Monic irreducible factors over Q with multiplicities, sorted by
/// poly_less. The input must be nonzero; its content is discarded.
std::vector<std::pair<Poly, int>> factor(const Poly& p);

/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const Poly& p);

/// Number of distinct real roots (Sturm sequence).
int real_root_count(const Poly& p);

} // namespace pqh
