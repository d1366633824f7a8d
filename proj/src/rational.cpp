#include "pqh/rational.hpp"

#include "pqh/error.hpp"

namespace pqh {

std::string to_string(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw ParseError("not a rational literal: '" + std::string(text) + "'");

  Integer p(std::string(num), 10);
  Integer q(1);
  if (slash != std::string_view::npos) {
    q = Integer(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  }
  Rational r(negative ? Integer(-p) : p, q);
  r.canonicalize();
  return r;
}

int sign(const Rational& r) { return sgn(r); }

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  Rational c(r);
  c.canonicalize();
  if (!mpz_perfect_square_p(c.get_num_mpz_t()) || !mpz_perfect_square_p(c.get_den_mpz_t()))
    return std::nullopt;
  Integer n = sqrt(c.get_num());
  Integer d = sqrt(c.get_den());
  return Rational(n, d);
}

} // namespace pqh
