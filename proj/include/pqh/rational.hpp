#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace pqh {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical lowest-terms text form: "p" or "p/q" with q > 1.
std::string to_string(const Rational& r);

/// Parses "p" or "p/q" (optional leading '-', q > 0). Anything else,
/// including decimals, throws ParseError.
Rational parse_rational(std::string_view text);

int sign(const Rational& r);

/// Exact square root if r is the square of a rational, otherwise nullopt.
std::optional<Rational> rational_sqrt(const Rational& r);

} // namespace pqh
