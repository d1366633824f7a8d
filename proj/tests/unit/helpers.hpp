#pragma once

#include "pqh/classify.hpp"
#include "pqh/generate.hpp"

#include <vector>

namespace pqh::test {

inline Subspace span_rows(const std::vector<std::vector<Rational>>& rows) {
  return Subspace::span(Matrix::from_rows(rows, rows.front().size()));
}

inline Vector vec(std::vector<Rational> c) { return Vector(std::move(c)); }

// Shared n = 1 instances, coordinates (a1, a2, b1, b2) of h1 (x) a + h2 (x) b.
inline Subspace complex_instance() { return span_rows({{1, 0, 0, 1}, {0, 1, -1, 0}}); }
inline Subspace para_complex_instance() { return span_rows({{1, 0, 1, 0}, {0, 1, 0, -1}}); }
inline Subspace h1_e() { return span_rows({{1, 0, 0, 0}, {0, 1, 0, 0}}); }
inline Subspace real_line() { return span_rows({{1, 0, 0, 1}}); }
inline Subspace h_e1() { return span_rows({{1, 0, 0, 0}, {0, 0, 1, 0}}); }

} // namespace pqh::test
