#pragma once

// Exact linear-algebra kernels over Q.
//
// Each elimination kernel has a serial reference implementation and an
// OpenMP version that parallelizes the row updates of every pivot step.
// Reduced row echelon form is unique, so both must return identical
// results; tests/test_kernels.cpp checks that on random inputs and
// bench/bench_kernels.cpp compares their speed. The plain entry points
// (rref, matmul) dispatch on problem size.

#include "pqh/matrix.hpp"

#include <cstddef>
#include <vector>

namespace pqh::kernels {

struct Echelon {
  Matrix reduced;                   // nonzero rows of the RREF only
  std::vector<std::size_t> pivots;  // pivot column of each row
};

Echelon rref_serial(Matrix m);
Echelon rref_parallel(Matrix m);
Echelon rref(Matrix m);

Matrix matmul_serial(const Matrix& a, const Matrix& b);
Matrix matmul_parallel(const Matrix& a, const Matrix& b);
Matrix matmul(const Matrix& a, const Matrix& b);

/// Entry count above which rref/matmul take the OpenMP path.
inline constexpr std::size_t kParallelThreshold = 48 * 48;

std::size_t rank(const Matrix& m);

/// Canonical (RREF) basis, as rows, of {x : m x = 0}.
Matrix nullspace(const Matrix& m);

/// Canonical basis, as rows, of {y : y m = 0}.
Matrix left_nullspace(const Matrix& m);

Rational determinant(Matrix m);

/// Throws InvariantError when singular.
Matrix inverse(const Matrix& m);

/// Sylvester inertia of a symmetric matrix via symmetric Gaussian
/// congruence. Pivot rule: first nonzero diagonal entry; when the diagonal
/// vanishes but the matrix does not, the first nonzero off-diagonal pair
/// (i,j) is split off as a hyperbolic plane, contributing one positive and
/// one negative square.
struct Inertia {
  std::size_t positive = 0;
  std::size_t null = 0;
  std::size_t negative = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

Inertia inertia_serial(Matrix m);
Inertia inertia_parallel(Matrix m);
Inertia inertia(Matrix m);

} // namespace pqh::kernels
