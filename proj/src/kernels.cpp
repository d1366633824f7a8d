#include "pqh/kernels.hpp"

#include "pqh/error.hpp"

#include <omp.h>

#include <utility>

namespace pqh::kernels {

namespace {

// Eliminates column `col` from every row except `pivot_row`, whose pivot
// entry is already 1.
void eliminate_serial(Matrix& m, std::size_t pivot_row, std::size_t col) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t i = 0; i < rows; ++i) {
    if (i == pivot_row || sgn(m(i, col)) == 0) continue;
    Rational f = m(i, col);
    for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(pivot_row, j);
  }
}

void eliminate_parallel(Matrix& m, std::size_t pivot_row, std::size_t col) {
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(m.rows());
  const std::size_t cols = m.cols();
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    if (i == pivot_row || sgn(m(i, col)) == 0) continue;
    Rational f = m(i, col);
    for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(pivot_row, j);
  }
}

template <typename Eliminate>
Echelon rref_impl(Matrix m, Eliminate eliminate) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    eliminate(m, r, c);
    out.pivots.push_back(c);
    ++r;
  }
  m.truncate_rows(r);
  out.reduced = std::move(m);
  return out;
}

bool use_parallel(std::size_t entries) {
  return entries >= kParallelThreshold && omp_get_max_threads() > 1;
}

} // namespace

Echelon rref_serial(Matrix m) { return rref_impl(std::move(m), eliminate_serial); }
Echelon rref_parallel(Matrix m) { return rref_impl(std::move(m), eliminate_parallel); }

Echelon rref(Matrix m) {
  if (use_parallel(m.rows() * m.cols())) return rref_parallel(std::move(m));
  return rref_serial(std::move(m));
}

Matrix matmul_serial(const Matrix& a, const Matrix& b) { return a * b; }

Matrix matmul_parallel(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix c(a.rows(), b.cols());
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (use_parallel(a.rows() * b.cols())) return matmul_parallel(a, b);
  return matmul_serial(a, b);
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix nullspace(const Matrix& m) {
  const std::size_t n = m.cols();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.append_row(v);
  }
  return rref(std::move(basis)).reduced;
}

Matrix left_nullspace(const Matrix& m) { return nullspace(m.transpose()); }

Rational determinant(Matrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  Echelon e = rref(hstack(m, Matrix::identity(n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw InvariantError("inverse: matrix is singular");
  return e.reduced.block(0, n, n, n);
}

namespace {

Matrix drop_indices(const Matrix& m, std::size_t a, std::size_t b) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (i != a && i != b) keep.push_back(i);
  Matrix out(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) out(i, j) = m(keep[i], keep[j]);
  return out;
}

template <bool Parallel>
Inertia inertia_impl(Matrix m) {
  if (!m.is_symmetric()) throw std::invalid_argument("inertia: matrix not symmetric");
  Inertia out;
  while (m.rows() > 0) {
    const std::size_t n = m.rows();
    std::size_t k = 0;
    while (k < n && sgn(m(k, k)) == 0) ++k;
    if (k < n) {
      const Rational d = m(k, k);
      (sgn(d) > 0 ? out.positive : out.negative) += 1;
      const std::ptrdiff_t sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for if (Parallel) schedule(static)
      for (std::ptrdiff_t ii = 0; ii < sn; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        if (i == k || sgn(m(i, k)) == 0) continue;
        Rational f = m(i, k) / d;
        for (std::size_t j = 0; j < n; ++j)
          if (j != k) m(i, j) -= f * m(k, j);
      }
      m = drop_indices(m, k, k);
      continue;
    }
    std::size_t pi = n, pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (sgn(m(i, j)) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == n) {
      out.null += n;
      break;
    }
    // Schur complement of the hyperbolic block [[0,b],[b,0]].
    const Rational b = m(pi, pj);
    out.positive += 1;
    out.negative += 1;
    Matrix upd = m;
    const std::ptrdiff_t sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for if (Parallel) schedule(static)
    for (std::ptrdiff_t rr = 0; rr < sn; ++rr) {
      const auto r = static_cast<std::size_t>(rr);
      if (r == pi || r == pj) continue;
      for (std::size_t s = 0; s < n; ++s) {
        if (s == pi || s == pj) continue;
        upd(r, s) -= (m(r, pi) * m(pj, s) + m(r, pj) * m(pi, s)) / b;
      }
    }
    m = drop_indices(upd, pi, pj);
  }
  return out;
}

} // namespace

Inertia inertia_serial(Matrix m) { return inertia_impl<false>(std::move(m)); }
Inertia inertia_parallel(Matrix m) { return inertia_impl<true>(std::move(m)); }

Inertia inertia(Matrix m) {
  if (use_parallel(m.rows() * m.cols())) return inertia_parallel(std::move(m));
  return inertia_serial(std::move(m));
}

} // namespace pqh::kernels
