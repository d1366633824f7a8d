#pragma once

#include "pqh/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pqh {

/// Dense row-major matrix over Q. Rows double as vectors throughout the
/// library: a subspace basis is a Matrix whose rows span it.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<Rational> row_vector(std::size_t i) const;
  std::vector<Rational> col_vector(std::size_t j) const;

  void append_row(std::span<const Rational> r);
  void swap_rows(std::size_t a, std::size_t b);
  void truncate_rows(std::size_t n);

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_skew() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::vector<Rational>& raw() { return data_; }
  const std::vector<Rational>& raw() const { return data_; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, Matrix a);

std::vector<Rational> operator*(const Matrix& a, std::span<const Rational> x);

/// Row vector times matrix.
std::vector<Rational> row_times(std::span<const Rational> x, const Matrix& a);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// x^T M y.
Rational bilinear(std::span<const Rational> x, const Matrix& m, std::span<const Rational> y);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

/// Block diagonal [[a,0],[0,b]].
Matrix block_diag(const Matrix& a, const Matrix& b);

/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);

Rational trace(const Matrix& m);

std::string to_string(const Matrix& m);

} // namespace pqh
