#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "equihodge/rational.hpp"

namespace equihodge {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Rational> entries);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& s);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Rational s, Matrix a);
Vector operator*(const Matrix& a, const Vector& v);

Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scale(const Rational& s, Vector v);
bool is_zero(const Vector& v);
/// a^T M b
Rational bilinear(const Vector& a, const Matrix& m, const Vector& b);

/// Matrices stacked vertically; all must share a column count.
Matrix vstack(const std::vector<Matrix>& blocks);
/// Horizontal concatenation; all must share a row count.
Matrix hstack(const std::vector<Matrix>& blocks);

/// Reduced row echelon form with the pivot column of each nonzero row.
struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Rref rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Columns form the canonical (RREF) basis of ker m: each basis vector has a 1
/// at its own free column and 0 at every other free column.
Matrix nullspace(const Matrix& m);

/// Columns form a basis of the column space of m (a subset of m's columns).
Matrix column_space(const Matrix& m);

/// Exact inverse; throws MathError when singular.
Matrix inverse(const Matrix& m);

/// Solves a x = b for every column of b; throws MathError when no solution exists.
/// For non-square or singular a, returns one solution (free variables zero).
Matrix solve(const Matrix& a, const Matrix& b);

/// True when span(columns of a) == span(columns of b).
bool same_column_space(const Matrix& a, const Matrix& b);

std::string to_string(const Matrix& m);

}  // namespace equihodge
