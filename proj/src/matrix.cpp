#include "equihodge/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "equihodge/errors.hpp"
#include "equihodge/kernels.hpp"

namespace equihodge {

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Rational> entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Rational s, Matrix a) { return a *= s; }
Matrix operator*(const Matrix& a, const Matrix& b) { return kernels::matmul(a, b); }

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("shape mismatch in matrix-vector product");
  Vector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (sgn(v[c]) != 0 && sgn(a(r, c)) != 0) acc += a(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector subtract(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scale(const Rational& s, Vector v) {
  for (auto& x : v) x *= s;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Rational bilinear(const Vector& a, const Matrix& m, const Vector& b) {
  const Vector mb = m * b;
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * mb[i];
  return acc;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  std::size_t rows = 0;
  std::size_t cols = blocks.empty() ? 0 : blocks.front().cols();
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack column mismatch");
    rows += b.rows();
  }
  Matrix out(rows, cols);
  std::size_t at = 0;
  for (const auto& b : blocks)
    for (std::size_t r = 0; r < b.rows(); ++r, ++at)
      for (std::size_t c = 0; c < cols; ++c) out(at, c) = b(r, c);
  return out;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
  std::size_t cols = 0;
  std::size_t rows = blocks.empty() ? 0 : blocks.front().rows();
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("hstack row mismatch");
    cols += b.cols();
  }
  Matrix out(rows, cols);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    for (std::size_t c = 0; c < b.cols(); ++c)
      for (std::size_t r = 0; r < rows; ++r) out(r, at + c) = b(r, c);
    at += b.cols();
  }
  return out;
}

Rref rref(Matrix m) {
  Rref out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(lead_row, k));
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (sgn(m(lead_row, k)) != 0) m(r, k) -= factor * m(lead_row, k);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix nullspace(const Matrix& m) {
  const Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix basis(m.cols(), free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    basis(free[j], j) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) basis(r.pivots[i], j) = -r.reduced(i, free[j]);
  }
  return basis;
}

Matrix column_space(const Matrix& m) {
  const Rref r = rref(m);
  Matrix basis(m.rows(), r.pivots.size());
  for (std::size_t j = 0; j < r.pivots.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) basis(i, j) = m(i, r.pivots[j]);
  return basis;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw MathError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const Rref r = rref(hstack({m, Matrix::identity(n)}));
  if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1)) throw MathError("singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

Matrix solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const Rref r = rref(hstack({a, b}));
  Matrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] >= a.cols()) throw MathError("solve: inconsistent system");
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.reduced(i, a.cols() + j);
  }
  return x;
}

bool same_column_space(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) return false;
  const std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(hstack({a, b}));
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).get_str();
  }
  os << ']';
  return os.str();
}

}  // namespace equihodge
