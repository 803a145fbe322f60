#include "equihodge/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace equihodge {

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [i, v] : columns[j]) m(i, j) = v;
  return m;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
  std::vector<std::pair<std::uint32_t, Rational>> acc;
  for (const auto& [j, x] : v)
    for (const auto& [i, a] : columns.at(j)) acc.emplace_back(i, a * x);
  return compress(std::move(acc));
}

SparseVec compress(std::vector<std::pair<std::uint32_t, Rational>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
    } else {
      if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
  return out;
}

SparseVec to_sparse(const Vector& dense) {
  SparseVec out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (sgn(dense[i]) != 0) out.emplace_back(static_cast<std::uint32_t>(i), dense[i]);
  return out;
}

Vector to_dense(const SparseVec& v, std::size_t length) {
  Vector out(length);
  for (const auto& [i, x] : v) {
    if (i >= length) throw std::out_of_range("sparse index beyond dense length");
    out[i] = x;
  }
  return out;
}

SparseVec axpy(const SparseVec& y, const Rational& s, const SparseVec& x) {
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, s * x[j].second);
      ++j;
    } else {
      Rational v = y[i].second + s * x[j].second;
      if (sgn(v) != 0) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const Rational* find(const SparseVec& v, std::uint32_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index, [](const auto& e, std::uint32_t k) { return e.first < k; });
  return (it != v.end() && it->first == index) ? &it->second : nullptr;
}

SparseMatrix compose(const SparseMatrix& b, const SparseMatrix& a) {
  if (b.cols != a.rows) throw std::invalid_argument("compose: shape mismatch");
  SparseMatrix out{b.rows, a.cols, {}};
  out.columns.reserve(a.cols);
  for (const auto& col : a.columns) out.columns.push_back(b.apply(col));
  return out;
}

}  // namespace equihodge
