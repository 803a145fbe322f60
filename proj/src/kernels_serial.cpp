#include <stdexcept>

#include "elimination.hpp"
#include "equihodge/kernels.hpp"

namespace equihodge::kernels {

namespace detail {

namespace {
bool is_unit(const Rational& v) { return v.get_den() == 1 && (v.get_num() == 1 || v.get_num() == -1); }
}  // namespace

std::size_t eliminate(std::vector<SparseVec>& rows, const RowUpdate& update) {
  return eliminate_rows(rows, is_unit, update);
}

}  // namespace detail

namespace serial {

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::size_t sparse_rank(std::vector<SparseVec> rows) {
  return detail::eliminate(rows, [](std::vector<SparseVec>& rs, const std::vector<std::size_t>& targets,
                                    const SparseVec& pivot, std::uint32_t column) {
    const Rational pivot_value = *find(pivot, column);
    for (std::size_t t : targets) rs[t] = axpy(rs[t], -(*find(rs[t], column)) / pivot_value, pivot);
  });
}

std::vector<SparseVec> map_indices(std::size_t n, const std::function<SparseVec(std::size_t)>& fn) {
  std::vector<SparseVec> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
  return out;
}

}  // namespace serial
}  // namespace equihodge::kernels
