#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "equihodge/kernels.hpp"

namespace equihodge::kernels {

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Execution default_execution() { return openmp_enabled() ? Execution::parallel : Execution::serial; }

Matrix matmul(const Matrix& a, const Matrix& b, Execution exec) {
  return exec == Execution::parallel ? omp::matmul(a, b) : serial::matmul(a, b);
}

std::size_t sparse_rank(std::vector<SparseVec> rows, Execution exec) {
  return exec == Execution::parallel ? omp::sparse_rank(std::move(rows)) : serial::sparse_rank(std::move(rows));
}

std::vector<SparseVec> map_indices(std::size_t n, const std::function<SparseVec(std::size_t)>& fn, Execution exec) {
  return exec == Execution::parallel ? omp::map_indices(n, fn) : serial::map_indices(n, fn);
}

namespace omp {

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  Matrix out(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static) if (a.rows() * b.cols() > 256)
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

std::size_t sparse_rank(std::vector<SparseVec> rows) {
  return detail::eliminate(rows, [](std::vector<SparseVec>& rs, const std::vector<std::size_t>& targets,
                                    const SparseVec& pivot, std::uint32_t column) {
    const Rational pivot_value = *find(pivot, column);
    const auto n = static_cast<std::ptrdiff_t>(targets.size());
#pragma omp parallel for schedule(dynamic, 4) if (n > 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      SparseVec& r = rs[targets[static_cast<std::size_t>(i)]];
      r = axpy(r, -(*find(r, column)) / pivot_value, pivot);
    }
  });
}

std::vector<SparseVec> map_indices(std::size_t n, const std::function<SparseVec(std::size_t)>& fn) {
  std::vector<SparseVec> out(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
  return out;
}

}  // namespace omp
}  // namespace equihodge::kernels
