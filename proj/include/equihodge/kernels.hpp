#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "equihodge/matrix.hpp"
#include "equihodge/sparse.hpp"

namespace equihodge {

enum class Execution { serial, parallel };

/// Data-parallel kernels behind the exact linear algebra. Every kernel has a
/// serial reference in `kernels::serial`; the OpenMP variants in
/// `kernels::omp` produce bitwise-identical results (exact arithmetic, no
/// reductions whose order matters).
namespace kernels {

/// `parallel` when built with OpenMP, otherwise `serial`.
Execution default_execution();
bool openmp_enabled();
int max_threads();

Matrix matmul(const Matrix& a, const Matrix& b, Execution exec = default_execution());

/// Rank of the matrix whose rows are given (row order is irrelevant).
std::size_t sparse_rank(std::vector<SparseVec> rows, Execution exec = default_execution());

/// Rank over Z/p, p = 2^61 - 1, after clearing denominators row by row. It
/// never exceeds the rank over Q.
std::size_t modular_rank(const std::vector<SparseVec>& rows);

/// Exact ranks of the differentials of a cochain complex (d[m] maps degree m
/// to degree m + 1 and d[m + 1] d[m] = 0). Modular ranks are kept where they
/// are forced to be exact; the others are recomputed over Q.
std::vector<std::size_t> complex_ranks(const std::vector<SparseMatrix>& d, Execution exec = default_execution());

/// out[i] = fn(i) for i in [0, n). `fn` must be safe to call concurrently.
std::vector<SparseVec> map_indices(std::size_t n, const std::function<SparseVec(std::size_t)>& fn,
                                   Execution exec = default_execution());

namespace serial {
Matrix matmul(const Matrix& a, const Matrix& b);
std::size_t sparse_rank(std::vector<SparseVec> rows);
std::vector<SparseVec> map_indices(std::size_t n, const std::function<SparseVec(std::size_t)>& fn);
}  // namespace serial

namespace omp {
Matrix matmul(const Matrix& a, const Matrix& b);
std::size_t sparse_rank(std::vector<SparseVec> rows);
std::vector<SparseVec> map_indices(std::size_t n, const std::function<SparseVec(std::size_t)>& fn);
}  // namespace omp

namespace detail {
/// Replaces rows[t] by rows[t] - (rows[t][column] / pivot[column]) * pivot for
/// every t in `targets`.
using RowUpdate = std::function<void(std::vector<SparseVec>& rows, const std::vector<std::size_t>& targets,
                                     const SparseVec& pivot, std::uint32_t column)>;
/// Markowitz-style elimination shared by both rank kernels, so that they
/// perform the same sequence of row operations. Returns the rank.
std::size_t eliminate(std::vector<SparseVec>& rows, const RowUpdate& update);
}  // namespace detail

}  // namespace kernels
}  // namespace equihodge
