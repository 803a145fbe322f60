#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "equihodge/matrix.hpp"
#include "equihodge/rational.hpp"

namespace equihodge {

/// Sorted (index, nonzero value) pairs.
using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;

/// Column-major sparse matrix: `columns[j]` is the image of basis vector j.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVec> columns;

  std::size_t nonzeros() const;
  Matrix to_dense() const;
  /// Image of a sparse vector.
  SparseVec apply(const SparseVec& v) const;
};

/// Builds a SparseVec from unsorted entries, summing duplicates and dropping zeros.
SparseVec compress(std::vector<std::pair<std::uint32_t, Rational>> entries);
SparseVec to_sparse(const Vector& dense);
Vector to_dense(const SparseVec& v, std::size_t length);
/// y <- y + s * x
SparseVec axpy(const SparseVec& y, const Rational& s, const SparseVec& x);
const Rational* find(const SparseVec& v, std::uint32_t index);

/// Product b * a (apply a, then b).
SparseMatrix compose(const SparseMatrix& b, const SparseMatrix& a);

}  // namespace equihodge
