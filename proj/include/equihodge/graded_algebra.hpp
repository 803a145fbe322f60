#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "equihodge/group.hpp"
#include "equihodge/matrix.hpp"
#include "equihodge/report.hpp"
#include "equihodge/sparse.hpp"

namespace equihodge {

/// An element of a GradedAlgebra: coefficients over the algebra's global
/// basis, which lists degree 0 first, then degree 1, and so on.
using GradedElement = Vector;

/// Finite-dimensional graded vector space B with an optional graded product,
/// an optional differential of degree +1 and a degree-preserving action of a
/// group by matrices rho(g). rho must be a homomorphism, rho(g)rho(h) = rho(gh),
/// and plays the role of the pullback g^*.
class GradedAlgebra {
 public:
  struct Data {
    std::vector<std::size_t> dims;            // basis size per degree
    std::vector<std::string> basis_names;     // optional
    std::optional<std::vector<SparseVec>> product;  // entry i*n+j = e_i * e_j
    std::optional<GradedElement> unit;
    std::optional<Matrix> differential;       // n x n, maps degree q into q+1
    std::vector<Matrix> action;               // finite: one per element; free abelian: one per generator
  };

  /// Checks shapes and that each rho is invertible and degree-preserving. The
  /// algebraic axioms are verified separately by verify_cdga_axioms.
  GradedAlgebra(std::shared_ptr<const GroupModel> group, Data data);

  const GroupModel& group() const noexcept { return *group_; }
  std::shared_ptr<const GroupModel> group_ptr() const noexcept { return group_; }

  std::size_t dim() const noexcept { return degree_of_.size(); }
  std::size_t degree_count() const noexcept { return data_.dims.size(); }
  std::size_t dim(std::size_t degree) const { return degree < data_.dims.size() ? data_.dims[degree] : 0; }
  std::size_t offset(std::size_t degree) const { return offsets_.at(degree); }
  std::size_t degree_of(std::size_t basis_index) const { return degree_of_.at(basis_index); }
  const std::string& basis_name(std::size_t i) const { return data_.basis_names.at(i); }
  GradedElement basis_vector(std::size_t i) const;
  GradedElement zero() const { return GradedElement(dim()); }
  /// The common degree of a nonzero homogeneous element; throws otherwise.
  std::size_t degree(const GradedElement& x) const;

  bool has_product() const noexcept { return data_.product.has_value(); }
  const SparseVec& product(std::size_t i, std::size_t j) const;
  GradedElement multiply(const GradedElement& x, const GradedElement& y) const;
  GradedElement unit() const;

  bool has_differential() const noexcept { return data_.differential.has_value(); }
  GradedElement differentiate(const GradedElement& x) const;
  const Matrix& differential() const { return differential_; }

  /// rho(g) as a dense matrix on the global basis.
  Matrix action_matrix(const GroupElement& g) const;
  GradedElement act(const GroupElement& g, const GradedElement& x) const;
  /// Finite groups only: sparse columns of rho(g) by element index.
  const std::vector<SparseVec>& action_columns(std::size_t element_index) const;
  /// Every rho(g) maps basis vectors to signed basis vectors.
  bool action_is_monomial() const noexcept { return monomial_; }

  const Data& data() const noexcept { return data_; }

 private:
  std::shared_ptr<const GroupModel> group_;
  Data data_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> degree_of_;
  Matrix differential_;
  std::vector<std::vector<SparseVec>> action_columns_;  // finite groups
  std::vector<Matrix> generator_inverses_;              // free abelian groups
  bool monomial_ = true;
};

/// Pointwise functions on a finite G-set X, concentrated in degree 0, d = 0.
/// `point_maps[k][x]` is the image of x under element k (finite G) or under
/// generator k (free abelian G); rho(g)(a)(x) = a(g.x). Throws
/// ValidationError when the maps do not form an action.
GradedAlgebra build_function_algebra(std::shared_ptr<const GroupModel> group,
                                     const std::vector<std::vector<int>>& point_maps,
                                     std::vector<std::string> point_names = {});

/// Exterior algebra on n degree-1 generators with d = 0. `generator_maps[k]`
/// permutes the generators (per element for finite G, per generator for free
/// abelian G); wedge monomials pick up the permutation sign.
GradedAlgebra build_exterior_algebra(std::shared_ptr<const GroupModel> group, std::size_t generators,
                                     const std::vector<std::vector<int>>& generator_maps);

/// (1/|G|) sum_g rho(g), one block per degree. Finite groups only.
std::vector<Matrix> average_projector(const GradedAlgebra& algebra);

/// Associativity, unit, graded commutativity, d^2 = 0, graded Leibniz, and the
/// action axioms. Every violation carries a basis witness.
Report verify_cdga_axioms(const GradedAlgebra& algebra);

}  // namespace equihodge
