#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "equihodge/complex.hpp"
#include "equihodge/graded_algebra.hpp"
#include "equihodge/hopf.hpp"
#include "equihodge/kernels.hpp"
#include "equihodge/report.hpp"
#include "equihodge/sparse.hpp"

namespace equihodge {

/// A B-valued function on G^n for finite G, stored densely. Tuples are
/// indexed in mixed radix |G| with g_1 most significant; degree 0 is a
/// single element of B.
class HopfCochain {
 public:
  HopfCochain(std::shared_ptr<const GradedAlgebra> base, std::size_t degree);
  static HopfCochain from_function(std::shared_ptr<const GradedAlgebra> base, std::size_t degree,
                                   const GFunction& f);
  /// The cochain equal to basis vector `b_index` of B at `tuple`, zero elsewhere.
  static HopfCochain basis(std::shared_ptr<const GradedAlgebra> base, const std::vector<std::size_t>& tuple,
                           std::size_t b_index);

  std::size_t degree() const noexcept { return degree_; }
  const GradedAlgebra& base() const noexcept { return *base_; }
  std::shared_ptr<const GradedAlgebra> base_ptr() const noexcept { return base_; }
  std::size_t tuple_count() const noexcept { return tuples_; }

  std::vector<std::size_t> tuple(std::size_t index) const;
  std::size_t index(const std::vector<std::size_t>& tuple) const;
  GradedElement value(std::size_t tuple_index) const;
  GradedElement value(const std::vector<std::size_t>& tuple) const { return value(index(tuple)); }
  void set_value(std::size_t tuple_index, const GradedElement& v);

  const Vector& data() const noexcept { return data_; }
  Vector& data() noexcept { return data_; }
  GFunction as_function() const;

  friend bool operator==(const HopfCochain& a, const HopfCochain& b) {
    return a.degree_ == b.degree_ && a.data_ == b.data_;
  }

 private:
  std::shared_ptr<const GradedAlgebra> base_;
  std::size_t degree_ = 0;
  std::size_t tuples_ = 1;
  Vector data_;
};

/// Coface delta_i: degree n-1 -> n, 0 <= i <= n.
///   delta_0 c(g_1..g_n) = g_1^* c(g_2..g_n),
///   delta_i c(..) = c(g_1, .., g_i g_{i+1}, .., g_n),
///   delta_n c(..) = c(g_1..g_{n-1}).
HopfCochain face(std::size_t i, const HopfCochain& c);
/// Codegeneracy sigma_j: degree n+1 -> n, 0 <= j <= n, inserting the identity
/// after the first j arguments (so sigma_0 evaluates the first slot at 1).
HopfCochain degeneracy(std::size_t j, const HopfCochain& c);
/// t(c)(g_1..g_n) = (g_1...g_n)^* c((g_1...g_n)^{-1}, g_1, .., g_{n-1}); identity in degree 0.
HopfCochain cyclic_operator(const HopfCochain& c);
/// b = sum_i (-1)^i delta_i.
HopfCochain hochschild_coboundary(const HopfCochain& c);

/// a^1 (x)_B ... (x)_B a^n as a function on G^n:
/// a^1(g_1) g_1^*(a^2(g_2)) (g_1 g_2)^*(a^3(g_3)) ...
HopfCochain identify_tensor(const HopfAlgebroid& h, const std::vector<AlgebroidElement>& factors);

/// The tensor-side structure: faces insert 1 or apply the coproduct,
/// degeneracies apply the counit, tau_n = (Delta^{n-1} S(a^1)) (a^2 (x) .. (x) a^n (x) 1).
HopfCochain tensor_face(const HopfAlgebroid& h, std::size_t i, const std::vector<AlgebroidElement>& factors);
HopfCochain tensor_degeneracy(const HopfAlgebroid& h, std::size_t j, const std::vector<AlgebroidElement>& factors);
HopfCochain tau_via_hopf(const HopfAlgebroid& h, const std::vector<AlgebroidElement>& factors);
/// tau on a cochain through its elementary-tensor expansion.
HopfCochain tau_via_hopf(const HopfAlgebroid& h, const HopfCochain& c);

/// Total complex of Fun(G^p, B^q) with D = b + (-1)^p d_B on the (p,q) block.
struct TotalComplex {
  struct Block {
    std::size_t p, q, offset, size;
  };
  std::shared_ptr<const GradedAlgebra> base;
  std::size_t max_degree = 0;
  std::vector<std::size_t> dims;                 // total degrees 0..max_degree+1
  std::vector<std::vector<Block>> blocks;        // same range
  std::vector<SparseMatrix> differential;        // D^m for m = 0..max_degree
};

/// Finite G only. Throws MathError if D^2 != 0.
TotalComplex assemble_total_complex(std::shared_ptr<const GradedAlgebra> base, std::size_t max_degree,
                                    Execution exec = kernels::default_execution());

/// Cohomology of the total complex in degrees 0..max_degree.
std::vector<std::size_t> hochschild_cohomology(const TotalComplex& total,
                                               Execution exec = kernels::default_execution());

/// The subcomplex fixed by lambda = (-1)^p t, in coordinates of its orbit basis.
struct CyclicSubcomplex {
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> differential;
};

/// Requires a monomial action on B (UnsupportedError otherwise).
CyclicSubcomplex cyclic_subcomplex(const TotalComplex& total, Execution exec = kernels::default_execution());

std::vector<std::size_t> cyclic_cohomology(std::shared_ptr<const GradedAlgebra> base, std::size_t max_degree);

/// dim HC^n = sum_k dim H^{n-2k}(total) for n <= max_degree; with a complex
/// whose cochain algebra is B, also = sum_k dim H^{n-2k}(invariant subcomplex)
/// and H(total) = H(invariant subcomplex).
Report verify_hopf_cyclic_decomposition(std::shared_ptr<const GradedAlgebra> base, std::size_t max_degree,
                                        const SimplicialGComplex* complex = nullptr);

struct CyclicStructureOptions {
  std::size_t max_n = 4;                   // highest cochain degree formed
  std::size_t samples = 3;                 // random cochains per degree
  std::uint64_t seed = 0xc0c1c11c;
  std::size_t coherence_max_n = 3;         // tensor coherence on up to this many factors
  std::size_t coherence_limit = 600;       // all lists of basis elements of A when there are at most this many, else a sample
};

/// Cosimplicial and cyclic identities, b^2 = 0, and coherence between the
/// tensor-side and function-side operators.
Report verify_cyclic_structure(std::shared_ptr<const GradedAlgebra> base, const CyclicStructureOptions& options = {});

}  // namespace equihodge
