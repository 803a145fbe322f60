#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "equihodge/graded_algebra.hpp"
#include "equihodge/group.hpp"
#include "equihodge/matrix.hpp"
#include "equihodge/report.hpp"

namespace equihodge {

/// A vertex of the ambient complex: representative `id` translated by
/// `offset` (empty for finite complexes). The global vertex order compares
/// offsets first, then ids.
struct Vertex {
  std::vector<std::int64_t> offset;
  int id = 0;

  Vertex() = default;
  explicit Vertex(int id_, std::vector<std::int64_t> offset_ = {}) : offset(std::move(offset_)), id(id_) {}
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Vertices in increasing global order; the orientation is the one induced by that order.
using Simplex = std::vector<Vertex>;

std::string describe(const Simplex& s);

/// Where an orbit member sits relative to its orbit: the member equals
/// `sign` times the image of the orbit representative.
struct OrbitPosition {
  std::size_t orbit = 0;
  int sign = 1;
};

struct Orbit {
  Simplex representative;
  /// Some group element maps the representative to itself reversing orientation,
  /// so no invariant cochain is supported on this orbit.
  bool sign_killed = false;
  /// Finite complexes: indices of the member simplices.
  std::vector<std::size_t> members;
};

/// An oriented simplicial complex with a simplicial action of G.
///   finite:   every simplex listed, G finite, one vertex map per group element;
///   periodic: G = Z^d acting by translating offsets, one representative per
///             simplex orbit, faces resolved through translation normal forms.
/// The diagonal metric (default 1) must be G-invariant.
class SimplicialGComplex {
 public:
  struct FiniteSpec {
    std::size_t vertex_count = 0;
    std::vector<std::string> vertex_names;          // optional
    std::vector<std::vector<std::vector<int>>> simplices;  // [dim][k] vertex ids, dim 0 included
    std::vector<std::vector<int>> vertex_maps;      // per group element
    std::vector<std::vector<Rational>> metric;      // optional, [dim][k]
  };
  struct PeriodicSpec {
    std::size_t vertex_orbits = 0;
    std::vector<std::string> vertex_names;          // optional
    std::vector<std::vector<Simplex>> simplices;    // [dim] orbit representatives
    std::vector<std::vector<Rational>> metric;      // optional, per orbit
  };

  static SimplicialGComplex finite(std::shared_ptr<const GroupModel> group, FiniteSpec spec);
  static SimplicialGComplex periodic(std::shared_ptr<const GroupModel> group, PeriodicSpec spec);

  bool is_periodic() const noexcept { return periodic_; }
  const GroupModel& group() const noexcept { return *group_; }
  std::shared_ptr<const GroupModel> group_ptr() const noexcept { return group_; }
  /// Top dimension (-1 for an empty complex).
  int dimension() const noexcept { return static_cast<int>(simplices_.size()) - 1; }

  /// Stored simplices of dimension p: all of them (finite) or orbit representatives (periodic).
  std::size_t count(int p) const;
  const Simplex& simplex(int p, std::size_t i) const { return simplices_.at(static_cast<std::size_t>(p)).at(i); }
  std::optional<std::size_t> index_of(const Simplex& s) const;
  std::string vertex_name(const Vertex& v) const;

  /// g . s as (sorted simplex, orientation sign).
  std::pair<Simplex, int> act(const GroupElement& g, const Simplex& s) const;
  /// Periodic: the translate of s whose first vertex has offset 0, and the
  /// translation t with s = t . normal_form.
  std::pair<Simplex, GroupElement> normal_form(const Simplex& s) const;
  /// Whether s is a simplex of the ambient complex.
  bool contains(const Simplex& s) const;

  const std::vector<Orbit>& orbits(int p) const { return orbits_.at(static_cast<std::size_t>(p)); }
  /// Orbit and sign of any ambient simplex (throws if s is not a simplex).
  OrbitPosition orbit_of(const Simplex& s) const;

  /// Ambient metric weight of a simplex.
  Rational metric(const Simplex& s) const;

  // Finite complexes only.
  /// Coboundary C^p -> C^{p+1}, rows indexed by (p+1)-simplices.
  const Matrix& coboundary(int p) const;
  /// Pullback (pi(g)c)(s) = c(g.s) on C^p.
  Matrix action_matrix(const GroupElement& g, int p) const;

 private:
  SimplicialGComplex() = default;
  void build_orbits();
  void validate_faces() const;

  bool periodic_ = false;
  std::shared_ptr<const GroupModel> group_;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::map<Simplex, std::size_t>> index_;
  std::vector<std::string> vertex_names_;
  std::vector<std::vector<int>> vertex_maps_;
  std::vector<std::vector<Rational>> metric_;        // finite: per simplex; periodic: per orbit
  std::vector<std::vector<Orbit>> orbits_;
  std::vector<std::vector<OrbitPosition>> position_;  // finite: per simplex
  std::vector<Matrix> coboundary_;
};

/// Faces of s with the coboundary sign: (face, (-1)^i) for i = 0..dim.
std::vector<std::pair<Simplex, int>> faces(const Simplex& s);

/// G-invariant cochains. Basis vector j is the signed indicator of orbit
/// `orbit_ids[p][j]`: 1 on the representative, extended by invariance.
struct InvariantSubcomplex {
  std::vector<std::vector<std::size_t>> orbit_ids;
  std::vector<Matrix> differential;  // [p]: dims[p+1] x dims[p]
  std::vector<std::size_t> dims() const;
  /// Value of basis vector j of degree p on an ambient simplex.
  static Rational value(const SimplicialGComplex& k, int p, std::size_t j, const InvariantSubcomplex& sub,
                        const Simplex& s);
};

InvariantSubcomplex invariant_subcomplex(const SimplicialGComplex& k);

/// Finite complexes: the invariant basis as ambient column vectors.
Matrix invariant_basis(const SimplicialGComplex& k, const InvariantSubcomplex& sub, int p);

/// Betti numbers of a cochain complex given by its differentials (exact ranks).
std::vector<std::size_t> cohomology_dims(const std::vector<std::size_t>& dims, const std::vector<Matrix>& d);

std::vector<std::size_t> invariant_betti(const SimplicialGComplex& k);

/// Alternating sum of invariant Betti numbers, cross-checked against the
/// alternating sum of invariant cochain dimensions (MathError on mismatch).
long long euler_characteristic(const SimplicialGComplex& k);

/// Finite complexes: (1/|G|) sum_g pi(g) on C^p.
Matrix average_projector(const SimplicialGComplex& k, int p);

/// Validation and cross-checks: d^2 = 0, action, commutation, metric
/// invariance, invariant basis vs fixed-vector solve vs projector image,
/// Euler-Poincare.
Report verify_complex(const SimplicialGComplex& k);

/// Coherent orientation of a closed pseudomanifold: one sign per top simplex
/// (finite) or per top-simplex orbit (periodic). Throws UnsupportedError when
/// the complex is not a closed pseudomanifold or not orientable.
std::vector<int> orientation(const SimplicialGComplex& k);

/// Every group element maps the fundamental class to itself.
bool action_preserves_orientation(const SimplicialGComplex& k);

struct PoincarePairing {
  int p = 0;
  Matrix matrix;  // rows: invariant H^p basis, columns: invariant H^{n-p} basis
  std::size_t rank = 0;
};

/// Cohomology classes as invariant cocycles not in the image of d, in
/// invariant coordinates: a complement of im d_{p-1} inside ker d_p.
Matrix cohomology_basis(const InvariantSubcomplex& sub, int p);

/// <a_i cup b_j, [M]> with the front-face/back-face cup product and the
/// global vertex order. `left`/`right` default to invariant cohomology bases.
PoincarePairing poincare_pairing(const SimplicialGComplex& k, int p, const std::optional<Matrix>& left = {},
                                 const std::optional<Matrix>& right = {});

/// The cochain complex C*(K) as a graded algebra without product, with the
/// coboundary as differential and pullback action. Finite complexes only.
GradedAlgebra cochain_algebra(const SimplicialGComplex& k);

/// Functions on the vertex set with the pullback action. Finite complexes only.
GradedAlgebra vertex_function_algebra(const SimplicialGComplex& k);

}  // namespace equihodge
