#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "equihodge/complex.hpp"
#include "equihodge/matrix.hpp"
#include "equihodge/report.hpp"

namespace equihodge {

/// Nonnegative rational cutoff per simplex. Simplices not listed take
/// `default_value`, which must be 0 on periodic complexes (finite support).
struct Cutoff {
  Rational default_value = 0;
  std::map<Simplex, Rational> values;

  static Cutoff constant(Rational v);
  Rational operator()(const Simplex& s) const;
};

/// Simplices of degree p on which f is nonzero, in global order.
std::vector<Simplex> cutoff_support(const SimplicialGComplex& k, const Cutoff& f, int p);

/// Every orbit meets {f != 0}; with `strict`, every orbit contains a simplex
/// with f = 1. Throws ValidationError naming the first uncovered orbit.
void require_covering(const SimplicialGComplex& k, const Cutoff& f, bool strict);

/// A(s)^2 = sum over g of f(g s)^2 (stabilizers counted with multiplicity).
Rational weight_squared(const SimplicialGComplex& k, const Cutoff& f, const Simplex& s);

/// sum over g with g.x = +-y of the orientation sign (0 when x and y lie in different orbits).
Rational orbit_incidence(const SimplicialGComplex& k, const Simplex& x, const Simplex& y);

/// P_f in degree p on cochains supported on cutoff_support(k, f, p):
/// (P_f mu)(x) = f(x) A(x)^-2 sum_g f(g x) mu(g x).
struct Projection {
  std::vector<Simplex> support;
  Matrix matrix;
};
Projection projection(const SimplicialGComplex& k, const Cutoff& f, int p);

/// Window space W^p = {f s : s invariant} and the operators on it, all in the
/// coordinates of the invariant basis (w = f s has the coordinates of s).
struct WindowHodgePackage {
  InvariantSubcomplex sub;
  std::vector<Matrix> gram;        // [p]: <f u_i, f u_j>, diagonal
  std::vector<Matrix> d;           // [p]: d_f, W^p -> W^{p+1}
  std::vector<Matrix> d_adjoint;   // [p]: d_f^*, W^{p+1} -> W^p
  std::vector<Matrix> laplacian;   // [p]
  std::vector<Matrix> harmonic;    // [p]: columns span ker of the Laplacian
  std::vector<Matrix> harmonic_projector;
  std::vector<Matrix> green;

  std::size_t degrees() const { return gram.size(); }
  std::vector<std::size_t> harmonic_dims() const;
  /// <x, y> on W^p.
  Rational inner(int p, const Vector& x, const Vector& y) const;
};

WindowHodgePackage build_window_package(const SimplicialGComplex& k, const Cutoff& f, bool strict = false);

/// Adjoint of a map W^p -> W^q with respect to the Gram matrices.
Matrix adjoint(const Matrix& a, const Matrix& gram_source, const Matrix& gram_target);

struct HodgeParts {
  Vector harmonic;  // H(w)
  Vector image;     // Laplacian(Green(w))
};
HodgeParts hodge_decompose(const WindowHodgePackage& pkg, int p, const Vector& w);

/// H(f alpha) for an invariant cocycle alpha (MathError if alpha is not closed).
Vector harmonic_representative(const WindowHodgePackage& pkg, int p, const Vector& alpha);

/// Ambient values of f s on the degree-p support, s in invariant coordinates.
Vector window_values(const SimplicialGComplex& k, const Cutoff& f, const InvariantSubcomplex& sub, int p,
                     const Vector& s);

struct HodgeOptions {
  bool strict_cutoff = false;
  std::size_t samples = 20;
  std::uint64_t seed = 0x40d9e2025;
};

/// Weight, projection, operator identities, decomposition samples and the
/// harmonic isomorphism, all exact.
Report verify_hodge(const SimplicialGComplex& k, const Cutoff& f, const HodgeOptions& opt = {});

}  // namespace equihodge
