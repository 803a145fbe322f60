#pragma once

#include <map>
#include <optional>
#include <vector>

#include "equihodge/complex.hpp"
#include "equihodge/hodge.hpp"
#include "equihodge/report.hpp"

namespace equihodge {

/// A positive G-invariant weight, one value per simplex orbit: [p][orbit].
struct TwistWeight {
  std::vector<std::vector<Rational>> per_orbit;

  static TwistWeight constant(const SimplicialGComplex& k, Rational v);
  /// Per-simplex values (missing simplices take `fallback`); throws
  /// ValidationError when the values are not constant on orbits or not positive.
  static TwistWeight from_simplices(const SimplicialGComplex& k, const std::map<Simplex, Rational>& values,
                                    Rational fallback = 1);
  /// A^2 of a covering cutoff, orbit by orbit.
  static TwistWeight from_cutoff(const SimplicialGComplex& k, const Cutoff& f);
};

/// d_{A,k} = M_A^{-k} d M_A^{k} on the invariant subcomplex, one matrix per degree.
std::vector<Matrix> twisted_differential(const SimplicialGComplex& k, const InvariantSubcomplex& sub,
                                         const TwistWeight& a, long exponent);

std::vector<std::size_t> twisted_betti(const SimplicialGComplex& k, const TwistWeight& a, long exponent);

/// Twisted Betti numbers and Euler characteristic over the exponents, with
/// the twisted Laplacian on the window space of `f` as a second route.
Report euler_index_sweep(const SimplicialGComplex& k, const TwistWeight& a, const std::vector<long>& exponents,
                         const Cutoff& f);

/// Search for an invariant 1-cocycle that, read as a flow on edges, has an
/// outgoing and an incoming edge at every vertex. Coefficients range over
/// -bound..bound on (at most `max_basis` vectors of) a basis of invariant cocycles.
std::optional<Vector> invariant_flow(const SimplicialGComplex& k, int bound = 2, std::size_t max_basis = 6);

/// Pairing of twisted classes at exponent 1 on a closed oriented complex with
/// an orientation-preserving action; declined otherwise.
Report duality_check_k1(const SimplicialGComplex& k, const TwistWeight& a);

}  // namespace equihodge
