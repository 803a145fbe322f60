#include "equihodge/twisted.hpp"

#include "equihodge/errors.hpp"
#include "equihodge/kernels.hpp"

namespace equihodge {

namespace {

Rational power(const Rational& x, long e) {
  Rational base = e < 0 ? Rational(1 / x) : x;
  Rational out = 1;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
  return out;
}

/// Diagonal M_A^e on invariant p-cochains.
Matrix scaling(const InvariantSubcomplex& sub, const TwistWeight& a, std::size_t p, long e) {
  const auto& ids = sub.orbit_ids.at(p);
  Matrix m(ids.size(), ids.size());
  for (std::size_t j = 0; j < ids.size(); ++j) m(j, j) = power(a.per_orbit.at(p).at(ids[j]), e);
  return m;
}

std::string k_label(long e) { return "k=" + std::to_string(e); }

long long alternating_sum(const std::vector<std::size_t>& v) {
  long long s = 0;
  for (std::size_t p = 0; p < v.size(); ++p) s += (p % 2 ? -1 : 1) * static_cast<long long>(v[p]);
  return s;
}

}  // namespace

TwistWeight TwistWeight::constant(const SimplicialGComplex& k, Rational v) {
  TwistWeight a;
  for (int p = 0; p <= k.dimension(); ++p) a.per_orbit.emplace_back(k.orbits(p).size(), v);
  return a;
}

TwistWeight TwistWeight::from_simplices(const SimplicialGComplex& k, const std::map<Simplex, Rational>& values,
                                        Rational fallback) {
  if (sgn(fallback) <= 0) throw ValidationError("weight.default", "weight must be positive");
  for (const auto& [s, v] : values) {
    if (!k.contains(s)) throw ValidationError("weight.values", describe(s) + " is not a simplex of the complex");
    if (sgn(v) <= 0) throw ValidationError("weight.values", "weight must be positive on " + describe(s));
  }
  auto lookup = [&](const Simplex& s) {
    const auto it = values.find(s);
    return it == values.end() ? fallback : it->second;
  };
  TwistWeight a;
  for (int p = 0; p <= k.dimension(); ++p) {
    const auto& orbits = k.orbits(p);
    std::vector<std::optional<Rational>> per(orbits.size());
    if (k.is_periodic()) {
      for (const auto& [s, v] : values) {
        if (static_cast<int>(s.size()) != p + 1) continue;
        auto& slot = per[k.orbit_of(s).orbit];
        if (slot && *slot != v)
          throw ValidationError("weight.values", "weight is not invariant on the orbit of " + describe(s) +
                                                     " (only unimodular twists are supported)");
        slot = v;
      }
    } else {
      for (std::size_t o = 0; o < orbits.size(); ++o)
        for (std::size_t m : orbits[o].members) {
          const Rational v = lookup(k.simplex(p, m));
          if (per[o] && *per[o] != v)
            throw ValidationError("weight.values", "weight is not invariant on the orbit of " +
                                                       describe(orbits[o].representative) +
                                                       " (only unimodular twists are supported)");
          per[o] = v;
        }
    }
    std::vector<Rational> row;
    for (const auto& v : per) row.push_back(v ? *v : fallback);
    a.per_orbit.push_back(std::move(row));
  }
  return a;
}

TwistWeight TwistWeight::from_cutoff(const SimplicialGComplex& k, const Cutoff& f) {
  require_covering(k, f, false);
  TwistWeight a;
  for (int p = 0; p <= k.dimension(); ++p) {
    std::vector<Rational> row;
    for (const auto& orbit : k.orbits(p)) row.push_back(weight_squared(k, f, orbit.representative));
    a.per_orbit.push_back(std::move(row));
  }
  return a;
}

std::vector<Matrix> twisted_differential(const SimplicialGComplex& k, const InvariantSubcomplex& sub,
                                         const TwistWeight& a, long exponent) {
  if (a.per_orbit.size() != static_cast<std::size_t>(k.dimension() + 1))
    throw std::invalid_argument("weight does not match the complex");
  std::vector<Matrix> out;
  for (std::size_t p = 0; p < sub.differential.size(); ++p)
    out.push_back(kernels::matmul(kernels::matmul(scaling(sub, a, p + 1, -exponent), sub.differential[p]),
                                  scaling(sub, a, p, exponent)));
  return out;
}

std::vector<std::size_t> twisted_betti(const SimplicialGComplex& k, const TwistWeight& a, long exponent) {
  const InvariantSubcomplex sub = invariant_subcomplex(k);
  return cohomology_dims(sub.dims(), twisted_differential(k, sub, a, exponent));
}

// ---------------------------------------------------------------------------

namespace {

/// Edges through the representative of each vertex orbit, with whether the
/// vertex is the edge's first vertex.
std::vector<std::vector<std::pair<Simplex, bool>>> vertex_stars(const SimplicialGComplex& k) {
  std::vector<std::vector<std::pair<Simplex, bool>>> stars;
  for (const auto& orbit : k.orbits(0)) {
    const Vertex& v = orbit.representative.front();
    std::vector<std::pair<Simplex, bool>> star;
    for (std::size_t i = 0; i < k.count(1); ++i) {
      const Simplex& e = k.simplex(1, i);
      if (!k.is_periodic()) {
        if (e[0] == v || e[1] == v) star.emplace_back(e, e[0] == v);
        continue;
      }
      for (const Vertex& u : e) {
        if (u.id != v.id) continue;
        GroupElement shift(v.offset.size());
        for (std::size_t c = 0; c < shift.size(); ++c) shift[c] = v.offset[c] - u.offset[c];
        const Simplex moved = k.act(shift, e).first;
        star.emplace_back(moved, moved[0] == v);
      }
    }
    stars.push_back(std::move(star));
  }
  return stars;
}

}  // namespace

std::optional<Vector> invariant_flow(const SimplicialGComplex& k, int bound, std::size_t max_basis) {
  if (k.dimension() < 1) return std::nullopt;
  const InvariantSubcomplex sub = invariant_subcomplex(k);
  const auto dims = sub.dims();
  const Matrix z = sub.differential.size() > 1 ? nullspace(sub.differential[1]) : Matrix::identity(dims[1]);
  const std::size_t m = std::min(z.cols(), max_basis);
  if (m == 0) return std::nullopt;

  struct Incident {
    Vector row;  // value of each invariant basis vector on the edge
    bool tail;
  };
  std::vector<std::vector<Incident>> stars;
  for (const auto& star : vertex_stars(k)) {
    std::vector<Incident> rows;
    for (const auto& [edge, tail] : star) {
      Vector row(dims[1]);
      for (std::size_t j = 0; j < dims[1]; ++j) row[j] = InvariantSubcomplex::value(k, 1, j, sub, edge);
      rows.push_back({std::move(row), tail});
    }
    stars.push_back(std::move(rows));
  }

  std::vector<long> coeff(m, -bound);
  while (true) {
    bool nonzero = false;
    Vector c(dims[1]);
    for (std::size_t i = 0; i < m; ++i)
      if (coeff[i] != 0) {
        nonzero = true;
        c = add(c, scale(Rational(coeff[i]), z.column(i)));
      }
    if (nonzero) {
      bool ok = true;
      for (const auto& star : stars) {
        bool out = false, in = false;
        for (const auto& inc : star) {
          Rational v = 0;
          for (std::size_t j = 0; j < c.size(); ++j) v += inc.row[j] * c[j];
          const int s = sgn(v) * (inc.tail ? 1 : -1);
          out = out || s > 0;
          in = in || s < 0;
        }
        if (!(out && in)) {
          ok = false;
          break;
        }
      }
      if (ok) return c;
    }
    std::size_t i = 0;
    while (i < m && coeff[i] == bound) coeff[i++] = -bound;
    if (i == m) break;
    ++coeff[i];
  }
  return std::nullopt;
}

Report euler_index_sweep(const SimplicialGComplex& k, const TwistWeight& a, const std::vector<long>& exponents,
                         const Cutoff& f) {
  Report r;
  r.title = "euler";
  const InvariantSubcomplex sub = invariant_subcomplex(k);
  const auto dims = sub.dims();
  const auto betti = cohomology_dims(dims, sub.differential);
  const long long chi_cochains = alternating_sum(dims);
  const long long chi_betti = alternating_sum(betti);
  r.table_of("invariant_cochain_dims", dims);
  r.table_of("invariant_betti", betti);
  r.check("euler-poincare", chi_cochains == chi_betti,
          chi_cochains == chi_betti ? "" : "cochain sum " + std::to_string(chi_cochains) + ", Betti sum " +
                                               std::to_string(chi_betti));
  r.fact("euler_characteristic", std::to_string(chi_betti));

  for (std::size_t p = 0; p < a.per_orbit.size(); ++p)
    for (const auto& v : a.per_orbit[p])
      if (sgn(v) <= 0) throw ValidationError("weight", "weight must be positive");

  const WindowHodgePackage pkg = build_window_package(k, f);
  std::string square, iso, betti_w, chi_w, harmonic_w, zero_w;
  for (long e : exponents) {
    const auto d = twisted_differential(k, sub, a, e);
    for (std::size_t p = 0; p + 1 < d.size(); ++p)
      if (!kernels::matmul(d[p + 1], d[p]).is_zero() && square.empty()) square = k_label(e);
    for (std::size_t p = 0; p < d.size(); ++p) {
      // M_A^{-e} carries (inv, d) to (inv, d_{A,e}).
      const Matrix lhs = kernels::matmul(d[p], scaling(sub, a, p, -e));
      const Matrix rhs = kernels::matmul(scaling(sub, a, p + 1, -e), sub.differential[p]);
      if (lhs != rhs && iso.empty()) iso = k_label(e) + ", degree " + std::to_string(p);
    }
    if (e == 0 && d != sub.differential) zero_w = "d_{A,0} differs from d";
    const auto b = cohomology_dims(dims, d);
    r.table_of("betti[" + k_label(e) + "]", b);
    if (b != betti && betti_w.empty()) betti_w = k_label(e);
    if (alternating_sum(b) != chi_betti && chi_w.empty()) chi_w = k_label(e);

    std::vector<std::size_t> harmonic;
    for (std::size_t p = 0; p < dims.size(); ++p) {
      Matrix lap(dims[p], dims[p]);
      if (p > 0) lap += kernels::matmul(d[p - 1], adjoint(d[p - 1], pkg.gram[p - 1], pkg.gram[p]));
      if (p < d.size()) lap += kernels::matmul(adjoint(d[p], pkg.gram[p], pkg.gram[p + 1]), d[p]);
      harmonic.push_back(dims[p] - rank(lap));
    }
    r.table_of("harmonic[" + k_label(e) + "]", harmonic);
    if (harmonic != b && harmonic_w.empty()) harmonic_w = k_label(e);
  }
  r.check("twisted.square-zero", square.empty(), square);
  r.check("twisted.chain-isomorphism", iso.empty(), iso);
  if (std::find(exponents.begin(), exponents.end(), 0L) != exponents.end())
    r.check("twisted.k-zero-is-d", zero_w.empty(), zero_w);
  r.check("twisted.betti-independent-of-k", betti_w.empty(), betti_w);
  r.check("twisted.euler-independent-of-k", chi_w.empty(), chi_w);
  r.check("twisted.harmonic-equals-betti", harmonic_w.empty(), harmonic_w);

  // Odd dimension: closed, oriented, orientation-preserving action forces chi = 0.
  const int n = k.dimension();
  bool oriented = false;
  try {
    orientation(k);
    oriented = action_preserves_orientation(k);
  } catch (const UnsupportedError&) {
  }
  if (n % 2 == 1 && oriented)
    r.check("odd-dimension.euler-zero", chi_betti == 0, "chi = " + std::to_string(chi_betti));
  else
    r.skip("odd-dimension.euler-zero",
           n % 2 == 1 ? "not a closed complex with an orientation-preserving action" : "even dimension");

  const auto flow = invariant_flow(k);
  if (flow) {
    std::string text;
    for (std::size_t j = 0; j < flow->size(); ++j) text += (j ? "," : "") + to_string((*flow)[j]);
    r.fact("invariant_flow", text);
    r.check("flow.euler-zero", chi_betti == 0, "chi = " + std::to_string(chi_betti) + " with a nowhere-vanishing invariant flow");
  } else {
    r.fact("invariant_flow", "none");
    r.skip("flow.euler-zero", "no nowhere-vanishing invariant flow in the search range");
  }
  return r;
}

Report duality_check_k1(const SimplicialGComplex& k, const TwistWeight& a) {
  Report r;
  r.title = "duality";
  try {
    orientation(k);
  } catch (const UnsupportedError& e) {
    r.decline("duality", e.what());
    return r;
  }
  if (!action_preserves_orientation(k)) {
    r.decline("duality", "the action reverses orientation, so invariant classes need not pair");
    return r;
  }
  const int n = k.dimension();
  InvariantSubcomplex twisted = invariant_subcomplex(k);
  const InvariantSubcomplex sub = twisted;
  twisted.differential = twisted_differential(k, sub, a, 1);
  const auto b = cohomology_dims(twisted.dims(), twisted.differential);
  r.table_of("betti[k=1]", b);
  bool symmetric = true;
  for (int p = 0; p <= n; ++p) symmetric = symmetric && b[static_cast<std::size_t>(p)] == b[static_cast<std::size_t>(n - p)];
  r.check("betti.symmetric", symmetric);

  std::vector<Matrix> classes;
  for (int p = 0; p <= n; ++p)
    classes.push_back(kernels::matmul(scaling(sub, a, static_cast<std::size_t>(p), 1), cohomology_basis(twisted, p)));
  std::vector<std::size_t> ranks;
  std::string witness;
  for (int p = 0; p <= n; ++p) {
    const auto pairing = poincare_pairing(k, p, classes[static_cast<std::size_t>(p)], classes[static_cast<std::size_t>(n - p)]);
    ranks.push_back(pairing.rank);
    if (pairing.rank != b[static_cast<std::size_t>(p)] || pairing.rank != b[static_cast<std::size_t>(n - p)])
      witness = "degree " + std::to_string(p) + ": rank " + std::to_string(pairing.rank);
  }
  r.table_of("pairing_rank", ranks);
  r.check("pairing.nondegenerate", witness.empty(), witness);
  const long long chi = alternating_sum(b);
  if (n % 2 == 1) r.check("odd-dimension.euler-zero", chi == 0, "chi = " + std::to_string(chi));
  return r;
}

}  // namespace equihodge
