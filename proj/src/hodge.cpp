#include "equihodge/hodge.hpp"

#include <random>

#include "equihodge/errors.hpp"
#include "equihodge/kernels.hpp"

namespace equihodge {

Cutoff Cutoff::constant(Rational v) {
  Cutoff f;
  f.default_value = std::move(v);
  return f;
}

Rational Cutoff::operator()(const Simplex& s) const {
  const auto it = values.find(s);
  return it == values.end() ? default_value : it->second;
}

namespace {

/// Orientation signs of the g with g.x = +-y, one entry per such g.
std::vector<int> transports(const SimplicialGComplex& k, const Simplex& x, const Simplex& y) {
  if (x.size() != y.size()) return {};
  if (k.is_periodic()) {
    if (k.orbit_of(x).orbit != k.orbit_of(y).orbit) return {};
    return {1};  // translations act freely and preserve the vertex order
  }
  std::vector<int> out;
  const GroupModel& g = k.group();
  for (std::size_t a = 0; a < g.order(); ++a) {
    const auto [image, sign] = k.act(g.element(a), x);
    if (image == y) out.push_back(sign);
  }
  return out;
}

void validate_cutoff(const SimplicialGComplex& k, const Cutoff& f) {
  if (sgn(f.default_value) < 0) throw ValidationError("cutoff.default", "cutoff must be nonnegative");
  if (k.is_periodic() && sgn(f.default_value) != 0)
    throw ValidationError("cutoff.default", "a periodic complex needs a finitely supported cutoff (default 0)");
  for (const auto& [s, v] : f.values) {
    if (!k.contains(s)) throw ValidationError("cutoff.values", describe(s) + " is not a simplex of the complex");
    if (sgn(v) < 0) throw ValidationError("cutoff.values", "negative value on " + describe(s));
  }
}

std::vector<Matrix> matrices_of(std::size_t n) { return std::vector<Matrix>(n); }

Matrix diagonal_inverse(const Matrix& g) {
  Matrix out(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (sgn(g(i, i)) == 0) throw MathError("singular Gram matrix");
    out(i, i) = 1 / g(i, i);
  }
  return out;
}

Matrix transpose_of(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

Matrix mul(const Matrix& a, const Matrix& b) { return kernels::matmul(a, b); }

bool symmetric(const Matrix& m) { return m == transpose_of(m); }

}  // namespace

std::vector<Simplex> cutoff_support(const SimplicialGComplex& k, const Cutoff& f, int p) {
  std::vector<Simplex> out;
  if (k.is_periodic()) {
    for (const auto& [s, v] : f.values)
      if (static_cast<int>(s.size()) == p + 1 && sgn(v) != 0) out.push_back(s);
    return out;  // std::map keeps global order
  }
  for (std::size_t i = 0; i < k.count(p); ++i)
    if (sgn(f(k.simplex(p, i))) != 0) out.push_back(k.simplex(p, i));
  return out;
}

void require_covering(const SimplicialGComplex& k, const Cutoff& f, bool strict) {
  validate_cutoff(k, f);
  for (int p = 0; p <= k.dimension(); ++p) {
    const auto& orbits = k.orbits(p);
    std::vector<bool> nonzero(orbits.size(), false), one(orbits.size(), false);
    for (const Simplex& s : cutoff_support(k, f, p)) {
      const std::size_t o = k.orbit_of(s).orbit;
      nonzero[o] = true;
      if (f(s) == 1) one[o] = true;
    }
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      if (!nonzero[o])
        throw ValidationError("cutoff", "orbit of " + describe(orbits[o].representative) + " misses the support");
      if (strict && !one[o])
        throw ValidationError("cutoff", "strict cutoff: f is not 1 anywhere on the orbit of " +
                                            describe(orbits[o].representative));
    }
  }
}

Rational weight_squared(const SimplicialGComplex& k, const Cutoff& f, const Simplex& s) {
  Rational a = 0;
  for (const Simplex& y : cutoff_support(k, f, static_cast<int>(s.size()) - 1)) {
    const auto t = transports(k, s, y);
    if (!t.empty()) {
      const Rational v = f(y);
      a += static_cast<long>(t.size()) * v * v;
    }
  }
  return a;
}

Rational orbit_incidence(const SimplicialGComplex& k, const Simplex& x, const Simplex& y) {
  long sum = 0;
  for (int s : transports(k, x, y)) sum += s;
  return sum;
}

Projection projection(const SimplicialGComplex& k, const Cutoff& f, int p) {
  Projection out;
  out.support = cutoff_support(k, f, p);
  const std::size_t n = out.support.size();
  out.matrix = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Simplex& x = out.support[i];
    const Rational a2 = weight_squared(k, f, x);
    if (sgn(a2) == 0) throw MathError("A vanishes on " + describe(x));
    const Rational lead = f(x) / a2;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational c = orbit_incidence(k, x, out.support[j]);
      if (sgn(c) != 0) out.matrix(i, j) = lead * c * f(out.support[j]);
    }
  }
  return out;
}

Vector window_values(const SimplicialGComplex& k, const Cutoff& f, const InvariantSubcomplex& sub, int p,
                     const Vector& s) {
  const auto support = cutoff_support(k, f, p);
  Vector out(support.size());
  for (std::size_t i = 0; i < support.size(); ++i) {
    Rational v = 0;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (sgn(s[j]) != 0) v += s[j] * InvariantSubcomplex::value(k, p, j, sub, support[i]);
    out[i] = f(support[i]) * v;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> WindowHodgePackage::harmonic_dims() const {
  std::vector<std::size_t> out;
  for (const auto& h : harmonic) out.push_back(h.cols());
  return out;
}

Rational WindowHodgePackage::inner(int p, const Vector& x, const Vector& y) const {
  return bilinear(x, gram.at(static_cast<std::size_t>(p)), y);
}

Matrix adjoint(const Matrix& a, const Matrix& gram_source, const Matrix& gram_target) {
  return mul(mul(diagonal_inverse(gram_source), transpose_of(a)), gram_target);
}

WindowHodgePackage build_window_package(const SimplicialGComplex& k, const Cutoff& f, bool strict) {
  if (!k.group().is_unimodular()) throw UnsupportedError("the window package needs a unimodular group (chi = 1)");
  require_covering(k, f, strict);
  WindowHodgePackage pkg;
  pkg.sub = invariant_subcomplex(k);
  const auto dims = pkg.sub.dims();
  const std::size_t degrees = dims.size();

  pkg.gram = matrices_of(degrees);
  for (std::size_t p = 0; p < degrees; ++p) {
    Matrix g(dims[p], dims[p]);
    std::map<std::size_t, std::size_t> column_of;
    for (std::size_t j = 0; j < dims[p]; ++j) column_of[pkg.sub.orbit_ids[p][j]] = j;
    for (const Simplex& s : cutoff_support(k, f, static_cast<int>(p))) {
      const auto it = column_of.find(k.orbit_of(s).orbit);
      if (it == column_of.end()) continue;  // orbit carries no invariant cochain
      const Rational v = f(s);
      g(it->second, it->second) += v * v * k.metric(s);
    }
    pkg.gram[p] = std::move(g);
  }

  pkg.d = pkg.sub.differential;
  for (std::size_t p = 0; p + 1 < degrees; ++p) pkg.d_adjoint.push_back(adjoint(pkg.d[p], pkg.gram[p], pkg.gram[p + 1]));

  for (std::size_t p = 0; p < degrees; ++p) {
    Matrix lap(dims[p], dims[p]);
    if (p > 0) lap += mul(pkg.d[p - 1], pkg.d_adjoint[p - 1]);
    if (p + 1 < degrees) lap += mul(pkg.d_adjoint[p], pkg.d[p]);
    const Matrix kernel = nullspace(lap);
    Matrix h(dims[p], dims[p]);
    if (kernel.cols() > 0) {
      const Matrix kt_g = mul(transpose_of(kernel), pkg.gram[p]);
      h = mul(mul(kernel, inverse(mul(kt_g, kernel))), kt_g);
    }
    const Matrix green = mul(inverse(lap + h), Matrix::identity(dims[p]) - h);
    pkg.laplacian.push_back(std::move(lap));
    pkg.harmonic.push_back(kernel);
    pkg.harmonic_projector.push_back(std::move(h));
    pkg.green.push_back(green);
  }
  return pkg;
}

HodgeParts hodge_decompose(const WindowHodgePackage& pkg, int p, const Vector& w) {
  const auto q = static_cast<std::size_t>(p);
  HodgeParts parts;
  parts.harmonic = pkg.harmonic_projector.at(q) * w;
  parts.image = pkg.laplacian[q] * (pkg.green[q] * w);
  return parts;
}

Vector harmonic_representative(const WindowHodgePackage& pkg, int p, const Vector& alpha) {
  const auto q = static_cast<std::size_t>(p);
  if (q < pkg.d.size() && !is_zero(pkg.d[q] * alpha)) throw MathError("representative is not closed");
  return pkg.harmonic_projector.at(q) * alpha;
}

// ---------------------------------------------------------------------------

namespace {

Vector random_vector(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  Vector v(n);
  for (auto& x : v) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return v;
}

std::string degree_note(std::size_t p) { return "degree " + std::to_string(p); }

}  // namespace

Report verify_hodge(const SimplicialGComplex& k, const Cutoff& f, const HodgeOptions& opt) {
  Report r;
  r.title = "hodge";
  const WindowHodgePackage pkg = build_window_package(k, f, opt.strict_cutoff);
  const auto dims = pkg.sub.dims();
  const std::size_t degrees = dims.size();
  r.check("cutoff.covering", true);

  // Weight: positive on every orbit and invariant.
  {
    std::string positive, equivariant;
    for (std::size_t p = 0; p < degrees; ++p) {
      for (const auto& orbit : k.orbits(static_cast<int>(p))) {
        const Rational a = weight_squared(k, f, orbit.representative);
        if (sgn(a) <= 0 && positive.empty()) positive = describe(orbit.representative);
      }
      std::vector<Simplex> probe;
      if (k.is_periodic()) {
        probe = cutoff_support(k, f, static_cast<int>(p));
      } else {
        for (std::size_t i = 0; i < k.count(static_cast<int>(p)); ++i) probe.push_back(k.simplex(static_cast<int>(p), i));
      }
      const auto window = k.group().window(2);
      for (const Simplex& s : probe) {
        const Rational a = weight_squared(k, f, s);
        for (const auto& g : window) {
          const Simplex moved = k.act(g, s).first;
          const Rational b = weight_squared(k, f, moved);
          if (b * k.group().modular_weight(g) != a && equivariant.empty())
            equivariant = describe(s) + " moved by " + k.group().describe(g);
        }
      }
    }
    r.check("weight.positive", positive.empty(), positive);
    r.check("weight.equivariant", equivariant.empty(), equivariant);
  }

  // Projection P_f on the support of f.
  {
    std::string idem, sym, fixes, range, injective;
    for (std::size_t p = 0; p < degrees; ++p) {
      const Projection pr = projection(k, f, static_cast<int>(p));
      const Matrix& m = pr.matrix;
      if (mul(m, m) != m) idem = degree_note(p);
      Matrix metric(pr.support.size(), pr.support.size());
      for (std::size_t i = 0; i < pr.support.size(); ++i) metric(i, i) = k.metric(pr.support[i]);
      if (!symmetric(mul(metric, m))) sym = degree_note(p);
      std::vector<Vector> window;
      for (std::size_t j = 0; j < dims[p]; ++j) {
        Vector e(dims[p]);
        e[j] = 1;
        window.push_back(window_values(k, f, pkg.sub, static_cast<int>(p), e));
        if (m * window.back() != window.back() && fixes.empty())
          fixes = degree_note(p) + ", basis element " + std::to_string(j);
      }
      const Matrix w = Matrix::from_columns(pr.support.size(), window);
      if (rank(w) != dims[p]) injective = degree_note(p);
      if (rank(m) != dims[p] || !same_column_space(m, w)) range = degree_note(p);
    }
    r.check("projection.idempotent", idem.empty(), idem);
    r.check("projection.symmetric", sym.empty(), sym);
    r.check("projection.fixes-window", fixes.empty(), fixes);
    r.check("projection.range-is-window", range.empty(), range);
    r.check("window.injective", injective.empty(), injective);
  }
  r.table_of("window_dims", dims);

  // d_f against the ambient coboundary of f s.
  {
    std::string ambient, square;
    for (std::size_t p = 0; p + 1 < degrees; ++p) {
      const auto support = cutoff_support(k, f, static_cast<int>(p + 1));
      for (std::size_t j = 0; j < dims[p]; ++j) {
        Vector e(dims[p]);
        e[j] = 1;
        const Vector expected = window_values(k, f, pkg.sub, static_cast<int>(p + 1), pkg.d[p] * e);
        for (std::size_t i = 0; i < support.size(); ++i) {
          Rational ds = 0;
          for (const auto& [face, sign] : faces(support[i])) ds += sign * InvariantSubcomplex::value(k, static_cast<int>(p), j, pkg.sub, face);
          if (f(support[i]) * ds != expected[i] && ambient.empty())
            ambient = degree_note(p) + ", basis element " + std::to_string(j) + " at " + describe(support[i]);
        }
      }
      if (p + 2 < degrees && !mul(pkg.d[p + 1], pkg.d[p]).is_zero()) square = degree_note(p);
    }
    r.check("df.matches-ambient", ambient.empty(), ambient);
    r.check("df.square-zero", square.empty(), square);
  }

  // Operator identities.
  {
    std::string adj, adj_sq, self, ker_closed, ker_perp, coker, green_id, green_self, green_comm, h_proj;
    for (std::size_t p = 0; p < degrees; ++p) {
      const Matrix& g = pkg.gram[p];
      const Matrix& lap = pkg.laplacian[p];
      const Matrix& h = pkg.harmonic_projector[p];
      const Matrix& gr = pkg.green[p];
      const Matrix id = Matrix::identity(dims[p]);
      if (p + 1 < degrees) {
        // <d_f w, w'> = <w, d_f^* w'> on all basis pairs.
        const Matrix lhs = mul(transpose_of(pkg.d[p]), pkg.gram[p + 1]);
        const Matrix rhs = mul(g, pkg.d_adjoint[p]);
        if (lhs != rhs) adj = degree_note(p);
        if (p + 2 < degrees && !mul(pkg.d_adjoint[p], pkg.d_adjoint[p + 1]).is_zero()) adj_sq = degree_note(p);
        if (mul(gr, pkg.d_adjoint[p]) != mul(pkg.d_adjoint[p], pkg.green[p + 1]) ||
            mul(pkg.green[p + 1], pkg.d[p]) != mul(pkg.d[p], gr))
          green_comm = degree_note(p);
      }
      if (!symmetric(mul(g, lap))) self = degree_note(p);
      std::vector<Matrix> parts;
      if (p + 1 < degrees) parts.push_back(pkg.d[p]);
      if (p > 0) parts.push_back(pkg.d_adjoint[p - 1]);
      const Matrix closed_coclosed = parts.empty() ? Matrix::identity(dims[p]) : nullspace(vstack(parts));
      if (!same_column_space(closed_coclosed, pkg.harmonic[p]) || closed_coclosed.cols() != pkg.harmonic[p].cols())
        ker_closed = degree_note(p);
      if (!mul(mul(transpose_of(pkg.harmonic[p]), g), lap).is_zero() ||
          pkg.harmonic[p].cols() + rank(lap) != dims[p])
        ker_perp = degree_note(p);
      if (pkg.harmonic[p].cols() != dims[p] - rank(lap)) coker = degree_note(p);
      if (mul(gr, lap) != id - h || mul(lap, gr) != id - h) green_id = degree_note(p);
      if (!symmetric(mul(g, gr))) green_self = degree_note(p);
      if (mul(gr, lap) != mul(lap, gr)) green_comm = degree_note(p);
      if (mul(h, h) != h || !symmetric(mul(g, h)) || !mul(lap, h).is_zero()) h_proj = degree_note(p);
    }
    r.check("adjoint.relation", adj.empty(), adj);
    r.check("adjoint.square-zero", adj_sq.empty(), adj_sq);
    r.check("laplacian.self-adjoint", self.empty(), self);
    r.check("laplacian.kernel-closed-coclosed", ker_closed.empty(), ker_closed);
    r.check("laplacian.kernel-orthogonal-image", ker_perp.empty(), ker_perp);
    r.check("laplacian.index-zero", coker.empty(), coker);
    r.check("harmonic.projector", h_proj.empty(), h_proj);
    r.check("green.identity", green_id.empty(), green_id);
    r.check("green.self-adjoint", green_self.empty(), green_self);
    r.check("green.commutes", green_comm.empty(), green_comm);
  }

  // Decomposition on seeded samples, spread over the degrees.
  {
    std::mt19937_64 rng(opt.seed);
    std::string residual, orthogonal, closed;
    for (std::size_t s = 0; s < opt.samples && degrees > 0; ++s) {
      const std::size_t p = s % degrees;
      if (dims[p] == 0) continue;
      const Vector w = random_vector(dims[p], rng);
      const HodgeParts parts = hodge_decompose(pkg, static_cast<int>(p), w);
      if (add(parts.harmonic, parts.image) != w) residual = "sample " + std::to_string(s);
      if (sgn(pkg.inner(static_cast<int>(p), parts.harmonic, parts.image)) != 0)
        orthogonal = "sample " + std::to_string(s);
      // A closed sample: a random combination of a basis of ker d_f.
      const Matrix z = p + 1 < degrees ? nullspace(pkg.d[p]) : Matrix::identity(dims[p]);
      if (z.cols() == 0) continue;
      const Vector c = z * random_vector(z.cols(), rng);
      Vector exact(dims[p]);
      if (p > 0) exact = pkg.d[p - 1] * (pkg.d_adjoint[p - 1] * (pkg.green[p] * c));
      if (add(exact, pkg.harmonic_projector[p] * c) != c) closed = "sample " + std::to_string(s);
    }
    r.check("decomposition.residual", residual.empty(), residual);
    r.check("decomposition.orthogonal", orthogonal.empty(), orthogonal);
    r.check("decomposition.closed", closed.empty(), closed);
    r.fact("decomposition_samples", std::to_string(opt.samples));
  }

  // H induces an isomorphism from invariant cohomology onto harmonic elements.
  {
    std::string well, iso;
    const auto betti = cohomology_dims(dims, pkg.sub.differential);
    for (std::size_t p = 0; p < degrees; ++p) {
      const Matrix& h = pkg.harmonic_projector[p];
      if (p > 0 && !mul(h, pkg.d[p - 1]).is_zero()) well = degree_note(p);
      const Matrix z = p + 1 < degrees ? nullspace(pkg.d[p]) : Matrix::identity(dims[p]);
      const std::size_t image = rank(mul(h, z));
      if (image != betti[p] || image != pkg.harmonic[p].cols()) iso = degree_note(p);
    }
    r.check("harmonic.well-defined", well.empty(), well);
    r.check("harmonic.isomorphism", iso.empty(), iso);
    r.table_of("invariant_betti", betti);
    r.table_of("harmonic_dims", pkg.harmonic_dims());
    r.check("harmonic.dims-equal-betti", betti == pkg.harmonic_dims());
  }
  return r;
}

}  // namespace equihodge
