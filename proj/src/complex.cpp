#include "equihodge/complex.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "equihodge/errors.hpp"

namespace equihodge {

namespace {

/// Sorts the vertices and returns the sign of the sorting permutation (0 on repeats).
int sort_with_sign(Simplex& s) {
  int sign = 1;
  for (std::size_t i = 1; i < s.size(); ++i)
    for (std::size_t j = i; j > 0 && s[j] < s[j - 1]; --j) {
      std::swap(s[j], s[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == s[i - 1]) return 0;
  return sign;
}

std::string path_of(const char* prefix, std::size_t p, std::size_t k) {
  return std::string(prefix) + "[" + std::to_string(p) + "][" + std::to_string(k) + "]";
}

std::vector<std::int64_t> minus(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

}  // namespace

std::string describe(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i].id);
    if (!s[i].offset.empty()) {
      out += "@";
      for (std::size_t j = 0; j < s[i].offset.size(); ++j)
        out += (j ? ":" : "") + std::to_string(s[i].offset[j]);
    }
  }
  return out + "]";
}

std::vector<std::pair<Simplex, int>> faces(const Simplex& s) {
  std::vector<std::pair<Simplex, int>> out;
  if (s.size() < 2) return out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex f;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) f.push_back(s[j]);
    out.emplace_back(std::move(f), i % 2 ? -1 : 1);
  }
  return out;
}

SimplicialGComplex SimplicialGComplex::finite(std::shared_ptr<const GroupModel> group, FiniteSpec spec) {
  if (!group || !group->is_finite()) throw ValidationError("group", "a finite complex needs a finite group");
  SimplicialGComplex k;
  k.group_ = std::move(group);
  const std::size_t n = spec.vertex_count;
  k.vertex_names_ = spec.vertex_names;
  if (!k.vertex_names_.empty() && k.vertex_names_.size() != n)
    throw ValidationError("space.vertex_names", "expected " + std::to_string(n) + " names");

  if (spec.simplices.empty()) spec.simplices.emplace_back();
  if (spec.simplices[0].empty())
    for (std::size_t v = 0; v < n; ++v) spec.simplices[0].push_back({static_cast<int>(v)});
  while (!spec.simplices.empty() && spec.simplices.back().empty() && spec.simplices.size() > 1)
    spec.simplices.pop_back();

  k.simplices_.resize(spec.simplices.size());
  k.index_.resize(spec.simplices.size());
  for (std::size_t p = 0; p < spec.simplices.size(); ++p) {
    for (std::size_t i = 0; i < spec.simplices[p].size(); ++i) {
      const auto& ids = spec.simplices[p][i];
      const std::string path = path_of("space.simplices", p, i);
      if (ids.size() != p + 1) throw ValidationError(path, "a " + std::to_string(p) + "-simplex needs " +
                                                               std::to_string(p + 1) + " vertices");
      Simplex s;
      for (int v : ids) {
        if (v < 0 || static_cast<std::size_t>(v) >= n)
          throw ValidationError(path, "vertex " + std::to_string(v) + " does not exist");
        s.emplace_back(v);
      }
      if (sort_with_sign(s) == 0) throw ValidationError(path, "repeated vertex");
      if (!k.index_[p].emplace(s, k.simplices_[p].size()).second) throw ValidationError(path, "duplicate simplex");
      k.simplices_[p].push_back(std::move(s));
    }
  }
  k.validate_faces();

  if (spec.vertex_maps.size() != k.group_->order())
    throw ValidationError("action.vertex_maps", "expected one vertex map per group element (" +
                                                    std::to_string(k.group_->order()) + ")");
  for (std::size_t g = 0; g < spec.vertex_maps.size(); ++g) {
    const auto& map = spec.vertex_maps[g];
    const std::string path = "action.vertex_maps[" + std::to_string(g) + "]";
    if (map.size() != n) throw ValidationError(path, "must map every vertex");
    std::vector<bool> hit(n, false);
    for (int v : map) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || hit[static_cast<std::size_t>(v)])
        throw ValidationError(path, "not a permutation of the vertices");
      hit[static_cast<std::size_t>(v)] = true;
    }
  }
  k.vertex_maps_ = std::move(spec.vertex_maps);
  for (std::size_t g = 0; g < k.vertex_maps_.size(); ++g)
    for (std::size_t p = 0; p < k.simplices_.size(); ++p)
      for (const auto& s : k.simplices_[p]) {
        auto [image, sign] = k.act(k.group_->element(g), s);
        if (!k.index_[p].count(image))
          throw ValidationError("action.vertex_maps[" + std::to_string(g) + "]",
                                "maps simplex " + describe(s) + " to a non-simplex");
      }
  // Pullbacks must compose as pi(g)pi(h) = pi(gh) on vertices: (gh).x = h.(g.x).
  for (std::size_t g = 0; g < k.vertex_maps_.size(); ++g)
    for (std::size_t h = 0; h < k.vertex_maps_.size(); ++h) {
      const auto& gh = k.vertex_maps_[static_cast<std::size_t>(k.group_->mul(static_cast<int>(g), static_cast<int>(h)))];
      for (std::size_t x = 0; x < n; ++x)
        if (gh[x] != k.vertex_maps_[h][static_cast<std::size_t>(k.vertex_maps_[g][x])])
          throw ValidationError("action.vertex_maps",
                                "vertex maps do not form an action compatible with the group table (elements " +
                                    std::to_string(g) + ", " + std::to_string(h) + ")");
    }

  k.build_orbits();

  k.metric_.resize(k.simplices_.size());
  for (std::size_t p = 0; p < k.simplices_.size(); ++p) {
    if (p < spec.metric.size() && !spec.metric[p].empty()) {
      if (spec.metric[p].size() != k.simplices_[p].size())
        throw ValidationError("metric", "degree " + std::to_string(p) + " needs one value per simplex");
      k.metric_[p] = spec.metric[p];
    } else {
      k.metric_[p].assign(k.simplices_[p].size(), Rational(1));
    }
    for (std::size_t i = 0; i < k.simplices_[p].size(); ++i) {
      if (sgn(k.metric_[p][i]) <= 0) throw ValidationError("metric", "must be positive on " + describe(k.simplices_[p][i]));
      for (std::size_t g = 0; g < k.group_->order(); ++g) {
        const auto image = k.act(k.group_->element(g), k.simplices_[p][i]).first;
        if (k.metric_[p][k.index_[p].at(image)] != k.metric_[p][i])
          throw ValidationError("metric", "not G-invariant at " + describe(k.simplices_[p][i]));
      }
    }
  }

  for (std::size_t p = 0; p + 1 < k.simplices_.size(); ++p) {
    Matrix d(k.simplices_[p + 1].size(), k.simplices_[p].size());
    for (std::size_t r = 0; r < k.simplices_[p + 1].size(); ++r)
      for (const auto& [f, sign] : faces(k.simplices_[p + 1][r])) d(r, k.index_[p].at(f)) += sign;
    k.coboundary_.push_back(std::move(d));
  }
  return k;
}

SimplicialGComplex SimplicialGComplex::periodic(std::shared_ptr<const GroupModel> group, PeriodicSpec spec) {
  if (!group || group->is_finite()) throw ValidationError("group", "a periodic complex needs a free abelian group");
  SimplicialGComplex k;
  k.periodic_ = true;
  k.group_ = std::move(group);
  const auto rank = static_cast<std::size_t>(k.group_->rank());
  k.vertex_names_ = spec.vertex_names;
  if (!k.vertex_names_.empty() && k.vertex_names_.size() != spec.vertex_orbits)
    throw ValidationError("space.vertex_names", "expected one name per vertex orbit");
  if (spec.simplices.empty()) spec.simplices.emplace_back();
  if (spec.simplices[0].empty())
    for (std::size_t v = 0; v < spec.vertex_orbits; ++v)
      spec.simplices[0].push_back({Vertex(static_cast<int>(v), std::vector<std::int64_t>(rank, 0))});

  k.simplices_.resize(spec.simplices.size());
  k.index_.resize(spec.simplices.size());
  for (std::size_t p = 0; p < spec.simplices.size(); ++p)
    for (std::size_t i = 0; i < spec.simplices[p].size(); ++i) {
      Simplex s = spec.simplices[p][i];
      const std::string path = path_of("space.simplices", p, i);
      if (s.size() != p + 1) throw ValidationError(path, "wrong number of vertices");
      for (const auto& v : s) {
        if (v.id < 0 || static_cast<std::size_t>(v.id) >= spec.vertex_orbits)
          throw ValidationError(path, "vertex orbit " + std::to_string(v.id) + " does not exist");
        if (v.offset.size() != rank) throw ValidationError(path, "offsets must have length " + std::to_string(rank));
      }
      if (sort_with_sign(s) == 0) throw ValidationError(path, "repeated vertex");
      s = k.normal_form(s).first;
      if (!k.index_[p].emplace(s, k.simplices_[p].size()).second)
        throw ValidationError(path, "lists the orbit of " + describe(s) + " twice");
      k.simplices_[p].push_back(std::move(s));
    }
  for (std::size_t v = 0; v < spec.vertex_orbits; ++v)
    if (!k.index_[0].count({Vertex(static_cast<int>(v), std::vector<std::int64_t>(rank, 0))}))
      throw ValidationError("space.simplices[0]", "vertex orbit " + std::to_string(v) + " missing");
  k.validate_faces();
  k.build_orbits();

  k.metric_.resize(k.simplices_.size());
  for (std::size_t p = 0; p < k.simplices_.size(); ++p) {
    if (p < spec.metric.size() && !spec.metric[p].empty()) {
      if (spec.metric[p].size() != k.simplices_[p].size())
        throw ValidationError("metric", "degree " + std::to_string(p) + " needs one value per orbit");
      k.metric_[p] = spec.metric[p];
    } else {
      k.metric_[p].assign(k.simplices_[p].size(), Rational(1));
    }
    for (const auto& m : k.metric_[p])
      if (sgn(m) <= 0) throw ValidationError("metric", "must be positive");
  }
  return k;
}

void SimplicialGComplex::validate_faces() const {
  for (std::size_t p = 1; p < simplices_.size(); ++p)
    for (std::size_t i = 0; i < simplices_[p].size(); ++i)
      for (const auto& [f, sign] : faces(simplices_[p][i]))
        if (!contains(f))
          throw ValidationError(path_of("space.simplices", p, i),
                                "face " + describe(f) + " of " + describe(simplices_[p][i]) + " is not listed");
}

void SimplicialGComplex::build_orbits() {
  orbits_.assign(simplices_.size(), {});
  position_.assign(simplices_.size(), {});
  for (std::size_t p = 0; p < simplices_.size(); ++p) {
    if (periodic_) {
      for (std::size_t i = 0; i < simplices_[p].size(); ++i) orbits_[p].push_back({simplices_[p][i], false, {i}});
      continue;
    }
    std::vector<bool> seen(simplices_[p].size(), false);
    position_[p].resize(simplices_[p].size());
    for (std::size_t i = 0; i < simplices_[p].size(); ++i) {
      if (seen[i]) continue;
      Orbit orbit{simplices_[p][i], false, {}};
      const std::size_t id = orbits_[p].size();
      for (std::size_t g = 0; g < group_->order(); ++g) {
        auto [image, sign] = act(group_->element(g), simplices_[p][i]);
        const std::size_t j = index_[p].at(image);
        if (!seen[j]) {
          seen[j] = true;
          position_[p][j] = {id, sign};
          orbit.members.push_back(j);
        } else if (position_[p][j].sign != sign) {
          orbit.sign_killed = true;
        }
      }
      std::sort(orbit.members.begin(), orbit.members.end());
      orbits_[p].push_back(std::move(orbit));
    }
  }
}

std::size_t SimplicialGComplex::count(int p) const {
  return p >= 0 && static_cast<std::size_t>(p) < simplices_.size() ? simplices_[static_cast<std::size_t>(p)].size() : 0;
}

std::optional<std::size_t> SimplicialGComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > index_.size()) return std::nullopt;
  const auto& idx = index_[s.size() - 1];
  auto it = idx.find(periodic_ ? normal_form(s).first : s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::string SimplicialGComplex::vertex_name(const Vertex& v) const {
  if (v.id >= 0 && static_cast<std::size_t>(v.id) < vertex_names_.size()) return vertex_names_[static_cast<std::size_t>(v.id)];
  return std::to_string(v.id);
}

std::pair<Simplex, int> SimplicialGComplex::act(const GroupElement& g, const Simplex& s) const {
  Simplex image = s;
  if (periodic_) {
    for (auto& v : image)
      for (std::size_t i = 0; i < v.offset.size(); ++i) v.offset[i] += g.at(i);
    return {image, 1};
  }
  const auto& map = vertex_maps_.at(group_->index_of(g));
  for (auto& v : image) v.id = map.at(static_cast<std::size_t>(v.id));
  const int sign = sort_with_sign(image);
  return {image, sign};
}

std::pair<Simplex, GroupElement> SimplicialGComplex::normal_form(const Simplex& s) const {
  if (!periodic_ || s.empty()) return {s, group_->identity()};
  const std::vector<std::int64_t> shift = s.front().offset;
  Simplex out = s;
  for (auto& v : out) v.offset = minus(v.offset, shift);
  return {out, shift};
}

bool SimplicialGComplex::contains(const Simplex& s) const { return index_of(s).has_value(); }

OrbitPosition SimplicialGComplex::orbit_of(const Simplex& s) const {
  const auto i = index_of(s);
  if (!i) throw std::invalid_argument(describe(s) + " is not a simplex of the complex");
  if (periodic_) return {*i, 1};
  return position_[s.size() - 1][*i];
}

Rational SimplicialGComplex::metric(const Simplex& s) const {
  const auto i = index_of(s);
  if (!i) throw std::invalid_argument(describe(s) + " is not a simplex of the complex");
  return metric_[s.size() - 1][*i];
}

const Matrix& SimplicialGComplex::coboundary(int p) const {
  if (periodic_) throw UnsupportedError("the ambient coboundary of a periodic complex is infinite");
  return coboundary_.at(static_cast<std::size_t>(p));
}

Matrix SimplicialGComplex::action_matrix(const GroupElement& g, int p) const {
  if (periodic_) throw UnsupportedError("the ambient action of a periodic complex is infinite");
  const std::size_t n = count(p);
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    auto [image, sign] = act(g, simplex(p, r));
    m(r, index_[static_cast<std::size_t>(p)].at(image)) = sign;
  }
  return m;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> InvariantSubcomplex::dims() const {
  std::vector<std::size_t> out;
  for (const auto& ids : orbit_ids) out.push_back(ids.size());
  return out;
}

Rational InvariantSubcomplex::value(const SimplicialGComplex& k, int p, std::size_t j, const InvariantSubcomplex& sub,
                                   const Simplex& s) {
  const OrbitPosition pos = k.orbit_of(s);
  return pos.orbit == sub.orbit_ids.at(static_cast<std::size_t>(p)).at(j) ? Rational(pos.sign) : Rational(0);
}

InvariantSubcomplex invariant_subcomplex(const SimplicialGComplex& k) {
  InvariantSubcomplex sub;
  const int n = k.dimension();
  std::vector<std::map<std::size_t, std::size_t>> basis_of(static_cast<std::size_t>(n + 1));
  for (int p = 0; p <= n; ++p) {
    std::vector<std::size_t> ids;
    const auto& orbits = k.orbits(p);
    for (std::size_t o = 0; o < orbits.size(); ++o)
      if (!orbits[o].sign_killed) {
        basis_of[static_cast<std::size_t>(p)][o] = ids.size();
        ids.push_back(o);
      }
    sub.orbit_ids.push_back(std::move(ids));
  }
  // d(s_j) is invariant, so its coordinate on basis vector i is its value on
  // the representative of orbit i.
  for (int p = 0; p < n; ++p) {
    const auto& rows = sub.orbit_ids[static_cast<std::size_t>(p + 1)];
    Matrix d(rows.size(), sub.orbit_ids[static_cast<std::size_t>(p)].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& [f, sign] : faces(k.orbits(p + 1)[rows[i]].representative)) {
        const OrbitPosition pos = k.orbit_of(f);
        auto it = basis_of[static_cast<std::size_t>(p)].find(pos.orbit);
        if (it != basis_of[static_cast<std::size_t>(p)].end()) d(i, it->second) += sign * pos.sign;
      }
    sub.differential.push_back(std::move(d));
  }
  return sub;
}

Matrix invariant_basis(const SimplicialGComplex& k, const InvariantSubcomplex& sub, int p) {
  const auto& ids = sub.orbit_ids.at(static_cast<std::size_t>(p));
  Matrix b(k.count(p), ids.size());
  for (std::size_t j = 0; j < ids.size(); ++j)
    for (std::size_t member : k.orbits(p)[ids[j]].members)
      b(member, j) = InvariantSubcomplex::value(k, p, j, sub, k.simplex(p, member));
  return b;
}

std::vector<std::size_t> cohomology_dims(const std::vector<std::size_t>& dims, const std::vector<Matrix>& d) {
  std::vector<std::size_t> ranks(dims.size(), 0);
  for (std::size_t p = 0; p < d.size() && p < dims.size(); ++p) ranks[p] = rank(d[p]);
  std::vector<std::size_t> betti;
  for (std::size_t p = 0; p < dims.size(); ++p) betti.push_back(dims[p] - ranks[p] - (p ? ranks[p - 1] : 0));
  return betti;
}

std::vector<std::size_t> invariant_betti(const SimplicialGComplex& k) {
  const InvariantSubcomplex sub = invariant_subcomplex(k);
  return cohomology_dims(sub.dims(), sub.differential);
}

long long euler_characteristic(const SimplicialGComplex& k) {
  const InvariantSubcomplex sub = invariant_subcomplex(k);
  const auto dims = sub.dims();
  const auto betti = cohomology_dims(dims, sub.differential);
  long long chi = 0, cells = 0;
  for (std::size_t p = 0; p < dims.size(); ++p) {
    const long long s = p % 2 ? -1 : 1;
    chi += s * static_cast<long long>(betti[p]);
    cells += s * static_cast<long long>(dims[p]);
  }
  if (chi != cells)
    throw MathError("Euler-Poincare mismatch: Betti sum " + std::to_string(chi) + " vs cochain sum " +
                    std::to_string(cells));
  return chi;
}

Matrix average_projector(const SimplicialGComplex& k, int p) {
  if (k.is_periodic())
    throw UnsupportedError("a periodic complex has no averaging projector; use its invariant basis");
  Matrix sum(k.count(p), k.count(p));
  for (const auto& g : k.group().window()) sum += k.action_matrix(g, p);
  sum *= Rational(1, static_cast<unsigned long>(k.group().order()));
  return sum;
}

Report verify_complex(const SimplicialGComplex& k) {
  Report r;
  r.title = "complex";
  const int n = k.dimension();
  const InvariantSubcomplex sub = invariant_subcomplex(k);

  std::string witness;
  for (int p = 0; p + 1 < static_cast<int>(sub.differential.size()) && witness.empty(); ++p)
    if (!(sub.differential[static_cast<std::size_t>(p + 1)] * sub.differential[static_cast<std::size_t>(p)]).is_zero())
      witness = "invariant d^2 in degree " + std::to_string(p);
  if (!k.is_periodic())
    for (int p = 0; p + 2 <= n && witness.empty(); ++p)
      if (!(k.coboundary(p + 1) * k.coboundary(p)).is_zero()) witness = "d^2 in degree " + std::to_string(p);
  r.check("complex.d-squared-zero", witness.empty(), witness);

  if (!k.is_periodic()) {
    const auto elements = k.group().window();
    witness.clear();
    for (const auto& g : elements)
      for (const auto& h : elements)
        for (int p = 0; p <= n && witness.empty(); ++p)
          if (k.action_matrix(g, p) * k.action_matrix(h, p) != k.action_matrix(k.group().multiply(g, h), p))
            witness = "pi(" + k.group().describe(g) + ")pi(" + k.group().describe(h) + ") in degree " + std::to_string(p);
    r.check("action.homomorphism", witness.empty(), witness);
    witness.clear();
    for (const auto& g : elements)
      for (int p = 0; p < n && witness.empty(); ++p)
        if (k.action_matrix(g, p + 1) * k.coboundary(p) != k.coboundary(p) * k.action_matrix(g, p))
          witness = "pi(" + k.group().describe(g) + ") d in degree " + std::to_string(p);
    r.check("action.commutes-with-d", witness.empty(), witness);
    witness.clear();
    for (const auto& g : elements)
      for (int p = 0; p <= n && witness.empty(); ++p) {
        const Matrix pi = k.action_matrix(g, p);
        std::vector<Rational> diag;
        for (std::size_t i = 0; i < k.count(p); ++i) diag.push_back(k.metric(k.simplex(p, i)));
        const Matrix m = Matrix::diagonal(diag);
        if (pi.transpose() * m * pi != m) witness = "pi(" + k.group().describe(g) + ") in degree " + std::to_string(p);
      }
    r.check("metric.invariant", witness.empty(), witness);

    // Three descriptions of the invariant cochains must agree.
    std::string fixed, image, restricted;
    std::vector<Matrix> image_bases;
    for (int p = 0; p <= n; ++p) {
      const Matrix basis = invariant_basis(k, sub, p);
      std::vector<Matrix> blocks;
      for (const auto& g : elements) blocks.push_back(k.action_matrix(g, p) - Matrix::identity(k.count(p)));
      const Matrix fixed_space = nullspace(vstack(blocks));
      if (!same_column_space(fixed_space, basis) || fixed_space.cols() != basis.cols())
        fixed = fixed.empty() ? "degree " + std::to_string(p) : fixed;
      const Matrix proj = average_projector(k, p);
      const Matrix img = column_space(proj);
      if (proj * proj != proj || !same_column_space(img, basis) || img.cols() != basis.cols())
        image = image.empty() ? "degree " + std::to_string(p) : image;
      if (p < n) {
        if (proj.rows() && k.count(p + 1) && k.coboundary(p) * proj != average_projector(k, p + 1) * k.coboundary(p))
          image = image.empty() ? "P d != d P in degree " + std::to_string(p) : image;
        if (k.coboundary(p) * basis != invariant_basis(k, sub, p + 1) * sub.differential[static_cast<std::size_t>(p)])
          restricted = restricted.empty() ? "degree " + std::to_string(p) : restricted;
      }
      image_bases.push_back(img);
    }
    r.check("invariants.fixed-vector-solve", fixed.empty(), fixed);
    r.check("invariants.projector-image", image.empty(), image);
    r.check("invariants.restricted-differential", restricted.empty(), restricted);

    // Betti numbers of the projector-image complex, computed independently.
    std::vector<std::size_t> dims;
    std::vector<Matrix> d;
    for (int p = 0; p <= n; ++p) dims.push_back(image_bases[static_cast<std::size_t>(p)].cols());
    for (int p = 0; p < n; ++p) {
      const auto& from = image_bases[static_cast<std::size_t>(p)];
      const auto& to = image_bases[static_cast<std::size_t>(p + 1)];
      if (from.cols() == 0 || to.cols() == 0) {
        d.emplace_back(to.cols(), from.cols());
        continue;
      }
      d.push_back(solve(to, k.coboundary(p) * from));
    }
    const auto betti_image = cohomology_dims(dims, d);
    const auto betti = cohomology_dims(sub.dims(), sub.differential);
    r.check("invariants.betti-agree", betti_image == betti,
            betti_image == betti ? "" : "projector-image complex gives different Betti numbers");
  }

  const auto dims = sub.dims();
  const auto betti = cohomology_dims(dims, sub.differential);
  long long chi = 0, cells = 0;
  for (std::size_t p = 0; p < dims.size(); ++p) {
    chi += (p % 2 ? -1 : 1) * static_cast<long long>(betti[p]);
    cells += (p % 2 ? -1 : 1) * static_cast<long long>(dims[p]);
  }
  r.check("euler-poincare", chi == cells,
          chi == cells ? "" : std::to_string(chi) + " != " + std::to_string(cells));
  r.table_of("invariant_cochain_dims", dims);
  r.table_of("invariant_betti", betti);
  r.fact("euler_characteristic", std::to_string(chi));
  return r;
}

// ---------------------------------------------------------------------------

namespace {

struct Incidence {
  std::size_t top;
  int sign;  // (-1)^i for the face position
};

}  // namespace

std::vector<int> orientation(const SimplicialGComplex& k) {
  const int n = k.dimension();
  if (n < 0) throw UnsupportedError("empty complex has no fundamental class");
  const std::size_t tops = k.count(n);
  if (n == 0) return std::vector<int>(tops, 1);
  // Codimension-one faces, keyed by stored index (finite) or orbit (periodic).
  std::map<std::size_t, std::vector<Incidence>> incidences;
  for (std::size_t t = 0; t < tops; ++t)
    for (const auto& [f, sign] : faces(k.simplex(n, t))) incidences[*k.index_of(f)].push_back({t, sign});
  if (incidences.size() != k.count(n - 1))
    throw UnsupportedError("not a closed pseudomanifold: some (n-1)-simplex has no coface");
  for (const auto& [face, list] : incidences)
    if (list.size() != 2)
      throw UnsupportedError("not a closed pseudomanifold: " + describe(k.simplex(n - 1, face)) + " has " +
                             std::to_string(list.size()) + " cofaces");
  std::vector<std::vector<std::pair<std::size_t, int>>> adjacent(tops);  // (neighbour, required relative sign)
  for (const auto& [face, list] : incidences) {
    // o(a) s_a + o(b) s_b = 0  =>  o(b) = -o(a) s_a s_b
    const int rel = -list[0].sign * list[1].sign;
    adjacent[list[0].top].emplace_back(list[1].top, rel);
    adjacent[list[1].top].emplace_back(list[0].top, rel);
  }
  std::vector<int> o(tops, 0);
  for (std::size_t root = 0; root < tops; ++root) {
    if (o[root]) continue;
    o[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t a = queue.front();
      queue.pop_front();
      for (auto [b, rel] : adjacent[a]) {
        if (!o[b]) {
          o[b] = o[a] * rel;
          queue.push_back(b);
        } else if (o[b] != o[a] * rel) {
          throw UnsupportedError("not orientable");
        }
      }
    }
  }
  return o;
}

bool action_preserves_orientation(const SimplicialGComplex& k) {
  if (k.is_periodic()) return true;  // translations preserve the vertex order
  const int n = k.dimension();
  const std::vector<int> o = orientation(k);
  for (const auto& g : k.group().window())
    for (std::size_t t = 0; t < k.count(n); ++t) {
      auto [image, sign] = k.act(g, k.simplex(n, t));
      if (o[*k.index_of(image)] * sign != o[t]) return false;
    }
  return true;
}

Matrix cohomology_basis(const InvariantSubcomplex& sub, int p) {
  const auto dims = sub.dims();
  const std::size_t dp = dims.at(static_cast<std::size_t>(p));
  const Matrix z = static_cast<std::size_t>(p) < sub.differential.size()
                       ? nullspace(sub.differential[static_cast<std::size_t>(p)])
                       : Matrix::identity(dp);
  Matrix chosen = p > 0 ? column_space(sub.differential[static_cast<std::size_t>(p - 1)]) : Matrix(dp, 0);
  std::vector<Vector> picked;
  for (std::size_t c = 0; c < z.cols(); ++c) {
    Matrix trial = hstack({chosen, Matrix::from_columns(dp, {z.column(c)})});
    if (rank(trial) > chosen.cols()) {
      chosen = std::move(trial);
      picked.push_back(z.column(c));
    }
  }
  return Matrix::from_columns(dp, picked);
}

PoincarePairing poincare_pairing(const SimplicialGComplex& k, int p, const std::optional<Matrix>& left,
                                 const std::optional<Matrix>& right) {
  const int n = k.dimension();
  if (p < 0 || p > n) throw std::invalid_argument("pairing degree out of range");
  const std::vector<int> o = orientation(k);
  const InvariantSubcomplex sub = invariant_subcomplex(k);
  const Matrix a = left ? *left : cohomology_basis(sub, p);
  const Matrix b = right ? *right : cohomology_basis(sub, n - p);
  auto value = [&](const Matrix& coeffs, std::size_t col, int q, const Simplex& s) {
    Rational v = 0;
    for (std::size_t j = 0; j < coeffs.rows(); ++j)
      if (sgn(coeffs(j, col)) != 0) v += coeffs(j, col) * InvariantSubcomplex::value(k, q, j, sub, s);
    return v;
  };
  PoincarePairing out;
  out.p = p;
  out.matrix = Matrix(a.cols(), b.cols());
  for (std::size_t t = 0; t < k.count(n); ++t) {
    const Simplex& s = k.simplex(n, t);
    const Simplex front(s.begin(), s.begin() + p + 1);
    const Simplex back(s.begin() + p, s.end());
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const Rational x = value(a, i, p, front);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.matrix(i, j) += o[t] * x * value(b, j, n - p, back);
    }
  }
  out.rank = rank(out.matrix);
  return out;
}

GradedAlgebra cochain_algebra(const SimplicialGComplex& k) {
  if (k.is_periodic()) throw UnsupportedError("the cochain algebra of a periodic complex is infinite-dimensional");
  const int n = k.dimension();
  GradedAlgebra::Data data;
  std::size_t total = 0;
  std::vector<std::size_t> offset;
  for (int p = 0; p <= n; ++p) {
    offset.push_back(total);
    data.dims.push_back(k.count(p));
    total += k.count(p);
    for (std::size_t i = 0; i < k.count(p); ++i) data.basis_names.push_back(describe(k.simplex(p, i)));
  }
  Matrix d(total, total);
  for (int p = 0; p < n; ++p) {
    const Matrix& c = k.coboundary(p);
    for (std::size_t r = 0; r < c.rows(); ++r)
      for (std::size_t col = 0; col < c.cols(); ++col)
        d(offset[static_cast<std::size_t>(p + 1)] + r, offset[static_cast<std::size_t>(p)] + col) = c(r, col);
  }
  data.differential = d;
  for (const auto& g : k.group().window()) {
    Matrix rho(total, total);
    for (int p = 0; p <= n; ++p) {
      const Matrix pi = k.action_matrix(g, p);
      for (std::size_t r = 0; r < pi.rows(); ++r)
        for (std::size_t c = 0; c < pi.cols(); ++c)
          rho(offset[static_cast<std::size_t>(p)] + r, offset[static_cast<std::size_t>(p)] + c) = pi(r, c);
    }
    data.action.push_back(std::move(rho));
  }
  return GradedAlgebra(k.group_ptr(), std::move(data));
}

GradedAlgebra vertex_function_algebra(const SimplicialGComplex& k) {
  if (k.is_periodic()) throw UnsupportedError("a periodic complex has infinitely many vertices");
  std::vector<std::vector<int>> maps;
  for (const auto& g : k.group().window()) {
    std::vector<int> m;
    for (std::size_t v = 0; v < k.count(0); ++v) {
      const Simplex image = k.act(g, k.simplex(0, v)).first;
      m.push_back(static_cast<int>(*k.index_of(image)));
    }
    maps.push_back(std::move(m));
  }
  std::vector<std::string> names;
  for (std::size_t v = 0; v < k.count(0); ++v) names.push_back(k.vertex_name(k.simplex(0, v)[0]));
  return build_function_algebra(k.group_ptr(), maps, names);
}

}  // namespace equihodge
