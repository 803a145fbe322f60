#include "equihodge/cyclic.hpp"

#include <random>

#include "equihodge/errors.hpp"
#include "equihodge/kernels.hpp"

namespace equihodge {

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

const GroupModel& finite_group(const GradedAlgebra& b) {
  if (!b.group().is_finite()) throw UnsupportedError("cochains on G^n need a finite group");
  return b.group();
}

int mul(const GroupModel& g, std::size_t a, std::size_t b) { return g.mul(static_cast<int>(a), static_cast<int>(b)); }

}  // namespace

HopfCochain::HopfCochain(std::shared_ptr<const GradedAlgebra> base, std::size_t degree)
    : base_(std::move(base)), degree_(degree) {
  tuples_ = power(finite_group(*base_).order(), degree);
  data_.assign(tuples_ * base_->dim(), Rational(0));
}

HopfCochain HopfCochain::from_function(std::shared_ptr<const GradedAlgebra> base, std::size_t degree,
                                       const GFunction& f) {
  HopfCochain c(std::move(base), degree);
  if (f.arity() != degree) throw std::invalid_argument("function arity differs from cochain degree");
  for (std::size_t t = 0; t < c.tuples_; ++t) {
    std::vector<GroupElement> args;
    for (std::size_t g : c.tuple(t)) args.push_back(c.base_->group().element(g));
    c.set_value(t, f(args));
  }
  return c;
}

HopfCochain HopfCochain::basis(std::shared_ptr<const GradedAlgebra> base, const std::vector<std::size_t>& tuple,
                               std::size_t b_index) {
  HopfCochain c(std::move(base), tuple.size());
  c.data_[c.index(tuple) * c.base_->dim() + b_index] = 1;
  return c;
}

std::vector<std::size_t> HopfCochain::tuple(std::size_t index) const {
  const std::size_t n = base_->group().order();
  std::vector<std::size_t> t(degree_);
  for (std::size_t k = degree_; k-- > 0;) {
    t[k] = index % n;
    index /= n;
  }
  return t;
}

std::size_t HopfCochain::index(const std::vector<std::size_t>& tuple) const {
  if (tuple.size() != degree_) throw std::invalid_argument("tuple length differs from cochain degree");
  const std::size_t n = base_->group().order();
  std::size_t i = 0;
  for (std::size_t g : tuple) i = i * n + g;
  return i;
}

GradedElement HopfCochain::value(std::size_t tuple_index) const {
  const std::size_t d = base_->dim();
  return GradedElement(data_.begin() + static_cast<std::ptrdiff_t>(tuple_index * d),
                       data_.begin() + static_cast<std::ptrdiff_t>((tuple_index + 1) * d));
}

void HopfCochain::set_value(std::size_t tuple_index, const GradedElement& v) {
  const std::size_t d = base_->dim();
  if (v.size() != d) throw std::invalid_argument("value has the wrong dimension");
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(tuple_index * d));
}

GFunction HopfCochain::as_function() const {
  HopfCochain self = *this;
  return {degree_, [self](const std::vector<GroupElement>& args) {
            std::vector<std::size_t> t;
            for (const auto& g : args) t.push_back(self.base().group().index_of(g));
            return self.value(t);
          }};
}

// ---------------------------------------------------------------------------

namespace {

void copy_value(HopfCochain& out, std::size_t t, const HopfCochain& c, std::size_t s) {
  const std::size_t d = c.base().dim();
  std::copy_n(c.data().begin() + static_cast<std::ptrdiff_t>(s * d), d,
              out.data().begin() + static_cast<std::ptrdiff_t>(t * d));
}

// out(t) = g^* c(s), with out(t) zero beforehand.
void act_value(HopfCochain& out, std::size_t t, std::size_t g, const HopfCochain& c, std::size_t s) {
  const std::size_t d = c.base().dim();
  const auto& columns = c.base().action_columns(g);
  for (std::size_t j = 0; j < d; ++j) {
    const Rational& x = c.data()[s * d + j];
    if (sgn(x) == 0) continue;
    for (const auto& [i, v] : columns[j]) out.data()[t * d + i] += v * x;
  }
}

}  // namespace

HopfCochain face(std::size_t i, const HopfCochain& c) {
  const std::size_t n = c.degree() + 1;
  if (i > n) throw std::out_of_range("face index " + std::to_string(i) + " out of range for degree " + std::to_string(n));
  const GroupModel& g = c.base().group();
  const std::size_t order = g.order();
  HopfCochain out(c.base_ptr(), n);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto args = out.tuple(t);
    std::size_t inner = 0;
    if (i == 0) {
      for (std::size_t k = 1; k < n; ++k) inner = inner * order + args[k];
      act_value(out, t, args[0], c, inner);
      continue;
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (i == n && k + 1 == n) break;
      if (k + 1 == i) {
        inner = inner * order + static_cast<std::size_t>(mul(g, args[k], args[k + 1]));
        ++k;
      } else {
        inner = inner * order + args[k];
      }
    }
    copy_value(out, t, c, inner);
  }
  return out;
}

HopfCochain degeneracy(std::size_t j, const HopfCochain& c) {
  if (c.degree() == 0) throw std::out_of_range("no degeneracy out of degree 0");
  const std::size_t n = c.degree() - 1;
  if (j > n) throw std::out_of_range("degeneracy index " + std::to_string(j) + " out of range");
  const GroupModel& g = c.base().group();
  const std::size_t order = g.order();
  const std::size_t e = static_cast<std::size_t>(g.identity_index());
  // Inserting e after j arguments: split the index at that digit.
  const std::size_t low = power(order, n - j);
  HopfCochain out(c.base_ptr(), n);
  for (std::size_t t = 0; t < out.tuple_count(); ++t)
    copy_value(out, t, c, ((t / low) * order + e) * low + t % low);
  return out;
}

HopfCochain cyclic_operator(const HopfCochain& c) {
  const std::size_t n = c.degree();
  if (n == 0) return c;
  const GroupModel& g = c.base().group();
  const std::size_t order = g.order();
  HopfCochain out(c.base_ptr(), n);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto args = out.tuple(t);
    std::size_t prod = static_cast<std::size_t>(g.identity_index());
    for (std::size_t a : args) prod = static_cast<std::size_t>(mul(g, prod, a));
    std::size_t inner = static_cast<std::size_t>(g.inv(static_cast<int>(prod)));
    for (std::size_t k = 0; k + 1 < n; ++k) inner = inner * order + args[k];
    act_value(out, t, prod, c, inner);
  }
  return out;
}

HopfCochain hochschild_coboundary(const HopfCochain& c) {
  HopfCochain out(c.base_ptr(), c.degree() + 1);
  for (std::size_t i = 0; i <= c.degree() + 1; ++i) {
    const HopfCochain f = face(i, c);
    const Rational sign = i % 2 ? -1 : 1;
    for (std::size_t k = 0; k < out.data().size(); ++k) out.data()[k] += sign * f.data()[k];
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

GFunction fold_tensor(const HopfAlgebroid& h, const std::vector<GFunction>& factors) {
  if (factors.empty()) throw std::invalid_argument("empty tensor");
  GFunction acc = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) acc = h.tensor(acc, factors[k]);
  return acc;
}

HopfCochain realize(const HopfAlgebroid& h, const GFunction& f) {
  auto base = std::shared_ptr<const GradedAlgebra>(std::shared_ptr<const GradedAlgebra>{}, &h.base());
  return HopfCochain::from_function(base, f.arity(), f);
}

}  // namespace

HopfCochain identify_tensor(const HopfAlgebroid& h, const std::vector<AlgebroidElement>& factors) {
  return realize(h, fold_tensor(h, factors));
}

HopfCochain tensor_face(const HopfAlgebroid& h, std::size_t i, const std::vector<AlgebroidElement>& factors) {
  const std::size_t n = factors.size() + 1;
  if (i > n) throw std::out_of_range("face index out of range");
  std::vector<GFunction> parts;
  if (i == 0) parts.push_back(h.unit());
  for (std::size_t k = 0; k < factors.size(); ++k) parts.push_back(k + 1 == i ? h.coproduct(factors[k]) : factors[k]);
  if (i == n) parts.push_back(h.unit());
  return realize(h, fold_tensor(h, parts));
}

HopfCochain tensor_degeneracy(const HopfAlgebroid& h, std::size_t j, const std::vector<AlgebroidElement>& factors) {
  if (factors.empty()) throw std::out_of_range("no degeneracy out of degree 0");
  const std::size_t n = factors.size() - 1;
  if (j > n) throw std::out_of_range("degeneracy index out of range");
  if (n == 0) {
    HopfCochain out(std::shared_ptr<const GradedAlgebra>(std::shared_ptr<const GradedAlgebra>{}, &h.base()), 0);
    out.set_value(0, h.counit(factors[0]));
    return out;
  }
  std::vector<GFunction> parts;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k == j) continue;  // the factor hit by the counit
    GFunction f = factors[k];
    if (j == 0 && k == 1) f = h.multiply(h.source(h.counit(factors[0])), f);
    if (j > 0 && k + 1 == j) f = h.multiply(f, h.target(h.counit(factors[j])));
    parts.push_back(f);
  }
  return realize(h, fold_tensor(h, parts));
}

HopfCochain tau_via_hopf(const HopfAlgebroid& h, const std::vector<AlgebroidElement>& factors) {
  const std::size_t n = factors.size();
  if (n == 0) throw std::invalid_argument("tau needs n >= 1");
  std::vector<GFunction> rest(factors.begin() + 1, factors.end());
  rest.push_back(h.unit());
  const GFunction lead = h.iterated_coproduct(h.antipode(factors[0]), n);
  return realize(h, h.multiply(lead, fold_tensor(h, rest)));
}

HopfCochain tau_via_hopf(const HopfAlgebroid& h, const HopfCochain& c) {
  if (c.degree() == 0) return c;
  HopfCochain out(c.base_ptr(), c.degree());
  const GroupModel& g = h.group();
  for (std::size_t t = 0; t < c.tuple_count(); ++t) {
    const GradedElement v = c.value(t);
    if (is_zero(v)) continue;
    const auto args = c.tuple(t);
    std::vector<AlgebroidElement> factors{h.point(g.element(args[0]), v)};
    for (std::size_t k = 1; k < args.size(); ++k) factors.push_back(h.point(g.element(args[k]), h.base().unit()));
    const HopfCochain term = tau_via_hopf(h, factors);
    for (std::size_t k = 0; k < out.data().size(); ++k) out.data()[k] += term.data()[k];
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Layout {
  const GradedAlgebra& b;
  const GroupModel& g;
  std::size_t order;

  std::size_t tuples(std::size_t p) const { return power(order, p); }
};

/// Column of D for one basis vector of the (p,q) block: the basis cochain with
/// value e_x (x global in B) at `tuple`.
SparseVec total_column(const Layout& L, const TotalComplex& tc, std::size_t m, std::size_t col) {
  const auto& blocks = tc.blocks[m];
  std::size_t bi = 0;
  while (col >= blocks[bi].offset + blocks[bi].size) ++bi;
  const auto& blk = blocks[bi];
  const std::size_t local = col - blk.offset;
  const std::size_t dq = L.b.dim(blk.q);
  const std::size_t tuple_index = local / dq;
  const std::size_t x = L.b.offset(blk.q) + local % dq;
  const std::size_t p = blk.p;

  std::vector<std::size_t> h(p);
  {
    std::size_t rem = tuple_index;
    for (std::size_t k = p; k-- > 0;) {
      h[k] = rem % L.order;
      rem /= L.order;
    }
  }
  auto find_block = [&](std::size_t pp, std::size_t qq) -> const TotalComplex::Block* {
    for (const auto& b : tc.blocks[m + 1])
      if (b.p == pp && b.q == qq) return &b;
    return nullptr;
  };
  auto index_of = [&](const std::vector<std::size_t>& t) {
    std::size_t i = 0;
    for (std::size_t a : t) i = i * L.order + a;
    return i;
  };

  std::vector<std::pair<std::uint32_t, Rational>> entries;
  // Group part, into block (p+1, q).
  if (const auto* target = find_block(p + 1, blk.q)) {
    const std::size_t off_q = L.b.offset(blk.q);
    auto emit = [&](const std::vector<std::size_t>& t, std::size_t y, const Rational& v) {
      entries.emplace_back(static_cast<std::uint32_t>(target->offset + index_of(t) * dq + (y - off_q)), v);
    };
    std::vector<std::size_t> t(p + 1);
    // delta_0: (g, h) -> rho(g) e_x
    for (std::size_t a = 0; a < L.order; ++a) {
      t[0] = a;
      std::copy(h.begin(), h.end(), t.begin() + 1);
      for (const auto& [y, v] : L.b.action_columns(a)[x]) emit(t, y, v);
    }
    // middle faces: merge slots k, k+1 into h[k]
    for (std::size_t k = 0; k < p; ++k) {
      const Rational sign = (k + 1) % 2 ? -1 : 1;
      for (std::size_t a = 0; a < L.order; ++a) {
        std::size_t w = 0;
        for (std::size_t j = 0; j < k; ++j) t[w++] = h[j];
        t[w++] = a;
        t[w++] = static_cast<std::size_t>(L.g.mul(L.g.inv(static_cast<int>(a)), static_cast<int>(h[k])));
        for (std::size_t j = k + 1; j < p; ++j) t[w++] = h[j];
        emit(t, x, sign);
      }
    }
    // last face
    const Rational sign = (p + 1) % 2 ? -1 : 1;
    for (std::size_t a = 0; a < L.order; ++a) {
      std::copy(h.begin(), h.end(), t.begin());
      t[p] = a;
      emit(t, x, sign);
    }
  }
  // Internal part, (-1)^p d_B into block (p, q+1).
  if (const auto* target = find_block(p, blk.q + 1)) {
    const Matrix& d = L.b.differential();
    const std::size_t off = L.b.offset(blk.q + 1);
    const std::size_t dq1 = L.b.dim(blk.q + 1);
    const Rational sign = p % 2 ? -1 : 1;
    for (std::size_t y = 0; y < dq1; ++y) {
      const Rational& v = d(off + y, x);
      if (sgn(v) != 0)
        entries.emplace_back(static_cast<std::uint32_t>(target->offset + tuple_index * dq1 + y), sign * v);
    }
  }
  return compress(std::move(entries));
}

}  // namespace

TotalComplex assemble_total_complex(std::shared_ptr<const GradedAlgebra> base, std::size_t max_degree,
                                    Execution exec) {
  const GroupModel& g = finite_group(*base);
  if (max_degree > 8) throw UnsupportedError("total degree is limited to 8");
  TotalComplex tc;
  tc.base = base;
  tc.max_degree = max_degree;
  const Layout L{*base, g, g.order()};
  for (std::size_t m = 0; m <= max_degree + 1; ++m) {
    std::vector<TotalComplex::Block> blocks;
    std::size_t offset = 0;
    for (std::size_t p = 0; p <= m; ++p) {
      const std::size_t q = m - p;
      if (q >= base->degree_count() || base->dim(q) == 0) continue;
      const std::size_t size = L.tuples(p) * base->dim(q);
      blocks.push_back({p, q, offset, size});
      offset += size;
    }
    tc.blocks.push_back(std::move(blocks));
    tc.dims.push_back(offset);
  }
  for (std::size_t m = 0; m <= max_degree; ++m) {
    SparseMatrix d;
    d.rows = tc.dims[m + 1];
    d.cols = tc.dims[m];
    d.columns = kernels::map_indices(
        tc.dims[m], [&](std::size_t col) { return total_column(L, tc, m, col); }, exec);
    tc.differential.push_back(std::move(d));
  }
  for (std::size_t m = 0; m + 1 <= max_degree; ++m) {
    const SparseMatrix dd = compose(tc.differential[m + 1], tc.differential[m]);
    if (dd.nonzeros() != 0) throw MathError("D^2 != 0 on the total complex in degree " + std::to_string(m));
  }
  return tc;
}

namespace {

std::vector<std::size_t> dims_from_ranks(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& ranks,
                                         std::size_t max_degree) {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m <= max_degree; ++m) out.push_back(dims[m] - ranks[m] - (m ? ranks[m - 1] : 0));
  return out;
}

}  // namespace

std::vector<std::size_t> hochschild_cohomology(const TotalComplex& total, Execution exec) {
  return dims_from_ranks(total.dims, kernels::complex_ranks(total.differential, exec), total.max_degree);
}

CyclicSubcomplex cyclic_subcomplex(const TotalComplex& total, Execution exec) {
  const GradedAlgebra& b = *total.base;
  if (!b.action_is_monomial())
    throw UnsupportedError("the cyclic-invariant basis needs an action by signed permutation matrices");
  const GroupModel& g = b.group();
  const std::size_t order = g.order();

  struct Orbits {
    std::vector<std::vector<std::pair<std::uint32_t, Rational>>> vectors;  // invariant basis, sparse
    std::vector<std::int64_t> rep_of;  // position -> orbit index if it is a representative, else -1
  };
  std::vector<Orbits> orbits(total.dims.size());

  for (std::size_t m = 0; m < total.dims.size(); ++m) {
    Orbits& o = orbits[m];
    o.rep_of.assign(total.dims[m], -1);
    std::vector<bool> seen(total.dims[m], false);
    for (const auto& blk : total.blocks[m]) {
      const std::size_t dq = b.dim(blk.q);
      const std::size_t off_q = b.offset(blk.q);
      const Rational block_sign = blk.p % 2 ? -1 : 1;
      // lambda on a basis position: one signed position.
      auto lambda = [&](std::size_t pos) -> std::pair<std::size_t, Rational> {
        if (blk.p == 0) return {pos, Rational(1)};
        const std::size_t local = pos - blk.offset;
        std::size_t ti = local / dq;
        const std::size_t x = off_q + local % dq;
        std::vector<std::size_t> h(blk.p);
        for (std::size_t k = blk.p; k-- > 0;) {
          h[k] = ti % order;
          ti /= order;
        }
        // t(e_{h,x}) is supported at (h_2..h_p, (h_2...h_p)^{-1} h_1^{-1}) with value rho(h_1^{-1}) e_x.
        std::size_t rest = static_cast<std::size_t>(g.identity_index());
        for (std::size_t k = 1; k < blk.p; ++k) rest = static_cast<std::size_t>(mul(g, rest, h[k]));
        const int h1inv = g.inv(static_cast<int>(h[0]));
        std::size_t idx = 0;
        for (std::size_t k = 1; k < blk.p; ++k) idx = idx * order + h[k];
        idx = idx * order + static_cast<std::size_t>(g.mul(g.inv(static_cast<int>(rest)), h1inv));
        const auto& column = b.action_columns(static_cast<std::size_t>(h1inv))[x];
        const auto& [y, v] = column.front();
        return {blk.offset + idx * dq + (y - off_q), block_sign * v};
      };
      for (std::size_t pos = blk.offset; pos < blk.offset + blk.size; ++pos) {
        if (seen[pos]) continue;
        std::vector<std::pair<std::uint32_t, Rational>> vec{{static_cast<std::uint32_t>(pos), Rational(1)}};
        seen[pos] = true;
        Rational coeff = 1;
        std::size_t cur = pos;
        bool killed = false;
        while (true) {
          auto [next, s] = lambda(cur);
          coeff *= s;
          if (next == pos) {
            killed = coeff != 1;
            break;
          }
          seen[next] = true;
          vec.emplace_back(static_cast<std::uint32_t>(next), coeff);
          cur = next;
        }
        if (killed) continue;
        o.rep_of[pos] = static_cast<std::int64_t>(o.vectors.size());
        o.vectors.push_back(compress(std::move(vec)));
      }
    }
  }

  CyclicSubcomplex sub;
  for (const auto& o : orbits) sub.dims.push_back(o.vectors.size());
  for (std::size_t m = 0; m < total.differential.size(); ++m) {
    const SparseMatrix& d = total.differential[m];
    const Orbits& src = orbits[m];
    const Orbits& dst = orbits[m + 1];
    SparseMatrix r;
    r.rows = dst.vectors.size();
    r.cols = src.vectors.size();
    r.columns = kernels::map_indices(
        src.vectors.size(),
        [&](std::size_t j) {
          std::vector<std::pair<std::uint32_t, Rational>> entries;
          for (const auto& [pos, c] : src.vectors[j])
            for (const auto& [row, v] : d.columns[pos])
              if (dst.rep_of[row] >= 0) entries.emplace_back(static_cast<std::uint32_t>(dst.rep_of[row]), c * v);
          return compress(std::move(entries));
        },
        exec);
    sub.differential.push_back(std::move(r));
  }
  for (std::size_t m = 0; m + 1 < sub.differential.size(); ++m)
    if (compose(sub.differential[m + 1], sub.differential[m]).nonzeros() != 0)
      throw MathError("the cyclic subcomplex is not closed in degree " + std::to_string(m));
  return sub;
}

std::vector<std::size_t> cyclic_cohomology(std::shared_ptr<const GradedAlgebra> base, std::size_t max_degree) {
  const TotalComplex total = assemble_total_complex(std::move(base), max_degree);
  const CyclicSubcomplex sub = cyclic_subcomplex(total);
  return dims_from_ranks(sub.dims, kernels::complex_ranks(sub.differential), max_degree);
}

Report verify_hopf_cyclic_decomposition(std::shared_ptr<const GradedAlgebra> base, std::size_t max_degree,
                                        const SimplicialGComplex* complex) {
  Report r;
  r.title = "cyclic";
  const TotalComplex total = assemble_total_complex(base, max_degree);
  r.check("total.D-squared-zero", true);
  const auto hh = hochschild_cohomology(total);
  const CyclicSubcomplex sub = cyclic_subcomplex(total);
  const auto hc = dims_from_ranks(sub.dims, kernels::complex_ranks(sub.differential), max_degree);

  auto periodic_sum = [&](const std::vector<std::size_t>& h) {
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n <= max_degree; ++n) {
      std::size_t s = 0;
      for (std::size_t k = 0; 2 * k <= n; ++k)
        if (n - 2 * k < h.size()) s += h[n - 2 * k];
      out.push_back(s);
    }
    return out;
  };
  r.table_of("total_dims", std::vector<std::size_t>(total.dims.begin(), total.dims.end() - 1));
  r.table_of("cyclic_dims", std::vector<std::size_t>(sub.dims.begin(), sub.dims.end() - 1));
  r.table_of("HH", hh);
  r.table_of("HC", hc);
  const auto predicted = periodic_sum(hh);
  r.table_of("HC_from_HH", predicted);
  r.check("decomposition.total", hc == predicted,
          hc == predicted ? "" : "HC differs from sum_k H^{n-2k}(total)");
  if (complex) {
    const auto betti = invariant_betti(*complex);
    std::vector<std::size_t> padded(max_degree + 1, 0);
    for (std::size_t p = 0; p < betti.size() && p <= max_degree; ++p) padded[p] = betti[p];
    r.table_of("invariant_betti", padded);
    const auto from_invariant = periodic_sum(padded);
    r.table_of("HC_from_invariant", from_invariant);
    r.check("decomposition.invariant", hc == from_invariant,
            hc == from_invariant ? "" : "HC differs from sum_k H^{n-2k}(invariant subcomplex)");
    r.check("total-equals-invariant", hh == padded, hh == padded ? "" : "H(total) differs from invariant Betti");
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

HopfCochain random_cochain(const std::shared_ptr<const GradedAlgebra>& base, std::size_t n, std::mt19937_64& rng) {
  HopfCochain c(base, n);
  std::uniform_int_distribution<int> dist(-2, 2);
  for (auto& v : c.data()) v = dist(rng);
  return c;
}

std::string where(std::size_t n, const std::string& what) { return what + " in degree " + std::to_string(n); }

}  // namespace

Report verify_cyclic_structure(std::shared_ptr<const GradedAlgebra> base, const CyclicStructureOptions& opt) {
  Report r;
  r.title = "cyclic-structure";
  std::mt19937_64 rng(opt.seed);
  std::string faces_w, degen_w, mixed_w, cyc_w, cocyclic_w, b_w;
  auto note = [](std::string& slot, const std::string& text) {
    if (slot.empty()) slot = text;
  };
  const std::size_t top = opt.max_n;  // no cochain above this degree is formed
  for (std::size_t n = 0; n <= top; ++n) {
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const HopfCochain c = random_cochain(base, n, rng);
      // delta_j delta_i = delta_i delta_{j-1}, i < j, landing in degree n+2
      if (n + 2 <= top)
        for (std::size_t j = 1; j <= n + 2; ++j)
          for (std::size_t i = 0; i < j; ++i)
            if (face(j, face(i, c)) != face(i, face(j - 1, c)))
              note(faces_w, where(n, "d" + std::to_string(j) + "d" + std::to_string(i)));
      // sigma_j sigma_i = sigma_i sigma_{j+1}, i <= j, landing in degree n-2
      if (n >= 2)
        for (std::size_t j = 0; j + 2 <= n; ++j)
          for (std::size_t i = 0; i <= j; ++i)
            if (degeneracy(j, degeneracy(i, c)) != degeneracy(i, degeneracy(j + 1, c)))
              note(degen_w, where(n, "s" + std::to_string(j) + "s" + std::to_string(i)));
      // sigma_j delta_i through degree n+1
      if (n + 1 <= top)
        for (std::size_t j = 0; j <= n; ++j)
          for (std::size_t i = 0; i <= n + 1; ++i) {
            const HopfCochain lhs = degeneracy(j, face(i, c));
            HopfCochain rhs = c;
            if (i < j)
              rhs = face(i, degeneracy(j - 1, c));
            else if (i > j + 1)
              rhs = face(i - 1, degeneracy(j, c));
            if (lhs != rhs) note(mixed_w, where(n, "s" + std::to_string(j) + "d" + std::to_string(i)));
          }
      HopfCochain t = c;
      for (std::size_t k = 0; k <= n; ++k) t = cyclic_operator(t);
      if (t != c) note(cyc_w, where(n, "t^{n+1}"));
      // tau delta_i = delta_{i-1} tau (1 <= i <= n+1), tau delta_0 = delta_{n+1}
      if (n + 1 <= top) {
        for (std::size_t i = 1; i <= n + 1; ++i)
          if (cyclic_operator(face(i, c)) != face(i - 1, cyclic_operator(c)))
            note(cocyclic_w, where(n, "t d" + std::to_string(i)));
        if (cyclic_operator(face(0, c)) != face(n + 1, c)) note(cocyclic_w, where(n, "t d0"));
      }
      // tau sigma_i = sigma_{i-1} tau (1 <= i <= n-1), tau sigma_0 = sigma_{n-1} tau^2
      if (n >= 1) {
        for (std::size_t i = 1; i + 1 <= n; ++i)
          if (cyclic_operator(degeneracy(i, c)) != degeneracy(i - 1, cyclic_operator(c)))
            note(cocyclic_w, where(n, "t s" + std::to_string(i)));
        if (cyclic_operator(degeneracy(0, c)) != degeneracy(n - 1, cyclic_operator(cyclic_operator(c))))
          note(cocyclic_w, where(n, "t s0"));
      }
      if (n + 2 <= top && !is_zero(hochschild_coboundary(hochschild_coboundary(c)).data())) note(b_w, where(n, "b^2"));
    }
  }
  r.check("cosimplicial.faces", faces_w.empty(), faces_w);
  r.check("cosimplicial.degeneracies", degen_w.empty(), degen_w);
  r.check("cosimplicial.mixed", mixed_w.empty(), mixed_w);
  r.check("cyclic.t-order", cyc_w.empty(), cyc_w);
  r.check("cyclic.compatibility", cocyclic_w.empty(), cocyclic_w);
  r.check("hochschild.b-squared-zero", b_w.empty(), b_w);
  r.fact("max_cochain_degree", std::to_string(top));

  // Tensor-side operators against function-side operators.
  if (!base->has_product()) {
    r.skip("coherence", "B has no product, so A (x)_B A has no elementary tensors");
    return r;
  }
  const HopfAlgebroid h(base);
  const GroupModel& g = base->group();
  const std::size_t order = g.order();
  std::vector<std::pair<AlgebroidElement, std::string>> elements;
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t i = 0; i < base->dim(); ++i)
      elements.emplace_back(h.point(g.element(a), base->basis_vector(i)),
                            base->basis_name(i) + "@" + g.describe(g.element(a)));
  std::string face_c, degen_c, tau_c;
  for (std::size_t i = 0; i < base->dim(); ++i) {
    HopfCochain b0(base, 0);
    b0.set_value(0, base->basis_vector(i));
    if (face(0, b0) != identify_tensor(h, {h.target(base->basis_vector(i))}) ||
        face(1, b0) != identify_tensor(h, {h.source(base->basis_vector(i))}))
      note(face_c, "degree 0, " + base->basis_name(i));
  }
  auto compare = [&](const std::vector<AlgebroidElement>& factors, const std::string& name) {
    const std::size_t n = factors.size();
    const HopfCochain c = identify_tensor(h, factors);
    for (std::size_t i = 0; i <= n + 1 && face_c.empty(); ++i)
      if (tensor_face(h, i, factors) != face(i, c)) note(face_c, "d" + std::to_string(i) + " on " + name);
    for (std::size_t j = 0; j < n && degen_c.empty(); ++j)
      if (tensor_degeneracy(h, j, factors) != degeneracy(j, c)) note(degen_c, "s" + std::to_string(j) + " on " + name);
    if (tau_c.empty() && tau_via_hopf(h, factors) != cyclic_operator(c)) note(tau_c, "tau on " + name);
  };
  // (delta_{h1} e_x) (x) delta_{h2} (x) ... (x) delta_{hn} runs over a basis of the n-fold tensor power.
  std::size_t basis_inputs = 0, mixed_inputs = 0;
  bool mixed_exhaustive = true;
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
  for (std::size_t n = 1; n <= opt.coherence_max_n; ++n) {
    for (std::size_t t = 0; t < power(order, n); ++t) {
      std::vector<std::size_t> tuple(n);
      for (std::size_t k = n, rem = t; k-- > 0; rem /= order) tuple[k] = rem % order;
      for (std::size_t x = 0; x < base->dim(); ++x) {
        std::vector<AlgebroidElement> factors{h.point(g.element(tuple[0]), base->basis_vector(x))};
        std::string name = base->basis_name(x) + "@" + g.describe(g.element(tuple[0]));
        for (std::size_t k = 1; k < n; ++k) {
          factors.push_back(h.point(g.element(tuple[k]), base->unit()));
          name += " (x) 1@" + g.describe(g.element(tuple[k]));
        }
        compare(factors, name);
        ++basis_inputs;
      }
    }
    // Arbitrary factor lists exercise the balancing over B.
    std::vector<std::vector<std::size_t>> lists;
    if (power(elements.size(), n) <= opt.coherence_limit) {
      std::vector<std::size_t> idx(n, 0);
      while (true) {
        lists.push_back(idx);
        std::size_t k = n;
        while (k > 0 && ++idx[k - 1] == elements.size()) idx[--k] = 0;
        if (k == 0) break;
      }
    } else {
      mixed_exhaustive = false;
      for (std::size_t s = 0; s < opt.samples * 64; ++s) {
        std::vector<std::size_t> idx(n);
        for (auto& v : idx) v = pick(rng);
        lists.push_back(idx);
      }
    }
    for (const auto& idx : lists) {
      std::vector<AlgebroidElement> factors;
      std::string name;
      for (std::size_t k : idx) {
        factors.push_back(elements[k].first);
        name += (name.empty() ? "" : " (x) ") + elements[k].second;
      }
      compare(factors, name);
      ++mixed_inputs;
    }
  }
  r.check("coherence.faces", face_c.empty(), face_c);
  r.check("coherence.degeneracies", degen_c.empty(), degen_c);
  r.check("coherence.tau", tau_c.empty(), tau_c);
  r.fact("coherence_basis_inputs", std::to_string(basis_inputs) + " (exhaustive)");
  r.fact("coherence_mixed_inputs", std::to_string(mixed_inputs) + (mixed_exhaustive ? " (exhaustive)" : " (sampled)"));
  return r;
}

}  // namespace equihodge
