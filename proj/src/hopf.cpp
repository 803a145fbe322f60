#include "equihodge/hopf.hpp"

#include <map>
#include <optional>
#include <random>

#include "equihodge/errors.hpp"

namespace equihodge {

GradedElement GFunction::operator()(const std::vector<GroupElement>& args) const {
  if (args.size() != arity_)
    throw std::invalid_argument("function of arity " + std::to_string(arity_) + " called with " +
                                std::to_string(args.size()) + " arguments");
  return fn_(args);
}

namespace {

using Base = std::shared_ptr<const GradedAlgebra>;

void require_product(const GradedAlgebra& b, const char* what) {
  if (!b.has_product()) throw UnsupportedError(std::string(what) + " needs a product on B");
}

GroupElement product_range(const GroupModel& g, const std::vector<GroupElement>& args, std::size_t begin,
                           std::size_t end) {
  GroupElement p = g.identity();
  for (std::size_t i = begin; i < end; ++i) p = g.multiply(p, args[i]);
  return p;
}

std::vector<GroupElement> slice(const std::vector<GroupElement>& v, std::size_t begin, std::size_t end) {
  return {v.begin() + static_cast<std::ptrdiff_t>(begin), v.begin() + static_cast<std::ptrdiff_t>(end)};
}

}  // namespace

HopfAlgebroid::HopfAlgebroid(std::shared_ptr<const GradedAlgebra> base) : base_(std::move(base)) {
  if (!base_) throw std::invalid_argument("HopfAlgebroid needs a base algebra");
}

std::vector<GroupElement> HopfAlgebroid::lift_window() const {
  return group().is_finite() ? group().window() : group().window(lift_radius_);
}

GroupElement HopfAlgebroid::product_of(const std::vector<GroupElement>& args, std::size_t begin,
                                       std::size_t end) const {
  return product_range(group(), args, begin, end);
}

AlgebroidElement HopfAlgebroid::source(const GradedElement& b) const {
  return {1, [b](const std::vector<GroupElement>&) { return b; }};
}

AlgebroidElement HopfAlgebroid::target(const GradedElement& b) const {
  Base base = base_;
  return {1, [base, b](const std::vector<GroupElement>& g) { return base->act(g[0], b); }};
}

AlgebroidElement HopfAlgebroid::unit() const {
  require_product(*base_, "the unit of A");
  return source(base_->unit());
}

GFunction HopfAlgebroid::zero(std::size_t arity) const {
  const std::size_t n = base_->dim();
  return {arity, [n](const std::vector<GroupElement>&) { return GradedElement(n); }};
}

AlgebroidElement HopfAlgebroid::point(const GroupElement& g, const GradedElement& b) const {
  const std::size_t n = base_->dim();
  return {1, [g, b, n](const std::vector<GroupElement>& x) { return x[0] == g ? b : GradedElement(n); }};
}

GFunction HopfAlgebroid::add(const GFunction& x, const GFunction& y) const {
  return {x.arity(), [x, y](const std::vector<GroupElement>& a) { return equihodge::add(x(a), y(a)); }};
}

GFunction HopfAlgebroid::subtract(const GFunction& x, const GFunction& y) const {
  return {x.arity(), [x, y](const std::vector<GroupElement>& a) { return equihodge::subtract(x(a), y(a)); }};
}

GFunction HopfAlgebroid::scale(const Rational& s, const GFunction& x) const {
  return {x.arity(), [s, x](const std::vector<GroupElement>& a) { return equihodge::scale(s, x(a)); }};
}

GFunction HopfAlgebroid::multiply(const GFunction& x, const GFunction& y) const {
  require_product(*base_, "the product of A");
  Base base = base_;
  return {x.arity(), [base, x, y](const std::vector<GroupElement>& a) { return base->multiply(x(a), y(a)); }};
}

GFunction HopfAlgebroid::differentiate(const GFunction& x) const {
  Base base = base_;
  return {x.arity(), [base, x](const std::vector<GroupElement>& a) { return base->differentiate(x(a)); }};
}

TensorSquare HopfAlgebroid::coproduct(const AlgebroidElement& a) const { return iterated_coproduct(a, 2); }

GFunction HopfAlgebroid::iterated_coproduct(const AlgebroidElement& a, std::size_t n) const {
  if (n == 0) throw std::invalid_argument("iterated coproduct needs n >= 1");
  Base base = base_;
  return {n, [base, a, n](const std::vector<GroupElement>& g) {
            return a(product_range(base->group(), g, 0, n));
          }};
}

GradedElement HopfAlgebroid::counit(const AlgebroidElement& a) const { return a(group().identity()); }

AlgebroidElement HopfAlgebroid::antipode(const AlgebroidElement& a) const {
  Base base = base_;
  return {1, [base, a](const std::vector<GroupElement>& g) {
            return base->act(g[0], a(base->group().inverse(g[0])));
          }};
}

GFunction HopfAlgebroid::tensor(const GFunction& x, const GFunction& y) const {
  require_product(*base_, "the tensor product over B");
  Base base = base_;
  const std::size_t m = x.arity(), n = y.arity();
  return {m + n, [base, x, y, m, n](const std::vector<GroupElement>& g) {
            const GroupElement shift = product_range(base->group(), g, 0, m);
            return base->multiply(x(slice(g, 0, m)), base->act(shift, y(slice(g, m, m + n))));
          }};
}

TensorSquare HopfAlgebroid::tensor_over_B(const AlgebroidElement& a1, const AlgebroidElement& a2) const {
  return tensor(a1, a2);
}

// Writing T = sum_h (T(h, rest) delta_h) (x) delta_rest, the trailing factors are
// scalar indicators, so (F (x) Id)(T) at (g1..gk, rest) collapses to the sum
// over h of F(T(h, rest) delta_h)(g1..gk).
GFunction HopfAlgebroid::apply_first(const std::function<GFunction(const AlgebroidElement&)>& f,
                                     const GFunction& t) const {
  const std::size_t k = f(zero(1)).arity();
  const std::size_t n = t.arity();
  const std::vector<GroupElement> window = lift_window();
  Base base = base_;
  HopfAlgebroid self = *this;
  return {k + n - 1, [self, base, f, t, k, n, window](const std::vector<GroupElement>& g) {
            GradedElement sum(base->dim());
            std::vector<GroupElement> targs(n);
            for (std::size_t i = 1; i < n; ++i) targs[i] = g[k + i - 1];
            const std::vector<GroupElement> head = slice(g, 0, k);
            for (const auto& h : window) {
              targs[0] = h;
              GradedElement v = t(targs);
              if (is_zero(v)) continue;
              sum = equihodge::add(sum, f(self.point(h, v))(head));
            }
            return sum;
          }};
}

// T = sum_{h1,h2} (T(h1,h2) delta_h1) (x) delta_h2 and
// (x (x) F(delta_h2))(g1, g2..) = x(g1) g1^*(F(delta_h2)(g2..)).
GFunction HopfAlgebroid::apply_second(const std::function<GFunction(const AlgebroidElement&)>& f,
                                      const TensorSquare& t) const {
  require_product(*base_, "Id (x) F");
  const std::size_t k = f(zero(1)).arity();
  const std::vector<GroupElement> window = lift_window();
  Base base = base_;
  HopfAlgebroid self = *this;
  return {1 + k, [self, base, f, t, k, window](const std::vector<GroupElement>& g) {
            GradedElement sum(base->dim());
            const std::vector<GroupElement> tail = slice(g, 1, 1 + k);
            for (const auto& h : window) {
              GradedElement x = t(g[0], h);
              if (is_zero(x)) continue;
              GradedElement y = f(self.point(h, base->unit()))(tail);
              sum = equihodge::add(sum, base->multiply(x, base->act(g[0], y)));
            }
            return sum;
          }};
}

// m_A((T(h1,h2) delta_h1) (x) delta_h2) = T(h1,h2) delta_h1 delta_h2.
AlgebroidElement HopfAlgebroid::multiply_factors(const TensorSquare& t) const {
  return {1, [t](const std::vector<GroupElement>& g) { return t(g[0], g[0]); }};
}

// ---------------------------------------------------------------------------
// Axiom suite

namespace {

struct TestElement {
  AlgebroidElement f;
  std::size_t degree;
  std::string name;
};

struct BasisElement {
  GradedElement v;
  std::size_t degree;
  std::string name;
};

int koszul(std::size_t p, std::size_t q) { return (p * q) % 2 ? -1 : 1; }

std::vector<std::vector<GroupElement>> cartesian(const std::vector<GroupElement>& base, std::size_t arity) {
  std::vector<std::vector<GroupElement>> out{{}};
  for (std::size_t i = 0; i < arity; ++i) {
    std::vector<std::vector<GroupElement>> next;
    for (const auto& prefix : out)
      for (const auto& g : base) {
        auto p = prefix;
        p.push_back(g);
        next.push_back(std::move(p));
      }
    out = std::move(next);
  }
  return out;
}

class AxiomLedger {
 public:
  void declare(const std::string& name) {
    if (!index_.count(name)) {
      index_[name] = order_.size();
      order_.push_back({name, {}});
    }
  }
  void fail(const std::string& name, const std::string& witness) {
    declare(name);
    auto& slot = order_[index_.at(name)].second;
    if (!slot) slot = witness;
  }
  bool failed(const std::string& name) const {
    auto it = index_.find(name);
    return it != index_.end() && order_[it->second].second.has_value();
  }
  void emit(Report& report) const {
    for (const auto& [name, witness] : order_) report.check(name, !witness, witness.value_or(""));
  }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<std::pair<std::string, std::optional<std::string>>> order_;
};

class Checker {
 public:
  Checker(HopfAlgebroid h, const HopfCheckOptions& opt) : h_(std::move(h)), opt_(opt), rng_(opt.seed) {
    const GroupModel& g = h_.group();
    points_ = g.is_finite() ? g.window() : g.window(opt.window_radius);
    if (!g.is_finite()) h_.set_lift_radius(2 * opt.window_radius + 1);
  }

  std::string describe(const std::vector<GroupElement>& args) const {
    std::string s = "(";
    for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + h_.group().describe(args[i]);
    return s + ")";
  }

  /// First evaluation point where the two functions differ, if any.
  std::optional<std::string> differ(const GFunction& x, const GFunction& y) const {
    if (x.arity() != y.arity()) return "arity " + std::to_string(x.arity()) + " vs " + std::to_string(y.arity());
    for (const auto& args : cartesian(points_, x.arity()))
      if (x(args) != y(args)) return "at " + describe(args);
    return std::nullopt;
  }

  void expect(const std::string& axiom, const GFunction& x, const GFunction& y, const std::string& input) {
    ledger.declare(axiom);
    if (ledger.failed(axiom)) return;
    if (auto where = differ(x, y)) ledger.fail(axiom, input + " " + *where);
  }

  void expect_value(const std::string& axiom, const GradedElement& x, const GradedElement& y,
                    const std::string& input) {
    ledger.declare(axiom);
    if (!ledger.failed(axiom) && x != y) ledger.fail(axiom, input);
  }

  template <typename T, typename U>
  std::vector<std::pair<std::size_t, std::size_t>> pairs(const std::vector<T>& a, const std::vector<U>& b) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (a.empty() || b.empty()) return out;
    const std::size_t limit = opt_.exhaustive_limit * opt_.exhaustive_limit;
    if (a.size() * b.size() <= limit) {
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out.emplace_back(i, j);
      return out;
    }
    sampled = true;
    std::uniform_int_distribution<std::size_t> da(0, a.size() - 1), db(0, b.size() - 1);
    for (std::size_t k = 0; k < opt_.sample_budget * opt_.sample_budget; ++k) out.emplace_back(da(rng_), db(rng_));
    return out;
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  HopfAlgebroid h_;
  const HopfCheckOptions& opt_;
  std::mt19937_64 rng_;
  std::vector<GroupElement> points_;
  AxiomLedger ledger;
  bool sampled = false;
};

}  // namespace

Report check_hopf_axioms(const HopfAlgebroid& hopf, const HopfCheckOptions& opt) {
  Checker c(hopf, opt);
  const HopfAlgebroid& h = c.h_;
  const GradedAlgebra& b = h.base();
  const GroupModel& group = h.group();
  const bool product = b.has_product();
  auto S = [&](const AlgebroidElement& a) {
    return opt.antipode_override ? opt.antipode_override(h, a) : h.antipode(a);
  };

  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < b.dim(); ++i) basis.push_back({b.basis_vector(i), b.degree_of(i), b.basis_name(i)});

  // Basis of A on the evaluation points: b_i at g.
  std::vector<TestElement> elements;
  const std::size_t total = c.points_.size() * basis.size();
  if (total <= opt.exhaustive_limit * std::max<std::size_t>(1, c.points_.size()) && group.is_finite() &&
      b.dim() <= opt.exhaustive_limit) {
    for (const auto& g : c.points_)
      for (const auto& e : basis) elements.push_back({h.point(g, e.v), e.degree, e.name + "@" + group.describe(g)});
  } else {
    c.sampled = true;
    for (std::size_t k = 0; k < opt.sample_budget && total > 0; ++k) {
      const auto& g = c.points_[c.pick(c.points_.size())];
      const auto& e = basis[c.pick(basis.size())];
      elements.push_back({h.point(g, e.v), e.degree, e.name + "@" + group.describe(g)});
    }
  }
  // Constant and pulled-back functions are not finite sums of point elements
  // when G is infinite; include them explicitly.
  for (const auto& e : basis) {
    elements.push_back({h.source(e.v), e.degree, "alpha(" + e.name + ")"});
    elements.push_back({h.target(e.v), e.degree, "beta(" + e.name + ")"});
  }

  Report report;
  report.title = "hopf-axioms";

  // --- source and target
  if (product) {
    const GradedElement one = b.unit();
    c.expect("source.homomorphism", h.source(one), h.unit(), "alpha(1)");
    c.expect("target.anti-homomorphism", h.target(one), h.unit(), "beta(1)");
    for (auto [i, j] : c.pairs(basis, basis)) {
      const auto &x = basis[i], &y = basis[j];
      const std::string in = "(" + x.name + "," + y.name + ")";
      const Rational sign = koszul(x.degree, y.degree);
      c.expect("source.homomorphism", h.source(b.multiply(x.v, y.v)), h.multiply(h.source(x.v), h.source(y.v)), in);
      c.expect("target.anti-homomorphism", h.target(b.multiply(x.v, y.v)),
               h.scale(sign, h.multiply(h.target(y.v), h.target(x.v))), in);
      c.expect("source-target.commute", h.multiply(h.source(x.v), h.target(y.v)),
               h.scale(sign, h.multiply(h.target(y.v), h.source(x.v))), in);
    }
  } else {
    report.skip("source-target", "B has no product");
  }

  // --- coproduct
  auto Delta = [&](const AlgebroidElement& a) { return h.coproduct(a); };
  if (product) {
    c.expect("coproduct.unit", h.coproduct(h.unit()), h.tensor(h.unit(), h.unit()), "Delta(1)");
    for (const auto& a : elements) {
      const TensorSquare d = h.coproduct(a.f);
      c.expect("coproduct.coassociative", h.apply_first(Delta, d), h.apply_second(Delta, d), a.name);
    }
    for (auto [i, j] : c.pairs(elements, basis)) {
      const auto& a = elements[i];
      const auto& x = basis[j];
      const TensorSquare rel = h.subtract(h.tensor(h.target(x.v), h.unit()), h.tensor(h.unit(), h.source(x.v)));
      c.expect("coproduct.balanced", h.multiply(h.coproduct(a.f), rel), h.zero(2), a.name + "," + x.name);
    }
    for (auto [i, j] : c.pairs(elements, elements)) {
      const auto &a1 = elements[i], &a2 = elements[j];
      c.expect("coproduct.multiplicative", h.coproduct(h.multiply(a1.f, a2.f)),
               h.multiply(h.coproduct(a1.f), h.coproduct(a2.f)), a1.name + "," + a2.name);
    }
    // B-B bimodule map: Delta(alpha(x) a beta(y)) = alpha(x) Delta(a) beta(y), with
    // alpha(x)(u (x) v) = alpha(x)u (x) v and (u (x) v)beta(y) = u (x) v beta(y).
    for (auto [i, j] : c.pairs(elements, basis)) {
      const auto& a = elements[i];
      const auto& x = basis[j];
      const auto& y = basis[(i + j) % basis.size()];
      const TensorSquare lhs = h.coproduct(h.multiply(h.multiply(h.source(x.v), a.f), h.target(y.v)));
      const TensorSquare d = h.coproduct(a.f);
      const auto window = h.lift_window();
      const GradedElement xv = x.v, yv = y.v;
      const TensorSquare rhs{2, [&h, d, xv, yv, window](const std::vector<GroupElement>& g) {
                               GradedElement sum(h.base().dim());
                               for (const auto& h2 : window) {
                                 const GradedElement v = d(g[0], h2);
                                 if (is_zero(v)) continue;
                                 const AlgebroidElement u = h.multiply(h.source(xv), h.point(g[0], v));
                                 const AlgebroidElement w =
                                     h.multiply(h.point(h2, h.base().unit()), h.target(yv));
                                 sum = add(sum, h.tensor(u, w)(g));
                               }
                               return sum;
                             }};
      c.expect("coproduct.bimodule", lhs, rhs, x.name + "," + a.name + "," + y.name);
    }
  } else {
    report.skip("coproduct", "B has no product, so A (x)_B A has no elementary tensors");
  }

  // --- counit
  auto eps = [&](const AlgebroidElement& a) { return h.counit(a); };
  if (product) {
    c.expect_value("counit.unit", eps(h.unit()), b.unit(), "epsilon(1)");
    for (auto [i, j] : c.pairs(elements, elements)) {
      const auto &k = elements[j], &a = elements[i];
      if (!is_zero(eps(k.f))) continue;
      c.expect_value("counit.left-ideal", eps(h.multiply(a.f, k.f)), b.zero(), a.name + "*" + k.name);
    }
    for (const auto& a : elements) {
      const TensorSquare d = h.coproduct(a.f);
      const auto window = h.lift_window();
      const AlgebroidElement left{1, [&h, d, window](const std::vector<GroupElement>& g) {
                                    GradedElement sum(h.base().dim());
                                    for (const auto& h1 : window) {
                                      const GradedElement v = d(h1, g[0]);
                                      if (!is_zero(v)) sum = add(sum, h.counit(h.point(h1, v)));
                                    }
                                    return sum;
                                  }};
      const AlgebroidElement right{1, [&h, d, window](const std::vector<GroupElement>& g) {
                                     GradedElement sum(h.base().dim());
                                     for (const auto& h2 : window) {
                                       const GradedElement e = h.counit(h.point(h2, h.base().unit()));
                                       if (is_zero(e)) continue;
                                       sum = add(sum, h.base().multiply(d(g[0], h2), h.base().act(g[0], e)));
                                     }
                                     return sum;
                                   }};
      c.expect("counit.counital", left, a.f, "(epsilon (x) Id)Delta " + a.name);
      c.expect("counit.counital", right, a.f, "(Id (x) epsilon)Delta " + a.name);
    }
    for (auto [i, j] : c.pairs(elements, basis)) {
      const auto& a = elements[i];
      const auto& x = basis[j];
      const auto& y = basis[(3 * i + j) % basis.size()];
      c.expect_value("counit.bimodule", eps(h.multiply(h.multiply(h.source(x.v), a.f), h.target(y.v))),
                     b.multiply(b.multiply(x.v, eps(a.f)), y.v), x.name + "," + a.name + "," + y.name);
    }
    for (auto [i, j] : c.pairs(elements, elements)) {
      const auto &a = elements[i], &a2 = elements[j];
      const GradedElement whole = eps(h.multiply(a.f, a2.f));
      const std::string in = a.name + "," + a2.name;
      c.expect_value("counit.product", eps(h.multiply(a.f, h.source(eps(a2.f)))), whole, in);
      c.expect_value("counit.product", eps(h.multiply(a.f, h.target(eps(a2.f)))), whole, in);
    }
  } else {
    report.skip("counit", "B has no product");
  }

  // --- antipode
  for (const auto& a : elements) c.expect("antipode.involution", S(S(a.f)), a.f, a.name);
  for (const auto& x : basis) c.expect("antipode.target", S(h.target(x.v)), h.source(x.v), x.name);
  for (const auto& x : basis) {
    const GradedElement v = x.v;
    const AlgebroidElement constant{1, [v](const std::vector<GroupElement>&) { return v; }};
    c.expect("evaluation.S-beta", S(h.target(v)), constant, x.name);
  }
  if (product) {
    for (auto [i, j] : c.pairs(elements, elements)) {
      const auto &a1 = elements[i], &a2 = elements[j];
      c.expect("antipode.anti-homomorphism", S(h.multiply(a1.f, a2.f)),
               h.scale(koszul(a1.degree, a2.degree), h.multiply(S(a2.f), S(a1.f))), a1.name + "," + a2.name);
    }
    auto DeltaS = [&](const AlgebroidElement& a) { return h.coproduct(S(a)); };
    for (const auto& a : elements) {
      const TensorSquare d = h.coproduct(a.f);
      const TensorSquare s_id = h.apply_first(S, d);
      c.expect("antipode.m(S(x)Id)Delta=beta.eps.S", h.multiply_factors(s_id), h.target(eps(S(a.f))), a.name);

      const GFunction w = h.apply_first(DeltaS, d);
      const TensorSquare lhs{2, [w](const std::vector<GroupElement>& g) { return w({g[0], g[1], g[0]}); }};
      c.expect("antipode.fourth-identity", lhs, h.tensor(h.unit(), S(a.f)), a.name);

      // The explicit evaluations.
      const GradedAlgebra* bp = &h.base();
      const AlgebroidElement af = a.f;
      c.expect("evaluation.m(S(x)Id)Delta", h.multiply_factors(s_id),
               {1, [bp, af](const std::vector<GroupElement>& g) {
                  return bp->act(g[0], af(bp->group().identity()));
                }},
               a.name);
      c.expect("evaluation.(S(x)Id)Delta", s_id,
               {2, [bp, af](const std::vector<GroupElement>& g) {
                  const GroupModel& G = bp->group();
                  return bp->act(g[0], af(G.multiply(G.inverse(g[0]), g[1])));
                }},
               a.name);
      c.expect("evaluation.(DeltaS(x)Id)Delta", w,
               {3, [bp, af](const std::vector<GroupElement>& g) {
                  const GroupModel& G = bp->group();
                  const GroupElement g12 = G.multiply(g[0], g[1]);
                  return bp->act(g12, af(G.multiply(G.inverse(g12), g[2])));
                }},
               a.name);
      c.expect("evaluation.fourth-identity", lhs,
               {2, [bp, af](const std::vector<GroupElement>& g) {
                  const GroupModel& G = bp->group();
                  return bp->act(g[0], bp->act(g[1], af(G.inverse(g[1]))));
                }},
               a.name);
    }
  } else {
    report.skip("antipode.product-axioms", "B has no product");
  }

  // --- compatibility with the differential, and degree 0
  if (b.has_differential()) {
    for (const auto& x : basis) {
      const GradedElement dx = b.differentiate(x.v);
      c.expect("dg.source", h.source(dx), h.differentiate(h.source(x.v)), x.name);
      c.expect("dg.target", h.target(dx), h.differentiate(h.target(x.v)), x.name);
    }
    for (const auto& a : elements) {
      const AlgebroidElement da = h.differentiate(a.f);
      c.expect("dg.coproduct", h.coproduct(da), h.differentiate(h.coproduct(a.f)), a.name);
      c.expect_value("dg.counit", eps(da), b.differentiate(eps(a.f)), a.name);
      c.expect("dg.antipode", S(da), h.differentiate(S(a.f)), a.name);
    }
  } else {
    report.skip("dg", "B has zero differential");
  }
  {
    auto homogeneous_of = [&](const GradedElement& v, std::size_t q) {
      for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0 && b.degree_of(i) != q) return false;
      return true;
    };
    c.ledger.declare("dg.degree-zero");
    for (const auto& a : elements) {
      bool ok = homogeneous_of(eps(a.f), a.degree);
      for (const auto& args : cartesian(c.points_, 1)) ok = ok && homogeneous_of(S(a.f)(args), a.degree);
      for (const auto& args : cartesian(c.points_, 2)) ok = ok && homogeneous_of(h.coproduct(a.f)(args), a.degree);
      if (!ok) c.ledger.fail("dg.degree-zero", a.name);
    }
  }

  c.ledger.emit(report);
  report.fact("elements", std::to_string(elements.size()));
  report.fact("sampling", c.sampled ? "seeded:" + std::to_string(opt.seed) : "exhaustive");
  return report;
}

}  // namespace equihodge
