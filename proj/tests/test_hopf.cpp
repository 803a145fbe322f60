#include "doctest.h"

#include <memory>

#include "equihodge/errors.hpp"
#include "equihodge/hopf.hpp"

using namespace equihodge;

namespace {

std::shared_ptr<const GroupModel> cyclic(int n) { return std::make_shared<GroupModel>(GroupModel::cyclic(n)); }

std::shared_ptr<const GradedAlgebra> swap_points() {
  return std::make_shared<GradedAlgebra>(build_function_algebra(cyclic(2), {{0, 1}, {1, 0}}, {"a", "b"}));
}

std::shared_ptr<const GradedAlgebra> exterior3() {
  return std::make_shared<GradedAlgebra>(
      build_exterior_algebra(cyclic(3), 3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
}

const GroupElement e{0}, t{1};

Vector one_a() { return {Rational(1), Rational(0)}; }
Vector one_b() { return {Rational(0), Rational(1)}; }

void require_all_pass(const Report& r) {
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.status != CheckStatus::fail);
  }
}

}  // namespace

TEST_CASE("source and target on Z/2 swapping two points") {
  const HopfAlgebroid h(swap_points());
  const auto s = h.source(one_a());
  CHECK(s(e) == one_a());
  CHECK(s(t) == one_a());
  const auto b = h.target(one_a());
  CHECK(b(e) == one_a());
  CHECK(b(t) == one_b());
  CHECK(is_zero(h.source(Vector(2))(t)));
  CHECK(h.target(h.base().unit())(t) == h.base().unit());
}

TEST_CASE("target equals source for the trivial action") {
  const auto base = std::make_shared<GradedAlgebra>(build_function_algebra(cyclic(2), {{0, 1}, {0, 1}}));
  const HopfAlgebroid h(base);
  for (const auto& g : {e, t}) CHECK(h.source(one_b())(g) == h.target(one_b())(g));
}

TEST_CASE("coproduct, counit and antipode by hand") {
  const HopfAlgebroid h(swap_points());
  // phi = (e -> 1_a, t -> 1_b), which is beta(1_a).
  const AlgebroidElement phi = h.add(h.point(e, one_a()), h.point(t, one_b()));
  CHECK(h.coproduct(phi)(t, t) == one_a());
  CHECK(h.coproduct(phi)(e, t) == one_b());
  CHECK(h.counit(phi) == one_a());
  const auto s = h.antipode(phi);
  CHECK(s(e) == one_a());
  CHECK(s(t) == one_a());
  CHECK(h.coproduct(h.unit())(t, e) == h.base().unit());
  CHECK(h.counit(h.unit()) == h.base().unit());
  CHECK(h.counit(h.target(one_b())) == one_b());
  CHECK(h.antipode(h.unit())(t) == h.base().unit());
  for (const auto& g : {e, t}) {
    CHECK(h.antipode(h.source(one_a()))(g) == h.target(one_a())(g));
    CHECK(h.antipode(h.target(one_a()))(g) == h.source(one_a())(g));
    CHECK(h.coproduct(h.source(one_b()))(g, t) == one_b());
  }
}

TEST_CASE("tensor over B") {
  const HopfAlgebroid h(swap_points());
  for (const auto& g1 : {e, t})
    for (const auto& g2 : {e, t}) {
      // The defining relation beta(b) (x) 1 = 1 (x) alpha(b) holds identically.
      CHECK(h.tensor_over_B(h.target(one_a()), h.unit())(g1, g2) ==
            h.tensor_over_B(h.unit(), h.source(one_a()))(g1, g2));
      CHECK(h.tensor_over_B(h.unit(), h.unit())(g1, g2) == h.base().unit());
    }
  const auto sa = h.source(one_a());
  CHECK(h.tensor_over_B(sa, sa)(e, e) == one_a());
  CHECK(is_zero(h.tensor_over_B(sa, sa)(t, e)));  // 1_a * t^*(1_a) = 1_a * 1_b

  GradedAlgebra::Data bare;
  bare.dims = {1};
  bare.action = {Matrix::identity(1), Matrix::identity(1)};
  const HopfAlgebroid no_product(std::make_shared<GradedAlgebra>(cyclic(2), bare));
  CHECK_THROWS_AS(no_product.tensor_over_B(no_product.zero(), no_product.zero()), UnsupportedError);
}

TEST_CASE("every axiom holds for Z/2 on two points") {
  const Report r = check_hopf_axioms(HopfAlgebroid(swap_points()));
  require_all_pass(r);
  CHECK(r.find("antipode.fourth-identity")->status == CheckStatus::pass);
  CHECK(r.find("coproduct.coassociative")->status == CheckStatus::pass);
  CHECK(r.find("counit.counital")->status == CheckStatus::pass);
}

TEST_CASE("every axiom holds for Z/3 on an exterior algebra, graded signs included") {
  const Report r = check_hopf_axioms(HopfAlgebroid(exterior3()));
  require_all_pass(r);
  CHECK(r.find("antipode.anti-homomorphism")->status == CheckStatus::pass);
  CHECK(r.find("source-target.commute")->status == CheckStatus::pass);
}

TEST_CASE("an antipode without the pullback is caught") {
  HopfCheckOptions opt;
  opt.antipode_override = [](const HopfAlgebroid& h, const AlgebroidElement& a) {
    const GroupModel* g = &h.group();
    return AlgebroidElement{1, [g, a](const std::vector<GroupElement>& x) { return a(g->inverse(x[0])); }};
  };
  const Report r = check_hopf_axioms(HopfAlgebroid(swap_points()), opt);
  const Check* c = r.find("antipode.m(S(x)Id)Delta=beta.eps.S");
  REQUIRE(c != nullptr);
  CHECK(c->status == CheckStatus::fail);
  CHECK_FALSE(c->detail.empty());
  CHECK(r.find("antipode.involution")->status == CheckStatus::pass);
}

TEST_CASE("free abelian groups are checked on a sampled window") {
  // Z acting on two points by the swap.
  const auto z = std::make_shared<GroupModel>(GroupModel::free_abelian(1));
  const auto base = std::make_shared<GradedAlgebra>(build_function_algebra(z, {{1, 0}}, {"a", "b"}));
  HopfCheckOptions opt;
  opt.sample_budget = 6;
  const Report r = check_hopf_axioms(HopfAlgebroid(base), opt);
  require_all_pass(r);
  CHECK(r.facts.back().second.rfind("seeded:", 0) == 0);
  // Same seed, same report.
  const Report again = check_hopf_axioms(HopfAlgebroid(base), opt);
  CHECK(again.checks.size() == r.checks.size());
}
