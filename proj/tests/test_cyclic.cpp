#include "doctest.h"

#include <chrono>

#include "equihodge/cyclic.hpp"
#include "equihodge/errors.hpp"
#include "sample_complexes.hpp"

using namespace equihodge;

namespace {

std::shared_ptr<const GradedAlgebra> share(GradedAlgebra a) { return std::make_shared<GradedAlgebra>(std::move(a)); }

std::shared_ptr<const GradedAlgebra> swap_points() {
  return share(build_function_algebra(samples::cyclic_group(2), {{0, 1}, {1, 0}}, {"a", "b"}));
}

std::shared_ptr<const GradedAlgebra> ground_field() {
  return share(build_function_algebra(std::make_shared<GroupModel>(GroupModel::trivial()), {{0}}));
}

std::shared_ptr<const GradedAlgebra> exterior3() {
  return share(build_exterior_algebra(samples::cyclic_group(3), 3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
}

std::vector<std::size_t> dims(std::initializer_list<std::size_t> v) { return v; }

void require_all_pass(const Report& r) {
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.status != CheckStatus::fail);
  }
}

}  // namespace

TEST_CASE("cochain indexing round-trips") {
  const HopfCochain c(swap_points(), 3);
  CHECK(c.tuple_count() == 8);
  for (std::size_t i = 0; i < c.tuple_count(); ++i) CHECK(c.index(c.tuple(i)) == i);
  CHECK(c.tuple(6) == std::vector<std::size_t>{1, 1, 0});
}

TEST_CASE("face and cyclic operators by hand on Z/2") {
  const auto b = swap_points();
  // c(h) = 1_a at h = t, zero at e.
  const HopfCochain c = HopfCochain::basis(b, {1}, 0);
  const HopfCochain d0 = face(0, c);  // (g, h) -> g.c(h)
  CHECK(d0.value({1, 1}) == Vector{0, 1});
  CHECK(d0.value({0, 1}) == Vector{1, 0});
  const HopfCochain d1 = face(1, c);  // c(gh)
  CHECK(d1.value({0, 1}) == Vector{1, 0});
  CHECK(d1.value({1, 0}) == Vector{1, 0});
  CHECK(is_zero(d1.value({1, 1})));
  const HopfCochain d2 = face(2, c);  // c(g)
  CHECK(d2.value({1, 0}) == Vector{1, 0});
  // t c(h) = h.c(h^{-1}) in degree one.
  CHECK(cyclic_operator(c).value({1}) == Vector{0, 1});
  CHECK(is_zero(cyclic_operator(c).value({0})));
  CHECK_THROWS_AS(face(3, c), std::out_of_range);
  CHECK_THROWS_AS(degeneracy(0, HopfCochain(b, 0)), std::out_of_range);
}

TEST_CASE("cocyclic identities and coherence with the Hopf operators") {
  for (const auto& b : {swap_points(), exterior3(), ground_field()}) {
    CyclicStructureOptions opt;
    opt.max_n = 3;
    const Report r = verify_cyclic_structure(b, opt);
    require_all_pass(r);
    CHECK(r.find("coherence.tau")->status == CheckStatus::pass);
  }
}

TEST_CASE("coherence is skipped when B has no product") {
  const auto k = samples::hexagon_rotation();
  CyclicStructureOptions opt;
  opt.max_n = 2;
  const Report r = verify_cyclic_structure(share(cochain_algebra(k)), opt);
  require_all_pass(r);
  CHECK(r.find("coherence")->status == CheckStatus::skipped);
}

TEST_CASE("tau via the antipode agrees with t on whole cochains") {
  const auto b = exterior3();
  const HopfAlgebroid h(b);
  for (std::size_t n = 1; n <= 2; ++n) {
    HopfCochain c(b, n);
    for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] = Rational(static_cast<long>(i % 5) - 2, 3);
    CHECK(tau_via_hopf(h, c) == cyclic_operator(c));
  }
}

TEST_CASE("two points swapped by Z/2") {
  CHECK(cyclic_cohomology(swap_points(), 4) == dims({1, 0, 1, 0, 1}));
  require_all_pass(verify_hopf_cyclic_decomposition(swap_points(), 4));
}

TEST_CASE("trivial group over the ground field") {
  CHECK(cyclic_cohomology(ground_field(), 5) == dims({1, 0, 1, 0, 1, 0}));
}

TEST_CASE("Z/3 on an exterior algebra") {
  const auto b = exterior3();
  const Report r = verify_hopf_cyclic_decomposition(b, 3);
  require_all_pass(r);
  // Invariants of the exterior algebra: 1, e1+e2+e3, the invariant 2-form and e1e2e3.
  CHECK(*r.find_table("HH") == std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("hexagon cochains under rotation") {
  const auto k = samples::hexagon_rotation();
  const auto b = share(cochain_algebra(k));
  const auto t0 = std::chrono::steady_clock::now();
  const Report r = verify_hopf_cyclic_decomposition(b, 4, &k);
  MESSAGE("hexagon degree 4: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
                               << " s");
  require_all_pass(r);
  CHECK(*r.find_table("HC") == std::vector<long long>{1, 1, 1, 1, 1});
}

TEST_CASE("total complex is the same for both execution modes") {
  const auto b = share(cochain_algebra(samples::hexagon_rotation()));
  const auto serial = assemble_total_complex(b, 2, Execution::serial);
  const auto parallel = assemble_total_complex(b, 2, Execution::parallel);
  CHECK(serial.dims == parallel.dims);
  for (std::size_t m = 0; m < serial.differential.size(); ++m)
    CHECK(serial.differential[m].columns == parallel.differential[m].columns);
  CHECK(hochschild_cohomology(serial, Execution::serial) == hochschild_cohomology(parallel, Execution::parallel));
}

TEST_CASE("non-monomial actions are refused by the cyclic basis") {
  // Z/2 on a 2-dimensional degree-0 space by a non-permutation involution.
  GradedAlgebra::Data d;
  d.dims = {2};
  d.action = {Matrix::identity(2), Matrix{{1, 1}, {0, -1}}};
  const auto b = share(GradedAlgebra(samples::cyclic_group(2), d));
  const auto total = assemble_total_complex(b, 1);
  CHECK_THROWS_AS(cyclic_subcomplex(total), UnsupportedError);
}

TEST_CASE("seven-vertex torus cochains") {
  const auto k = samples::seven_vertex_torus();
  const Report r = verify_hopf_cyclic_decomposition(share(cochain_algebra(k)), 3, &k);
  require_all_pass(r);
  CHECK(*r.find_table("HH") == std::vector<long long>{1, 2, 1, 0});
  CHECK(*r.find_table("HC") == std::vector<long long>{1, 2, 2, 2});
}
