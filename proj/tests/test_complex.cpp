#include "doctest.h"

#include "equihodge/errors.hpp"
#include "sample_complexes.hpp"

using namespace equihodge;

namespace {

std::vector<std::size_t> dims(std::initializer_list<std::size_t> v) { return v; }

void require_all_pass(const Report& r) {
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.status != CheckStatus::fail);
  }
}

}  // namespace

TEST_CASE("hexagon under rotation") {
  const auto k = samples::hexagon_rotation();
  CHECK(k.orbits(0).size() == 2);
  CHECK(invariant_subcomplex(k).dims() == dims({2, 2}));
  CHECK(invariant_betti(k) == dims({1, 1}));
  CHECK(euler_characteristic(k) == 0);
  CHECK(action_preserves_orientation(k));
  require_all_pass(verify_complex(k));
}

TEST_CASE("hexagon under reflection") {
  const auto k = samples::hexagon_reflection();
  CHECK(invariant_subcomplex(k).dims() == dims({4, 3}));
  CHECK(invariant_betti(k) == dims({1, 0}));
  CHECK(euler_characteristic(k) == 1);
  CHECK_FALSE(action_preserves_orientation(k));
  require_all_pass(verify_complex(k));
}

TEST_CASE("seven-vertex torus") {
  const auto k = samples::seven_vertex_torus();
  CHECK(k.count(1) == 21);
  CHECK(k.count(2) == 14);
  CHECK(invariant_subcomplex(k).dims() == dims({1, 3, 2}));
  CHECK(invariant_betti(k) == dims({1, 2, 1}));
  CHECK(euler_characteristic(k) == 0);
  CHECK(action_preserves_orientation(k));
  require_all_pass(verify_complex(k));
  const auto pairing = poincare_pairing(k, 1);
  CHECK(pairing.matrix.rows() == 2);
  CHECK(pairing.rank == 2);
  CHECK(poincare_pairing(k, 0).rank == 1);
}

TEST_CASE("antipodal octahedron") {
  const auto k = samples::antipodal_octahedron();
  CHECK(invariant_subcomplex(k).dims() == dims({3, 6, 4}));
  CHECK(invariant_betti(k) == dims({1, 0, 0}));
  CHECK(euler_characteristic(k) == 1);
  CHECK_FALSE(action_preserves_orientation(k));
  require_all_pass(verify_complex(k));
}

TEST_CASE("periodic line") {
  const auto k = samples::periodic_line();
  CHECK(k.is_periodic());
  CHECK(invariant_subcomplex(k).dims() == dims({2, 2}));
  CHECK(invariant_betti(k) == dims({1, 1}));
  CHECK(euler_characteristic(k) == 0);
  const Simplex far{Vertex(1, {3}), Vertex(0, {4})};
  CHECK(k.contains(far));
  CHECK(k.orbit_of(far).orbit == 1);
  CHECK_FALSE(k.contains(Simplex{Vertex(0, {0}), Vertex(0, {1})}));
  const auto [nf, shift] = k.normal_form(far);
  CHECK(nf == Simplex{Vertex(1, {0}), Vertex(0, {1})});
  CHECK(shift == GroupElement{3});
  require_all_pass(verify_complex(k));
}

TEST_CASE("a hexagon pairing H^0 with H^1") {
  const auto k = samples::hexagon_rotation();
  CHECK(poincare_pairing(k, 0).rank == 1);
  CHECK(poincare_pairing(k, 1).rank == 1);
}

TEST_CASE("invalid complexes are rejected with a path") {
  SimplicialGComplex::FiniteSpec s;
  s.vertex_count = 3;
  s.simplices = {samples::points(3), {{0, 1}, {1, 2}}, {{0, 1, 2}}};
  s.vertex_maps = {{0, 1, 2}};
  try {
    SimplicialGComplex::finite(samples::cyclic_group(1), s);
    FAIL("missing face accepted");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("space.simplices") != std::string::npos);
  }

  s.simplices = {samples::points(3), {{0, 1}, {1, 2}, {0, 2}}};
  s.vertex_maps = {{0, 1, 2}, {1, 0, 0}};
  CHECK_THROWS_AS(SimplicialGComplex::finite(samples::cyclic_group(2), s), ValidationError);

  s.vertex_maps = {{0, 1, 2}, {1, 2, 0}};
  CHECK_THROWS_AS(SimplicialGComplex::finite(samples::cyclic_group(2), s), ValidationError);

  s.vertex_maps = {{0, 1, 2}, {1, 0, 2}};
  s.metric = {{1, 2, 1}, {1, 1, 1}};
  CHECK_THROWS_AS(SimplicialGComplex::finite(samples::cyclic_group(2), s), ValidationError);
}

TEST_CASE("orientation needs a closed pseudomanifold") {
  SimplicialGComplex::FiniteSpec s;
  s.vertex_count = 3;
  s.simplices = {samples::points(3), {{0, 1}, {1, 2}}};
  s.vertex_maps = {{0, 1, 2}};
  const auto k = SimplicialGComplex::finite(samples::cyclic_group(1), s);
  CHECK_THROWS_AS(orientation(k), UnsupportedError);
  CHECK(orientation(samples::antipodal_octahedron()).size() == 8);
}
