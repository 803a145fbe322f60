#include "doctest.h"

#include "equihodge/errors.hpp"
#include "equihodge/hodge.hpp"
#include "sample_complexes.hpp"

using namespace equihodge;

namespace {

const Simplex v0{Vertex(0, {0})}, v1{Vertex(1, {0})}, v2{Vertex(0, {1})};
const Simplex e01{Vertex(0, {0}), Vertex(1, {0})}, e12{Vertex(1, {0}), Vertex(0, {1})};

Cutoff minimal_window() {
  Cutoff f;
  for (const auto& s : {v0, v1, e01, e12}) f.values[s] = 1;
  return f;
}

void require_all_pass(const Report& r) {
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.status != CheckStatus::fail);
  }
}

std::vector<std::size_t> dims(std::initializer_list<std::size_t> v) { return v; }

}  // namespace

TEST_CASE("weight on the periodic line") {
  const auto k = samples::periodic_line();
  const Cutoff f = minimal_window();
  for (const auto& s : {v0, v1, v2, e01, e12}) CHECK(weight_squared(k, f, s) == 1);
  CHECK(weight_squared(k, f, Simplex{Vertex(1, {-4})}) == 1);

  Cutoff doubled = f;
  doubled.values[v2] = 1;
  CHECK(weight_squared(k, doubled, v0) == 2);
  CHECK(weight_squared(k, doubled, v1) == 1);
}

TEST_CASE("projection on the periodic line by hand") {
  const auto k = samples::periodic_line();
  {
    const Projection p = projection(k, minimal_window(), 0);
    REQUIRE(p.support == std::vector<Simplex>{v0, v1});
    CHECK(p.matrix == Matrix::identity(2));
  }
  Cutoff doubled = minimal_window();
  doubled.values[v2] = 1;
  const Projection p = projection(k, doubled, 0);
  REQUIRE(p.support == std::vector<Simplex>{v0, v1, v2});
  const Vector mu{1, 0, 0};
  CHECK(p.matrix * mu == Vector{Rational(1, 2), 0, Rational(1, 2)});
  CHECK(p.matrix * (p.matrix * mu) == p.matrix * mu);
}

TEST_CASE("covering condition") {
  const auto k = samples::periodic_line();
  Cutoff f = minimal_window();
  f.values.erase(e12);
  CHECK_THROWS_AS(build_window_package(k, f), ValidationError);
  f = minimal_window();
  f.values[v1] = Rational(1, 2);
  CHECK_NOTHROW(build_window_package(k, f));
  CHECK_THROWS_AS(build_window_package(k, f, true), ValidationError);
  f.values[v1] = -1;
  CHECK_THROWS_AS(build_window_package(k, f), ValidationError);
  CHECK_THROWS_AS(build_window_package(k, Cutoff::constant(1)), ValidationError);
}

TEST_CASE("window package on the periodic line") {
  const auto k = samples::periodic_line();
  const auto pkg = build_window_package(k, minimal_window());
  CHECK(pkg.sub.dims() == dims({2, 2}));
  CHECK(pkg.harmonic_dims() == dims({1, 1}));
  // s = 1 on even vertices, 0 on odd ones: d_f(f s) is nonzero on both edge orbits.
  const Vector ds = pkg.d[0] * Vector{1, 0};
  CHECK(sgn(ds[0]) != 0);
  CHECK(sgn(ds[1]) != 0);
  CHECK(is_zero(pkg.d[0] * Vector{1, 1}));
  require_all_pass(verify_hodge(k, minimal_window()));
}

TEST_CASE("a window with unequal cutoff values") {
  const auto k = samples::periodic_line();
  Cutoff f = minimal_window();
  f.values[v1] = Rational(1, 2);
  f.values[v2] = Rational(2, 3);
  f.values[Simplex{Vertex(0, {1}), Vertex(1, {1})}] = Rational(1, 3);
  const Report r = verify_hodge(k, f);
  require_all_pass(r);
  CHECK(*r.find_table("harmonic_dims") == std::vector<long long>{1, 1});
}

TEST_CASE("constant cutoff on finite complexes") {
  const auto hexagon = samples::hexagon_rotation();
  CHECK(weight_squared(hexagon, Cutoff::constant(1), hexagon.simplex(0, 0)) == 3);
  const auto pkg = build_window_package(hexagon, Cutoff::constant(1));
  CHECK(pkg.harmonic_dims() == dims({1, 1}));
  require_all_pass(verify_hodge(hexagon, Cutoff::constant(1)));

  const auto torus = samples::seven_vertex_torus();
  CHECK(build_window_package(torus, Cutoff::constant(1)).harmonic_dims() == dims({1, 2, 1}));
  require_all_pass(verify_hodge(torus, Cutoff::constant(1)));

  const auto octahedron = samples::antipodal_octahedron();
  CHECK(build_window_package(octahedron, Cutoff::constant(1)).harmonic_dims() == dims({1, 0, 0}));
  require_all_pass(verify_hodge(octahedron, Cutoff::constant(1)));

  require_all_pass(verify_hodge(samples::hexagon_reflection(), Cutoff::constant(1)));
}

TEST_CASE("decomposition fixed points") {
  const auto k = samples::seven_vertex_torus();
  const auto pkg = build_window_package(k, Cutoff::constant(1));
  const Vector h = pkg.harmonic[1].column(0);
  const HodgeParts parts = hodge_decompose(pkg, 1, h);
  CHECK(parts.harmonic == h);
  CHECK(is_zero(parts.image));
  const Vector u{1, 2, 0};
  const Vector lap_u = pkg.laplacian[1] * u;
  CHECK(is_zero(hodge_decompose(pkg, 1, lap_u).harmonic));
  CHECK(is_zero(pkg.green[1] * h));
}

TEST_CASE("harmonic representatives") {
  const auto k = samples::hexagon_rotation();
  const auto pkg = build_window_package(k, Cutoff::constant(1));
  // The total-angle cocycle: 1 on both edge orbits.
  CHECK_FALSE(is_zero(harmonic_representative(pkg, 1, Vector{1, 1})));
  // Exact cocycles have zero representative.
  CHECK(is_zero(harmonic_representative(pkg, 1, pkg.d[0] * Vector{1, 0})));
  CHECK_THROWS_AS(harmonic_representative(pkg, 0, Vector{1, 0}), MathError);
}

TEST_CASE("weighted torus metric") {
  const auto torus = samples::seven_vertex_torus();
  Cutoff f = Cutoff::constant(Rational(1, 2));
  f.values[torus.simplex(0, 3)] = 1;
  f.values[torus.simplex(1, 5)] = 0;
  require_all_pass(verify_hodge(torus, f));
}
