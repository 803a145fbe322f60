#include "doctest.h"

#include <memory>

#include "equihodge/errors.hpp"
#include "equihodge/graded_algebra.hpp"
#include "equihodge/kernels.hpp"
#include "equihodge/matrix.hpp"
#include "equihodge/rational.hpp"
#include "equihodge/sparse.hpp"

using namespace equihodge;

namespace {

std::shared_ptr<const GroupModel> cyclic(int n) { return std::make_shared<GroupModel>(GroupModel::cyclic(n)); }

// Point maps of Z/n acting on n points by x -> x + k.
std::vector<std::vector<int>> rotations(int n) {
  std::vector<std::vector<int>> maps;
  for (int k = 0; k < n; ++k) {
    std::vector<int> m;
    for (int x = 0; x < n; ++x) m.push_back((x + k) % n);
    maps.push_back(m);
  }
  return maps;
}

}  // namespace

TEST_CASE("rationals parse in p/q form only") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(to_string(Rational(-2, 4)) == "-1/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("dense linear algebra is exact") {
  const Matrix a{{1, 2}, {3, 4}};
  const Matrix inv = inverse(a);
  CHECK(a * inv == Matrix::identity(2));
  CHECK(inv(0, 0) == Rational(-2));
  CHECK(inv(1, 0) == Rational(3, 2));
  CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), MathError);

  const Matrix m{{1, 1, 0}, {0, 1, 1}};
  const Matrix k = nullspace(m);
  REQUIRE(k.cols() == 1);
  CHECK((m * k).is_zero());
  CHECK(rank(m) == 2);
  CHECK(same_column_space(column_space(m.transpose()), m.transpose()));
  CHECK_THROWS_AS(solve(Matrix{{1, 0}, {1, 0}}, Matrix{{1}, {2}}), MathError);
}

TEST_CASE("sparse helpers keep vectors sorted and reduced") {
  const SparseVec v = compress({{3, Rational(1)}, {1, Rational(2)}, {3, Rational(-1)}});
  REQUIRE(v.size() == 1);
  CHECK(v[0].first == 1);
  const SparseVec w = axpy(v, Rational(-1), v);
  CHECK(w.empty());
  CHECK(find(v, 1) != nullptr);
  CHECK(find(v, 2) == nullptr);
}

TEST_CASE("serial and parallel kernels agree exactly") {
  std::vector<SparseVec> rows;
  for (std::uint32_t r = 0; r < 40; ++r) {
    std::vector<std::pair<std::uint32_t, Rational>> e;
    for (std::uint32_t c = 0; c < 30; ++c)
      if ((r * 7 + c * 3) % 5 == 0) e.emplace_back(c, Rational(static_cast<long>(r % 4) - 1, 1 + c % 3));
    rows.push_back(compress(e));
  }
  const std::size_t serial = kernels::serial::sparse_rank(rows);
  CHECK(serial == kernels::omp::sparse_rank(rows));
  Matrix dense(rows.size(), 30);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) dense(r, c) = v;
  CHECK(serial == rank(dense));

  const Matrix a = dense.transpose();
  CHECK(kernels::serial::matmul(a, dense) == kernels::omp::matmul(a, dense));
  auto fn = [](std::size_t i) { return SparseVec{{static_cast<std::uint32_t>(i), Rational(static_cast<long>(i))}}; };
  CHECK(kernels::serial::map_indices(50, fn) == kernels::omp::map_indices(50, fn));
}

TEST_CASE("modular ranks bound and certify") {
  // 2^61 - 1 vanishes mod the working prime.
  const Rational big(mpz_class("2305843009213693951"));
  const std::vector<SparseVec> rows{{{0, big}}, {{1, Rational(1, 3)}, {2, Rational(2, 5)}}};
  CHECK(kernels::modular_rank(rows) == 1);
  CHECK(kernels::serial::sparse_rank(rows) == 2);

  SparseMatrix lone;
  lone.rows = 2, lone.cols = 3, lone.columns = rows;
  lone.columns.push_back({});
  CHECK(kernels::complex_ranks({lone}) == std::vector<std::size_t>{2});

  // Coboundaries of a hexagon, vertices -> edges, then edges -> 0.
  SparseMatrix d0, d1;
  d0.rows = 6, d0.cols = 6;
  for (std::uint32_t v = 0; v < 6; ++v)
    d0.columns.push_back(compress({{v, Rational(-1)}, {(v + 5) % 6, Rational(1)}}));
  d1.rows = 0, d1.cols = 6, d1.columns.assign(6, {});
  CHECK(kernels::complex_ranks({d0, d1}) == std::vector<std::size_t>{5, 0});
}

TEST_CASE("group models") {
  const GroupModel z3 = GroupModel::cyclic(3);
  CHECK(z3.order() == 3);
  CHECK(z3.multiply({1}, {2}) == GroupElement{0});
  CHECK(z3.inverse({1}) == GroupElement{2});
  CHECK(z3.modular_weight({2}) == 1);
  CHECK_THROWS_AS(GroupModel::finite({{0, 1}, {1, 1}}), ValidationError);
  CHECK_THROWS_AS(GroupModel::finite({{0, 1}, {1, 0}}, {Rational(1), Rational(2)}), ValidationError);

  const GroupModel z = GroupModel::free_abelian(1, {Rational(2)});
  CHECK(z.modular_weight({3}) == 8);
  for (const auto& g : z.window(2)) CHECK(z.modular_weight(g) * z.modular_weight(z.inverse(g)) == 1);
  CHECK_FALSE(z.is_unimodular());
  CHECK(GroupModel::free_abelian(2).window(1).size() == 9);
}

TEST_CASE("function algebra of Z/2 swapping two points") {
  const GradedAlgebra b = build_function_algebra(cyclic(2), rotations(2), {"a", "b"});
  CHECK(b.dim() == 2);
  CHECK(b.dim(0) == 2);
  const Matrix rho = b.action_matrix({1});
  CHECK(rho == Matrix{{0, 1}, {1, 0}});
  CHECK(verify_cdga_axioms(b).passed());

  const auto p = average_projector(b);
  REQUIRE(p.size() == 1);
  CHECK(rank(p[0]) == 1);
  CHECK(p[0] * p[0] == p[0]);
  CHECK(p[0] * Vector{Rational(1), Rational(0)} == Vector{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("function algebra edge cases") {
  const GradedAlgebra trivial = build_function_algebra(cyclic(1), {{0, 1, 2}});
  CHECK(trivial.action_matrix({0}) == Matrix::identity(3));
  CHECK(average_projector(trivial)[0] == Matrix::identity(3));

  const GradedAlgebra three = build_function_algebra(cyclic(3), rotations(3));
  const Matrix g = three.action_matrix({1});
  CHECK(g * g * g == Matrix::identity(3));
  const auto p = average_projector(three)[0];
  CHECK(rank(p) == 1);
  CHECK(p * p == p);
  for (std::size_t k = 0; k < 3; ++k) CHECK(three.action_matrix({static_cast<std::int64_t>(k)}) * p == p);

  // Z/3 acting through maps that are not a group action.
  CHECK_THROWS_AS(build_function_algebra(cyclic(3), {{0, 1, 2}, {1, 0, 2}, {0, 1, 2}}), ValidationError);
  CHECK_THROWS_AS(build_function_algebra(cyclic(2), {{0, 1}, {0, 0}}), ValidationError);
  CHECK_THROWS_AS(build_function_algebra(cyclic(2), {{0, 1}}), ValidationError);
  CHECK_THROWS_AS(average_projector(build_function_algebra(
                      std::make_shared<GroupModel>(GroupModel::free_abelian(1)), {{0}})),
                  UnsupportedError);
}

TEST_CASE("exterior algebra signs") {
  const GradedAlgebra l2 = build_exterior_algebra(cyclic(1), 2, {{0, 1}});
  const Vector e1 = l2.basis_vector(1), e2 = l2.basis_vector(2);
  CHECK(l2.multiply(e1, e2) == scale(Rational(-1), l2.multiply(e2, e1)));
  CHECK_FALSE(is_zero(l2.multiply(e1, e2)));

  const GradedAlgebra swap = build_exterior_algebra(cyclic(2), 2, {{0, 1}, {1, 0}});
  const Vector top = swap.basis_vector(3);
  CHECK(swap.act({1}, top) == scale(Rational(-1), top));
  CHECK(swap.act({1}, swap.basis_vector(1)) == swap.basis_vector(2));

  const GradedAlgebra l1 = build_exterior_algebra(cyclic(1), 1, {{0}});
  CHECK(is_zero(l1.multiply(l1.basis_vector(1), l1.basis_vector(1))));

  const GradedAlgebra l3 = build_exterior_algebra(cyclic(3), 3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(l3.dim() == 8);
  CHECK(l3.dim(1) == 3);
  CHECK(l3.basis_name(7) == "e1e2e3");
  CHECK(verify_cdga_axioms(l3).passed());
  const auto p = average_projector(l3);
  for (const auto& block : p) CHECK(block * block == block);
  CHECK(rank(p[1]) == 1);
  CHECK(rank(p[3]) == 1);  // a 3-cycle is even

  CHECK_THROWS_AS(build_exterior_algebra(cyclic(2), 2, {{0, 1}, {0, 0}}), ValidationError);
}

TEST_CASE("graded commutativity holds on every basis pair") {
  const GradedAlgebra l3 = build_exterior_algebra(cyclic(3), 3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  for (std::size_t i = 0; i < l3.dim(); ++i)
    for (std::size_t j = 0; j < l3.dim(); ++j) {
      const int sign = (l3.degree_of(i) * l3.degree_of(j)) % 2 ? -1 : 1;
      CHECK(l3.multiply(l3.basis_vector(i), l3.basis_vector(j)) ==
            scale(Rational(sign), l3.multiply(l3.basis_vector(j), l3.basis_vector(i))));
    }
}

TEST_CASE("cdga checker names the violated associativity triple") {
  GradedAlgebra::Data data;
  data.dims = {2};
  data.basis_names = {"u", "v"};
  // The group algebra of Z/2: u is the unit and v*v = u.
  std::vector<SparseVec> product(4);
  product[0] = {{0, Rational(1)}};
  product[1] = {{1, Rational(1)}};
  product[2] = {{1, Rational(1)}};
  product[3] = {{0, Rational(1)}};
  data.product = product;
  data.unit = Vector{Rational(1), Rational(0)};
  data.action = {Matrix::identity(2)};
  CHECK(verify_cdga_axioms(GradedAlgebra(cyclic(1), data)).passed());

  // u*v = 2v: (u*u)*v = 2v but u*(u*v) = 4v.
  product[1] = {{1, Rational(2)}};
  data.product = product;
  const Report r = verify_cdga_axioms(GradedAlgebra(cyclic(1), data));
  REQUIRE(r.find("product.associative") != nullptr);
  CHECK(r.find("product.associative")->status == CheckStatus::fail);
  CHECK(r.find("product.associative")->detail.find('(') != std::string::npos);
}

TEST_CASE("cdga checker covers differential and action") {
  GradedAlgebra::Data data;
  data.dims = {1, 1};
  data.basis_names = {"1", "x"};
  Matrix d(2, 2);
  d(1, 0) = 1;  // d(1) = x breaks d(1*1) = 2 d(1)
  data.differential = d;
  std::vector<SparseVec> product(4);
  product[0] = {{0, Rational(1)}};
  product[1] = {{1, Rational(1)}};
  product[2] = {{1, Rational(1)}};
  data.product = product;
  data.unit = Vector{Rational(1), Rational(0)};
  data.action = {Matrix::identity(2), Matrix{{1, 0}, {0, -1}}};
  const Report r = verify_cdga_axioms(GradedAlgebra(cyclic(2), data));
  CHECK(r.find("differential.square-zero")->status == CheckStatus::pass);
  CHECK(r.find("differential.leibniz")->status == CheckStatus::fail);
  CHECK(r.find("action.commutes-with-d")->status == CheckStatus::fail);
  CHECK(r.find("action.homomorphism")->status == CheckStatus::pass);

  data.action = {Matrix::identity(2), Matrix{{1, 0}, {0, 2}}};
  data.differential.reset();
  const Report r2 = verify_cdga_axioms(GradedAlgebra(cyclic(2), data));
  CHECK(r2.find("action.homomorphism")->status == CheckStatus::fail);

  data.action = {Matrix::identity(2), Matrix{{0, 1}, {1, 0}}};
  CHECK_THROWS_AS(GradedAlgebra(cyclic(2), data), ValidationError);
}
