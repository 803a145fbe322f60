// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "equihodge/complex.hpp"
#include "equihodge/cyclic.hpp"
#include "equihodge/io.hpp"
#include "equihodge/kernels.hpp"

using namespace equihodge;

namespace {

Execution exec_of(const benchmark::State& state) { return state.range(1) ? Execution::parallel : Execution::serial; }

Matrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(num(rng), den(rng));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j).canonicalize();
  return m;
}

std::shared_ptr<const GradedAlgebra> torus_cochains() {
  static const auto base = [] {
    const Problem p = load_problem(std::string(EQUIHODGE_FIXTURE_DIR) + "/fix3.json");
    return std::make_shared<const GradedAlgebra>(cochain_algebra(*p.complex));
  }();
  return base;
}

const TotalComplex& torus_total() {
  static const TotalComplex total = assemble_total_complex(torus_cochains(), 3);
  return total;
}

void BM_matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::matmul(a, b, exec_of(state)));
}

void BM_sparse_rank(benchmark::State& state) {
  const auto& columns = torus_total().differential[static_cast<std::size_t>(state.range(0))].columns;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sparse_rank(columns, exec_of(state)));
}

void BM_modular_rank(benchmark::State& state) {
  const auto& columns = torus_total().differential[static_cast<std::size_t>(state.range(0))].columns;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::modular_rank(columns));
}

void BM_total_complex(benchmark::State& state) {
  const auto base = torus_cochains();
  for (auto _ : state)
    benchmark::DoNotOptimize(assemble_total_complex(base, static_cast<std::size_t>(state.range(0)), exec_of(state)));
}

}  // namespace

BENCHMARK(BM_matmul)->ArgsProduct({{16, 48}, {0, 1}})->ArgNames({"n", "omp"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sparse_rank)->ArgsProduct({{2, 3}, {0, 1}})->ArgNames({"degree", "omp"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_modular_rank)->Arg(2)->Arg(3)->ArgName("degree")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_total_complex)->ArgsProduct({{2, 3}, {0, 1}})->ArgNames({"degree", "omp"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
