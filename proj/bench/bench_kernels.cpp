// Serial reference vs OpenMP kernels on sphere products, whose degree
// pieces grow like binomial coefficients.
//
//   ./build/bench/kirwan_bench --benchmark_filter=Rref

#include <benchmark/benchmark.h>

#include "kirwan/generators.hpp"
#include "kirwan/kirwan.hpp"

namespace {

using namespace kirwan;

// Evaluation matrix of the middle-degree basis of (S^2)^k at its lower half.
MatrixQ evaluation_matrix(std::size_t k) {
  std::vector<std::int64_t> w;
  for (std::size_t i = 0; i < k; ++i) w.push_back(static_cast<std::int64_t>(i % 3) + 1);
  const ManifoldData m = gen_sphere_product(w);
  const DegreeBasis b = degree_basis(m, 2 * static_cast<int>(k / 2));
  MatrixQ e = b.evaluation();
  // Mix columns so the matrix is dense and elimination has real work to do.
  MatrixQ mixed(e.rows(), e.cols());
  for (std::size_t i = 0; i < e.rows(); ++i)
    for (std::size_t j = 0; j < e.cols(); ++j)
      mixed.at(i, j) = e.at(i, j) + e.at(i, (j + 1) % e.cols());
  return mixed;
}

void BM_RrefParallel(benchmark::State& state) {
  const MatrixQ m = evaluation_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
  state.counters["rows"] = static_cast<double>(m.rows());
  state.counters["cols"] = static_cast<double>(m.cols());
}

void BM_RrefSerial(benchmark::State& state) {
  const MatrixQ m = evaluation_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::rref(m));
  state.counters["rows"] = static_cast<double>(m.rows());
  state.counters["cols"] = static_cast<double>(m.cols());
}

ManifoldData sweep_manifold(std::size_t k) {
  std::vector<std::int64_t> w;
  for (std::size_t i = 0; i < k; ++i) w.push_back(static_cast<std::int64_t>(2 * i + 1));
  return gen_sphere_product(w);
}

void BM_SweepParallel(benchmark::State& state) {
  const ManifoldData m = sweep_manifold(static_cast<std::size_t>(state.range(0)));
  const CutLevel cut(m, Rational(1, 2));
  const auto degrees = sweep_degrees(m);
  for (auto _ : state) benchmark::DoNotOptimize(sweep_kernels(m, cut, degrees));
}

void BM_SweepSerial(benchmark::State& state) {
  const ManifoldData m = sweep_manifold(static_cast<std::size_t>(state.range(0)));
  const CutLevel cut(m, Rational(1, 2));
  const auto degrees = sweep_degrees(m);
  for (auto _ : state) benchmark::DoNotOptimize(reference::sweep_kernels(m, cut, degrees));
}

}  // namespace

BENCHMARK(BM_RrefParallel)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefSerial)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
