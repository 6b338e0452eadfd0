// OpenMP kernels against their serial references.

#include "waring/generators.hpp"
#include "waring/hilbert.hpp"
#include "waring/kruskal.hpp"
#include "waring/linalg.hpp"
#include "waring/terracini.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace waring;

Matrix dense(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-9, 9);
  Matrix m(n, n + 5);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = dist(rng);
  return m;
}

void BM_Rank(benchmark::State& state) {
  const Matrix m = dense(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m).rank);
}

void BM_RankSerial(benchmark::State& state) {
  const Matrix m = dense(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank_serial(m).rank);
}

void BM_Terracini(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const Instance inst = gen_instance(r > 11 ? 1 : 0, r, Position::general(), 7);
  for (auto _ : state) benchmark::DoNotOptimize(terracini_dimension(inst).q);
}

void BM_TerraciniSerial(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const Instance inst = gen_instance(r > 11 ? 1 : 0, r, Position::general(), 7);
  for (auto _ : state) benchmark::DoNotOptimize(terracini_dimension_serial(inst).q);
}

void BM_Kruskal(benchmark::State& state) {
  const PointSet z(gen_instance(0, static_cast<std::size_t>(state.range(0)), Position::general(), 11).points);
  for (auto _ : state) benchmark::DoNotOptimize(kruskal_rank_d(z, 3).k);
}

void BM_KruskalSerial(benchmark::State& state) {
  const PointSet z(gen_instance(0, static_cast<std::size_t>(state.range(0)), Position::general(), 11).points);
  for (auto _ : state) benchmark::DoNotOptimize(kruskal_rank_d_serial(z, 3).k);
}

}  // namespace

BENCHMARK(BM_Rank)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankSerial)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Terracini)->Arg(8)->Arg(11)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TerraciniSerial)->Arg(8)->Arg(11)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Kruskal)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KruskalSerial)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
