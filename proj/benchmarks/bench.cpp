#include <benchmark/benchmark.h>

#include "symbreak/asiup.hpp"
#include "symbreak/dynlab.hpp"
#include "symbreak/reduction.hpp"
#include "symbreak/torusmaps.hpp"

using namespace symbreak;

static void BM_CoupledStepExact(benchmark::State& st) {
  const std::size_t n = st.range(0);
  const auto rho = Distribution::uniform(n);
  RatVec u;
  for (std::size_t i = 0; i < n; ++i) u.push_back(rat(2 * i + 1, 2 * n + 3));
  for (auto _ : st) benchmark::DoNotOptimize(coupled_step(u, rho, rat(7, 20)));
}
BENCHMARK(BM_CoupledStepExact)->Arg(3)->Arg(6)->Arg(12);

static void BM_CoupledStepFloat(benchmark::State& st) {
  const std::size_t n = st.range(0);
  const auto rho = Distribution::uniform(n).as<double>();
  std::vector<double> u;
  for (std::size_t i = 0; i < n; ++i) u.push_back((2.0 * i + 1) / (2.0 * n + 3));
  for (auto _ : st) {
    u = coupled_step<double>(u, rho, 0.35);
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(BM_CoupledStepFloat)->Arg(3)->Arg(6)->Arg(12);

static void BM_BaseMapExact(benchmark::State& st) {
  const std::size_t d = st.range(0);
  const auto rho = Distribution::uniform(d + 1);
  RatVec x(d, rat(1, static_cast<long>(2 * d + 1)));
  for (auto _ : st) benchmark::DoNotOptimize(base_map(x, rho, rat(1, 4)));
}
BENCHMARK(BM_BaseMapExact)->Arg(2)->Arg(3)->Arg(5);

static void BM_IntersectVertices(benchmark::State& st) {
  const std::size_t d = st.range(0);
  auto a = atom_polytope({AtomId::Kind::A, 0}, d);
  auto b = atom_polytope({AtomId::Kind::B, 0}, d);
  for (auto _ : st) benchmark::DoNotOptimize(intersect_vertices(a, b));
}
BENCHMARK(BM_IntersectVertices)->Arg(2)->Arg(3)->Arg(4);

static void BM_Certify(benchmark::State& st) {
  PointFrame f = select_points(st.range(0), st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(certify(f, rat(101, 100)));
}
BENCHMARK(BM_Certify)->Args({3, 1})->Args({4, 1})->Args({5, 2})->Unit(benchmark::kMillisecond);

static void BM_Classify(benchmark::State& st) {
  Orbit o = run_torus_orbit(Distribution::uniform(3), rat(43, 100), 100500, 500, 1);
  for (auto _ : st) benchmark::DoNotOptimize(classify_symmetry(o));
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

static void BM_TorusOrbit(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(run_torus_orbit(Distribution::uniform(3), rat(7, 20), 100500, 500, 1));
}
BENCHMARK(BM_TorusOrbit)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
