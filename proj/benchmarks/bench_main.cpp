#include <benchmark/benchmark.h>

#include <cstdint>

#include "normtori/kummer_local.hpp"
#include "normtori/laurent_series.hpp"
#include "normtori/monomial.hpp"
#include "normtori/obstruction.hpp"
#include "normtori/patch_graph.hpp"
#include "normtori/r_equivalence.hpp"
#include "normtori/scenarios.hpp"
#include "normtori/smith.hpp"

using namespace normtori;

namespace {

// A cycle of k points and k components, each point on two neighbouring components.
ModelDescription cycle_model(int k) {
  ModelDescription m;
  for (int i = 0; i < k; ++i) m.components.push_back("X" + std::to_string(i));
  for (int i = 0; i < k; ++i) m.points.push_back({"P" + std::to_string(i), {m.components[i], m.components[(i + 1) % k]}});
  return m;
}

}  // namespace

static void BM_SmithCycle(benchmark::State& state) {
  const PatchGraph g = build_graph(cycle_model(static_cast<int>(state.range(0))));
  const IntMatrix phi = phi_matrix(make_problem(g, 4));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(phi));
}
BENCHMARK(BM_SmithCycle)->Arg(4)->Arg(16)->Arg(64);

static void BM_InImageTriangle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_triangle(2, 5));
}
BENCHMARK(BM_InImageTriangle);

static void BM_HenselRoot(benchmark::State& state) {
  const int prec = static_cast<int>(state.range(0));
  const LaurentSeries z = parse_series("1 + t + 3*t^2 + 5*t^5", 13, prec);
  for (auto _ : state) benchmark::DoNotOptimize(hensel_nth_root(z, 3));
}
BENCHMARK(BM_HenselRoot)->Arg(8)->Arg(16)->Arg(64);

static void BM_NormCyclic(benchmark::State& state) {
  const PrimeField f(13);
  const CyclicKummerLocal ext(f, LaurentSeries::monomial(13, 2, 1, 16), static_cast<std::uint32_t>(state.range(0)));
  ExtElement x = ext.one();
  for (std::uint32_t i = 0; i < ext.degree(); ++i) x.coords[i] = parse_series("1 + 2*t + t^3", 13, 16).shifted(static_cast<int>(i));
  for (auto _ : state) benchmark::DoNotOptimize(norm_cyclic(ext, x));
}
BENCHMARK(BM_NormCyclic)->Arg(2)->Arg(3)->Arg(4)->Arg(6);

static void BM_RTrivialDecompose(benchmark::State& state) {
  const PrimeField f(13);
  const CyclicKummerLocal ext(f, LaurentSeries::monomial(13, 1, 1, 12), 4);
  const ExtElement b = ext.add(ext.one(), ext.add(ext.y_power(1), ext.y_power(3)));
  const ExtElement x = ext.mul(ext.sigma(b, 1), ext.inverse(b));
  const TowerDescriptor tower = tower_of(ext);
  for (auto _ : state) benchmark::DoNotOptimize(r_trivial_decompose(ext, x, tower));
}
BENCHMARK(BM_RTrivialDecompose);

static void BM_KummerDecompose(benchmark::State& state) {
  const PrimeField f(13);
  const MonomialKummer K(f, 4, {{2, 1, 0}, {1, 2, 1}, {5, 0, 0}});
  for (auto _ : state) benchmark::DoNotOptimize(kummer_decompose(K));
}
BENCHMARK(BM_KummerDecompose);

static void BM_NormDescent(benchmark::State& state) {
  const PrimeField f(13);
  const MonomialKummer K(f, 3, {{1, 1, 0}, {1, 0, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(norm_descent_2dim(K, {2, 3, 3}));
}
BENCHMARK(BM_NormDescent);
BENCHMARK_MAIN();
