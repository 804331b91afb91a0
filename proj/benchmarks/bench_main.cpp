#include <benchmark/benchmark.h>

#include "hq/cluster.hpp"
#include "hq/examples.hpp"
#include "hq/surface.hpp"
#include "hq/tracked.hpp"

using namespace hq;

static void BM_MutateMarkov(benchmark::State& state) {
  Quiver q = markov_quiver();
  auto gens = markov_homotopy_generators(q);
  TrackedQuiver t = init_tracked(q, HomotopyOracle::generated(q, gens[static_cast<std::size_t>(state.range(0))]));
  for (auto _ : state) benchmark::DoNotOptimize(mutate(t, 1));
}
BENCHMARK(BM_MutateMarkov)->DenseRange(0, 3);

static void BM_MatrixMutation(benchmark::State& state) {
  IntMatrix b = exchange_matrix(markov_quiver());
  for (auto _ : state) benchmark::DoNotOptimize(fz_mutate_matrix(b, 0));
}
BENCHMARK(BM_MatrixMutation);

static void BM_CoverMembership(benchmark::State& state) {
  Quiver tri = triple_two_cycle_quiver();
  HomotopyOracle h = HomotopyOracle::finite_cover(klein_four_cover());
  Walk w = power(tri, walk_from_labels(tri, {"f", "c", "a"}), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(h.membership(w));
}
BENCHMARK(BM_CoverMembership)->Arg(1)->Arg(8)->Arg(64);

static void BM_GeneratedMembership(benchmark::State& state) {
  Quiver tri = triple_two_cycle_quiver();
  HomotopyOracle h = HomotopyOracle::generated(tri, triple_two_cycle_relators(tri));
  Walk w = power(tri, walk_from_labels(tri, {"f", "c", "a"}), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(h.membership(w));
}
BENCHMARK(BM_GeneratedMembership)->Arg(1)->Arg(8)->Arg(64);

static void BM_OrbitMutate(benchmark::State& state) {
  Covering c = klein_four_cover();
  for (auto _ : state) benchmark::DoNotOptimize(orbit_mutate(c, 0));
}
BENCHMARK(BM_OrbitMutate);

static void BM_FlipGraph(benchmark::State& state) {
  TaggedTriangulation t = thrice_punctured_sphere();
  for (auto _ : state) benchmark::DoNotOptimize(flip_graph(t, 1000));
}
BENCHMARK(BM_FlipGraph);

static void BM_PolyGcd(benchmark::State& state) {
  int n = 3;
  MultiPoly x = MultiPoly::variable(n, 0), y = MultiPoly::variable(n, 1), z = MultiPoly::variable(n, 2);
  MultiPoly one = MultiPoly::constant(n, 1);
  MultiPoly g = pow(x + y + z + one, static_cast<int>(state.range(0)));
  MultiPoly a = g * (x * y + z), b = g * (y * z - x + one);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolyGcd)->Arg(2)->Arg(4);

static void BM_LaurentExploration(benchmark::State& state) {
  Quiver tri = triple_two_cycle_quiver();
  Seed s = principal_seed(init_tracked(tri, HomotopyOracle::finite_cover(klein_four_cover())));
  for (auto _ : state) benchmark::DoNotOptimize(explore_laurent(s, static_cast<int>(state.range(0)), true));
}
BENCHMARK(BM_LaurentExploration)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
