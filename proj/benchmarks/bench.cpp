#include <benchmark/benchmark.h>

#include <variant>

#include "npc/cohomology.hpp"
#include "npc/monomial.hpp"
#include "npc/newton.hpp"
#include "npc/principalize.hpp"
#include "npc/toric.hpp"

namespace {

npc::MonomialIdeal m2_example() {
  return npc::product(npc::power(npc::MonomialIdeal::maximal(3), 2), npc::parse_ideal("x, y, z^2"));
}

void BM_PrincipalizePlane(benchmark::State& state) {
  const auto a = static_cast<int>(state.range(0));
  const auto i = npc::MonomialIdeal::pure_powers({a, a + 1});
  for (auto _ : state) benchmark::DoNotOptimize(npc::principalize(i));
}
BENCHMARK(BM_PrincipalizePlane)->Arg(3)->Arg(8)->Arg(21);

void BM_PrincipalizeSpatial(benchmark::State& state) {
  const auto i = m2_example();
  for (auto _ : state) benchmark::DoNotOptimize(npc::principalize(i));
}
BENCHMARK(BM_PrincipalizeSpatial);

void BM_IntegralClosure(benchmark::State& state) {
  const auto e = static_cast<int>(state.range(0));
  const auto i = npc::MonomialIdeal::pure_powers({e, e + 1, e + 2});
  for (auto _ : state) benchmark::DoNotOptimize(npc::integral_closure(i));
}
BENCHMARK(BM_IntegralClosure)->Arg(3)->Arg(6)->Arg(10);

void BM_CechDims(benchmark::State& state) {
  const auto tree = std::get<npc::PrincipalizationTree>(npc::principalize(m2_example()));
  const auto div = npc::ray_divisor(tree, tree.valuations());
  npc::CohomOptions opts;
  opts.window_cap = 32;
  for (auto _ : state) benchmark::DoNotOptimize(npc::cech_dims(tree.fan(), div, opts));
}
BENCHMARK(BM_CechDims)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
