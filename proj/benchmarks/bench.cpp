#include <benchmark/benchmark.h>

#include <numeric>

#include "hypermod/matroid.hpp"
#include "hypermod/metrics.hpp"
#include "hypermod/modulus.hpp"

namespace {

using namespace hypermod;

// Wheel-like hypergraph: hub plus a cycle, with one triple edge per spoke.
Hypergraph wheel(int n) {
  std::vector<std::string> names{"hub"};
  for (int i = 0; i < n; ++i) names.push_back("r" + std::to_string(i));
  std::vector<std::pair<std::string, std::vector<std::string>>> edges;
  for (int i = 0; i < n; ++i) {
    std::string a = "r" + std::to_string(i);
    std::string b = "r" + std::to_string((i + 1) % n);
    edges.emplace_back("c" + std::to_string(i), std::vector<std::string>{a, b});
    edges.emplace_back("s" + std::to_string(i), std::vector<std::string>{"hub", a, b});
  }
  return Hypergraph::make(names, edges);
}

void bm_strength(benchmark::State& state) {
  Hypergraph h = wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(strength(h).value);
}
BENCHMARK(bm_strength)->Arg(5)->Arg(7)->Arg(9);

void bm_rank(benchmark::State& state) {
  Hypergraph h = wheel(static_cast<int>(state.range(0)));
  std::vector<int> all(h.edge_count());
  std::iota(all.begin(), all.end(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(rank(h, all));
}
BENCHMARK(bm_rank)->Arg(5)->Arg(7)->Arg(9);

void bm_mod2_multitree(benchmark::State& state) {
  Hypergraph h = wheel(static_cast<int>(state.range(0)));
  ObjectFamily fam = multitree_family(h);
  std::vector<Rational> w(h.edge_count(), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(mod2_mnp(fam, w, 1e-9).value);
}
BENCHMARK(bm_mod2_multitree)->Arg(5)->Arg(7)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
