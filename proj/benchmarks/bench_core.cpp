#include "jtvo/boson.hpp"
#include "jtvo/matrix.hpp"
#include "jtvo/schur.hpp"
#include "jtvo/suites.hpp"
#include "jtvo/vertex.hpp"

#include <benchmark/benchmark.h>

using namespace jtvo;

static void BM_DetJacobiTrudi(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto family = GeneratorFamily::lie_character();
  const PolyMatrix m = PolyMatrix::generate(n, n, [&](std::size_t i, std::size_t j) {
    return family->h(static_cast<int>(j), static_cast<int>(n - i) - static_cast<int>(i));
  });
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_DetJacobiTrudi)->DenseRange(4, 8, 2);

// Fresh engine per iteration so the memo caches do not hide the work.
static void BM_SchurWeight(benchmark::State& state) {
  const int weight = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const SchurEngine engine(GeneratorFamily::classical());
    for (const Partition& lambda : partitions_of(weight)) benchmark::DoNotOptimize(engine.schur(lambda));
  }
}
BENCHMARK(BM_SchurWeight)->DenseRange(4, 8, 2);

static void BM_CliffordSweep(benchmark::State& state) {
  const auto family = make_family("shifted");
  for (auto _ : state) benchmark::DoNotOptimize(clifford_suite(family, {.max_weight = 4, .range = 1, .kmax = 4}));
}
BENCHMARK(BM_CliffordSweep)->Unit(benchmark::kMillisecond);

static void BM_SkewExpansion(benchmark::State& state) {
  for (auto _ : state) {
    const SchurEngine engine(GeneratorFamily::linear_recurrence({1, 1}));
    const BosonFock fock(engine);
    for (const Partition& lambda : partitions_up_to(3))
      for (int s = -3; s <= 4; ++s) benchmark::DoNotOptimize(verify_prop42(fock, s + 1, 0, lambda));
  }
}
BENCHMARK(BM_SkewExpansion)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
