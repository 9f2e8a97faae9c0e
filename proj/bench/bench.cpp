// serial reference vs OpenMP kernels; run with OMP_NUM_THREADS to vary threads
#include <benchmark/benchmark.h>

#include "forklat/congruence.hpp"
#include "forklat/generator.hpp"
#include "forklat/verify.hpp"

using namespace forklat;

namespace {

Lattice sample(std::size_t cap) {
  // largest of a handful of seeds under the cap
  Lattice best = grid(2, 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = random_sps(seed, {5, 20, cap});
    if (g.lattice.size() > best.size()) best = std::move(g.lattice);
  }
  return best;
}

void principal_serial(benchmark::State& st) {
  auto const L = sample(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(principal_table_serial(L));
  st.counters["elements"] = static_cast<double>(L.size());
}

void principal_parallel(benchmark::State& st) {
  auto const L = sample(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(principal_table(L));
  st.counters["elements"] = static_cast<double>(L.size());
}

void corpus(benchmark::State& st, bool parallel) {
  for (auto _ : st)
    benchmark::DoNotOptimize(verify_corpus(0, 16, default_corpus_params(), parallel));
}

}  // namespace

BENCHMARK(principal_serial)->Arg(30)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(principal_parallel)->Arg(30)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(corpus, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(corpus, parallel, true)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
