#include <benchmark/benchmark.h>

#include "linarr/alexander.hpp"
#include "linarr/multinet.hpp"
#include "linarr/resonance.hpp"

namespace {

using namespace linarr;

BiPencil pencil(std::size_t p, std::size_t q) {
  std::vector<Rational> lambdas, mus;
  for (std::size_t i = 1; i <= p; ++i) lambdas.emplace_back(static_cast<long>(i));
  for (std::size_t i = 1; i <= q; ++i) mus.emplace_back(-static_cast<long>(2 * i + 1));
  return BiPencil::make(lambdas, mus);
}

Arrangement braid() {
  return Arrangement({Line(1, -1, 0), Line(1, 0, -1), Line(0, 1, -1), Line(1, 0, 0), Line(0, 1, 0),
                      Line(0, 0, 1)});
}

void BM_AlexanderPipeline(benchmark::State& state) {
  const auto b = pencil(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(alexander_bipencil(b));
}
BENCHMARK(BM_AlexanderPipeline)->Args({2, 2})->Args({3, 3})->Args({4, 3})->Unit(benchmark::kMillisecond);

void BM_GradedQuotient(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const Poly f = fiber_polynomial(PencilFamily(pencil(n - n / 2, n / 2)), Rational(0));
  for (auto _ : state) benchmark::DoNotOptimize(graded_quotient_dim(f, 2 * n - 4));
}
BENCHMARK(BM_GradedQuotient)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_MultinetSearchHesse(benchmark::State& state) {
  const Lattice lattice = hesse_lattice();
  for (auto _ : state) benchmark::DoNotOptimize(search_multinets(lattice, 4, 1));
}
BENCHMARK(BM_MultinetSearchHesse)->Unit(benchmark::kMillisecond);

void BM_MultinetSearchBraid(benchmark::State& state) {
  const Lattice lattice = Lattice::from_arrangement(braid());
  const unsigned mmax = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_multinets(lattice, 3, mmax));
}
BENCHMARK(BM_MultinetSearchBraid)->DenseRange(1, 3);

void BM_AomotoBetti(benchmark::State& state) {
  const Lattice lattice = hesse_lattice();
  for (auto _ : state) benchmark::DoNotOptimize(aomoto_betti(lattice, 2));
}
BENCHMARK(BM_AomotoBetti);

}  // namespace

BENCHMARK_MAIN();
