#include <benchmark/benchmark.h>

#include "qgl/bounds.hpp"
#include "qgl/hull_sets.hpp"
#include "qgl/random.hpp"

using namespace qgl;

namespace {

std::vector<QPolynomial> instances(std::size_t n) {
  std::vector<QPolynomial> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(random_polynomial(k, 2 + static_cast<int>(k % 5), 10.0));
  return out;
}

template <Execution exec>
void BM_BoundSnm(benchmark::State& state) {
  const QPolynomial P = random_polynomial(1, 6, 10.0);
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bound_snm(P, samples, exec).value);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <Execution exec>
void BM_VerifyBatch(benchmark::State& state) {
  const auto polys = instances(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_batch(polys, {}, exec).size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_BoundSnm<Execution::Serial>)->Name("bound_snm/serial")->Arg(2000)->Arg(20000);
BENCHMARK(BM_BoundSnm<Execution::Parallel>)->Name("bound_snm/parallel")->Arg(2000)->Arg(20000);
BENCHMARK(BM_VerifyBatch<Execution::Serial>)->Name("verify_batch/serial")->Arg(200);
BENCHMARK(BM_VerifyBatch<Execution::Parallel>)->Name("verify_batch/parallel")->Arg(200);

BENCHMARK_MAIN();
