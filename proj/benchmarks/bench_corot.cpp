#include "corot/sampling.hpp"
#include "corot/spectral.hpp"
#include "corot/stiffness.hpp"
#include "corot/strains.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace corot;

namespace {

std::vector<SymTensor3> samples(std::size_t n) {
  Rng rng(1);
  std::vector<SymTensor3> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(rng.spd());
  return out;
}

const std::vector<SymTensor3>& pool() {
  static const std::vector<SymTensor3> p = samples(256);
  return p;
}

void BM_SpectralDecompose(benchmark::State& state) {
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(spectral_decompose(pool()[k++ & 255]));
}
BENCHMARK(BM_SpectralDecompose);

void BM_AssembleA(benchmark::State& state, SpinGenerator gen) {
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(assemble_A(pool()[k++ & 255], gen));
}
BENCHMARK_CAPTURE(BM_AssembleA, zj, zaremba_jaumann());
BENCHMARK_CAPTURE(BM_AssembleA, log, logarithmic());
BENCHMARK_CAPTURE(BM_AssembleA, aif2, aifantis(2, 1.0));

void BM_Classify(benchmark::State& state, SpinGenerator gen) {
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify(pool()[k++ & 255], gen));
}
BENCHMARK_CAPTURE(BM_Classify, gn, green_naghdi());
BENCHMARK_CAPTURE(BM_Classify, log, logarithmic());

void BM_FrechetLog(benchmark::State& state) {
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(frechet_log(pool()[k++ & 255]));
}
BENCHMARK(BM_FrechetLog);

void BM_PairingBatch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pairing_batch(logarithmic(), 0.5, 3, 1000));
}
BENCHMARK(BM_PairingBatch)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
