// Serial reference against the OpenMP kernels on the hot paths: grid
// evaluation of the composed cdf, inversion sampling and tail masses.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "skewlab/divisibility.hpp"
#include "skewlab/kernels.hpp"
#include "skewlab/mechanisms.hpp"

using namespace skewlab;

namespace {

MechanismPtr mechanism_for(int id) {
  switch (id) {
    case 0:
      return make_azzalini(3.0);
    case 1:
      return std::make_shared<OrderStatistics>(1.5, 3.0);
    case 2:
      return std::make_shared<MarshallOlkin>(2.0);
    default:
      return TwoPiece::epsilon_skew(-0.5);
  }
}

std::vector<double> grid(std::size_t n) {
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = -6.0 + 12.0 * i / (n - 1);
  return ys;
}

template <bool Parallel>
void BM_EvaluateCdf(benchmark::State& state) {
  const SkewedDistribution s(mechanism_for(static_cast<int>(state.range(0))));
  const auto ys = grid(static_cast<std::size_t>(state.range(1)));
  std::vector<double> out(ys.size());
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::evaluate(s, kernels::Quantity::Cdf, ys, out);
    } else {
      kernels::serial::evaluate(s, kernels::Quantity::Cdf, ys, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ys.size()));
  state.SetLabel(s.mechanism().describe());
}

template <bool Parallel>
void BM_SampleInversion(benchmark::State& state) {
  const SkewedDistribution s(mechanism_for(static_cast<int>(state.range(0))));
  std::vector<double> out(static_cast<std::size_t>(state.range(1)));
  RngState rng(1);
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::sample_inversion(s, rng, out);
    } else {
      kernels::serial::sample_inversion(s, rng, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
  state.SetLabel(s.mechanism().describe());
}

template <bool Parallel>
void BM_SampleFlip(benchmark::State& state) {
  const auto pi = azzalini_pi(3.0);
  std::vector<double> out(static_cast<std::size_t>(state.range(0)));
  RngState rng(1);
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::sample_flip(pi, rng, out);
    } else {
      kernels::serial::sample_flip(pi, rng, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_LogTails(benchmark::State& state) {
  const SkewedDistribution s(mechanism_for(static_cast<int>(state.range(0))));
  std::vector<double> out(std::size(kDefaultTailGrid));
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::log_tail_masses(s, kDefaultTailGrid, out);
    } else {
      kernels::serial::log_tail_masses(s, kDefaultTailGrid, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetLabel(s.mechanism().describe());
}

void mechanism_args(benchmark::internal::Benchmark* b, std::int64_t size) {
  for (int id = 0; id < 4; ++id) b->Args({id, size});
}

}  // namespace

BENCHMARK(BM_EvaluateCdf<false>)->Apply([](auto* b) { mechanism_args(b, 4096); });
BENCHMARK(BM_EvaluateCdf<true>)->Apply([](auto* b) { mechanism_args(b, 4096); });
BENCHMARK(BM_SampleInversion<false>)->Apply([](auto* b) { mechanism_args(b, 4096); });
BENCHMARK(BM_SampleInversion<true>)->Apply([](auto* b) { mechanism_args(b, 4096); });
BENCHMARK(BM_SampleFlip<false>)->Arg(1 << 16);
BENCHMARK(BM_SampleFlip<true>)->Arg(1 << 16);
BENCHMARK(BM_LogTails<false>)->DenseRange(0, 3);
BENCHMARK(BM_LogTails<true>)->DenseRange(0, 3);

BENCHMARK_MAIN();
