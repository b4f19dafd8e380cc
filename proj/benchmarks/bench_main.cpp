#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "qps/cocycle.hpp"
#include "qps/fft.hpp"
#include "qps/finite_operator.hpp"
#include "qps/frequency.hpp"
#include "qps/lyapunov.hpp"
#include "qps/potential.hpp"

namespace {

const qps::Frequency& golden() {
  static qps::Frequency om = qps::Frequency::golden();
  return om;
}

void bm_transfer_product(benchmark::State& state) {
  qps::Cocycle c(qps::Potential::amo(3.0), 0.0, golden());
  long m = state.range(0);
  for (auto _ : state) {
    qps::TransferProduct p = qps::transfer_product(c, 0.123, m);
    benchmark::DoNotOptimize(p.log_norm);
  }
  state.SetItemsProcessed(state.iterations() * m);
}
BENCHMARK(bm_transfer_product)->Arg(1000)->Arg(10000);

void bm_eigen_count(benchmark::State& state) {
  long n = state.range(0);
  qps::FiniteOperator op = qps::finite_operator(qps::Potential::amo(3.0), golden(), 0.123, n);
  for (auto _ : state) {
    long count = qps::eigen_count(op, 0.5);
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(bm_eigen_count)->Arg(2048)->Arg(16384);

void bm_fft(benchmark::State& state) {
  long n = state.range(0);
  std::vector<std::complex<double>> data(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i)
    data[static_cast<size_t>(i)] = {std::cos(0.001 * static_cast<double>(i)), 0.0};
  for (auto _ : state) {
    std::vector<std::complex<double>> copy = data;
    qps::fft_radix2(copy, false);
    benchmark::DoNotOptimize(copy.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(bm_fft)->Arg(4096)->Arg(65536);

void bm_finite_lyapunov(benchmark::State& state) {
  qps::Cocycle c(qps::Potential::amo(3.0), 0.0, golden());
  for (auto _ : state) {
    double l = qps::finite_lyapunov(c, state.range(0), 0.02, 256);
    benchmark::DoNotOptimize(l);
  }
}
BENCHMARK(bm_finite_lyapunov)->Arg(200)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
