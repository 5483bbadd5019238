// Serial reference kernels against their OpenMP variants.

#include "tph/kernels.hpp"
#include "tph/polymat.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace tph;

namespace {

ExactMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = make_rational(num(rng), den(rng));
    }
  }
  return m;
}

LaurentMatrix random_polymat(std::size_t n, int depth, unsigned seed) {
  LaurentMatrix u(n, n);
  for (int k = 0; k <= depth; ++k) {
    u.set_coeff(-k, random_matrix(n, n, seed + static_cast<unsigned>(k)));
  }
  return u;
}

void BM_MatmulSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ExactMatrix a = random_matrix(n, n, 1);
  const ExactMatrix b = random_matrix(n, n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::matmul_serial(a, b));
  }
}

void BM_MatmulOmp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ExactMatrix a = random_matrix(n, n, 1);
  const ExactMatrix b = random_matrix(n, n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::matmul_omp(a, b));
  }
}

void BM_RrefSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ExactMatrix a = random_matrix(n, n + n / 2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::rref_serial(a));
  }
}

void BM_RrefOmp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ExactMatrix a = random_matrix(n, n + n / 2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::rref_omp(a));
  }
}

void BM_DetSamplesSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const LaurentMatrix u = random_polymat(n, 3, 4);
  const int bound = 3 * static_cast<int>(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::det_samples_serial(u, bound));
  }
}

void BM_DetSamplesOmp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const LaurentMatrix u = random_polymat(n, 3, 4);
  const int bound = 3 * static_cast<int>(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::det_samples_omp(u, bound));
  }
}

} // namespace

BENCHMARK(BM_MatmulSerial)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatmulOmp)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RrefSerial)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefOmp)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DetSamplesSerial)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DetSamplesOmp)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
