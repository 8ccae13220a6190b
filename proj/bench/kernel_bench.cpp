// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "faultcalc/kernels.hpp"

using namespace faultcalc::kernels;

namespace {

std::vector<double> filled(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

template <auto Kernel>
void matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = filled(n * n, 1), b = filled(n * n, 2);
  std::vector<double> out(n * n);
  for (auto _ : state) {
    Kernel(a, Shape{n, n}, b, Shape{n, n}, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n * n));
}

template <auto Kernel>
void kron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = filled(n * n, 3), b = filled(n * n, 4);
  std::vector<double> out(n * n * n * n);
  for (auto _ : state) {
    Kernel(a, Shape{n, n}, b, Shape{n, n}, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(out.size()));
}

template <auto Kernel>
void khatri(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = filled(n * n, 5), b = filled(n * n, 6);
  std::vector<double> out(n * n * n);
  for (auto _ : state) {
    Kernel(a, Shape{n, n}, b, Shape{n, n}, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(out.size()));
}

}  // namespace

BENCHMARK(matmul<serial::matmul>)->Name("matmul/serial")->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(matmul<parallel::matmul>)->Name("matmul/parallel")->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(kron<serial::kron>)->Name("kron/serial")->RangeMultiplier(2)->Range(8, 48);
BENCHMARK(kron<parallel::kron>)->Name("kron/parallel")->RangeMultiplier(2)->Range(8, 48);
BENCHMARK(khatri<serial::khatri>)->Name("khatri/serial")->RangeMultiplier(2)->Range(16, 128);
BENCHMARK(khatri<parallel::khatri>)->Name("khatri/parallel")->RangeMultiplier(2)->Range(16, 128);

BENCHMARK_MAIN();
