#include <benchmark/benchmark.h>

#include "arcext/ainfty.hpp"
#include "arcext/klpoly.hpp"

using namespace arcext;

static void BM_multiplication_table(benchmark::State& state) {
  for (auto _ : state) {
    ArcAlgebra A(static_cast<int>(state.range(0)), 2);
    long long terms = 0;
    for (int x = 0; x < A.dim(); ++x)
      for (int y = 0; y < A.dim(); ++y) terms += static_cast<long long>(A.multiply(x, y).size());
    benchmark::DoNotOptimize(terms);
  }
}
BENCHMARK(BM_multiplication_table)->Arg(2)->Arg(3);

static void BM_resolutions(benchmark::State& state) {
  for (auto _ : state) {
    ArcAlgebra A(static_cast<int>(state.range(0)), 2);
    ResolutionSet R(A, 1);
    benchmark::DoNotOptimize(R.max_length());
  }
}
BENCHMARK(BM_resolutions)->Arg(2)->Arg(3);

static void BM_ext_table(benchmark::State& state) {
  for (auto _ : state) {
    ArcAlgebra A(static_cast<int>(state.range(0)), 2);
    ResolutionSet R(A, 1);
    DgExt E(R);
    long long total = 0;
    for (int la = 0; la < A.num_weights(); ++la)
      for (int mu = 0; mu < A.num_weights(); ++mu)
        for (auto [k, d] : E.ext_dims(la, mu)) {
          (void)k;
          total += d;
        }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ext_table)->Arg(2);

static void BM_kl_matrix(benchmark::State& state) {
  auto ws = enumerate_weights(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    long long coeffs = 0;
    for (const Weight& la : ws)
      for (const Weight& mu : ws) coeffs += static_cast<long long>(kl_poly(la, mu).coeffs().size());
    benchmark::DoNotOptimize(coeffs);
  }
}
BENCHMARK(BM_kl_matrix)->Arg(3);

static void BM_minimal_model(benchmark::State& state) {
  for (auto _ : state) {
    ArcAlgebra A(2, 2);
    ResolutionSet R(A, 1);
    DgExt E(R);
    AinftyModel M = minimal_model(E, 7);
    benchmark::DoNotOptimize(M.tables.size());
  }
}
BENCHMARK(BM_minimal_model);

BENCHMARK_MAIN();
