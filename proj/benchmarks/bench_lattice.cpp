#include "trop/lattice.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace trop;

namespace {

IntMat random_matrix(std::mt19937_64& rng, int rows, int cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = dist(rng);
  return m;
}

}  // namespace

static void BM_HermiteNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(7);
  int n = int(state.range(0));
  IntMat m = random_matrix(rng, n, n, 20);
  for (auto _ : state) {
    auto r = hermite_normal_form(m);
    benchmark::DoNotOptimize(r.h);
  }
}
BENCHMARK(BM_HermiteNormalForm)->DenseRange(2, 6, 1);

static void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(7);
  int n = int(state.range(0));
  IntMat m = random_matrix(rng, n, n, 20);
  for (auto _ : state) {
    auto r = smith_normal_form(m);
    benchmark::DoNotOptimize(r.s);
  }
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(2, 6, 1);

static void BM_Saturate(benchmark::State& state) {
  std::mt19937_64 rng(7);
  int n = int(state.range(0));
  std::vector<IntVec> dirs;
  for (int i = 0; i < n - 1; ++i) dirs.push_back(random_matrix(rng, n, 1, 6).column(0));
  for (auto _ : state) {
    LatticeBasis b = saturate(dirs, n);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_Saturate)->DenseRange(2, 6, 1);
