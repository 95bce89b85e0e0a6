#include "trop/current.hpp"
#include "trop/measure.hpp"
#include "trop/tropical_poly.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace trop;

namespace {

TropicalPolynomial dense_curve(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> num(-8, 8), den(1, 4);
  std::vector<std::pair<IntVec, Rat>> terms;
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j) {
      IntVec e{Int(i), Int(j)};
      Rat c(num(rng), den(rng));
      c.canonicalize();
      terms.emplace_back(e, c);
    }
  return make_polynomial(2, std::move(terms));
}

}  // namespace

static void BM_Hypersurface(benchmark::State& state) {
  std::mt19937_64 rng(11);
  TropicalPolynomial p = dense_curve(rng, int(state.range(0)));
  for (auto _ : state) {
    WeightedComplex c = hypersurface(p);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_Hypersurface)->DenseRange(1, 4, 1)->Unit(benchmark::kMillisecond);

static void BM_StableIntersection(benchmark::State& state) {
  std::mt19937_64 rng(13);
  TropicalPolynomial p = dense_curve(rng, int(state.range(0)));
  TropicalPolynomial q = dense_curve(rng, int(state.range(0)));
  for (auto _ : state) {
    Rat num = stable_intersection_number({p, q});
    benchmark::DoNotOptimize(num);
  }
}
BENCHMARK(BM_StableIntersection)->DenseRange(1, 3, 1)->Unit(benchmark::kMillisecond);

static void BM_ClosednessCertificate(benchmark::State& state) {
  std::mt19937_64 rng(17);
  TropicalPolynomial p = dense_curve(rng, int(state.range(0)));
  WeightedComplex c = hypersurface(p);
  for (auto _ : state) {
    ClosednessReport r = closedness_certificate(c);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ClosednessCertificate)->DenseRange(1, 3, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
