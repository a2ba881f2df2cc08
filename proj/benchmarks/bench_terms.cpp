#include <benchmark/benchmark.h>

#include "biperiodic/fastpath.hpp"
#include "biperiodic/matforms.hpp"
#include "biperiodic/sequence.hpp"

namespace {

using biperiodic::Method;
using biperiodic::Params;
using biperiodic::Rational;
using biperiodic::SequenceKind;

const Params& fibonacci() {
  static const Params p(1, 1, 1, 0, 1);
  return p;
}

const Params& rational_params() {
  static const Params p(Rational(3, 2), Rational(-2, 5), Rational(1, 3), 1, Rational(-1, 2));
  return p;
}

template <Method M>
void BM_FibonacciTerm(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(biperiodic::term_fast(fibonacci(), SequenceKind::u, n, M));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_FibonacciTerm<Method::naive>)->RangeMultiplier(10)->Range(1000, 100000);
BENCHMARK(BM_FibonacciTerm<Method::matrix>)->RangeMultiplier(10)->Range(1000, 1000000);
BENCHMARK(BM_FibonacciTerm<Method::doubling>)->RangeMultiplier(10)->Range(1000, 1000000);

template <Method M>
void BM_RationalWTerm(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(biperiodic::term_fast(rational_params(), SequenceKind::w, n, M));
  }
}
BENCHMARK(BM_RationalWTerm<Method::naive>)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_RationalWTerm<Method::matrix>)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_RationalWTerm<Method::doubling>)->RangeMultiplier(4)->Range(64, 4096);

void BM_UPower(benchmark::State& state) {
  const auto u = biperiodic::build(biperiodic::MatrixTag::U, rational_params());
  for (auto _ : state) {
    benchmark::DoNotOptimize(biperiodic::mat_pow(u, state.range(0)));
  }
}
BENCHMARK(BM_UPower)->RangeMultiplier(4)->Range(64, 4096);

}  // namespace

BENCHMARK_MAIN();
