#include <benchmark/benchmark.h>

#include "unitfrac/best_under.hpp"
#include "unitfrac/construct.hpp"
#include "unitfrac/egyptian.hpp"
#include "unitfrac/limits.hpp"
#include "unitfrac/rational.hpp"

namespace {

using unitfrac::Rational;

void BM_GreedyUnder(benchmark::State& state) {
  const Rational lambda(19, 20);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(unitfrac::greedy_under(lambda, n, n));
  }
}
BENCHMARK(BM_GreedyUnder)->Arg(7)->Arg(10)->Arg(12);

void BM_GreedyApprox(benchmark::State& state) {
  const Rational lambda(19, 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(unitfrac::greedy_approx(lambda));
  }
}
BENCHMARK(BM_GreedyApprox);

void BM_BestUnder(benchmark::State& state) {
  const Rational lambda(10, 61);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(unitfrac::best_under(lambda, n));
  }
}
BENCHMARK(BM_BestUnder)->Arg(2)->Arg(3);

void BM_Vardi(benchmark::State& state) {
  const auto digits = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(unitfrac::vardi(digits));
  }
}
BENCHMARK(BM_Vardi)->Arg(6)->Arg(30)->Arg(100);

void BM_FEval(benchmark::State& state) {
  const Rational x(3);
  const auto digits = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(unitfrac::f_eval(x, digits));
  }
}
BENCHMARK(BM_FEval)->Arg(30)->Arg(100);

void BM_VerifyClaim2(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(unitfrac::verify_claim2(m));
  }
}
BENCHMARK(BM_VerifyClaim2)->Arg(4)->Arg(6);

void BM_BuildC(benchmark::State& state) {
  const auto specs = unitfrac::competitor_family();
  for (auto _ : state) {
    benchmark::DoNotOptimize(unitfrac::build_c(specs.front()));
  }
}
BENCHMARK(BM_BuildC);

}  // namespace

BENCHMARK_MAIN();
