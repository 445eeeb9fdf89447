#include <benchmark/benchmark.h>

#include "pcf/cf.hpp"
#include "pcf/convergents.hpp"
#include "pcf/padic.hpp"
#include "pcf/quadirr.hpp"

namespace {

pcf::QuadIrr root_of(long D) {
  return pcf::make_quadirr(pcf::Rational(0), pcf::Rational(1), D);
}

void BM_HenselSqrt(benchmark::State& state) {
  const long digits = state.range(0);
  for (auto _ : state) {
    pcf::PadicContext ctx(5, 19);
    benchmark::DoNotOptimize(ctx.hensel_sqrt(digits));
  }
}
BENCHMARK(BM_HenselSqrt)->Arg(64)->Arg(512)->Arg(4096);

void BM_FloorS(benchmark::State& state) {
  pcf::PadicContext ctx(5, 19);
  pcf::QuadIrr alpha = pcf::qi_sub_inv(root_of(19), pcf::Rational(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pcf::floor_s(ctx, alpha));
  }
}
BENCHMARK(BM_FloorS);

void BM_Expand(benchmark::State& state) {
  const long steps = state.range(0);
  for (auto _ : state) {
    pcf::PadicContext ctx(5, 19);
    pcf::ExpansionResult res =
        pcf::expand(ctx, root_of(19), pcf::AlgorithmKind::BrowkinI, steps);
    benchmark::DoNotOptimize(res.partial_quotients.size());
  }
}
BENCHMARK(BM_Expand)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ConvergentStream(benchmark::State& state) {
  const long steps = state.range(0);
  pcf::PadicContext ctx(5, 19);
  pcf::ExpansionResult res =
      pcf::expand(ctx, root_of(19), pcf::AlgorithmKind::BrowkinI, steps);
  std::vector<pcf::Rational> pqs = pcf::unroll_quotients(res, steps);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pcf::convergent_stream(pqs).size());
  }
}
BENCHMARK(BM_ConvergentStream)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
