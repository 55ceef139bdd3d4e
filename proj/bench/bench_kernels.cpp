// Serial reference implementations against their OpenMP kernels.
#include <benchmark/benchmark.h>

#include "altgame/games.hpp"
#include "altgame/kernels.hpp"
#include "altgame/solver.hpp"
#include "altgame/verifier.hpp"

using namespace altgame;

namespace {

const std::vector<Payoff> kThree = {{Rational(0), Rational(1)},
                                    {Rational(1, 2), Rational(1, 2)},
                                    {Rational(1), Rational(0)}};

const GameDef& tictactoe() {
  static const GameDef g = games::make_tictactoe();
  return g;
}

const SolveResult& tictactoe_solution() {
  static const SolveResult r = classify(tictactoe());
  return r;
}

void BM_ValueSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::solve_values_serial(tictactoe(), 50'000'000).root);
}

void BM_ValueParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::solve_values_parallel(tictactoe(), 50'000'000).root);
}

void BM_VerifySerial(benchmark::State& state) {
  const auto xi = tictactoe_solution().strategy_p1.as_strategy();
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::verify_p1_serial(tictactoe(), xi, ClaimKind::Unbeatable).holds);
}

void BM_VerifyParallel(benchmark::State& state) {
  const auto xi = tictactoe_solution().strategy_p1.as_strategy();
  for (auto _ : state) benchmark::DoNotOptimize(verify_p1(tictactoe(), xi, ClaimKind::Unbeatable).holds);
}

void BM_OracleSerial(benchmark::State& state) {
  const auto g = games::gen_random(static_cast<std::uint64_t>(state.range(0)), 1, 2, 2, kThree);
  for (auto _ : state) benchmark::DoNotOptimize(reference::oracle_classify_serial(g));
}

void BM_OracleParallel(benchmark::State& state) {
  const auto g = games::gen_random(static_cast<std::uint64_t>(state.range(0)), 1, 2, 2, kThree);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_classify(g));
}

}  // namespace

BENCHMARK(BM_ValueSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValueParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSerial)->Arg(0)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(0)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
