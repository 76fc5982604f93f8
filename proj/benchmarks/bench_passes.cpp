#include <benchmark/benchmark.h>

#include "chronoloop/loop_solver.hpp"
#include "chronoloop/monte_carlo.hpp"
#include "chronoloop/random.hpp"
#include "chronoloop/timetravel.hpp"

using namespace chronoloop;

namespace {

CircuitConfig bench_circuit(std::size_t dim, Rng& rng) {
  return default_qtltt_params(dim, random_unitary(dim, rng));
}

void BM_open_loop_pass(benchmark::State& state) {
  Rng rng(1);
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const auto cfg = bench_circuit(d, rng);
  const State psi = random_state(d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(open_loop_pass(cfg, psi));
  }
}
BENCHMARK(BM_open_loop_pass)->Arg(1)->Arg(4)->Arg(16);

void BM_two_input_pass(benchmark::State& state) {
  Rng rng(2);
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const auto cfg = bench_circuit(d, rng);
  const State psi = random_state(d, rng);
  const State chi = random_state(d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(two_input_pass(cfg, psi, chi));
  }
}
BENCHMARK(BM_two_input_pass)->Arg(1)->Arg(4)->Arg(16);

void BM_two_pass_protocol(benchmark::State& state) {
  Rng rng(3);
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const auto cfg = bench_circuit(d, rng);
  const State psi = random_state(d, rng);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_two_pass_protocol(cfg, psi, Coherent{}, seed++));
  }
}
BENCHMARK(BM_two_pass_protocol)->Arg(1)->Arg(4)->Arg(16);

void BM_loop_solve_direct(benchmark::State& state) {
  Rng rng(4);
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const auto cfg = bench_circuit(d, rng);
  const Operator m = random_unitary(d, rng);
  const State psi = random_state(d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_established_loop(cfg, m, psi));
  }
}
BENCHMARK(BM_loop_solve_direct)->Arg(1)->Arg(4)->Arg(16);

void BM_loop_solve_iterative(benchmark::State& state) {
  Rng rng(5);
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const auto cfg = bench_circuit(d, rng);
  const Operator m = random_unitary(d, rng);
  const State psi = random_state(d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        iterate_established_loop(cfg, m, psi, 1e-12, 2000));
  }
}
BENCHMARK(BM_loop_solve_iterative)->Arg(1)->Arg(4)->Arg(16);

void BM_monte_carlo(benchmark::State& state) {
  Rng rng(6);
  const auto cfg = bench_circuit(1, rng);
  const State psi = random_state(1, rng);
  const auto trials = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        monte_carlo(cfg, psi, Coherent{}, trials, 42, 1));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(trials) *
                          state.iterations());
}
BENCHMARK(BM_monte_carlo)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
