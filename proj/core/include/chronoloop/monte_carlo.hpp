#pragma once

#include <cstdint>

#include "chronoloop/measurement.hpp"
#include "chronoloop/timetravel.hpp"

namespace chronoloop {

/// Runs `trials` independent two-pass protocols, trial i seeded with
/// trial_seed(seed, i), and aggregates counts, trigger frequency, and the
/// mean paradox over triggered trials.
///
/// Trials are distributed over threads in fixed-size chunks whose partial
/// sums are combined in chunk order, so the report is bit-identical for any
/// thread count. max_threads = 0 picks the hardware concurrency; 1 runs
/// serially.
EnsembleReport monte_carlo(const CircuitConfig& cfg, const State& psi,
                           const InjectionMode& mode, std::uint64_t trials,
                           std::uint64_t seed, unsigned max_threads = 0);

}  // namespace chronoloop
