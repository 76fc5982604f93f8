#pragma once

#include <cstdint>
#include <optional>

#include "chronoloop/circuit.hpp"
#include "chronoloop/random.hpp"

namespace chronoloop {

/// Which output channel the pass collapsed into.
enum class Outcome { Left, Right };

struct BornProbabilities {
  double p_right;
  double p_left;  // computed as 1 - p_right, so the pair sums to 1 exactly
};

/// Born-rule weights of the two outputs of a pass. Throws ZeroOutputError
/// when both outputs are zero states.
BornProbabilities born_probabilities(const PassResult& pass);

/// Samples the collapse outcome: Left with probability p_left, using one
/// uniform_unit draw from the supplied generator.
Outcome collapse(const PassResult& pass, Rng& rng);

/// Aggregate over a Monte Carlo ensemble of two-pass protocol runs.
/// mean_paradox is averaged over triggered trials only and absent when no
/// trial triggered.
struct EnsembleReport {
  std::uint64_t trials = 0;
  std::uint64_t left_count = 0;
  std::uint64_t right_count = 0;
  double trigger_frequency = 0.0;
  std::optional<double> mean_paradox;
  std::uint64_t seed = 0;
};

}  // namespace chronoloop
