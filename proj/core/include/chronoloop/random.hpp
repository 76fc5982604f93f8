#pragma once

#include <cstdint>
#include <random>

#include "chronoloop/algebra.hpp"
#include "chronoloop/circuit.hpp"

namespace chronoloop {

/// Generator used for every stochastic draw in the project. std::mt19937_64
/// is fully specified by the standard, so seeded runs reproduce exactly.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer. trial_seed(seed, i) is the (i+1)-th output of the
/// SplitMix64 stream started at `seed`; it is the documented per-trial seed
/// derivation, O(1) per index so serial and parallel execution agree.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial_index);

/// Uniform double in [0, 1) built from the top 53 bits of one generator
/// output. Used instead of std::uniform_real_distribution, whose mapping is
/// implementation-defined.
double uniform_unit(Rng& rng);

/// Standard normal via Box-Muller on uniform_unit draws.
double normal_sample(Rng& rng);

/// Complex with independent standard normal components.
Complex normal_complex(Rng& rng);

State random_state(std::size_t dim, Rng& rng, bool normalized = true);

/// Haar-like random unitary: Gaussian matrix, modified Gram-Schmidt on the
/// columns with one reorthogonalization pass.
Operator random_unitary(std::size_t dim, Rng& rng);

/// Gaussian matrix without orthogonalization (generally non-unitary).
Operator random_operator(std::size_t dim, Rng& rng);

/// Splitter with alpha = cos(theta), beta = sin(theta), theta uniform in
/// (0, pi/2).
BeamSplitter random_splitter(Rng& rng);

}  // namespace chronoloop
