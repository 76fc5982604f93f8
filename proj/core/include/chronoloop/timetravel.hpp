#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "chronoloop/circuit.hpp"
#include "chronoloop/measurement.hpp"

namespace chronoloop {

/// Injected state equals the original input exactly (the feedback channel is
/// fully coherent).
struct Coherent {};

/// Injected state is the original input times e^{i phi}.
struct Dephased {
  double phi;
};

/// Like Dephased, but phi is drawn uniformly on [0, 2pi) from the run's own
/// generator, after the collapse draw. Used for randomized-dephasing runs.
struct DephasedRandom {};

/// Caller supplies the feedback propagator m and the launched state psi_t;
/// the injected state is m * psi_t.
struct ExplicitM {
  Operator m;
  State psi_t;
};

using InjectionMode = std::variant<Coherent, Dephased, DephasedRandom, ExplicitM>;

/// Record of one full two-pass run: first pass, collapse outcome, and (when
/// the left output triggered the feedback channel) the injected state, the
/// re-evolved second pass, and the paradox measure.
struct TwoPassReport {
  PassResult first_pass;
  Outcome first_outcome = Outcome::Right;
  bool triggered = false;
  std::optional<double> injection_phase;  // phase actually applied, if any
  std::optional<State> injected_chi;
  std::optional<PassResult> second_pass;
  std::optional<double> paradox;
};

/// Effective injected state under full coherence: chi = psi(t1) itself. Only
/// the product of the feedback propagator with the launched state matters,
/// so the simulator represents that product directly.
State coherent_injection(const State& psi_t1);

/// chi = e^{i phi} * psi(t1). phi must be finite.
State dephased_injection(const State& psi_t1, double phi);

/// The two-pass paradox protocol:
///   1. open-loop pass on psi;
///   2. collapse of the output channel by Born probabilities using a
///      generator seeded with rng_seed (no draw is consumed when
///      force_outcome is supplied);
///   3. if the outcome is Left, the feedback channel triggers: the injected
///      state chi is built per `mode` and the circuit re-evolves via
///      two_input_pass(cfg, psi, chi);
///   4. the paradox measure of the second pass is recorded.
///
/// Throws std::invalid_argument for a zero input state and ZeroOutputError
/// when collapse is undefined.
TwoPassReport run_two_pass_protocol(
    const CircuitConfig& cfg, const State& psi, const InjectionMode& mode,
    std::uint64_t rng_seed,
    std::optional<Outcome> force_outcome = std::nullopt);

/// 1 - p_left of the second pass: 1 means the triggering outcome is fully
/// contradicted on re-evolution, 1/2 matches an unbiased split. This scalar
/// is a diagnostic defined by this tool. Requires a second pass.
double paradox_measure(const TwoPassReport& report);

}  // namespace chronoloop
