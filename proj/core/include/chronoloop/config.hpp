#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "chronoloop/algebra.hpp"
#include "chronoloop/circuit.hpp"
#include "chronoloop/timetravel.hpp"

namespace chronoloop {

/// Injection request as written in a run configuration file. A dephased
/// request without a phi draws the phase uniformly on [0, 2pi) from the
/// run's seeded generator.
struct InjectionSpec {
  enum class Mode { Coherent, Dephased, Explicit };
  Mode mode = Mode::Coherent;
  std::optional<double> phi;
};

/// Parsed run configuration file. Complex numbers are stored in the file as
/// [re, im] pairs; matrices are row-major nested arrays of those pairs.
struct RunConfig {
  std::size_t dim = 1;
  double alpha = 0.0;
  double beta = 0.0;
  Operator g1;
  Operator g2;
  std::optional<Operator> m;
  State psi;
  InjectionSpec injection;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
};

/// Parses and schema-validates a configuration document. Splitter amplitudes
/// are accepted when |alpha^2 + beta^2 - 1| <= 1e-9 and renormalized onto the
/// exact constraint when they are off by more than 1e-12 (values already
/// within 1e-12 are kept bit-identical so dumps round-trip).
/// Throws ConfigError with a human-readable message on any violation.
RunConfig parse_run_config(const std::string& json_text);

/// parse_run_config over the contents of a file. Throws ConfigError when the
/// file cannot be read.
RunConfig load_run_config(const std::string& path);

/// Byte-stable serialization: fixed key order, doubles printed as %.16e
/// (17 significant digits, exact round-trip). parse_run_config of the result
/// reproduces the input configuration exactly.
std::string canonical_config_json(const RunConfig& config);

/// FNV-1a 64 hash of canonical_config_json, as 16 hex digits. Reports carry
/// it so every number can be traced to the configuration that produced it.
std::string config_hash(const RunConfig& config);

/// Builds the circuit, validating dimensions and the splitter constraint.
CircuitConfig make_circuit_config(const RunConfig& config);

/// Maps the file-level injection request onto a protocol injection mode.
/// Explicit mode requires m and takes the launched state to be the
/// normalized first-pass psi4 (a documented convention), so the injected
/// state is m * psi4 / ||psi4||. Throws ZeroOutputError when that psi4 is
/// zero and ConfigError when m is missing.
InjectionMode resolve_injection(const RunConfig& config,
                                const CircuitConfig& circuit);

}  // namespace chronoloop
