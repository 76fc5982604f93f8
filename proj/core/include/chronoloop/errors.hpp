#pragma once

#include <stdexcept>
#include <string>

namespace chronoloop {

/// Linear system has no unique solution, or its condition estimate exceeds
/// the caller's limit. From the loop solver this means no unique
/// self-consistent solution exists at the given parameters.
class SingularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixed-point iteration hit its iteration cap before converging. Expected
/// whenever the feedback map is not a contraction.
class NoConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Both interferometer outputs are zero states, so collapse probabilities
/// are undefined.
class ZeroOutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Run configuration file failed to parse or violates the schema.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chronoloop
