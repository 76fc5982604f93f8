#pragma once

#include <string>
#include <vector>

namespace chronoloop {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Built-in invariant suite: closed-form reproductions of the reference
/// circuit outputs, randomized structural checks with pinned seeds, solver
/// cross-validation, and determinism. Backs the `verify` subcommand.
std::vector<CheckResult> run_verification_suite();

}  // namespace chronoloop
