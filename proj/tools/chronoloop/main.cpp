#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "chronoloop/config.hpp"
#include "chronoloop/errors.hpp"
#include "chronoloop/loop_solver.hpp"
#include "chronoloop/monte_carlo.hpp"
#include "chronoloop/report.hpp"
#include "chronoloop/timetravel.hpp"
#include "chronoloop/verify.hpp"
#include "chronoloop/version.hpp"

namespace {

using namespace chronoloop;

// Stable exit-code map: 0 ok, 1 config/usage, 2 zero output, 3 singular,
// 4 no convergence, 5 verify failure.
enum ExitCode : int {
  kOk = 0,
  kConfigError = 1,
  kZeroOutput = 2,
  kSingular = 3,
  kNoConvergence = 4,
  kVerifyFailure = 5,
};

struct CommonArgs {
  std::string config_path;
  std::string dump_config_path;
  std::optional<std::uint64_t> seed_override;
};

void add_common_options(CLI::App* cmd, CommonArgs* args, bool with_seed) {
  cmd->add_option("config", args->config_path, "run configuration JSON file")
      ->required();
  cmd->add_option("--dump-config", args->dump_config_path,
                  "write the canonical form of the effective configuration "
                  "to this path");
  if (with_seed) {
    cmd->add_option("--seed", args->seed_override,
                    "override the seed from the configuration file");
  }
}

RunConfig load_effective_config(const CommonArgs& args) {
  RunConfig config = load_run_config(args.config_path);
  if (args.seed_override) {
    config.seed = *args.seed_override;
  }
  if (!args.dump_config_path.empty()) {
    std::ofstream out(args.dump_config_path, std::ios::binary);
    if (!out) {
      throw ConfigError("config error: cannot write '" +
                        args.dump_config_path + "'");
    }
    out << canonical_config_json(config);
  }
  return config;
}

void emit_warnings(const RunConfig& config, const CircuitConfig& circuit,
                   bool m_in_use) {
  for (const std::string& note : circuit.warnings()) {
    std::cerr << "warning: " << note << "\n";
  }
  if (m_in_use && config.m && !is_unitary(*config.m)) {
    std::cerr << "warning: feedback propagator m is not unitary\n";
  }
}

unsigned thread_cap_from_env() {
  const char* raw = std::getenv("CHRONOLOOP_THREADS");
  if (raw == nullptr || *raw == '\0') {
    return 0;  // implementation default
  }
  char* end = nullptr;
  const unsigned long value = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) {
    throw ConfigError(
        "config error: CHRONOLOOP_THREADS must be a positive integer");
  }
  return static_cast<unsigned>(value);
}

int cmd_two_pass(const CommonArgs& args, bool force_left, bool force_right) {
  const RunConfig config = load_effective_config(args);
  const CircuitConfig circuit = make_circuit_config(config);
  const bool explicit_mode =
      config.injection.mode == InjectionSpec::Mode::Explicit;
  emit_warnings(config, circuit, explicit_mode);

  std::optional<Outcome> force;
  if (force_left) {
    force = Outcome::Left;
  } else if (force_right) {
    force = Outcome::Right;
  }

  const InjectionMode mode = resolve_injection(config, circuit);
  const TwoPassReport report =
      run_two_pass_protocol(circuit, config.psi, mode, config.seed, force);
  std::cout << render_two_pass_report(config, report, force.has_value());
  return kOk;
}

int cmd_loop_solve(const CommonArgs& args, bool iterative, double tol,
                   int max_iter) {
  const RunConfig config = load_effective_config(args);
  const CircuitConfig circuit = make_circuit_config(config);
  if (!config.m) {
    throw ConfigError("config error: loop-solve requires the m matrix");
  }
  emit_warnings(config, circuit, true);

  const LoopSolution solution =
      iterative
          ? iterate_established_loop(circuit, *config.m, config.psi, tol,
                                     max_iter)
          : solve_established_loop(circuit, *config.m, config.psi);
  std::cout << render_loop_report(config, solution);
  return kOk;
}

int cmd_phase_sweep(const CommonArgs& args, int points,
                    const std::string& out_path) {
  const RunConfig config = load_effective_config(args);
  const CircuitConfig circuit = make_circuit_config(config);
  emit_warnings(config, circuit, false);

  const std::string csv = render_phase_sweep_csv(circuit, config.psi, points);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw ConfigError("config error: cannot write '" + out_path + "'");
  }
  out << csv;
  if (!out.good()) {
    throw ConfigError("config error: failed writing '" + out_path + "'");
  }
  return kOk;
}

int cmd_monte_carlo(const CommonArgs& args,
                    std::optional<std::uint64_t> trials_override) {
  RunConfig config = load_effective_config(args);
  if (trials_override) {
    config.trials = *trials_override;
  }
  if (config.trials == 0) {
    throw ConfigError("config error: trials must be at least 1");
  }
  const CircuitConfig circuit = make_circuit_config(config);
  const bool explicit_mode =
      config.injection.mode == InjectionSpec::Mode::Explicit;
  emit_warnings(config, circuit, explicit_mode);

  const InjectionMode mode = resolve_injection(config, circuit);
  const EnsembleReport report =
      monte_carlo(circuit, config.psi, mode, config.trials, config.seed,
                  thread_cap_from_env());
  std::cout << render_monte_carlo_report(config, report);
  return kOk;
}

int cmd_verify() {
  const std::vector<CheckResult> results = run_verification_suite();
  std::size_t width = 0;
  for (const CheckResult& r : results) {
    width = std::max(width, r.name.size());
  }
  bool all_passed = true;
  for (const CheckResult& r : results) {
    all_passed = all_passed && r.passed;
    std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name
              << std::string(width - r.name.size() + 2, ' ') << r.detail
              << "\n";
  }
  std::cout << (all_passed ? "all checks passed\n" : "some checks FAILED\n");
  return all_passed ? kOk : kVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-beam-splitter interferometer with a retrocausal feedback "
               "channel: two-pass paradox protocol, dephased injection, and "
               "the self-consistent established-loop solution"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  CommonArgs two_pass_args;
  bool force_left = false;
  bool force_right = false;
  CLI::App* two_pass = app.add_subcommand(
      "two-pass", "run the two-pass protocol once and report both passes");
  add_common_options(two_pass, &two_pass_args, true);
  CLI::Option* left_opt = two_pass->add_flag(
      "--force-left", force_left, "force a Left first-pass collapse");
  two_pass
      ->add_flag("--force-right", force_right,
                 "force a Right first-pass collapse")
      ->excludes(left_opt);

  CommonArgs loop_args;
  bool iterative = false;
  double tol = 1e-12;
  int max_iter = 1000;
  CLI::App* loop = app.add_subcommand(
      "loop-solve", "solve the self-consistent established-loop state");
  add_common_options(loop, &loop_args, false);
  loop->add_flag("--iterative", iterative,
                 "use fixed-point iteration instead of the direct solve");
  loop->add_option("--tol", tol, "iteration stopping tolerance")
      ->check(CLI::PositiveNumber);
  loop->add_option("--max-iter", max_iter, "iteration cap")
      ->check(CLI::PositiveNumber);

  CommonArgs sweep_args;
  int points = 100;
  std::string out_path;
  CLI::App* sweep = app.add_subcommand(
      "phase-sweep",
      "sweep the injection phase over [0, 2pi] and write a CSV");
  add_common_options(sweep, &sweep_args, false);
  sweep->add_option("--points", points, "number of sweep points (>= 2)")
      ->check(CLI::Range(2, 1000000));
  sweep->add_option("--out", out_path, "output CSV path")->required();

  CommonArgs mc_args;
  std::optional<std::uint64_t> trials_override;
  CLI::App* mc = app.add_subcommand(
      "monte-carlo", "run a seeded ensemble of two-pass protocols");
  add_common_options(mc, &mc_args, true);
  mc->add_option("--trials", trials_override,
                 "override the trial count from the configuration file");

  CLI::App* verify = app.add_subcommand(
      "verify", "run the built-in invariant suite and print a pass/fail "
                "table");

  try {
    app.parse(argc, argv);
    if (two_pass->parsed()) {
      return cmd_two_pass(two_pass_args, force_left, force_right);
    }
    if (loop->parsed()) {
      return cmd_loop_solve(loop_args, iterative, tol, max_iter);
    }
    if (sweep->parsed()) {
      return cmd_phase_sweep(sweep_args, points, out_path);
    }
    if (mc->parsed()) {
      return cmd_monte_carlo(mc_args, trials_override);
    }
    if (verify->parsed()) {
      return cmd_verify();
    }
    return kConfigError;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  } catch (const ZeroOutputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kZeroOutput;
  } catch (const SingularError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSingular;
  } catch (const NoConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
}
