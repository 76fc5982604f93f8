#include "chronoloop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "chronoloop/circuit.hpp"
#include "chronoloop/errors.hpp"
#include "chronoloop/loop_solver.hpp"
#include "chronoloop/measurement.hpp"
#include "chronoloop/monte_carlo.hpp"
#include "chronoloop/random.hpp"
#include "chronoloop/timetravel.hpp"

namespace chronoloop {

namespace {

std::string scientific(double x) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << x;
  return out.str();
}

double max_component_diff(const State& a, const State& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

CheckResult tolerance_check(std::string name, double err, double tol) {
  return {std::move(name), err <= tol,
          "max err " + scientific(err) + " (tol " + scientific(tol) + ")"};
}

// Closed-form two-input outputs used as the reference the staged evaluation
// must match.
struct FormulaPass {
  State psi3;
  State psi4;
};

FormulaPass closed_form(const CircuitConfig& cfg, const State& psi,
                        const State& chi) {
  const double a2 = cfg.splitter.alpha * cfg.splitter.alpha;
  const double b2 = cfg.splitter.beta * cfg.splitter.beta;
  const Complex minus_i_ab{0.0, -cfg.splitter.alpha * cfg.splitter.beta};
  const State mixed = minus_i_ab * apply(cfg.g1 + cfg.g2, psi);
  const State mixed_chi = minus_i_ab * apply(cfg.g1 + cfg.g2, chi);
  return {apply(a2 * cfg.g1 - b2 * cfg.g2, psi) + mixed_chi,
          mixed + apply(a2 * cfg.g2 - b2 * cfg.g1, chi)};
}

CheckResult check_reference_split() {
  const auto cfg = default_qtltt_params(1, Operator::identity(1));
  const PassResult pass = open_loop_pass(cfg, State::basis(1, 0));
  const State expected(std::vector<Complex>{{0.5, -0.5}});
  const double err = std::max(max_component_diff(pass.psi3, expected),
                              max_component_diff(pass.psi4, expected));
  return tolerance_check("reference_equal_split", err, 1e-12);
}

CheckResult check_reference_born() {
  const auto cfg = default_qtltt_params(1, Operator::identity(1));
  const auto probs = born_probabilities(open_loop_pass(cfg, State::basis(1, 0)));
  const bool ok = probs.p_left == 0.5 && probs.p_right == 0.5;
  return {"reference_born_half_half", ok,
          "p_right=" + scientific(probs.p_right) +
              " p_left=" + scientific(probs.p_left)};
}

CheckResult check_coherent_cancellation_reference() {
  const auto cfg = default_qtltt_params(1, Operator::identity(1));
  const auto report = run_two_pass_protocol(cfg, State::basis(1, 0),
                                            Coherent{}, 7, Outcome::Left);
  const State expected_psi3(std::vector<Complex>{{1.0, -1.0}});
  const double err =
      std::max({norm(report.second_pass->psi4),
                max_component_diff(report.second_pass->psi3, expected_psi3),
                std::abs(*report.paradox - 1.0)});
  return tolerance_check("reference_coherent_cancellation", err, 1e-12);
}

CheckResult check_composition_agreement() {
  Rng rng(2024001);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(rng() % 8);
    const CircuitConfig cfg(d, random_splitter(rng), random_operator(d, rng),
                            random_operator(d, rng));
    const State psi = random_state(d, rng, false);
    const State chi = random_state(d, rng, false);
    const PassResult staged = two_input_pass(cfg, psi, chi);
    const FormulaPass formula = closed_form(cfg, psi, chi);
    worst = std::max({worst, max_component_diff(staged.psi3, formula.psi3),
                      max_component_diff(staged.psi4, formula.psi4)});
  }
  return tolerance_check("composition_formula_agreement", worst, 1e-10);
}

CheckResult check_norm_conservation() {
  Rng rng(2024002);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(rng() % 8);
    const CircuitConfig cfg(d, random_splitter(rng), random_unitary(d, rng),
                            random_unitary(d, rng));
    const State psi = random_state(d, rng, false);
    const State chi = random_state(d, rng, false);
    const PassResult staged = two_input_pass(cfg, psi, chi);
    const double in_total = norm_sq(psi) + norm_sq(chi);
    const double out_total = norm_sq(staged.psi3) + norm_sq(staged.psi4);
    worst = std::max(worst, std::abs(in_total - out_total));
  }
  return tolerance_check("norm_conservation", worst, 1e-10);
}

CheckResult check_cancellation_generality() {
  Rng rng(2024003);
  double worst = 0.0;
  for (const std::size_t d : {std::size_t{1}, std::size_t{2}, std::size_t{4},
                              std::size_t{8}}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto cfg = default_qtltt_params(d, random_unitary(d, rng));
      const State psi = random_state(d, rng);
      const auto report =
          run_two_pass_protocol(cfg, psi, Coherent{}, 11, Outcome::Left);
      worst = std::max(worst, norm(report.second_pass->psi4));
    }
  }
  return tolerance_check("coherent_cancellation_generality", worst, 1e-10);
}

CheckResult check_dephasing_law() {
  Rng rng(2024004);
  const std::size_t d = 3;
  const auto cfg = default_qtltt_params(d, random_unitary(d, rng));
  const State psi = random_state(d, rng);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / 99.0;
    const auto report =
        run_two_pass_protocol(cfg, psi, Dephased{phi}, 13, Outcome::Left);
    const double p_left = born_probabilities(*report.second_pass).p_left;
    worst = std::max(worst, std::abs(p_left - 0.5 * (1.0 - std::cos(phi))));
  }
  return tolerance_check("dephasing_closed_form", worst, 1e-10);
}

CheckResult check_loop_agreement() {
  Rng rng(2024005);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(rng() % 8);
    const auto cfg = default_qtltt_params(d, random_unitary(d, rng));
    const Operator m =
        (0.2 + uniform_unit(rng)) * random_unitary(d, rng);
    const State psi = random_state(d, rng);
    const LoopSolution direct = solve_established_loop(cfg, m, psi);
    const LoopSolution iterated =
        iterate_established_loop(cfg, m, psi, 1e-12, 2000);
    worst = std::max(worst, max_component_diff(direct.psi4, iterated.psi4));
  }
  return tolerance_check("loop_direct_vs_iterative", worst, 1e-10);
}

CheckResult check_loop_reference_value() {
  const auto cfg = default_qtltt_params(1, Operator::identity(1));
  const LoopSolution direct =
      solve_established_loop(cfg, Operator::identity(1), State::basis(1, 0));
  const State expected(std::vector<Complex>{{0.4, -0.2}});
  return tolerance_check("loop_reference_value",
                         max_component_diff(direct.psi4, expected), 1e-12);
}

CheckResult check_loop_singular_detection() {
  const auto cfg = default_qtltt_params(1, Operator::identity(1));
  const Operator m = Complex{-1.0, -1.0} * Operator::identity(1);
  try {
    solve_established_loop(cfg, m, State::basis(1, 0));
  } catch (const SingularError&) {
    return {"loop_singular_detection", true, "SingularError raised"};
  }
  return {"loop_singular_detection", false, "singular system not detected"};
}

CheckResult check_monte_carlo_frequency() {
  const auto cfg = default_qtltt_params(1, Operator::identity(1));
  const auto report =
      monte_carlo(cfg, State::basis(1, 0), Coherent{}, 100000, 424242, 1);
  // 3-sigma binomial band around 1/2.
  const bool freq_ok = std::abs(report.trigger_frequency - 0.5) <= 0.005;
  const bool paradox_ok =
      report.mean_paradox.has_value() && *report.mean_paradox == 1.0;
  return {"monte_carlo_reference", freq_ok && paradox_ok,
          "trigger_frequency=" + scientific(report.trigger_frequency)};
}

CheckResult check_determinism() {
  Rng rng(2024006);
  const std::size_t d = 2;
  const auto cfg = default_qtltt_params(d, random_unitary(d, rng));
  const State psi = random_state(d, rng);
  const auto a = run_two_pass_protocol(cfg, psi, DephasedRandom{}, 99);
  const auto b = run_two_pass_protocol(cfg, psi, DephasedRandom{}, 99);
  const bool ok = a.first_outcome == b.first_outcome &&
                  a.triggered == b.triggered &&
                  a.injection_phase == b.injection_phase &&
                  a.injected_chi == b.injected_chi &&
                  a.paradox == b.paradox;
  return {"protocol_determinism", ok,
          ok ? "identical reports for identical seeds" : "reports differ"};
}

}  // namespace

std::vector<CheckResult> run_verification_suite() {
  return {
      check_reference_split(),
      check_reference_born(),
      check_coherent_cancellation_reference(),
      check_composition_agreement(),
      check_norm_conservation(),
      check_cancellation_generality(),
      check_dephasing_law(),
      check_loop_agreement(),
      check_loop_reference_value(),
      check_loop_singular_detection(),
      check_monte_carlo_frequency(),
      check_determinism(),
  };
}

}  // namespace chronoloop
