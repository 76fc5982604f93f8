#include "chronoloop/timetravel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "chronoloop/errors.hpp"

namespace chronoloop {

State coherent_injection(const State& psi_t1) { return psi_t1; }

State dephased_injection(const State& psi_t1, double phi) {
  if (!std::isfinite(phi)) {
    throw std::invalid_argument("dephasing angle must be finite");
  }
  return Complex{std::cos(phi), std::sin(phi)} * psi_t1;
}

namespace {

struct InjectionResolver {
  const State& psi;
  Rng& rng;
  std::optional<double>& phase_out;

  State operator()(const Coherent&) const { return coherent_injection(psi); }
  State operator()(const Dephased& mode) const {
    phase_out = mode.phi;
    return dephased_injection(psi, mode.phi);
  }
  State operator()(const DephasedRandom&) const {
    const double phi = 2.0 * std::numbers::pi * uniform_unit(rng);
    phase_out = phi;
    return dephased_injection(psi, phi);
  }
  State operator()(const ExplicitM& mode) const {
    return apply(mode.m, mode.psi_t);
  }
};

}  // namespace

TwoPassReport run_two_pass_protocol(const CircuitConfig& cfg, const State& psi,
                                    const InjectionMode& mode,
                                    std::uint64_t rng_seed,
                                    std::optional<Outcome> force_outcome) {
  if (norm_sq(psi) == 0.0) {
    throw std::invalid_argument(
        "two-pass protocol requires a nonzero input state");
  }

  TwoPassReport report;
  report.first_pass = open_loop_pass(cfg, psi);
  // Throws ZeroOutputError when collapse is undefined, forced or not.
  born_probabilities(report.first_pass);

  Rng rng(rng_seed);
  report.first_outcome = force_outcome ? *force_outcome
                                       : collapse(report.first_pass, rng);
  report.triggered = report.first_outcome == Outcome::Left;
  if (!report.triggered) {
    return report;
  }

  report.injected_chi =
      std::visit(InjectionResolver{psi, rng, report.injection_phase}, mode);
  report.second_pass = two_input_pass(cfg, psi, *report.injected_chi);
  report.paradox = paradox_measure(report);
  return report;
}

double paradox_measure(const TwoPassReport& report) {
  if (!report.second_pass) {
    throw std::logic_error(
        "paradox measure requires a second pass in the report");
  }
  return 1.0 - born_probabilities(*report.second_pass).p_left;
}

}  // namespace chronoloop
