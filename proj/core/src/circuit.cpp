#include "chronoloop/circuit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chronoloop {

BeamSplitter::BeamSplitter(double alpha, double beta)
    : alpha(alpha), beta(beta) {
  if (!(alpha >= 0.0) || !(beta >= 0.0)) {
    throw std::invalid_argument(
        "beam splitter amplitudes must be non-negative");
  }
  if (std::abs(alpha * alpha + beta * beta - 1.0) > 1e-12) {
    throw std::invalid_argument(
        "beam splitter amplitudes must satisfy alpha^2 + beta^2 = 1");
  }
}

BeamSplitter BeamSplitter::balanced() {
  const double inv_sqrt2 = std::sqrt(0.5);
  return BeamSplitter(inv_sqrt2, inv_sqrt2);
}

CircuitConfig::CircuitConfig(std::size_t dim, BeamSplitter splitter,
                             Operator g1, Operator g2)
    : dim(dim), splitter(splitter), g1(std::move(g1)), g2(std::move(g2)) {
  if (dim == 0) {
    throw std::invalid_argument("circuit dimension must be positive");
  }
  if (this->g1.dim() != dim || this->g2.dim() != dim) {
    throw std::invalid_argument(
        "channel propagators must match the circuit dimension");
  }
}

std::vector<std::string> CircuitConfig::warnings() const {
  std::vector<std::string> notes;
  if (!is_unitary(g1)) {
    notes.push_back("propagator g1 is not unitary; norm is not conserved");
  }
  if (!is_unitary(g2)) {
    notes.push_back("propagator g2 is not unitary; norm is not conserved");
  }
  return notes;
}

SplitterPorts beam_splitter_action(const BeamSplitter& bs,
                                   const State& in_right,
                                   const State& in_left) {
  if (in_right.size() != in_left.size()) {
    throw std::invalid_argument(
        "beam splitter inputs must have equal dimension");
  }
  const Complex reflection{0.0, -bs.beta};
  State out_left(in_right.size());
  State out_right(in_right.size());
  for (std::size_t i = 0; i < in_right.size(); ++i) {
    out_left[i] = bs.alpha * in_right[i] + reflection * in_left[i];
    out_right[i] = reflection * in_right[i] + bs.alpha * in_left[i];
  }
  return {std::move(out_left), std::move(out_right)};
}

PassResult open_loop_pass(const CircuitConfig& cfg, const State& psi) {
  return two_input_pass(cfg, psi, State(cfg.dim));
}

PassResult two_input_pass(const CircuitConfig& cfg, const State& psi,
                          const State& chi) {
  if (psi.size() != cfg.dim || chi.size() != cfg.dim) {
    throw std::invalid_argument(
        "input states must match the circuit dimension");
  }
  auto [psi1, psi2] = beam_splitter_action(cfg.splitter, psi, chi);
  const State left_arm = apply(cfg.g1, psi1);
  const State right_arm = apply(cfg.g2, psi2);
  auto [out_left, out_right] =
      beam_splitter_action(cfg.splitter, right_arm, left_arm);
  PassResult result;
  result.psi1 = std::move(psi1);
  result.psi2 = std::move(psi2);
  result.psi3 = std::move(out_right);
  result.psi4 = std::move(out_left);
  return result;
}

CircuitConfig default_qtltt_params(std::size_t dim, const Operator& g) {
  if (g.dim() != dim) {
    throw std::invalid_argument("propagator must match the requested "
                                "dimension");
  }
  return CircuitConfig(dim, BeamSplitter::balanced(), g,
                       Complex{0.0, 1.0} * g);
}

}  // namespace chronoloop
