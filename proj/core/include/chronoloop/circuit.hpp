#pragma once

#include <string>
#include <vector>

#include "chronoloop/algebra.hpp"

namespace chronoloop {

/// Lossless two-port beam splitter with real transmission amplitude alpha and
/// real reflection amplitude beta. The element acts symmetrically on its two
/// faces with the convention
///
///   out_left  = alpha * in_right - i beta * in_left
///   out_right = -i beta * in_right + alpha * in_left
///
/// i.e. transmission carries a factor alpha and reflection a factor -i beta on
/// either face. See docs/model.md for why this convention is the one fixed by
/// the composed two-splitter outputs.
struct BeamSplitter {
  double alpha;
  double beta;

  /// Requires alpha, beta >= 0 and |alpha^2 + beta^2 - 1| <= 1e-12.
  BeamSplitter(double alpha, double beta);

  /// alpha = beta = 1/sqrt(2).
  static BeamSplitter balanced();
};

/// Full interferometer: dimension of the internal state, the (identical) two
/// splitters, and the channel propagators g1 (left) and g2 (right) acting
/// between t1 and t2.
struct CircuitConfig {
  std::size_t dim;
  BeamSplitter splitter;
  Operator g1;
  Operator g2;

  CircuitConfig(std::size_t dim, BeamSplitter splitter, Operator g1,
                Operator g2);

  /// Non-fatal validation notes. Propagators are allowed to be non-unitary,
  /// but norm conservation then fails, so the condition is worth surfacing.
  std::vector<std::string> warnings() const;
};

/// Amplitudes at each stage of one forward evolution t1 -> t2.
///
/// psi1 and psi2 are the left/right channel amplitudes just after splitter 1,
/// before the channel propagators act. psi3 is the right output and psi4 the
/// left output of splitter 2 at t2.
struct PassResult {
  State psi1;
  State psi2;
  State psi3;
  State psi4;
  std::string t1 = "t1";
  std::string t2 = "t2";
};

struct SplitterPorts {
  State out_left;
  State out_right;
};

/// One application of the splitter to a pair of incoming channel states.
/// The scalar amplitudes act entrywise on the internal components.
SplitterPorts beam_splitter_action(const BeamSplitter& bs,
                                   const State& in_right,
                                   const State& in_left);

/// Forward evolution with a single input psi entering splitter 1 from the
/// right. Equivalent to two_input_pass with a zero left input.
PassResult open_loop_pass(const CircuitConfig& cfg, const State& psi);

/// Forward evolution with psi entering from the right and chi entering from
/// the left at t1. Staged as splitter 1 -> channel propagation -> splitter 2;
/// the closed forms are
///
///   psi3 = (a^2 g1 - b^2 g2) psi - i a b (g1 + g2) chi
///   psi4 = -i a b (g1 + g2) psi + (a^2 g2 - b^2 g1) chi
PassResult two_input_pass(const CircuitConfig& cfg, const State& psi,
                          const State& chi);

/// Reference parameter set: alpha = beta = 1/sqrt(2), g1 = g, g2 = i*g. With
/// these values a single-input pass sends ((1-i)/2)*g*psi into both outputs,
/// a 50:50 split.
CircuitConfig default_qtltt_params(std::size_t dim, const Operator& g);

}  // namespace chronoloop
