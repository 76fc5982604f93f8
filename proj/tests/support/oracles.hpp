#pragma once

// Test-only reference evaluations, kept independent of the staged circuit
// code they are used to check. Only the algebra primitives are reused here.

#include <algorithm>
#include <cmath>

#include "chronoloop/algebra.hpp"
#include "chronoloop/circuit.hpp"

namespace chronoloop::testing {

struct OraclePass {
  State psi3;
  State psi4;
};

/// Closed forms of the two outputs, evaluated as operator expressions.
inline OraclePass closed_form_pass(const CircuitConfig& cfg, const State& psi,
                                   const State& chi) {
  const double a2 = cfg.splitter.alpha * cfg.splitter.alpha;
  const double b2 = cfg.splitter.beta * cfg.splitter.beta;
  const Complex minus_i_ab{0.0, -cfg.splitter.alpha * cfg.splitter.beta};
  OraclePass out;
  out.psi3 = apply(a2 * cfg.g1 - b2 * cfg.g2, psi) +
             minus_i_ab * apply(cfg.g1 + cfg.g2, chi);
  out.psi4 = minus_i_ab * apply(cfg.g1 + cfg.g2, psi) +
             apply(a2 * cfg.g2 - b2 * cfg.g1, chi);
  return out;
}

/// Explicit enumeration of the four interferometer paths per output: each
/// input crosses splitter 1 into one arm (transmission alpha or reflection
/// -i beta), propagates, and exits splitter 2 the same way.
inline OraclePass path_sum_pass(const CircuitConfig& cfg, const State& psi,
                                const State& chi) {
  const Complex t{cfg.splitter.alpha, 0.0};
  const Complex r{0.0, -cfg.splitter.beta};
  OraclePass out;
  // Right output: left arm exits by transmission, right arm by reflection.
  out.psi3 = t * apply(cfg.g1, t * psi)    // psi -> left arm -> through
             + r * apply(cfg.g2, r * psi)  // psi -> right arm -> reflect
             + t * apply(cfg.g1, r * chi)  // chi -> left arm -> through
             + r * apply(cfg.g2, t * chi); // chi -> right arm -> reflect
  // Left output: left arm exits by reflection, right arm by transmission.
  out.psi4 = r * apply(cfg.g1, t * psi)    //
             + t * apply(cfg.g2, r * psi)  //
             + r * apply(cfg.g1, r * chi)  //
             + t * apply(cfg.g2, t * chi);
  return out;
}

inline double max_component_diff(const State& a, const State& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

/// Renormalized second-pass left probability under dephased injection with
/// the reference parameter structure, derived by substituting
/// chi = e^{i phi} psi into the left-output closed form.
inline double dephased_p_left(double phi) {
  return 0.5 * (1.0 - std::cos(phi));
}

}  // namespace chronoloop::testing
