#pragma once

#include <cstdint>
#include <optional>

#include "chronoloop/algebra.hpp"
#include "chronoloop/circuit.hpp"

namespace chronoloop {

/// Self-consistent steady solution of the circuit with the feedback arm
/// permanently established. The launched state is identified with the left
/// output (a modeling choice of this simulator), which turns the second-pass
/// left-output relation into the linear fixed-point condition
///
///   psi4 = -i a b (g1 + g2) psi + (a^2 g2 - b^2 g1) m psi4
///
/// psi3 is then derived from the right-output relation with chi = m * psi4;
/// no separate constraint is imposed on it.
struct LoopSolution {
  enum class Method { Direct, Iterative };

  State psi4;
  State psi3;
  double residual = 0.0;
  Method method = Method::Direct;
  std::optional<int> iterations;  // set for the iterative method
};

/// Solves [I - (a^2 g2 - b^2 g1) m] psi4 = -i a b (g1 + g2) psi directly via
/// solve_linear. Throws SingularError when the system has no unique
/// solution at these parameters.
LoopSolution solve_established_loop(const CircuitConfig& cfg,
                                    const Operator& m, const State& psi,
                                    double cond_limit = kCondLimit);

/// Fixed-point iteration psi4 <- drive + feedback * psi4 started from the
/// zero state ("no time traveller yet"). Stops once the update norm or the
/// residual norm drops below tol; the residual clause lets a feedback-free
/// system finish in one iteration. Throws NoConvergenceError at max_iter,
/// as expected for non-contractive feedback maps.
LoopSolution iterate_established_loop(const CircuitConfig& cfg,
                                      const Operator& m, const State& psi,
                                      double tol, int max_iter);

}  // namespace chronoloop
