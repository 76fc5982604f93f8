#include "chronoloop/loop_solver.hpp"

#include <stdexcept>

#include "chronoloop/errors.hpp"

namespace chronoloop {

namespace {

struct LoopSystem {
  Operator feedback;  // (a^2 g2 - b^2 g1) m
  State drive;        // -i a b (g1 + g2) psi
};

LoopSystem build_system(const CircuitConfig& cfg, const Operator& m,
                        const State& psi) {
  if (m.dim() != cfg.dim || psi.size() != cfg.dim) {
    throw std::invalid_argument(
        "loop solver inputs must match the circuit dimension");
  }
  const double a2 = cfg.splitter.alpha * cfg.splitter.alpha;
  const double b2 = cfg.splitter.beta * cfg.splitter.beta;
  const Complex minus_i_ab{0.0, -cfg.splitter.alpha * cfg.splitter.beta};
  return {(a2 * cfg.g2 - b2 * cfg.g1) * m,
          minus_i_ab * apply(cfg.g1 + cfg.g2, psi)};
}

// Right output from the two-input closed form with chi = m * psi4.
State derive_psi3(const CircuitConfig& cfg, const Operator& m,
                  const State& psi, const State& psi4) {
  const double a2 = cfg.splitter.alpha * cfg.splitter.alpha;
  const double b2 = cfg.splitter.beta * cfg.splitter.beta;
  const Complex minus_i_ab{0.0, -cfg.splitter.alpha * cfg.splitter.beta};
  const State chi = apply(m, psi4);
  return apply(a2 * cfg.g1 - b2 * cfg.g2, psi) +
         minus_i_ab * apply(cfg.g1 + cfg.g2, chi);
}

double loop_residual(const LoopSystem& system, const State& psi4) {
  return norm(psi4 - (system.drive + apply(system.feedback, psi4)));
}

}  // namespace

LoopSolution solve_established_loop(const CircuitConfig& cfg,
                                    const Operator& m, const State& psi,
                                    double cond_limit) {
  const LoopSystem system = build_system(cfg, m, psi);
  const Operator lhs = Operator::identity(cfg.dim) - system.feedback;
  LoopSolution solution;
  solution.psi4 = solve_linear(lhs, system.drive, cond_limit);
  solution.psi3 = derive_psi3(cfg, m, psi, solution.psi4);
  solution.residual = loop_residual(system, solution.psi4);
  solution.method = LoopSolution::Method::Direct;
  return solution;
}

LoopSolution iterate_established_loop(const CircuitConfig& cfg,
                                      const Operator& m, const State& psi,
                                      double tol, int max_iter) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("iteration tolerance must be positive");
  }
  if (max_iter < 1) {
    throw std::invalid_argument("max_iter must be at least 1");
  }
  const LoopSystem system = build_system(cfg, m, psi);

  State current(cfg.dim);
  for (int k = 1; k <= max_iter; ++k) {
    const State next = system.drive + apply(system.feedback, current);
    const double update = norm(next - current);
    current = next;
    const double residual = loop_residual(system, current);
    if (update < tol || residual < tol) {
      LoopSolution solution;
      solution.psi4 = std::move(current);
      solution.psi3 = derive_psi3(cfg, m, psi, solution.psi4);
      solution.residual = residual;
      solution.method = LoopSolution::Method::Iterative;
      solution.iterations = k;
      return solution;
    }
  }
  throw NoConvergenceError(
      "fixed-point iteration did not converge; the feedback map is likely "
      "non-contractive");
}

}  // namespace chronoloop
