#include "chronoloop/measurement.hpp"

#include "chronoloop/errors.hpp"

namespace chronoloop {

BornProbabilities born_probabilities(const PassResult& pass) {
  const double right = norm_sq(pass.psi3);
  const double left = norm_sq(pass.psi4);
  const double total = right + left;
  if (total == 0.0) {
    throw ZeroOutputError(
        "both interferometer outputs are zero; collapse is undefined");
  }
  const double p_right = right / total;
  return {p_right, 1.0 - p_right};
}

Outcome collapse(const PassResult& pass, Rng& rng) {
  const BornProbabilities probs = born_probabilities(pass);
  return uniform_unit(rng) < probs.p_left ? Outcome::Left : Outcome::Right;
}

}  // namespace chronoloop
