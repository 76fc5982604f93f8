#include "chronoloop/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chronoloop {

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial_index) {
  std::uint64_t z = seed + (trial_index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double normal_sample(Rng& rng) {
  // 1 - u lies in (0, 1], keeping the log finite.
  const double u1 = 1.0 - uniform_unit(rng);
  const double u2 = uniform_unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Complex normal_complex(Rng& rng) {
  const double re = normal_sample(rng);
  const double im = normal_sample(rng);
  return {re, im};
}

State random_state(std::size_t dim, Rng& rng, bool normalized) {
  State s(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    s[i] = normal_complex(rng);
  }
  if (normalized) {
    const double n = norm(s);
    if (n == 0.0) {
      return State::basis(dim, 0);
    }
    s = (1.0 / n) * s;
  }
  return s;
}

Operator random_operator(std::size_t dim, Rng& rng) {
  std::vector<Complex> entries(dim * dim);
  for (auto& e : entries) {
    e = normal_complex(rng);
  }
  return Operator(dim, std::move(entries));
}

Operator random_unitary(std::size_t dim, Rng& rng) {
  Operator q = random_operator(dim, rng);
  for (std::size_t col = 0; col < dim; ++col) {
    while (true) {
      // Two orthogonalization sweeps against the finished columns.
      for (int sweep = 0; sweep < 2; ++sweep) {
        for (std::size_t prev = 0; prev < col; ++prev) {
          Complex overlap{0.0, 0.0};
          for (std::size_t row = 0; row < dim; ++row) {
            overlap += std::conj(q(row, prev)) * q(row, col);
          }
          for (std::size_t row = 0; row < dim; ++row) {
            q(row, col) -= overlap * q(row, prev);
          }
        }
      }
      double len = 0.0;
      for (std::size_t row = 0; row < dim; ++row) {
        len += std::norm(q(row, col));
      }
      len = std::sqrt(len);
      if (len >= 1e-8) {
        for (std::size_t row = 0; row < dim; ++row) {
          q(row, col) /= len;
        }
        break;
      }
      // Gaussian columns are almost surely independent; draw a fresh column
      // on the measure-zero failure.
      for (std::size_t row = 0; row < dim; ++row) {
        q(row, col) = normal_complex(rng);
      }
    }
  }
  return q;
}

BeamSplitter random_splitter(Rng& rng) {
  const double theta =
      (0.5 * std::numbers::pi) * (0.02 + 0.96 * uniform_unit(rng));
  return BeamSplitter(std::cos(theta), std::sin(theta));
}

}  // namespace chronoloop
