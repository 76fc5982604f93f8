#include <doctest.h>

#include <cmath>
#include <numbers>

#include "chronoloop/errors.hpp"
#include "chronoloop/random.hpp"
#include "chronoloop/timetravel.hpp"
#include "support/oracles.hpp"

using namespace chronoloop;
using chronoloop::testing::dephased_p_left;
using chronoloop::testing::max_component_diff;

namespace {

State cvec(std::vector<Complex> values) { return State(std::move(values)); }

CircuitConfig reference_circuit() {
  return default_qtltt_params(1, Operator::identity(1));
}

}  // namespace

TEST_SUITE("timetravel") {

TEST_CASE("coherent injection returns the input state itself") {
  CHECK(coherent_injection(cvec({{1, 0}})) == cvec({{1, 0}}));
  CHECK(coherent_injection(cvec({{0, 0}, {0, 1}})) == cvec({{0, 0}, {0, 1}}));
}

TEST_CASE("dephased injection applies a pure phase") {
  CHECK(dephased_injection(cvec({{1, 0}}), 0.0) == cvec({{1, 0}}));
  const State pi_flip = dephased_injection(cvec({{1, 0}}), std::numbers::pi);
  CHECK(std::abs(pi_flip[0] - Complex{-1, 0}) <= 1e-15);
  const State quarter =
      dephased_injection(cvec({{1, 0}}), std::numbers::pi / 2);
  CHECK(std::abs(quarter[0] - Complex{0, 1}) <= 1e-15);
  CHECK_THROWS_AS(dephased_injection(cvec({{1, 0}}), std::nan("")),
                  std::invalid_argument);
}

TEST_CASE("forced Left coherent run is a full contradiction") {
  const auto report = run_two_pass_protocol(reference_circuit(),
                                            State::basis(1, 0), Coherent{},
                                            1234, Outcome::Left);
  CHECK(report.triggered);
  REQUIRE(report.second_pass.has_value());
  CHECK(max_component_diff(report.second_pass->psi3, cvec({{1, -1}})) <=
        1e-12);
  CHECK(norm(report.second_pass->psi4) <= 1e-12);
  REQUIRE(report.paradox.has_value());
  CHECK(*report.paradox == 1.0);
  CHECK(report.injected_chi == State::basis(1, 0));
}

TEST_CASE("forced Right run never opens the channel") {
  const auto report = run_two_pass_protocol(reference_circuit(),
                                            State::basis(1, 0), Coherent{},
                                            1234, Outcome::Right);
  CHECK_FALSE(report.triggered);
  CHECK_FALSE(report.second_pass.has_value());
  CHECK_FALSE(report.injected_chi.has_value());
  CHECK_FALSE(report.paradox.has_value());
  CHECK_THROWS_AS(paradox_measure(report), std::logic_error);
}

TEST_CASE("dephased runs follow the closed-form left probability") {
  // At phi = pi/2 the renormalized left probability is (1 - cos(pi/2))/2
  // = 1/2, and at pi it is 1 (full anti-cancellation).
  const auto quarter = run_two_pass_protocol(
      reference_circuit(), State::basis(1, 0),
      Dephased{std::numbers::pi / 2}, 1, Outcome::Left);
  const double p_left_quarter =
      born_probabilities(*quarter.second_pass).p_left;
  CHECK(std::abs(p_left_quarter - 0.5) <= 1e-12);
  CHECK(std::abs(*quarter.paradox - 0.5) <= 1e-12);

  const auto pi_run =
      run_two_pass_protocol(reference_circuit(), State::basis(1, 0),
                            Dephased{std::numbers::pi}, 1, Outcome::Left);
  CHECK(std::abs(*pi_run.paradox - 0.0) <= 1e-12);

  const auto third =
      run_two_pass_protocol(reference_circuit(), State::basis(1, 0),
                            Dephased{std::numbers::pi / 3}, 1, Outcome::Left);
  CHECK(std::abs(*third.paradox - 0.75) <= 1e-12);
}

TEST_CASE("coherent cancellation holds for any unitary and dimension") {
  Rng rng(301);
  for (const std::size_t d : {1u, 2u, 4u, 8u}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto cfg = default_qtltt_params(d, random_unitary(d, rng));
      const State psi = random_state(d, rng);
      const auto report =
          run_two_pass_protocol(cfg, psi, Coherent{}, 5, Outcome::Left);
      CHECK(norm(report.second_pass->psi4) <= 1e-12);
      CHECK(*report.paradox == 1.0);
    }
  }
}

TEST_CASE("dephasing law is independent of the unitary and the dimension") {
  Rng rng(302);
  const auto cfg = default_qtltt_params(5, random_unitary(5, rng));
  const State psi = random_state(5, rng);
  for (int k = 0; k < 120; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / 119.0;
    const auto report =
        run_two_pass_protocol(cfg, psi, Dephased{phi}, 6, Outcome::Left);
    const double p_left = born_probabilities(*report.second_pass).p_left;
    CHECK(std::abs(p_left - dephased_p_left(phi)) <= 1e-10);
  }
}

TEST_CASE("paradox measure decreases monotonically on [0, pi]") {
  const auto cfg = reference_circuit();
  double previous = 2.0;
  for (int k = 0; k <= 60; ++k) {
    const double phi = std::numbers::pi * k / 60.0;
    const auto report = run_two_pass_protocol(cfg, State::basis(1, 0),
                                              Dephased{phi}, 7, Outcome::Left);
    CHECK(*report.paradox <= previous + 1e-12);
    previous = *report.paradox;
  }
}

TEST_CASE("identical seeds reproduce the report exactly") {
  Rng rng(303);
  const auto cfg = default_qtltt_params(3, random_unitary(3, rng));
  const State psi = random_state(3, rng);
  for (const std::uint64_t seed : {0ull, 1ull, 77ull, 123456789ull}) {
    const auto a = run_two_pass_protocol(cfg, psi, DephasedRandom{}, seed);
    const auto b = run_two_pass_protocol(cfg, psi, DephasedRandom{}, seed);
    CHECK(a.first_outcome == b.first_outcome);
    CHECK(a.triggered == b.triggered);
    CHECK(a.injection_phase == b.injection_phase);
    CHECK(a.injected_chi == b.injected_chi);
    if (a.second_pass) {
      CHECK(a.second_pass->psi3 == b.second_pass->psi3);
      CHECK(a.second_pass->psi4 == b.second_pass->psi4);
    }
    CHECK(a.paradox == b.paradox);
  }
}

TEST_CASE("explicit feedback propagator mode") {
  const auto cfg = reference_circuit();
  // m * psi_t equal to psi reproduces the coherent cancellation.
  const ExplicitM coherent_like{2.0 * Operator::identity(1),
                                cvec({{0.5, 0}})};
  const auto report = run_two_pass_protocol(cfg, State::basis(1, 0),
                                            coherent_like, 9, Outcome::Left);
  CHECK(norm(report.second_pass->psi4) <= 1e-12);
  CHECK(*report.paradox == 1.0);

  const ExplicitM mismatched{Operator::identity(2), State(2)};
  CHECK_THROWS_AS(run_two_pass_protocol(cfg, State::basis(1, 0), mismatched,
                                        9, Outcome::Left),
                  std::invalid_argument);
}

TEST_CASE("zero input and zero outputs are rejected") {
  const auto cfg = reference_circuit();
  CHECK_THROWS_AS(run_two_pass_protocol(cfg, State(1), Coherent{}, 1),
                  std::invalid_argument);

  const CircuitConfig dead(1, BeamSplitter::balanced(), Operator::zero(1),
                           Operator::zero(1));
  CHECK_THROWS_AS(
      run_two_pass_protocol(dead, State::basis(1, 0), Coherent{}, 1),
      ZeroOutputError);
}

TEST_CASE("unforced collapse uses the seeded generator") {
  const auto cfg = reference_circuit();
  int left = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto report =
        run_two_pass_protocol(cfg, State::basis(1, 0), Coherent{}, seed);
    left += report.triggered ? 1 : 0;
    if (report.triggered) {
      CHECK(*report.paradox == 1.0);
    }
  }
  // 3 sigma around 100 for a fair coin over 200 runs is about +/- 21.
  CHECK(left > 70);
  CHECK(left < 130);
}

}  // TEST_SUITE
