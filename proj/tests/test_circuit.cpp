#include <doctest.h>

#include <cmath>

#include "chronoloop/circuit.hpp"
#include "chronoloop/random.hpp"
#include "support/oracles.hpp"

using namespace chronoloop;
using chronoloop::testing::closed_form_pass;
using chronoloop::testing::max_component_diff;
using chronoloop::testing::path_sum_pass;

namespace {

const double kInvSqrt2 = std::sqrt(0.5);

State cvec(std::vector<Complex> values) { return State(std::move(values)); }

}  // namespace

TEST_SUITE("circuit") {

TEST_CASE("beam splitter construction validates the amplitudes") {
  CHECK_THROWS_AS(BeamSplitter(0.8, 0.7), std::invalid_argument);
  CHECK_THROWS_AS(BeamSplitter(-1.0, 0.0), std::invalid_argument);
  const BeamSplitter bs = BeamSplitter::balanced();
  CHECK(bs.alpha == doctest::Approx(kInvSqrt2).epsilon(1e-15));
}

TEST_CASE("beam splitter action: balanced, transmissive, symmetric") {
  const BeamSplitter balanced = BeamSplitter::balanced();
  const auto ports = beam_splitter_action(balanced, cvec({{1, 0}}), State(1));
  CHECK(max_component_diff(ports.out_left, cvec({{kInvSqrt2, 0}})) <= 1e-15);
  CHECK(max_component_diff(ports.out_right, cvec({{0, -kInvSqrt2}})) <=
        1e-15);

  const BeamSplitter open(1.0, 0.0);
  const State x = cvec({{0.3, 0.4}});
  const State y = cvec({{-0.1, 0.9}});
  const auto through = beam_splitter_action(open, x, y);
  CHECK(through.out_left == x);
  CHECK(through.out_right == y);

  const auto same =
      beam_splitter_action(balanced, cvec({{1, 0}}), cvec({{1, 0}}));
  CHECK(max_component_diff(same.out_left, cvec({{kInvSqrt2, -kInvSqrt2}})) <=
        1e-15);
  CHECK(same.out_left == same.out_right);
}

TEST_CASE("open loop pass reproduces the reference equal split") {
  const auto cfg = default_qtltt_params(1, Operator::identity(1));
  const PassResult pass = open_loop_pass(cfg, State::basis(1, 0));
  const State expected = cvec({{0.5, -0.5}});
  CHECK(max_component_diff(pass.psi3, expected) <= 1e-12);
  CHECK(max_component_diff(pass.psi4, expected) <= 1e-12);
  // Intermediates are the post-splitter-1 amplitudes.
  CHECK(max_component_diff(pass.psi1, cvec({{kInvSqrt2, 0}})) <= 1e-15);
  CHECK(max_component_diff(pass.psi2, cvec({{0, -kInvSqrt2}})) <= 1e-15);
  CHECK(pass.t1 == "t1");
  CHECK(pass.t2 == "t2");
}

TEST_CASE("fully transmissive circuit forwards the input") {
  const CircuitConfig cfg(1, BeamSplitter(1.0, 0.0), Operator::identity(1),
                          Operator::identity(1));
  const PassResult pass = open_loop_pass(cfg, cvec({{1, 0}}));
  CHECK(pass.psi3 == cvec({{1, 0}}));
  CHECK(pass.psi4 == State(1));
}

TEST_CASE("two input pass: paradox cancellation point and phase pi") {
  const auto cfg = default_qtltt_params(1, Operator::identity(1));
  const State one = State::basis(1, 0);

  const PassResult coherent = two_input_pass(cfg, one, one);
  CHECK(max_component_diff(coherent.psi3, cvec({{1, -1}})) <= 1e-12);
  CHECK(norm(coherent.psi4) <= 1e-12);

  const PassResult flipped = two_input_pass(cfg, one, cvec({{-1, 0}}));
  CHECK(norm(flipped.psi3) <= 1e-12);
  CHECK(max_component_diff(flipped.psi4, cvec({{1, -1}})) <= 1e-12);
}

TEST_CASE("zero left input reduces exactly to the open loop pass") {
  Rng rng(201);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 1 + rng() % 8;
    const CircuitConfig cfg(d, random_splitter(rng), random_operator(d, rng),
                            random_operator(d, rng));
    const State psi = random_state(d, rng, false);
    const PassResult with_zero = two_input_pass(cfg, psi, State(d));
    const PassResult open = open_loop_pass(cfg, psi);
    CHECK(with_zero.psi1 == open.psi1);
    CHECK(with_zero.psi2 == open.psi2);
    CHECK(with_zero.psi3 == open.psi3);
    CHECK(with_zero.psi4 == open.psi4);
  }
}

TEST_CASE("default reference parameters") {
  const auto cfg1 = default_qtltt_params(1, Operator::identity(1));
  CHECK(cfg1.g1 == Operator::identity(1));
  CHECK(cfg1.g2(0, 0) == Complex{0, 1});

  const auto cfg2 = default_qtltt_params(2, Operator::identity(2));
  CHECK(cfg2.g2 == Complex{0, 1} * Operator::identity(2));
}

TEST_CASE("reference structure splits any unitary evenly") {
  Rng rng(202);
  for (const std::size_t d : {1u, 2u, 3u, 5u, 8u}) {
    const Operator g = random_unitary(d, rng);
    const auto cfg = default_qtltt_params(d, g);
    const State psi = random_state(d, rng);
    const PassResult pass = open_loop_pass(cfg, psi);
    const State expected = (Complex{0.5, -0.5} * apply(g, psi));
    CHECK(max_component_diff(pass.psi3, expected) <= 1e-12);
    CHECK(max_component_diff(pass.psi4, expected) <= 1e-12);
  }
}

TEST_CASE("staged evaluation matches closed forms and the path sum") {
  Rng rng(203);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + rng() % 8;
    const CircuitConfig cfg(d, random_splitter(rng), random_operator(d, rng),
                            random_operator(d, rng));
    const State psi = random_state(d, rng, false);
    const State chi = random_state(d, rng, false);
    const PassResult staged = two_input_pass(cfg, psi, chi);
    const auto formula = closed_form_pass(cfg, psi, chi);
    const auto paths = path_sum_pass(cfg, psi, chi);
    CHECK(max_component_diff(staged.psi3, formula.psi3) <= 1e-10);
    CHECK(max_component_diff(staged.psi4, formula.psi4) <= 1e-10);
    CHECK(max_component_diff(staged.psi3, paths.psi3) <= 1e-12);
    CHECK(max_component_diff(staged.psi4, paths.psi4) <= 1e-12);
  }
}

TEST_CASE("norm is conserved with unitary propagators") {
  Rng rng(204);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + rng() % 8;
    const CircuitConfig cfg(d, random_splitter(rng), random_unitary(d, rng),
                            random_unitary(d, rng));
    const State psi = random_state(d, rng, false);
    const State chi = random_state(d, rng, false);
    const PassResult pass = two_input_pass(cfg, psi, chi);
    const double in_total = norm_sq(psi) + norm_sq(chi);
    const double out_total = norm_sq(pass.psi3) + norm_sq(pass.psi4);
    CHECK(std::abs(in_total - out_total) <= 1e-10);
  }
}

TEST_CASE("pass is linear in each input separately") {
  Rng rng(205);
  const std::size_t d = 4;
  const CircuitConfig cfg(d, random_splitter(rng), random_operator(d, rng),
                          random_operator(d, rng));
  for (int trial = 0; trial < 25; ++trial) {
    const State psi_a = random_state(d, rng, false);
    const State psi_b = random_state(d, rng, false);
    const State chi = random_state(d, rng, false);
    const Complex c1 = normal_complex(rng);
    const Complex c2 = normal_complex(rng);

    // Linear in psi with chi pinned to zero, and in chi with psi zero.
    const PassResult combined =
        two_input_pass(cfg, c1 * psi_a + c2 * psi_b, State(d));
    const PassResult part_a = two_input_pass(cfg, psi_a, State(d));
    const PassResult part_b = two_input_pass(cfg, psi_b, State(d));
    CHECK(max_component_diff(combined.psi3,
                             c1 * part_a.psi3 + c2 * part_b.psi3) <= 1e-11);
    CHECK(max_component_diff(combined.psi4,
                             c1 * part_a.psi4 + c2 * part_b.psi4) <= 1e-11);

    const PassResult chi_scaled = two_input_pass(cfg, State(d), c1 * chi);
    const PassResult chi_unit = two_input_pass(cfg, State(d), chi);
    CHECK(max_component_diff(chi_scaled.psi3, c1 * chi_unit.psi3) <= 1e-11);
    CHECK(max_component_diff(chi_scaled.psi4, c1 * chi_unit.psi4) <= 1e-11);
  }
}

TEST_CASE("non-unitary propagators produce warnings, not errors") {
  const CircuitConfig good(1, BeamSplitter::balanced(), Operator::identity(1),
                           Complex{0, 1} * Operator::identity(1));
  CHECK(good.warnings().empty());
  const CircuitConfig lossy(1, BeamSplitter::balanced(),
                            0.5 * Operator::identity(1),
                            Operator::identity(1));
  CHECK(lossy.warnings().size() == 1);
}

TEST_CASE("dimension mismatches are rejected") {
  const auto cfg = default_qtltt_params(2, Operator::identity(2));
  CHECK_THROWS_AS(open_loop_pass(cfg, State(3)), std::invalid_argument);
  CHECK_THROWS_AS(two_input_pass(cfg, State(2), State(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      CircuitConfig(2, BeamSplitter::balanced(), Operator::identity(3),
                    Operator::identity(2)),
      std::invalid_argument);
}

}  // TEST_SUITE
