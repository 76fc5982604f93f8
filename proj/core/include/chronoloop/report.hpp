#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chronoloop/config.hpp"
#include "chronoloop/loop_solver.hpp"
#include "chronoloop/measurement.hpp"
#include "chronoloop/timetravel.hpp"

namespace chronoloop {

/// %.16e rendering (17 significant digits): exact double round-trip and
/// locale-independent. All floats in reports and CSV output go through here.
std::string format_double(double value);

/// Minimal deterministic JSON emitter: keys stay in insertion order and
/// numbers are formatted explicitly, so identical inputs give identical
/// bytes.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view name);
  JsonWriter& value(std::string_view text);
  // A char* must not decay to the bool overload.
  JsonWriter& value(const char* text) { return value(std::string_view(text)); }
  JsonWriter& value(double number);
  JsonWriter& value(std::uint64_t number);
  JsonWriter& value(bool flag);
  JsonWriter& null();

  const std::string& str() const { return out_; }

 private:
  void separate();

  std::string out_;
  std::vector<bool> first_in_scope_;
  bool after_key_ = false;
};

void write_state(JsonWriter& w, const State& s);
void write_pass_result(JsonWriter& w, const PassResult& pass);

/// JSON report for the two-pass subcommand.
std::string render_two_pass_report(const RunConfig& config,
                                   const TwoPassReport& report, bool forced);

/// JSON report for the loop-solve subcommand.
std::string render_loop_report(const RunConfig& config,
                               const LoopSolution& solution);

/// JSON report for the monte-carlo subcommand.
std::string render_monte_carlo_report(const RunConfig& config,
                                      const EnsembleReport& report);

/// CSV for the phase-sweep subcommand: header `phi,p_left_second,paradox`,
/// `points` rows with phi evenly spaced on [0, 2pi], values from direct
/// evaluation of the dephased second pass. Floats use format_double and
/// rows end with \n.
std::string render_phase_sweep_csv(const CircuitConfig& cfg, const State& psi,
                                   int points);

}  // namespace chronoloop
