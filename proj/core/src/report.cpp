#include "chronoloop/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "chronoloop/version.hpp"

namespace chronoloop {

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.16e", value);
  return buffer;
}

JsonWriter& JsonWriter::begin_object() {
  separate();
  out_ += '{';
  first_in_scope_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += '}';
  first_in_scope_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separate();
  out_ += '[';
  first_in_scope_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += ']';
  first_in_scope_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view name) {
  separate();
  out_ += '"';
  out_ += name;
  out_ += "\":";
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view text) {
  separate();
  out_ += '"';
  for (const char c : text) {
    if (c == '"' || c == '\\') {
      out_ += '\\';
    }
    out_ += c;
  }
  out_ += '"';
  return *this;
}

JsonWriter& JsonWriter::value(double number) {
  separate();
  out_ += format_double(number);
  return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t number) {
  separate();
  out_ += std::to_string(number);
  return *this;
}

JsonWriter& JsonWriter::value(bool flag) {
  separate();
  out_ += flag ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::null() {
  separate();
  out_ += "null";
  return *this;
}

void JsonWriter::separate() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (first_in_scope_.empty()) {
    return;
  }
  if (first_in_scope_.back()) {
    first_in_scope_.back() = false;
  } else {
    out_ += ',';
  }
}

void write_state(JsonWriter& w, const State& s) {
  w.begin_array();
  for (const Complex& a : s) {
    w.begin_array();
    w.value(a.real());
    w.value(a.imag());
    w.end_array();
  }
  w.end_array();
}

void write_pass_result(JsonWriter& w, const PassResult& pass) {
  w.begin_object();
  w.key("t1").value(pass.t1);
  w.key("t2").value(pass.t2);
  w.key("psi1");
  write_state(w, pass.psi1);
  w.key("psi2");
  write_state(w, pass.psi2);
  w.key("psi3");
  write_state(w, pass.psi3);
  w.key("psi4");
  write_state(w, pass.psi4);
  w.end_object();
}

namespace {

void write_header(JsonWriter& w, std::string_view command,
                  const RunConfig& config) {
  w.key("tool").value(kToolName);
  w.key("version").value(kToolVersion);
  w.key("command").value(command);
  w.key("config_hash").value(config_hash(config));
  w.key("seed").value(config.seed);
}

void write_probabilities(JsonWriter& w, const BornProbabilities& probs) {
  w.begin_object();
  w.key("p_right").value(probs.p_right);
  w.key("p_left").value(probs.p_left);
  w.end_object();
}

void write_injection(JsonWriter& w, const RunConfig& config,
                     const TwoPassReport& report) {
  w.begin_object();
  switch (config.injection.mode) {
    case InjectionSpec::Mode::Coherent:
      w.key("mode").value("coherent");
      break;
    case InjectionSpec::Mode::Dephased:
      w.key("mode").value("dephased");
      break;
    case InjectionSpec::Mode::Explicit:
      w.key("mode").value("explicit");
      break;
  }
  if (report.injection_phase) {
    w.key("phi").value(*report.injection_phase);
  } else if (config.injection.phi) {
    w.key("phi").value(*config.injection.phi);
  }
  w.end_object();
}

}  // namespace

std::string render_two_pass_report(const RunConfig& config,
                                   const TwoPassReport& report, bool forced) {
  JsonWriter w;
  w.begin_object();
  write_header(w, "two-pass", config);
  w.key("first_pass");
  write_pass_result(w, report.first_pass);
  w.key("first_probabilities");
  write_probabilities(w, born_probabilities(report.first_pass));
  w.key("outcome").value(report.first_outcome == Outcome::Left ? "left"
                                                               : "right");
  w.key("forced").value(forced);
  w.key("triggered").value(report.triggered);
  w.key("injection");
  write_injection(w, config, report);
  w.key("injected_chi");
  if (report.injected_chi) {
    write_state(w, *report.injected_chi);
  } else {
    w.null();
  }
  w.key("second_pass");
  if (report.second_pass) {
    write_pass_result(w, *report.second_pass);
  } else {
    w.null();
  }
  w.key("second_probabilities");
  if (report.second_pass) {
    write_probabilities(w, born_probabilities(*report.second_pass));
  } else {
    w.null();
  }
  w.key("paradox");
  if (report.paradox) {
    w.value(*report.paradox);
  } else {
    w.null();
  }
  w.end_object();
  return w.str() + "\n";
}

std::string render_loop_report(const RunConfig& config,
                               const LoopSolution& solution) {
  JsonWriter w;
  w.begin_object();
  write_header(w, "loop-solve", config);
  w.key("method").value(solution.method == LoopSolution::Method::Direct
                            ? "direct"
                            : "iterative");
  w.key("iterations");
  if (solution.iterations) {
    w.value(static_cast<std::uint64_t>(*solution.iterations));
  } else {
    w.null();
  }
  w.key("psi4");
  write_state(w, solution.psi4);
  w.key("psi3");
  write_state(w, solution.psi3);
  w.key("residual").value(solution.residual);
  w.end_object();
  return w.str() + "\n";
}

std::string render_monte_carlo_report(const RunConfig& config,
                                      const EnsembleReport& report) {
  JsonWriter w;
  w.begin_object();
  write_header(w, "monte-carlo", config);
  w.key("trials").value(report.trials);
  w.key("left_count").value(report.left_count);
  w.key("right_count").value(report.right_count);
  w.key("trigger_frequency").value(report.trigger_frequency);
  w.key("mean_paradox");
  if (report.mean_paradox) {
    w.value(*report.mean_paradox);
  } else {
    w.null();
  }
  w.end_object();
  return w.str() + "\n";
}

std::string render_phase_sweep_csv(const CircuitConfig& cfg, const State& psi,
                                   int points) {
  if (points < 2) {
    throw std::invalid_argument("phase sweep needs at least 2 points");
  }
  std::string out = "phi,p_left_second,paradox\n";
  for (int k = 0; k < points; ++k) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) /
                       static_cast<double>(points - 1);
    const PassResult second =
        two_input_pass(cfg, psi, dephased_injection(psi, phi));
    const double p_left = born_probabilities(second).p_left;
    out += format_double(phi);
    out += ',';
    out += format_double(p_left);
    out += ',';
    out += format_double(1.0 - p_left);
    out += '\n';
  }
  return out;
}

}  // namespace chronoloop
