#include "chronoloop/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "chronoloop/errors.hpp"
#include "chronoloop/report.hpp"

namespace chronoloop {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw ConfigError("config error: " + message);
}

const json& require_field(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) {
    fail(std::string("missing required field '") + name + "'");
  }
  return *it;
}

double parse_finite_number(const json& j, const std::string& where) {
  if (!j.is_number()) {
    fail(where + " must be a number");
  }
  const double value = j.get<double>();
  if (!std::isfinite(value)) {
    fail(where + " must be finite");
  }
  return value;
}

std::uint64_t parse_unsigned(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) {
    fail(where + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

Complex parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) {
    fail(where + " must be a [re, im] pair");
  }
  return {parse_finite_number(j[0], where + "[0]"),
          parse_finite_number(j[1], where + "[1]")};
}

State parse_state(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array() || j.size() != dim) {
    fail(where + " must be an array of " + std::to_string(dim) +
         " [re, im] pairs");
  }
  std::vector<Complex> amplitudes;
  amplitudes.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    amplitudes.push_back(
        parse_complex(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return State(std::move(amplitudes));
}

Operator parse_matrix(const json& j, std::size_t dim,
                      const std::string& where) {
  if (!j.is_array() || j.size() != dim) {
    fail(where + " must be a " + std::to_string(dim) + "x" +
         std::to_string(dim) + " matrix (row-major nested arrays)");
  }
  std::vector<Complex> entries;
  entries.reserve(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const json& row = j[r];
    const std::string row_where = where + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != dim) {
      fail(row_where + " must be a row of " + std::to_string(dim) +
           " [re, im] pairs");
    }
    for (std::size_t c = 0; c < dim; ++c) {
      entries.push_back(
          parse_complex(row[c], row_where + "[" + std::to_string(c) + "]"));
    }
  }
  return Operator(dim, std::move(entries));
}

InjectionSpec parse_injection(const json& j) {
  if (!j.is_object()) {
    fail("injection must be an object");
  }
  for (const auto& [key, unused] : j.items()) {
    if (key != "mode" && key != "phi") {
      fail("injection has unknown field '" + key + "'");
    }
  }
  const json& mode = require_field(j, "mode");
  if (!mode.is_string()) {
    fail("injection.mode must be a string");
  }
  InjectionSpec spec;
  const std::string name = mode.get<std::string>();
  if (name == "coherent") {
    spec.mode = InjectionSpec::Mode::Coherent;
  } else if (name == "dephased") {
    spec.mode = InjectionSpec::Mode::Dephased;
  } else if (name == "explicit") {
    spec.mode = InjectionSpec::Mode::Explicit;
  } else {
    fail("injection.mode must be \"coherent\", \"dephased\", or \"explicit\"");
  }
  if (j.contains("phi")) {
    if (spec.mode != InjectionSpec::Mode::Dephased) {
      fail("injection.phi is only meaningful for mode \"dephased\"");
    }
    spec.phi = parse_finite_number(j["phi"], "injection.phi");
  }
  return spec;
}

void write_complex(JsonWriter& w, const Complex& c) {
  w.begin_array();
  w.value(c.real());
  w.value(c.imag());
  w.end_array();
}

void write_matrix(JsonWriter& w, const Operator& op) {
  w.begin_array();
  for (std::size_t r = 0; r < op.dim(); ++r) {
    w.begin_array();
    for (std::size_t c = 0; c < op.dim(); ++c) {
      write_complex(w, op(r, c));
    }
    w.end_array();
  }
  w.end_array();
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    fail("top level must be an object");
  }
  static const char* known[] = {"dim", "alpha", "beta",      "g1",   "g2",
                                "m",   "psi",   "injection", "seed", "trials"};
  for (const auto& [key, unused] : j.items()) {
    bool ok = false;
    for (const char* name : known) {
      ok = ok || key == name;
    }
    if (!ok) {
      fail("unknown field '" + key + "'");
    }
  }

  RunConfig config;
  const std::uint64_t dim = parse_unsigned(require_field(j, "dim"), "dim");
  if (dim == 0) {
    fail("dim must be at least 1");
  }
  config.dim = static_cast<std::size_t>(dim);

  config.alpha = parse_finite_number(require_field(j, "alpha"), "alpha");
  config.beta = parse_finite_number(require_field(j, "beta"), "beta");
  if (config.alpha < 0.0 || config.beta < 0.0) {
    fail("alpha and beta must be non-negative");
  }
  const double closure = config.alpha * config.alpha +
                         config.beta * config.beta - 1.0;
  if (std::abs(closure) > 1e-9) {
    fail("alpha^2 + beta^2 must equal 1 within 1e-9");
  }
  if (std::abs(closure) > 1e-12) {
    // Hand-written files get renormalized onto the exact constraint.
    const double scale =
        std::sqrt(config.alpha * config.alpha + config.beta * config.beta);
    config.alpha /= scale;
    config.beta /= scale;
  }

  config.g1 = parse_matrix(require_field(j, "g1"), config.dim, "g1");
  config.g2 = parse_matrix(require_field(j, "g2"), config.dim, "g2");
  if (j.contains("m") && !j["m"].is_null()) {
    config.m = parse_matrix(j["m"], config.dim, "m");
  }
  config.psi = parse_state(require_field(j, "psi"), config.dim, "psi");
  config.injection = parse_injection(require_field(j, "injection"));
  config.seed = parse_unsigned(require_field(j, "seed"), "seed");
  if (j.contains("trials")) {
    config.trials = parse_unsigned(j["trials"], "trials");
    if (config.trials == 0) {
      fail("trials must be at least 1");
    }
  }
  return config;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("config error: cannot read '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_run_config(buffer.str());
}

std::string canonical_config_json(const RunConfig& config) {
  JsonWriter w;
  w.begin_object();
  w.key("dim").value(static_cast<std::uint64_t>(config.dim));
  w.key("alpha").value(config.alpha);
  w.key("beta").value(config.beta);
  w.key("g1");
  write_matrix(w, config.g1);
  w.key("g2");
  write_matrix(w, config.g2);
  w.key("m");
  if (config.m) {
    write_matrix(w, *config.m);
  } else {
    w.null();
  }
  w.key("psi");
  write_state(w, config.psi);
  w.key("injection").begin_object();
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
  if (config.injection.phi) {
    w.key("phi").value(*config.injection.phi);
  }
  w.end_object();
  w.key("seed").value(config.seed);
  w.key("trials").value(config.trials);
  w.end_object();
  return w.str() + "\n";
}

std::string config_hash(const RunConfig& config) {
  const std::string text = canonical_config_json(config);
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (const unsigned char byte : text) {
    hash ^= byte;
    hash *= 0x100000001B3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

CircuitConfig make_circuit_config(const RunConfig& config) {
  return CircuitConfig(config.dim, BeamSplitter(config.alpha, config.beta),
                       config.g1, config.g2);
}

InjectionMode resolve_injection(const RunConfig& config,
                                const CircuitConfig& circuit) {
  switch (config.injection.mode) {
    case InjectionSpec::Mode::Coherent:
      return Coherent{};
    case InjectionSpec::Mode::Dephased:
      if (config.injection.phi) {
        return Dephased{*config.injection.phi};
      }
      return DephasedRandom{};
    case InjectionSpec::Mode::Explicit: {
      if (!config.m) {
        throw ConfigError(
            "config error: injection mode \"explicit\" requires the m matrix");
      }
      // Convention: the launched state is the normalized first-pass left
      // output.
      const PassResult first = open_loop_pass(circuit, config.psi);
      const double n = norm(first.psi4);
      if (n == 0.0) {
        throw ZeroOutputError(
            "first-pass left output is zero; the explicit launched state is "
            "undefined");
      }
      return ExplicitM{*config.m, (1.0 / n) * first.psi4};
    }
  }
  throw std::logic_error("unreachable injection mode");
}

}  // namespace chronoloop
