// Copyright 2026 The ctc-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ctclab/qmath/core.hpp"

namespace ctclab::cli {

enum class Scenario { FixedPoint, Theorem1, Theorem2, SwapEntanglement, Nonlinearity, SpecialCases };

inline constexpr std::pair<Scenario, const char*> kScenarioNames[] = {
    {Scenario::FixedPoint, "fixed-point"},
    {Scenario::Theorem1, "theorem1"},
    {Scenario::Theorem2, "theorem2"},
    {Scenario::SwapEntanglement, "swap-entanglement"},
    {Scenario::Nonlinearity, "nonlinearity"},
    {Scenario::SpecialCases, "special-cases"},
};

inline const char* to_string(Scenario s) {
  for (const auto& [v, name] : kScenarioNames)
    if (v == s) return name;
  return "?";
}

inline std::optional<Scenario> scenario_from(const std::string& s) {
  for (const auto& [v, name] : kScenarioNames)
    if (s == name) return v;
  return std::nullopt;
}

/// Tolerance keys accepted in `tol_overrides`.
inline const std::vector<std::pair<std::string, double Tolerances::*>>& tolerance_fields() {
  static const std::vector<std::pair<std::string, double Tolerances::*>> fields = {
      {"tol_herm", &Tolerances::herm},   {"tol_trace", &Tolerances::trace},
      {"tol_ortho", &Tolerances::ortho}, {"tol_psd", &Tolerances::psd},
      {"tol_norm", &Tolerances::norm},   {"tol_recon", &Tolerances::recon},
      {"tol_spec", &Tolerances::spec},   {"tol_fixed", &Tolerances::fixed},
      {"tol_eig", &Tolerances::eig},     {"tol_entropy", &Tolerances::entropy},
      {"tol_recursion", &Tolerances::recursion},
  };
  return fields;
}

struct ScenarioConfig {
  Scenario scenario = Scenario::FixedPoint;
  Index d_cr = 2;
  Index d_ctc = 2;
  int trials = 1;
  std::uint64_t seed = 0;
  std::map<std::string, double> tol_overrides;
  std::string unitary = "haar";         // haar | swap | identity | file:<path>
  std::string cr_state = "pure-random"; // pure-random | mixed-random | maximally-mixed | file:<path>
  std::string output_path;              // empty: stdout
  std::string vary = "both";            // CR | U | both (theorem1/theorem2)
  double alpha = 0.5;                   // nonlinearity mixing weight
  std::optional<std::vector<double>> schmidt_probs;  // swap-entanglement

  Tolerances tolerances() const {
    Tolerances tol;
    for (const auto& [key, member] : tolerance_fields()) {
      if (auto it = tol_overrides.find(key); it != tol_overrides.end()) tol.*member = it->second;
    }
    return tol;
  }
};

struct Finding {
  std::string field;
  std::string message;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<Finding> list) : Error(summarize(list)), findings(std::move(list)) {}
  ConfigError(std::string field, std::string message)
      : ConfigError(std::vector<Finding>{{std::move(field), std::move(message)}}) {}
  std::vector<Finding> findings;

 private:
  static std::string summarize(const std::vector<Finding>& f) {
    std::string s = "invalid configuration";
    for (const auto& x : f) s += "\n  " + x.field + ": " + x.message;
    return s;
  }
};

class IoError : public Error {
 public:
  using Error::Error;
};

inline constexpr Index kDefaultDimCap = 64;

/// d_cr·d_ctc cap; CTC_LAB_MAX_DIM overrides the default of 64.
inline Index max_total_dim() {
  if (const char* env = std::getenv("CTC_LAB_MAX_DIM")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<Index>(v);
  }
  return kDefaultDimCap;
}

namespace detail {

inline const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {"scenario", "d_cr",        "d_ctc",  "trials",
                                                "seed",     "tol_overrides", "unitary", "cr_state",
                                                "output_path", "vary",     "alpha",  "schmidt_probs"};
  return keys;
}

inline bool is_source(const std::string& v, std::initializer_list<const char*> names) {
  if (v.rfind("file:", 0) == 0) return v.size() > 5;
  for (const char* n : names)
    if (v == n) return true;
  return false;
}

}  // namespace detail

/// Returns every problem found in a JSON config; empty means valid.
inline std::vector<Finding> validate(const nlohmann::json& j) {
  std::vector<Finding> out;
  auto add = [&](std::string field, std::string msg) { out.push_back({std::move(field), std::move(msg)}); };
  if (!j.is_object()) {
    add("<root>", "configuration must be a JSON object");
    return out;
  }
  for (const auto& [key, _] : j.items()) {
    if (std::find(detail::known_keys().begin(), detail::known_keys().end(), key) == detail::known_keys().end()) {
      add(key, "unknown field");
    }
  }

  std::optional<Scenario> scenario;
  if (!j.contains("scenario")) {
    add("scenario", "required field is missing");
  } else if (!j["scenario"].is_string() || !(scenario = scenario_from(j["scenario"].get<std::string>()))) {
    add("scenario", "must be one of fixed-point, theorem1, theorem2, swap-entanglement, nonlinearity, special-cases");
  }

  auto int_field = [&](const char* key, long long min, long long fallback) -> long long {
    if (!j.contains(key)) return fallback;
    const auto& v = j[key];
    if (!v.is_number_integer()) {
      add(key, "must be an integer");
      return fallback;
    }
    const long long x = v.get<long long>();
    if (x < min) {
      add(key, "must be >= " + std::to_string(min));
      return fallback;
    }
    return x;
  };
  const long long d_cr = int_field("d_cr", 2, 2);
  const long long d_ctc = int_field("d_ctc", 2, 2);
  int_field("trials", 1, 1);
  if (d_cr * d_ctc > max_total_dim()) {
    add("d_cr*d_ctc", "sizing: total dimension " + std::to_string(d_cr * d_ctc) + " exceeds cap " +
                          std::to_string(max_total_dim()) + " (set CTC_LAB_MAX_DIM to raise it)");
  }
  if (scenario && (*scenario == Scenario::Theorem1 || *scenario == Scenario::Theorem2) && j.contains("trials") &&
      j["trials"].is_number_integer() && j["trials"].get<long long>() == 1) {
    add("trials", "theorem scenarios compare instances and need trials >= 2");
  }

  if (j.contains("seed") && !(j["seed"].is_number_unsigned() ||
                              (j["seed"].is_number_integer() && j["seed"].get<long long>() >= 0))) {
    add("seed", "must be a non-negative 64-bit integer");
  }

  if (j.contains("tol_overrides")) {
    const auto& t = j["tol_overrides"];
    if (!t.is_object()) {
      add("tol_overrides", "must be an object of tolerance names to numbers");
    } else {
      for (const auto& [key, v] : t.items()) {
        const bool known = std::any_of(tolerance_fields().begin(), tolerance_fields().end(),
                                       [&](const auto& f) { return f.first == key; });
        if (!known) add("tol_overrides." + key, "unknown tolerance");
        else if (!v.is_number() || !(v.get<double>() > 0.0) || !std::isfinite(v.get<double>())) {
          add("tol_overrides." + key, "must be a positive finite number");
        }
      }
    }
  }

  std::string unitary = "haar";
  if (j.contains("unitary")) {
    if (!j["unitary"].is_string() ||
        !detail::is_source(unitary = j["unitary"].get<std::string>(), {"haar", "swap", "identity"})) {
      add("unitary", "must be haar, swap, identity or file:<path>");
    } else if (unitary == "swap" && d_cr != d_ctc) {
      add("unitary", "swap needs d_cr == d_ctc");
    }
  }
  std::string cr = "pure-random";
  if (j.contains("cr_state")) {
    if (!j["cr_state"].is_string() ||
        !detail::is_source(cr = j["cr_state"].get<std::string>(),
                           {"pure-random", "mixed-random", "maximally-mixed"})) {
      add("cr_state", "must be pure-random, mixed-random, maximally-mixed or file:<path>");
    }
  }
  if (scenario == Scenario::Theorem1 && (cr == "mixed-random" || cr == "maximally-mixed")) {
    add("cr_state", "theorem1 needs a pure CR input (pure-random or a pure-state file)");
  }
  if (scenario == Scenario::Nonlinearity && cr != "pure-random" && cr != "mixed-random") {
    add("cr_state", "nonlinearity samples input pairs: use pure-random (orthogonal pair) or mixed-random");
  }
  if (scenario == Scenario::SwapEntanglement && d_cr != d_ctc) {
    add("d_ctc", "swap-entanglement needs d_cr == d_ctc");
  }

  if (j.contains("output_path") && !j["output_path"].is_string()) add("output_path", "must be a string");
  if (j.contains("vary") && !(j["vary"].is_string() && (j["vary"] == "CR" || j["vary"] == "U" || j["vary"] == "both"))) {
    add("vary", "must be CR, U or both");
  }
  if (j.contains("alpha") && !(j["alpha"].is_number() && j["alpha"].get<double>() >= 0.0 &&
                               j["alpha"].get<double>() <= 1.0)) {
    add("alpha", "must be a number in [0, 1]");
  }
  if (j.contains("schmidt_probs") && !j["schmidt_probs"].is_null()) {
    const auto& p = j["schmidt_probs"];
    bool ok = p.is_array() && static_cast<long long>(p.size()) == d_cr;
    double sum = 0.0;
    if (ok) {
      for (const auto& x : p) {
        if (!x.is_number() || x.get<double>() < 0.0) ok = false;
        else sum += x.get<double>();
      }
    }
    if (!ok || std::abs(sum - 1.0) > 1e-12) {
      add("schmidt_probs", "must be d_cr nonnegative numbers summing to 1");
    }
  }
  return out;
}

/// Parses a validated config; throws ConfigError listing every finding.
inline ScenarioConfig parse_config(const nlohmann::json& j) {
  if (auto findings = validate(j); !findings.empty()) throw ConfigError(std::move(findings));
  ScenarioConfig c;
  c.scenario = *scenario_from(j.at("scenario").get<std::string>());
  c.d_cr = j.value("d_cr", 2);
  c.d_ctc = j.value("d_ctc", 2);
  c.trials = j.value("trials", 1);
  c.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("tol_overrides")) {
    for (const auto& [k, v] : j["tol_overrides"].items()) c.tol_overrides[k] = v.get<double>();
  }
  c.unitary = j.value("unitary", std::string("haar"));
  c.cr_state = j.value("cr_state", std::string("pure-random"));
  c.output_path = j.value("output_path", std::string());
  c.vary = j.value("vary", std::string("both"));
  c.alpha = j.value("alpha", 0.5);
  if (j.contains("schmidt_probs") && !j["schmidt_probs"].is_null()) c.schmidt_probs = j["schmidt_probs"].get<std::vector<double>>();
  return c;
}

/// Normalized config echo written into reports.
inline nlohmann::json to_json(const ScenarioConfig& c) {
  nlohmann::json j = {
      {"scenario", to_string(c.scenario)},
      {"d_cr", c.d_cr},
      {"d_ctc", c.d_ctc},
      {"trials", c.trials},
      {"seed", c.seed},
      {"tol_overrides", c.tol_overrides},
      {"unitary", c.unitary},
      {"cr_state", c.cr_state},
      {"output_path", c.output_path},
      {"vary", c.vary},
      {"alpha", c.alpha},
  };
  j["schmidt_probs"] = c.schmidt_probs ? nlohmann::json(*c.schmidt_probs) : nlohmann::json(nullptr);
  return j;
}

/**
 * Applies a `--set key=value` override. Dotted keys address nested objects
 * (`tol_overrides.tol_spec=1e-3`). The value is parsed as JSON when possible
 * and taken as a plain string otherwise.
 */
inline void apply_override(nlohmann::json& j, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("--set", "expected key=value, got '" + assignment + "'");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);
  nlohmann::json value = nlohmann::json::parse(raw, nullptr, false);
  if (value.is_discarded()) value = raw;
  if (!j.is_object()) j = nlohmann::json::object();
  nlohmann::json* node = &j;
  std::size_t start = 0;
  for (std::size_t dot; (dot = key.find('.', start)) != std::string::npos; start = dot + 1) {
    node = &(*node)[key.substr(start, dot - start)];
    if (!node->is_object()) *node = nlohmann::json::object();
  }
  (*node)[key.substr(start)] = std::move(value);
}

}  // namespace ctclab::cli
