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
#include <chrono>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ctclab/cli/config.hpp"
#include "ctclab/deutsch.hpp"
#include "ctclab/parallel.hpp"
#include "ctclab/purification.hpp"
#include "ctclab/version.hpp"

namespace ctclab::cli {

struct RunOptions {
  unsigned jobs = 1;
};

/// One CSV row: trial index, series label, values.
struct SpectrumRow {
  int trial = 0;
  std::string series;
  RealVector values;
};

struct RunResult {
  nlohmann::json report;
  std::vector<SpectrumRow> spectra;
  /// Trials whose numerics failed. They are recorded in the report; the run continues.
  int failures = 0;
};

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json j = nlohmann::json::parse(buf.str(), nullptr, false);
  if (j.is_discarded()) throw ConfigError(path, "not valid JSON");
  return j;
}

namespace detail {

inline std::string file_path_of(const std::string& source) { return source.substr(5); }

inline purification::UnitarySpec unitary_spec(const ScenarioConfig& c, const Tolerances& tol) {
  using purification::UnitaryKind;
  purification::UnitarySpec s;
  if (c.unitary == "haar") s.kind = UnitaryKind::Haar;
  else if (c.unitary == "swap") s.kind = UnitaryKind::Swap;
  else if (c.unitary == "identity") s.kind = UnitaryKind::Identity;
  else {
    s.kind = UnitaryKind::Fixed;
    s.label = c.unitary;
    const nlohmann::json j = read_json_file(file_path_of(c.unitary));
    try {
      s.fixed = UnitaryMatrix::from_matrix(matrix_from_json(j), tol);
    } catch (const Error& e) {
      throw ConfigError("unitary", e.what());
    }
    if (s.fixed->dim() != c.d_cr * c.d_ctc) {
      throw ConfigError("unitary", "file matrix is not (d_cr*d_ctc)-dimensional");
    }
  }
  return s;
}

inline purification::CrSpec cr_spec(const ScenarioConfig& c, const Tolerances& tol) {
  using purification::CrKind;
  purification::CrSpec s;
  if (c.cr_state == "pure-random") s.kind = CrKind::PureRandom;
  else if (c.cr_state == "mixed-random") s.kind = CrKind::MixedRandom;
  else if (c.cr_state == "maximally-mixed") s.kind = CrKind::MaximallyMixed;
  else {
    s.kind = CrKind::Fixed;
    s.label = c.cr_state;
    const nlohmann::json j = read_json_file(file_path_of(c.cr_state));
    try {
      if (j.contains("amplitudes")) {
        s.fixed_pure = pure_from_json(j, tol);
      } else {
        s.fixed = DensityMatrix::from_matrix(matrix_from_json(j), tol);
        s.fixed_pure = purification::pure_vector_of(*s.fixed);
        if (s.fixed_pure) s.fixed.reset();
      }
    } catch (const Error& e) {
      throw ConfigError("cr_state", e.what());
    }
    const Index dim = s.fixed_pure ? s.fixed_pure->dim() : s.fixed->dim();
    if (dim != c.d_cr) throw ConfigError("cr_state", "file state is not d_cr-dimensional");
    if (c.scenario == Scenario::Theorem1 && !s.fixed_pure) {
      throw ConfigError("cr_state", "theorem1 needs a pure CR state");
    }
  }
  return s;
}

inline purification::Vary vary_of(const std::string& v) {
  if (v == "CR") return purification::Vary::CR;
  if (v == "U") return purification::Vary::U;
  return purification::Vary::Both;
}

inline nlohmann::json error_record(int index, std::uint64_t seed, const std::string& what) {
  return {{"index", index}, {"seed", seed}, {"error", what}};
}

struct Summary {
  double witness_fraction = 0.0;
  double max_spectrum_gap = 0.0;
  double max_residual = 0.0;
  int failures = 0;
  nlohmann::json scenario = nlohmann::json::object();
};

// Share of trials 1..n-1 whose spectrum departs from trial 0, and the
// largest pairwise gap, over the trials that have a spectrum.
inline void spectrum_statistics(const std::vector<std::optional<RealVector>>& spectra, double tol,
                                Summary& s) {
  int compared = 0, differing = 0;
  for (std::size_t i = 0; i < spectra.size(); ++i) {
    if (!spectra[i]) continue;
    for (std::size_t j = 0; j < i; ++j) {
      if (!spectra[j]) continue;
      const double gap =
          purification::spectra_compare(Spectrum{*spectra[i]}, Spectrum{*spectra[j]}, 0.0).max_abs_gap;
      s.max_spectrum_gap = std::max(s.max_spectrum_gap, gap);
      if (j == 0) {
        ++compared;
        differing += gap > tol ? 1 : 0;
      }
    }
  }
  s.witness_fraction = compared > 0 ? static_cast<double>(differing) / compared : 0.0;
}

inline std::uint64_t trial_seed(const ScenarioConfig& c, std::size_t i) {
  return Rng::derive(c.seed, to_string(c.scenario), i);
}

inline void run_fixed_point(const ScenarioConfig& c, const Tolerances& tol, const RunOptions& opt,
                            nlohmann::json& trials, std::vector<SpectrumRow>& rows, Summary& s) {
  const auto us = unitary_spec(c, tol);
  const auto cs = cr_spec(c, tol);
  const auto n = static_cast<std::size_t>(c.trials);
  std::vector<nlohmann::json> recs(n);
  std::vector<std::optional<RealVector>> spectra(n);
  parallel_for(n, opt.jobs, [&](std::size_t i) {
    const std::uint64_t ts = trial_seed(c, i);
    Rng urng = Rng::stream(ts, "unitary", 0);
    Rng crng = Rng::stream(ts, "cr", 0);
    try {
      const auto u = purification::sample_unitary(us, c.d_cr, c.d_ctc, urng);
      const auto cr = purification::sample_cr(cs, c.d_cr, crng);
      const deutsch::CtcChannel ch(u.u, cr.rho, c.d_cr, c.d_ctc);
      const auto sol = deutsch::fixed_points(ch, tol);
      const RealVector spec = spectrum_of(sol.representative.matrix()).eigenvalues;
      spectra[i] = spec;
      recs[i] = {{"index", i},
                 {"seed", ts},
                 {"unitary_id", u.id},
                 {"cr_state_id", cr.id},
                 {"representative", matrix_to_json(sol.representative.matrix())},
                 {"spectrum", spectrum_to_json(spec)},
                 {"residual", sol.residual},
                 {"entropy", sol.entropy},
                 {"unique", sol.unique},
                 {"fixed_dim", sol.fixed_dim()},
                 {"optimizer_iterations", sol.optimizer_iterations}};
    } catch (const std::exception& e) {
      recs[i] = error_record(static_cast<int>(i), ts, e.what());
    }
  });
  for (std::size_t i = 0; i < n; ++i) {
    if (recs[i].contains("error")) ++s.failures;
    else {
      s.max_residual = std::max(s.max_residual, recs[i]["residual"].get<double>());
      rows.push_back({static_cast<int>(i), "fixed", *spectra[i]});
    }
    trials.push_back(std::move(recs[i]));
  }
  spectrum_statistics(spectra, tol.spec, s);
}

inline void run_theorem(const ScenarioConfig& c, const Tolerances& tol, const RunOptions& opt, bool pure,
                        nlohmann::json& trials, std::vector<SpectrumRow>& rows, Summary& s) {
  purification::ProbeConfig pc;
  pc.d_cr = c.d_cr;
  pc.d_ctc = c.d_ctc;
  pc.trials = c.trials;
  pc.seed = c.seed;
  pc.vary = vary_of(c.vary);
  pc.unitary = unitary_spec(c, tol);
  pc.cr = cr_spec(c, tol);
  pc.recursion = pure ? purification::RecursionKind::PureInput : purification::RecursionKind::MixedInput;
  pc.tag = to_string(c.scenario);
  pc.tol = tol;
  pc.jobs = opt.jobs;
  const purification::ProbeReport rep = purification::universal_purification_probe(pc);
  int inconsistent = 0;
  for (const auto& r : rep.records) {
    trials.push_back(purification::to_json(r));
    if (!r.ok()) continue;
    inconsistent += r.recursion_consistent ? 0 : 1;
    rows.push_back({r.index, "fixed", r.fixed_spectrum.eigenvalues});
    if (r.recursion_spectrum) rows.push_back({r.index, "recursion", r.recursion_spectrum->eigenvalues});
  }
  s.witness_fraction = rep.witness_fraction;
  s.max_spectrum_gap = rep.max_spectrum_gap;
  s.max_residual = rep.max_residual;
  s.failures = rep.failures;
  s.scenario = purification::to_json_summary(rep);
  s.scenario["recursion_inconsistent_trials"] = inconsistent;
}

inline void run_swap_entanglement(const ScenarioConfig& c, const Tolerances&, const RunOptions& opt,
                                  nlohmann::json& trials, std::vector<SpectrumRow>& rows, Summary& s) {
  const auto n = static_cast<std::size_t>(c.trials);
  std::vector<nlohmann::json> recs(n);
  std::vector<std::optional<RealVector>> coeffs(n);
  parallel_for(n, opt.jobs, [&](std::size_t i) {
    const std::uint64_t ts = trial_seed(c, i);
    try {
      RealVector probs;
      if (c.schmidt_probs) {
        probs = Eigen::Map<const RealVector>(c.schmidt_probs->data(), c.d_cr);
      } else {
        Rng prng = Rng::stream(ts, "probs", 0);
        probs = random_probabilities(c.d_cr, prng);
      }
      const auto rep = purification::swap_entanglement_scenario(probs, c.d_cr, ts, 1e-10);
      nlohmann::json j = purification::to_json(rep);
      j["index"] = i;
      j["seed"] = ts;
      coeffs[i] = rep.schmidt_coefficients;
      recs[i] = std::move(j);
    } catch (const std::exception& e) {
      recs[i] = error_record(static_cast<int>(i), ts, e.what());
    }
  });
  int passed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (recs[i].contains("error")) ++s.failures;
    else {
      s.max_residual = std::max(s.max_residual, recs[i]["consistency_residual"].get<double>());
      passed += recs[i]["passed"].get<bool>() ? 1 : 0;
      rows.push_back({static_cast<int>(i), "schmidt", *coeffs[i]});
    }
    trials.push_back(std::move(recs[i]));
  }
  s.scenario = {{"passed_trials", passed}};
}

inline std::pair<DensityMatrix, DensityMatrix> input_pair(const std::string& kind, Index d, Rng& rng) {
  if (kind == "pure-random") {
    const PureState a = random_pure(d, rng);
    ComplexVector v = random_pure(d, rng).amplitudes();
    v -= a.amplitudes().dot(v) * a.amplitudes();  // dot() conjugates the left operand
    return {DensityMatrix::from_pure(a), DensityMatrix::from_pure(PureState::normalized(std::move(v)))};
  }
  DensityMatrix r1 = random_density(d, d, rng);
  DensityMatrix r2 = random_density(d, d, rng);
  return {std::move(r1), std::move(r2)};
}

inline void run_nonlinearity(const ScenarioConfig& c, const Tolerances& tol, const RunOptions& opt,
                             nlohmann::json& trials, Summary& s) {
  const auto us = unitary_spec(c, tol);
  const auto n = static_cast<std::size_t>(c.trials);
  std::vector<nlohmann::json> recs(n);
  std::vector<std::optional<double>> witness(n);
  parallel_for(n, opt.jobs, [&](std::size_t i) {
    const std::uint64_t ts = trial_seed(c, i);
    Rng urng = Rng::stream(ts, "unitary", 0);
    Rng crng = Rng::stream(ts, "cr", 0);
    try {
      const auto u = purification::sample_unitary(us, c.d_cr, c.d_ctc, urng);
      const auto [r1, r2] = input_pair(c.cr_state, c.d_cr, crng);
      const double w = deutsch::nonlinearity_witness(u.u, r1, r2, c.alpha, tol);
      witness[i] = w;
      recs[i] = {{"index", i}, {"seed", ts}, {"unitary_id", u.id}, {"cr_state_id", c.cr_state},
                 {"alpha", c.alpha}, {"witness", w}};
    } catch (const std::exception& e) {
      recs[i] = error_record(static_cast<int>(i), ts, e.what());
    }
  });
  std::vector<double> ok;
  for (std::size_t i = 0; i < n; ++i) {
    if (witness[i]) ok.push_back(*witness[i]);
    else ++s.failures;
    trials.push_back(std::move(recs[i]));
  }
  if (!ok.empty()) {
    std::vector<double> sorted = ok;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t m = sorted.size();
    const double median = m % 2 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
    const auto nonlinear = std::count_if(ok.begin(), ok.end(), [&](double w) { return w > tol.spec; });
    s.witness_fraction = static_cast<double>(nonlinear) / static_cast<double>(m);
    s.scenario = {{"median_witness", median}, {"min_witness", sorted.front()}, {"max_witness", sorted.back()}};
  }
}

inline void run_special_cases(const ScenarioConfig& c, const Tolerances& tol, const RunOptions& opt,
                              nlohmann::json& trials, std::vector<SpectrumRow>& rows, Summary& s) {
  const auto cs = cr_spec(c, tol);
  std::vector<purification::UnitarySpec> set;
  set.push_back({purification::UnitaryKind::Identity, std::nullopt, ""});
  if (c.d_cr == c.d_ctc) set.push_back({purification::UnitaryKind::Swap, std::nullopt, ""});
  set.push_back({purification::UnitaryKind::Haar, std::nullopt, ""});
  if (c.unitary.rfind("file:", 0) == 0) set.push_back(unitary_spec(c, tol));

  const auto n = static_cast<std::size_t>(c.trials);
  std::vector<nlohmann::json> recs(n);
  std::vector<std::vector<SpectrumRow>> trial_rows(n);
  parallel_for(n, opt.jobs, [&](std::size_t i) {
    const std::uint64_t ts = trial_seed(c, i);
    Rng crng = Rng::stream(ts, "cr", 0);
    Rng urng = Rng::stream(ts, "unitary", 0);
    try {
      const auto cr = purification::sample_cr(cs, c.d_cr, crng);
      nlohmann::json checks = nlohmann::json::array();
      for (const auto& spec : set) {
        const auto u = purification::sample_unitary(spec, c.d_cr, c.d_ctc, urng);
        nlohmann::json j;
        try {
          const auto r = purification::special_case_check(u.u, cr.rho, tol);
          j = purification::to_json(r);
          trial_rows[i].push_back({static_cast<int>(i), u.id, r.fixed_spectrum.eigenvalues});
        } catch (const std::exception& e) {
          j = {{"error", e.what()}};
        }
        j["unitary_id"] = u.id;
        checks.push_back(std::move(j));
      }
      recs[i] = {{"index", i}, {"seed", ts}, {"cr_state_id", cr.id}, {"checks", std::move(checks)}};
    } catch (const std::exception& e) {
      recs[i] = error_record(static_cast<int>(i), ts, e.what());
    }
  });
  int total = 0, not_purifiable = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (recs[i].contains("error")) ++s.failures;
    else {
      for (const auto& chk : recs[i]["checks"]) {
        if (chk.contains("error")) {
          ++s.failures;
          continue;
        }
        ++total;
        not_purifiable += chk["purifiable_universally_here"].get<bool>() ? 0 : 1;
      }
    }
    for (auto& r : trial_rows[i]) rows.push_back(std::move(r));
    trials.push_back(std::move(recs[i]));
  }
  s.witness_fraction = total > 0 ? static_cast<double>(not_purifiable) / total : 0.0;
  s.scenario = {{"checks", total}, {"purifiable", total - not_purifiable}};
}

}  // namespace detail

/**
 * Executes one scenario. Per-trial numerical failures are recorded in the
 * report and counted; configuration problems throw ConfigError and unreadable
 * input files throw IoError.
 *
 * Trial i of scenario S draws from Rng::derive(seed, S, i), split further into
 * "unitary" / "cr" / "probs" streams, so reports are reproducible regardless
 * of `jobs`.
 */
inline RunResult run(const ScenarioConfig& c, const RunOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const Tolerances tol = c.tolerances();
  RunResult res;
  nlohmann::json trials = nlohmann::json::array();
  detail::Summary s;
  switch (c.scenario) {
    case Scenario::FixedPoint: detail::run_fixed_point(c, tol, opt, trials, res.spectra, s); break;
    case Scenario::Theorem1: detail::run_theorem(c, tol, opt, true, trials, res.spectra, s); break;
    case Scenario::Theorem2: detail::run_theorem(c, tol, opt, false, trials, res.spectra, s); break;
    case Scenario::SwapEntanglement: detail::run_swap_entanglement(c, tol, opt, trials, res.spectra, s); break;
    case Scenario::Nonlinearity: detail::run_nonlinearity(c, tol, opt, trials, s); break;
    case Scenario::SpecialCases: detail::run_special_cases(c, tol, opt, trials, res.spectra, s); break;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  res.failures = s.failures;
  res.report = {
      {"format_version", kReportFormatVersion},
      {"tool", kToolName},
      {"tool_version", kToolVersion},
      {"config", to_json(c)},
      {"trials", std::move(trials)},
      {"summary",
       {{"witness_fraction", s.witness_fraction},
        {"max_spectrum_gap", s.max_spectrum_gap},
        {"max_residual", s.max_residual},
        {"failures", s.failures},
        {"wall_time_ms", ms},
        {"scenario", s.scenario}}},
  };
  return res;
}

/// "trial,series,v0,v1,..." with full double precision.
inline std::string spectra_csv(const std::vector<SpectrumRow>& rows) {
  Index width = 0;
  for (const auto& r : rows) width = std::max(width, r.values.size());
  std::ostringstream out;
  out.precision(17);
  out << "trial,series";
  for (Index k = 0; k < width; ++k) out << ",v" << k;
  out << "\n";
  for (const auto& r : rows) {
    out << r.trial << "," << r.series;
    for (Index k = 0; k < width; ++k) {
      out << ",";
      if (k < r.values.size()) out << r.values(k);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace ctclab::cli
