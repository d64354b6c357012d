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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctclab/parallel.hpp"
#include "ctclab/purification/recursion.hpp"
#include "ctclab/purification/sources.hpp"

namespace ctclab::purification {

enum class Vary { CR, U, Both };

inline const char* to_string(Vary v) {
  switch (v) {
    case Vary::CR: return "CR";
    case Vary::U: return "U";
    case Vary::Both: return "both";
  }
  return "?";
}

/// Which eigenvalue recursion to evaluate per trial. Auto picks the pure-input
/// form when the CR input is a known pure state.
enum class RecursionKind { Auto, PureInput, MixedInput, None };

struct ProbeConfig {
  Index d_cr = 2;
  Index d_ctc = 2;
  int trials = 2;
  std::uint64_t seed = 0;
  Vary vary = Vary::Both;
  UnitarySpec unitary;
  CrSpec cr;
  RecursionKind recursion = RecursionKind::Auto;
  std::string tag = "probe";  // stream-splitting tag
  Tolerances tol;
  unsigned jobs = 1;
};

/// One solved instance. Index 0 is the probe baseline.
struct TheoremTrialRecord {
  int index = 0;
  std::uint64_t seed = 0;  // derived per-trial seed
  std::string unitary_id;
  std::string cr_state_id;
  Spectrum fixed_spectrum;
  std::optional<Spectrum> recursion_spectrum;
  bool degenerate = false;
  double recursion_error = 0.0;  // max |recursion − fixed| after sorting both
  bool recursion_consistent = true;
  double residual = 0.0;
  double entropy = 0.0;
  bool unique = true;
  Index fixed_dim = 1;
  double gap_to_baseline = 0.0;
  std::optional<std::string> error;

  bool ok() const { return !error.has_value(); }
};

struct ProbeReport {
  std::vector<TheoremTrialRecord> records;  // baseline first
  double witness_fraction = 0.0;      // perturbed trials whose spectrum departs from baseline
  double max_spectrum_gap = 0.0;      // over all solved pairs
  double unique_fraction = 0.0;
  double max_residual = 0.0;
  double max_recursion_error = 0.0;
  int failures = 0;
  bool witnessed = false;
  std::string verdict;
};

inline constexpr const char* kWitnessed = "no-universal-purification-witnessed";
inline constexpr const char* kNotWitnessed = "no-witness";

/// Degenerate spectra are compared after sorting at this looser threshold.
inline constexpr double kDegenerateRecursionTol = 1e-6;

/**
 * Solves one (U, ρ_CR) instance and fills its record. Numerical failures are
 * captured in `error` rather than thrown.
 */
inline TheoremTrialRecord solve_trial(const ProbeConfig& cfg, int index, const UnitarySample& us,
                                      const CrSample& cs, std::uint64_t trial_seed) {
  TheoremTrialRecord rec;
  rec.index = index;
  rec.seed = trial_seed;
  rec.unitary_id = us.id;
  rec.cr_state_id = cs.id;
  try {
    const deutsch::CtcChannel ch(us.u, cs.rho, cfg.d_cr, cfg.d_ctc);
    const deutsch::FixedPointSolution sol = deutsch::fixed_points(ch, cfg.tol);
    rec.fixed_spectrum = spectrum_of(sol.representative.matrix());
    rec.residual = sol.residual;
    rec.entropy = sol.entropy;
    rec.unique = sol.unique;
    rec.fixed_dim = sol.fixed_dim();

    RecursionKind kind = cfg.recursion;
    if (kind == RecursionKind::Auto) kind = cs.pure ? RecursionKind::PureInput : RecursionKind::MixedInput;
    if (kind == RecursionKind::PureInput && !cs.pure) {
      throw DomainError("pure-input recursion requested for a mixed CR state");
    }
    if (kind != RecursionKind::None) {
      const RecursionResult r = kind == RecursionKind::PureInput
                                    ? theorem1_recursion(us.u, *cs.pure, sol.representative, cfg.tol)
                                    : theorem2_recursion(us.u, cs.rho, sol.representative, cfg.tol);
      rec.degenerate = r.degenerate;
      rec.recursion_error = spectra_compare(r.spectrum, rec.fixed_spectrum, 0.0).max_abs_gap;
      rec.recursion_consistent =
          rec.recursion_error <= (r.degenerate ? kDegenerateRecursionTol : cfg.tol.recursion);
      rec.recursion_spectrum = r.spectrum;
    }
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  return rec;
}

/**
 * Samples a baseline (U₀, ρ₀) and `trials` further instances that resample
 * the slot(s) named by `vary`, solves every fixed point, and compares the
 * spectra. A universal purification would pin Spec(ρ*) independently of
 * ρ_CR and U, so any pair of spectra further apart than tol.spec witnesses
 * that no universal purification exists for these instances.
 *
 * Instance i draws its randomness from seed_i = Rng::derive(seed, tag, i),
 * with separate "unitary" and "cr" streams under seed_i.
 */
inline ProbeReport universal_purification_probe(const ProbeConfig& cfg) {
  if (cfg.trials < 2) throw DomainError("universal_purification_probe: trials must be >= 2");
  const auto n = static_cast<std::size_t>(cfg.trials) + 1;
  ProbeReport report;
  report.records.resize(n);

  const std::uint64_t base_seed = Rng::derive(cfg.seed, cfg.tag, 0);
  parallel_for(n, cfg.jobs, [&](std::size_t i) {
    const std::uint64_t ts = Rng::derive(cfg.seed, cfg.tag, i);
    const bool new_u = i == 0 || cfg.vary != Vary::CR;
    const bool new_cr = i == 0 || cfg.vary != Vary::U;
    Rng urng = Rng::stream(new_u ? ts : base_seed, "unitary", 0);
    Rng crng = Rng::stream(new_cr ? ts : base_seed, "cr", 0);
    try {
      const UnitarySample us = sample_unitary(cfg.unitary, cfg.d_cr, cfg.d_ctc, urng);
      const CrSample cs = sample_cr(cfg.cr, cfg.d_cr, crng);
      report.records[i] = solve_trial(cfg, static_cast<int>(i), us, cs, ts);
    } catch (const std::exception& e) {
      TheoremTrialRecord rec;
      rec.index = static_cast<int>(i);
      rec.seed = ts;
      rec.error = e.what();
      report.records[i] = std::move(rec);
    }
  });

  const auto& baseline = report.records.front();
  int witnesses = 0, solved_perturbed = 0, unique = 0, solved = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto& r = report.records[i];
    if (!r.ok()) {
      ++report.failures;
      continue;
    }
    ++solved;
    unique += r.unique ? 1 : 0;
    report.max_residual = std::max(report.max_residual, r.residual);
    report.max_recursion_error = std::max(report.max_recursion_error, r.recursion_error);
    for (std::size_t j = 0; j < i; ++j) {
      if (!report.records[j].ok()) continue;
      const double gap =
          spectra_compare(r.fixed_spectrum, report.records[j].fixed_spectrum, 0.0).max_abs_gap;
      report.max_spectrum_gap = std::max(report.max_spectrum_gap, gap);
    }
    if (i > 0 && baseline.ok()) {
      r.gap_to_baseline = spectra_compare(r.fixed_spectrum, baseline.fixed_spectrum, 0.0).max_abs_gap;
      ++solved_perturbed;
      witnesses += r.gap_to_baseline > cfg.tol.spec ? 1 : 0;
    }
  }
  report.witness_fraction = solved_perturbed > 0 ? static_cast<double>(witnesses) / solved_perturbed : 0.0;
  report.unique_fraction = solved > 0 ? static_cast<double>(unique) / solved : 0.0;
  report.witnessed = report.max_spectrum_gap > cfg.tol.spec;
  report.verdict = report.witnessed ? kWitnessed : kNotWitnessed;
  return report;
}

}  // namespace ctclab::purification
