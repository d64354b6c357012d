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

#include <nlohmann/json.hpp>

#include "ctclab/purification/probe.hpp"
#include "ctclab/purification/special.hpp"
#include "ctclab/purification/swap_entanglement.hpp"

namespace ctclab::purification {

inline nlohmann::json to_json(const TheoremTrialRecord& r) {
  nlohmann::json j = {
      {"index", r.index},
      {"seed", r.seed},
      {"unitary_id", r.unitary_id},
      {"cr_state_id", r.cr_state_id},
  };
  if (!r.ok()) {
    j["error"] = *r.error;
    return j;
  }
  j["fixed_spectrum"] = spectrum_to_json(r.fixed_spectrum.eigenvalues);
  j["recursion_spectrum"] =
      r.recursion_spectrum ? spectrum_to_json(r.recursion_spectrum->eigenvalues) : nlohmann::json(nullptr);
  j["degenerate"] = r.degenerate;
  j["recursion_error"] = r.recursion_error;
  j["recursion_consistent"] = r.recursion_consistent;
  j["residual"] = r.residual;
  j["entropy"] = r.entropy;
  j["unique"] = r.unique;
  j["fixed_dim"] = r.fixed_dim;
  j["gap_to_baseline"] = r.gap_to_baseline;
  return j;
}

/// Summary block of a probe; per-trial records are serialized separately.
inline nlohmann::json to_json_summary(const ProbeReport& p) {
  return {
      {"verdict", p.verdict},
      {"witnessed", p.witnessed},
      {"witness_fraction", p.witness_fraction},
      {"max_spectrum_gap", p.max_spectrum_gap},
      {"unique_fraction", p.unique_fraction},
      {"max_residual", p.max_residual},
      {"max_recursion_error", p.max_recursion_error},
      {"failures", p.failures},
  };
}

inline nlohmann::json to_json(const SpecialCaseResult& r) {
  return {
      {"purifiable_universally_here", r.purifiable_universally_here},
      {"reason", r.reason},
      {"fixed_spectrum", spectrum_to_json(r.fixed_spectrum.eigenvalues)},
      {"flat_gap", r.flat_gap},
      {"swap_matched", r.swap_matched},
  };
}

inline nlohmann::json to_json(const SwapEntanglementReport& r) {
  return {
      {"dim", r.dim},
      {"probabilities", spectrum_to_json(r.probabilities)},
      {"consistency_residual", r.consistency_residual},
      {"fixed_point_distance", r.fixed_point_distance},
      {"purity_defect", r.purity_defect},
      {"state_error", r.state_error},
      {"schmidt_coefficients", spectrum_to_json(r.schmidt_coefficients)},
      {"schmidt_error", r.schmidt_error},
      {"passed", r.passed},
  };
}

}  // namespace ctclab::purification
