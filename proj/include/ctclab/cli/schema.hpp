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

#include <string>

#include <nlohmann/json.hpp>

namespace ctclab::cli {

/**
 * JSON Schema (draft 2020-12) for every file format the tool reads or writes.
 * The root validates a report; `$defs/config`, `$defs/matrix` and
 * `$defs/pure_state` cover the inputs.
 */
inline nlohmann::json schema() {
  return nlohmann::json::parse(R"json(
{
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "$id": "https://ctc-lab.invalid/schema/v1",
  "title": "ctc-lab report",
  "$ref": "#/$defs/report",
  "$defs": {
    "complex": {
      "type": "array", "prefixItems": [{"type": "number"}, {"type": "number"}],
      "minItems": 2, "maxItems": 2
    },
    "matrix": {
      "description": "Dense complex matrix, entries row-major as [re, im] pairs.",
      "type": "object",
      "required": ["rows", "cols", "entries"],
      "properties": {
        "rows": {"type": "integer", "minimum": 1},
        "cols": {"type": "integer", "minimum": 1},
        "entries": {"type": "array", "items": {"$ref": "#/$defs/complex"}}
      }
    },
    "pure_state": {
      "type": "object",
      "required": ["dim", "amplitudes"],
      "properties": {
        "dim": {"type": "integer", "minimum": 1},
        "amplitudes": {"type": "array", "items": {"$ref": "#/$defs/complex"}}
      }
    },
    "spectrum": {"type": "array", "items": {"type": "number"}},
    "source": {"type": "string"},
    "config": {
      "type": "object",
      "required": ["scenario"],
      "additionalProperties": false,
      "properties": {
        "scenario": {"enum": ["fixed-point", "theorem1", "theorem2", "swap-entanglement", "nonlinearity", "special-cases"]},
        "d_cr": {"type": "integer", "minimum": 2},
        "d_ctc": {"type": "integer", "minimum": 2},
        "trials": {"type": "integer", "minimum": 1},
        "seed": {"type": "integer", "minimum": 0},
        "tol_overrides": {
          "type": "object",
          "propertyNames": {"enum": ["tol_herm", "tol_trace", "tol_ortho", "tol_psd", "tol_norm", "tol_recon",
                                     "tol_spec", "tol_fixed", "tol_eig", "tol_entropy", "tol_recursion"]},
          "additionalProperties": {"type": "number", "exclusiveMinimum": 0}
        },
        "unitary": {"type": "string", "pattern": "^(haar|swap|identity|file:.+)$"},
        "cr_state": {"type": "string", "pattern": "^(pure-random|mixed-random|maximally-mixed|file:.+)$"},
        "output_path": {"type": "string"},
        "vary": {"enum": ["CR", "U", "both"]},
        "alpha": {"type": "number", "minimum": 0, "maximum": 1},
        "schmidt_probs": {"type": ["array", "null"], "items": {"type": "number", "minimum": 0}}
      }
    },
    "error_trial": {
      "type": "object",
      "required": ["index", "seed", "error"],
      "properties": {"index": {"type": "integer"}, "seed": {"type": "integer"}, "error": {"type": "string"}}
    },
    "fixed_point_trial": {
      "type": "object",
      "required": ["index", "seed", "unitary_id", "cr_state_id", "representative", "spectrum", "residual",
                   "entropy", "unique", "fixed_dim", "optimizer_iterations"],
      "properties": {
        "representative": {"$ref": "#/$defs/matrix"},
        "spectrum": {"$ref": "#/$defs/spectrum"},
        "residual": {"type": "number", "minimum": 0},
        "entropy": {"type": "number", "minimum": 0},
        "unique": {"type": "boolean"},
        "fixed_dim": {"type": "integer", "minimum": 1},
        "optimizer_iterations": {"type": "integer", "minimum": 0}
      }
    },
    "theorem_trial": {
      "description": "Probe instance; index 0 is the baseline.",
      "type": "object",
      "required": ["index", "seed", "unitary_id", "cr_state_id", "fixed_spectrum", "recursion_spectrum",
                   "degenerate", "recursion_error", "recursion_consistent", "residual", "entropy", "unique",
                   "fixed_dim", "gap_to_baseline"],
      "properties": {
        "fixed_spectrum": {"$ref": "#/$defs/spectrum"},
        "recursion_spectrum": {"anyOf": [{"$ref": "#/$defs/spectrum"}, {"type": "null"}]},
        "degenerate": {"type": "boolean"},
        "recursion_error": {"type": "number", "minimum": 0},
        "recursion_consistent": {"type": "boolean"},
        "gap_to_baseline": {"type": "number", "minimum": 0}
      }
    },
    "swap_trial": {
      "type": "object",
      "required": ["index", "seed", "dim", "probabilities", "consistency_residual", "fixed_point_distance",
                   "purity_defect", "state_error", "schmidt_coefficients", "schmidt_error", "passed"],
      "properties": {
        "probabilities": {"$ref": "#/$defs/spectrum"},
        "schmidt_coefficients": {"$ref": "#/$defs/spectrum"},
        "passed": {"type": "boolean"}
      }
    },
    "nonlinearity_trial": {
      "type": "object",
      "required": ["index", "seed", "unitary_id", "cr_state_id", "alpha", "witness"],
      "properties": {"witness": {"type": "number", "minimum": 0}}
    },
    "special_check": {
      "type": "object",
      "required": ["unitary_id"],
      "anyOf": [
        {"required": ["purifiable_universally_here", "reason", "fixed_spectrum", "flat_gap", "swap_matched"]},
        {"required": ["error"]}
      ]
    },
    "special_trial": {
      "type": "object",
      "required": ["index", "seed", "cr_state_id", "checks"],
      "properties": {"checks": {"type": "array", "items": {"$ref": "#/$defs/special_check"}}}
    },
    "summary": {
      "description": "witness_fraction: theorem1/theorem2/fixed-point = share of trials whose fixed-point spectrum differs from the baseline (trial 0) by more than tol_spec; nonlinearity = share of trials with witness > tol_spec; special-cases = share of checks that are not purifiable; swap-entanglement = 0.",
      "type": "object",
      "required": ["witness_fraction", "max_spectrum_gap", "max_residual", "failures", "wall_time_ms", "scenario"],
      "properties": {
        "witness_fraction": {"type": "number", "minimum": 0, "maximum": 1},
        "max_spectrum_gap": {"type": "number", "minimum": 0},
        "max_residual": {"type": "number", "minimum": 0},
        "failures": {"type": "integer", "minimum": 0},
        "wall_time_ms": {"type": "number", "minimum": 0},
        "scenario": {"type": "object"}
      }
    },
    "report": {
      "type": "object",
      "required": ["format_version", "tool", "tool_version", "config", "trials", "summary"],
      "properties": {
        "format_version": {"const": 1},
        "tool": {"const": "ctc-lab"},
        "tool_version": {"type": "string"},
        "config": {"$ref": "#/$defs/config"},
        "trials": {
          "type": "array",
          "items": {
            "anyOf": [
              {"$ref": "#/$defs/error_trial"},
              {"$ref": "#/$defs/fixed_point_trial"},
              {"$ref": "#/$defs/theorem_trial"},
              {"$ref": "#/$defs/swap_trial"},
              {"$ref": "#/$defs/nonlinearity_trial"},
              {"$ref": "#/$defs/special_trial"}
            ]
          }
        },
        "summary": {"$ref": "#/$defs/summary"}
      }
    }
  }
}
)json");
}

}  // namespace ctclab::cli
