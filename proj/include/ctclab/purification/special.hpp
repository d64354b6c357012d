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

#include "ctclab/deutsch.hpp"
#include "ctclab/purification/purify.hpp"

namespace ctclab::purification {

struct SpecialCaseResult {
  bool purifiable_universally_here = false;
  std::string reason;
  Spectrum fixed_spectrum;
  double flat_gap = 0.0;        // spectrum distance to (1/d, ..., 1/d)
  bool swap_matched = false;    // U is SWAP and ρ* equals ρ_CR
};

/**
 * Purification can survive only where the fixed-point spectrum is flat: then
 * Spec(ρ*) = Spec(ρ_CTC') holds whatever ρ_CR and U are. The swap clause
 * (U = SWAP, ρ* = ρ_CR) is reported alongside but is not sufficient alone.
 */
inline SpecialCaseResult special_case_check(const UnitaryMatrix& u, const DensityMatrix& rho_cr,
                                            const Tolerances& tol = {}) {
  const Index d_cr = rho_cr.dim();
  if (u.dim() % d_cr != 0) throw ShapeError("special_case_check: U dimension not a multiple of d_cr");
  const Index d_ctc = u.dim() / d_cr;
  const deutsch::CtcChannel ch(u, rho_cr, d_cr, d_ctc);
  const deutsch::FixedPointSolution sol = deutsch::fixed_points(ch, tol);

  SpecialCaseResult out;
  out.fixed_spectrum = spectrum_of(sol.representative.matrix());
  const SpectrumComparison flat = spectra_compare(
      out.fixed_spectrum, Spectrum{RealVector::Constant(d_ctc, 1.0 / static_cast<double>(d_ctc))}, tol.spec);
  out.flat_gap = flat.max_abs_gap;
  out.purifiable_universally_here = flat.equal;
  if (d_cr == d_ctc && max_abs(u.matrix() - swap_unitary(d_cr).matrix()) <= 1e-12) {
    out.swap_matched = trace_distance(sol.representative, rho_cr) <= tol.spec;
  }
  out.reason = flat.equal ? "flat-spectrum" : "spectrum-not-flat";
  if (out.swap_matched) out.reason += "; swap-with-matched-state";
  return out;
}

}  // namespace ctclab::purification
