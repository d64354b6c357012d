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

#include "ctclab/qmath.hpp"

namespace ctclab::purification {

/// |Φ⟩ = Σ_k √p_k |k⟩ ⊗ |e_k⟩ for ρ = Σ_k p_k |k⟩⟨k|, ancilla of the same dimension.
struct PurificationRecord {
  DensityMatrix source;
  PureState purified;
  SchmidtDecomposition schmidt;
};

inline PurificationRecord canonical_purification(const DensityMatrix& rho, const Tolerances& tol = {}) {
  const Index d = rho.dim();
  const HermitianEigen eig = eig_hermitian(rho.matrix(), tol.herm);
  const RealVector p = clamp_probabilities(eig.spectrum.eigenvalues, tol.psd);
  ComplexVector phi = ComplexVector::Zero(d * d);
  for (Index k = 0; k < d; ++k) {
    if (p(k) <= 0.0) continue;
    phi += std::sqrt(p(k)) * tensor(ComplexVector(eig.vectors.col(k)),
                                    PureState::basis(d, k).amplitudes());
  }
  PureState purified = PureState::normalized(std::move(phi));
  SchmidtDecomposition sd = schmidt(purified, Dims{d, d}, tol);
  return {rho, std::move(purified), std::move(sd)};
}

struct SpectrumComparison {
  Spectrum spec_a;
  Spectrum spec_b;
  double max_abs_gap = 0.0;
  bool equal = true;
};

/// Compares sorted spectra position by position; the shorter one is zero-padded.
inline SpectrumComparison spectra_compare(const Spectrum& a, const Spectrum& b, double tol) {
  const Index n = std::max(a.dim(), b.dim());
  RealVector pa = RealVector::Zero(n);
  RealVector pb = RealVector::Zero(n);
  pa.head(a.dim()) = a.eigenvalues;
  pb.head(b.dim()) = b.eigenvalues;
  std::sort(pa.data(), pa.data() + n, std::greater<>{});
  std::sort(pb.data(), pb.data() + n, std::greater<>{});
  SpectrumComparison out{a, b, n == 0 ? 0.0 : (pa - pb).cwiseAbs().maxCoeff(), true};
  out.equal = out.max_abs_gap <= tol;
  return out;
}

inline SpectrumComparison spectra_compare(const DensityMatrix& a, const DensityMatrix& b,
                                          double tol = 1e-9) {
  return spectra_compare(spectrum_of(a.matrix()), spectrum_of(b.matrix()), tol);
}

}  // namespace ctclab::purification
