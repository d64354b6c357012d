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

#include <cmath>

#include "ctclab/qmath/states.hpp"

namespace ctclab {

/// Zero out eigenvalues in [−tol_psd, 0) and renormalize to unit sum.
inline RealVector clamp_probabilities(RealVector p, double tol_psd = 1e-9) {
  for (Index i = 0; i < p.size(); ++i) {
    if (p(i) < 0.0) {
      if (p(i) < -tol_psd) {
        throw DomainError("clamp_probabilities: eigenvalue " + std::to_string(p(i)) +
                          " below −tol_psd");
      }
      p(i) = 0.0;
    }
  }
  const double s = p.sum();
  if (!(s > 0.0)) throw DomainError("clamp_probabilities: zero total weight");
  return p / s;
}

/// Shannon entropy in nats with 0·ln 0 = 0.
inline double shannon_entropy(const RealVector& p) {
  double s = 0.0;
  for (Index i = 0; i < p.size(); ++i) {
    if (p(i) > 0.0) s -= p(i) * std::log(p(i));
  }
  return s;
}

/// Von Neumann entropy of an operator that is a state up to rounding.
inline double entropy_of(const ComplexMatrix& m, double tol_psd = 1e-9) {
  return shannon_entropy(clamp_probabilities(spectrum_of(hermitize(m)).eigenvalues, tol_psd));
}

/// −Tr ρ ln ρ in nats.
inline double vn_entropy(const DensityMatrix& rho, const Tolerances& tol = {}) {
  return entropy_of(rho.matrix(), tol.psd);
}

/// ½‖a − b‖₁ for Hermitian operators of equal dimension.
inline double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("trace_distance: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(a - b), Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

inline double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return trace_distance(a.matrix(), b.matrix());
}

}  // namespace ctclab
