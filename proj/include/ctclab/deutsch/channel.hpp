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
#include <utility>
#include <vector>

#include "ctclab/qmath.hpp"

namespace ctclab::deutsch {

/**
 * The map ρ ↦ Tr_CR[U (ρ_CR ⊗ ρ) U†] acting on the CTC system, for a fixed
 * interaction U and CR input ρ_CR.
 *
 * Composite indices are i_CR·d_ctc + i_CTC. The superoperator uses
 * column-stacking vectorization, vec(Λ(ρ)) = S·vec(ρ), and is assembled from
 * Kraus operators K_ab = √λ_a (⟨b| ⊗ I) U (|a⟩ ⊗ I), where ρ_CR = Σ λ_a |a⟩⟨a|,
 * so it is completely positive and trace preserving by construction.
 */
class CtcChannel {
 public:
  CtcChannel(UnitaryMatrix u, DensityMatrix rho_cr, Index d_cr, Index d_ctc)
      : d_cr_(d_cr), d_ctc_(d_ctc), u_(std::move(u)), rho_cr_(std::move(rho_cr)) {
    if (d_cr < 1 || d_ctc < 1) throw ShapeError("CtcChannel: dimensions must be positive");
    if (u_.dim() != d_cr * d_ctc) {
      throw ShapeError("CtcChannel: unitary has dimension " + std::to_string(u_.dim()) +
                       ", expected d_cr*d_ctc = " + std::to_string(d_cr * d_ctc));
    }
    if (rho_cr_.dim() != d_cr) {
      throw ShapeError("CtcChannel: CR state has dimension " + std::to_string(rho_cr_.dim()) +
                       ", expected " + std::to_string(d_cr));
    }
    build_kraus();
    superop_ = ComplexMatrix::Zero(d_ctc * d_ctc, d_ctc * d_ctc);
    for (const auto& k : kraus_) superop_ += tensor(k.conjugate(), k);
  }

  Index d_cr() const { return d_cr_; }
  Index d_ctc() const { return d_ctc_; }
  Dims dims() const { return {d_cr_, d_ctc_}; }
  const UnitaryMatrix& unitary() const { return u_; }
  const DensityMatrix& cr_input() const { return rho_cr_; }
  const ComplexMatrix& superoperator() const { return superop_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

  /// Λ(ρ) through the superoperator. Accepts any d_ctc×d_ctc operator.
  ComplexMatrix apply(const ComplexMatrix& rho) const {
    if (rho.rows() != d_ctc_ || rho.cols() != d_ctc_) {
      throw ShapeError("CtcChannel::apply: operator must be " + std::to_string(d_ctc_) + "x" +
                       std::to_string(d_ctc_));
    }
    return unvec(superop_ * vec(rho), d_ctc_);
  }

  /// U (ρ_CR ⊗ ρ) U†, the joint CR–CTC state after the interaction.
  ComplexMatrix joint_output(const ComplexMatrix& rho_ctc) const {
    if (rho_ctc.rows() != d_ctc_ || rho_ctc.cols() != d_ctc_) {
      throw ShapeError("CtcChannel::joint_output: CTC operator has wrong shape");
    }
    return u_.conjugate(tensor(rho_cr_.matrix(), rho_ctc));
  }

 private:
  void build_kraus() {
    const HermitianEigen eig = eig_hermitian(rho_cr_.matrix());
    const ComplexMatrix& um = u_.matrix();
    for (Index a = 0; a < d_cr_; ++a) {
      const double lambda = eig.spectrum.eigenvalues(a);
      if (lambda <= 0.0) continue;  // rank-deficient inputs are taken as-is
      const ComplexVector ket = eig.vectors.col(a);
      for (Index b = 0; b < d_cr_; ++b) {
        ComplexMatrix k = ComplexMatrix::Zero(d_ctc_, d_ctc_);
        for (Index x = 0; x < d_cr_; ++x) {
          k += ket(x) * um.block(b * d_ctc_, x * d_ctc_, d_ctc_, d_ctc_);
        }
        kraus_.push_back(std::sqrt(lambda) * k);
      }
    }
  }

  Index d_cr_;
  Index d_ctc_;
  UnitaryMatrix u_;
  DensityMatrix rho_cr_;
  std::vector<ComplexMatrix> kraus_;
  ComplexMatrix superop_;
};

inline CtcChannel build_channel(const UnitaryMatrix& u, const DensityMatrix& rho_cr, Index d_cr,
                                Index d_ctc) {
  return CtcChannel(u, rho_cr, d_cr, d_ctc);
}

/// Same as above but validates a raw matrix as unitary first.
inline CtcChannel build_channel(const ComplexMatrix& u, const DensityMatrix& rho_cr, Index d_cr,
                                Index d_ctc, const Tolerances& tol = {}) {
  return CtcChannel(UnitaryMatrix::from_matrix(u, tol), rho_cr, d_cr, d_ctc);
}

/// Λ(ρ) as a validated state.
inline DensityMatrix apply_channel(const CtcChannel& ch, const DensityMatrix& rho,
                                   const Tolerances& tol = {}) {
  if (rho.dim() != ch.d_ctc()) {
    throw ShapeError("apply_channel: state has dimension " + std::to_string(rho.dim()) +
                     ", channel expects " + std::to_string(ch.d_ctc()));
  }
  return DensityMatrix::from_matrix(hermitize(ch.apply(rho.matrix())), tol);
}

}  // namespace ctclab::deutsch
