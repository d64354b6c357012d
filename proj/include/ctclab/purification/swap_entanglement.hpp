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
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>

#include "ctclab/deutsch.hpp"

namespace ctclab::purification {

struct SwapEntanglementReport {
  Index dim = 0;
  RealVector probabilities;
  double consistency_residual = 0.0;   // CTC marginal after SWAP vs ρ_CTC
  double fixed_point_distance = 0.0;   // Deutsch fixed point of (SWAP, ρ_CR') vs ρ_CTC
  double purity_defect = 0.0;          // |1 − Tr(ρ_{CR,CTC}²)|
  double state_error = 0.0;            // trace distance of ρ_{CR,CTC} to |Ψ⟩⟨Ψ|
  RealVector schmidt_coefficients;     // of the CR–CTC output
  double schmidt_error = 0.0;          // vs √p_k, sorted, zero-padded
  bool passed = false;
};

/**
 * Entangles a CR system with a CTC system by swapping half of a CR pair.
 *
 * Prepares |Ψ⟩_{CR,CR'} = Σ_k √p_k |a_k⟩|k⟩ (random orthonormal |a_k⟩ from
 * `seed`) and ρ_CTC = Σ_k p_k |k⟩⟨k|, applies SWAP on CR' ⊗ CTC, and checks
 * that ρ_CTC is reproduced on the CTC wire while CR–CTC ends up in the pure
 * state Σ_k √p_k |a_k⟩|k⟩.
 */
inline SwapEntanglementReport swap_entanglement_scenario(const RealVector& probs, Index d,
                                                         std::uint64_t seed, double tol = 1e-10) {
  if (d < 1 || probs.size() != d) throw DomainError("swap_entanglement: probability vector must have length d");
  if (!probs.allFinite() || probs.minCoeff() < 0.0 || std::abs(probs.sum() - 1.0) > 1e-12) {
    throw DomainError("swap_entanglement: probabilities must be nonnegative and sum to 1");
  }
  Rng rng = Rng::stream(seed, "swap-entanglement", 0);
  const ComplexMatrix a = haar_unitary(d, rng).matrix();

  ComplexVector psi = ComplexVector::Zero(d * d);
  for (Index k = 0; k < d; ++k) {
    psi += std::sqrt(probs(k)) * tensor(ComplexVector(a.col(k)), PureState::basis(d, k).amplitudes());
  }
  const ComplexMatrix psi_proj = psi * psi.adjoint();
  const ComplexMatrix rho_ctc = probs.cast<Complex>().asDiagonal().toDenseMatrix();

  // CR ⊗ CR' ⊗ CTC, SWAP acting on the last two factors.
  const ComplexMatrix total = tensor(psi_proj, rho_ctc);
  const ComplexMatrix u = tensor(identity(d), swap_unitary(d).matrix());
  const ComplexMatrix out = u * total * u.adjoint();
  const std::array<Index, 3> dims{d, d, d};
  const std::array<Index, 1> keep_ctc{2};
  const std::array<Index, 2> keep_cr_ctc{0, 2};

  SwapEntanglementReport rep;
  rep.dim = d;
  rep.probabilities = probs;
  rep.consistency_residual = trace_distance(partial_trace(out, dims, keep_ctc), rho_ctc);

  const ComplexMatrix rho_cr_prime = partial_trace(psi_proj, Dims{d, d}, Keep::B);
  const deutsch::CtcChannel ch(swap_unitary(d), DensityMatrix::from_unnormalized(rho_cr_prime), d, d);
  rep.fixed_point_distance =
      trace_distance(deutsch::fixed_points(ch).representative.matrix(), rho_ctc);

  const ComplexMatrix joint = hermitize(partial_trace(out, dims, keep_cr_ctc));
  rep.purity_defect = std::abs(1.0 - (joint * joint).trace().real());
  rep.state_error = trace_distance(joint, psi_proj);

  const HermitianEigen eig = eig_hermitian(joint);
  const SchmidtDecomposition sd = schmidt(ComplexVector(eig.vectors.col(0)), Dims{d, d});
  rep.schmidt_coefficients = sd.coefficients;
  RealVector expected = probs.cwiseSqrt();
  std::sort(expected.data(), expected.data() + d, std::greater<>{});
  RealVector got = RealVector::Zero(d);
  got.head(sd.rank()) = sd.coefficients;
  rep.schmidt_error = (got - expected).cwiseAbs().maxCoeff();

  rep.passed = rep.consistency_residual <= tol && rep.fixed_point_distance <= tol &&
               rep.purity_defect <= tol && rep.schmidt_error <= tol;
  return rep;
}

}  // namespace ctclab::purification
