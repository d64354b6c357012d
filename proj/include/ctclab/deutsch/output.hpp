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

#include "ctclab/deutsch/fixed_point.hpp"

namespace ctclab::deutsch {

/// ρ'_CR = Tr_CTC[U (ρ_CR ⊗ ρ*) U†]. Rejects ρ* that is not a fixed point of `ch`.
inline DensityMatrix cr_output(const CtcChannel& ch, const DensityMatrix& rho_star,
                               const Tolerances& tol = {}) {
  if (rho_star.dim() != ch.d_ctc()) throw ShapeError("cr_output: CTC state has wrong dimension");
  const double residual = trace_distance(ch.apply(rho_star.matrix()), rho_star.matrix());
  if (residual > tol.fixed) {
    throw ContractError("cr_output: state is not a fixed point (residual " +
                        std::to_string(residual) + ")");
  }
  return DensityMatrix::from_matrix(
      hermitize(partial_trace(ch.joint_output(rho_star.matrix()), ch.dims(), Keep::A)), tol);
}

/// The full CR map ρ_CR ↦ ρ'_CR, solving the consistency condition on the way.
inline DensityMatrix evolve_cr(const UnitaryMatrix& u, const DensityMatrix& rho_cr, Index d_ctc,
                               const Tolerances& tol = {}) {
  const CtcChannel ch(u, rho_cr, rho_cr.dim(), d_ctc);
  return cr_output(ch, fixed_points(ch, tol).representative, tol);
}

/**
 * Trace distance between out(αρ₁ + (1−α)ρ₂) and α·out(ρ₁) + (1−α)·out(ρ₂).
 * Zero whenever the CR map is affine on this triple.
 */
inline double nonlinearity_witness(const UnitaryMatrix& u, const DensityMatrix& rho1,
                                   const DensityMatrix& rho2, double alpha,
                                   const Tolerances& tol = {}) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("nonlinearity_witness: alpha outside [0,1]");
  if (rho1.dim() != rho2.dim()) throw ShapeError("nonlinearity_witness: CR states differ in dimension");
  const Index d_cr = rho1.dim();
  if (u.dim() % d_cr != 0) throw ShapeError("nonlinearity_witness: U dimension not a multiple of d_cr");
  const Index d_ctc = u.dim() / d_cr;

  const DensityMatrix mix =
      DensityMatrix::from_unnormalized(alpha * rho1.matrix() + (1.0 - alpha) * rho2.matrix(), tol);
  const ComplexMatrix lhs = evolve_cr(u, mix, d_ctc, tol).matrix();
  const ComplexMatrix rhs = alpha * evolve_cr(u, rho1, d_ctc, tol).matrix() +
                            (1.0 - alpha) * evolve_cr(u, rho2, d_ctc, tol).matrix();
  return trace_distance(lhs, rhs);
}

/// Trace distance between Tr_CR[U(|ψ⟩⟨ψ| ⊗ |φ⟩⟨φ|)U†] and |φ⟩⟨φ|.
inline double purity_consistency_residual(const UnitaryMatrix& u, const PureState& psi_cr,
                                          const PureState& phi_ctc) {
  const Dims dims{psi_cr.dim(), phi_ctc.dim()};
  if (u.dim() != dims.total()) throw ShapeError("purity_consistency_check: U dimension mismatch");
  const ComplexMatrix joint = u.conjugate(tensor(psi_cr.projector(), phi_ctc.projector()));
  return trace_distance(partial_trace(joint, dims, Keep::B), phi_ctc.projector());
}

/// Whether the pure CTC state |φ⟩ is self-consistent for the pure product input.
inline bool purity_consistency_check(const UnitaryMatrix& u, const PureState& psi_cr,
                                     const PureState& phi_ctc, double tol = 1e-10) {
  return purity_consistency_residual(u, psi_cr, phi_ctc) <= tol;
}

}  // namespace ctclab::deutsch
