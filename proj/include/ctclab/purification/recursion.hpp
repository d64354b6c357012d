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

#include "ctclab/deutsch.hpp"
#include "ctclab/purification/purify.hpp"

namespace ctclab::purification {

/**
 * Right-hand side of the fixed-point eigenvalue recursion, one entry per
 * eigenvector |n⟩ of ρ* (in eig_hermitian order, so nominally descending).
 */
struct RecursionResult {
  Spectrum spectrum;
  /// Two eigenvalues of ρ* closer than kDegeneracyGap: the eigenbasis is not unique.
  bool degenerate = false;
};

inline constexpr double kDegeneracyGap = 1e-8;

namespace detail {

inline bool has_degeneracy(const RealVector& p) {
  for (Index i = 0; i + 1 < p.size(); ++i)
    if (std::abs(p(i) - p(i + 1)) < kDegeneracyGap) return true;
  return false;
}

// Accumulates Σ_m w·g_m |⟨n|C_m⟩|² for the Schmidt expansion of U(|x⟩|k⟩),
// where C_m are the CTC-side Schmidt vectors.
inline void accumulate_term(RealVector& out, const UnitaryMatrix& u, const ComplexVector& cr_ket,
                            const ComplexVector& ctc_ket, double weight, const ComplexMatrix& n_basis,
                            Dims dims, const Tolerances& tol) {
  const ComplexVector w = u.matrix() * tensor(cr_ket, ctc_ket);
  const SchmidtDecomposition sd = schmidt(w, dims, tol);
  const RealVector g = sd.probabilities();
  for (Index m = 0; m < sd.rank(); ++m) {
    const ComplexVector overlaps = n_basis.adjoint() * sd.basis_b[static_cast<std::size_t>(m)];
    out += weight * g(m) * overlaps.cwiseAbs2();
  }
}

inline void check_dims(const UnitaryMatrix& u, Index d_cr, const DensityMatrix& rho_star, const char* who) {
  if (u.dim() != d_cr * rho_star.dim()) {
    throw ShapeError(std::string(who) + ": U dimension does not equal d_cr * d_ctc");
  }
}

}  // namespace detail

/**
 * Pure CR input |ψ⟩:
 *   p_n = Σ_{k,m} p_k f_m^k(ψ) |⟨n|u_m(k)⟩|²
 * with U(|ψ⟩|k⟩) = Σ_m √f_m^k |a_m^k⟩|u_m(k)⟩ and {p_k, |k⟩} the spectral
 * decomposition of ρ*. For a true fixed point the result reproduces Spec(ρ*).
 */
inline RecursionResult theorem1_recursion(const UnitaryMatrix& u, const PureState& psi_cr,
                                          const DensityMatrix& rho_star, const Tolerances& tol = {}) {
  detail::check_dims(u, psi_cr.dim(), rho_star, "theorem1_recursion");
  const Dims dims{psi_cr.dim(), rho_star.dim()};
  const HermitianEigen eig = eig_hermitian(rho_star.matrix(), tol.herm);
  const RealVector p = clamp_probabilities(eig.spectrum.eigenvalues, tol.psd);
  RealVector out = RealVector::Zero(dims.b);
  for (Index k = 0; k < dims.b; ++k) {
    if (p(k) <= 0.0) continue;
    detail::accumulate_term(out, u, psi_cr.amplitudes(), eig.vectors.col(k), p(k), eig.vectors, dims, tol);
  }
  return {Spectrum{out}, detail::has_degeneracy(p)};
}

/**
 * Mixed CR input ρ_CR = Σ_i λ_i |b_i⟩⟨b_i|:
 *   p_n = Σ_{i,k,m} p_k λ_i g_m(i,k) |⟨n|C_m^i(k)⟩|²
 * with U(|b_i⟩|k⟩) = Σ_m √g_m(i,k) |B_m^k(i)⟩|C_m^i(k)⟩. The overlap is taken
 * with the CTC-side Schmidt vectors C, the ones left after tracing out CR.
 */
inline RecursionResult theorem2_recursion(const UnitaryMatrix& u, const DensityMatrix& rho_cr,
                                          const DensityMatrix& rho_star, const Tolerances& tol = {}) {
  detail::check_dims(u, rho_cr.dim(), rho_star, "theorem2_recursion");
  const Dims dims{rho_cr.dim(), rho_star.dim()};
  const HermitianEigen cr = eig_hermitian(rho_cr.matrix(), tol.herm);
  const RealVector lambda = clamp_probabilities(cr.spectrum.eigenvalues, tol.psd);
  const HermitianEigen eig = eig_hermitian(rho_star.matrix(), tol.herm);
  const RealVector p = clamp_probabilities(eig.spectrum.eigenvalues, tol.psd);
  RealVector out = RealVector::Zero(dims.b);
  for (Index i = 0; i < dims.a; ++i) {
    if (lambda(i) <= 0.0) continue;
    for (Index k = 0; k < dims.b; ++k) {
      if (p(k) <= 0.0) continue;
      detail::accumulate_term(out, u, cr.vectors.col(i), eig.vectors.col(k), lambda(i) * p(k),
                              eig.vectors, dims, tol);
    }
  }
  return {Spectrum{out}, detail::has_degeneracy(p)};
}

}  // namespace ctclab::purification
