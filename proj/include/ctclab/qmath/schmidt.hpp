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
#include <numeric>
#include <vector>

#include <Eigen/SVD>

#include "ctclab/qmath/states.hpp"

namespace ctclab {

/**
 * v = Σ_k c_k |a_k⟩ ⊗ |b_k⟩ with c descending and both bases orthonormal.
 *
 * Only strictly positive coefficients are kept, so a product state has a
 * single term. Canonical form: the first nonzero amplitude of every |a_k⟩ is
 * real and positive (the phase moves into |b_k⟩), and terms with equal
 * coefficients are ordered by their |a_k⟩ amplitudes, compared
 * lexicographically (real part, then imaginary part, larger first).
 */
struct SchmidtDecomposition {
  Dims dims;
  RealVector coefficients;
  std::vector<ComplexVector> basis_a;
  std::vector<ComplexVector> basis_b;

  Index rank() const { return coefficients.size(); }

  /// Squared coefficients, i.e. the nonzero spectrum of either marginal.
  RealVector probabilities() const { return coefficients.cwiseAbs2(); }

  ComplexVector reconstruct() const {
    ComplexVector v = ComplexVector::Zero(dims.total());
    for (Index k = 0; k < rank(); ++k) {
      v += coefficients(k) * tensor(basis_a[static_cast<std::size_t>(k)],
                                    basis_b[static_cast<std::size_t>(k)]);
    }
    return v;
  }
};

namespace detail {

inline constexpr double kSchmidtTie = 1e-12;
inline constexpr double kAmplitudeZero = 1e-12;

// true when a should precede b among equal-coefficient terms
inline bool amplitude_order(const ComplexVector& a, const ComplexVector& b) {
  for (Index i = 0; i < a.size(); ++i) {
    if (std::abs(a(i) - b(i)) <= kAmplitudeZero) continue;
    if (std::abs(a(i).real() - b(i).real()) > kAmplitudeZero) return a(i).real() > b(i).real();
    return a(i).imag() > b(i).imag();
  }
  return false;
}

}  // namespace detail

/// Schmidt decomposition of a bipartite amplitude vector. `drop` is the
/// coefficient below which a term is discarded.
inline SchmidtDecomposition schmidt(const ComplexVector& v, Dims dims, const Tolerances& tol = {},
                                    double drop = 1e-12) {
  if (v.size() != dims.total()) {
    throw ShapeError("schmidt: vector length " + std::to_string(v.size()) +
                     " does not match dims " + std::to_string(dims.a) + "x" +
                     std::to_string(dims.b));
  }
  const PureState checked = PureState::from_amplitudes(v, tol);

  // W(i, j) = v[i*d_b + j]  =>  W = Σ σ u v†  =>  v = Σ σ u ⊗ conj(v)
  ComplexMatrix w(dims.a, dims.b);
  for (Index i = 0; i < dims.a; ++i)
    for (Index j = 0; j < dims.b; ++j) w(i, j) = checked.amplitudes()(i * dims.b + j);
  Eigen::JacobiSVD<ComplexMatrix> svd(w, Eigen::ComputeThinU | Eigen::ComputeThinV);

  struct Term {
    double c;
    ComplexVector a;
    ComplexVector b;
  };
  std::vector<Term> terms;
  for (Index k = 0; k < svd.singularValues().size(); ++k) {
    const double c = svd.singularValues()(k);
    if (c <= drop) continue;
    ComplexVector a = svd.matrixU().col(k);
    ComplexVector b = svd.matrixV().col(k).conjugate();
    for (Index i = 0; i < a.size(); ++i) {
      if (std::abs(a(i)) > detail::kAmplitudeZero) {
        const Complex phase = a(i) / std::abs(a(i));
        a *= std::conj(phase);
        b *= phase;
        break;
      }
    }
    terms.push_back({c, std::move(a), std::move(b)});
  }

  // JacobiSVD already sorts singular values descending; only ties need ordering.
  for (std::size_t lo = 0; lo < terms.size();) {
    std::size_t hi = lo + 1;
    while (hi < terms.size() && terms[lo].c - terms[hi].c <= detail::kSchmidtTie) ++hi;
    std::stable_sort(terms.begin() + static_cast<std::ptrdiff_t>(lo),
                     terms.begin() + static_cast<std::ptrdiff_t>(hi),
                     [](const Term& x, const Term& y) { return detail::amplitude_order(x.a, y.a); });
    lo = hi;
  }

  SchmidtDecomposition out;
  out.dims = dims;
  out.coefficients.resize(static_cast<Index>(terms.size()));
  for (std::size_t k = 0; k < terms.size(); ++k) {
    out.coefficients(static_cast<Index>(k)) = terms[k].c;
    out.basis_a.push_back(std::move(terms[k].a));
    out.basis_b.push_back(std::move(terms[k].b));
  }
  return out;
}

inline SchmidtDecomposition schmidt(const PureState& v, Dims dims, const Tolerances& tol = {}) {
  return schmidt(v.amplitudes(), dims, tol);
}

}  // namespace ctclab
