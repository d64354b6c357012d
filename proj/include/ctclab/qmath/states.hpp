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
#include <string>
#include <utility>

#include "ctclab/qmath/linalg.hpp"

namespace ctclab {

/// Unit-norm state vector.
class PureState {
 public:
  /// Validates |‖v‖ − 1| ≤ tol.norm; the stored vector is renormalized.
  static PureState from_amplitudes(ComplexVector v, const Tolerances& tol = {}) {
    if (v.size() == 0) throw DomainError("PureState: empty amplitude vector");
    if (!v.allFinite()) throw DomainError("PureState: non-finite amplitudes");
    const double n = v.norm();
    if (std::abs(n - 1.0) > tol.norm) {
      throw DomainError("PureState: norm is " + std::to_string(n) + ", expected 1");
    }
    v /= n;
    return PureState(std::move(v));
  }

  /// Normalizes any nonzero vector.
  static PureState normalized(ComplexVector v) {
    const double n = v.norm();
    if (!(n > 0.0) || !v.allFinite()) throw DomainError("PureState: cannot normalize");
    v /= n;
    return PureState(std::move(v));
  }

  static PureState basis(Index dim, Index i) {
    if (i < 0 || i >= dim) throw ShapeError("PureState::basis: index out of range");
    ComplexVector v = ComplexVector::Zero(dim);
    v(i) = 1.0;
    return PureState(std::move(v));
  }

  Index dim() const { return amps_.size(); }
  const ComplexVector& amplitudes() const { return amps_; }
  ComplexMatrix projector() const { return amps_ * amps_.adjoint(); }

 private:
  explicit PureState(ComplexVector v) : amps_(std::move(v)) {}
  ComplexVector amps_;
};

/// Hermitian, positive semidefinite, unit-trace operator.
class DensityMatrix {
 public:
  /**
   * Checks Hermiticity, unit trace and positivity against `tol`. The stored
   * matrix is the Hermitian part of the input.
   */
  static DensityMatrix from_matrix(const ComplexMatrix& m, const Tolerances& tol = {}) {
    require_square(m, "DensityMatrix");
    if (m.rows() == 0) throw DomainError("DensityMatrix: empty matrix");
    if (!all_finite(m)) throw DomainError("DensityMatrix: non-finite entries");
    const double herm = hermiticity_residual(m);
    if (herm > tol.herm) {
      throw DomainError("DensityMatrix: not Hermitian (residual " + std::to_string(herm) + ")");
    }
    const double tr_err = std::abs(m.trace() - Complex(1.0, 0.0));
    if (tr_err > tol.trace) {
      throw DomainError("DensityMatrix: trace deviates from 1 by " + std::to_string(tr_err));
    }
    const ComplexMatrix h = hermitize(m);
    const double min_eig = spectrum_of(h).eigenvalues.minCoeff();
    if (min_eig < -tol.psd) {
      throw DomainError("DensityMatrix: negative eigenvalue " + std::to_string(min_eig));
    }
    return DensityMatrix(h);
  }

  /// Hermitizes and rescales to unit trace before validating. For operators
  /// produced by arithmetic that are states up to rounding.
  static DensityMatrix from_unnormalized(const ComplexMatrix& m, const Tolerances& tol = {}) {
    require_square(m, "DensityMatrix");
    const ComplexMatrix h = hermitize(m);
    const double tr = h.trace().real();
    if (!(tr > 0.0)) throw DomainError("DensityMatrix: non-positive trace");
    return from_matrix(h / tr, tol);
  }

  static DensityMatrix from_pure(const PureState& psi) {
    return DensityMatrix(psi.projector());
  }

  static DensityMatrix maximally_mixed(Index dim) {
    if (dim <= 0) throw DomainError("DensityMatrix: dimension must be positive");
    return DensityMatrix(identity(dim) / static_cast<double>(dim));
  }

  /// Diagonal state with the given probabilities (must sum to 1).
  static DensityMatrix diagonal(const RealVector& probs, const Tolerances& tol = {}) {
    return from_matrix(probs.cast<Complex>().asDiagonal().toDenseMatrix(), tol);
  }

  Index dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  double purity() const { return (m_ * m_).trace().real(); }

 private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// Square matrix with U†U = I.
class UnitaryMatrix {
 public:
  static UnitaryMatrix from_matrix(ComplexMatrix u, const Tolerances& tol = {}) {
    require_square(u, "UnitaryMatrix");
    if (u.rows() == 0) throw DomainError("UnitaryMatrix: empty matrix");
    if (!all_finite(u)) throw DomainError("UnitaryMatrix: non-finite entries");
    const double res = max_abs(u.adjoint() * u - identity(u.rows()));
    if (res > tol.ortho) {
      throw DomainError("UnitaryMatrix: U†U deviates from I by " + std::to_string(res));
    }
    return UnitaryMatrix(std::move(u));
  }

  Index dim() const { return u_.rows(); }
  const ComplexMatrix& matrix() const { return u_; }
  UnitaryMatrix adjoint() const { return UnitaryMatrix(u_.adjoint()); }

  ComplexMatrix conjugate(const ComplexMatrix& m) const { return u_ * m * u_.adjoint(); }

 private:
  explicit UnitaryMatrix(ComplexMatrix u) : u_(std::move(u)) {}
  ComplexMatrix u_;
};

}  // namespace ctclab
