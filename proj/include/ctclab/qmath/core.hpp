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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ctclab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Largest operator dimension any qmath routine will allocate unless the
/// caller passes its own cap.
inline constexpr Index kDefaultMaxDim = 4096;

/**
 * Numerical tolerances shared by every module. Each operation takes a
 * `Tolerances` argument so callers (and the CLI `tol_overrides` map) can
 * tighten or loosen a single threshold without touching the others.
 */
struct Tolerances {
  double herm = 1e-10;   // ‖M − M†‖_max
  double trace = 1e-10;  // |Tr M − 1|
  double ortho = 1e-10;  // ‖V†V − I‖_max
  double psd = 1e-9;     // smallest admissible eigenvalue is −psd
  double norm = 1e-10;   // |‖v‖₂ − 1|
  double recon = 1e-9;   // decomposition reconstruction residual
  double spec = 1e-9;    // spectrum equality
  double fixed = 1e-9;   // fixed-point residual (trace distance)
  double eig = 1e-8;     // clustering radius around superoperator eigenvalue 1
  double entropy = 1e-6; // max-entropy optimality (nats)
  double recursion = 1e-8;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A requested dimension exceeds the configured cap.
class SizingError : public Error {
 public:
  using Error::Error;
};

/// Input violates a mathematical precondition (not Hermitian, not unit norm...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numerical routine could not reach its target accuracy.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Caller broke an operation contract (e.g. passed a non-fixed point).
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace ctclab
