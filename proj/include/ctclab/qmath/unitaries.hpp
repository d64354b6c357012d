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

#include "ctclab/qmath/states.hpp"

namespace ctclab {

/// SWAP on C^d ⊗ C^d: |i⟩|j⟩ ↦ |j⟩|i⟩.
inline UnitaryMatrix swap_unitary(Index d) {
  if (d < 1) throw DomainError("swap_unitary: dimension must be positive");
  ComplexMatrix u = ComplexMatrix::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) u(j * d + i, i * d + j) = 1.0;
  return UnitaryMatrix::from_matrix(std::move(u));
}

/// Identity on a space of total dimension `dim`.
inline UnitaryMatrix identity_unitary(Index dim) {
  if (dim < 1) throw DomainError("identity_unitary: dimension must be positive");
  return UnitaryMatrix::from_matrix(identity(dim));
}

/**
 * Controlled-V on C^control_dim ⊗ C^{dim V}. V acts on the second factor iff
 * the control index equals control_dim − 1; otherwise the identity.
 */
inline UnitaryMatrix controlled_unitary(const UnitaryMatrix& v, Index control_dim) {
  if (control_dim < 1) throw DomainError("controlled_unitary: control dimension must be positive");
  const Index t = v.dim();
  ComplexMatrix u = identity(control_dim * t);
  u.block((control_dim - 1) * t, (control_dim - 1) * t, t, t) = v.matrix();
  return UnitaryMatrix::from_matrix(std::move(u));
}

inline UnitaryMatrix pauli_x() {
  ComplexMatrix x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  return UnitaryMatrix::from_matrix(std::move(x));
}

/// Control on the first (CR) factor, target on the second.
inline UnitaryMatrix cnot() { return controlled_unitary(pauli_x(), 2); }

}  // namespace ctclab
