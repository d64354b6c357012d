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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "ctclab/qmath.hpp"

namespace ctclab::purification {

enum class UnitaryKind { Haar, Swap, Identity, Fixed };
enum class CrKind { PureRandom, MixedRandom, MaximallyMixed, Fixed };

/// Where trial interactions come from.
struct UnitarySpec {
  UnitaryKind kind = UnitaryKind::Haar;
  std::optional<UnitaryMatrix> fixed;  // kind == Fixed
  std::string label;                   // descriptor used for Fixed, e.g. "file:u.json"
};

/// Where trial CR inputs come from. A fixed pure input keeps its state vector.
struct CrSpec {
  CrKind kind = CrKind::PureRandom;
  std::optional<DensityMatrix> fixed;
  std::optional<PureState> fixed_pure;
  std::string label;
};

struct UnitarySample {
  UnitaryMatrix u;
  std::string id;
};

struct CrSample {
  DensityMatrix rho;
  std::optional<PureState> pure;  // set when the input is a known pure state
  std::string id;
};

inline const char* to_string(UnitaryKind k) {
  switch (k) {
    case UnitaryKind::Haar: return "haar";
    case UnitaryKind::Swap: return "swap";
    case UnitaryKind::Identity: return "identity";
    case UnitaryKind::Fixed: return "file";
  }
  return "?";
}

inline const char* to_string(CrKind k) {
  switch (k) {
    case CrKind::PureRandom: return "pure-random";
    case CrKind::MixedRandom: return "mixed-random";
    case CrKind::MaximallyMixed: return "maximally-mixed";
    case CrKind::Fixed: return "file";
  }
  return "?";
}

inline UnitarySample sample_unitary(const UnitarySpec& spec, Index d_cr, Index d_ctc, Rng& rng) {
  switch (spec.kind) {
    case UnitaryKind::Haar:
      return {haar_unitary(d_cr * d_ctc, rng), "haar"};
    case UnitaryKind::Swap:
      if (d_cr != d_ctc) throw ShapeError("swap interaction needs d_cr == d_ctc");
      return {swap_unitary(d_cr), "swap"};
    case UnitaryKind::Identity:
      return {identity_unitary(d_cr * d_ctc), "identity"};
    case UnitaryKind::Fixed:
      if (!spec.fixed) throw DomainError("fixed unitary source without a matrix");
      if (spec.fixed->dim() != d_cr * d_ctc) throw ShapeError("fixed unitary has wrong dimension");
      return {*spec.fixed, spec.label.empty() ? "fixed" : spec.label};
  }
  throw DomainError("unknown unitary kind");
}

inline CrSample sample_cr(const CrSpec& spec, Index d_cr, Rng& rng) {
  switch (spec.kind) {
    case CrKind::PureRandom: {
      PureState psi = random_pure(d_cr, rng);
      return {DensityMatrix::from_pure(psi), std::move(psi), "pure-random"};
    }
    case CrKind::MixedRandom:
      return {random_density(d_cr, d_cr, rng), std::nullopt, "mixed-random"};
    case CrKind::MaximallyMixed:
      return {DensityMatrix::maximally_mixed(d_cr), std::nullopt, "maximally-mixed"};
    case CrKind::Fixed: {
      const std::string id = spec.label.empty() ? "fixed" : spec.label;
      if (spec.fixed_pure) {
        if (spec.fixed_pure->dim() != d_cr) throw ShapeError("fixed CR state has wrong dimension");
        return {DensityMatrix::from_pure(*spec.fixed_pure), spec.fixed_pure, id};
      }
      if (!spec.fixed) throw DomainError("fixed CR source without a state");
      if (spec.fixed->dim() != d_cr) throw ShapeError("fixed CR state has wrong dimension");
      return {*spec.fixed, std::nullopt, id};
    }
  }
  throw DomainError("unknown CR kind");
}

/// Pure vector behind a rank-one density matrix, if there is one.
inline std::optional<PureState> pure_vector_of(const DensityMatrix& rho, double tol = 1e-10) {
  const HermitianEigen eig = eig_hermitian(rho.matrix());
  if (std::abs(eig.spectrum.eigenvalues(0) - 1.0) > tol) return std::nullopt;
  return PureState::normalized(eig.vectors.col(0));
}

}  // namespace ctclab::purification
