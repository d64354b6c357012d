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
#include <numbers>
#include <random>
#include <string_view>

#include <Eigen/QR>

#include "ctclab/qmath/states.hpp"

namespace ctclab {

/**
 * Seeded pseudorandom source.
 *
 * Engine: std::mt19937_64. Independent streams are derived with
 * `Rng::stream(seed, tag, index)`, which seeds the engine with
 *   splitmix64(seed ^ splitmix64(fnv1a64(tag) + index)).
 * Streams for different (tag, index) pairs do not share state, so trials can
 * run in any order (or in parallel) and still reproduce bit-for-bit.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  static constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  static constexpr std::uint64_t derive(std::uint64_t seed, std::string_view tag,
                                        std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(fnv1a64(tag) + index));
  }

  static Rng stream(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
    return Rng(derive(seed, tag, index));
  }

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  Complex complex_normal() {
    // unit variance: E|z|² = 1
    const double re = normal();
    const double im = normal();
    return {re / std::numbers::sqrt2, im / std::numbers::sqrt2};
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

inline ComplexMatrix ginibre(Index rows, Index cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  // fill column-major so the draw order is fixed
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
  return g;
}

/// Haar-distributed unitary: Ginibre → QR → column phases fixed by diag(R).
inline UnitaryMatrix haar_unitary(Index dim, Rng& rng) {
  if (dim < 1) throw DomainError("haar_unitary: dimension must be positive");
  const ComplexMatrix z = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix& r = qr.matrixQR();
  for (Index j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    // Q·diag(R_jj/|R_jj|) makes the decomposition unique (R with positive diagonal).
    const Complex phase = mag > 0.0 ? rjj / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return UnitaryMatrix::from_matrix(std::move(q), Tolerances{.ortho = 1e-12});
}

inline PureState random_pure(Index dim, Rng& rng) {
  if (dim < 1) throw DomainError("random_pure: dimension must be positive");
  return PureState::normalized(ginibre(dim, 1, rng).col(0));
}

/// ρ = G G† / Tr(G G†) with G a dim×rank Ginibre matrix (induced measure).
inline DensityMatrix random_density(Index dim, Index rank, Rng& rng) {
  if (dim < 1) throw DomainError("random_density: dimension must be positive");
  if (rank < 1 || rank > dim) {
    throw DomainError("random_density: rank " + std::to_string(rank) + " outside [1, " +
                      std::to_string(dim) + "]");
  }
  const ComplexMatrix g = ginibre(dim, rank, rng);
  const ComplexMatrix rho = g * g.adjoint();
  return DensityMatrix::from_unnormalized(rho);
}

/// Uniform point on the probability simplex (flat Dirichlet).
inline RealVector random_probabilities(Index dim, Rng& rng) {
  RealVector p(dim);
  for (Index i = 0; i < dim; ++i) p(i) = -std::log(1.0 - rng.uniform());
  return p / p.sum();
}

}  // namespace ctclab
