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

#include <cmath>
#include <vector>

#include "catch_amalgamated.hpp"
#include "ctclab/deutsch.hpp"
#include "oracles.hpp"

using namespace ctclab;
using namespace ctclab::deutsch;
using Catch::Matchers::WithinAbs;

namespace {

DensityMatrix ket_state(Index d, Index i) { return DensityMatrix::from_pure(PureState::basis(d, i)); }

// CR qubit, CTC qutrit; U exchanges |0,2> and |1,0> and fixes the rest.
UnitaryMatrix decay_unitary() {
  ComplexMatrix u = identity(6);
  const Index a = 0 * 3 + 2, b = 1 * 3 + 0;
  u(a, a) = u(b, b) = 0.0;
  u(a, b) = u(b, a) = 1.0;
  return UnitaryMatrix::from_matrix(u);
}

}  // namespace

TEST_CASE("channel construction", "[deutsch][channel]") {
  Rng rng(1);
  SECTION("swap discards the CTC input") {
    for (Index d : {2, 3}) {
      const DensityMatrix cr = random_density(d, d, rng);
      const CtcChannel ch = build_channel(swap_unitary(d), cr, d, d);
      for (int t = 0; t < 5; ++t) {
        const DensityMatrix rho = random_density(d, d, rng);
        CHECK(max_abs(apply_channel(ch, rho).matrix() - cr.matrix()) < 1e-14);
      }
    }
  }
  SECTION("identity interaction gives the identity superoperator") {
    const CtcChannel ch = build_channel(identity_unitary(6), random_density(2, 2, rng), 2, 3);
    CHECK(max_abs(ch.superoperator() - identity(9)) < 1e-14);
    const DensityMatrix rho = random_density(3, 2, rng);
    CHECK(max_abs(apply_channel(ch, rho).matrix() - rho.matrix()) < 1e-14);
  }
  SECTION("superoperator agrees with direct evaluation") {
    for (auto [dcr, dctc] : std::vector<std::pair<Index, Index>>{{2, 2}, {2, 3}, {3, 2}}) {
      const UnitaryMatrix u = haar_unitary(dcr * dctc, rng);
      const DensityMatrix cr = random_density(dcr, dcr, rng);
      const CtcChannel ch(u, cr, dcr, dctc);
      for (int t = 0; t < 20; ++t) {
        const DensityMatrix rho = random_density(dctc, 1 + t % dctc, rng);
        const oracle::Mat direct = oracle::channel(u.matrix(), cr.matrix(), rho.matrix());
        CHECK(max_abs(ch.apply(rho.matrix()) - direct) <= 1e-12);
        const DensityMatrix out = apply_channel(ch, rho);
        CHECK(std::abs(out.matrix().trace() - 1.0) <= 1e-10);
      }
    }
  }
  SECTION("rank-deficient CR input") {
    const UnitaryMatrix u = haar_unitary(4, rng);
    const DensityMatrix cr = random_density(2, 1, rng);
    const CtcChannel ch(u, cr, 2, 2);
    CHECK(ch.kraus().size() == 2);
    const DensityMatrix rho = random_density(2, 2, rng);
    CHECK(max_abs(ch.apply(rho.matrix()) - oracle::channel(u.matrix(), cr.matrix(), rho.matrix())) <= 1e-12);
  }
  SECTION("linear in the CTC input") {
    const CtcChannel ch(haar_unitary(9, rng), random_density(3, 3, rng), 3, 3);
    const DensityMatrix a = random_density(3, 3, rng), b = random_density(3, 1, rng);
    const double alpha = 0.3;
    const ComplexMatrix lhs = ch.apply(alpha * a.matrix() + (1 - alpha) * b.matrix());
    const ComplexMatrix rhs = alpha * ch.apply(a.matrix()) + (1 - alpha) * ch.apply(b.matrix());
    CHECK(max_abs(lhs - rhs) <= 1e-12);
  }
  SECTION("CNOT with control |1>: Λ(ρ) = XρX") {
    const CtcChannel ch(cnot(), ket_state(2, 1), 2, 2);
    const ComplexMatrix x = pauli_x().matrix();
    for (int t = 0; t < 5; ++t) {
      const DensityMatrix rho = random_density(2, 2, rng);
      CHECK(max_abs(ch.apply(rho.matrix()) - x * rho.matrix() * x) < 1e-14);
    }
  }
  SECTION("input validation") {
    CHECK_THROWS_AS(CtcChannel(haar_unitary(6, rng), random_density(2, 2, rng), 2, 2), ShapeError);
    CHECK_THROWS_AS(CtcChannel(haar_unitary(4, rng), random_density(3, 3, rng), 2, 2), ShapeError);
    CHECK_THROWS_AS(build_channel(ComplexMatrix(2.0 * identity(4)), random_density(2, 2, rng), 2, 2), DomainError);
    const CtcChannel ch(haar_unitary(4, rng), random_density(2, 2, rng), 2, 2);
    CHECK_THROWS_AS(apply_channel(ch, DensityMatrix::maximally_mixed(3)), ShapeError);
  }
}

TEST_CASE("fixed points", "[deutsch][fixed_point]") {
  Rng rng(2);
  SECTION("identity: the whole state space is fixed, maximum entropy picks I/d") {
    for (Index d : {2, 3, 4}) {
      const CtcChannel ch(identity_unitary(2 * d), random_density(2, 2, rng), 2, d);
      const FixedPointSolution sol = fixed_points(ch);
      CHECK_FALSE(sol.unique);
      CHECK(sol.fixed_dim() == d * d);
      CHECK(max_abs(sol.representative.matrix() - identity(d) / double(d)) <= 1e-10);
      CHECK_THAT(sol.entropy, WithinAbs(std::log(double(d)), 1e-10));
    }
  }
  SECTION("swap: unique fixed point equal to the CR input") {
    for (Index d : {2, 3}) {
      const DensityMatrix cr = random_density(d, d, rng);
      const FixedPointSolution sol = fixed_points(CtcChannel(swap_unitary(d), cr, d, d));
      CHECK(sol.unique);
      CHECK(trace_distance(sol.representative, cr) <= 1e-10);
    }
  }
  SECTION("CNOT with control |1>: fixed set is span{I, X}, representative I/2") {
    const CtcChannel ch(cnot(), ket_state(2, 1), 2, 2);
    const FixedPointSolution sol = fixed_points(ch);
    CHECK_FALSE(sol.unique);
    CHECK(sol.fixed_dim() == 2);
    CHECK(max_abs(sol.representative.matrix() - identity(2) / 2.0) <= 1e-9);

    const auto grid = oracle::bloch_grid_max_entropy(
        [&](const oracle::Mat& r) { return oracle::channel(cnot().matrix(), ket_state(2, 1).matrix(), r); }, 1e-2,
        1e-12);
    REQUIRE(grid.fixed_points > 0);
    CHECK(oracle::max_abs(grid.state - sol.representative.matrix()) <= 1e-2);
    CHECK(sol.entropy >= grid.entropy - 1e-12);
  }
  SECTION("non-unital decay: maximum entropy moves off the Cesàro start") {
    const CtcChannel ch(decay_unitary(), ket_state(2, 0), 2, 3);
    const FixedPointSolution sol = fixed_points(ch);
    CHECK_FALSE(sol.unique);
    ComplexMatrix expect = ComplexMatrix::Zero(3, 3);
    expect(0, 0) = expect(1, 1) = 0.5;
    CHECK(max_abs(sol.representative.matrix() - expect) <= 1e-9);
    CHECK_THAT(sol.entropy, WithinAbs(std::log(2.0), 1e-9));
    CHECK(sol.optimizer_iterations > 0);
  }
  SECTION("Haar channels at d=2 agree with a grid search for the fixed point") {
    for (int t = 0; t < 3; ++t) {
      const UnitaryMatrix u = haar_unitary(4, rng);
      const DensityMatrix cr = random_density(2, 2, rng);
      const FixedPointSolution sol = fixed_points(CtcChannel(u, cr, 2, 2));
      const auto grid = oracle::bloch_grid_min_residual(
          [&](const oracle::Mat& r) { return oracle::channel(u.matrix(), cr.matrix(), r); }, 2e-2);
      // channel is a contraction, so the grid's best point is within a few cells of ρ*
      CHECK(oracle::max_abs(grid.state - sol.representative.matrix()) <= 0.1);
      CHECK(sol.residual <= 1e-9);
    }
  }
  SECTION("representative is a fixed point and dominates feasible perturbations") {
    std::vector<CtcChannel> channels;
    channels.emplace_back(identity_unitary(6), random_density(2, 2, rng), 2, 3);
    channels.emplace_back(cnot(), ket_state(2, 1), 2, 2);
    channels.emplace_back(decay_unitary(), ket_state(2, 0), 2, 3);
    channels.emplace_back(controlled_unitary(haar_unitary(3, rng), 2), ket_state(2, 1), 2, 3);
    for (int t = 0; t < 4; ++t) channels.emplace_back(haar_unitary(9, rng), random_density(3, 2, rng), 3, 3);
    for (const auto& ch : channels) {
      const FixedPointSolution sol = fixed_points(ch);
      const ComplexMatrix& rho = sol.representative.matrix();
      CHECK(trace_distance(apply_channel(ch, sol.representative).matrix(), rho) <= 1e-9);
      for (const auto& h : sol.fixed_basis) {
        CHECK(max_abs(ch.apply(h) - h) <= 1e-8);
        const ComplexMatrix traceless = h - h.trace().real() * rho;
        for (double eps : {1e-3, -1e-3}) {
          const ComplexMatrix p = rho + eps * traceless;
          if (spectrum_of(hermitize(p)).eigenvalues.minCoeff() < 0.0) continue;
          CHECK(entropy_of(p) <= sol.entropy + 1e-8);
        }
      }
    }
  }
  SECTION("controlled unitary with control |0> leaves the whole space fixed") {
    const CtcChannel ch(controlled_unitary(haar_unitary(3, rng), 2), ket_state(2, 0), 2, 3);
    const FixedPointSolution sol = fixed_points(ch);
    CHECK(sol.fixed_dim() == 9);
    CHECK(max_abs(sol.representative.matrix() - identity(3) / 3.0) <= 1e-10);
  }
}

TEST_CASE("CR output", "[deutsch][output]") {
  Rng rng(3);
  SECTION("identity returns the CR input") {
    const DensityMatrix cr = random_density(2, 2, rng);
    const CtcChannel ch(identity_unitary(4), cr, 2, 2);
    CHECK(max_abs(cr_output(ch, fixed_points(ch).representative).matrix() - cr.matrix()) < 1e-12);
  }
  SECTION("swap returns the CR input") {
    const DensityMatrix cr = random_density(3, 3, rng);
    const CtcChannel ch(swap_unitary(3), cr, 3, 3);
    CHECK(max_abs(cr_output(ch, fixed_points(ch).representative).matrix() - cr.matrix()) < 1e-10);
  }
  SECTION("Haar interactions give valid states matching direct evaluation") {
    for (int t = 0; t < 10; ++t) {
      const UnitaryMatrix u = haar_unitary(4, rng);
      const DensityMatrix cr = random_density(2, 1 + t % 2, rng);
      const CtcChannel ch(u, cr, 2, 2);
      const DensityMatrix star = fixed_points(ch).representative;
      const DensityMatrix out = cr_output(ch, star);
      const oracle::Mat joint = u.matrix() * oracle::kron(cr.matrix(), star.matrix()) * u.matrix().adjoint();
      CHECK(max_abs(out.matrix() - oracle::ptrace(joint, 2, 2, true)) < 1e-12);
      CHECK(std::abs(out.matrix().trace() - 1.0) <= 1e-10);
      CHECK(spectrum_of(out.matrix()).eigenvalues.minCoeff() >= -1e-9);
    }
  }
  SECTION("rejects a state that is not a fixed point") {
    const CtcChannel ch(swap_unitary(2), ket_state(2, 0), 2, 2);
    CHECK_THROWS_AS(cr_output(ch, ket_state(2, 1)), ContractError);
  }
}

TEST_CASE("nonlinearity witness", "[deutsch][nonlinearity]") {
  Rng rng(4);
  for (int t = 0; t < 5; ++t) {
    const DensityMatrix a = random_density(2, 1, rng), b = random_density(2, 2, rng);
    CHECK(nonlinearity_witness(identity_unitary(4), a, b, 0.5) <= 1e-12);
    CHECK(nonlinearity_witness(swap_unitary(2), a, b, 0.3) <= 1e-12);
  }
  int positive = 0;
  for (int t = 0; t < 10; ++t) {
    const UnitaryMatrix u = haar_unitary(4, rng);
    positive += nonlinearity_witness(u, ket_state(2, 0), ket_state(2, 1), 0.5) > 1e-6 ? 1 : 0;
  }
  CHECK(positive >= 8);
  CHECK_THROWS_AS(nonlinearity_witness(swap_unitary(2), ket_state(2, 0), ket_state(2, 1), 1.5), DomainError);
  CHECK_THROWS_AS(nonlinearity_witness(swap_unitary(2), ket_state(2, 0), ket_state(3, 1), 0.5), ShapeError);
}

TEST_CASE("pure product consistency", "[deutsch][purity]") {
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const PureState psi = random_pure(2, rng), phi = random_pure(2, rng);
    CHECK(purity_consistency_check(identity_unitary(4), psi, phi));
    CHECK_FALSE(purity_consistency_check(swap_unitary(2), psi, phi));
    CHECK(purity_consistency_check(swap_unitary(2), psi, psi));
  }
  CHECK_THROWS_AS(purity_consistency_check(swap_unitary(3), random_pure(2, rng), random_pure(2, rng)), ShapeError);
}
