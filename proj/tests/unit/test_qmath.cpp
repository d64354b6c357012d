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
#include <numbers>
#include <vector>

#include "catch_amalgamated.hpp"
#include "ctclab/qmath.hpp"
#include "oracles.hpp"

using namespace ctclab;
using Catch::Matchers::WithinAbs;

namespace {

ComplexMatrix random_matrix(Index r, Index c, Rng& rng) { return ginibre(r, c, rng); }

ComplexMatrix random_hermitian(Index d, Rng& rng) { return hermitize(ginibre(d, d, rng)); }

}  // namespace

TEST_CASE("tensor products", "[qmath][tensor]") {
  SECTION("identity and projector cases") {
    CHECK(max_abs(tensor(identity(2), identity(2)) - identity(4)) == 0.0);
    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2), p1 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    ComplexMatrix expect = ComplexMatrix::Zero(4, 4);
    expect(1, 1) = 1.0;
    CHECK(max_abs(tensor(p0, p1) - expect) == 0.0);
  }
  SECTION("matches four-loop oracle on random rectangular factors") {
    Rng rng(101);
    for (int t = 0; t < 10; ++t) {
      const ComplexMatrix a = random_matrix(2, 3, rng), b = random_matrix(3, 2, rng);
      CHECK(max_abs(tensor(a, b) - oracle::kron(a, b)) == 0.0);
    }
  }
  SECTION("vector product agrees with matrix product") {
    Rng rng(3);
    const ComplexVector a = ginibre(3, 1, rng).col(0), b = ginibre(4, 1, rng).col(0);
    const ComplexMatrix as_matrix = oracle::kron(a, b);
    CHECK(max_abs(tensor(a, b) - as_matrix.col(0)) == 0.0);
  }
  SECTION("size cap") {
    CHECK_THROWS_AS(tensor(identity(8), identity(8), 32), SizingError);
  }
}

TEST_CASE("partial trace", "[qmath][partial_trace]") {
  Rng rng(202);
  SECTION("product states factor") {
    const DensityMatrix rho = random_density(2, 2, rng), sigma = random_density(3, 2, rng);
    const ComplexMatrix joint = tensor(rho.matrix(), 2.5 * sigma.matrix());
    CHECK(max_abs(partial_trace(joint, {2, 3}, Keep::A) - 2.5 * rho.matrix()) < 1e-14);
  }
  SECTION("Bell state marginal is maximally mixed") {
    ComplexVector phi = ComplexVector::Zero(4);
    phi(0) = phi(3) = 1.0 / std::numbers::sqrt2;
    const ComplexMatrix m = phi * phi.adjoint();
    CHECK(max_abs(partial_trace(m, {2, 2}, Keep::B) - identity(2) / 2.0) < 1e-15);
  }
  SECTION("matches index-sum oracle on random 6x6 operators") {
    for (int t = 0; t < 10; ++t) {
      const ComplexMatrix m = random_hermitian(6, rng);
      CHECK(max_abs(partial_trace(m, {2, 3}, Keep::A) - oracle::ptrace(m, 2, 3, true)) < 1e-14);
      CHECK(max_abs(partial_trace(m, {2, 3}, Keep::B) - oracle::ptrace(m, 2, 3, false)) < 1e-14);
    }
  }
  SECTION("adjoint of embedding: Tr(Tr_A(M) X) = Tr(M (I ⊗ X))") {
    for (int t = 0; t < 10; ++t) {
      const ComplexMatrix m = random_matrix(6, 6, rng), x = random_matrix(3, 3, rng);
      const Complex lhs = (partial_trace(m, {2, 3}, Keep::B) * x).trace();
      const Complex rhs = (m * oracle::kron(identity(2), x)).trace();
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
  }
  SECTION("multipartite form agrees with nested bipartite traces") {
    const ComplexMatrix m = random_hermitian(12, rng);  // 2 x 3 x 2
    const std::vector<Index> dims{2, 3, 2};
    const std::vector<Index> keep_first{0};
    const std::vector<Index> keep_outer{0, 2};
    const ComplexMatrix a = partial_trace(m, {6, 2}, Keep::A);
    CHECK(max_abs(partial_trace(m, dims, keep_first) - partial_trace(a, {2, 3}, Keep::A)) < 1e-13);
    // keep {0,2}: sum over the middle index by hand
    ComplexMatrix expect = ComplexMatrix::Zero(4, 4);
    for (Index i = 0; i < 2; ++i)
      for (Index k = 0; k < 2; ++k)
        for (Index j = 0; j < 2; ++j)
          for (Index l = 0; l < 2; ++l)
            for (Index mid = 0; mid < 3; ++mid) expect(i * 2 + k, j * 2 + l) += m(i * 6 + mid * 2 + k, j * 6 + mid * 2 + l);
    CHECK(max_abs(partial_trace(m, dims, keep_outer) - expect) < 1e-13);
  }
  SECTION("shape errors") {
    CHECK_THROWS_AS(partial_trace(identity(5), {2, 3}, Keep::A), ShapeError);
  }
}

TEST_CASE("Hermitian eigendecomposition", "[qmath][eig]") {
  SECTION("diagonal input") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 0.3;
    m(1, 1) = 0.7;
    const HermitianEigen e = eig_hermitian(m);
    CHECK_THAT(e.spectrum.eigenvalues(0), WithinAbs(0.7, 1e-15));
    CHECK_THAT(e.spectrum.eigenvalues(1), WithinAbs(0.3, 1e-15));
    CHECK(std::abs(e.vectors(1, 0)) == Catch::Approx(1.0));
  }
  SECTION("projector (I + X)/2") {
    const ComplexMatrix m = 0.5 * (identity(2) + pauli_x().matrix());
    const HermitianEigen e = eig_hermitian(m);
    CHECK_THAT(e.spectrum.eigenvalues(0), WithinAbs(1.0, 1e-15));
    CHECK_THAT(e.spectrum.eigenvalues(1), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(e.vectors(0, 0)), WithinAbs(1.0 / std::numbers::sqrt2, 1e-15));
    CHECK(std::abs(e.vectors(0, 0) - e.vectors(1, 0)) < 1e-15);
  }
  SECTION("reconstruction residual on random Hermitian matrices up to 16") {
    Rng rng(303);
    for (Index d = 1; d <= 16; ++d) {
      const ComplexMatrix m = random_hermitian(d, rng);
      const HermitianEigen e = eig_hermitian(m);
      const ComplexMatrix rec =
          e.vectors * e.spectrum.eigenvalues.cast<Complex>().asDiagonal() * e.vectors.adjoint();
      CHECK(max_abs(rec - m) <= 1e-12);
      CHECK(max_abs(e.vectors.adjoint() * e.vectors - identity(d)) <= 1e-12);
      for (Index i = 1; i < d; ++i) CHECK(e.spectrum.eigenvalues(i - 1) >= e.spectrum.eigenvalues(i));
    }
  }
  SECTION("2x2 closed form") {
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
      const ComplexMatrix m = random_hermitian(2, rng);
      const auto [l0, l1] = oracle::eig2(m);
      const Spectrum s = spectrum_of(m);
      CHECK_THAT(s.eigenvalues(0), WithinAbs(l0, 1e-13));
      CHECK_THAT(s.eigenvalues(1), WithinAbs(l1, 1e-13));
    }
  }
  SECTION("non-Hermitian input is rejected") {
    ComplexMatrix m = identity(2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(eig_hermitian(m), DomainError);
  }
}

TEST_CASE("Schmidt decomposition", "[qmath][schmidt]") {
  SECTION("product state") {
    const ComplexVector v = tensor(PureState::basis(2, 0).amplitudes(), PureState::basis(2, 1).amplitudes());
    const SchmidtDecomposition sd = schmidt(v, {2, 2});
    REQUIRE(sd.rank() == 1);
    CHECK_THAT(sd.coefficients(0), WithinAbs(1.0, 1e-15));
  }
  SECTION("Bell state") {
    ComplexVector v = ComplexVector::Zero(4);
    v(0) = v(3) = 1.0 / std::numbers::sqrt2;
    const SchmidtDecomposition sd = schmidt(v, {2, 2});
    REQUIRE(sd.rank() == 2);
    CHECK_THAT(sd.coefficients(0), WithinAbs(1.0 / std::numbers::sqrt2, 1e-15));
    CHECK_THAT(sd.coefficients(1), WithinAbs(1.0 / std::numbers::sqrt2, 1e-15));
    // tie order: first basis_a vector is the one with the larger leading amplitude
    CHECK(std::abs(sd.basis_a[0](0) - 1.0) < 1e-15);
    CHECK(max_abs(sd.reconstruct() - v) < 1e-15);
  }
  SECTION("random states agree with reduced density matrix spectra") {
    Rng rng(404);
    for (int t = 0; t < 20; ++t) {
      const PureState psi = random_pure(6, rng);
      const SchmidtDecomposition sd = schmidt(psi, {2, 3});
      const ComplexMatrix rho_a = oracle::ptrace(psi.projector(), 2, 3, true);
      const ComplexMatrix rho_b = oracle::ptrace(psi.projector(), 2, 3, false);
      const auto [l0, l1] = oracle::eig2(rho_a);
      REQUIRE(sd.rank() == 2);
      CHECK_THAT(sd.coefficients(0) * sd.coefficients(0), WithinAbs(l0, 1e-12));
      CHECK_THAT(sd.coefficients(1) * sd.coefficients(1), WithinAbs(l1, 1e-12));
      CHECK_THAT(sd.probabilities().sum(), WithinAbs(1.0, 1e-12));
      CHECK(max_abs(sd.reconstruct() - psi.amplitudes()) < 1e-12);
      const Spectrum sb = spectrum_of(rho_b);
      CHECK_THAT(sb.eigenvalues(0), WithinAbs(l0, 1e-10));
      CHECK_THAT(sb.eigenvalues(1), WithinAbs(l1, 1e-10));
      CHECK_THAT(sb.eigenvalues(2), WithinAbs(0.0, 1e-10));
      for (std::size_t i = 0; i < sd.basis_a.size(); ++i) {
        for (std::size_t j = 0; j < sd.basis_a.size(); ++j) {
          const double delta = i == j ? 1.0 : 0.0;
          CHECK(std::abs(sd.basis_a[i].dot(sd.basis_a[j]) - delta) < 1e-10);
          CHECK(std::abs(sd.basis_b[i].dot(sd.basis_b[j]) - delta) < 1e-10);
        }
        // phase convention: first nonzero amplitude of each basis_a vector is real-positive
        for (Index k = 0; k < sd.basis_a[i].size(); ++k) {
          if (std::abs(sd.basis_a[i](k)) > 1e-12) {
            CHECK(std::abs(sd.basis_a[i](k).imag()) < 1e-14);
            CHECK(sd.basis_a[i](k).real() > 0.0);
            break;
          }
        }
      }
    }
  }
  SECTION("invalid input") {
    CHECK_THROWS_AS(schmidt(ComplexVector::Ones(4), {2, 2}), DomainError);
    CHECK_THROWS_AS(schmidt(PureState::basis(5, 0).amplitudes(), {2, 2}), ShapeError);
  }
}

TEST_CASE("entropy and trace distance", "[qmath][measures]") {
  CHECK_THAT(vn_entropy(DensityMatrix::from_pure(PureState::basis(3, 1))), WithinAbs(0.0, 1e-15));
  for (Index d = 1; d <= 8; ++d) {
    CHECK_THAT(vn_entropy(DensityMatrix::maximally_mixed(d)), WithinAbs(std::log(double(d)), 1e-12));
  }
  RealVector p(3);
  p << 0.5, 0.25, 0.25;
  CHECK_THAT(vn_entropy(DensityMatrix::diagonal(p)),
             WithinAbs(-(0.5 * std::log(0.5) + 2 * 0.25 * std::log(0.25)), 1e-14));

  const DensityMatrix zero = DensityMatrix::from_pure(PureState::basis(2, 0));
  const DensityMatrix one = DensityMatrix::from_pure(PureState::basis(2, 1));
  const DensityMatrix plus = DensityMatrix::from_pure(PureState::normalized(ComplexVector::Ones(2)));
  CHECK_THAT(trace_distance(zero, zero), WithinAbs(0.0, 1e-15));
  CHECK_THAT(trace_distance(zero, one), WithinAbs(1.0, 1e-15));
  CHECK_THAT(trace_distance(zero, plus), WithinAbs(oracle::trace_distance2(zero.matrix(), plus.matrix()), 1e-15));
  CHECK_THAT(trace_distance(zero, plus), WithinAbs(1.0 / std::numbers::sqrt2, 1e-15));

  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const DensityMatrix a = random_density(2, 2, rng), b = random_density(2, 1, rng);
    CHECK_THAT(trace_distance(a, b), WithinAbs(oracle::trace_distance2(a.matrix(), b.matrix()), 1e-14));
  }
  CHECK_THROWS_AS(clamp_probabilities(RealVector::Constant(2, -1e-3)), DomainError);
}

TEST_CASE("state validation", "[qmath][states]") {
  CHECK_THROWS_AS(PureState::from_amplitudes(ComplexVector::Ones(2)), DomainError);
  ComplexMatrix bad = identity(2);
  CHECK_THROWS_AS(DensityMatrix::from_matrix(bad), DomainError);  // trace 2
  bad = identity(2) / 2.0;
  bad(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(bad), DomainError);  // not Hermitian
  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(neg), DomainError);  // not PSD
  ComplexMatrix nan = identity(2) / 2.0;
  nan(0, 0) = std::nan("");
  CHECK_THROWS_AS(DensityMatrix::from_matrix(nan), DomainError);
  CHECK_THROWS_AS(UnitaryMatrix::from_matrix(2.0 * identity(2)), DomainError);
  CHECK_THROWS_AS(DensityMatrix::from_matrix(ComplexMatrix::Zero(2, 3)), ShapeError);
}

TEST_CASE("random sampling", "[qmath][random]") {
  SECTION("Haar unitaries are unitary and reproducible") {
    Rng a(17), b(17);
    for (Index d : {1, 2, 3, 4, 6, 9}) {
      const UnitaryMatrix u = haar_unitary(d, a);
      const UnitaryMatrix v = haar_unitary(d, b);
      CHECK(max_abs(u.matrix().adjoint() * u.matrix() - identity(d)) <= 1e-12);
      CHECK(max_abs(u.matrix() - v.matrix()) == 0.0);
      if (d == 1) CHECK_THAT(std::abs(u.matrix()(0, 0)), WithinAbs(1.0, 1e-15));
    }
  }
  SECTION("first moment of U[0,0] vanishes") {
    Rng rng(2024);
    Complex mean = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) mean += haar_unitary(2, rng).matrix()(0, 0);
    CHECK(std::abs(mean / double(n)) <= 0.05);
  }
  SECTION("phase-fixed QR: |U[0,0]|^2 is uniform on [0,1] for d=2") {
    // For Haar U(2), |U00|^2 ~ Uniform(0,1): mean 1/2, variance 1/12.
    Rng rng(99);
    double s = 0.0, s2 = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
      const double x = std::norm(haar_unitary(2, rng).matrix()(0, 0));
      s += x;
      s2 += x * x;
    }
    const double mean = s / n, var = s2 / n - mean * mean;
    CHECK_THAT(mean, WithinAbs(0.5, 0.01));
    CHECK_THAT(var, WithinAbs(1.0 / 12.0, 0.005));
  }
  SECTION("random states") {
    Rng a(8), b(8);
    const DensityMatrix pure = random_density(3, 1, a);
    CHECK_THAT(pure.purity(), WithinAbs(1.0, 1e-12));
    const DensityMatrix full = random_density(2, 2, a);
    const Spectrum s = spectrum_of(full.matrix());
    CHECK(s.eigenvalues(1) > 0.0);
    const DensityMatrix again = random_density(3, 1, b);
    CHECK(max_abs(pure.matrix() - again.matrix()) == 0.0);
    CHECK(max_abs(random_pure(4, a).amplitudes() - random_pure(4, b).amplitudes()) > 0.0);
    CHECK_THROWS_AS(random_density(2, 3, a), DomainError);
  }
  SECTION("stream derivation separates tags and indices") {
    CHECK(Rng::derive(1, "a", 0) != Rng::derive(1, "a", 1));
    CHECK(Rng::derive(1, "a", 0) != Rng::derive(1, "b", 0));
    CHECK(Rng::derive(1, "a", 0) != Rng::derive(2, "a", 0));
    Rng x = Rng::stream(5, "t", 3), y = Rng::stream(5, "t", 3);
    CHECK(x.normal() == y.normal());
  }
}

TEST_CASE("standard unitaries", "[qmath][unitaries]") {
  const ComplexVector v01 = tensor(PureState::basis(2, 0).amplitudes(), PureState::basis(2, 1).amplitudes());
  const ComplexVector v10 = tensor(PureState::basis(2, 1).amplitudes(), PureState::basis(2, 0).amplitudes());
  const ComplexVector v11 = tensor(PureState::basis(2, 1).amplitudes(), PureState::basis(2, 1).amplitudes());
  CHECK(max_abs(swap_unitary(2).matrix() * v01 - v10) == 0.0);
  CHECK(max_abs(identity_unitary(4).matrix() - identity(4)) == 0.0);
  CHECK(max_abs(cnot().matrix() * v10 - v11) == 0.0);
  CHECK(max_abs(cnot().matrix() * v01 - v01) == 0.0);
  Rng rng(1);
  const ComplexMatrix a = random_matrix(3, 3, rng), b = random_matrix(3, 3, rng);
  const ComplexMatrix s = swap_unitary(3).matrix();
  CHECK(max_abs(s * oracle::kron(a, b) * s.adjoint() - oracle::kron(b, a)) < 1e-14);
}

TEST_CASE("JSON interchange", "[qmath][io]") {
  Rng rng(12);
  const ComplexMatrix m = random_matrix(2, 3, rng);
  const auto j = matrix_to_json(m);
  CHECK(j["rows"] == 2);
  CHECK(j["entries"].size() == 6);
  CHECK(max_abs(matrix_from_json(j) - m) == 0.0);
  const PureState psi = random_pure(3, rng);
  CHECK(max_abs(pure_from_json(pure_to_json(psi)).amplitudes() - psi.amplitudes()) < 1e-15);

  auto broken = j;
  broken["entries"].erase(0);
  CHECK_THROWS_AS(matrix_from_json(broken), ShapeError);
  auto nonnum = j;
  nonnum["entries"][0] = "x";
  CHECK_THROWS(matrix_from_json(nonnum));
}
