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
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "ctclab/deutsch/channel.hpp"

namespace ctclab::deutsch {

/**
 * Solution set of Λ(ρ) = ρ.
 *
 * `fixed_basis` is a Hilbert–Schmidt orthonormal basis of the Hermitian
 * operators with S·vec(H) = vec(H); `representative` is the maximum-entropy
 * density matrix in that space.
 */
struct FixedPointSolution {
  DensityMatrix representative;
  std::vector<ComplexMatrix> fixed_basis;
  bool unique = true;
  double residual = 0.0;  // trace distance between Λ(ρ*) and ρ*
  double entropy = 0.0;   // nats
  int optimizer_iterations = 0;

  Index fixed_dim() const { return static_cast<Index>(fixed_basis.size()); }
};

/// Max-entropy ascent stopped before converging. Carries the best iterate.
class OptimizerError : public NumericalError {
 public:
  OptimizerError(const std::string& what, ComplexMatrix best, double entropy)
      : NumericalError(what), best_iterate(std::move(best)), best_entropy(entropy) {}

  ComplexMatrix best_iterate;
  double best_entropy;
};

struct SolverOptions {
  int cesaro_terms = 512;
  int max_iterations = 10000;
  double min_improvement = 1e-10;  // nats
  double gradient_tol = 1e-10;     // converged outright below this
  double stall_gradient = 1e-5;    // small improvement only counts as converged below this
  double support_floor = 1e-12;    // eigenvalues at or below are outside the support
};

namespace detail {

// Real coordinates of a Hermitian matrix: Re and Im of every entry. The
// Euclidean inner product of two such vectors equals Tr(A B).
inline RealVector real_coords(const ComplexMatrix& h) {
  RealVector r(2 * h.size());
  for (Index i = 0; i < h.size(); ++i) {
    r(2 * i) = h.data()[i].real();
    r(2 * i + 1) = h.data()[i].imag();
  }
  return r;
}

inline ComplexMatrix from_real_coords(const RealVector& r, Index d) {
  ComplexMatrix h(d, d);
  for (Index i = 0; i < h.size(); ++i) h.data()[i] = Complex(r(2 * i), r(2 * i + 1));
  return hermitize(h);
}

inline double hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.adjoint() * b).trace().real();
}

// Hermitian, unit trace, eigenvalues clamped at zero when they dip by less
// than tol_psd. Anything more negative is a solver failure.
inline ComplexMatrix to_state(const ComplexMatrix& m, double tol_psd) {
  ComplexMatrix h = hermitize(m);
  const double tr = h.trace().real();
  if (!(std::abs(tr) > 1e-14)) throw NumericalError("fixed_points: fixed operator has zero trace");
  h /= tr;
  const HermitianEigen eig = eig_hermitian(h, 1e-8);
  const double min_eig = eig.spectrum.eigenvalues.minCoeff();
  if (min_eig < -tol_psd) {
    throw NumericalError("fixed_points: fixed operator is not positive (min eigenvalue " +
                         std::to_string(min_eig) + ")");
  }
  if (min_eig < 0.0) {
    RealVector p = eig.spectrum.eigenvalues.cwiseMax(0.0);
    p /= p.sum();
    h = eig.vectors * p.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
    h = hermitize(h);
  }
  return h;
}

inline ComplexMatrix cesaro_average(const CtcChannel& ch, const ComplexMatrix& start, int terms) {
  ComplexMatrix acc = ComplexMatrix::Zero(start.rows(), start.cols());
  ComplexMatrix cur = start;
  for (int n = 0; n < terms; ++n) {
    acc += cur;
    cur = hermitize(ch.apply(cur));
  }
  return acc / static_cast<double>(terms);
}

inline ComplexMatrix project_onto(const std::vector<ComplexMatrix>& basis, const ComplexMatrix& m) {
  ComplexMatrix out = ComplexMatrix::Zero(m.rows(), m.cols());
  for (const auto& b : basis) out += hs_inner(b, m) * b;
  return out;
}

struct EigenCluster {
  ComplexMatrix right;  // eigenvectors with |λ − 1| ≤ tol, as columns
  Index count = 0;
};

inline EigenCluster unit_eigenvectors(const ComplexMatrix& s, double tol_eig) {
  Eigen::ComplexEigenSolver<ComplexMatrix> es(s, true);
  if (es.info() != Eigen::Success) throw NumericalError("fixed_points: eigensolver failed");
  std::vector<Index> picked;
  for (Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (std::abs(es.eigenvalues()(i) - Complex(1.0, 0.0)) <= tol_eig) picked.push_back(i);
  }
  EigenCluster c;
  c.count = static_cast<Index>(picked.size());
  c.right.resize(s.rows(), c.count);
  for (Index j = 0; j < c.count; ++j) c.right.col(j) = es.eigenvectors().col(picked[static_cast<std::size_t>(j)]);
  return c;
}

// Cesàro limit P(I/d), with P the spectral projector onto the eigenvalue-1
// eigenspace: P = V (W† V)⁻¹ W† from right/left eigenvectors.
inline ComplexMatrix spectral_projection_of_identity(const CtcChannel& ch, const EigenCluster& right,
                                                     double tol_eig) {
  const Index d = ch.d_ctc();
  const EigenCluster left = unit_eigenvectors(ch.superoperator().adjoint(), tol_eig);
  if (left.count != right.count) {
    throw NumericalError("fixed_points: left/right eigenvalue-1 multiplicities differ");
  }
  const ComplexMatrix gram = left.right.adjoint() * right.right;
  Eigen::FullPivLU<ComplexMatrix> lu(gram);
  if (!lu.isInvertible()) throw NumericalError("fixed_points: singular biorthogonal Gram matrix");
  const ComplexVector x = vec(identity(d) / static_cast<double>(d));
  const ComplexVector px = right.right * lu.solve(left.right.adjoint() * x);
  return unvec(px, d);
}

}  // namespace detail

/**
 * Solves Λ(ρ) = ρ and picks the maximum-entropy solution.
 *
 * The eigenvalue-1 eigenvectors of the superoperator (|λ − 1| ≤ tol.eig) are
 * split into Hermitian and anti-Hermitian parts, giving a Hermitian spanning
 * set that is orthonormalized under the Hilbert–Schmidt product. With a
 * one-dimensional span the fixed state is unique. Otherwise entropy is
 * maximized over the affine slice of unit-trace elements by gradient ascent
 * with backtracking (positivity kept by rejecting steps), starting from the
 * Cesàro limit of Λⁿ(I/d). Entropy is strictly concave, so the local
 * maximizer found is the global one.
 */
inline FixedPointSolution fixed_points(const CtcChannel& ch, const Tolerances& tol = {},
                                       const SolverOptions& opts = {}) {
  const Index d = ch.d_ctc();
  const detail::EigenCluster cluster = detail::unit_eigenvectors(ch.superoperator(), tol.eig);
  if (cluster.count == 0) {
    throw NumericalError("fixed_points: no superoperator eigenvalue within " +
                         std::to_string(tol.eig) + " of 1");
  }

  // Hermitian spanning set, orthonormalized through an SVD of real coordinates.
  Eigen::MatrixXd coords(2 * d * d, 2 * cluster.count);
  for (Index j = 0; j < cluster.count; ++j) {
    const ComplexMatrix m = unvec(cluster.right.col(j), d);
    coords.col(2 * j) = detail::real_coords(hermitize(m));
    coords.col(2 * j + 1) = detail::real_coords(hermitize(Complex(0.0, -1.0) * m));
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(coords, Eigen::ComputeThinU);
  const double smax = svd.singularValues()(0);
  Index rank = 0;
  while (rank < svd.singularValues().size() && rank < cluster.count &&
         svd.singularValues()(rank) > 1e-8 * std::max(smax, 1.0)) {
    ++rank;
  }
  if (rank == 0) throw NumericalError("fixed_points: no Hermitian fixed operator found");

  FixedPointSolution sol{DensityMatrix::maximally_mixed(d), {}, true, 0.0, 0.0, 0};
  for (Index j = 0; j < rank; ++j) {
    sol.fixed_basis.push_back(detail::from_real_coords(svd.matrixU().col(j), d));
  }
  sol.unique = (rank == 1);

  ComplexMatrix rho;
  if (sol.unique) {
    rho = detail::to_state(sol.fixed_basis.front(), tol.psd);
  } else {
    // Starting point: the Cesàro limit of Λⁿ(I/d). It dominates every fixed
    // state up to scale, so it has maximal support within the fixed set.
    ComplexMatrix start;
    try {
      start = detail::spectral_projection_of_identity(ch, cluster, tol.eig);
    } catch (const NumericalError&) {
      start = detail::cesaro_average(ch, identity(d) / static_cast<double>(d), opts.cesaro_terms);
    }
    rho = detail::to_state(detail::project_onto(sol.fixed_basis, start), tol.psd);

    // Orthonormal basis of the traceless directions inside the fixed span.
    const Index k = rank;
    Eigen::VectorXd traces(k);
    for (Index j = 0; j < k; ++j) traces(j) = sol.fixed_basis[static_cast<std::size_t>(j)].trace().real();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(traces);
    const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(k, k);
    std::vector<ComplexMatrix> directions;
    for (Index c = 1; c < k; ++c) {
      ComplexMatrix t = ComplexMatrix::Zero(d, d);
      for (Index j = 0; j < k; ++j) t += q(j, c) * sol.fixed_basis[static_cast<std::size_t>(j)];
      directions.push_back(hermitize(t));
    }

    auto evaluate = [&](const ComplexMatrix& m, double& entropy, RealVector& grad) -> bool {
      const HermitianEigen eig = eig_hermitian(hermitize(m), 1e-8);
      if (eig.spectrum.eigenvalues.minCoeff() < -opts.support_floor) return false;
      RealVector p = eig.spectrum.eigenvalues.cwiseMax(0.0);
      entropy = shannon_entropy(p / p.sum());
      RealVector log_p(p.size());
      for (Index i = 0; i < p.size(); ++i) log_p(i) = p(i) > opts.support_floor ? -std::log(p(i)) : 0.0;
      const ComplexMatrix g = eig.vectors * log_p.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
      grad.resize(static_cast<Index>(directions.size()));
      for (std::size_t j = 0; j < directions.size(); ++j) {
        grad(static_cast<Index>(j)) = detail::hs_inner(directions[j], g);
      }
      return true;
    };

    double entropy = 0.0;
    RealVector grad;
    if (!evaluate(rho, entropy, grad)) throw NumericalError("fixed_points: infeasible start");
    double step = 1.0;
    bool converged = false;
    int it = 0;
    for (; it < opts.max_iterations; ++it) {
      const double gnorm = grad.norm();
      if (gnorm <= opts.gradient_tol) {
        converged = true;
        break;
      }
      ComplexMatrix dir = ComplexMatrix::Zero(d, d);
      for (std::size_t j = 0; j < directions.size(); ++j) dir += grad(static_cast<Index>(j)) * directions[j];

      bool accepted = false;
      double new_entropy = 0.0;
      RealVector new_grad;
      ComplexMatrix candidate;
      for (int bt = 0; bt < 80; ++bt, step *= 0.5) {
        candidate = rho + step * dir;
        if (evaluate(candidate, new_entropy, new_grad) &&
            new_entropy >= entropy + 1e-4 * step * gnorm * gnorm) {
          accepted = true;
          break;
        }
      }
      if (!accepted) {
        converged = gnorm <= opts.stall_gradient;
        break;
      }
      const double improvement = new_entropy - entropy;
      rho = hermitize(candidate);
      entropy = new_entropy;
      grad = std::move(new_grad);
      step *= 2.0;
      if (improvement < opts.min_improvement && grad.norm() <= opts.stall_gradient) {
        converged = true;
        ++it;
        break;
      }
    }
    sol.optimizer_iterations = it;
    if (!converged) {
      throw OptimizerError("fixed_points: max-entropy ascent did not converge after " +
                               std::to_string(it) + " iterations",
                           rho, entropy);
    }
    rho = detail::to_state(rho, tol.psd);
  }

  double residual = trace_distance(ch.apply(rho), rho);
  if (residual > tol.fixed) {
    rho = detail::to_state(detail::cesaro_average(ch, rho, opts.cesaro_terms), tol.psd);
    residual = trace_distance(ch.apply(rho), rho);
    if (residual > tol.fixed) {
      throw NumericalError("fixed_points: residual " + std::to_string(residual) +
                           " exceeds tolerance " + std::to_string(tol.fixed));
    }
  }
  sol.representative = DensityMatrix::from_matrix(rho, tol);
  sol.residual = residual;
  sol.entropy = vn_entropy(sol.representative, tol);
  return sol;
}

}  // namespace ctclab::deutsch
