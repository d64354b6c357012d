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
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "ctclab/qmath/core.hpp"

namespace ctclab {

/// Bipartite dimensions. Composite index is `a * b_dim + b` (left factor slow).
struct Dims {
  Index a = 1;
  Index b = 1;
  Index total() const { return a * b; }
};

enum class Keep { A, B };

/// Real eigenvalues, sorted descending.
struct Spectrum {
  RealVector eigenvalues;

  Index dim() const { return eigenvalues.size(); }
  double sum() const { return eigenvalues.sum(); }
};

struct HermitianEigen {
  Spectrum spectrum;
  ComplexMatrix vectors;  // column j belongs to spectrum.eigenvalues[j]
};

inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool all_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

inline ComplexMatrix hermitize(const ComplexMatrix& m) {
  return (m + m.adjoint()) / 2.0;
}

inline double hermiticity_residual(const ComplexMatrix& m) {
  return max_abs(m - m.adjoint());
}

inline ComplexMatrix identity(Index d) {
  return ComplexMatrix::Identity(d, d);
}

inline void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw ShapeError(std::string(what) + ": expected a square matrix, got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

/**
 * Kronecker product a ⊗ b:
 *   out[(ia*b.rows()+ib), (ja*b.cols()+jb)] = a[ia,ja] * b[ib,jb].
 *
 * Throws SizingError if either output side would exceed `max_dim`.
 */
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                            Index max_dim = kDefaultMaxDim) {
  const Index rows = a.rows() * b.rows();
  const Index cols = a.cols() * b.cols();
  if (rows > max_dim || cols > max_dim) {
    throw SizingError("tensor: product is " + std::to_string(rows) + "x" +
                      std::to_string(cols) + ", cap is " +
                      std::to_string(max_dim));
  }
  ComplexMatrix out(rows, cols);
  for (Index ia = 0; ia < a.rows(); ++ia) {
    for (Index ja = 0; ja < a.cols(); ++ja) {
      out.block(ia * b.rows(), ja * b.cols(), b.rows(), b.cols()) = a(ia, ja) * b;
    }
  }
  return out;
}

inline ComplexVector tensor(const ComplexVector& a, const ComplexVector& b,
                            Index max_dim = kDefaultMaxDim) {
  if (a.size() * b.size() > max_dim) {
    throw SizingError("tensor: vector product exceeds cap");
  }
  ComplexVector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

/// Trace out one factor of a bipartite operator.
inline ComplexMatrix partial_trace(const ComplexMatrix& m, Dims dims, Keep keep) {
  const Index total = dims.total();
  if (m.rows() != total || m.cols() != total) {
    throw ShapeError("partial_trace: matrix is " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + " but dims give " +
                     std::to_string(total));
  }
  if (keep == Keep::A) {
    ComplexMatrix out = ComplexMatrix::Zero(dims.a, dims.a);
    for (Index i = 0; i < dims.a; ++i)
      for (Index j = 0; j < dims.a; ++j)
        out(i, j) = m.block(i * dims.b, j * dims.b, dims.b, dims.b).trace();
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dims.b, dims.b);
  for (Index i = 0; i < dims.a; ++i) out += m.block(i * dims.b, i * dims.b, dims.b, dims.b);
  return out;
}

/**
 * Multipartite partial trace. `dims` lists the factor dimensions (first is
 * slowest); `keep` lists the factor positions to retain, in any order. The
 * retained factors keep their original relative order.
 */
inline ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const Index> dims,
                                   std::span<const Index> keep) {
  const Index n = static_cast<Index>(dims.size());
  const Index total =
      std::accumulate(dims.begin(), dims.end(), Index{1}, std::multiplies<>{});
  if (m.rows() != total || m.cols() != total) {
    throw ShapeError("partial_trace: matrix does not match factor dimensions");
  }
  std::vector<bool> kept(static_cast<std::size_t>(n), false);
  for (Index k : keep) {
    if (k < 0 || k >= n) throw ShapeError("partial_trace: keep index out of range");
    kept[static_cast<std::size_t>(k)] = true;
  }

  // Map every composite index to (kept index, traced index).
  std::vector<Index> kept_of(static_cast<std::size_t>(total));
  std::vector<Index> traced_of(static_cast<std::size_t>(total));
  Index kept_total = 1;
  for (Index f = 0; f < n; ++f)
    if (kept[static_cast<std::size_t>(f)]) kept_total *= dims[static_cast<std::size_t>(f)];
  for (Index r = 0; r < total; ++r) {
    Index rem = r;
    Index k_idx = 0, t_idx = 0, k_stride = 1, t_stride = 1;
    for (Index f = n - 1; f >= 0; --f) {
      const Index d = dims[static_cast<std::size_t>(f)];
      const Index digit = rem % d;
      rem /= d;
      if (kept[static_cast<std::size_t>(f)]) {
        k_idx += digit * k_stride;
        k_stride *= d;
      } else {
        t_idx += digit * t_stride;
        t_stride *= d;
      }
    }
    kept_of[static_cast<std::size_t>(r)] = k_idx;
    traced_of[static_cast<std::size_t>(r)] = t_idx;
  }

  ComplexMatrix out = ComplexMatrix::Zero(kept_total, kept_total);
  for (Index r = 0; r < total; ++r) {
    for (Index c = 0; c < total; ++c) {
      if (traced_of[static_cast<std::size_t>(r)] == traced_of[static_cast<std::size_t>(c)]) {
        out(kept_of[static_cast<std::size_t>(r)], kept_of[static_cast<std::size_t>(c)]) += m(r, c);
      }
    }
  }
  return out;
}

/**
 * Eigendecomposition of a Hermitian matrix, eigenvalues descending.
 *
 * The input is symmetrized before decomposition, so drift below
 * `tol_herm` is absorbed; anything larger is rejected.
 */
inline HermitianEigen eig_hermitian(const ComplexMatrix& m, double tol_herm = 1e-10) {
  require_square(m, "eig_hermitian");
  if (!all_finite(m)) throw DomainError("eig_hermitian: non-finite entries");
  const double res = hermiticity_residual(m);
  if (res > tol_herm) {
    throw DomainError("eig_hermitian: matrix is not Hermitian (residual " +
                      std::to_string(res) + ")");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(m));
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eig_hermitian: eigensolver did not converge");
  }
  HermitianEigen out;
  out.spectrum.eigenvalues = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

inline Spectrum spectrum_of(const ComplexMatrix& m, double tol_herm = 1e-10) {
  require_square(m, "spectrum_of");
  if (hermiticity_residual(m) > tol_herm) {
    throw DomainError("spectrum_of: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(m), Eigen::EigenvaluesOnly);
  return Spectrum{solver.eigenvalues().reverse()};
}

/// Column-stacking vectorization: vec(M)[i + j*rows] = M(i, j).
inline ComplexVector vec(const ComplexMatrix& m) {
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

inline ComplexMatrix unvec(const ComplexVector& v, Index rows) {
  if (rows <= 0 || v.size() != rows * rows) {
    throw ShapeError("unvec: vector length is not rows^2");
  }
  return Eigen::Map<const ComplexMatrix>(v.data(), rows, rows);
}

}  // namespace ctclab
