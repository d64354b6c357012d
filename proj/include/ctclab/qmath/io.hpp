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

#include <string>

#include <nlohmann/json.hpp>

#include "ctclab/qmath/states.hpp"

namespace ctclab {

// Interchange format:
//   matrix:     {"rows": n, "cols": m, "entries": [[re, im], ...]}   (row-major)
//   pure state: {"dim": n, "amplitudes": [[re, im], ...]}

namespace detail {

inline nlohmann::json complex_pair(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

inline Complex parse_complex(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw DomainError("interchange: complex entries must be [re, im] number pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

inline Index positive_field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw DomainError(std::string("interchange: missing integer field '") + key + "'");
  }
  const auto v = j.at(key).get<long long>();
  if (v <= 0) throw DomainError(std::string("interchange: field '") + key + "' must be positive");
  return static_cast<Index>(v);
}

}  // namespace detail

inline nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) entries.push_back(detail::complex_pair(m(i, j)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  const Index rows = detail::positive_field(j, "rows");
  const Index cols = detail::positive_field(j, "cols");
  if (!j.contains("entries") || !j.at("entries").is_array()) {
    throw DomainError("interchange: missing 'entries' array");
  }
  const auto& e = j.at("entries");
  if (static_cast<Index>(e.size()) != rows * cols) {
    throw ShapeError("interchange: entries length " + std::to_string(e.size()) +
                     " != rows*cols " + std::to_string(rows * cols));
  }
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index k = 0; k < cols; ++k)
      m(i, k) = detail::parse_complex(e[static_cast<std::size_t>(i * cols + k)]);
  if (!m.allFinite()) throw DomainError("interchange: non-finite matrix entry");
  return m;
}

inline nlohmann::json pure_to_json(const PureState& psi) {
  nlohmann::json amps = nlohmann::json::array();
  for (Index i = 0; i < psi.dim(); ++i) amps.push_back(detail::complex_pair(psi.amplitudes()(i)));
  return {{"dim", psi.dim()}, {"amplitudes", std::move(amps)}};
}

inline PureState pure_from_json(const nlohmann::json& j, const Tolerances& tol = {}) {
  const Index dim = detail::positive_field(j, "dim");
  if (!j.contains("amplitudes") || !j.at("amplitudes").is_array() ||
      static_cast<Index>(j.at("amplitudes").size()) != dim) {
    throw ShapeError("interchange: 'amplitudes' must be an array of length dim");
  }
  ComplexVector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = detail::parse_complex(j.at("amplitudes")[static_cast<std::size_t>(i)]);
  return PureState::from_amplitudes(std::move(v), tol);
}

inline nlohmann::json spectrum_to_json(const RealVector& v) {
  nlohmann::json a = nlohmann::json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

}  // namespace ctclab
