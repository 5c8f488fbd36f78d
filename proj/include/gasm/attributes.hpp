// Copyright 2026 The GASM Authors
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

// Attribute distance matrices: pairwise similarities in [0, 1] between the
// attribute values of two graphs' vertices (or edges), and their elementwise
// combination into the vertex prior V and the edge prior E.

#ifndef GASM_ATTRIBUTES_HPP_
#define GASM_ATTRIBUTES_HPP_

#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gasm/graph.hpp"

namespace gasm {

/// Entries in [0, 1]; n_A x n_B for vertices, m_A x m_B for edges.
using DistanceMatrix = Matrix;

namespace detail {

inline void check_compatible(const Attribute& a, const Attribute& b) {
  if (a.name != b.name) {
    throw Error("attribute name mismatch: '" + a.name + "' vs '" + b.name + "'");
  }
  if (a.kind() != b.kind()) {
    throw Error("attribute '" + a.name + "': kind mismatch");
  }
}

/// Maps the tokens of both sides onto shared integer codes.
inline std::pair<std::vector<int>, std::vector<int>> encode(
    const std::vector<Token>& a, const std::vector<Token>& b) {
  std::map<Token, int> codes;
  auto code_of = [&](const Token& t) {
    return codes.emplace(t, static_cast<int>(codes.size())).first->second;
  };
  std::vector<int> ca, cb;
  ca.reserve(a.size());
  cb.reserve(b.size());
  for (const Token& t : a) ca.push_back(code_of(t));
  for (const Token& t : b) cb.push_back(code_of(t));
  return {std::move(ca), std::move(cb)};
}

}  // namespace detail

/// Population standard deviation, over every pair (theta, theta'), of
/// a(theta) - a(theta') for measurable attributes or of the equality
/// indicator for categorical ones.
inline double default_error(const Attribute& a, const Attribute& b) {
  detail::check_compatible(a, b);
  if (a.size() == 0 || b.size() == 0) {
    throw Error("attribute '" + a.name + "': default error of empty values");
  }
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  if (a.kind() == AttributeKind::kMeasurable) {
    // Over the full cross product the differences have variance
    // var(a) + var(b).
    auto variance = [](const std::vector<double>& v) {
      double mean = 0.0;
      for (double x : v) mean += x;
      mean /= static_cast<double>(v.size());
      double s = 0.0;
      for (double x : v) s += (x - mean) * (x - mean);
      return s / static_cast<double>(v.size());
    };
    return std::sqrt(variance(a.measures()) + variance(b.measures()));
  }
  const auto [ca, cb] = detail::encode(a.tokens(), b.tokens());
  std::map<int, double> count_b;
  for (int c : cb) count_b[c] += 1.0;
  double equal = 0.0;
  for (int c : ca) {
    auto it = count_b.find(c);
    if (it != count_b.end()) equal += it->second;
  }
  const double q = equal / (na * nb);
  return std::sqrt(std::max(0.0, q * (1.0 - q)));
}

/// The error parameter actually used for a pair of attributes: the one set on
/// either side (both sides must agree when both are set), else the default.
inline double resolve_error(const Attribute& a, const Attribute& b) {
  detail::check_compatible(a, b);
  if (a.error && b.error && *a.error != *b.error) {
    throw Error("attribute '" + a.name + "': error differs between graphs");
  }
  if (a.error) return *a.error;
  if (b.error) return *b.error;
  return default_error(a, b);
}

/// Attribute distance matrix of size |a| x |b|.
///
/// rho = 0 gives the exact-match indicator for both kinds. For rho > 0,
/// categorical entries are 1 (equal) or exp(-1/(2 rho^2)), measurable entries
/// exp(-(a - a')^2 / (2 rho^2)).
inline DistanceMatrix attribute_distance(const Attribute& a,
                                         const Attribute& b) {
  detail::check_compatible(a, b);
  const auto rows = static_cast<Eigen::Index>(a.size());
  const auto cols = static_cast<Eigen::Index>(b.size());
  DistanceMatrix d(rows, cols);
  if (rows == 0 || cols == 0) return d;
  const double rho = resolve_error(a, b);

  if (a.kind() == AttributeKind::kCategorical) {
    const auto [ca, cb] = detail::encode(a.tokens(), b.tokens());
    const double off = rho > 0.0 ? std::exp(-1.0 / (2.0 * rho * rho)) : 0.0;
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i)
        d(i, j) = ca[i] == cb[j] ? 1.0 : off;
    return d;
  }

  const auto& va = a.measures();
  const auto& vb = b.measures();
  if (rho == 0.0) {
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i)
        d(i, j) = va[i] == vb[j] ? 1.0 : 0.0;
    return d;
  }
  const double scale = 1.0 / (2.0 * rho * rho);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double diff = va[i] - vb[j];
      d(i, j) = std::exp(-diff * diff * scale);
    }
  }
  return d;
}

/// Hadamard product of the all-ones matrix with every distance matrix.
inline DistanceMatrix combine(std::span<const DistanceMatrix> distances,
                              Eigen::Index rows, Eigen::Index cols) {
  DistanceMatrix out = DistanceMatrix::Ones(rows, cols);
  for (const DistanceMatrix& d : distances) {
    if (d.rows() != rows || d.cols() != cols) {
      throw Error("distance matrix shape mismatch");
    }
    out.array() *= d.array();
  }
  return out;
}

namespace detail {

inline std::vector<DistanceMatrix> paired_distances(
    const std::vector<Attribute>& as, const std::vector<Attribute>& bs,
    const char* what) {
  if (as.size() != bs.size()) {
    throw Error(std::string(what) + " attribute sets differ between graphs");
  }
  std::vector<DistanceMatrix> out;
  out.reserve(as.size());
  for (const Attribute& a : as) {
    const Attribute* match = nullptr;
    for (const Attribute& b : bs)
      if (b.name == a.name) match = &b;
    if (!match) {
      throw Error(std::string(what) + " attribute '" + a.name +
                  "' missing in second graph");
    }
    out.push_back(attribute_distance(a, *match));
  }
  return out;
}

}  // namespace detail

/// Vertex prior V (n_A x n_B); attributes are paired by name.
inline DistanceMatrix vertex_distance(const Graph& a, const Graph& b) {
  const auto ds = detail::paired_distances(a.vertex_attributes(),
                                           b.vertex_attributes(), "vertex");
  return combine(ds, a.vertex_count(), b.vertex_count());
}

/// Edge prior E (m_A x m_B), or nullopt when neither graph has edge
/// attributes (E is then the all-ones matrix and is never materialized).
inline std::optional<DistanceMatrix> edge_distance(const Graph& a,
                                                   const Graph& b) {
  const auto ds = detail::paired_distances(a.edge_attributes(),
                                           b.edge_attributes(), "edge");
  if (ds.empty()) return std::nullopt;
  return combine(ds, a.edge_count(), b.edge_count());
}

}  // namespace gasm

#endif  // GASM_ATTRIBUTES_HPP_
