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

// Reference matchers: Zager-Verghese similarity iteration and 2opt pairwise
// swap local search.

#ifndef GASM_BASELINES_HPP_
#define GASM_BASELINES_HPP_

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "gasm/attributes.hpp"
#include "gasm/engine.hpp"
#include "gasm/graph.hpp"
#include "gasm/lap.hpp"
#include "gasm/rng.hpp"

namespace gasm {

struct ZagerConfig {
  /// Score computations; defaults to convergence_iterations().
  std::optional<int> max_iterations;
  /// Multiply the converged scores by +1/-1 according to the first
  /// categorical vertex attribute, if any.
  bool categorical_adjust = true;
  /// Divide X by its mean after every computation.
  bool normalize = true;
};

struct ZagerResult {
  Matching matching;
  ScoreState state;
};

/// Zager-Verghese structural similarity. Starts from all-ones edge scores, so
/// X_1 = R J R^T (resp. S J S^T + T J T^T), then applies the same coupled
/// updates as GASM on the direct (never complemented) structure, without
/// priors or noise.
inline ZagerResult run_zager(const Graph& a, const Graph& b,
                             const ZagerConfig& cfg = {}) {
  check_pair(a, b);
  if (cfg.max_iterations && *cfg.max_iterations < 1) {
    throw Error("max_iterations must be >= 1");
  }
  ZagerResult result;
  result.matching.algorithm = "zager";
  result.matching.map.image.assign(static_cast<std::size_t>(a.vertex_count()),
                                   Permutation::kUnmatched);
  result.matching.map.codomain_size = b.vertex_count();
  if (a.vertex_count() == 0 || b.vertex_count() == 0) return result;

  const StructuralOperators ops =
      structural_operators(a, b, ComplementPolicy::kNever);
  const int iterations =
      cfg.max_iterations.value_or(convergence_iterations(a, b));

  auto normalized = [&](Matrix x) {
    if (cfg.normalize) {
      const double mean = x.mean();
      if (mean > 0.0) x /= mean;
    }
    return x;
  };
  Matrix X = normalized(initial_structure(ops.op_a, ops.op_b, std::nullopt));
  for (int k = 2; k <= iterations; ++k) X = normalized(propagate(X, ops));

  if (cfg.categorical_adjust) {
    for (const Attribute& attr : a.vertex_attributes()) {
      if (attr.kind() != AttributeKind::kCategorical) continue;
      for (const Attribute& other : b.vertex_attributes()) {
        if (other.name != attr.name) continue;
        Attribute exact_a = attr, exact_b = other;
        exact_a.error = exact_b.error = 0.0;
        const Matrix same = attribute_distance(exact_a, exact_b);
        X.array() *= (2.0 * same.array() - 1.0);
      }
      break;
    }
  }

  result.matching.map =
      solve_max(X).to_permutation(a.vertex_count(), b.vertex_count());
  result.matching.iterations = iterations;
  result.state.X = std::move(X);
  result.state.iteration = iterations;
  return result;
}

// ---------------------------------------------------------------------------
// 2opt

enum class Sense { kMaximize, kMinimize };

/// Change of sum_ij A_ij B_{p(i) p(j)} when p(r) and p(s) are exchanged.
inline double swap_delta(const Matrix& A, const Matrix& B,
                         const std::vector<int>& p, int r, int s) {
  const int n = static_cast<int>(p.size());
  const int pr = p[r], ps = p[s];
  double d = (A(r, r) - A(s, s)) * (B(ps, ps) - B(pr, pr)) +
             (A(r, s) - A(s, r)) * (B(ps, pr) - B(pr, ps));
  for (int k = 0; k < n; ++k) {
    if (k == r || k == s) continue;
    const int pk = p[k];
    d += (A(r, k) - A(s, k)) * (B(ps, pk) - B(pr, pk)) +
         (A(k, r) - A(k, s)) * (B(pk, ps) - B(pk, pr));
  }
  return d;
}

inline double qap_objective(const Matrix& A, const Matrix& B,
                            const std::vector<int>& p) {
  double f = 0.0;
  const int n = static_cast<int>(p.size());
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) f += A(i, j) * B(p[i], p[j]);
  return f;
}

struct TwoOptResult {
  std::vector<int> permutation;
  double objective = 0.0;
  int swaps = 0;
};

/// First-improvement pairwise-swap search from a seeded random permutation.
/// Pairs (r, s), r < s, are scanned lexicographically and any improving swap
/// is applied at once; the search stops after a full pass without one.
inline TwoOptResult two_opt(const Matrix& A, const Matrix& B, Sense sense,
                            std::uint64_t seed) {
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows()) {
    throw Error("two_opt: need square matrices of equal size");
  }
  const int n = static_cast<int>(A.rows());
  Rng rng(seed);
  TwoOptResult out;
  out.permutation = rng.permutation(n);
  out.objective = qap_objective(A, B, out.permutation);
  const double sign = sense == Sense::kMaximize ? 1.0 : -1.0;

  bool improved = true;
  while (improved) {
    improved = false;
    for (int r = 0; r < n; ++r) {
      for (int s = r + 1; s < n; ++s) {
        const double gain = sign * swap_delta(A, B, out.permutation, r, s);
        if (gain > 1e-12 * std::max(1.0, std::abs(out.objective))) {
          std::swap(out.permutation[r], out.permutation[s]);
          out.objective += sign * gain;
          ++out.swaps;
          improved = true;
        }
      }
    }
  }
  // Re-sum to drop accumulated rounding.
  out.objective = qap_objective(A, B, out.permutation);
  return out;
}

/// 2opt on graphs: maximizes tr(Lambda_A P Lambda_B^T P^T). The smaller graph
/// is padded with isolated vertices; pairs involving padding are unmatched.
inline Matching run_two_opt(const Graph& a, const Graph& b,
                            std::uint64_t seed) {
  check_pair(a, b);
  const int na = a.vertex_count(), nb = b.vertex_count();
  const int n = std::max(na, nb);
  Matrix A = Matrix::Zero(n, n), B = Matrix::Zero(n, n);
  A.topLeftCorner(na, na) = adjacency(a);
  B.topLeftCorner(nb, nb) = adjacency(b);
  const TwoOptResult r = two_opt(A, B, Sense::kMaximize, seed);

  Matching m;
  m.algorithm = "2opt";
  m.seed = seed;
  m.iterations = r.swaps;
  m.map.codomain_size = nb;
  m.map.image.resize(static_cast<std::size_t>(na));
  for (int u = 0; u < na; ++u) {
    m.map.image[u] = r.permutation[u] < nb ? r.permutation[u]
                                           : Permutation::kUnmatched;
  }
  return m;
}

}  // namespace gasm

#endif  // GASM_BASELINES_HPP_
