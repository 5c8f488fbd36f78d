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

// Graph Attributes and Structure Matching.
//
// Vertex scores X (n_A x n_B) and edge scores Y (m_A x m_B) are propagated
// alternately through the incidence structure of both graphs:
//
//   undirected   Y_k = R_A^T X_{k-1} R_B
//                X_k = R_A Y_k R_B^T
//   directed     Y_k = S_A^T X_{k-1} S_B + T_A^T X_{k-1} T_B
//                X_k = S_A Y_k S_B^T + T_A Y_k T_B^T
//
// The attribute priors V and E, plus a tiny uniform noise H that lifts
// local-symmetry degeneracies, enter only through the first vertex scores
//
//   X_1 = (V + H) .* (R_A E R_B^T)          (S/T analog when directed)
//
// and the structure spreads them from there. When both graphs are dense the
// iteration runs on their complements instead. After k~ = min(diameters)
// score computations, rows and columns of isolated vertices are reset from V
// and a maximum-weight linear assignment on X gives the matching.

#ifndef GASM_ENGINE_HPP_
#define GASM_ENGINE_HPP_

#include <Eigen/Sparse>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gasm/attributes.hpp"
#include "gasm/graph.hpp"
#include "gasm/lap.hpp"
#include "gasm/rng.hpp"

namespace gasm {

using SparseMatrix = Eigen::SparseMatrix<double>;

enum class ComplementPolicy { kAuto, kNever, kAlways };

inline const char* to_string(ComplementPolicy p) {
  switch (p) {
    case ComplementPolicy::kAuto: return "auto";
    case ComplementPolicy::kNever: return "never";
    case ComplementPolicy::kAlways: return "always";
  }
  return "?";
}

inline ComplementPolicy parse_complement_policy(std::string_view s) {
  if (s == "auto") return ComplementPolicy::kAuto;
  if (s == "never") return ComplementPolicy::kNever;
  if (s == "always") return ComplementPolicy::kAlways;
  throw Error("unknown complement policy '" + std::string(s) + "'");
}

struct GasmConfig {
  /// Noise amplitude; h_uv ~ U[0, eta).
  double eta = 1e-10;
  std::uint64_t seed = 0;
  ComplementPolicy complement = ComplementPolicy::kAuto;
  /// Number of score computations; defaults to convergence_iterations().
  std::optional<int> max_iterations;
  /// Divide X by f_x after every update.
  bool normalize = true;
  /// Materialize the final edge scores Y (needed for match_edges()).
  bool keep_edge_scores = false;
  /// Opt-in: take k~ from the diameters of the underlying undirected graphs
  /// (no effect on undirected pairs). Off by default: diameters follow edge
  /// direction.
  bool undirected_diameter = false;
};

/// Vertex scores X, edge scores Y and the score computation index k
/// (X_1 is k = 1). After initialization Y holds the edge prior E, or is empty
/// when E is all-ones.
struct ScoreState {
  Matrix X;
  Matrix Y;
  int iteration = 1;
};

// ---------------------------------------------------------------------------
// Structural operators

/// Sparse incidence operators of one graph: R (undirected) or S and T
/// (directed), plus the vertex-pair forms used to skip the edge step.
struct GraphOperators {
  bool directed = false;
  SparseMatrix R;        // undirected: n x m
  SparseMatrix S, T;     // directed: n x m
  SparseMatrix Q;        // undirected: R R^T
  SparseMatrix L;        // directed: S T^T (adjacency)
  Vector out_degree, in_degree;

  static GraphOperators of(const Graph& g) {
    GraphOperators op;
    op.directed = g.directed();
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<Eigen::Triplet<double>> first, second;
    first.reserve(static_cast<std::size_t>(m) * 2);
    second.reserve(static_cast<std::size_t>(m));
    op.out_degree = Vector::Zero(n);
    op.in_degree = Vector::Zero(n);
    for (int i = 0; i < m; ++i) {
      const Edge& e = g.edge(i);
      if (g.directed()) {
        first.emplace_back(e.source, i, 1.0);
        second.emplace_back(e.target, i, 1.0);
        op.out_degree[e.source] += 1.0;
        op.in_degree[e.target] += 1.0;
      } else {
        first.emplace_back(e.source, i, 1.0);
        op.out_degree[e.source] += 1.0;
        if (!e.is_loop()) {
          first.emplace_back(e.target, i, 1.0);
          op.out_degree[e.target] += 1.0;
        }
      }
    }
    if (g.directed()) {
      op.S.resize(n, m);
      op.S.setFromTriplets(first.begin(), first.end());
      op.T.resize(n, m);
      op.T.setFromTriplets(second.begin(), second.end());
      op.L = op.S * SparseMatrix(op.T.transpose());
    } else {
      op.R.resize(n, m);
      op.R.setFromTriplets(first.begin(), first.end());
      op.Q = op.R * SparseMatrix(op.R.transpose());
      op.in_degree = op.out_degree;
    }
    return op;
  }
};

/// True when the auto policy switches to complements: 4(m_A + m_B) >
/// n_A(n_A+1) + n_B(n_B+1) undirected, 2(m_A + m_B) > n_A^2 + n_B^2 directed.
inline bool prefers_complement(const Graph& a, const Graph& b) {
  const std::int64_t na = a.vertex_count(), nb = b.vertex_count();
  const std::int64_t edges = static_cast<std::int64_t>(a.edge_count()) +
                             b.edge_count();
  if (a.directed()) return 2 * edges > na * na + nb * nb;
  return 4 * edges > na * (na + 1) + nb * (nb + 1);
}

/// Operators iterated by the update equations, for both graphs.
struct StructuralOperators {
  bool complemented = false;
  Graph a, b;            // the iterated graphs (complements when complemented)
  GraphOperators op_a, op_b;
};

inline void check_pair(const Graph& a, const Graph& b) {
  if (a.directed() != b.directed()) {
    throw Error("graphs must both be directed or both undirected");
  }
}

inline StructuralOperators structural_operators(const Graph& a, const Graph& b,
                                                ComplementPolicy policy) {
  check_pair(a, b);
  StructuralOperators ops;
  ops.complemented = policy == ComplementPolicy::kAlways ||
                     (policy == ComplementPolicy::kAuto &&
                      prefers_complement(a, b));
  ops.a = ops.complemented ? complement(a) : a;
  ops.b = ops.complemented ? complement(b) : b;
  ops.op_a = GraphOperators::of(ops.a);
  ops.op_b = GraphOperators::of(ops.b);
  return ops;
}

/// f_x = 4 d_A d_B + 1 with d = m / n (out-degree when directed).
inline double normalization_factor(const Graph& a, const Graph& b) {
  if (a.vertex_count() == 0 || b.vertex_count() == 0) {
    throw Error("normalization factor needs non-empty graphs");
  }
  return 4.0 * a.average_degree() * b.average_degree() + 1.0;
}

/// k~ = min(diameter_A, diameter_B), at least 1, on the original graphs.
inline int convergence_iterations(const Graph& a, const Graph& b,
                                  bool ignore_direction = false) {
  return std::max(1, std::min(effective_diameter(a, ignore_direction),
                              effective_diameter(b, ignore_direction)));
}

// ---------------------------------------------------------------------------
// Scores

/// Structural part of X_1: R_A E R_B^T, or S_A E S_B^T + T_A E T_B^T.
/// A missing E stands for the all-ones matrix.
inline Matrix initial_structure(const GraphOperators& a,
                                const GraphOperators& b,
                                const std::optional<DistanceMatrix>& edge_prior) {
  if (!edge_prior) {
    Matrix p = a.out_degree * b.out_degree.transpose();
    if (a.directed) p.noalias() += a.in_degree * b.in_degree.transpose();
    return p;
  }
  const Matrix& E = *edge_prior;
  if (a.directed) {
    const Matrix es = E * SparseMatrix(b.S.transpose());
    const Matrix et = E * SparseMatrix(b.T.transpose());
    Matrix p = a.S * es;
    p.noalias() += a.T * et;
    return p;
  }
  const Matrix er = E * SparseMatrix(b.R.transpose());
  return a.R * er;
}

/// X_1 = (V + H) .* structure, H uniform on [0, eta) drawn row-major.
/// Initialization always uses the true (non-complemented) graphs.
inline ScoreState init_scores(const Graph& a, const Graph& b,
                              const DistanceMatrix& V,
                              const std::optional<DistanceMatrix>& E,
                              const GasmConfig& cfg) {
  check_pair(a, b);
  if (V.rows() != a.vertex_count() || V.cols() != b.vertex_count()) {
    throw Error("vertex prior has the wrong shape");
  }
  if (E && (E->rows() != a.edge_count() || E->cols() != b.edge_count())) {
    throw Error("edge prior has the wrong shape");
  }
  const GraphOperators op_a = GraphOperators::of(a);
  const GraphOperators op_b = GraphOperators::of(b);

  ScoreState state;
  state.X = initial_structure(op_a, op_b, E);
  Matrix weight = V;
  if (cfg.eta > 0.0) {
    Rng rng(cfg.seed);
    for (Eigen::Index u = 0; u < weight.rows(); ++u)
      for (Eigen::Index v = 0; v < weight.cols(); ++v)
        weight(u, v) += cfg.eta * rng.uniform();
  }
  state.X.array() *= weight.array();
  if (E) state.Y = *E;
  state.iteration = 1;
  return state;
}

/// One explicit update (edge scores, then vertex scores). X is divided by
/// f_x afterwards; pass 1 to leave it unnormalized.
inline ScoreState iterate(const ScoreState& state,
                          const StructuralOperators& ops, double f_x = 1.0) {
  const GraphOperators& a = ops.op_a;
  const GraphOperators& b = ops.op_b;
  ScoreState next;
  next.iteration = state.iteration + 1;
  if (a.directed) {
    const Matrix xs = state.X * b.S;
    const Matrix xt = state.X * b.T;
    next.Y = SparseMatrix(a.S.transpose()) * xs;
    next.Y.noalias() += SparseMatrix(a.T.transpose()) * xt;
    const Matrix ys = next.Y * SparseMatrix(b.S.transpose());
    const Matrix yt = next.Y * SparseMatrix(b.T.transpose());
    next.X = a.S * ys;
    next.X.noalias() += a.T * yt;
  } else {
    const Matrix xr = state.X * b.R;
    next.Y = SparseMatrix(a.R.transpose()) * xr;
    const Matrix yr = next.Y * SparseMatrix(b.R.transpose());
    next.X = a.R * yr;
  }
  if (f_x != 1.0) next.X /= f_x;
  return next;
}

/// X_{k} from X_{k-1} without forming Y:
///   undirected  Q_A X Q_B with Q = R R^T
///   directed    (o_A o_B^T + i_A i_B^T) .* X + L_A X L_B^T + L_A^T X L_B
/// where o, i are out/in degrees and L = S T^T.
inline Matrix propagate(const Matrix& X, const StructuralOperators& ops) {
  const GraphOperators& a = ops.op_a;
  const GraphOperators& b = ops.op_b;
  if (!a.directed) {
    const Matrix xq = X * b.Q;
    return a.Q * xq;
  }
  Matrix out = ((a.out_degree * b.out_degree.transpose()) +
                (a.in_degree * b.in_degree.transpose()))
                   .cwiseProduct(X);
  const Matrix xlt = X * SparseMatrix(b.L.transpose());
  out.noalias() += a.L * xlt;
  const Matrix xl = X * b.L;
  out.noalias() += SparseMatrix(a.L.transpose()) * xl;
  return out;
}

/// Resets X(u, v) to nu_uv / f_x^(k~-1) wherever u or v is isolated in its
/// (original) graph.
inline Matrix restore_isolated(Matrix X, const DistanceMatrix& V,
                               const Graph& a, const Graph& b, double f_x,
                               int k_tilde) {
  const std::vector<bool> iso_a = a.isolated();
  const std::vector<bool> iso_b = b.isolated();
  const double scale = std::pow(f_x, k_tilde - 1);
  for (Eigen::Index v = 0; v < X.cols(); ++v) {
    for (Eigen::Index u = 0; u < X.rows(); ++u) {
      if (iso_a[u] || iso_b[v]) X(u, v) = V(u, v) / scale;
    }
  }
  return X;
}

struct GasmDiagnostics {
  int iterations = 0;       // k~
  bool complemented = false;
  double f_x = 1.0;         // factor applied per update (1 when disabled)
};

struct GasmResult {
  Matching matching;
  ScoreState state;
  GasmDiagnostics diagnostics;
};

/// Vertex scores X_1 .. X_K (before the isolated-vertex reset), with the
/// normalization of `cfg` applied. Shares all setup with run_gasm().
inline std::vector<Matrix> score_trajectory(const Graph& a, const Graph& b,
                                            const GasmConfig& cfg,
                                            int iterations) {
  check_pair(a, b);
  const DistanceMatrix V = vertex_distance(a, b);
  const std::optional<DistanceMatrix> E = edge_distance(a, b);
  const StructuralOperators ops = structural_operators(a, b, cfg.complement);
  const double f_x = cfg.normalize ? normalization_factor(ops.a, ops.b) : 1.0;
  std::vector<Matrix> out;
  out.push_back(init_scores(a, b, V, E, cfg).X);
  for (int k = 2; k <= iterations; ++k) {
    Matrix next = propagate(out.back(), ops);
    if (f_x != 1.0) next /= f_x;
    out.push_back(std::move(next));
  }
  return out;
}

/// Full pipeline: priors, operators, k~ score computations, isolated-vertex
/// reset, maximum-weight assignment on X.
inline GasmResult run_gasm(const Graph& a, const Graph& b,
                           const GasmConfig& cfg = {}) {
  check_pair(a, b);
  if (cfg.max_iterations && *cfg.max_iterations < 1) {
    throw Error("max_iterations must be >= 1");
  }
  if (!(cfg.eta >= 0.0)) throw Error("eta must be >= 0");

  GasmResult result;
  result.matching.algorithm = "gasm";
  result.matching.seed = cfg.seed;
  result.matching.map.image.assign(static_cast<std::size_t>(a.vertex_count()),
                                   Permutation::kUnmatched);
  result.matching.map.codomain_size = b.vertex_count();
  if (a.vertex_count() == 0 || b.vertex_count() == 0) return result;

  const DistanceMatrix V = vertex_distance(a, b);
  const std::optional<DistanceMatrix> E = edge_distance(a, b);
  const StructuralOperators ops = structural_operators(a, b, cfg.complement);
  const double f_x = cfg.normalize ? normalization_factor(ops.a, ops.b) : 1.0;
  const int k_tilde = cfg.max_iterations.value_or(
      convergence_iterations(a, b, cfg.undirected_diameter));

  ScoreState state = init_scores(a, b, V, E, cfg);
  for (int k = 2; k <= k_tilde; ++k) {
    if (cfg.keep_edge_scores && k == k_tilde) {
      state = iterate(state, ops, f_x);
    } else {
      state.X = propagate(state.X, ops);
      if (f_x != 1.0) state.X /= f_x;
      state.Y.resize(0, 0);
      state.iteration = k;
    }
  }
  if (cfg.keep_edge_scores && state.Y.size() == 0) {
    state.Y = Matrix::Ones(a.edge_count(), b.edge_count());
  }
  state.X = restore_isolated(std::move(state.X), V, a, b, f_x, k_tilde);

  const Assignment assignment = solve_max(state.X);
  result.matching.map = assignment.to_permutation(a.vertex_count(),
                                                  b.vertex_count());
  result.matching.iterations = k_tilde;
  result.diagnostics = {k_tilde, ops.complemented, f_x};
  result.state = std::move(state);
  return result;
}

/// Edge matching by maximum-weight assignment on Y. Returns an empty matching
/// when either graph has no edge.
inline Permutation match_edges(const ScoreState& state) {
  if (state.Y.rows() == 0 || state.Y.cols() == 0) {
    Permutation p;
    p.image.assign(static_cast<std::size_t>(state.Y.rows()),
                   Permutation::kUnmatched);
    p.codomain_size = static_cast<int>(state.Y.cols());
    return p;
  }
  return solve_max(state.Y).to_permutation(static_cast<int>(state.Y.rows()),
                                           static_cast<int>(state.Y.cols()));
}

}  // namespace gasm

#endif  // GASM_ENGINE_HPP_
