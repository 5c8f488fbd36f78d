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

#ifndef GASM_METRICS_HPP_
#define GASM_METRICS_HPP_

#include <Eigen/Sparse>

#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "gasm/graph.hpp"

namespace gasm {

/// Fraction of ground-truth pairs reproduced by the matching. The denominator
/// is the number of matched pairs in the ground truth (n_B for subgraphs).
inline double accuracy(const Permutation& matching, const Permutation& truth) {
  if (matching.domain_size() != truth.domain_size()) {
    throw Error("accuracy: matching and ground truth differ in size");
  }
  int total = 0, correct = 0;
  for (int u = 0; u < truth.domain_size(); ++u) {
    if (truth[u] == Permutation::kUnmatched) continue;
    ++total;
    if (matching[u] == truth[u]) ++correct;
  }
  if (total == 0) throw Error("accuracy: empty ground truth");
  return static_cast<double>(correct) / total;
}

namespace detail {

inline Eigen::SparseMatrix<double> sparse_adjacency(const Graph& g) {
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(static_cast<std::size_t>(g.edge_count()) * 2);
  for (const Edge& e : g.edges()) {
    t.emplace_back(e.source, e.target, 1.0);
    if (!g.directed() && !e.is_loop()) t.emplace_back(e.target, e.source, 1.0);
  }
  Eigen::SparseMatrix<double> a(g.vertex_count(), g.vertex_count());
  a.setFromTriplets(t.begin(), t.end());
  return a;
}

inline Eigen::SparseMatrix<double> assignment_matrix(const Permutation& p) {
  std::vector<Eigen::Triplet<double>> t;
  for (int u = 0; u < p.domain_size(); ++u) {
    if (p[u] != Permutation::kUnmatched) t.emplace_back(u, p[u], 1.0);
  }
  Eigen::SparseMatrix<double> m(p.domain_size(), p.codomain_size);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

}  // namespace detail

/// Structural quality q_S = 1 - tr(Z^T Z) / D with Z = Lambda_A M - M Lambda_B,
/// D = m_A + m_B (directed) or 2(m_A + m_B) - mu_A - mu_B (undirected).
/// Zero when both graphs are edgeless.
inline double structural_quality(const Graph& a, const Graph& b,
                                 const Permutation& matching) {
  if (a.directed() != b.directed()) throw Error("mixed directedness");
  if (matching.domain_size() != a.vertex_count() ||
      matching.codomain_size != b.vertex_count()) {
    throw Error("structural_quality: matching shape mismatch");
  }
  if (a.edge_count() == 0 && b.edge_count() == 0) return 0.0;
  const auto la = detail::sparse_adjacency(a);
  const auto lb = detail::sparse_adjacency(b);
  const auto m = detail::assignment_matrix(matching);
  const Eigen::SparseMatrix<double> z = la * m - m * lb;
  const double mismatches = z.squaredNorm();
  const double denom =
      a.directed()
          ? static_cast<double>(a.edge_count() + b.edge_count())
          : 2.0 * (a.edge_count() + b.edge_count()) - a.self_loop_count() -
                b.self_loop_count();
  return 1.0 - mismatches / denom;
}

/// tr(A P B^T P^T) for the (possibly partial, rectangular) assignment P.
inline double qap_cost(const Matrix& A, const Matrix& B, const Permutation& p) {
  if (A.rows() != A.cols() || B.rows() != B.cols()) {
    throw Error("qap_cost: matrices must be square");
  }
  if (p.domain_size() != A.rows() || p.codomain_size != B.rows()) {
    throw Error("qap_cost: dimension mismatch");
  }
  const Eigen::SparseMatrix<double> P = detail::assignment_matrix(p);
  const Matrix apb = A * P * B.transpose();
  return (apb * Eigen::SparseMatrix<double>(P.transpose())).trace();
}

/// QAP objective on adjacency matrices (edges preserved, counted per
/// ordered pair).
inline double qap_similarity(const Graph& a, const Graph& b,
                             const Permutation& matching) {
  return qap_cost(adjacency(a), adjacency(b), matching);
}

struct ScoreRatio {
  double value = 1.0;
  /// Best known score is zero but the algorithm's is not; value is +inf.
  bool unbounded = false;
};

/// phi = score / best_known, with phi = 1 when both are zero.
inline ScoreRatio score_ratio(double score, double best_known) {
  if (score < 0.0 || best_known < 0.0) {
    throw Error("score_ratio: negative score");
  }
  if (best_known == 0.0) {
    if (score == 0.0) return {1.0, false};
    return {std::numeric_limits<double>::infinity(), true};
  }
  return {score / best_known, false};
}

// Accuracy ceilings for isomorphic matching of symmetric families.

/// (h + 1) / (2^(h+1) - 1)
inline double gamma_binary_tree(int h) {
  if (h < 0 || h > 60) throw Error("gamma_binary_tree: invalid depth");
  return (h + 1.0) / (std::ldexp(1.0, h + 1) - 1.0);
}

/// (beta + 1) / (k beta + 1)
inline double gamma_star_branched(int k, int beta) {
  if (k < 1 || beta < 1) throw Error("gamma_star_branched: invalid params");
  return (beta + 1.0) / (static_cast<double>(k) * beta + 1.0);
}

/// 1 / (2c)
inline double gamma_circular_ladder(int c) {
  if (c < 3) throw Error("gamma_circular_ladder: need c >= 3");
  return 1.0 / (2.0 * c);
}

/// Decay model 1/n_A + (1 - 1/n_A) exp(-delta_v / alpha).
inline double gamma_vertex_degradation(int n_a, double delta_v, double alpha) {
  if (n_a < 1 || alpha <= 0.0 || !(delta_v >= 0.0 && delta_v <= 1.0)) {
    throw Error("gamma_vertex_degradation: invalid params");
  }
  const double floor = 1.0 / n_a;
  return floor + (1.0 - floor) * std::exp(-delta_v / alpha);
}

/// Edge probability of the subgraph-matching accuracy peak, 2 / n_A.
inline double peak_edge_probability(int n_a) {
  if (n_a < 2) throw Error("peak_edge_probability: need n_A >= 2");
  return 2.0 / n_a;
}

/// Sample mean and standard error of the mean.
struct Summary {
  double mean = 0.0;
  double se = 0.0;
  int count = 0;
};

inline Summary summarize(std::span<const double> xs) {
  Summary s;
  s.count = static_cast<int>(xs.size());
  if (xs.empty()) return s;
  for (double x : xs) s.mean += x;
  s.mean /= s.count;
  if (s.count > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.se = std::sqrt(ss / (s.count - 1) / s.count);
  }
  return s;
}

}  // namespace gasm

#endif  // GASM_METRICS_HPP_
