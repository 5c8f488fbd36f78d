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

#ifndef GASM_GENERATORS_HPP_
#define GASM_GENERATORS_HPP_

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gasm/graph.hpp"
#include "gasm/rng.hpp"

namespace gasm {

enum class Family { kErGnp, kBalancedBinaryTree, kStarBranched, kCircularLadder };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::kErGnp: return "er_gnp";
    case Family::kBalancedBinaryTree: return "balanced_binary_tree";
    case Family::kStarBranched: return "star_branched";
    case Family::kCircularLadder: return "circular_ladder";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  if (s == "er_gnp" || s == "er") return Family::kErGnp;
  if (s == "balanced_binary_tree" || s == "binary_tree")
    return Family::kBalancedBinaryTree;
  if (s == "star_branched") return Family::kStarBranched;
  if (s == "circular_ladder") return Family::kCircularLadder;
  throw Error("unknown graph family '" + std::string(s) + "'");
}

/// Parameters of a graph family. Only the fields of the selected family are
/// read: er_gnp(n, p, directed), balanced_binary_tree(h),
/// star_branched(k, beta), circular_ladder(c).
struct FamilySpec {
  Family family = Family::kErGnp;
  int n = 0;
  double p = 0.0;
  bool directed = false;
  int h = 0;
  int k = 1;
  int beta = 1;
  int c = 3;
};

inline Graph balanced_binary_tree(int h) {
  if (h < 0 || h > 24) throw Error("balanced_binary_tree: need 0 <= h <= 24");
  const int n = (1 << (h + 1)) - 1;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (int v = 1; v < n; ++v) edges.push_back({(v - 1) / 2, v});
  return Graph(false, n, std::move(edges));
}

/// Hub 0 with k paths of beta vertices each; branch b holds vertices
/// 1 + b*beta ... (b+1)*beta, ordered outwards.
inline Graph star_branched(int k, int beta) {
  if (k < 1 || beta < 1) throw Error("star_branched: need k >= 1, beta >= 1");
  const int n = k * beta + 1;
  std::vector<Edge> edges;
  for (int b = 0; b < k; ++b) {
    int prev = 0;
    for (int j = 0; j < beta; ++j) {
      const int v = 1 + b * beta + j;
      edges.push_back({prev, v});
      prev = v;
    }
  }
  return Graph(false, n, std::move(edges));
}

/// Two c-cycles (0..c-1 and c..2c-1) joined by rungs i -- c+i.
inline Graph circular_ladder(int c) {
  if (c < 3) throw Error("circular_ladder: need c >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < c; ++i) edges.push_back({i, (i + 1) % c});
  for (int i = 0; i < c; ++i) edges.push_back({c + i, c + (i + 1) % c});
  for (int i = 0; i < c; ++i) edges.push_back({i, c + i});
  return Graph(false, 2 * c, std::move(edges));
}

/// G(n, p) without self-loops. Candidate pairs are visited row-major
/// (u < v when undirected, u != v when directed), one uniform draw each.
inline Graph er_gnp(int n, double p, bool directed, std::uint64_t seed) {
  if (n < 0) throw Error("er_gnp: need n >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw Error("er_gnp: need 0 <= p <= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = directed ? 0 : u + 1; v < n; ++v) {
      if (u == v) continue;
      if (rng.uniform() < p) edges.push_back({u, v});
    }
  }
  return Graph(directed, n, std::move(edges));
}

inline Graph generate(const FamilySpec& spec, std::uint64_t seed) {
  switch (spec.family) {
    case Family::kErGnp: return er_gnp(spec.n, spec.p, spec.directed, seed);
    case Family::kBalancedBinaryTree: return balanced_binary_tree(spec.h);
    case Family::kStarBranched: return star_branched(spec.k, spec.beta);
    case Family::kCircularLadder: return circular_ladder(spec.c);
  }
  throw Error("unknown family");
}

/// Relabelled graph plus the ground truth (original vertex -> new vertex).
struct Shuffled {
  Graph graph;
  Permutation truth;
};

/// Uniformly random relabelling of vertices; edge order is shuffled too so it
/// carries no trace of the original labels. Attributes follow their elements.
inline Shuffled shuffle_vertices(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  const int n = g.vertex_count();
  const std::vector<int> to_new = rng.permutation(n);
  const std::vector<int> edge_order = rng.permutation(g.edge_count());

  std::vector<int> from_new(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) from_new[to_new[u]] = u;

  std::vector<Edge> edges;
  edges.reserve(edge_order.size());
  for (int i : edge_order) {
    const Edge& e = g.edge(i);
    edges.push_back({to_new[e.source], to_new[e.target]});
  }
  std::vector<Attribute> vattrs, eattrs;
  for (const Attribute& a : g.vertex_attributes())
    vattrs.push_back(a.select(from_new));
  for (const Attribute& a : g.edge_attributes())
    eattrs.push_back(a.select(edge_order));

  Permutation truth{to_new, n};
  return {Graph(g.directed(), n, std::move(edges), std::move(vattrs),
                std::move(eattrs)),
          std::move(truth)};
}

/// Rounds ratio * count half away from zero.
inline int degraded_count(double ratio, int count) {
  if (!(ratio >= 0.0 && ratio <= 1.0)) throw Error("ratio must lie in [0, 1]");
  return static_cast<int>(std::llround(ratio * count));
}

/// First `k` entries of a uniformly random permutation of [0, n), sorted.
inline std::vector<int> random_subset(int n, int k, Rng& rng) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[i] = i;
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(static_cast<std::size_t>(k));
  std::sort(idx.begin(), idx.end());
  return idx;
}

/// Removes round(ratio * m) uniformly chosen edges; survivors keep their order
/// and attributes.
inline Graph degrade_edges(const Graph& g, double ratio, std::uint64_t seed) {
  Rng rng(seed);
  const int m = g.edge_count();
  const int keep = m - degraded_count(ratio, m);
  const std::vector<int> kept = random_subset(m, keep, rng);
  std::vector<Edge> edges;
  edges.reserve(kept.size());
  for (int i : kept) edges.push_back(g.edge(i));
  std::vector<Attribute> eattrs;
  for (const Attribute& a : g.edge_attributes()) eattrs.push_back(a.select(kept));
  return Graph(g.directed(), g.vertex_count(), std::move(edges),
               g.vertex_attributes(), std::move(eattrs));
}

struct Subgraph {
  Graph graph;
  /// Original index of each new vertex; strictly increasing.
  std::vector<int> kept;
};

/// Induced subgraph on n - round(ratio * n) uniformly chosen vertices,
/// reindexed in increasing original order.
inline Subgraph degrade_vertices(const Graph& g, double ratio,
                                 std::uint64_t seed) {
  Rng rng(seed);
  const int n = g.vertex_count();
  std::vector<int> kept = random_subset(n, n - degraded_count(ratio, n), rng);
  std::vector<int> new_index(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < static_cast<int>(kept.size()); ++i) new_index[kept[i]] = i;

  std::vector<Edge> edges;
  std::vector<int> kept_edges;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (new_index[e.source] >= 0 && new_index[e.target] >= 0) {
      edges.push_back({new_index[e.source], new_index[e.target]});
      kept_edges.push_back(i);
    }
  }
  std::vector<Attribute> vattrs, eattrs;
  for (const Attribute& a : g.vertex_attributes()) vattrs.push_back(a.select(kept));
  for (const Attribute& a : g.edge_attributes())
    eattrs.push_back(a.select(kept_edges));
  Graph sub(g.directed(), static_cast<int>(kept.size()), std::move(edges),
            std::move(vattrs), std::move(eattrs));
  return {std::move(sub), std::move(kept)};
}

}  // namespace gasm

#endif  // GASM_GENERATORS_HPP_
