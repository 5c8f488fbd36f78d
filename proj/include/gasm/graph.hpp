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

#ifndef GASM_GRAPH_HPP_
#define GASM_GRAPH_HPP_

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

namespace gasm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Attributes

enum class AttributeKind { kCategorical, kMeasurable };

inline const char* to_string(AttributeKind kind) {
  return kind == AttributeKind::kCategorical ? "categorical" : "measurable";
}

/// Categorical values are opaque tokens compared for equality only.
using Token = std::variant<std::int64_t, std::string>;

/// One named vertex or edge attribute. Values are indexed like the vertices
/// (resp. edges) of the owning graph.
struct Attribute {
  std::string name;
  std::variant<std::vector<Token>, std::vector<double>> values;
  /// Error parameter rho. Unset means "use the default error".
  std::optional<double> error;

  static Attribute categorical(std::string name, std::vector<Token> values,
                               std::optional<double> error = std::nullopt) {
    Attribute a{std::move(name), std::move(values), error};
    a.validate();
    return a;
  }

  static Attribute measurable(std::string name, std::vector<double> values,
                              std::optional<double> error = std::nullopt) {
    Attribute a{std::move(name), std::move(values), error};
    a.validate();
    return a;
  }

  AttributeKind kind() const {
    return values.index() == 0 ? AttributeKind::kCategorical
                               : AttributeKind::kMeasurable;
  }

  std::size_t size() const {
    return std::visit([](const auto& v) { return v.size(); }, values);
  }

  const std::vector<Token>& tokens() const {
    return std::get<std::vector<Token>>(values);
  }
  const std::vector<double>& measures() const {
    return std::get<std::vector<double>>(values);
  }

  void validate() const {
    if (error && !(*error >= 0.0 && std::isfinite(*error))) {
      throw Error("attribute '" + name + "': error must be finite and >= 0");
    }
    if (kind() == AttributeKind::kMeasurable) {
      for (double x : measures()) {
        if (!std::isfinite(x)) {
          throw Error("attribute '" + name + "': non-finite measurable value");
        }
      }
    }
  }

  /// Same attribute restricted to (and reordered by) the given indices.
  Attribute select(const std::vector<int>& indices) const {
    Attribute out{name, {}, error};
    std::visit(
        [&](const auto& v) {
          std::decay_t<decltype(v)> picked;
          picked.reserve(indices.size());
          for (int i : indices) picked.push_back(v[static_cast<std::size_t>(i)]);
          out.values = std::move(picked);
        },
        values);
    return out;
  }

  friend bool operator==(const Attribute&, const Attribute&) = default;
};

// ---------------------------------------------------------------------------
// Graph

struct Edge {
  int source = 0;
  int target = 0;

  bool is_loop() const { return source == target; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple graph (no multi-edges), directed or undirected, self-loops allowed.
///
/// Immutable after construction. Undirected edges are stored once with
/// source <= target; edge order is the order given to the constructor and
/// indexes the edge attributes.
class Graph {
 public:
  Graph() = default;

  Graph(bool directed, int vertex_count, std::vector<Edge> edges,
        std::vector<Attribute> vertex_attributes = {},
        std::vector<Attribute> edge_attributes = {})
      : directed_(directed),
        n_(vertex_count),
        edges_(std::move(edges)),
        vertex_attributes_(std::move(vertex_attributes)),
        edge_attributes_(std::move(edge_attributes)) {
    if (n_ < 0) throw Error("vertex count must be non-negative");
    edge_keys_.reserve(edges_.size() * 2);
    for (Edge& e : edges_) {
      if (e.source < 0 || e.source >= n_ || e.target < 0 || e.target >= n_) {
        throw Error("edge (" + std::to_string(e.source) + "," +
                    std::to_string(e.target) + ") out of range for n=" +
                    std::to_string(n_));
      }
      if (!directed_ && e.source > e.target) std::swap(e.source, e.target);
      if (!edge_keys_.insert(key(e.source, e.target)).second) {
        throw Error("duplicate edge (" + std::to_string(e.source) + "," +
                    std::to_string(e.target) + ")");
      }
      if (e.is_loop()) ++loops_;
    }
    check_attributes(vertex_attributes_, static_cast<std::size_t>(n_),
                     "vertex");
    check_attributes(edge_attributes_, edges_.size(), "edge");
  }

  bool directed() const { return directed_; }
  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int self_loop_count() const { return loops_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }
  const std::vector<Attribute>& vertex_attributes() const {
    return vertex_attributes_;
  }
  const std::vector<Attribute>& edge_attributes() const {
    return edge_attributes_;
  }

  bool has_edge(int u, int v) const {
    if (!directed_ && u > v) std::swap(u, v);
    return edge_keys_.contains(key(u, v));
  }

  /// Out-degree for directed graphs; number of incident edges (a loop counts
  /// once) for undirected graphs.
  std::vector<int> degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_) {
      ++d[e.source];
      if (!directed_ && !e.is_loop()) ++d[e.target];
    }
    return d;
  }

  std::vector<int> in_degrees() const {
    if (!directed_) return degrees();
    std::vector<int> d(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_) ++d[e.target];
    return d;
  }

  /// d = m / n (out-degree for directed graphs).
  double average_degree() const {
    if (n_ == 0) throw Error("average degree of an empty graph");
    return static_cast<double>(edges_.size()) / n_;
  }

  /// True for vertices with no incident edge (self-loops count as incident).
  std::vector<bool> isolated() const {
    std::vector<bool> iso(static_cast<std::size_t>(n_), true);
    for (const Edge& e : edges_) iso[e.source] = iso[e.target] = false;
    return iso;
  }

  Graph with_attributes(std::vector<Attribute> vertex_attributes,
                        std::vector<Attribute> edge_attributes) const {
    return Graph(directed_, n_, edges_, std::move(vertex_attributes),
                 std::move(edge_attributes));
  }

  /// Out-neighbours (directed) or neighbours (undirected), in edge order.
  /// `ignore_direction` lists both endpoints of directed edges.
  std::vector<std::vector<int>> adjacency_lists(bool ignore_direction = false) const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
    const bool both_ways = !directed_ || ignore_direction;
    for (const Edge& e : edges_) {
      adj[e.source].push_back(e.target);
      if (both_ways && !e.is_loop()) adj[e.target].push_back(e.source);
    }
    return adj;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.directed_ == b.directed_ && a.n_ == b.n_ && a.edges_ == b.edges_ &&
           a.vertex_attributes_ == b.vertex_attributes_ &&
           a.edge_attributes_ == b.edge_attributes_;
  }

 private:
  static std::uint64_t key(int u, int v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
  }

  static void check_attributes(const std::vector<Attribute>& attrs,
                               std::size_t expected, const char* what) {
    for (const Attribute& a : attrs) {
      a.validate();
      if (a.size() != expected) {
        throw Error(std::string(what) + " attribute '" + a.name + "' has " +
                    std::to_string(a.size()) + " values, expected " +
                    std::to_string(expected));
      }
    }
  }

  bool directed_ = false;
  int n_ = 0;
  int loops_ = 0;
  std::vector<Edge> edges_;
  std::vector<Attribute> vertex_attributes_;
  std::vector<Attribute> edge_attributes_;
  std::unordered_set<std::uint64_t> edge_keys_;
};

// ---------------------------------------------------------------------------
// Permutation

/// Injective partial map from the vertices of one graph to another.
/// image[u] is the matched vertex, or kUnmatched.
struct Permutation {
  static constexpr int kUnmatched = -1;

  std::vector<int> image;
  int codomain_size = 0;

  static Permutation identity(int n) {
    Permutation p;
    p.image.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p.image[i] = i;
    p.codomain_size = n;
    return p;
  }

  int domain_size() const { return static_cast<int>(image.size()); }

  int matched_count() const {
    return static_cast<int>(std::count_if(image.begin(), image.end(),
                                          [](int v) { return v >= 0; }));
  }

  int operator[](int u) const { return image[static_cast<std::size_t>(u)]; }

  /// Preimage table of size codomain_size (kUnmatched where unhit).
  std::vector<int> inverse() const {
    std::vector<int> inv(static_cast<std::size_t>(codomain_size), kUnmatched);
    for (int u = 0; u < domain_size(); ++u) {
      if (image[u] >= 0) inv[image[u]] = u;
    }
    return inv;
  }

  void validate() const {
    std::vector<bool> hit(static_cast<std::size_t>(codomain_size), false);
    for (int v : image) {
      if (v == kUnmatched) continue;
      if (v < 0 || v >= codomain_size) throw Error("image out of range");
      if (hit[v]) throw Error("permutation is not injective");
      hit[v] = true;
    }
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Result of a matching algorithm, with provenance.
struct Matching {
  Permutation map;
  std::string algorithm;
  std::uint64_t seed = 0;
  int iterations = 0;
};

// ---------------------------------------------------------------------------
// Structural matrices

/// Dense 0/1 adjacency. Undirected graphs give a symmetric matrix with loops
/// on the diagonal.
inline Matrix adjacency(const Graph& g) {
  Matrix a = Matrix::Zero(g.vertex_count(), g.vertex_count());
  for (const Edge& e : g.edges()) {
    a(e.source, e.target) = 1.0;
    if (!g.directed()) a(e.target, e.source) = 1.0;
  }
  return a;
}

/// Unoriented incidence matrix R (n x m); a loop column has a single one.
inline Matrix incidence_unoriented(const Graph& g) {
  if (g.directed()) throw Error("undirected required");
  Matrix r = Matrix::Zero(g.vertex_count(), g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    r(g.edge(i).source, i) = 1.0;
    r(g.edge(i).target, i) = 1.0;
  }
  return r;
}

/// Source-edge and terminus-edge matrices (S, T), both n x m.
inline std::pair<Matrix, Matrix> source_terminus(const Graph& g) {
  if (!g.directed()) throw Error("directed required");
  Matrix s = Matrix::Zero(g.vertex_count(), g.edge_count());
  Matrix t = Matrix::Zero(g.vertex_count(), g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    s(g.edge(i).source, i) = 1.0;
    t(g.edge(i).target, i) = 1.0;
  }
  return {std::move(s), std::move(t)};
}

/// Number of edges in the full edge universe: n(n+1)/2 undirected, n^2
/// directed (self-loops included in both).
inline std::int64_t edge_universe_size(bool directed, std::int64_t n) {
  return directed ? n * n : n * (n + 1) / 2;
}

/// Complement within the edge universe (self-loops included). Edge attributes
/// are dropped, vertex attributes kept. Edges come out in row-major order.
inline Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(
      edge_universe_size(g.directed(), n) - g.edge_count()));
  for (int u = 0; u < n; ++u) {
    for (int v = g.directed() ? 0 : u; v < n; ++v) {
      if (!g.has_edge(u, v)) edges.push_back({u, v});
    }
  }
  return Graph(g.directed(), n, std::move(edges), g.vertex_attributes(), {});
}

/// Largest finite shortest-path distance over ordered vertex pairs (BFS,
/// following edge direction for directed graphs). Unreachable pairs are
/// ignored and the result is at least 1. `ignore_direction` measures the
/// underlying undirected graph instead.
inline int effective_diameter(const Graph& g, bool ignore_direction = false) {
  const int n = g.vertex_count();
  const auto adj = g.adjacency_lists(ignore_direction);
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> queue(static_cast<std::size_t>(n));
  int best = 1;
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    int head = 0, tail = 0;
    dist[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      const int u = queue[head++];
      for (int v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          best = std::max(best, dist[v]);
          queue[tail++] = v;
        }
      }
    }
  }
  return best;
}

}  // namespace gasm

#endif  // GASM_GRAPH_HPP_
