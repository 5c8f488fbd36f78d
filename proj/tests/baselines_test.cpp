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

#include "gasm/baselines.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "gasm/generators.hpp"
#include "gasm/metrics.hpp"
#include "gasm/rng.hpp"

namespace gasm {
namespace {

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(false, n, e);
}

Graph branch() { return Graph(true, 5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}}); }

struct Optima {
  double best = 0.0;
  std::vector<Permutation> solutions;
};

/// All permutations reaching the maximum total score of a square matrix.
Optima lap_optima(const Matrix& X) {
  const int n = static_cast<int>(X.rows());
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  Optima o;
  o.best = -1e300;
  do {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += X(i, p[i]);
    if (s > o.best + 1e-9) {
      o.best = s;
      o.solutions.clear();
    }
    if (std::abs(s - o.best) <= 1e-9) o.solutions.push_back(Permutation{p, n});
  } while (std::next_permutation(p.begin(), p.end()));
  return o;
}

ZagerConfig raw() {
  ZagerConfig z;
  z.normalize = false;
  return z;
}

TEST(Zager, PathHasFourTiedOptima) {
  const Graph p4 = path(4);
  const Optima o = lap_optima(run_zager(p4, p4, raw()).state.X);
  ASSERT_EQ(o.solutions.size(), 4u);
  // q_S in thirds: 1/3 for the two unsound optima, 1 for the automorphisms.
  std::multiset<long> thirds;
  for (const Permutation& s : o.solutions) {
    thirds.insert(std::lround(3 * structural_quality(p4, p4, s)));
  }
  EXPECT_EQ(thirds, (std::multiset<long>{1, 1, 3, 3}));
  const double returned = structural_quality(p4, p4, run_zager(p4, p4).matching.map);
  EXPECT_TRUE(returned == 1.0 || std::abs(returned - 1.0 / 3.0) < 1e-12);
}

TEST(Zager, BranchGraphScoresAndOptima) {
  const Graph g = branch();
  const ZagerResult r = run_zager(g, g, raw());
  Matrix expected(5, 5);
  expected << 24, 6, 6, 0, 0,
              6, 9, 9, 3, 3,
              6, 9, 9, 3, 3,
              0, 3, 3, 3, 3,
              0, 3, 3, 3, 3;
  EXPECT_EQ(r.state.X, expected);
  const Optima o = lap_optima(r.state.X);
  EXPECT_EQ(o.best, 48.0);
  ASSERT_EQ(o.solutions.size(), 4u);
  int unsound = 0;
  for (const Permutation& s : o.solutions) unsound += structural_quality(g, g, s) < 1.0;
  EXPECT_EQ(unsound, 2);
}

TEST(Zager, DistinguishingAttributeStillAllowsMismatch) {
  std::vector<Token> cats(5, Token{std::int64_t{0}});
  cats[3] = Token{std::int64_t{1}};
  const Graph g = branch().with_attributes({Attribute::categorical("c", cats, 0.0)}, {});
  const Optima o = lap_optima(run_zager(g, g, raw()).state.X);
  // The attribute pins vertex 3, yet its parent can still be swapped with
  // the other inner vertex: two optima, one of them structurally unsound.
  EXPECT_EQ(o.best, 48.0);
  ASSERT_EQ(o.solutions.size(), 2u);
  bool identity = false, mixed = false;
  for (const Permutation& s : o.solutions) {
    identity |= s == Permutation::identity(5);
    mixed |= s.image == std::vector<int>{0, 2, 1, 3, 4};
  }
  EXPECT_TRUE(identity);
  EXPECT_TRUE(mixed);
}

TEST(Zager, AttributeOnInnerVertexLeavesLeavesAmbiguous) {
  std::vector<Token> cats(5, Token{std::int64_t{0}});
  cats[1] = Token{std::int64_t{1}};
  const Graph g = branch().with_attributes({Attribute::categorical("c", cats, 0.0)}, {});
  const Optima o = lap_optima(run_zager(g, g, raw()).state.X);
  EXPECT_EQ(o.best, 48.0);
  ASSERT_EQ(o.solutions.size(), 2u);
  bool leaves_swapped = false;
  for (const Permutation& s : o.solutions) leaves_swapped |= s.image == std::vector<int>{0, 1, 2, 4, 3};
  EXPECT_TRUE(leaves_swapped);
}

TEST(Zager, InconsistentAttributeEightOptima) {
  std::vector<Token> ca(5, Token{std::int64_t{0}}), cb = ca;
  cb[1] = Token{std::int64_t{1}};
  const Graph a = branch().with_attributes({Attribute::categorical("c", ca, 0.0)}, {});
  const Graph b = branch().with_attributes({Attribute::categorical("c", cb, 0.0)}, {});
  const Optima o = lap_optima(run_zager(a, b, raw()).state.X);
  EXPECT_EQ(o.best, 36.0);
  EXPECT_EQ(o.solutions.size(), 8u);
}

TEST(Zager, NormalizationDoesNotChangeMatching) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph a = er_gnp(20, 0.2, seed % 2 == 0, seed);
    const Graph b = shuffle_vertices(a, seed + 50).graph;
    EXPECT_EQ(run_zager(a, b).matching.map, run_zager(a, b, raw()).matching.map);
  }
}

TEST(Zager, NeverComplements) {
  const Graph a = er_gnp(10, 0.9, false, 1);
  ZagerConfig z = raw();
  z.max_iterations = 2;
  const Matrix X = run_zager(a, a, z).state.X;
  GasmConfig cfg;
  cfg.eta = 0.0;
  cfg.normalize = false;
  cfg.complement = ComplementPolicy::kNever;
  EXPECT_EQ(X, score_trajectory(a, a, cfg, 2)[1]);
}

TEST(Zager, InvalidIterations) {
  ZagerConfig z;
  z.max_iterations = 0;
  EXPECT_THROW(run_zager(path(3), path(3), z), Error);
}

Matrix random_square(Rng& rng, int n) {
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = static_cast<double>(rng.below(9));
  return m;
}

TEST(TwoOpt, SwapDeltaMatchesRecomputation) {
  Rng rng(10);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(8));
    const Matrix A = random_square(rng, n), B = random_square(rng, n);
    std::vector<int> p = rng.permutation(n);
    const int r = static_cast<int>(rng.below(n));
    int s = static_cast<int>(rng.below(n - 1));
    if (s >= r) ++s;
    const double before = qap_objective(A, B, p);
    const double delta = swap_delta(A, B, p, r, s);
    std::swap(p[r], p[s]);
    EXPECT_EQ(qap_objective(A, B, p) - before, delta);
  }
}

TEST(TwoOpt, LocallyOptimalAndMonotone) {
  Rng rng(20);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(8));
    const Matrix A = random_square(rng, n), B = random_square(rng, n);
    for (Sense sense : {Sense::kMaximize, Sense::kMinimize}) {
      const std::uint64_t seed = 1000 + trial;
      const TwoOptResult r = two_opt(A, B, sense, seed);
      const double start = qap_objective(A, B, Rng(seed).permutation(n));
      const double sign = sense == Sense::kMaximize ? 1.0 : -1.0;
      EXPECT_GE(sign * r.objective, sign * start);
      EXPECT_EQ(r.objective, qap_objective(A, B, r.permutation));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          EXPECT_LE(sign * swap_delta(A, B, r.permutation, i, j), 0.0);
    }
  }
}

TEST(TwoOpt, CompleteGraphTerminatesImmediately) {
  const Graph k3 = er_gnp(3, 1.0, false, 0);
  const Matrix A = adjacency(k3);
  const TwoOptResult r = two_opt(A, A, Sense::kMaximize, 4);
  EXPECT_EQ(r.swaps, 0);
  EXPECT_EQ(r.objective, 6.0);
}

TEST(TwoOpt, PathReachesFullSimilarity) {
  const Graph p3 = path(3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Matching m = run_two_opt(p3, p3, seed);
    EXPECT_EQ(qap_similarity(p3, p3, m.map), 4.0);
    EXPECT_EQ(m.algorithm, "2opt");
  }
}

TEST(TwoOpt, PadsUnequalSizes) {
  const Graph a = er_gnp(9, 0.4, false, 3);
  const Graph b = er_gnp(6, 0.5, false, 4);
  const Matching m = run_two_opt(a, b, 7);
  EXPECT_EQ(m.map.domain_size(), 9);
  EXPECT_EQ(m.map.codomain_size, 6);
  EXPECT_EQ(m.map.matched_count(), 6);
  EXPECT_NO_THROW(m.map.validate());
  const Matching r = run_two_opt(b, a, 7);
  EXPECT_EQ(r.map.matched_count(), 6);
}

TEST(TwoOpt, Deterministic) {
  const Graph a = er_gnp(15, 0.3, true, 8);
  EXPECT_EQ(run_two_opt(a, a, 3).map, run_two_opt(a, a, 3).map);
}

TEST(TwoOpt, SizeMismatchRejected) {
  EXPECT_THROW(two_opt(Matrix::Zero(3, 3), Matrix::Zero(4, 4), Sense::kMinimize, 0), Error);
}

}  // namespace
}  // namespace gasm
