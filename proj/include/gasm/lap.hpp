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

// Rectangular linear assignment by shortest augmenting paths (the
// Jonker-Volgenant family, in the rectangular form described by Crouse,
// "On implementing 2D rectangular assignment algorithms", 2016).
//
// Each row of the shorter side is inserted in turn: a Dijkstra search over
// reduced costs finds the cheapest alternating path to a free column, the
// dual variables are updated and the path is flipped. The result is exact.

#ifndef GASM_LAP_HPP_
#define GASM_LAP_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "gasm/graph.hpp"

namespace gasm {

struct Assignment {
  /// (row, column) pairs sorted by row; min(rows, cols) of them.
  std::vector<std::pair<int, int>> pairs;
  /// Sum of the selected entries of the input matrix.
  double objective = 0.0;

  /// Row -> column map over `rows` rows and `cols` columns.
  Permutation to_permutation(int rows, int cols) const {
    Permutation p;
    p.image.assign(static_cast<std::size_t>(rows), Permutation::kUnmatched);
    p.codomain_size = cols;
    for (auto [r, c] : pairs) p.image[r] = c;
    return p;
  }
};

namespace detail {

class ShortestAugmentingPath {
 public:
  // cost is nr x nc with nr <= nc, row-major.
  ShortestAugmentingPath(const std::vector<double>& cost, int nr, int nc)
      : cost_(cost),
        nr_(nr),
        nc_(nc),
        u_(nr, 0.0),
        v_(nc, 0.0),
        shortest_(nc),
        path_(nc, -1),
        col4row_(nr, -1),
        row4col_(nc, -1),
        sr_(nr),
        sc_(nc),
        remaining_(nc) {}

  std::vector<int> solve() {
    for (int row = 0; row < nr_; ++row) {
      double min_val = 0.0;
      const int sink = augmenting_path(row, min_val);
      if (sink < 0) throw Error("assignment problem is infeasible");

      u_[row] += min_val;
      for (int i = 0; i < nr_; ++i) {
        if (sr_[i] && i != row) u_[i] += min_val - shortest_[col4row_[i]];
      }
      for (int j = 0; j < nc_; ++j) {
        if (sc_[j]) v_[j] -= min_val - shortest_[j];
      }

      int j = sink;
      while (true) {
        const int i = path_[j];
        row4col_[j] = i;
        std::swap(col4row_[i], j);
        if (i == row) break;
      }
    }
    return col4row_;
  }

 private:
  int augmenting_path(int i, double& min_val) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    int remaining = nc_;
    // Reverse order makes a constant matrix resolve to the identity.
    for (int it = 0; it < nc_; ++it) remaining_[it] = nc_ - it - 1;
    std::fill(sr_.begin(), sr_.end(), false);
    std::fill(sc_.begin(), sc_.end(), false);
    std::fill(shortest_.begin(), shortest_.end(), kInf);

    int sink = -1;
    min_val = 0.0;
    while (sink == -1) {
      int index = -1;
      double lowest = kInf;
      sr_[i] = true;
      const double* row = &cost_[static_cast<std::size_t>(i) * nc_];
      for (int it = 0; it < remaining; ++it) {
        const int j = remaining_[it];
        const double r = min_val + row[j] - u_[i] - v_[j];
        if (r < shortest_[j]) {
          path_[j] = i;
          shortest_[j] = r;
        }
        // Among equal candidates prefer a free column: it ends the search.
        if (shortest_[j] < lowest ||
            (shortest_[j] == lowest && row4col_[j] == -1)) {
          lowest = shortest_[j];
          index = it;
        }
      }
      min_val = lowest;
      if (min_val == kInf) return -1;

      const int j = remaining_[index];
      if (row4col_[j] == -1) {
        sink = j;
      } else {
        i = row4col_[j];
      }
      sc_[j] = true;
      remaining_[index] = remaining_[--remaining];
    }
    return sink;
  }

  const std::vector<double>& cost_;
  int nr_, nc_;
  std::vector<double> u_, v_, shortest_;
  std::vector<int> path_, col4row_, row4col_;
  std::vector<bool> sr_, sc_;
  std::vector<int> remaining_;
};

inline Assignment solve(const Matrix& cost, bool maximize) {
  Assignment out;
  const int rows = static_cast<int>(cost.rows());
  const int cols = static_cast<int>(cost.cols());
  if (rows == 0 || cols == 0) return out;
  if (!cost.allFinite()) throw Error("cost matrix has non-finite entries");

  const bool transposed = rows > cols;
  const int nr = transposed ? cols : rows;
  const int nc = transposed ? rows : cols;
  std::vector<double> flat(static_cast<std::size_t>(nr) * nc);
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nc; ++j) {
      const double c = transposed ? cost(j, i) : cost(i, j);
      flat[static_cast<std::size_t>(i) * nc + j] = maximize ? -c : c;
    }
  }

  const std::vector<int> col4row = ShortestAugmentingPath(flat, nr, nc).solve();
  out.pairs.reserve(static_cast<std::size_t>(nr));
  for (int i = 0; i < nr; ++i) {
    if (transposed) {
      out.pairs.emplace_back(col4row[i], i);
    } else {
      out.pairs.emplace_back(i, col4row[i]);
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  for (auto [r, c] : out.pairs) out.objective += cost(r, c);
  return out;
}

}  // namespace detail

/// Maximum-weight assignment of min(rows, cols) rows to distinct columns.
inline Assignment solve_max(const Matrix& score) {
  return detail::solve(score, /*maximize=*/true);
}

/// Minimum-cost assignment; same solver on the negated matrix.
inline Assignment solve_min(const Matrix& cost) {
  return detail::solve(cost, /*maximize=*/false);
}

}  // namespace gasm

#endif  // GASM_LAP_HPP_
