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

// QAPLIB instances (.dat: n, then A and B row-major) and solutions
// (.sln: "n score", then the 1-indexed assignment), plus the score-ratio
// benchmark over a set of instances.

#ifndef GASM_QAPLIB_HPP_
#define GASM_QAPLIB_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gasm/baselines.hpp"
#include "gasm/engine.hpp"
#include "gasm/graph_io.hpp"
#include "gasm/matchers.hpp"
#include "gasm/metrics.hpp"

namespace gasm {

struct BestKnown {
  double score = 0.0;
  std::optional<Permutation> permutation;
};

struct QapInstance {
  std::string name;
  int n = 0;
  Matrix A, B;
  std::optional<BestKnown> best_known;
};

namespace detail {

/// Whitespace (and comma) separated tokens.
inline std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',' ||
           c == '\f' || c == '\v';
  };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_sep(text[i])) ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

inline double parse_number(std::string_view tok) {
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(x)) {
    throw Error("non-numeric token '" + std::string(tok) + "'");
  }
  return x;
}

inline int parse_size(std::string_view tok) {
  const double x = parse_number(tok);
  if (x < 0 || x != std::floor(x) || x > 1e6) {
    throw Error("invalid size token '" + std::string(tok) + "'");
  }
  return static_cast<int>(x);
}

}  // namespace detail

inline QapInstance parse_instance(std::string_view text,
                                  std::string name = {}) {
  const auto toks = detail::tokenize(text);
  if (toks.empty()) throw Error("empty instance");
  QapInstance inst;
  inst.name = std::move(name);
  inst.n = detail::parse_size(toks[0]);
  const std::size_t nn = static_cast<std::size_t>(inst.n) * inst.n;
  if (toks.size() != 1 + 2 * nn) {
    throw Error("expected " + std::to_string(1 + 2 * nn) + " tokens, got " +
                std::to_string(toks.size()));
  }
  inst.A.resize(inst.n, inst.n);
  inst.B.resize(inst.n, inst.n);
  std::size_t t = 1;
  for (int i = 0; i < inst.n; ++i)
    for (int j = 0; j < inst.n; ++j) inst.A(i, j) = detail::parse_number(toks[t++]);
  for (int i = 0; i < inst.n; ++i)
    for (int j = 0; j < inst.n; ++j) inst.B(i, j) = detail::parse_number(toks[t++]);
  return inst;
}

inline std::string serialize_instance(const QapInstance& inst) {
  std::ostringstream out;
  out.precision(17);
  out << inst.n << "\n\n";
  for (const Matrix* m : {&inst.A, &inst.B}) {
    for (int i = 0; i < inst.n; ++i) {
      for (int j = 0; j < inst.n; ++j) out << (j ? " " : "") << (*m)(i, j);
      out << "\n";
    }
    out << "\n";
  }
  return out.str();
}

/// Solution file; the assignment is converted to 0-indexed.
inline BestKnown parse_solution(std::string_view text) {
  const auto toks = detail::tokenize(text);
  if (toks.size() < 2) throw Error("solution needs 'n score'");
  const int n = detail::parse_size(toks[0]);
  BestKnown best;
  best.score = detail::parse_number(toks[1]);
  if (toks.size() == 2 && n > 0) return best;  // score only
  if (toks.size() != 2 + static_cast<std::size_t>(n)) {
    throw Error("solution lists " + std::to_string(toks.size() - 2) +
                " assignments for n=" + std::to_string(n));
  }
  Permutation p;
  p.codomain_size = n;
  for (int i = 0; i < n; ++i) {
    const int v = detail::parse_size(toks[2 + i]);
    if (v < 1 || v > n) throw Error("assignment out of range");
    p.image.push_back(v - 1);
  }
  p.validate();
  best.permutation = std::move(p);
  return best;
}

inline std::string serialize_solution(int n, double score,
                                      const Permutation& p) {
  std::ostringstream out;
  out.precision(17);
  out << n << " " << score << "\n";
  for (int i = 0; i < n; ++i) out << (i ? " " : "") << p[i] + 1;
  out << "\n";
  return out.str();
}

/// Directed graphs with an edge u -> v for every nonzero entry (diagonal
/// entries give self-loops), each carrying the entry as the measurable edge
/// attribute "weight" with the default error.
inline std::pair<Graph, Graph> instance_to_graphs(const QapInstance& inst) {
  auto to_graph = [&](const Matrix& m) {
    std::vector<Edge> edges;
    std::vector<double> weights;
    for (int u = 0; u < inst.n; ++u) {
      for (int v = 0; v < inst.n; ++v) {
        if (m(u, v) != 0.0) {
          edges.push_back({u, v});
          weights.push_back(m(u, v));
        }
      }
    }
    std::vector<Attribute> eattrs;
    eattrs.push_back(Attribute::measurable("weight", std::move(weights)));
    return Graph(true, inst.n, std::move(edges), {}, std::move(eattrs));
  };
  return {to_graph(inst.A), to_graph(inst.B)};
}

struct QapLoadReport {
  std::vector<QapInstance> instances;
  std::vector<std::string> warnings;
};

/// Loads every <name>.dat in `dir` with n <= max_n, attaching <name>.sln
/// when present. Unreadable files are skipped with a warning.
inline QapLoadReport load_instance_dir(const std::filesystem::path& dir,
                                       int max_n) {
  namespace fs = std::filesystem;
  QapLoadReport report;
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".dat") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const fs::path& f : files) {
    const std::string name = f.stem().string();
    try {
      QapInstance inst = parse_instance(read_file(f.string()), name);
      if (inst.n > max_n) continue;
      fs::path sln = f;
      sln.replace_extension(".sln");
      if (fs::exists(sln)) {
        BestKnown best = parse_solution(read_file(sln.string()));
        if (best.permutation && best.permutation->domain_size() != inst.n) {
          throw Error("solution size does not match instance");
        }
        inst.best_known = std::move(best);
      }
      report.instances.push_back(std::move(inst));
    } catch (const std::exception& e) {
      report.warnings.push_back(name + ": " + e.what());
    }
  }
  return report;
}

struct QapRow {
  std::string instance;
  int n = 0;
  std::string algorithm;
  double qap_cost = 0.0;
  std::optional<double> best_known;
  ScoreRatio phi;
  /// "", "no best known" or "unbounded".
  std::string flag;
  std::uint64_t seed = 0;
  std::vector<int> permutation;
};

struct PhiDistribution {
  std::string algorithm;
  /// Sorted phi values of unflagged rows; the empirical CDF steps by
  /// 1/size at each value.
  std::vector<double> values;

  double quantile(double q) const {
    if (values.empty()) return std::nan("");
    const double pos = q * (static_cast<double>(values.size()) - 1.0);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = static_cast<std::size_t>(std::ceil(pos));
    return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
  }
  double median() const { return quantile(0.5); }
};

struct QapReport {
  std::vector<QapRow> rows;
  std::vector<PhiDistribution> distributions;
};

/// Permutation from one algorithm: GASM and Zager match the weighted graphs
/// of the instance, 2opt minimizes tr(A P B^T P^T) directly.
inline Permutation solve_instance(const QapInstance& inst, Algorithm algo,
                                  std::uint64_t seed,
                                  const GasmConfig& gasm = {}) {
  if (algo == Algorithm::kTwoOpt) {
    const TwoOptResult r = two_opt(inst.A, inst.B, Sense::kMinimize, seed);
    return Permutation{r.permutation, inst.n};
  }
  const auto [ga, gb] = instance_to_graphs(inst);
  return run_matcher(algo, ga, gb, seed, gasm).matching.map;
}

/// Instance i is solved with seed base_seed + i by every algorithm.
inline QapReport run_qaplib(const std::vector<QapInstance>& instances,
                            const std::vector<Algorithm>& algorithms,
                            std::uint64_t base_seed,
                            const GasmConfig& gasm = {}) {
  QapReport report;
  std::map<std::string, std::vector<double>> phis;
  for (Algorithm a : algorithms) phis[to_string(a)];
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const QapInstance& inst = instances[i];
    const std::uint64_t seed = base_seed + i;
    for (Algorithm algo : algorithms) {
      const Permutation p = solve_instance(inst, algo, seed, gasm);
      QapRow row;
      row.instance = inst.name;
      row.n = inst.n;
      row.algorithm = to_string(algo);
      row.seed = seed;
      row.permutation = p.image;
      row.qap_cost = qap_cost(inst.A, inst.B, p);
      if (!inst.best_known) {
        row.flag = "no best known";
        row.phi.value = std::nan("");
      } else {
        row.best_known = inst.best_known->score;
        row.phi = score_ratio(row.qap_cost, inst.best_known->score);
        if (row.phi.unbounded) {
          row.flag = "unbounded";
        } else {
          phis[row.algorithm].push_back(row.phi.value);
        }
      }
      report.rows.push_back(std::move(row));
    }
  }
  for (Algorithm a : algorithms) {
    PhiDistribution d{to_string(a), phis[to_string(a)]};
    std::sort(d.values.begin(), d.values.end());
    report.distributions.push_back(std::move(d));
  }
  return report;
}

}  // namespace gasm

#endif  // GASM_QAPLIB_HPP_
