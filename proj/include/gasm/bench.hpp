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

// Seeded benchmark experiments: isomorphic, edge-degraded and
// vertex-degraded (subgraph) matching over parameter grids.
//
// Seeds: sample i of every grid point uses s_i = base_seed + i. Independent
// streams are derived as mix_seed(s_i, stream) with the streams below, so
// all algorithms see the same graphs and results do not depend on the
// number of worker threads.

#ifndef GASM_BENCH_HPP_
#define GASM_BENCH_HPP_

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "gasm/generators.hpp"
#include "gasm/graph_io.hpp"
#include "gasm/matchers.hpp"
#include "gasm/metrics.hpp"
#include "gasm/rng.hpp"

namespace gasm {

enum class Task { kIsomorphic, kDegradeEdges, kDegradeVertices };

inline const char* to_string(Task t) {
  switch (t) {
    case Task::kIsomorphic: return "isomorphic";
    case Task::kDegradeEdges: return "degrade_edges";
    case Task::kDegradeVertices: return "degrade_vertices";
  }
  return "?";
}

inline Task parse_task(std::string_view s) {
  if (s == "isomorphic") return Task::kIsomorphic;
  if (s == "degrade_edges") return Task::kDegradeEdges;
  if (s == "degrade_vertices") return Task::kDegradeVertices;
  throw Error("unknown task '" + std::string(s) + "'");
}

namespace stream {
inline constexpr std::uint64_t kGenerate = 0;
inline constexpr std::uint64_t kAttributes = 1;
inline constexpr std::uint64_t kDegrade = 2;
inline constexpr std::uint64_t kShuffle = 3;
/// Algorithm j of the spec uses stream kAlgorithm + j.
inline constexpr std::uint64_t kAlgorithm = 4;
}  // namespace stream

/// Sampled attributes attached to G_A and carried unchanged to G_B.
struct AttributeSpec {
  /// zeta: vertex attributes, xi: edge attributes.
  int vertex_count = 0;
  int edge_count = 0;
  AttributeKind kind = AttributeKind::kMeasurable;
  /// Categories for categorical attributes, drawn uniformly.
  int categories = 2;
  /// Assumed error; nullopt selects the default (sigma_a).
  std::optional<double> rho;
};

struct ExperimentSpec {
  Task task = Task::kIsomorphic;
  Family family = Family::kErGnp;
  bool directed = false;
  // Grids; only those of the selected family are read, and their cartesian
  // product with `delta` forms the grid points.
  std::vector<int> n{100};
  std::vector<double> p{0.1};
  /// Replace the p grid by log(n)/n.
  bool p_log_n = false;
  std::vector<int> h{2};
  std::vector<int> k{3};
  std::vector<int> beta{1};
  std::vector<int> c{3};
  /// Degradation ratio (delta_e or delta_v); ignored for isomorphic tasks.
  std::vector<double> delta{0.0};
  std::vector<Algorithm> algorithms{Algorithm::kGasm};
  AttributeSpec attributes;
  GasmConfig gasm;
  int samples = 500;
  std::uint64_t base_seed = 0;
  /// Worker threads; 0 uses the hardware concurrency.
  int threads = 0;

  void validate() const {
    if (samples < 1) throw Error("samples must be >= 1");
    if (algorithms.empty()) throw Error("no algorithm selected");
    if (attributes.vertex_count < 0 || attributes.edge_count < 0) {
      throw Error("attribute counts must be >= 0");
    }
    if (attributes.kind == AttributeKind::kCategorical &&
        attributes.categories < 1) {
      throw Error("categorical attributes need >= 1 category");
    }
    if (attributes.rho && *attributes.rho < 0.0) throw Error("rho must be >= 0");
    auto nonempty = [](const auto& v, const char* name) {
      if (v.empty()) throw Error(std::string("empty grid: ") + name);
    };
    nonempty(delta, "delta");
    for (double d : delta) {
      if (!(d >= 0.0 && d <= 1.0)) throw Error("delta must lie in [0, 1]");
    }
    switch (family) {
      case Family::kErGnp:
        nonempty(n, "n");
        if (!p_log_n) nonempty(p, "p");
        break;
      case Family::kBalancedBinaryTree: nonempty(h, "h"); break;
      case Family::kStarBranched:
        nonempty(k, "k");
        nonempty(beta, "beta");
        break;
      case Family::kCircularLadder: nonempty(c, "c"); break;
    }
  }
};

struct GridPoint {
  FamilySpec family;
  double delta = 0.0;
};

inline std::vector<GridPoint> grid_points(const ExperimentSpec& spec) {
  spec.validate();
  std::vector<FamilySpec> families;
  FamilySpec base;
  base.family = spec.family;
  base.directed = spec.directed;
  switch (spec.family) {
    case Family::kErGnp:
      for (int n : spec.n) {
        std::vector<double> ps = spec.p;
        if (spec.p_log_n) ps = {n > 1 ? std::log(n) / n : 0.0};
        for (double p : ps) {
          FamilySpec f = base;
          f.n = n;
          f.p = p;
          families.push_back(f);
        }
      }
      break;
    case Family::kBalancedBinaryTree:
      for (int h : spec.h) {
        FamilySpec f = base;
        f.h = h;
        families.push_back(f);
      }
      break;
    case Family::kStarBranched:
      for (int k : spec.k) {
        for (int beta : spec.beta) {
          FamilySpec f = base;
          f.k = k;
          f.beta = beta;
          families.push_back(f);
        }
      }
      break;
    case Family::kCircularLadder:
      for (int c : spec.c) {
        FamilySpec f = base;
        f.c = c;
        families.push_back(f);
      }
      break;
  }
  std::vector<GridPoint> out;
  const std::vector<double> deltas =
      spec.task == Task::kIsomorphic ? std::vector<double>{0.0} : spec.delta;
  for (const FamilySpec& f : families) {
    for (double d : deltas) out.push_back({f, d});
  }
  return out;
}

/// One benchmark instance: G_B derived from G_A and the ground truth.
struct Instance {
  Graph a, b;
  Permutation truth;
};

namespace detail {

inline std::vector<Attribute> sample_attributes(const AttributeSpec& spec,
                                                int count, int size,
                                                const std::string& prefix,
                                                Rng& rng) {
  std::vector<Attribute> out;
  for (int i = 0; i < count; ++i) {
    const std::string name = prefix + std::to_string(i);
    if (spec.kind == AttributeKind::kMeasurable) {
      std::vector<double> v(static_cast<std::size_t>(size));
      for (double& x : v) x = rng.normal();
      out.push_back(Attribute::measurable(name, std::move(v), spec.rho));
    } else {
      std::vector<Token> v;
      v.reserve(static_cast<std::size_t>(size));
      for (int j = 0; j < size; ++j) {
        v.emplace_back(static_cast<std::int64_t>(
            rng.below(static_cast<std::uint64_t>(spec.categories))));
      }
      out.push_back(Attribute::categorical(name, std::move(v), spec.rho));
    }
  }
  return out;
}

}  // namespace detail

inline Instance make_instance(Task task, const GridPoint& point,
                              const AttributeSpec& attrs,
                              std::uint64_t sample_seed) {
  Graph a = generate(point.family, mix_seed(sample_seed, stream::kGenerate));
  if (attrs.vertex_count > 0 || attrs.edge_count > 0) {
    Rng rng(mix_seed(sample_seed, stream::kAttributes));
    auto va = detail::sample_attributes(attrs, attrs.vertex_count,
                                        a.vertex_count(), "v", rng);
    auto ea = detail::sample_attributes(attrs, attrs.edge_count,
                                        a.edge_count(), "e", rng);
    a = a.with_attributes(std::move(va), std::move(ea));
  }
  const std::uint64_t degrade_seed = mix_seed(sample_seed, stream::kDegrade);
  const std::uint64_t shuffle_seed = mix_seed(sample_seed, stream::kShuffle);
  switch (task) {
    case Task::kIsomorphic: {
      Shuffled s = shuffle_vertices(a, shuffle_seed);
      return {std::move(a), std::move(s.graph), std::move(s.truth)};
    }
    case Task::kDegradeEdges: {
      Shuffled s =
          shuffle_vertices(degrade_edges(a, point.delta, degrade_seed), shuffle_seed);
      return {std::move(a), std::move(s.graph), std::move(s.truth)};
    }
    case Task::kDegradeVertices: {
      Subgraph sub = degrade_vertices(a, point.delta, degrade_seed);
      Shuffled s = shuffle_vertices(sub.graph, shuffle_seed);
      Permutation truth;
      truth.codomain_size = s.graph.vertex_count();
      truth.image.assign(static_cast<std::size_t>(a.vertex_count()),
                         Permutation::kUnmatched);
      for (std::size_t i = 0; i < sub.kept.size(); ++i) {
        truth.image[sub.kept[i]] = s.truth[static_cast<int>(i)];
      }
      return {std::move(a), std::move(s.graph), std::move(truth)};
    }
  }
  throw Error("unknown task");
}

/// Accuracy and structural quality of each algorithm on one sample.
struct SampleResult {
  std::vector<double> gamma;
  std::vector<double> qs;
};

inline SampleResult run_sample(const ExperimentSpec& spec, const GridPoint& point,
                               std::uint64_t sample_seed) {
  const Instance inst = make_instance(spec.task, point, spec.attributes, sample_seed);
  SampleResult r;
  for (std::size_t j = 0; j < spec.algorithms.size(); ++j) {
    const MatchOutcome m =
        run_matcher(spec.algorithms[j], inst.a, inst.b,
                    mix_seed(sample_seed, stream::kAlgorithm + j), spec.gasm);
    r.gamma.push_back(accuracy(m.matching.map, inst.truth));
    r.qs.push_back(structural_quality(inst.a, inst.b, m.matching.map));
  }
  return r;
}

/// Runs `count` jobs on a worker pool; job i writes only slot i, so the
/// reduction order is the index order whatever the scheduling.
template <class Job>
void parallel_for(int count, int threads, Job job) {
  if (threads <= 0) {
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct BenchRow {
  std::string task;
  GridPoint point;
  int vertex_count = 0;
  std::string algorithm;
  Summary gamma;
  Summary qs;
  int samples = 0;
  std::uint64_t seed = 0;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  /// Per grid point, per sample results in sample order.
  std::vector<std::vector<SampleResult>> samples;
};

inline BenchResult run_bench(const ExperimentSpec& spec) {
  BenchResult out;
  for (const GridPoint& point : grid_points(spec)) {
    std::vector<SampleResult> results(static_cast<std::size_t>(spec.samples));
    parallel_for(spec.samples, spec.threads, [&](int i) {
      results[i] = run_sample(spec, point, spec.base_seed + static_cast<std::uint64_t>(i));
    });
    const int n_a = generate(point.family, mix_seed(spec.base_seed, stream::kGenerate))
                        .vertex_count();
    for (std::size_t j = 0; j < spec.algorithms.size(); ++j) {
      std::vector<double> g, q;
      for (const SampleResult& r : results) {
        g.push_back(r.gamma[j]);
        q.push_back(r.qs[j]);
      }
      BenchRow row;
      row.task = to_string(spec.task);
      row.point = point;
      row.vertex_count = n_a;
      row.algorithm = to_string(spec.algorithms[j]);
      row.gamma = summarize(g);
      row.qs = summarize(q);
      row.samples = spec.samples;
      row.seed = spec.base_seed;
      out.rows.push_back(std::move(row));
    }
    out.samples.push_back(std::move(results));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Output

/// Shortest round-trip decimal form; "nan" and "inf" for non-finite values.
inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

/// One table row as ordered (column, value) pairs; values are numbers,
/// strings or null, so CSV and JSON are rendered from the same data.
using Record = std::vector<std::pair<std::string, Json>>;

inline Record to_record(const BenchRow& row) {
  const FamilySpec& f = row.point.family;
  const bool er = f.family == Family::kErGnp;
  auto opt = [](bool used, Json v) { return used ? v : Json(nullptr); };
  return {
      {"task", row.task},
      {"family", to_string(f.family)},
      {"directed", f.directed},
      {"n", row.vertex_count},
      {"p", opt(er, f.p)},
      {"h", opt(f.family == Family::kBalancedBinaryTree, f.h)},
      {"k", opt(f.family == Family::kStarBranched, f.k)},
      {"beta", opt(f.family == Family::kStarBranched, f.beta)},
      {"c", opt(f.family == Family::kCircularLadder, f.c)},
      {"delta", opt(row.task != "isomorphic", row.point.delta)},
      {"algorithm", row.algorithm},
      {"mean_gamma", row.gamma.mean},
      {"se_gamma", row.gamma.se},
      {"mean_qs", row.qs.mean},
      {"se_qs", row.qs.se},
      {"samples", row.samples},
      {"seed", row.seed},
  };
}

inline std::string csv_field(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_number()) return v.dump();
  std::string s = v.get<std::string>();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

inline void write_csv(std::ostream& out, const std::vector<Record>& records) {
  if (records.empty()) return;
  for (std::size_t i = 0; i < records[0].size(); ++i) {
    out << (i ? "," : "") << records[0][i].first;
  }
  out << "\n";
  for (const Record& r : records) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      out << (i ? "," : "") << csv_field(r[i].second);
    }
    out << "\n";
  }
}

/// Non-finite numbers become null (JSON has no representation for them).
inline Json records_to_json(const std::vector<Record>& records) {
  Json rows = Json::array();
  for (const Record& r : records) {
    Json o = Json::object();
    for (const auto& [key, value] : r) {
      if (value.is_number_float() && !std::isfinite(value.get<double>())) {
        o[key] = nullptr;
      } else {
        o[key] = value;
      }
    }
    rows.push_back(std::move(o));
  }
  return rows;
}

inline std::vector<Record> bench_records(const BenchResult& result) {
  std::vector<Record> out;
  for (const BenchRow& row : result.rows) out.push_back(to_record(row));
  return out;
}

inline Json bench_metadata(const ExperimentSpec& spec) {
  Json m;
  m["task"] = to_string(spec.task);
  m["samples"] = spec.samples;
  m["base_seed"] = spec.base_seed;
  m["sample_seed"] = "base_seed + i";
  m["eta"] = spec.gasm.eta;
  m["complement"] = to_string(spec.gasm.complement);
  m["undirected_diameter"] = spec.gasm.undirected_diameter;
  m["vertex_attributes"] = spec.attributes.vertex_count;
  m["edge_attributes"] = spec.attributes.edge_count;
  m["attribute_kind"] = to_string(spec.attributes.kind);
  m["rho"] = spec.attributes.rho ? Json(*spec.attributes.rho) : Json("auto");
  m["note"] =
      "Sample counts are scaled down from the published experiments "
      "(10^4 samples per point) for desk-scale runs; 2opt is a single-start "
      "first-improvement pairwise swap search.";
  return m;
}

}  // namespace gasm

#endif  // GASM_BENCH_HPP_
