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

// gasm: command-line front end.
//
//   gasm match A.json B.json [--algo gasm] [--truth T.json] ...
//   gasm gen FAMILY [--n ..] [--p ..] ... [--shuffle --truth-out T.json]
//   gasm bench --task isomorphic --family binary_tree --h 2,3,4 ...
//   gasm qaplib DIR [--algo gasm --algo 2opt] [--max-n 32]

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gasm/gasm.hpp"

namespace {

using gasm::Json;

/// --rho: a non-negative number, or "auto" for the default error.
struct RhoOption {
  std::string text;

  bool given() const { return !text.empty(); }
  std::optional<double> value() const {
    if (text.empty() || text == "auto") return std::nullopt;
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || !(x >= 0.0)) {
      throw gasm::Error("--rho expects a non-negative number or 'auto'");
    }
    return x;
  }
};

/// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw gasm::Error("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

gasm::Graph with_rho(const gasm::Graph& g, std::optional<double> rho) {
  auto set = [&](std::vector<gasm::Attribute> attrs) {
    for (gasm::Attribute& a : attrs) a.error = rho;
    return attrs;
  };
  return g.with_attributes(set(g.vertex_attributes()), set(g.edge_attributes()));
}

struct CommonOptions {
  std::uint64_t seed = 0;
  std::string format;
  std::string out;
  std::vector<std::string> algos;
  double eta = 1e-10;
  RhoOption rho;
  std::string complement = "auto";
  bool undirected_diameter = false;

  std::vector<gasm::Algorithm> algorithms() const {
    std::vector<gasm::Algorithm> out_algos;
    for (const std::string& a : algos) {
      // Accept both repeated flags and comma lists.
      std::size_t start = 0;
      while (start <= a.size()) {
        const std::size_t end = std::min(a.find(',', start), a.size());
        if (end > start) out_algos.push_back(gasm::parse_algorithm(a.substr(start, end - start)));
        start = end + 1;
      }
    }
    return out_algos;
  }

  gasm::GasmConfig gasm_config() const {
    gasm::GasmConfig cfg;
    cfg.eta = eta;
    cfg.seed = seed;
    cfg.complement = gasm::parse_complement_policy(complement);
    cfg.undirected_diameter = undirected_diameter;
    return cfg;
  }
};

void add_engine_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--eta", o.eta, "GASM initial noise amplitude")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--rho", o.rho.text,
                  "Attribute error for all attributes: number or 'auto' (sigma_a)");
  cmd->add_option("--complement", o.complement, "auto|never|always")
      ->check(CLI::IsMember({"auto", "never", "always"}));
  cmd->add_flag("--undirected-diameter", o.undirected_diameter,
                "Iteration count from undirected diameters (directed graphs)");
}

// ---------------------------------------------------------------------------

int cmd_match(const std::string& path_a, const std::string& path_b,
              const std::string& truth_path, const CommonOptions& o) {
  gasm::Graph a = gasm::load_graph(path_a);
  gasm::Graph b = gasm::load_graph(path_b);
  if (o.rho.given()) {
    a = with_rho(a, o.rho.value());
    b = with_rho(b, o.rho.value());
  }
  std::vector<gasm::Algorithm> algos = o.algorithms();
  if (algos.empty()) algos.push_back(gasm::Algorithm::kGasm);
  if (algos.size() != 1) throw gasm::Error("match takes a single --algo");

  const gasm::MatchOutcome m =
      gasm::run_matcher(algos[0], a, b, o.seed, o.gasm_config());
  std::optional<double> gamma;
  if (!truth_path.empty()) {
    const gasm::Permutation truth =
        gasm::permutation_from_json(Json::parse(gasm::read_file(truth_path)));
    gamma = gasm::accuracy(m.matching.map, truth);
  }
  const double qs = gasm::structural_quality(a, b, m.matching.map);

  Output out(o.out);
  std::ostream& os = out.stream();
  if (o.format == "csv") {
    os << "vertex_a,vertex_b\n";
    for (int u = 0; u < m.matching.map.domain_size(); ++u) {
      os << u << ",";
      if (m.matching.map[u] != gasm::Permutation::kUnmatched) os << m.matching.map[u];
      os << "\n";
    }
    std::cerr << "algorithm=" << m.matching.algorithm
              << " gamma=" << (gamma ? gasm::format_double(*gamma) : "n/a")
              << " q_s=" << gasm::format_double(qs)
              << " iterations=" << m.matching.iterations
              << " complemented=" << (m.complemented ? "true" : "false") << "\n";
  } else {
    Json j;
    j["algorithm"] = m.matching.algorithm;
    j["seed"] = m.matching.seed;
    j["mapping"] = m.matching.map.image;
    j["gamma"] = gamma ? Json(*gamma) : Json(nullptr);
    j["q_s"] = qs;
    j["iterations"] = m.matching.iterations;
    j["complemented"] = m.complemented;
    os << j.dump(2) << "\n";
  }
  return 0;
}

struct GenOptions {
  std::string family;
  gasm::FamilySpec spec;
  bool shuffle = false;
  std::string truth_out;
};

int cmd_gen(GenOptions g, const CommonOptions& o) {
  g.spec.family = gasm::parse_family(g.family);
  gasm::Graph graph = gasm::generate(g.spec, o.seed);
  if (g.shuffle || !g.truth_out.empty()) {
    gasm::Shuffled s = gasm::shuffle_vertices(graph, gasm::mix_seed(o.seed, 1));
    graph = std::move(s.graph);
    if (!g.truth_out.empty()) {
      Output t(g.truth_out);
      t.stream() << gasm::permutation_to_json(s.truth).dump() << "\n";
    }
  }
  Output out(o.out);
  out.stream() << gasm::graph_to_json(graph).dump() << "\n";
  return 0;
}

struct BenchOptions {
  std::string task = "isomorphic";
  std::string family = "er_gnp";
  bool directed = false;
  gasm::ExperimentSpec spec;
  int zeta = 0, xi = 0;
  std::string attr_kind = "measurable";
  int categories = 2;
};

int cmd_bench(BenchOptions b, const CommonOptions& o) {
  gasm::ExperimentSpec& spec = b.spec;
  spec.task = gasm::parse_task(b.task);
  spec.family = gasm::parse_family(b.family);
  spec.directed = b.directed;
  spec.base_seed = o.seed;
  spec.algorithms = o.algorithms();
  if (spec.algorithms.empty()) spec.algorithms = {gasm::Algorithm::kGasm};
  spec.gasm = o.gasm_config();
  spec.attributes.vertex_count = b.zeta;
  spec.attributes.edge_count = b.xi;
  spec.attributes.kind = b.attr_kind == "categorical"
                             ? gasm::AttributeKind::kCategorical
                             : gasm::AttributeKind::kMeasurable;
  spec.attributes.categories = b.categories;
  spec.attributes.rho = o.rho.value();

  const gasm::BenchResult result = gasm::run_bench(spec);
  const auto records = gasm::bench_records(result);
  Output out(o.out);
  if (o.format == "json") {
    Json j;
    j["metadata"] = gasm::bench_metadata(spec);
    j["rows"] = gasm::records_to_json(records);
    out.stream() << j.dump(2) << "\n";
  } else {
    gasm::write_csv(out.stream(), records);
  }
  return 0;
}

int cmd_qaplib(const std::string& dir, int max_n, const CommonOptions& o) {
  std::vector<gasm::Algorithm> algos = o.algorithms();
  if (algos.empty()) {
    algos = {gasm::Algorithm::kGasm, gasm::Algorithm::kZager,
             gasm::Algorithm::kTwoOpt};
  }
  const gasm::QapLoadReport loaded = gasm::load_instance_dir(dir, max_n);
  for (const std::string& w : loaded.warnings) {
    std::cerr << "warning: skipped " << w << "\n";
  }
  const gasm::QapReport report =
      gasm::run_qaplib(loaded.instances, algos, o.seed, o.gasm_config());

  std::vector<gasm::Record> rows;
  for (const gasm::QapRow& r : report.rows) {
    rows.push_back({
        {"instance", r.instance},
        {"n", r.n},
        {"algorithm", r.algorithm},
        {"qap_cost", r.qap_cost},
        {"best_known", r.best_known ? Json(*r.best_known) : Json(nullptr)},
        {"phi", r.best_known ? Json(r.phi.value) : Json(nullptr)},
        {"flag", r.flag},
        {"seed", r.seed},
    });
  }
  std::vector<gasm::Record> summary;
  for (const gasm::PhiDistribution& d : report.distributions) {
    auto q = [&](double p) {
      return d.values.empty() ? Json(nullptr) : Json(d.quantile(p));
    };
    summary.push_back({{"algorithm", d.algorithm},
                       {"instances", static_cast<int>(d.values.size())},
                       {"min", q(0.0)},
                       {"q25", q(0.25)},
                       {"median", q(0.5)},
                       {"q75", q(0.75)},
                       {"max", q(1.0)}});
  }

  Output out(o.out);
  std::ostream& os = out.stream();
  if (o.format == "json") {
    Json j;
    j["rows"] = gasm::records_to_json(rows);
    j["summary"] = gasm::records_to_json(summary);
    Json cdf = Json::object();
    for (const gasm::PhiDistribution& d : report.distributions) cdf[d.algorithm] = d.values;
    j["cdf"] = std::move(cdf);
    os << j.dump(2) << "\n";
  } else {
    if (rows.empty()) {
      os << "instance,n,algorithm,qap_cost,best_known,phi,flag,seed\n";
    } else {
      gasm::write_csv(os, rows);
    }
    os << "\n";
    gasm::write_csv(os, summary);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GASM graph matching and benchmarks"};
  // -h is left free for the tree depth option of gen/bench.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  CommonOptions common;

  // --format defaults: json for match, csv for bench and qaplib.
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", common.seed, "Seed (base seed for benchmarks)");
    cmd->add_option("--out", common.out, "Output file (default: stdout)");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", common.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_algo = [&](CLI::App* cmd) {
    cmd->add_option("--algo,--algos", common.algos,
                    "gasm|zager|2opt (repeatable or comma separated)");
  };

  // match
  CLI::App* match = app.add_subcommand("match", "Match two graph JSON files");
  std::string path_a, path_b, truth_path;
  match->add_option("graph_a", path_a)->required();
  match->add_option("graph_b", path_b)->required();
  match->add_option("--truth", truth_path, "Ground-truth permutation JSON");
  add_algo(match);
  add_format(match);
  add_engine_flags(match, common);

  // gen
  CLI::App* gen = app.add_subcommand("gen", "Generate a graph JSON file");
  GenOptions g;
  gen->add_option("family", g.family,
                  "er_gnp|balanced_binary_tree|star_branched|circular_ladder")
      ->required();
  gen->add_option("--n", g.spec.n, "Vertices (er_gnp)");
  gen->add_option("--p", g.spec.p, "Edge probability (er_gnp)");
  gen->add_flag("--directed", g.spec.directed, "Directed graph (er_gnp)");
  gen->add_option("--h", g.spec.h, "Depth (balanced_binary_tree)");
  gen->add_option("--k", g.spec.k, "Branches (star_branched)");
  gen->add_option("--beta", g.spec.beta, "Branch length (star_branched)");
  gen->add_option("--c", g.spec.c, "Ring size (circular_ladder)");
  gen->add_flag("--shuffle", g.shuffle, "Relabel vertices at random");
  gen->add_option("--truth-out", g.truth_out,
                  "Write the relabelling as ground truth (implies --shuffle)");

  // bench
  CLI::App* bench = app.add_subcommand("bench", "Run a benchmark grid");
  BenchOptions b;
  bench->add_option("--task", b.task)
      ->check(CLI::IsMember({"isomorphic", "degrade_edges", "degrade_vertices"}));
  bench->add_option("--family", b.family);
  bench->add_flag("--directed", b.directed);
  bench->add_option("--n", b.spec.n)->delimiter(',');
  bench->add_option("--p", b.spec.p)->delimiter(',');
  bench->add_flag("--p-log-n", b.spec.p_log_n, "Use p = log(n)/n");
  bench->add_option("--h", b.spec.h)->delimiter(',');
  bench->add_option("--k", b.spec.k)->delimiter(',');
  bench->add_option("--beta", b.spec.beta)->delimiter(',');
  bench->add_option("--c", b.spec.c)->delimiter(',');
  bench->add_option("--delta", b.spec.delta, "Degradation ratios")->delimiter(',');
  bench->add_option("--zeta", b.zeta, "Vertex attributes")->check(CLI::NonNegativeNumber);
  bench->add_option("--xi", b.xi, "Edge attributes")->check(CLI::NonNegativeNumber);
  bench->add_option("--attr-kind", b.attr_kind)
      ->check(CLI::IsMember({"measurable", "categorical"}));
  bench->add_option("--categories", b.categories)->check(CLI::PositiveNumber);
  bench->add_option("--samples", b.spec.samples)->check(CLI::PositiveNumber);
  bench->add_option("--threads", b.spec.threads, "Workers (0: all cores)");
  add_algo(bench);
  add_format(bench);
  add_engine_flags(bench, common);

  // qaplib
  CLI::App* qap = app.add_subcommand("qaplib", "Score ratios on QAPLIB instances");
  std::string qap_dir;
  int max_n = 64;
  qap->add_option("dir", qap_dir, "Directory of .dat/.sln files")->required();
  qap->add_option("--max-n", max_n, "Skip instances larger than this");
  add_algo(qap);
  add_format(qap);
  add_engine_flags(qap, common);

  add_common(match);
  add_common(gen);
  add_common(bench);
  add_common(qap);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*match) return cmd_match(path_a, path_b, truth_path, common);
    if (*gen) return cmd_gen(g, common);
    if (*bench) return cmd_bench(b, common);
    if (*qap) return cmd_qaplib(qap_dir, max_n, common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
