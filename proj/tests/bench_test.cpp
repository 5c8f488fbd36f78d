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

#include "gasm/bench.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

namespace gasm {
namespace {

ExperimentSpec small_er_spec() {
  ExperimentSpec spec;
  spec.task = Task::kDegradeEdges;
  spec.family = Family::kErGnp;
  spec.n = {30};
  spec.p = {0.1, 0.2};
  spec.delta = {0.0, 0.3};
  spec.algorithms = {Algorithm::kGasm, Algorithm::kZager, Algorithm::kTwoOpt};
  spec.samples = 12;
  spec.base_seed = 99;
  spec.threads = 1;
  return spec;
}

std::string csv_of(const BenchResult& r) {
  std::ostringstream out;
  write_csv(out, bench_records(r));
  return out.str();
}

TEST(Bench, GridIsCartesianProduct) {
  const ExperimentSpec spec = small_er_spec();
  EXPECT_EQ(grid_points(spec).size(), 4u);
  ExperimentSpec iso = spec;
  iso.task = Task::kIsomorphic;
  EXPECT_EQ(grid_points(iso).size(), 2u);
}

TEST(Bench, InvalidSpecsRejected) {
  ExperimentSpec spec = small_er_spec();
  spec.samples = 0;
  EXPECT_THROW(run_bench(spec), Error);
  spec = small_er_spec();
  spec.delta = {1.5};
  EXPECT_THROW(run_bench(spec), Error);
  spec = small_er_spec();
  spec.p = {};
  EXPECT_THROW(run_bench(spec), Error);
  spec = small_er_spec();
  spec.algorithms = {};
  EXPECT_THROW(run_bench(spec), Error);
}

TEST(Bench, ReproducibleAndThreadIndependent) {
  ExperimentSpec spec = small_er_spec();
  const std::string once = csv_of(run_bench(spec));
  EXPECT_EQ(once, csv_of(run_bench(spec)));
  spec.threads = 4;
  EXPECT_EQ(once, csv_of(run_bench(spec)));
  spec.base_seed = 100;
  EXPECT_NE(once, csv_of(run_bench(spec)));
}

TEST(Bench, SamplesUseDistinctSeeds) {
  // Sample i is generated from base_seed + i: running one sample with the
  // shifted base reproduces sample i of the larger run.
  ExperimentSpec spec = small_er_spec();
  spec.delta = {0.3};
  spec.p = {0.1};
  const BenchResult full = run_bench(spec);
  for (int i : {0, 5, 11}) {
    ExperimentSpec one = spec;
    one.samples = 1;
    one.base_seed = spec.base_seed + static_cast<std::uint64_t>(i);
    const BenchResult r = run_bench(one);
    EXPECT_EQ(r.samples[0][0].gamma, full.samples[0][static_cast<std::size_t>(i)].gamma);
  }
  std::set<std::string> graphs;
  for (std::uint64_t s = 0; s < 12; ++s) {
    graphs.insert(graph_to_json(make_instance(spec.task, grid_points(spec)[0],
                                              spec.attributes, spec.base_seed + s)
                                    .a)
                      .dump());
  }
  EXPECT_EQ(graphs.size(), 12u);
}

TEST(Bench, CsvAndJsonAgreeFieldForField) {
  const BenchResult r = run_bench(small_er_spec());
  const auto records = bench_records(r);
  const Json json = Json::parse(records_to_json(records).dump());
  std::istringstream csv(csv_of(r));
  std::string line;
  std::getline(csv, line);
  std::vector<std::string> header;
  {
    std::istringstream ls(line);
    for (std::string f; std::getline(ls, f, ',');) header.push_back(f);
  }
  ASSERT_EQ(json.size(), records.size());
  for (std::size_t row = 0; row < records.size(); ++row) {
    ASSERT_TRUE(std::getline(csv, line));
    std::vector<std::string> fields;
    std::istringstream ls(line);
    for (std::string f; std::getline(ls, f, ',');) fields.push_back(f);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    ASSERT_EQ(fields.size(), header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
      const Json& v = json[row].at(header[c]);
      if (v.is_null()) {
        EXPECT_EQ(fields[c], "");
      } else if (v.is_number_float()) {
        EXPECT_EQ(std::stod(fields[c]), v.get<double>()) << header[c];
      } else {
        EXPECT_EQ(fields[c], csv_field(v)) << header[c];
      }
    }
  }
}

TEST(Bench, SchemaColumns) {
  const auto records = bench_records(run_bench(small_er_spec()));
  std::vector<std::string> names;
  for (const auto& [k, v] : records[0]) names.push_back(k);
  for (const char* col : {"mean_gamma", "se_gamma", "mean_qs", "se_qs", "samples", "seed"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), col), names.end()) << col;
  }
}

TEST(Bench, DegradeVerticesTruthTracksSurvivors) {
  GridPoint point;
  point.family.family = Family::kErGnp;
  point.family.n = 20;
  point.family.p = 0.3;
  point.delta = 0.4;
  AttributeSpec attrs;
  attrs.vertex_count = 1;
  const Instance inst = make_instance(Task::kDegradeVertices, point, attrs, 4);
  EXPECT_EQ(inst.b.vertex_count(), 12);
  EXPECT_EQ(inst.truth.codomain_size, 12);
  EXPECT_EQ(inst.truth.matched_count(), 12);
  const auto& va = inst.a.vertex_attributes()[0].measures();
  const auto& vb = inst.b.vertex_attributes()[0].measures();
  for (int u = 0; u < 20; ++u) {
    if (inst.truth[u] >= 0) {
      EXPECT_EQ(va[u], vb[inst.truth[u]]);
    }
  }
  // Every edge of G_B is the image of an edge of G_A.
  const Matrix A = adjacency(inst.a), B = adjacency(inst.b);
  const std::vector<int> inv = inst.truth.inverse();
  for (const Edge& e : inst.b.edges()) EXPECT_EQ(A(inv[e.source], inv[e.target]), 1.0);
  EXPECT_EQ(inst.b.edge_count() * 2, static_cast<int>(B.sum()));
}

TEST(Bench, ZeroDegradationWithAttributesIsExact) {
  ExperimentSpec spec;
  spec.task = Task::kDegradeEdges;
  spec.n = {40};
  spec.p = {0.15};
  spec.delta = {0.0};
  spec.attributes.vertex_count = 1;
  spec.samples = 20;
  const BenchResult r = run_bench(spec);
  EXPECT_EQ(r.rows[0].gamma.mean, 1.0);
  EXPECT_EQ(r.rows[0].qs.mean, 1.0);
}

TEST(Bench, CircularLadderCeiling) {
  ExperimentSpec spec;
  spec.family = Family::kCircularLadder;
  spec.c = {5};
  spec.samples = 200;
  const BenchRow row = run_bench(spec).rows[0];
  EXPECT_NEAR(row.gamma.mean, gamma_circular_ladder(5), 3 * row.gamma.se + 1e-12);
  EXPECT_NEAR(gamma_circular_ladder(5), 0.1, 1e-15);
}

TEST(Bench, BinaryTreeCeiling) {
  ExperimentSpec spec;
  spec.family = Family::kBalancedBinaryTree;
  spec.h = {2};
  spec.samples = 200;
  const BenchRow row = run_bench(spec).rows[0];
  EXPECT_NEAR(row.gamma.mean, 3.0 / 7.0, 3 * row.gamma.se + 1e-12);
}

TEST(Bench, MetadataRecordsScaledSamples) {
  const Json m = bench_metadata(small_er_spec());
  EXPECT_EQ(m.at("samples"), 12);
  EXPECT_EQ(m.at("sample_seed"), "base_seed + i");
  EXPECT_NE(m.at("note").get<std::string>().find("scaled down"), std::string::npos);
}

TEST(Bench, FormatDouble) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(std::nan("")), "nan");
  EXPECT_EQ(csv_field(Json("a,b")), "\"a,b\"");
}

}  // namespace
}  // namespace gasm
