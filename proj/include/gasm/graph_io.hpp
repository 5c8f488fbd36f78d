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

// Graph JSON:
//   { "directed": bool, "n": int, "edges": [[s, t], ...],
//     "vertex_attributes": [{"name": str, "kind": "categorical"|"measurable",
//                            "values": [...], "error": number|null}, ...],
//     "edge_attributes": [...] }
// Edge attribute values follow the order of "edges".

#ifndef GASM_GRAPH_IO_HPP_
#define GASM_GRAPH_IO_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gasm/graph.hpp"
#include "json.hpp"

namespace gasm {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json attribute_to_json(const Attribute& a) {
  Json j;
  j["name"] = a.name;
  j["kind"] = to_string(a.kind());
  Json values = Json::array();
  if (a.kind() == AttributeKind::kMeasurable) {
    for (double x : a.measures()) values.push_back(x);
  } else {
    for (const Token& t : a.tokens()) {
      std::visit([&](const auto& v) { values.push_back(v); }, t);
    }
  }
  j["values"] = std::move(values);
  j["error"] = a.error ? Json(*a.error) : Json(nullptr);
  return j;
}

inline Attribute attribute_from_json(const Json& j) {
  const std::string name = j.at("name").get<std::string>();
  const std::string kind = j.at("kind").get<std::string>();
  std::optional<double> error;
  if (j.contains("error") && !j.at("error").is_null()) {
    error = j.at("error").get<double>();
  }
  const Json& values = j.at("values");
  if (!values.is_array()) throw Error("attribute '" + name + "': values must be an array");
  if (kind == "measurable") {
    std::vector<double> v;
    for (const Json& x : values) {
      if (!x.is_number()) {
        throw Error("attribute '" + name + "': measurable values must be numbers");
      }
      v.push_back(x.get<double>());
    }
    return Attribute::measurable(name, std::move(v), error);
  }
  if (kind == "categorical") {
    std::vector<Token> v;
    for (const Json& x : values) {
      if (x.is_number_integer()) {
        v.emplace_back(x.get<std::int64_t>());
      } else if (x.is_string()) {
        v.emplace_back(x.get<std::string>());
      } else {
        throw Error("attribute '" + name +
                    "': categorical values must be strings or integers");
      }
    }
    return Attribute::categorical(name, std::move(v), error);
  }
  throw Error("attribute '" + name + "': unknown kind '" + kind + "'");
}

}  // namespace detail

inline Json graph_to_json(const Graph& g) {
  Json j;
  j["directed"] = g.directed();
  j["n"] = g.vertex_count();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.source, e.target});
  j["edges"] = std::move(edges);
  Json va = Json::array(), ea = Json::array();
  for (const Attribute& a : g.vertex_attributes())
    va.push_back(detail::attribute_to_json(a));
  for (const Attribute& a : g.edge_attributes())
    ea.push_back(detail::attribute_to_json(a));
  j["vertex_attributes"] = std::move(va);
  j["edge_attributes"] = std::move(ea);
  return j;
}

inline Graph graph_from_json(const Json& j) {
  try {
    const bool directed = j.at("directed").get<bool>();
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const Json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error("edge must be [s, t]");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    std::vector<Attribute> va, ea;
    if (j.contains("vertex_attributes")) {
      for (const Json& a : j.at("vertex_attributes"))
        va.push_back(detail::attribute_from_json(a));
    }
    if (j.contains("edge_attributes")) {
      for (const Json& a : j.at("edge_attributes"))
        ea.push_back(detail::attribute_from_json(a));
    }
    return Graph(directed, n, std::move(edges), std::move(va), std::move(ea));
  } catch (const Json::exception& e) {
    throw Error(std::string("invalid graph JSON: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Graph load_graph(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    throw Error("'" + path + "': " + e.what());
  }
  return graph_from_json(j);
}

/// Ground truth as {"mapping": [image of each vertex, -1 if unmatched],
/// "codomain_size": n_B}.
inline Json permutation_to_json(const Permutation& p) {
  Json j;
  j["mapping"] = p.image;
  j["codomain_size"] = p.codomain_size;
  return j;
}

inline Permutation permutation_from_json(const Json& j) {
  Permutation p;
  try {
    const Json& mapping = j.is_array() ? j : j.at("mapping");
    p.image = mapping.get<std::vector<int>>();
    if (j.is_object() && j.contains("codomain_size")) {
      p.codomain_size = j.at("codomain_size").get<int>();
    } else {
      for (int v : p.image) p.codomain_size = std::max(p.codomain_size, v + 1);
    }
  } catch (const Json::exception& e) {
    throw Error(std::string("invalid permutation JSON: ") + e.what());
  }
  p.validate();
  return p;
}

}  // namespace gasm

#endif  // GASM_GRAPH_IO_HPP_
