// Copyright 2026 The Systole Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON (de)serialization: the on-disk graph format, certificates and count
// reports. The graph format is
//   {"n": int,
//    "vertices": [{"cyclic": [edge_id, ...], "signs": [1, -1, ...]}, ...],
//    "edges":    [[[v, slot], [v, slot]], ...]}
// with signs[i] sitting between cyclic[i] and cyclic[(i+1) % n].

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "systole/census.hpp"
#include "systole/signed_graph.hpp"
#include "systole/surface.hpp"

namespace systole {

using nlohmann::json;

namespace detail {
/// Repo convention: floating point JSON output carries 9 significant digits.
inline double sig9(double x) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return std::atof(buf);
}
}  // namespace detail

inline json to_json(const SignedGraph& g) {
  json j;
  j["n"] = g.n;
  j["vertices"] = json::array();
  for (const auto& v : g.vertices) {
    json jv;
    jv["cyclic"] = v.cyclic;
    jv["signs"] = v.signs;
    j["vertices"].push_back(jv);
  }
  j["edges"] = json::array();
  for (const auto& e : g.edges) {
    j["edges"].push_back(json::array(
        {json::array({e.a.vertex, e.a.slot}), json::array({e.b.vertex, e.b.slot})}));
  }
  return j;
}

inline SignedGraph signed_graph_from_json(const json& j) {
  SignedGraph g;
  try {
    g.n = j.at("n").get<int>();
    for (const auto& jv : j.at("vertices")) {
      SignedGraph::Vertex v;
      v.cyclic = jv.at("cyclic").get<std::vector<int>>();
      v.signs = jv.at("signs").get<std::vector<int>>();
      g.vertices.push_back(std::move(v));
    }
    for (const auto& je : j.at("edges")) {
      if (!je.is_array() || je.size() != 2)
        throw GraphError(GraphError::Kind::ParseError, "edge entry is not a pair");
      SignedGraph::Edge e;
      e.a = {je[0].at(0).get<int>(), je[0].at(1).get<int>()};
      e.b = {je[1].at(0).get<int>(), je[1].at(1).get<int>()};
      g.edges.push_back(e);
    }
  } catch (const json::exception& ex) {
    throw GraphError(GraphError::Kind::ParseError,
                     std::string("graph JSON malformed: ") + ex.what());
  }
  validate(g);
  return g;
}

inline json to_json(const Certificate& c) {
  json j;
  j["n"] = c.n;
  j["graph"] = c.graph_summary;
  j["t_n"] = detail::sig9(c.t_n);
  j["L_n"] = detail::sig9(c.L_n);
  j["genus"] = c.genus;
  j["systole_count"] = c.systole_count;
  if (c.girth == kInfiniteGirth)
    j["girth"] = "infinity";
  else
    j["girth"] = c.girth;
  j["girth_threshold"] = detail::sig9(c.girth_threshold);
  j["girth_threshold_log"] = {{"value", detail::sig9(c.log_girth_threshold)}, {"log", true}};
  j["gersh_margin"] = detail::sig9(c.gersh_margin);
  j["angle_slack"] = detail::sig9(c.angle_slack);
  j["da_dt"] = detail::sig9(c.da_dt);
  j["dc_dt"] = detail::sig9(c.dc_dt);
  j["verdict"] = c.pass ? "pass" : "fail";
  j["failures"] = c.failures;
  return j;
}

inline json to_json(const CountReport& r) {
  json j;
  j["n"] = r.n;
  j["E"] = r.E;
  j["V"] = r.V;
  j["w"] = r.w;
  if (r.exact_graph_count >= 0) j["exact_graph_count"] = r.exact_graph_count;
  if (r.asymmetric_count >= 0) j["asymmetric_count"] = r.asymmetric_count;
  j["signed_structures_per_graph_log"] = detail::sig9(r.signed_structures_per_graph_log);
  j["bollobas_value"] = detail::sig9(r.u_asymptotic);
  j["bollobas_log"] = {{"value", detail::sig9(r.u_asymptotic_log)}, {"log", true}};
  j["girth_factor_log"] = {{"value", detail::sig9(r.girth_factor_log)}, {"log", true}};
  j["alpha_log"] = {{"value", detail::sig9(r.alpha_log)}, {"log", true}};
  j["s_lower_log"] = {{"value", detail::sig9(r.s_lower_log)}, {"log", true}};
  return j;
}

/// Underlying-graph mode of the same on-disk format: vertices carry their
/// incident edges in slot order and the signs are simply absent.
inline json to_json(const MultiGraph& g) {
  json j;
  std::vector<std::vector<int>> cyclic(g.V);
  json edges = json::array();
  int eid = 0;
  auto add_edge = [&](int u, int v) {
    int su = static_cast<int>(cyclic[u].size());
    cyclic[u].push_back(eid);
    int sv = static_cast<int>(cyclic[v].size());
    cyclic[v].push_back(eid);
    edges.push_back(json::array(
        {json::array({u, su}), json::array({v, sv})}));
    ++eid;
  };
  for (int i = 0; i < g.V; ++i) {
    for (int k = 0; k < g.at(i, i); ++k) add_edge(i, i);
    for (int w = i + 1; w < g.V; ++w)
      for (int k = 0; k < g.at(i, w); ++k) add_edge(i, w);
  }
  j["n"] = g.V > 0 ? g.degree(0) : 0;
  j["vertices"] = json::array();
  for (int v = 0; v < g.V; ++v) j["vertices"].push_back(json{{"cyclic", cyclic[v]}});
  j["edges"] = edges;
  return j;
}

}  // namespace systole
