// Copyright 2026 The iasi Authors
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

#include "iasi/json_io.hpp"

namespace iasi {

void to_json(Json& j, const IntSet& s) { j = s.to_string(); }

void from_json(const Json& j, IntSet& s) { s = parse_int_set(j.get<std::string>()); }

void to_json(Json& j, const EdgeId& e) { j = Json::array({e.first, e.second}); }

void from_json(const Json& j, EdgeId& e) {
  e = EdgeId::make(j.at(0).get<std::string>(), j.at(1).get<std::string>());
}

void to_json(Json& j, const SetLabeling& f) {
  j = Json::object();
  for (const auto& [name, label] : f) j[name] = label;
}

void from_json(const Json& j, SetLabeling& f) {
  f = SetLabeling();
  for (const auto& [name, label] : j.items()) f.assign(name, label.get<IntSet>());
}

void to_json(Json& j, const EdgeReport& r) {
  j = Json{{"edge", r.edge},
           {"label", r.label},
           {"size", r.indexing_number},
           {"class", std::string(to_string(r.edge_class))}};
}

void from_json(const Json& j, EdgeReport& r) {
  r.edge = j.at("edge").get<EdgeId>();
  r.label = j.at("label").get<IntSet>();
  r.indexing_number = j.at("size").get<std::size_t>();
  r.edge_class = edge_class_from_string(j.at("class").get<std::string>());
}

void to_json(Json& j, const VerificationReport& r) {
  j = Json::object();
  j["is_iasi"] = r.is_iasi;
  j["vertex_injective"] = r.vertex_injective;
  j["vertex_witness"] =
      r.vertex_witness ? Json::array({r.vertex_witness->first, r.vertex_witness->second}) : Json();
  j["edge_injective"] = r.edge_injective;
  j["edge_witness"] =
      r.edge_witness ? Json::array({r.edge_witness->first, r.edge_witness->second}) : Json();
  j["graph_class"] = std::string(to_string(r.graph_class));
  j["uniformity"] = r.uniformity ? Json(*r.uniformity) : Json();
  j["mono_indexed_vertices"] = r.mono_indexed_vertices;
  j["mono_indexed_edges"] = r.mono_indexed_edges;
  j["isolated_vertices"] = r.isolated_vertices;
  j["per_edge"] = r.per_edge;
}

void from_json(const Json& j, VerificationReport& r) {
  r = VerificationReport();
  r.is_iasi = j.at("is_iasi").get<bool>();
  r.vertex_injective = j.at("vertex_injective").get<bool>();
  if (const auto& w = j.at("vertex_witness"); !w.is_null()) {
    r.vertex_witness = std::make_pair(w.at(0).get<std::string>(), w.at(1).get<std::string>());
  }
  r.edge_injective = j.at("edge_injective").get<bool>();
  if (const auto& w = j.at("edge_witness"); !w.is_null()) {
    r.edge_witness = std::make_pair(w.at(0).get<EdgeId>(), w.at(1).get<EdgeId>());
  }
  r.graph_class = edge_class_from_string(j.at("graph_class").get<std::string>());
  if (const auto& u = j.at("uniformity"); !u.is_null()) r.uniformity = u.get<std::size_t>();
  r.mono_indexed_vertices = j.at("mono_indexed_vertices").get<std::vector<std::string>>();
  r.mono_indexed_edges = j.at("mono_indexed_edges").get<std::vector<EdgeId>>();
  r.isolated_vertices = j.at("isolated_vertices").get<std::vector<std::string>>();
  r.per_edge = j.at("per_edge").get<std::vector<EdgeReport>>();
}

void to_json(Json& j, const SearchOutcome& o) {
  j = Json::object();
  j["status"] = std::string(to_string(o.status));
  j["nodes_expanded"] = o.nodes_expanded;
  j["labeling"] = o.labeling ? Json(*o.labeling) : Json();
  j["report"] = o.report ? Json(*o.report) : Json();
}

void from_json(const Json& j, SearchOutcome& o) {
  o = SearchOutcome();
  o.status = search_status_from_string(j.at("status").get<std::string>());
  o.nodes_expanded = j.at("nodes_expanded").get<std::uint64_t>();
  if (const auto& f = j.at("labeling"); !f.is_null()) o.labeling = f.get<SetLabeling>();
  if (const auto& r = j.at("report"); !r.is_null()) o.report = r.get<VerificationReport>();
}

void to_json(Json& j, const MinimalGroundResult& r) {
  j = Json::object();
  j["status"] = std::string(to_string(r.status));
  j["m"] = r.m ? Json(*r.m) : Json();
  j["lower_bound"] = r.lower_bound;
  j["ground"] = r.ground ? Json(*r.ground) : Json();
  j["outcome"] = r.outcome;
}

Json transform_to_json(const TransformResult& r) {
  Json j = Json::object();
  j["graph"] = format_graph(r.graph);
  Json prov = Json::object();
  for (const auto& [name, o] : r.provenance) {
    const char* kind = o.kind == Origin::Kind::vertex ? "vertex"
                       : o.kind == Origin::Kind::edge ? "edge"
                                                      : "merged";
    prov[name] = o.kind == Origin::Kind::vertex ? Json{{"kind", kind}, {"of", Json::array({o.first})}}
                                                : Json{{"kind", kind}, {"of", Json::array({o.first, o.second})}};
  }
  j["provenance"] = prov;
  j["labeling"] = r.induced_labeling ? Json(*r.induced_labeling) : Json();
  j["report"] = r.report ? Json(*r.report) : Json();
  return j;
}

}  // namespace iasi
