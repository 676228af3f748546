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

#include "iasi/labeling.hpp"

#include <cctype>
#include <sstream>

#include "iasi/error.hpp"

namespace iasi {

void SetLabeling::assign(std::string vertex, IntSet label) {
  if (label.empty()) throw EmptySet("empty label for vertex '" + vertex + "'");
  map_.insert_or_assign(std::move(vertex), std::move(label));
}

const IntSet& SetLabeling::at(std::string_view vertex) const {
  auto it = map_.find(vertex);
  if (it == map_.end()) throw GraphError("no label for vertex '" + std::string(vertex) + "'");
  return it->second;
}

const IntSet* SetLabeling::find(std::string_view vertex) const {
  auto it = map_.find(vertex);
  return it == map_.end() ? nullptr : &it->second;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

SetLabeling parse_labeling(std::string_view text, std::uint64_t universe_bound) {
  SetLabeling f;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto brace = line.find('{');
    if (brace == std::string_view::npos) throw ParseError("expected '<v>: {..}'", line_no);
    std::string_view head = trim(line.substr(0, brace));
    if (head.empty() || head.back() != ':') throw ParseError("expected ':' before set literal", line_no);
    head = trim(head.substr(0, head.size() - 1));
    if (head.empty()) throw ParseError("blank vertex name", line_no);
    if (f.contains(head)) {
      throw ParseError("duplicate label for vertex '" + std::string(head) + "'", line_no);
    }
    IntSet label;
    try {
      label = parse_int_set(line.substr(brace), universe_bound);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    } catch (const BoundExceeded& e) {
      throw ParseError(e.what(), line_no);
    }
    if (label.empty()) throw ParseError("empty label for vertex '" + std::string(head) + "'", line_no);
    f.assign(std::string(head), std::move(label));
  }
  return f;
}

std::string format_labeling(const SetLabeling& f) {
  std::ostringstream out;
  for (const auto& [name, label] : f) out << name << ": " << label.to_string() << '\n';
  return out.str();
}

std::string format_labeling(const SetLabeling& f, const Graph& g) {
  std::ostringstream out;
  for (const auto& name : g.vertices()) {
    if (const IntSet* label = f.find(name)) out << name << ": " << label->to_string() << '\n';
  }
  return out.str();
}

void require_coverage(const Graph& g, const SetLabeling& f) {
  for (const auto& name : g.vertices()) {
    if (!f.contains(name)) throw GraphError("vertex '" + name + "' has no label");
  }
  if (f.size() != g.vertex_count()) {
    for (const auto& [name, label] : f) {
      if (!g.has_vertex(name)) throw GraphError("label for unknown vertex '" + name + "'");
    }
  }
}

std::map<EdgeId, IntSet> induced_edge_labels(const Graph& g, const SetLabeling& f) {
  require_coverage(g, f);
  std::map<EdgeId, IntSet> out;
  for (const auto& [u, v] : g.edge_list()) {
    out.emplace(EdgeId::make(g.name(u), g.name(v)), sumset(f.at(g.name(u)), f.at(g.name(v))));
  }
  return out;
}

SetLabeling canonical_iasi(const Graph& g, std::uint64_t universe_bound) {
  const std::size_t n = g.vertex_count();
  if (n > 63) throw BoundExceeded("canonical labeling of " + std::to_string(n) + " vertices needs 2^" +
                                  std::to_string(n - 1) + " in the universe");
  SetLabeling f;
  for (std::size_t i = 0; i < n; ++i) {
    f.assign(g.name(i), IntSet::singleton(std::uint64_t{1} << i, universe_bound));
  }
  for (const auto& [u, v] : g.edge_list()) {
    (void)sumset(f.at(g.name(u)), f.at(g.name(v)));  // bound check only
  }
  return f;
}

SetLabeling restrict(const Graph& g, const SetLabeling& f, const Graph& h) {
  require_coverage(g, f);
  if (!is_subgraph(h, g)) throw GraphError("not a subgraph of the labeled graph");
  SetLabeling out;
  for (const auto& name : h.vertices()) out.assign(name, f.at(name));
  return out;
}

}  // namespace iasi
