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

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "iasi/int_set.hpp"

namespace iasi {

class Graph;

// Vertex name -> non-empty set label. Iteration is by vertex name; file
// output follows a graph's vertex order when one is supplied.
class SetLabeling {
 public:
  using Map = std::map<std::string, IntSet, std::less<>>;

  SetLabeling() = default;

  // Throws EmptySet for an empty label. Overwrites an existing assignment.
  void assign(std::string vertex, IntSet label);

  // Throws GraphError when the vertex has no label.
  const IntSet& at(std::string_view vertex) const;
  const IntSet* find(std::string_view vertex) const;
  bool contains(std::string_view vertex) const { return map_.find(vertex) != map_.end(); }

  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }
  Map::const_iterator begin() const { return map_.begin(); }
  Map::const_iterator end() const { return map_.end(); }

  friend bool operator==(const SetLabeling&, const SetLabeling&) = default;

 private:
  Map map_;
};

// Labeling file: one `<v>: {a,b,c}` per line, `#` comments, blank lines ok.
// The vertex name is everything before the last ':' that precedes '{', so
// derived names such as `e:a-b` are accepted.
SetLabeling parse_labeling(std::string_view text,
                           std::uint64_t universe_bound = kDefaultUniverseBound);

// Lines in name order.
std::string format_labeling(const SetLabeling& f);
// Lines in g's vertex order; vertices without a label are skipped.
std::string format_labeling(const SetLabeling& f, const Graph& g);

}  // namespace iasi
