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

#include "iasi/compatibility.hpp"

#include <algorithm>
#include <map>

#include "iasi/error.hpp"

namespace iasi {

namespace {

void require_non_empty(const IntSet& a, const IntSet& b) {
  if (a.empty() || b.empty()) throw EmptySet("compatibility classes need non-empty sets");
}

// Class sizes keyed by sum, via plain pair enumeration.
std::map<std::uint64_t, std::size_t> class_sizes(const IntSet& a, const IntSet& b) {
  require_non_empty(a, b);
  std::map<std::uint64_t, std::size_t> sizes;
  a.for_each([&](std::uint64_t x) { b.for_each([&](std::uint64_t y) { ++sizes[x + y]; }); });
  return sizes;
}

}  // namespace

const CompatibilityTable::Class* CompatibilityTable::find(std::uint64_t sum) const {
  auto it = std::lower_bound(classes_.begin(), classes_.end(), sum,
                             [](const Class& c, std::uint64_t k) { return c.sum < k; });
  return it != classes_.end() && it->sum == sum ? &*it : nullptr;
}

CompatibilityTable compatibility_table(const IntSet& a, const IntSet& b) {
  require_non_empty(a, b);
  const std::uint64_t bound = std::min(a.universe_bound(), b.universe_bound());
  if (a.max() + b.max() > bound) {
    throw BoundExceeded("sum " + std::to_string(a.max() + b.max()) +
                        " exceeds universe bound " + std::to_string(bound));
  }
  std::map<std::uint64_t, std::vector<CompatibilityTable::Pair>> grouped;
  // a ascending in the outer loop keeps pairs ordered by first coordinate
  a.for_each([&](std::uint64_t x) {
    b.for_each([&](std::uint64_t y) { grouped[x + y].emplace_back(x, y); });
  });
  std::vector<CompatibilityTable::Class> classes;
  classes.reserve(grouped.size());
  for (auto& [sum, pairs] : grouped) classes.push_back({sum, std::move(pairs)});
  return CompatibilityTable(a, b, std::move(classes));
}

std::size_t compatibility_index(const IntSet& a, const IntSet& b) {
  return class_sizes(a, b).size();
}

std::size_t neglecting_number(const IntSet& a, const IntSet& b) {
  return a.size() * b.size() - compatibility_index(a, b);
}

std::size_t max_class_size(const IntSet& a, const IntSet& b) {
  std::size_t best = 0;
  for (const auto& [sum, n] : class_sizes(a, b)) best = std::max(best, n);
  return best;
}

bool has_saturated_class(const IntSet& a, const IntSet& b) {
  return max_class_size(a, b) == std::min(a.size(), b.size());
}

}  // namespace iasi
