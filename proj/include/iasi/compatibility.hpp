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
#include <cstdint>
#include <utility>
#include <vector>

#include "iasi/int_set.hpp"

namespace iasi {

// Pairs (a,b) in A x B grouped by their sum k. Classes are ordered by
// ascending k; pairs inside a class by ascending a.
class CompatibilityTable {
 public:
  using Pair = std::pair<std::uint64_t, std::uint64_t>;

  struct Class {
    std::uint64_t sum;
    std::vector<Pair> pairs;
  };

  CompatibilityTable(IntSet left, IntSet right, std::vector<Class> classes)
      : left_(std::move(left)), right_(std::move(right)), classes_(std::move(classes)) {}

  const IntSet& left() const { return left_; }
  const IntSet& right() const { return right_; }
  const std::vector<Class>& classes() const { return classes_; }

  // nullptr when no pair sums to k.
  const Class* find(std::uint64_t sum) const;

 private:
  IntSet left_;
  IntSet right_;
  std::vector<Class> classes_;
};

// Enumerates A x B directly. Independent of the bit-vector sumset kernel, so
// the class count can be checked against |sumset(A,B)|.
CompatibilityTable compatibility_table(const IntSet& a, const IntSet& b);

// Number of compatibility classes.
std::size_t compatibility_index(const IntSet& a, const IntSet& b);

// |A||B| minus the number of classes: the pairs that collapse onto a class
// representative.
std::size_t neglecting_number(const IntSet& a, const IntSet& b);

std::size_t max_class_size(const IntSet& a, const IntSet& b);

// A class of size min(|A|,|B|) exists.
bool has_saturated_class(const IntSet& a, const IntSet& b);

}  // namespace iasi
