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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace iasi {

inline constexpr std::uint64_t kDefaultUniverseBound = 4096;

// Finite set of non-negative integers in [0, universe_bound], stored as a
// bit-vector. The word vector is kept trimmed (no trailing zero words), so two
// sets with the same elements have identical storage regardless of bound.
class IntSet {
 public:
  IntSet() = default;
  explicit IntSet(std::uint64_t universe_bound) : bound_(universe_bound) {}
  IntSet(std::initializer_list<std::uint64_t> elements,
         std::uint64_t universe_bound = kDefaultUniverseBound);

  static IntSet from_elements(std::span<const std::uint64_t> elements,
                              std::uint64_t universe_bound = kDefaultUniverseBound);
  static IntSet singleton(std::uint64_t x,
                          std::uint64_t universe_bound = kDefaultUniverseBound);
  // {0, 1, ..., count-1}
  static IntSet prefix(std::uint64_t count,
                       std::uint64_t universe_bound = kDefaultUniverseBound);

  // Throws BoundExceeded when x > universe_bound().
  void insert(std::uint64_t x);

  bool contains(std::uint64_t x) const {
    const std::size_t w = x / 64;
    return w < words_.size() && ((words_[w] >> (x % 64)) & 1U) != 0;
  }
  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const { return words_.empty(); }
  bool is_singleton() const { return size() == 1; }

  // Both throw EmptySet on an empty set.
  std::uint64_t min() const;
  std::uint64_t max() const;

  std::uint64_t universe_bound() const { return bound_; }
  std::span<const std::uint64_t> words() const { return words_; }
  std::vector<std::uint64_t> elements() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<std::uint64_t>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  // `{a,b,c}` in ascending order.
  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const IntSet& a, const IntSet& b) { return a.words_ == b.words_; }
  // Lexicographic on the ascending element sequence.
  friend std::strong_ordering operator<=>(const IntSet& a, const IntSet& b);

 private:
  friend IntSet sumset(const IntSet& a, const IntSet& b);
  void trim();

  std::vector<std::uint64_t> words_;
  std::uint64_t bound_ = kDefaultUniverseBound;
};

// {a+b : a in A, b in B} by shift-or accumulation: one pass over B's words
// for each element of A. The result's bound is the smaller operand bound.
// Throws EmptySet for an empty operand and BoundExceeded when
// max(A)+max(B) exceeds that bound.
IntSet sumset(const IntSet& a, const IntSet& b);

// Parses `{a,b,c}`: ascending distinct decimal integers, whitespace tolerated.
// `{}` yields the empty set; callers that need a label reject it.
IntSet parse_int_set(std::string_view text,
                     std::uint64_t universe_bound = kDefaultUniverseBound);

}  // namespace iasi

template <>
struct std::hash<iasi::IntSet> {
  std::size_t operator()(const iasi::IntSet& s) const noexcept { return s.hash(); }
};
