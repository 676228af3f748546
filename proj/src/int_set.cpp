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

#include "iasi/int_set.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "iasi/error.hpp"

namespace iasi {

IntSet::IntSet(std::initializer_list<std::uint64_t> elements, std::uint64_t universe_bound)
    : bound_(universe_bound) {
  for (auto x : elements) insert(x);
}

IntSet IntSet::from_elements(std::span<const std::uint64_t> elements,
                             std::uint64_t universe_bound) {
  IntSet s(universe_bound);
  for (auto x : elements) s.insert(x);
  return s;
}

IntSet IntSet::singleton(std::uint64_t x, std::uint64_t universe_bound) {
  IntSet s(universe_bound);
  s.insert(x);
  return s;
}

IntSet IntSet::prefix(std::uint64_t count, std::uint64_t universe_bound) {
  IntSet s(universe_bound);
  for (std::uint64_t x = 0; x < count; ++x) s.insert(x);
  return s;
}

void IntSet::insert(std::uint64_t x) {
  if (x > bound_) {
    throw BoundExceeded("element " + std::to_string(x) + " exceeds universe bound " +
                        std::to_string(bound_));
  }
  const std::size_t w = x / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (x % 64);
}

std::uint64_t IntSet::min() const {
  if (words_.empty()) throw EmptySet("min of empty set");
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return w * 64 + static_cast<std::uint64_t>(std::countr_zero(words_[w]));
    }
  }
  return 0;  // unreachable: trimmed non-empty storage has a set bit
}

std::uint64_t IntSet::max() const {
  if (words_.empty()) throw EmptySet("max of empty set");
  const std::size_t w = words_.size() - 1;
  return w * 64 + 63 - static_cast<std::uint64_t>(std::countl_zero(words_[w]));
}

std::vector<std::uint64_t> IntSet::elements() const {
  std::vector<std::uint64_t> out;
  out.reserve(size());
  for_each([&](std::uint64_t x) { out.push_back(x); });
  return out;
}

std::string IntSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](std::uint64_t x) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(x);
  });
  out += '}';
  return out;
}

std::size_t IntSet::hash() const {
  // FNV-1a over the words
  std::uint64_t h = 1469598103934665603ULL;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const IntSet& a, const IntSet& b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

void IntSet::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

IntSet sumset(const IntSet& a, const IntSet& b) {
  if (a.empty() || b.empty()) throw EmptySet("sumset requires non-empty operands");
  const std::uint64_t bound = std::min(a.bound_, b.bound_);
  const std::uint64_t top = a.max() + b.max();
  if (top > bound) {
    throw BoundExceeded("sum " + std::to_string(top) + " exceeds universe bound " +
                        std::to_string(bound));
  }
  IntSet out(bound);
  out.words_.assign(top / 64 + 1, 0);
  const auto& bw = b.words_;
  std::uint64_t* res = out.words_.data();
  const std::size_t n = out.words_.size();
  a.for_each([&](std::uint64_t shift) {
    const std::size_t off = shift / 64;
    const unsigned bit = static_cast<unsigned>(shift % 64);
    if (bit == 0) {
      for (std::size_t i = 0; i < bw.size(); ++i) res[i + off] |= bw[i];
    } else {
      for (std::size_t i = 0; i < bw.size(); ++i) {
        res[i + off] |= bw[i] << bit;
        if (i + off + 1 < n) res[i + off + 1] |= bw[i] >> (64 - bit);
      }
    }
  });
  out.trim();
  return out;
}

IntSet parse_int_set(std::string_view text, std::uint64_t universe_bound) {
  auto skip_ws = [&](std::size_t& i) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  std::size_t i = 0;
  skip_ws(i);
  if (i >= text.size() || text[i] != '{') throw ParseError("set literal must start with '{'", 0);
  ++i;
  IntSet out(universe_bound);
  skip_ws(i);
  if (i < text.size() && text[i] == '}') {
    ++i;
  } else {
    bool have_prev = false;
    std::uint64_t prev = 0;
    while (true) {
      skip_ws(i);
      std::uint64_t value = 0;
      const char* begin = text.data() + i;
      const char* end = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc() || ptr == begin) {
        throw ParseError("expected a non-negative integer in set literal", 0);
      }
      i += static_cast<std::size_t>(ptr - begin);
      if (have_prev && value <= prev) {
        throw ParseError("set literal elements must be ascending and distinct", 0);
      }
      out.insert(value);
      prev = value;
      have_prev = true;
      skip_ws(i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == '}') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or '}' in set literal", 0);
    }
  }
  skip_ws(i);
  if (i != text.size()) throw ParseError("trailing characters after set literal", 0);
  return out;
}

}  // namespace iasi
