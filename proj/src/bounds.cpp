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

#include "iasi/bounds.hpp"

#include <bit>
#include <limits>

#include "iasi/error.hpp"

namespace iasi {

std::size_t ground_set_lower_bound(std::size_t n) {
  if (n == 0) throw SpecError("ground set bound needs at least one vertex");
  // bit_width(n) = floor(log2 n) + 1 = ceil(log2(n+1))
  return static_cast<std::size_t>(std::bit_width(n));
}

std::uint64_t binomial(std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  if (k > m - k) k = m - k;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (m - k + i) / i is exact at every step
    const std::uint64_t factor = m - k + i;
    if (result > kMax / factor) return kMax;
    result = result * factor / i;
  }
  return result;
}

std::size_t uniform_ground_set_lower_bound(std::size_t n, std::size_t l) {
  if (n == 0 || l == 0) throw SpecError("uniform bound needs n >= 1 and l >= 1");
  std::size_t m = l;
  while (binomial(m, l) < n) ++m;
  return m;
}

}  // namespace iasi
