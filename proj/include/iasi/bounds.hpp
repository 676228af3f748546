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

namespace iasi {

// ceil(log2(n+1)): n distinct non-empty labels need 2^|X| >= n+1.
// Throws SpecError for n = 0.
std::size_t ground_set_lower_bound(std::size_t n);

// Smallest m with C(m, l) >= n. Throws SpecError for n = 0 or l = 0.
std::size_t uniform_ground_set_lower_bound(std::size_t n, std::size_t l);

// C(m, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t m, std::uint64_t k);

}  // namespace iasi
