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

// nlohmann::json bindings. Sets are written as their `{a,b}` literal, edges
// as `["u","v"]`, labelings as `{"vertex": "{..}"}` objects.

#include "json.hpp"

#include "iasi/graph.hpp"
#include "iasi/int_set.hpp"
#include "iasi/search.hpp"
#include "iasi/set_labeling.hpp"
#include "iasi/transforms.hpp"
#include "iasi/verify.hpp"

namespace iasi {

using Json = nlohmann::json;

void to_json(Json& j, const IntSet& s);
void from_json(const Json& j, IntSet& s);

void to_json(Json& j, const EdgeId& e);
void from_json(const Json& j, EdgeId& e);

void to_json(Json& j, const SetLabeling& f);
void from_json(const Json& j, SetLabeling& f);

void to_json(Json& j, const EdgeReport& r);
void from_json(const Json& j, EdgeReport& r);

void to_json(Json& j, const VerificationReport& r);
void from_json(const Json& j, VerificationReport& r);

void to_json(Json& j, const SearchOutcome& o);
void from_json(const Json& j, SearchOutcome& o);

void to_json(Json& j, const MinimalGroundResult& r);

Json transform_to_json(const TransformResult& r);

}  // namespace iasi
