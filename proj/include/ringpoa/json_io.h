// Copyright 2026 The ringpoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RINGPOA_JSON_IO_H_
#define RINGPOA_JSON_IO_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringpoa/analysis.h"
#include "ringpoa/ring_model.h"

namespace ringpoa {

using Json = nlohmann::ordered_json;

// {"n", "degree" (optional, default 1), "links": [{"a", "b"}],
//  "agents": [{"s", "t"}]}. Throws std::invalid_argument on malformed input,
// including instances that fail Validate.
RingInstance InstanceFromJson(const Json& j);
RingInstance ParseInstance(const std::string& text);

// Canonical form: keys in the order above, degree always present.
Json ToJson(const RingInstance& instance);
std::string CanonicalText(const RingInstance& instance);

Json ToJson(const Routing& routing);
Routing RoutingFromJson(const Json& j);

Json ToJson(const Classification& c);
Json ToJson(const SplitProfile& p);
Json ToJson(const BoundCheck& c);
// The list of checks, one object per check.
Json ToJson(const BoundReport& report);

}  // namespace ringpoa

#endif  // RINGPOA_JSON_IO_H_
