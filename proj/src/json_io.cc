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

#include "ringpoa/json_io.h"

#include <stdexcept>

namespace ringpoa {
namespace {

std::int64_t IntField(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  }
  const Json& v = obj.at(key);
  if (!v.is_number_integer()) {
    throw std::invalid_argument(std::string("field \"") + key +
                                "\" must be an integer");
  }
  return v.get<std::int64_t>();
}

const Json& ArrayField(const Json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_array()) {
    throw std::invalid_argument(std::string("field \"") + key +
                                "\" must be an array");
  }
  return obj.at(key);
}

int SmallInt(std::int64_t v, const char* what) {
  if (v < INT32_MIN || v > INT32_MAX) {
    throw std::invalid_argument(std::string(what) + " out of range");
  }
  return static_cast<int>(v);
}

Json RationalOrNull(const std::optional<Rational>& r) {
  return r ? Json(ToString(*r)) : Json(nullptr);
}

}  // namespace

RingInstance InstanceFromJson(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("instance must be an object");
  RingInstance inst;
  inst.n = SmallInt(IntField(j, "n"), "n");
  if (j.contains("degree")) inst.degree = SmallInt(IntField(j, "degree"), "degree");
  for (const Json& link : ArrayField(j, "links")) {
    inst.links.push_back({IntField(link, "a"), IntField(link, "b")});
  }
  for (const Json& agent : ArrayField(j, "agents")) {
    inst.agents.push_back({SmallInt(IntField(agent, "s"), "s"),
                           SmallInt(IntField(agent, "t"), "t")});
  }
  const std::vector<std::string> errors = Validate(inst);
  if (!errors.empty()) throw std::invalid_argument(errors.front());
  return inst;
}

RingInstance ParseInstance(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return InstanceFromJson(j);
}

Json ToJson(const RingInstance& instance) {
  Json j;
  j["n"] = instance.n;
  j["degree"] = instance.degree;
  j["links"] = Json::array();
  for (const Link& l : instance.links) j["links"].push_back({{"a", l.a}, {"b", l.b}});
  j["agents"] = Json::array();
  for (const Agent& a : instance.agents) {
    j["agents"].push_back({{"s", a.s}, {"t", a.t}});
  }
  return j;
}

std::string CanonicalText(const RingInstance& instance) {
  return ToJson(instance).dump() + "\n";
}

Json ToJson(const Routing& routing) {
  Json j = Json::array();
  for (Orientation o : routing.choices()) j.push_back(std::string(ToString(o)));
  return j;
}

Routing RoutingFromJson(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("routing must be an array");
  std::vector<Orientation> choices;
  for (const Json& v : j) {
    if (!v.is_string()) throw std::invalid_argument("routing entries are strings");
    const auto o = ParseOrientation(v.get<std::string>());
    if (!o) throw std::invalid_argument("routing entries are \"cw\" or \"ccw\"");
    choices.push_back(*o);
  }
  return Routing(std::move(choices));
}

Json ToJson(const Classification& c) {
  Json j;
  j["h"] = c.h;
  j["switching"] = c.switching;
  j["covering"] = c.covering;
  j["singular"] = c.singular;
  return j;
}

Json ToJson(const SplitProfile& p) {
  Json j;
  j["h"] = p.h;
  j["A"] = p.A;
  j["B"] = p.B;
  j["C"] = Json::array();
  j["D"] = Json::array();
  for (const Rational& c : p.C) j["C"].push_back(ToString(c));
  for (const Rational& d : p.D) j["D"].push_back(ToString(d));
  j["sum_c_zero"] = p.sum_c_zero;
  j["beta"] = p.sum_c_zero ? Json(nullptr) : Json(ToString(p.beta));
  j["z"] = p.sum_c_zero ? Json(nullptr) : Json(ToString(p.z));
  return j;
}

Json ToJson(const BoundCheck& c) {
  Json j;
  j["check"] = c.name;
  j["applicable"] = c.applicable;
  j["lhs"] = RationalOrNull(c.lhs);
  j["rhs"] = RationalOrNull(c.rhs);
  j["pass"] = c.pass;
  j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
  return j;
}

Json ToJson(const BoundReport& report) {
  Json j = Json::array();
  for (const BoundCheck& c : report.checks) j.push_back(ToJson(c));
  return j;
}

}  // namespace ringpoa
