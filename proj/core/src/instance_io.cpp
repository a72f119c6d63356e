// Copyright 2026 The exclear Authors
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

#include <string>

#include "exclear/error.hpp"
#include "exclear/instance.hpp"
#include "json.hpp"

namespace exclear {
namespace {

using Json = nlohmann::ordered_json;

int read_count(const Json& doc, const char* field) {
  if (!doc.contains(field)) {
    throw Error(ErrorCode::kSyntaxError,
                std::string("missing field '") + field + "'");
  }
  const Json& value = doc.at(field);
  if (!value.is_number_integer() || value.get<long long>() < 0 ||
      value.get<long long>() > 1'000'000'000) {
    throw Error(ErrorCode::kSyntaxError,
                std::string("field '") + field +
                    "' must be a nonnegative integer");
  }
  return static_cast<int>(value.get<long long>());
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kSyntaxError, e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kSyntaxError, "instance must be a JSON object");
  }
  const int ndds = read_count(doc, "ndds");
  const int pairs = read_count(doc, "pairs");
  const int cycle_cap = read_count(doc, "cycle_cap");
  const int chain_cap = read_count(doc, "chain_cap");

  std::optional<double> failure_prob;
  if (doc.contains("failure_prob") && !doc.at("failure_prob").is_null()) {
    const Json& p = doc.at("failure_prob");
    if (!p.is_number()) {
      throw Error(ErrorCode::kSyntaxError,
                  "field 'failure_prob' must be a number or null");
    }
    failure_prob = p.get<double>();
  }

  if (!doc.contains("arcs") || !doc.at("arcs").is_array()) {
    throw Error(ErrorCode::kSyntaxError, "field 'arcs' must be an array");
  }
  std::vector<Arc> arcs;
  const Json& arc_list = doc.at("arcs");
  arcs.reserve(arc_list.size());
  for (std::size_t a = 0; a < arc_list.size(); ++a) {
    const Json& entry = arc_list[a];
    const std::string where = "arcs[" + std::to_string(a) + "]";
    if (!entry.is_array() || entry.size() != 3 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer() ||
        !entry[2].is_number()) {
      throw Error(ErrorCode::kSyntaxError,
                  where + " must be [src:int, dst:int, weight:number]");
    }
    const long long src = entry[0].get<long long>();
    const long long dst = entry[1].get<long long>();
    const long long limit = static_cast<long long>(ndds) + pairs;
    if (src < 1 || src > limit || dst < 1 || dst > limit) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  where + ": vertex ids must lie in [1, " +
                      std::to_string(limit) + "]");
    }
    arcs.push_back({static_cast<Vertex>(src), static_cast<Vertex>(dst),
                    entry[2].get<double>()});
  }

  try {
    return build_instance(ndds, pairs, std::move(arcs), cycle_cap, chain_cap,
                          failure_prob);
  } catch (const Error& e) {
    throw Error(e.code(), std::string("in instance file: ") + e.what());
  }
}

std::string serialize_instance(const Instance& instance) {
  Json doc;
  doc["ndds"] = instance.num_ndds();
  doc["pairs"] = instance.num_pairs();
  doc["cycle_cap"] = instance.cycle_cap();
  doc["chain_cap"] = instance.chain_cap();
  if (instance.failure_prob()) {
    doc["failure_prob"] = *instance.failure_prob();
  } else {
    doc["failure_prob"] = nullptr;
  }
  Json arcs = Json::array();
  for (const Arc& arc : instance.arcs()) {
    arcs.push_back(Json::array({arc.source, arc.target, arc.weight}));
  }
  doc["arcs"] = std::move(arcs);
  return doc.dump() + "\n";
}

}  // namespace exclear
