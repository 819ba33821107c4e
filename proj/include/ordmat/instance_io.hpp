// Copyright 2026 The Authors.
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

#ifndef ORDMAT_INSTANCE_IO_HPP
#define ORDMAT_INSTANCE_IO_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordmat/errors.hpp"
#include "ordmat/instance.hpp"
#include "ordmat/matroid.hpp"

namespace ordmat {

namespace detail {

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <typename... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

inline nlohmann::json matroid_to_json(const MatroidDesc& m) {
  return m.visit(Overloaded{
      [](const GraphicMatroid& g) {
        nlohmann::json edges = nlohmann::json::array();
        for (auto [a, b] : g.edges) edges.push_back({a, b});
        return nlohmann::json{{"kind", "graphic"}, {"nodes", g.node_count}, {"edges", edges}};
      },
      [](const PartitionMatroid& p) {
        return nlohmann::json{{"kind", "partition"}, {"blocks", p.blocks}, {"capacities", p.capacities}};
      },
      [](const UniformMatroid& u) { return nlohmann::json{{"kind", "uniform"}, {"k", u.k}}; },
      [](const NestedCapMatroid& c) {
        return nlohmann::json{{"kind", "nested"}, {"level", c.level}, {"caps", c.caps}};
      },
  });
}

inline MatroidDesc matroid_from_json(const nlohmann::json& j, std::size_t weight_count) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "graphic") {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("instance: edge must be a [u, v] pair");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return MatroidDesc::graphic(j.at("nodes").get<int>(), std::move(edges));
  }
  if (kind == "partition") {
    return MatroidDesc::partition(j.at("blocks").get<std::vector<std::vector<Element>>>(),
                                  j.at("capacities").get<std::vector<int>>());
  }
  if (kind == "uniform") {
    return MatroidDesc::uniform(static_cast<int>(weight_count), j.at("k").get<int>());
  }
  if (kind == "nested") {
    return MatroidDesc::nested(j.at("level").get<std::vector<int>>(),
                               j.at("caps").get<std::vector<int>>());
  }
  throw InputError("instance: unknown matroid kind '" + kind + "'");
}

}  // namespace detail

inline nlohmann::json to_json(const Instance& inst) {
  return nlohmann::json{{"matroid", detail::matroid_to_json(inst.matroid)},
                        {"weights", inst.weights},
                        {"ordinal", inst.ordinal},
                        {"num_categories", inst.num_categories}};
}

inline Instance instance_from_json(const nlohmann::json& j) {
  try {
    const auto& jw = j.at("weights");
    if (!jw.is_array()) throw InputError("instance: weights must be an array");
    std::vector<std::int64_t> weights;
    for (const auto& w : jw) {
      if (!w.is_number_integer()) throw InputError("instance: weights must be integers");
      weights.push_back(w.get<std::int64_t>());
    }
    MatroidDesc m = detail::matroid_from_json(j.at("matroid"), weights.size());
    return make_instance(std::move(m), std::move(weights),
                         j.at("ordinal").get<std::vector<std::vector<int>>>(),
                         j.at("num_categories").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("instance: malformed JSON: ") + e.what());
  }
}

inline std::string dump_instance(const Instance& inst) { return to_json(inst).dump() + "\n"; }

inline Instance parse_instance(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("instance: invalid JSON: ") + e.what());
  }
  return instance_from_json(j);
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

}  // namespace ordmat

#endif  // ORDMAT_INSTANCE_IO_HPP
