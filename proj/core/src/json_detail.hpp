#pragma once

// Internal: nlohmann values for the core types. Not installed.

#include <string>
#include <string_view>

#include <json.hpp>

#include "hyperclust/hypergraph.hpp"
#include "hyperclust/partition.hpp"

namespace hyperclust::detail {

nlohmann::ordered_json to_json_value(const Hypergraph& g);
nlohmann::ordered_json to_json_value(const PartitionedSet& p);
Hypergraph hypergraph_from_value(const nlohmann::ordered_json& j);
nlohmann::ordered_json parse(std::string_view text);
std::string dump(const nlohmann::ordered_json& j, int indent);

}  // namespace hyperclust::detail
