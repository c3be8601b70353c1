#pragma once

#include <map>
#include <string>
#include <string_view>

#include "hyperclust/hypergraph.hpp"
#include "hyperclust/line_graph.hpp"
#include "hyperclust/motif.hpp"
#include "hyperclust/partition.hpp"

namespace hyperclust {

class SchemeSpec;

// All writers emit sorted collections so equal values serialize identically.
// indent < 0 gives a single line. Readers throw ParseError for malformed
// documents and ValidationError when the decoded value breaks an invariant.

std::string hypergraph_to_json(const Hypergraph& g, int indent = -1);
Hypergraph hypergraph_from_json(std::string_view text);

std::string partition_to_json(const PartitionedSet& p, int indent = -1);
PartitionedSet partition_from_json(std::string_view text);

std::string morphism_to_json(const GraphMorphism& f, int indent = -1);
std::map<std::string, std::string> morphism_map_from_json(std::string_view text);

/// Hypergraph JSON with a "provenance" object per edge: {"motif": i, "map": {...}}.
std::string phi_to_json(const PhiResult& result, int indent = -1);

/// The line graph as hypergraph JSON with set-literal vertex names.
std::string line_graph_to_json(const LineGraph& lg, const Hypergraph& origin, int indent = -1);

std::string scheme_to_json(const SchemeSpec& scheme, int indent = -1);
SchemeSpec scheme_from_json(std::string_view text);

}  // namespace hyperclust
