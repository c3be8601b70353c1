#pragma once

#include <string>

#include "hyperclust/hypergraph.hpp"
#include "hyperclust/line_graph.hpp"

namespace hyperclust {

// Graphviz text for a line graph; nodes are labelled with set literals and
// filled with one colour per component.
std::string line_graph_to_dot(const LineGraph& lg, const Hypergraph& origin);

}  // namespace hyperclust
