#include "hyperclust/dot.hpp"

#include <array>

namespace hyperclust {

namespace {

constexpr std::array<const char*, 10> kPalette{"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
                                               "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd"};

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string line_graph_to_dot(const LineGraph& lg, const Hypergraph& origin) {
  const auto comps = line_graph_components(lg);
  std::string out = "graph line_graph {\n  node [style=filled];\n";
  for (std::size_t i = 0; i < lg.nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=" + quoted(set_literal(origin, lg.nodes[i])) +
           ", fillcolor=" + quoted(kPalette[comps.component_of[i] % kPalette.size()]) +
           ", component=" + std::to_string(comps.component_of[i]) + "];\n";
  }
  for (std::size_t i = 0; i < lg.nodes.size(); ++i) {
    for (auto j : lg.adjacency[i]) {
      if (i < j) out += "  n" + std::to_string(i) + " -- n" + std::to_string(j) + ";\n";
    }
  }
  return out + "}\n";
}

}  // namespace hyperclust
