#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperclust/hypergraph.hpp"
#include "hyperclust/partition.hpp"

namespace hyperclust {

/// A positive overlap threshold or infinity.
class OverlapThreshold {
 public:
  /// Throws DomainError for k < 1.
  explicit OverlapThreshold(std::size_t k);
  static OverlapThreshold infinity() { return OverlapThreshold(); }
  /// Accepts a positive integer, "inf" or "infinity".
  static OverlapThreshold parse(const std::string& text);

  bool is_infinite() const noexcept { return !value_; }
  std::size_t value() const;  // DomainError when infinite
  bool admits(std::size_t overlap) const noexcept { return value_ && overlap >= *value_; }
  std::string to_string() const;

  friend bool operator==(const OverlapThreshold&, const OverlapThreshold&) = default;

 private:
  OverlapThreshold() = default;
  std::optional<std::size_t> value_;
};

/// Λ_k: nodes are the distinct edge sets of the origin (sorted), adjacency
/// lists are sorted node indices.
struct LineGraph {
  std::vector<VertexSet> nodes;
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t edge_count() const;
};

LineGraph k_line_graph(const Hypergraph& g, OverlapThreshold k);
LineGraph k_line_graph(const std::vector<VertexSet>& edge_sets, OverlapThreshold k);

/// The line graph as a simple graph whose vertices are set literals "{a,b}".
Hypergraph line_graph_to_hypergraph(const LineGraph& lg, const Hypergraph& origin);

/// Component index per node and number of components.
struct Components {
  std::vector<std::size_t> component_of;
  std::size_t count = 0;
};

Components line_graph_components(const LineGraph& lg);

/// Components of a simple graph; isolated vertices are singleton parts.
/// Throws DomainError for non-simple input.
PartitionedSet connected_components(const Hypergraph& g);

/// Π_k(G). Underlying set V(G); vertices in no edge belong to no part.
PartitionedSet pi_k(const Hypergraph& g, OverlapThreshold k);

/// Π_k applied to a graph given only by its vertex names and edge sets.
PartitionedSet pi_k(const std::vector<std::string>& vertices, const std::vector<VertexSet>& edge_sets,
                    OverlapThreshold k);

bool is_k_connected(const Hypergraph& g, OverlapThreshold k);
bool is_k_connected(std::size_t vertex_count, const std::vector<VertexSet>& edge_sets, OverlapThreshold k);

/// The distinct edge sets as parts.
PartitionedSet pi_infinity_parts(const Hypergraph& g);

}  // namespace hyperclust
