#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperclust/errors.hpp"
#include "hyperclust/vertex_set.hpp"

namespace hyperclust {

// Unvalidated, name-based form of a hypergraph as it arrives from JSON or a builder.
struct EdgeData {
  std::string id;
  std::vector<std::string> vertices;
};

struct HypergraphData {
  std::vector<std::string> vertices;
  std::vector<EdgeData> edges;
};

ValidationResult validate_hypergraph(const HypergraphData& data);

// True for names made of printable, non-whitespace bytes.
bool is_valid_vertex_name(std::string_view name);

struct Edge {
  std::string id;
  VertexSet vertices;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A finite hypergraph (V, E, e). Vertices are kept in lexicographic order and
/// addressed internally by their position; edges are kept sorted by id and may
/// repeat vertex sets (parallel edges). Immutable after construction.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Throws ValidationError listing every violated invariant.
  explicit Hypergraph(const HypergraphData& data);

  /// Index-based construction. `vertices` need not be sorted; edge vertex sets
  /// refer to positions in the given `vertices` list and are remapped.
  static Hypergraph from_indexed(std::vector<std::string> vertices, std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::optional<VertexIndex> find(std::string_view name) const;
  VertexIndex index_of(std::string_view name) const;  // DomainError if absent
  const std::string& name(VertexIndex v) const { return vertices_.at(v); }
  std::vector<std::string> names(const VertexSet& s) const;
  VertexSet indices(const std::vector<std::string>& names) const;
  VertexSet all_vertices() const;

  /// Distinct edge vertex sets in lexicographic order.
  const std::vector<VertexSet>& edge_sets() const noexcept { return edge_sets_; }
  bool has_edge_set(const VertexSet& s) const;
  std::size_t max_edge_size() const noexcept;

  /// Every edge has two vertices and no two edges share a vertex pair.
  bool is_simple() const noexcept;

  HypergraphData data() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  void finalize();

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<VertexSet> edge_sets_;
};

using GraphPtr = std::shared_ptr<const Hypergraph>;

inline GraphPtr share(Hypergraph g) { return std::make_shared<const Hypergraph>(std::move(g)); }

// "{a,b,c}" style literal used for line-graph vertex names and messages.
std::string set_literal(const std::vector<std::string>& names);
std::string set_literal(const Hypergraph& g, const VertexSet& s);

ValidationResult validate_graph_morphism(const Hypergraph& source, const Hypergraph& target,
                                         std::span<const VertexIndex> map);
ValidationResult validate_graph_morphism(const Hypergraph& source, const Hypergraph& target,
                                         const std::map<std::string, std::string>& map);

/// Injective vertex map under which every source edge lands on a target edge.
class GraphMorphism {
 public:
  /// Throws ValidationError if the map is not a morphism.
  GraphMorphism(GraphPtr source, GraphPtr target, std::vector<VertexIndex> map);
  GraphMorphism(GraphPtr source, GraphPtr target, const std::map<std::string, std::string>& map);

  static GraphMorphism identity(const GraphPtr& g);
  /// Skips validation; for maps produced by code that already guarantees the invariant.
  static GraphMorphism trusted(GraphPtr source, GraphPtr target, std::vector<VertexIndex> map);

  const Hypergraph& source() const noexcept { return *source_; }
  const Hypergraph& target() const noexcept { return *target_; }
  const GraphPtr& source_ptr() const noexcept { return source_; }
  const GraphPtr& target_ptr() const noexcept { return target_; }
  const std::vector<VertexIndex>& map() const noexcept { return map_; }

  VertexIndex operator()(VertexIndex v) const { return map_.at(v); }
  VertexSet apply(const VertexSet& s) const { return image(s, map_); }
  std::map<std::string, std::string> named_map() const;

 private:
  GraphMorphism() = default;
  GraphPtr source_;
  GraphPtr target_;
  std::vector<VertexIndex> map_;
};

/// g after f. Requires f.target() == g.source() as values.
GraphMorphism compose_morphisms(const GraphMorphism& f, const GraphMorphism& g);

struct Restriction {
  GraphPtr graph;
  GraphMorphism inclusion;
};

/// G|_p: vertices p, edges of G lying entirely inside p (original ids kept),
/// with the inclusion morphism into G.
Restriction restrict(const GraphPtr& g, const VertexSet& p);
Restriction restrict(const GraphPtr& g, const std::vector<std::string>& p);

/// Same graph as restrict(...).graph without building the morphism. Vertex j of
/// the result corresponds to p[j].
Hypergraph restricted_graph(const Hypergraph& g, const VertexSet& p);

}  // namespace hyperclust
