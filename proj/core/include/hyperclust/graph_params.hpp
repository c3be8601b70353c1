#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hyperclust/hypergraph.hpp"

namespace hyperclust {

/// Sorted neighbour lists of a simple graph. Throws DomainError for non-simple input.
std::vector<std::vector<VertexIndex>> adjacency_lists(const Hypergraph& g);

struct Degeneracy {
  std::size_t value = 0;
  /// Elimination order: each vertex has at most `value` neighbours later in the order.
  std::vector<VertexIndex> order;
};

/// Smallest-last (minimum degree removal) ordering via bucket queues.
Degeneracy degeneracy(const Hypergraph& g);

inline constexpr std::size_t kIndependenceBound = 20;

/// Exact maximum independent set size by branch and bound. RefusalError above `bound` vertices.
std::size_t independence_number(const Hypergraph& g, std::size_t bound = kIndependenceBound);

/// BFS distance in a simple graph; nullopt when v is unreachable from u.
std::optional<std::size_t> graph_distance(const Hypergraph& g, VertexIndex u, VertexIndex v);

inline constexpr std::size_t kIsoBound = 8;

/// Bijection witness (index in g -> index in h) when the edge vertex-set
/// multisets agree under it. RefusalError when either graph exceeds `bound` vertices.
std::optional<std::vector<VertexIndex>> iso_check(const Hypergraph& g, const Hypergraph& h,
                                                  std::size_t bound = kIsoBound);

/// Isomorphism-invariant key for small graphs (up to 64 vertices): the
/// lexicographically least sorted edge-mask list over all labelings that respect
/// a colour refinement of the vertices.
struct CanonicalForm {
  std::uint32_t vertex_count = 0;
  std::vector<std::uint64_t> edge_masks;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// position[v] = canonical position of vertex v.
  std::vector<VertexIndex> position;
};

inline constexpr std::uint64_t kCanonicalPermutationCap = 2'000'000;

/// Edge multiplicities are kept. RefusalError if the refined search space exceeds `cap`.
CanonicalLabeling canonical_labeling(const Hypergraph& g, std::uint64_t cap = kCanonicalPermutationCap);
CanonicalLabeling canonical_labeling(std::uint32_t vertex_count, const std::vector<std::uint64_t>& edge_masks,
                                     std::uint64_t cap = kCanonicalPermutationCap);

/// Graph on vertices "1".."n" (canonical order) with edges "e1".."em" in mask order.
Hypergraph graph_from_canonical(const CanonicalForm& form);

}  // namespace hyperclust
