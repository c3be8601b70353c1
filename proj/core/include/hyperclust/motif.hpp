#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperclust/hypergraph.hpp"

namespace hyperclust {

/// A finite representing set, optionally extended by the two infinite families
/// the library knows how to truncate exactly against a given target:
/// E* (E_n up to the target's largest edge) and R* (R_i up to |V| - 3).
struct MotifSet {
  std::vector<Hypergraph> motifs;
  bool complete_edge_family = false;
  bool tailed_triangle_family = false;

  /// The motifs that can embed into `target`. Throws DomainError for a motif
  /// without vertices (its single image would be an empty edge).
  std::vector<Hypergraph> materialize(const Hypergraph& target) const;
};

struct EnumerationOptions {
  /// Stop with BudgetExceeded once more than this many embeddings were found.
  std::optional<std::uint64_t> budget;
};

/// Return false to stop the enumeration early.
using EmbeddingVisitor = std::function<bool(std::span<const VertexIndex>)>;

/// Calls `visit` once per morphism r -> g (as an index map), in no particular
/// order. Returns the number of embeddings visited.
std::uint64_t for_each_embedding(const Hypergraph& r, const Hypergraph& g, const EmbeddingVisitor& visit,
                                 const EnumerationOptions& options = {});

std::uint64_t count_embeddings(const Hypergraph& r, const Hypergraph& g, const EnumerationOptions& options = {});

/// All morphisms r -> g as index maps, sorted lexicographically.
std::vector<std::vector<VertexIndex>> embedding_maps(const Hypergraph& r, const Hypergraph& g,
                                                     const EnumerationOptions& options = {});

std::vector<GraphMorphism> enumerate_embeddings(const GraphPtr& r, const GraphPtr& g,
                                                const EnumerationOptions& options = {});

struct PhiProvenance {
  std::size_t motif = 0;  // index into the materialized motif list
  std::vector<VertexIndex> map;
};

struct PhiResult {
  Hypergraph graph;
  std::vector<Hypergraph> motifs;          // materialized motifs
  std::vector<PhiProvenance> provenance;   // aligned with graph.edges()
};

/// Φ_R(G): same vertices as g, one edge per embedding, edge set = image.
/// Edge ids are "m<motif>[<target indices in motif vertex order>]".
PhiResult phi(const MotifSet& motifs, const Hypergraph& g, const EnumerationOptions& options = {});

/// Distinct edge sets of Φ_R(G), sorted.
std::vector<VertexSet> phi_edge_sets(const MotifSet& motifs, const Hypergraph& g,
                                     const EnumerationOptions& options = {});

/// Some edge contains every vertex.
bool is_spanned(const Hypergraph& g);
bool is_spanned(std::size_t vertex_count, const std::vector<VertexSet>& edge_sets);

inline constexpr std::size_t kOrientationEdgeBound = 20;

/// Number of acyclic orientations keyed by their number of sinks. Simple graphs only.
std::map<std::size_t, std::uint64_t> acyclic_orientation_profile(const Hypergraph& h);

/// sum_t Acyc_t(H) d^(|V(H)|-t) n^t
double embedding_count_bound(const Hypergraph& h, std::size_t degeneracy, std::size_t n);

}  // namespace hyperclust
