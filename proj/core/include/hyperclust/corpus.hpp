#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperclust/hypergraph.hpp"

namespace hyperclust {

struct CorpusBounds {
  std::size_t max_vertices = 5;       // hypergraph members
  std::size_t max_edges = 4;          // distinct edge sets per member
  std::size_t max_edge_size = 4;
  std::size_t morphism_vertices = 4;  // exhaustive embeddings between members this small
  std::size_t simple_max_n = 6;       // separate list of simple graphs
  std::uint64_t guard = 5'000'000;    // refuse when more labelled candidates would be examined

  std::string key() const;
  friend bool operator==(const CorpusBounds&, const CorpusBounds&) = default;
};

enum class MorphismKind { identity, inclusion, embedding };

std::string to_string(MorphismKind kind);

struct CorpusMorphism {
  GraphMorphism morphism;
  MorphismKind kind;
  std::optional<std::size_t> source_index;  // member index, when the source is a member
  std::optional<std::size_t> target_index;
};

/// Members are graphs on vertices "1".."n" in canonical labelling, one per
/// isomorphism class, ordered by vertex count, edge count, then canonical form.
/// Parallel edges are not generated.
struct Corpus {
  CorpusBounds bounds;
  std::vector<GraphPtr> graphs;
  std::vector<GraphPtr> simple_graphs;
  std::vector<CorpusMorphism> morphisms;
};

/// Number of labelled candidates generate_corpus would canonicalize.
std::uint64_t estimate_corpus_candidates(const CorpusBounds& bounds);

/// Iso classes of hypergraphs on exactly n vertices with at most max_edges
/// distinct edges of size at most max_edge_size.
std::vector<Hypergraph> hypergraphs_up_to_iso(std::size_t n, std::size_t max_edges, std::size_t max_edge_size);

/// Iso classes of simple graphs on exactly n vertices (n <= 10).
std::vector<Hypergraph> simple_graphs_up_to_iso(std::size_t n);

/// Throws RefusalError (carrying the estimate) when the bounds exceed the guard.
Corpus generate_corpus(const CorpusBounds& bounds = {});

/// Rebuilds the morphism list of a corpus whose member lists are filled in.
void build_morphisms(Corpus& corpus);

/// Adds graphs beyond the size bounds. Each extra becomes a member (unless an
/// isomorphic one exists) together with the inclusions of all its restrictions
/// when it has at most `restriction_vertices` vertices, and all embeddings
/// among the extras.
void augment_corpus(Corpus& corpus, const std::vector<Hypergraph>& extras, std::size_t restriction_vertices = 9);

/// Member lists as JSON lines, one graph per line, simple graphs after a
/// "# simple" marker line.
std::string corpus_to_jsonl(const Corpus& corpus);
/// Inverse of corpus_to_jsonl; morphisms are rebuilt from the bounds.
Corpus corpus_from_jsonl(std::string_view text, const CorpusBounds& bounds);

}  // namespace hyperclust
