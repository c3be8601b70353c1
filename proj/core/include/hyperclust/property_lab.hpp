#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperclust/corpus.hpp"
#include "hyperclust/scheme.hpp"

namespace hyperclust {

struct Counterexample {
  std::vector<GraphPtr> graphs;                   // the graph, or source and target
  std::optional<std::vector<VertexIndex>> map;    // source -> target, for morphism failures
  std::optional<VertexSet> part;                  // a part of the first graph's clustering
  std::string note;
};

/// Outcome of one property check. A pass is evidence only within `bounds`.
struct CheckReport {
  std::string property;
  std::vector<std::string> schemes;
  bool pass = true;
  std::uint64_t failures = 0;  // may exceed counterexamples.size()
  std::vector<Counterexample> counterexamples;
  std::vector<std::pair<std::string, std::uint64_t>> statistics;
  std::vector<std::pair<std::string, std::string>> details;
  CorpusBounds bounds;

  std::optional<std::string> detail(const std::string& key) const;
  std::optional<std::uint64_t> statistic(const std::string& key) const;
};

std::string report_to_json(const CheckReport& report, int indent = 2);

struct CheckOptions {
  unsigned jobs = 1;
  std::size_t max_counterexamples = 50;
  /// Iterate the simple-graph list instead of the hypergraph members
  /// (morphism-based checks are unaffected).
  bool simple_graphs = false;
};

CheckReport check_excisive(const SchemeSpec& s, const Corpus& c, const CheckOptions& options = {});
CheckReport check_functorial(const SchemeSpec& s, const Corpus& c, const CheckOptions& options = {});
CheckReport check_refines(const SchemeSpec& finer, const SchemeSpec& coarser, const Corpus& c,
                          const CheckOptions& options = {});
CheckReport check_scheme_equal(const SchemeSpec& a, const SchemeSpec& b, const Corpus& c,
                               const CheckOptions& options = {});

/// Spanned Φ_R(G) iff adding G to R leaves Φ unchanged on every member and on G.
CheckReport hull_check(const MotifSet& r, const Hypergraph& g, const Corpus& c, const CheckOptions& options = {});

/// Forward: equal schemes imply Φ_R(G) k-ly connected. Reverse (asserted only
/// for k = 1): k-ly connected implies equal schemes. Evaluated on the members,
/// G itself and `extra_graphs`. For k > 1 the reverse outcome is reported in
/// the details ("reverse_holds") with any witness as a counterexample, but
/// does not affect the verdict.
CheckReport connected_hull_check(const MotifSet& r, const Hypergraph& g, OverlapThreshold k, const Corpus& c,
                                 const std::vector<Hypergraph>& extra_graphs = {}, const CheckOptions& options = {});

/// Re-runs one counterexample of a report; true when the failure reproduces.
/// `schemes` are the schemes the report was produced with, in order.
bool replay(const CheckReport& report, const std::vector<SchemeSpec>& schemes, const Counterexample& example);

struct FiniteRepWitness {
  std::size_t r = 0;
  Hypergraph witness;                 // R_{r+1}
  bool family_connected = false;      // Φ_family(witness) is 1-ly connected
  bool self_connected = false;        // Φ_{witness}(witness) is 1-ly connected
  bool verdict() const noexcept { return !family_connected && self_connected; }
};

/// r = max over graphs, max over vertices, of the distance to the nearest
/// vertex on a triangle. DomainError for a non-simple member, a member without
/// a triangle, or a vertex that cannot reach one.
FiniteRepWitness finite_rep_witness(const std::vector<Hypergraph>& family);

struct SearchBounds {
  std::size_t max_vertices = 4;
  std::size_t max_edges = 16;
  std::size_t max_edge_size = 4;
  std::uint64_t random_trials = 20000;
};

struct SearchOutcome {
  std::optional<Hypergraph> witness;
  bool exhaustive = false;   // every graph within the bounds was examined
  std::uint64_t examined = 0;
  std::vector<std::string> transcript;

  bool found() const noexcept { return witness.has_value(); }
  std::string status() const { return found() ? "found" : "exhausted"; }
};

/// Looks for a graph in which two different components of its 2-line graph
/// each cover every vertex. Exhaustive for at most 4 vertices; above that a
/// structured family (two interleaved chains of 3-sets) and a seeded random
/// search are tried. Any witness is re-validated before it is returned.
SearchOutcome search_equal_parts_example(const SearchBounds& bounds, std::uint64_t seed);

/// The self-validation used by the search: true when at least two distinct
/// components of Λ_2(g) have union V(g). Appends a readable account to transcript.
bool validate_equal_parts_witness(const Hypergraph& g, std::vector<std::string>* transcript = nullptr);

}  // namespace hyperclust
