#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperclust/hypergraph.hpp"
#include "hyperclust/line_graph.hpp"
#include "hyperclust/motif.hpp"
#include "hyperclust/partition.hpp"

namespace hyperclust {

enum class ToyScheme { always_one_part_except_k2, component_rule, noprops };

std::string toy_name(ToyScheme id);
ToyScheme parse_toy_name(std::string_view name);  // DomainError for unknown ids

struct RepresentableScheme {
  MotifSet motifs;
  OverlapThreshold k;
  std::vector<std::string> labels;  // how the motifs were named, for reports
};

struct SigmaScheme {
  Hypergraph motif;
};

struct ClassicScheme {};

struct ToySchemeSpec {
  ToyScheme id;
};

/// A clustering scheme as a value.
class SchemeSpec {
 public:
  using Variant = std::variant<RepresentableScheme, SigmaScheme, ClassicScheme, ToySchemeSpec>;

  static SchemeSpec representable(MotifSet motifs, OverlapThreshold k, std::vector<std::string> labels = {});
  /// Throws ValidationError unless the motif passes validate_sigma_motif.
  static SchemeSpec sigma(Hypergraph motif);
  static SchemeSpec classic();
  static SchemeSpec toy(ToyScheme id);

  const Variant& variant() const noexcept { return v_; }
  /// Short human-readable form, e.g. "representable({K2},k=1)".
  std::string describe() const;

 private:
  explicit SchemeSpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// The partitioned set a scheme assigns to g; the underlying set is always V(g).
/// DomainError for classic on a non-simple graph.
PartitionedSet cluster(const SchemeSpec& scheme, const Hypergraph& g);

/// Components of a simple graph with isolated vertices left partless.
PartitionedSet classic_cluster(const Hypergraph& g);

PartitionedSet toy_cluster(ToyScheme id, const Hypergraph& g);

/// Nodes are the distinct images of the motif in g; labels[i] lists the edge
/// images carried by node i (merged over all embeddings with that image). Two
/// nodes are adjacent iff they share a label.
struct SigmaGraph {
  LineGraph graph;
  std::vector<std::vector<VertexSet>> labels;
};

// Throws DomainError if the motif fails validate_sigma_motif.
SigmaGraph sigma_graph(const Hypergraph& motif, const Hypergraph& g);

/// Σ clustering without re-validating the motif.
PartitionedSet sigma_cluster(const Hypergraph& motif, const Hypergraph& g);

/// Checks: exactly three edges; F_1 has 2|V|-3 vertices; Σ clusters F_1 as one
/// all-vertex part; Σ gives corner_glue exactly two maximal parts; Φ_{D}(corner_glue)
/// is 3-ly connected.
ValidationResult validate_sigma_motif(const Hypergraph& motif);

/// Comma-separated motif descriptors, optionally in braces: "{K_2}", "E3,G4",
/// "E*", "R*". Descriptors go through build_named.
MotifSet parse_motif_list(std::string_view text, std::vector<std::string>* labels = nullptr);

/// Shorthand scheme syntax: "classic", "toy:<id>", "sigma", "sigma:<descriptor>",
/// "representable:<motifs>,k=<k>", or a JSON object.
SchemeSpec parse_scheme(std::string_view text);

}  // namespace hyperclust
