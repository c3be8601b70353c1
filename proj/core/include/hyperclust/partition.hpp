#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperclust/errors.hpp"
#include "hyperclust/vertex_set.hpp"

namespace hyperclust {

/// A set with a family of parts. Parts index into `underlying` (kept sorted),
/// are stored as sets, deduplicated, and kept in lexicographic order. They may
/// overlap, nest, miss elements or be empty.
class PartitionedSet {
 public:
  PartitionedSet() = default;

  /// Throws DomainError if a part index is out of range.
  PartitionedSet(std::vector<std::string> sorted_underlying, std::vector<VertexSet> parts);

  /// Name-based construction; underlying may be unsorted. Throws DomainError
  /// for unknown part members or duplicate underlying elements.
  static PartitionedSet from_names(std::vector<std::string> underlying,
                                   const std::vector<std::vector<std::string>>& parts);

  const std::vector<std::string>& underlying() const& noexcept { return underlying_; }
  std::vector<std::string> underlying() && { return std::move(underlying_); }
  // Rvalue overloads keep `for (auto& p : cluster(s, g).parts())` safe.
  const std::vector<VertexSet>& parts() const& noexcept { return parts_; }
  std::vector<VertexSet> parts() && { return std::move(parts_); }
  std::vector<std::vector<std::string>> named_parts() const;

  bool has_part(const VertexSet& p) const;
  std::optional<VertexIndex> find(const std::string& element) const;

  friend bool operator==(const PartitionedSet&, const PartitionedSet&) = default;

 private:
  std::vector<std::string> underlying_;
  std::vector<VertexSet> parts_;
};

/// Every source part must land inside some target part. `map[i]` is the image
/// of source element i as an index into the target's underlying set.
ValidationResult validate_partition_morphism(const PartitionedSet& source, const PartitionedSet& target,
                                             std::span<const VertexIndex> map);

/// Name-based form. Throws DomainError if the map is not total on the source
/// or sends an element outside the target.
ValidationResult validate_partition_morphism(const PartitionedSet& source, const PartitionedSet& target,
                                             const std::map<std::string, std::string>& map);

/// Drops every part strictly contained in another part.
PartitionedSet remove_spurious(const PartitionedSet& p);

struct RefinementResult {
  bool refines = false;
  std::optional<VertexSet> violating_part;
  std::string reason;

  explicit operator bool() const noexcept { return refines; }
};

/// P1 refines P2 when every part of P1 lies in some part of P2 and every part
/// of P2 is literally a part of P1. Throws DomainError if the underlying sets differ.
RefinementResult is_refinement(const PartitionedSet& p1, const PartitionedSet& p2);

bool is_non_overlapping(const PartitionedSet& p);

/// A partitioned set whose elements are themselves finite sets of names.
struct SetFamilyPartition {
  std::vector<std::vector<std::string>> elements;
  std::vector<std::vector<std::size_t>> parts;  // indices into elements
};

/// Replaces every element and every part by the union of its members.
/// Throws DomainError if an element is not a set of valid names or a part
/// refers to a missing element.
PartitionedSet part_union(const SetFamilyPartition& family);

}  // namespace hyperclust
