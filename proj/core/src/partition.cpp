#include "hyperclust/partition.hpp"

#include <algorithm>
#include <set>

#include "hyperclust/hypergraph.hpp"

namespace hyperclust {

namespace {

std::string part_literal(const PartitionedSet& p, const VertexSet& part) {
  std::vector<std::string> names;
  for (auto v : part) names.push_back(p.underlying()[v]);
  return set_literal(names);
}

}  // namespace

PartitionedSet::PartitionedSet(std::vector<std::string> sorted_underlying, std::vector<VertexSet> parts)
    : underlying_(std::move(sorted_underlying)), parts_(std::move(parts)) {
  for (auto& part : parts_) {
    normalize(part);
    if (!part.empty() && part.back() >= underlying_.size()) throw DomainError("part member out of range");
  }
  std::sort(parts_.begin(), parts_.end());
  parts_.erase(std::unique(parts_.begin(), parts_.end()), parts_.end());
}

PartitionedSet PartitionedSet::from_names(std::vector<std::string> underlying,
                                          const std::vector<std::vector<std::string>>& parts) {
  std::sort(underlying.begin(), underlying.end());
  if (std::adjacent_find(underlying.begin(), underlying.end()) != underlying.end()) {
    throw DomainError("underlying set lists an element twice");
  }
  std::vector<VertexSet> indexed;
  for (const auto& part : parts) {
    VertexSet s;
    for (const auto& name : part) {
      auto it = std::lower_bound(underlying.begin(), underlying.end(), name);
      if (it == underlying.end() || *it != name) throw DomainError("part member " + name + " is not in the underlying set");
      s.push_back(static_cast<VertexIndex>(it - underlying.begin()));
    }
    indexed.push_back(std::move(s));
  }
  return PartitionedSet(std::move(underlying), std::move(indexed));
}

std::vector<std::vector<std::string>> PartitionedSet::named_parts() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& part : parts_) {
    std::vector<std::string> names;
    for (auto v : part) names.push_back(underlying_[v]);
    out.push_back(std::move(names));
  }
  return out;
}

bool PartitionedSet::has_part(const VertexSet& p) const { return std::binary_search(parts_.begin(), parts_.end(), p); }

std::optional<VertexIndex> PartitionedSet::find(const std::string& element) const {
  auto it = std::lower_bound(underlying_.begin(), underlying_.end(), element);
  if (it == underlying_.end() || *it != element) return std::nullopt;
  return static_cast<VertexIndex>(it - underlying_.begin());
}

ValidationResult validate_partition_morphism(const PartitionedSet& source, const PartitionedSet& target,
                                             std::span<const VertexIndex> map) {
  if (map.size() != source.underlying().size()) throw DomainError("partition map is not total on the source");
  for (auto v : map) {
    if (v >= target.underlying().size()) throw DomainError("partition map leaves the target set");
  }
  ValidationResult result;
  for (const auto& part : source.parts()) {
    auto img = image(part, map);
    bool covered = std::any_of(target.parts().begin(), target.parts().end(),
                               [&](const VertexSet& q) { return is_subset(img, q); });
    if (!covered) result.fail("part " + part_literal(source, part) + " is not contained in any target part");
  }
  return result;
}

ValidationResult validate_partition_morphism(const PartitionedSet& source, const PartitionedSet& target,
                                             const std::map<std::string, std::string>& map) {
  std::vector<VertexIndex> indexed;
  indexed.reserve(source.underlying().size());
  for (const auto& x : source.underlying()) {
    auto it = map.find(x);
    if (it == map.end()) throw DomainError("partition map is not total: " + x + " has no image");
    auto y = target.find(it->second);
    if (!y) throw DomainError("partition map sends " + x + " to " + it->second + ", which is not in the target");
    indexed.push_back(*y);
  }
  for (const auto& [x, _] : map) {
    if (!source.find(x)) throw DomainError("partition map mentions unknown element " + x);
  }
  return validate_partition_morphism(source, target, indexed);
}

PartitionedSet remove_spurious(const PartitionedSet& p) {
  std::vector<VertexSet> kept;
  for (const auto& part : p.parts()) {
    bool spurious = std::any_of(p.parts().begin(), p.parts().end(),
                                [&](const VertexSet& other) { return is_strict_subset(part, other); });
    if (!spurious) kept.push_back(part);
  }
  return PartitionedSet(p.underlying(), std::move(kept));
}

RefinementResult is_refinement(const PartitionedSet& p1, const PartitionedSet& p2) {
  if (p1.underlying() != p2.underlying()) throw DomainError("refinement needs equal underlying sets");
  for (const auto& part : p1.parts()) {
    bool inside = std::any_of(p2.parts().begin(), p2.parts().end(),
                              [&](const VertexSet& q) { return is_subset(part, q); });
    if (!inside) return {false, part, "part " + part_literal(p1, part) + " lies in no part of the coarser set"};
  }
  for (const auto& part : p2.parts()) {
    if (!p1.has_part(part)) return {false, part, "part " + part_literal(p2, part) + " is missing from the finer set"};
  }
  return {true, std::nullopt, {}};
}

bool is_non_overlapping(const PartitionedSet& p) {
  std::vector<char> seen(p.underlying().size(), 0);
  for (const auto& part : p.parts()) {
    for (auto v : part) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

PartitionedSet part_union(const SetFamilyPartition& family) {
  std::set<std::string> all;
  for (const auto& element : family.elements) {
    std::set<std::string> members;
    for (const auto& name : element) {
      if (!is_valid_vertex_name(name)) throw DomainError("element member \"" + name + "\" is not a vertex id");
      if (!members.insert(name).second) throw DomainError("element lists " + name + " twice");
    }
    all.insert(element.begin(), element.end());
  }
  std::vector<std::string> underlying(all.begin(), all.end());
  std::vector<std::vector<std::string>> parts;
  for (const auto& part : family.parts) {
    std::set<std::string> merged;
    for (auto i : part) {
      if (i >= family.elements.size()) throw DomainError("part refers to element " + std::to_string(i) + " which does not exist");
      merged.insert(family.elements[i].begin(), family.elements[i].end());
    }
    parts.emplace_back(merged.begin(), merged.end());
  }
  return PartitionedSet::from_names(std::move(underlying), parts);
}

}  // namespace hyperclust
