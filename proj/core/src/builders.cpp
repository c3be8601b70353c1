#include "hyperclust/builders.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace hyperclust {

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i + 1);
  return names;
}

Hypergraph from_pairs(std::vector<std::string> vertices, const std::vector<std::pair<VertexIndex, VertexIndex>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    edges.push_back({"e" + std::to_string(i + 1), {pairs[i].first, pairs[i].second}});
  }
  return Hypergraph::from_indexed(std::move(vertices), std::move(edges));
}

Hypergraph from_names(std::vector<std::string> vertices,
                      const std::vector<std::pair<std::string, std::vector<std::string>>>& edges) {
  HypergraphData d;
  d.vertices = std::move(vertices);
  for (const auto& [id, members] : edges) d.edges.push_back({id, members});
  return Hypergraph(d);
}

void require_at_least(std::size_t n, std::size_t min, const char* what) {
  if (n < min) throw DomainError(std::string(what) + " needs parameter >= " + std::to_string(min));
}

}  // namespace

Hypergraph complete_edge(std::size_t n) {
  require_at_least(n, 1, "E_n");
  Edge e{"e1", {}};
  for (VertexIndex i = 0; i < n; ++i) e.vertices.push_back(i);
  return Hypergraph::from_indexed(numbered(n), {e});
}

Hypergraph complete_graph(std::size_t n) {
  require_at_least(n, 1, "K_n");
  std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
  for (VertexIndex i = 0; i < n; ++i) {
    for (VertexIndex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return from_pairs(numbered(n), pairs);
}

Hypergraph cycle_graph(std::size_t n) {
  require_at_least(n, 3, "C_n");
  std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
  for (VertexIndex i = 0; i < n; ++i) pairs.emplace_back(i, static_cast<VertexIndex>((i + 1) % n));
  return from_pairs(numbered(n), pairs);
}

Hypergraph path_graph(std::size_t n) {
  require_at_least(n, 1, "P_n");
  std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
  for (VertexIndex i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return from_pairs(numbered(n), pairs);
}

Hypergraph tailed_triangle(std::size_t tail) {
  std::vector<std::string> names{"a", "b", "c"};
  for (std::size_t i = 1; i <= tail; ++i) names.push_back("t" + std::to_string(i));
  std::vector<std::pair<VertexIndex, VertexIndex>> pairs{{0, 1}, {1, 2}, {0, 2}};
  for (VertexIndex i = 0; i < tail; ++i) pairs.emplace_back(i == 0 ? 2 : 2 + i, 3 + i);
  return from_pairs(std::move(names), pairs);
}

Hypergraph default_sigma_motif() {
  return from_names(numbered(6), {{"e1", {"1", "2", "3"}}, {"e2", {"1", "4", "5"}}, {"e3", {"2", "4", "6"}}});
}

Hypergraph glued_chain(const Hypergraph& d, std::size_t i) {
  if (d.edge_count() < 2) throw DomainError("F_i needs a motif with at least two edges");
  const auto& first = d.edges().front();
  const auto& last = d.edges().back();
  if (first.vertices.size() != last.vertices.size()) {
    throw DomainError("F_i: first and last edge of the motif differ in size");
  }
  std::vector<std::string> names;
  std::vector<Edge> edges;
  std::vector<VertexIndex> previous;  // global index of each motif vertex in the previous copy
  for (std::size_t copy = 0; copy <= i; ++copy) {
    std::vector<VertexIndex> current(d.vertex_count(), static_cast<VertexIndex>(-1));
    if (copy > 0) {
      for (std::size_t k = 0; k < first.vertices.size(); ++k) current[first.vertices[k]] = previous[last.vertices[k]];
    }
    for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
      if (current[v] != static_cast<VertexIndex>(-1)) continue;
      current[v] = static_cast<VertexIndex>(names.size());
      names.push_back(std::to_string(names.size() + 1));
    }
    for (std::size_t k = 0; k < d.edge_count(); ++k) {
      if (copy > 0 && k == 0) continue;
      const auto& e = d.edges()[k];
      Edge glued{"c" + std::to_string(copy) + "." + e.id, {}};
      for (auto v : e.vertices) glued.vertices.push_back(current[v]);
      edges.push_back(std::move(glued));
    }
    previous = std::move(current);
  }
  return Hypergraph::from_indexed(std::move(names), std::move(edges));
}

VertexSet private_vertices(const Hypergraph& d) {
  std::vector<std::size_t> degree(d.vertex_count(), 0);
  for (const auto& e : d.edges()) {
    for (auto v : e.vertices) ++degree[v];
  }
  VertexSet out;
  for (VertexIndex v = 0; v < degree.size(); ++v) {
    if (degree[v] == 1) out.push_back(v);
  }
  return out;
}

Hypergraph corner_glue(const Hypergraph& d) {
  auto corners = private_vertices(d);
  if (corners.empty()) throw DomainError("corner_glue: motif has no vertex lying in exactly one edge");
  std::vector<std::string> names;
  std::vector<Edge> edges;
  std::vector<VertexIndex> first_copy;
  for (int copy = 0; copy < 2; ++copy) {
    std::vector<VertexIndex> current(d.vertex_count());
    for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
      if (copy == 1 && contains(corners, v)) {
        current[v] = first_copy[v];
      } else {
        current[v] = static_cast<VertexIndex>(names.size());
        names.push_back(std::to_string(names.size() + 1));
      }
    }
    for (const auto& e : d.edges()) {
      Edge glued{"c" + std::to_string(copy) + "." + e.id, {}};
      for (auto v : e.vertices) glued.vertices.push_back(current[v]);
      edges.push_back(std::move(glued));
    }
    first_copy = std::move(current);
  }
  return Hypergraph::from_indexed(std::move(names), std::move(edges));
}

Hypergraph disjoint_union(const Hypergraph& left, const Hypergraph& right) {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (const auto& v : left.vertices()) names.push_back("a." + v);
  for (const auto& v : right.vertices()) names.push_back("b." + v);
  const auto shift = static_cast<VertexIndex>(left.vertex_count());
  for (const auto& e : left.edges()) edges.push_back({"a." + e.id, e.vertices});
  for (const auto& e : right.edges()) {
    Edge moved{"b." + e.id, {}};
    for (auto v : e.vertices) moved.vertices.push_back(v + shift);
    edges.push_back(std::move(moved));
  }
  return Hypergraph::from_indexed(std::move(names), std::move(edges));
}

Hypergraph scandalous_g() {
  std::vector<std::string> names;
  for (int i = 1; i <= 8; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::string, std::vector<std::string>>> edges;
  for (int i = 3; i <= 8; ++i) edges.push_back({"b" + std::to_string(i), {"v1", "v2", "v" + std::to_string(i)}});
  for (int j = 5; j <= 7; ++j) edges.push_back({"g" + std::to_string(j), {"v3", "v4", "v" + std::to_string(j)}});
  return from_names(std::move(names), edges);
}

Hypergraph scandalous_h() {
  auto d = scandalous_g().data();
  d.edges.push_back({"orange", {"v5", "v6", "v7", "v8"}});
  d.edges.push_back({"red", {"v1", "v2", "v3", "v4"}});
  return Hypergraph(d);
}

Hypergraph hull_motif() {
  return from_names(numbered(4), {{"e1", {"1", "2", "3"}}, {"e2", {"2", "3", "4"}}});
}

Hypergraph hull_host() {
  return from_names({"v1", "v2", "v3", "v4", "v5", "v6"}, {{"b1", {"v1", "v3", "v4"}},
                                                          {"b2", {"v2", "v3", "v4"}},
                                                          {"g1", {"v3", "v5", "v6"}},
                                                          {"g2", {"v4", "v5", "v6"}}});
}

Hypergraph overlapping_parts_graph() {
  return from_names({"v1", "v2", "a", "b", "c"}, {{"b1", {"v1", "v2", "a"}},
                                                  {"b2", {"v1", "v2", "b"}},
                                                  {"b3", {"v1", "v2", "c"}},
                                                  {"red", {"a", "b", "c"}}});
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits "X,Y" at the top-level comma.
std::pair<std::string_view, std::string_view> split_pair(std::string_view s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) return {trim(s.substr(0, i)), trim(s.substr(i + 1))};
  }
  throw DomainError("expected two comma-separated descriptors in \"" + std::string(s) + "\"");
}

std::optional<std::string_view> call_argument(std::string_view s, std::string_view head) {
  if (s.size() < head.size() + 2 || s.substr(0, head.size()) != head || s[head.size()] != '(' || s.back() != ')') {
    return std::nullopt;
  }
  return trim(s.substr(head.size() + 1, s.size() - head.size() - 2));
}

std::optional<std::size_t> family_parameter(std::string_view s, char letter) {
  if (s.empty() || s.front() != letter) return std::nullopt;
  s.remove_prefix(1);
  if (!s.empty() && s.front() == '_') s.remove_prefix(1);
  if (s.empty() || s.front() == '-') {
    if (!s.empty()) throw DomainError("negative builder parameter");
    return std::nullopt;
  }
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

Hypergraph build_named(std::string_view descriptor) {
  auto s = trim(descriptor);
  if (s == "D" || s == "D_default") return default_sigma_motif();
  if (s == "G4" || s == "G_4") return hull_motif();
  if (s == "H6" || s == "H_6") return hull_host();
  if (s == "scandalous_G") return scandalous_g();
  if (s == "scandalous_H") return scandalous_h();
  if (s == "overlap") return overlapping_parts_graph();
  if (s == "corner_glue") return corner_glue(default_sigma_motif());
  if (auto arg = call_argument(s, "corner_glue")) return corner_glue(build_named(*arg));
  if (auto arg = call_argument(s, "union")) {
    auto [a, b] = split_pair(*arg);
    return disjoint_union(build_named(a), build_named(b));
  }
  // F<i> and F<i>(X)
  if (!s.empty() && s.front() == 'F') {
    auto open = s.find('(');
    auto head = s.substr(0, open);
    if (auto i = family_parameter(head, 'F')) {
      if (open == std::string_view::npos) return glued_chain(default_sigma_motif(), *i);
      if (auto arg = call_argument(s, head)) return glued_chain(build_named(*arg), *i);
    }
  }
  if (auto n = family_parameter(s, 'K')) return complete_graph(*n);
  if (auto n = family_parameter(s, 'E')) return complete_edge(*n);
  if (auto n = family_parameter(s, 'C')) return cycle_graph(*n);
  if (auto n = family_parameter(s, 'P')) return path_graph(*n);
  if (auto n = family_parameter(s, 'R')) return tailed_triangle(*n);
  throw DomainError("unknown graph descriptor \"" + std::string(s) + "\"");
}

std::vector<std::string> builtin_descriptors() {
  return {"K<n>", "E<n>", "C<n>", "P<n>", "R<i>", "D", "F<i>", "F<i>(X)", "corner_glue", "corner_glue(X)",
          "G4", "H6", "scandalous_G", "scandalous_H", "overlap", "union(X,Y)"};
}

}  // namespace hyperclust
