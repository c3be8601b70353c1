#include "hyperclust/line_graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "hyperclust/graph_params.hpp"

namespace hyperclust {

OverlapThreshold::OverlapThreshold(std::size_t k) : value_(k) {
  if (k < 1) throw DomainError("overlap threshold must be at least 1");
}

OverlapThreshold OverlapThreshold::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  std::size_t k = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw DomainError("overlap threshold \"" + text + "\" is neither a positive integer nor inf");
  }
  return OverlapThreshold(k);
}

std::size_t OverlapThreshold::value() const {
  if (!value_) throw DomainError("overlap threshold is infinite");
  return *value_;
}

std::string OverlapThreshold::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

std::size_t LineGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& a : adjacency) twice += a.size();
  return twice / 2;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

LineGraph k_line_graph(const std::vector<VertexSet>& edge_sets, OverlapThreshold k) {
  LineGraph lg;
  lg.nodes = edge_sets;
  std::sort(lg.nodes.begin(), lg.nodes.end());
  lg.nodes.erase(std::unique(lg.nodes.begin(), lg.nodes.end()), lg.nodes.end());
  lg.adjacency.assign(lg.nodes.size(), {});
  if (k.is_infinite()) return lg;

  VertexIndex universe = 0;
  for (const auto& s : lg.nodes) {
    if (!s.empty()) universe = std::max(universe, s.back() + 1);
  }
  std::vector<std::vector<std::size_t>> containing(universe);
  for (std::size_t i = 0; i < lg.nodes.size(); ++i) {
    for (auto v : lg.nodes[i]) containing[v].push_back(i);
  }
  // Overlap counts through the inverted index; only pairs sharing a vertex are touched.
  std::vector<std::size_t> overlap(lg.nodes.size(), 0);
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < lg.nodes.size(); ++i) {
    touched.clear();
    for (auto v : lg.nodes[i]) {
      for (auto j : containing[v]) {
        if (j <= i) continue;
        if (overlap[j]++ == 0) touched.push_back(j);
      }
    }
    for (auto j : touched) {
      if (k.admits(overlap[j])) {
        lg.adjacency[i].push_back(j);
        lg.adjacency[j].push_back(i);
      }
      overlap[j] = 0;
    }
  }
  for (auto& a : lg.adjacency) std::sort(a.begin(), a.end());
  return lg;
}

LineGraph k_line_graph(const Hypergraph& g, OverlapThreshold k) { return k_line_graph(g.edge_sets(), k); }

Hypergraph line_graph_to_hypergraph(const LineGraph& lg, const Hypergraph& origin) {
  std::vector<std::string> names;
  names.reserve(lg.nodes.size());
  for (const auto& s : lg.nodes) names.push_back(set_literal(origin, s));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < lg.adjacency.size(); ++i) {
    for (auto j : lg.adjacency[i]) {
      if (j > i) {
        edges.push_back({"e" + std::to_string(edges.size() + 1),
                         {static_cast<VertexIndex>(i), static_cast<VertexIndex>(j)}});
      }
    }
  }
  return Hypergraph::from_indexed(std::move(names), std::move(edges));
}

Components line_graph_components(const LineGraph& lg) {
  DisjointSets ds(lg.nodes.size());
  for (std::size_t i = 0; i < lg.adjacency.size(); ++i) {
    for (auto j : lg.adjacency[i]) ds.unite(i, j);
  }
  Components c;
  c.component_of.assign(lg.nodes.size(), 0);
  std::vector<std::size_t> label(lg.nodes.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < lg.nodes.size(); ++i) {
    auto root = ds.find(i);
    if (label[root] == static_cast<std::size_t>(-1)) label[root] = c.count++;
    c.component_of[i] = label[root];
  }
  return c;
}

PartitionedSet connected_components(const Hypergraph& g) {
  auto adj = adjacency_lists(g);
  DisjointSets ds(g.vertex_count());
  for (std::size_t v = 0; v < adj.size(); ++v) {
    for (auto u : adj[v]) ds.unite(v, u);
  }
  std::vector<VertexSet> parts(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) parts[ds.find(v)].push_back(v);
  std::erase_if(parts, [](const VertexSet& p) { return p.empty(); });
  return PartitionedSet(g.vertices(), std::move(parts));
}

PartitionedSet pi_k(const std::vector<std::string>& vertices, const std::vector<VertexSet>& edge_sets,
                    OverlapThreshold k) {
  auto lg = k_line_graph(edge_sets, k);
  auto comps = line_graph_components(lg);
  std::vector<VertexSet> parts(comps.count);
  for (std::size_t i = 0; i < lg.nodes.size(); ++i) {
    auto& part = parts[comps.component_of[i]];
    part = set_union(part, lg.nodes[i]);
  }
  return PartitionedSet(vertices, std::move(parts));
}

PartitionedSet pi_k(const Hypergraph& g, OverlapThreshold k) { return pi_k(g.vertices(), g.edge_sets(), k); }

bool is_k_connected(std::size_t vertex_count, const std::vector<VertexSet>& edge_sets, OverlapThreshold k) {
  auto lg = k_line_graph(edge_sets, k);
  auto comps = line_graph_components(lg);
  std::vector<VertexSet> parts(comps.count);
  for (std::size_t i = 0; i < lg.nodes.size(); ++i) {
    auto& part = parts[comps.component_of[i]];
    part = set_union(part, lg.nodes[i]);
  }
  return std::any_of(parts.begin(), parts.end(), [&](const VertexSet& p) { return p.size() == vertex_count; });
}

bool is_k_connected(const Hypergraph& g, OverlapThreshold k) {
  return is_k_connected(g.vertex_count(), g.edge_sets(), k);
}

PartitionedSet pi_infinity_parts(const Hypergraph& g) { return PartitionedSet(g.vertices(), g.edge_sets()); }

}  // namespace hyperclust
