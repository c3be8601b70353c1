#pragma once

// Brute-force oracles and seeded generators shared by the test binaries.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hyperclust/hypergraph.hpp"

namespace hctest {

using hyperclust::Edge;
using hyperclust::Hypergraph;
using hyperclust::VertexIndex;
using hyperclust::VertexSet;

inline std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  return v;
}

inline Hypergraph graph(std::size_t n, const std::vector<VertexSet>& edges) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < edges.size(); ++i) es.push_back({"e" + std::to_string(i + 1), edges[i]});
  return Hypergraph::from_indexed(numbered(n), std::move(es));
}

// Random hypergraph: m edges of size 1..max_size, parallel edges possible.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t n, std::size_t m, std::size_t max_size) {
  std::vector<VertexSet> edges;
  if (n == 0) return graph(0, edges);
  std::uniform_int_distribution<std::size_t> size_dist(1, std::min(n, max_size));
  for (std::size_t e = 0; e < m; ++e) {
    VertexSet s(n);
    std::iota(s.begin(), s.end(), 0);
    std::shuffle(s.begin(), s.end(), rng);
    s.resize(size_dist(rng));
    std::sort(s.begin(), s.end());
    edges.push_back(s);
  }
  return graph(n, edges);
}

// Random simple graph G(n, p).
inline Hypergraph random_simple(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<VertexSet> edges;
  for (VertexIndex u = 0; u < n; ++u) {
    for (VertexIndex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return graph(n, edges);
}

inline std::vector<VertexSet> distinct_edge_sets(const Hypergraph& g) {
  std::set<VertexSet> s;
  for (const auto& e : g.edges()) s.insert(e.vertices);
  return {s.begin(), s.end()};
}

// Every injective map V(r) -> V(g) sending each r-edge onto some g-edge set.
inline std::vector<std::vector<VertexIndex>> naive_embeddings(const Hypergraph& r, const Hypergraph& g) {
  std::vector<std::vector<VertexIndex>> out;
  const auto k = r.vertex_count();
  const auto n = g.vertex_count();
  if (k > n) return out;
  const auto targets = distinct_edge_sets(g);
  std::vector<VertexIndex> map(k);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      for (const auto& e : r.edges()) {
        VertexSet img;
        for (auto v : e.vertices) img.push_back(map[v]);
        std::sort(img.begin(), img.end());
        if (!std::binary_search(targets.begin(), targets.end(), img)) return;
      }
      out.push_back(map);
      return;
    }
    for (VertexIndex c = 0; c < n; ++c) {
      if (used[c]) continue;
      used[c] = 1;
      map[i] = c;
      self(self, i + 1);
      used[c] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

// Largest independent set by trying every subset.
inline std::size_t naive_independence(const Hypergraph& g) {
  const auto n = g.vertex_count();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      if ((mask >> e.vertices[0] & 1) && (mask >> e.vertices[1] & 1)) ok = false;
    }
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return best;
}

// Acyclic orientations by number of sinks, trying all 2^m orientations and
// testing acyclicity by repeated sink removal.
inline std::map<std::size_t, std::uint64_t> naive_orientation_profile(const Hypergraph& h) {
  std::map<std::size_t, std::uint64_t> out;
  const auto n = h.vertex_count();
  const auto m = h.edge_count();
  for (std::uint64_t dir = 0; dir < (std::uint64_t{1} << m); ++dir) {
    std::vector<std::vector<std::size_t>> succ(n);
    for (std::size_t e = 0; e < m; ++e) {
      auto a = h.edges()[e].vertices[0];
      auto b = h.edges()[e].vertices[1];
      if (dir >> e & 1) std::swap(a, b);
      succ[a].push_back(b);
    }
    std::size_t sinks = 0;
    for (std::size_t v = 0; v < n; ++v) sinks += succ[v].empty();
    std::vector<char> gone(n, 0);
    bool progress = true;
    std::size_t removed = 0;
    while (progress) {
      progress = false;
      for (std::size_t v = 0; v < n; ++v) {
        if (gone[v]) continue;
        bool sink = std::all_of(succ[v].begin(), succ[v].end(), [&](std::size_t w) { return gone[w]; });
        if (sink) {
          gone[v] = 1;
          ++removed;
          progress = true;
        }
      }
    }
    if (removed == n) ++out[sinks];
  }
  return out;
}

// Smallest d such that every induced subgraph has a vertex of degree <= d.
inline std::size_t naive_degeneracy(const Hypergraph& g) {
  const auto n = g.vertex_count();
  std::size_t d = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::size_t min_deg = SIZE_MAX;
    for (std::size_t v = 0; v < n; ++v) {
      if (!(mask >> v & 1)) continue;
      std::size_t deg = 0;
      for (const auto& e : g.edges()) {
        const auto a = e.vertices[0], b = e.vertices[1];
        if ((a == v && (mask >> b & 1)) || (b == v && (mask >> a & 1))) ++deg;
      }
      min_deg = std::min(min_deg, deg);
    }
    d = std::max(d, min_deg);
  }
  return d;
}

// Connected components of the k-overlap graph on distinct edge sets, unioned,
// by repeated merging. Isolated vertices get no part.
inline std::set<VertexSet> naive_pi_k(const std::vector<VertexSet>& edge_sets, std::size_t k, bool infinite) {
  std::vector<VertexSet> groups(edge_sets.begin(), edge_sets.end());
  std::vector<std::vector<VertexSet>> members;
  for (const auto& e : edge_sets) members.push_back({e});
  bool merged = true;
  while (merged && !infinite) {
    merged = false;
    for (std::size_t i = 0; i < members.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < members.size() && !merged; ++j) {
        for (const auto& a : members[i]) {
          for (const auto& b : members[j]) {
            if (hyperclust::intersection_size(a, b) >= k) merged = true;
          }
        }
        if (merged) {
          members[i].insert(members[i].end(), members[j].begin(), members[j].end());
          members.erase(members.begin() + static_cast<long>(j));
        }
      }
    }
  }
  std::set<VertexSet> parts;
  for (const auto& group : members) {
    VertexSet u;
    for (const auto& s : group) u = hyperclust::set_union(u, s);
    parts.insert(u);
  }
  return parts;
}

inline std::set<VertexSet> parts_of(const std::vector<VertexSet>& parts) { return {parts.begin(), parts.end()}; }

}  // namespace hctest
