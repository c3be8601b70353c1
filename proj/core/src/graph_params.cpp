#include "hyperclust/graph_params.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>

namespace hyperclust {

std::vector<std::vector<VertexIndex>> adjacency_lists(const Hypergraph& g) {
  if (!g.is_simple()) throw DomainError("operation requires a simple graph");
  std::vector<std::vector<VertexIndex>> adj(g.vertex_count());
  for (const auto& e : g.edges()) {
    adj[e.vertices[0]].push_back(e.vertices[1]);
    adj[e.vertices[1]].push_back(e.vertices[0]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

Degeneracy degeneracy(const Hypergraph& g) {
  auto adj = adjacency_lists(g);
  const auto n = adj.size();
  // Bucket queue: vertices sorted by current degree, bin[d] = first slot of degree d.
  std::size_t max_deg = 0;
  std::vector<std::size_t> deg(n);
  for (VertexIndex v = 0; v < n; ++v) max_deg = std::max(max_deg, deg[v] = adj[v].size());
  std::vector<std::size_t> bin(max_deg + 2, 0);
  for (auto d : deg) ++bin[d + 1];
  for (std::size_t d = 1; d < bin.size(); ++d) bin[d] += bin[d - 1];
  std::vector<VertexIndex> vert(n);
  std::vector<std::size_t> at(n);
  {
    auto next = bin;
    for (VertexIndex v = 0; v < n; ++v) {
      at[v] = next[deg[v]]++;
      vert[at[v]] = v;
    }
  }
  Degeneracy result;
  result.order.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = vert[i];
    result.value = std::max(result.value, deg[v]);
    result.order.push_back(v);
    for (auto u : adj[v]) {
      if (at[u] <= i || deg[u] <= deg[v]) continue;
      // Swap u with the first vertex of its bucket, then shrink the bucket.
      const auto du = deg[u];
      const auto first = std::max(bin[du], i + 1);
      const auto w = vert[first];
      std::swap(vert[at[u]], vert[first]);
      at[w] = at[u];
      at[u] = first;
      bin[du] = first + 1;
      --deg[u];
    }
  }
  return result;
}

namespace {

std::size_t max_independent(std::uint64_t candidates, const std::vector<std::uint64_t>& nbr, std::size_t current,
                            std::size_t best) {
  if (candidates == 0) return std::max(current, best);
  if (current + static_cast<std::size_t>(std::popcount(candidates)) <= best) return best;
  // Branch on the candidate with the most neighbours inside the candidate set.
  int pick = -1;
  int pick_deg = -1;
  for (auto rest = candidates; rest; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    int d = std::popcount(nbr[v] & candidates);
    if (d > pick_deg) {
      pick = v;
      pick_deg = d;
    }
  }
  if (pick_deg == 0) return std::max(best, current + static_cast<std::size_t>(std::popcount(candidates)));
  const std::uint64_t bit = std::uint64_t{1} << pick;
  best = max_independent(candidates & ~bit & ~nbr[pick], nbr, current + 1, best);
  best = max_independent(candidates & ~bit, nbr, current, best);
  return best;
}

}  // namespace

std::size_t independence_number(const Hypergraph& g, std::size_t bound) {
  if (g.vertex_count() > bound || g.vertex_count() > 64) {
    throw RefusalError("independence_number: " + std::to_string(g.vertex_count()) +
                           " vertices exceeds the brute-force bound " + std::to_string(bound),
                       g.vertex_count());
  }
  auto adj = adjacency_lists(g);
  std::vector<std::uint64_t> nbr(adj.size(), 0);
  for (std::size_t v = 0; v < adj.size(); ++v) {
    for (auto u : adj[v]) nbr[v] |= std::uint64_t{1} << u;
  }
  const std::uint64_t all = adj.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << adj.size()) - 1;
  return max_independent(all, nbr, 0, 0);
}

std::optional<std::size_t> graph_distance(const Hypergraph& g, VertexIndex u, VertexIndex v) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) throw DomainError("graph_distance: vertex out of range");
  auto adj = adjacency_lists(g);
  std::vector<std::size_t> dist(adj.size(), static_cast<std::size_t>(-1));
  std::deque<VertexIndex> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    if (x == v) return dist[x];
    for (auto y : adj[x]) {
      if (dist[y] == static_cast<std::size_t>(-1)) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return std::nullopt;
}

namespace {

// Per-vertex profile: sorted incident edge sizes (with multiplicity).
std::vector<std::vector<std::size_t>> incidence_profiles(const Hypergraph& g) {
  std::vector<std::vector<std::size_t>> prof(g.vertex_count());
  for (const auto& e : g.edges()) {
    for (auto v : e.vertices) prof[v].push_back(e.vertices.size());
  }
  for (auto& p : prof) std::sort(p.begin(), p.end());
  return prof;
}

struct IsoSearch {
  const Hypergraph& g;
  const Hypergraph& h;
  std::vector<std::vector<std::size_t>> gp, hp;
  std::map<VertexSet, int> h_count;  // multiplicity of each edge set in h
  std::map<VertexSet, int> g_count;
  // edges of g whose largest vertex is v, checked once v is assigned
  std::vector<std::vector<const VertexSet*>> closing;
  std::vector<VertexIndex> map;
  std::vector<char> used;

  bool extend(VertexIndex v) {
    if (v == g.vertex_count()) return true;
    for (VertexIndex c = 0; c < h.vertex_count(); ++c) {
      if (used[c] || gp[v] != hp[c]) continue;
      map[v] = c;
      bool ok = true;
      for (const auto* s : closing[v]) {
        auto img = image(*s, map);
        auto it = h_count.find(img);
        if (it == h_count.end() || it->second != g_count[*s]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[c] = 1;
      if (extend(v + 1)) return true;
      used[c] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<VertexIndex>> iso_check(const Hypergraph& g, const Hypergraph& h, std::size_t bound) {
  const auto n = std::max(g.vertex_count(), h.vertex_count());
  if (n > bound) {
    throw RefusalError("iso_check: " + std::to_string(n) + " vertices exceeds the bound " + std::to_string(bound), n);
  }
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  IsoSearch s{g, h, incidence_profiles(g), incidence_profiles(h), {}, {}, {}, {}, {}};
  for (const auto& e : h.edges()) ++s.h_count[e.vertices];
  for (const auto& e : g.edges()) ++s.g_count[e.vertices];
  if (s.g_count.size() != s.h_count.size()) return std::nullopt;
  {
    auto a = s.gp;
    auto b = s.hp;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  s.closing.resize(g.vertex_count());
  for (const auto& [set, _] : s.g_count) s.closing[set.back()].push_back(&set);
  s.map.assign(g.vertex_count(), 0);
  s.used.assign(h.vertex_count(), 0);
  if (!s.extend(0)) return std::nullopt;
  return s.map;
}

}  // namespace hyperclust
