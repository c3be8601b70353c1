#include "hyperclust/motif.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "hyperclust/builders.hpp"
#include "hyperclust/graph_params.hpp"

namespace hyperclust {

std::vector<Hypergraph> MotifSet::materialize(const Hypergraph& target) const {
  std::vector<Hypergraph> out;
  for (const auto& m : motifs) {
    if (m.vertex_count() == 0) throw DomainError("motif without vertices would produce an empty edge");
    out.push_back(m);
  }
  if (complete_edge_family) {
    for (std::size_t n = 1; n <= target.max_edge_size(); ++n) out.push_back(complete_edge(n));
  }
  if (tailed_triangle_family) {
    for (std::size_t i = 0; i + 3 <= target.vertex_count(); ++i) out.push_back(tailed_triangle(i));
  }
  return out;
}

namespace {

class Counter {
 public:
  Counter(const EmbeddingVisitor& visit, const EnumerationOptions& options) : visit_(visit), options_(options) {}

  // false stops the search
  bool report(std::span<const VertexIndex> map) {
    if (options_.budget && count_ >= *options_.budget) throw BudgetExceeded(count_);
    ++count_;
    return visit_(map);
  }
  std::uint64_t count() const noexcept { return count_; }

 private:
  const EmbeddingVisitor& visit_;
  const EnumerationOptions& options_;
  std::uint64_t count_ = 0;
};

// Acyclic orientations of a simple graph given as an edge list. dir[e] = 0 means
// edges[e].first -> edges[e].second.
template <class F>
void for_each_acyclic_orientation(std::size_t n, const std::vector<std::pair<VertexIndex, VertexIndex>>& edges, F&& f) {
  std::vector<std::vector<VertexIndex>> out(n);
  std::vector<char> dir(edges.size(), 0);
  std::vector<char> seen(n);
  std::vector<VertexIndex> stack;
  auto reaches = [&](VertexIndex from, VertexIndex to) {
    std::fill(seen.begin(), seen.end(), 0);
    stack.assign(1, from);
    seen[from] = 1;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      if (x == to) return true;
      for (auto y : out[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    return false;
  };
  auto rec = [&](auto&& self, std::size_t e) -> void {
    if (e == edges.size()) {
      f(dir);
      return;
    }
    for (char d = 0; d < 2; ++d) {
      auto [a, b] = edges[e];
      if (d) std::swap(a, b);
      if (reaches(b, a)) continue;
      out[a].push_back(b);
      dir[e] = d;
      self(self, e + 1);
      out[a].pop_back();
    }
  };
  rec(rec, 0);
}

std::vector<std::pair<VertexIndex, VertexIndex>> edge_pairs(const Hypergraph& h) {
  std::vector<std::pair<VertexIndex, VertexIndex>> out;
  for (const auto& e : h.edges()) out.emplace_back(e.vertices[0], e.vertices[1]);
  return out;
}

// Degeneracy-ordered search for simple motif and simple target. Every embedding
// induces exactly one acyclic orientation of the motif (orient by position in
// the target's elimination order), so the orientations partition the search.
// Within one orientation, vertices are placed in topological order: a vertex with
// a placed in-neighbour y can only go to a later neighbour of phi(y), of which
// there are at most d.
class SimpleEngine {
 public:
  SimpleEngine(const Hypergraph& r, const Hypergraph& g, Counter& counter)
      : r_(r), g_adj_(adjacency_lists(g)), counter_(counter) {
    auto deg = degeneracy(g);
    pos_.resize(g.vertex_count());
    for (std::size_t i = 0; i < deg.order.size(); ++i) pos_[deg.order[i]] = static_cast<std::uint32_t>(i);
    later_.resize(g.vertex_count());
    earlier_.resize(g.vertex_count());
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      for (auto u : g_adj_[v]) (pos_[u] > pos_[v] ? later_ : earlier_)[v].push_back(u);
    }
    r_edges_ = edge_pairs(r);
  }

  void run() {
    const auto n = r_.vertex_count();
    map_.assign(n, 0);
    used_.assign(g_adj_.size(), 0);
    bool stop = false;
    for_each_acyclic_orientation(n, r_edges_, [&](const std::vector<char>& dir) {
      if (stop) return;
      prepare(dir);
      stop = !extend(0);
    });
  }

 private:
  // A motif edge between the vertex being placed and an earlier placed one.
  // incoming: other -> v, so phi(other) precedes phi(v) in the elimination order.
  struct Constraint {
    VertexIndex other;
    bool incoming;
  };

  enum class Anchor { none, later, earlier };

  // Order: grow each motif component from a source, preferring vertices with a
  // placed in-neighbour (at most d candidates), then a placed out-neighbour.
  void prepare(const std::vector<char>& dir) {
    const auto n = r_.vertex_count();
    std::vector<std::vector<VertexIndex>> succ(n), pred(n);
    for (std::size_t e = 0; e < r_edges_.size(); ++e) {
      auto [a, b] = r_edges_[e];
      if (dir[e]) std::swap(a, b);
      succ[a].push_back(b);
      pred[b].push_back(a);
    }
    std::vector<char> placed(n, 0);
    order_.clear();
    constraints_.assign(n, {});
    anchor_.assign(n, {Anchor::none, 0});
    for (std::size_t step = 0; step < n; ++step) {
      std::optional<VertexIndex> pick;
      Anchor kind = Anchor::none;
      VertexIndex via = 0;
      for (VertexIndex v = 0; v < n && kind != Anchor::later; ++v) {
        if (placed[v]) continue;
        for (auto a : pred[v]) {
          if (placed[a]) {
            pick = v, kind = Anchor::later, via = a;
            break;
          }
        }
        if (kind == Anchor::none) {
          for (auto b : succ[v]) {
            if (placed[b]) {
              pick = v, kind = Anchor::earlier, via = b;
              break;
            }
          }
        }
      }
      if (!pick) {
        for (VertexIndex v = 0; v < n && !pick; ++v) {
          if (!placed[v] && pred[v].empty()) pick = v;
        }
      }
      const auto v = *pick;
      placed[v] = 1;
      order_.push_back(v);
      anchor_[step] = {kind, via};
      for (auto a : pred[v]) {
        if (placed[a] && a != v) constraints_[step].push_back({a, true});
      }
      for (auto b : succ[v]) {
        if (placed[b] && b != v) constraints_[step].push_back({b, false});
      }
    }
  }

  bool adjacent(VertexIndex x, VertexIndex y) const {
    return std::binary_search(g_adj_[x].begin(), g_adj_[x].end(), y);
  }

  bool extend(std::size_t i) {
    if (i == order_.size()) return counter_.report(map_);
    const auto v = order_[i];
    auto try_candidate = [&](VertexIndex c) {
      if (used_[c]) return true;
      for (const auto& con : constraints_[i]) {
        const auto x = map_[con.other];
        if ((con.incoming ? pos_[x] >= pos_[c] : pos_[x] <= pos_[c]) || !adjacent(x, c)) return true;
      }
      map_[v] = c;
      used_[c] = 1;
      bool go_on = extend(i + 1);
      used_[c] = 0;
      return go_on;
    };
    const auto [kind, via] = anchor_[i];
    if (kind != Anchor::none) {
      for (auto c : (kind == Anchor::later ? later_ : earlier_)[map_[via]]) {
        if (!try_candidate(c)) return false;
      }
    } else {
      for (VertexIndex c = 0; c < g_adj_.size(); ++c) {
        if (!try_candidate(c)) return false;
      }
    }
    return true;
  }

  const Hypergraph& r_;
  std::vector<std::vector<VertexIndex>> g_adj_;
  Counter& counter_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::vector<VertexIndex>> later_;
  std::vector<std::vector<VertexIndex>> earlier_;
  std::vector<std::pair<VertexIndex, VertexIndex>> r_edges_;
  std::vector<VertexIndex> order_;
  std::vector<std::vector<Constraint>> constraints_;
  std::vector<std::pair<Anchor, VertexIndex>> anchor_;
  std::vector<VertexIndex> map_;
  std::vector<char> used_;
};

// Backtracking for arbitrary hypergraphs. Motif vertices are placed largest edge
// first, then by how many already placed vertices they share an edge with. A
// vertex sharing an edge of size s with a placed vertex u may only go to a
// vertex that shares a size-s edge with phi(u).
class GenericEngine {
 public:
  GenericEngine(const Hypergraph& r, const Hypergraph& g, Counter& counter) : r_(r), g_(g), counter_(counter) {
    const std::size_t sizes = std::max(r.max_edge_size(), g.max_edge_size()) + 1;
    auto profile = [&](const Hypergraph& h) {
      std::vector<std::vector<std::uint32_t>> p(h.vertex_count(), std::vector<std::uint32_t>(sizes, 0));
      for (const auto& s : h.edge_sets()) {
        for (auto v : s) ++p[v][s.size()];
      }
      return p;
    };
    r_profile_ = profile(r);
    g_profile_ = profile(g);
    co_.assign(g.vertex_count(), std::vector<VertexSet>(sizes));
    for (const auto& s : g.edge_sets()) {
      for (auto x : s) {
        auto& bucket = co_[x][s.size()];
        for (auto y : s) {
          if (y != x) bucket.push_back(y);
        }
      }
    }
    for (auto& per_vertex : co_) {
      for (auto& bucket : per_vertex) normalize(bucket);
    }
    g_sets_.insert(g.edge_sets().begin(), g.edge_sets().end());
    plan();
  }

  void run() {
    map_.assign(r_.vertex_count(), 0);
    used_.assign(g_.vertex_count(), 0);
    extend(0);
  }

 private:
  struct Anchor {
    VertexIndex placed;
    std::size_t size;
  };

  void plan() {
    const auto n = r_.vertex_count();
    const auto& sets = r_.edge_sets();
    std::vector<char> placed(n, 0);
    std::vector<std::size_t> placed_in(sets.size(), 0);
    std::vector<std::vector<std::size_t>> incident(n);
    for (std::size_t e = 0; e < sets.size(); ++e) {
      for (auto v : sets[e]) incident[v].push_back(e);
    }
    auto place = [&](VertexIndex v, std::optional<Anchor> a) {
      placed[v] = 1;
      order_.push_back(v);
      anchors_.push_back(a);
      for (auto e : incident[v]) ++placed_in[e];
    };
    while (order_.size() < n) {
      // Best continuation: the edge with the most placed vertices, then the larger edge.
      std::optional<std::pair<std::size_t, std::size_t>> best_key;
      VertexIndex best_vertex = 0;
      std::size_t best_edge = 0;
      for (std::size_t e = 0; e < sets.size(); ++e) {
        if (placed_in[e] == 0 || placed_in[e] == sets[e].size()) continue;
        std::pair<std::size_t, std::size_t> key{placed_in[e], sets[e].size()};
        if (!best_key || key > *best_key) {
          best_key = key;
          best_edge = e;
          for (auto v : sets[e]) {
            if (!placed[v]) {
              best_vertex = v;
              break;
            }
          }
        }
      }
      if (best_key) {
        VertexIndex anchor_vertex = 0;
        for (auto v : sets[best_edge]) {
          if (placed[v]) {
            anchor_vertex = v;
            break;
          }
        }
        place(best_vertex, Anchor{anchor_vertex, sets[best_edge].size()});
        continue;
      }
      // New component: start from the largest untouched edge, else an isolated vertex.
      std::optional<std::size_t> fresh;
      for (std::size_t e = 0; e < sets.size(); ++e) {
        if (placed_in[e] == 0 && (!fresh || sets[e].size() > sets[*fresh].size())) fresh = e;
      }
      if (fresh) {
        place(sets[*fresh].front(), std::nullopt);
      } else {
        VertexIndex v = 0;
        while (placed[v]) ++v;
        place(v, std::nullopt);
      }
    }
    std::vector<std::size_t> at(n);
    for (std::size_t i = 0; i < n; ++i) at[order_[i]] = i;
    closing_.assign(n, {});
    for (const auto& s : sets) {
      std::size_t last = 0;
      for (auto v : s) last = std::max(last, at[v]);
      closing_[last].push_back(&s);
    }
  }

  bool profile_fits(VertexIndex v, VertexIndex c) const {
    const auto& need = r_profile_[v];
    const auto& have = g_profile_[c];
    for (std::size_t s = 1; s < need.size(); ++s) {
      if (need[s] > have[s]) return false;
    }
    return true;
  }

  bool extend(std::size_t i) {
    if (i == order_.size()) return counter_.report(map_);
    const auto v = order_[i];
    auto try_candidate = [&](VertexIndex c) {
      if (used_[c] || !profile_fits(v, c)) return true;
      map_[v] = c;
      for (const auto* s : closing_[i]) {
        if (!g_sets_.contains(image(*s, map_))) return true;
      }
      used_[c] = 1;
      bool go_on = extend(i + 1);
      used_[c] = 0;
      return go_on;
    };
    if (const auto& a = anchors_[i]) {
      for (auto c : co_[map_[a->placed]][a->size]) {
        if (!try_candidate(c)) return false;
      }
    } else {
      for (VertexIndex c = 0; c < g_.vertex_count(); ++c) {
        if (!try_candidate(c)) return false;
      }
    }
    return true;
  }

  const Hypergraph& r_;
  const Hypergraph& g_;
  Counter& counter_;
  std::vector<std::vector<std::uint32_t>> r_profile_;
  std::vector<std::vector<std::uint32_t>> g_profile_;
  std::vector<std::vector<VertexSet>> co_;
  std::unordered_set<VertexSet, VertexSetHash> g_sets_;
  std::vector<VertexIndex> order_;
  std::vector<std::optional<Anchor>> anchors_;
  std::vector<std::vector<const VertexSet*>> closing_;
  std::vector<VertexIndex> map_;
  std::vector<char> used_;
};

}  // namespace

std::uint64_t for_each_embedding(const Hypergraph& r, const Hypergraph& g, const EmbeddingVisitor& visit,
                                 const EnumerationOptions& options) {
  Counter counter(visit, options);
  if (r.vertex_count() > g.vertex_count()) return 0;
  if (r.vertex_count() == 0) {
    counter.report({});
    return counter.count();
  }
  if (r.is_simple() && g.is_simple() && r.edge_count() > 0 && r.edge_count() <= kOrientationEdgeBound) {
    SimpleEngine engine(r, g, counter);
    engine.run();
  } else {
    GenericEngine engine(r, g, counter);
    engine.run();
  }
  return counter.count();
}

std::uint64_t count_embeddings(const Hypergraph& r, const Hypergraph& g, const EnumerationOptions& options) {
  return for_each_embedding(r, g, [](std::span<const VertexIndex>) { return true; }, options);
}

std::vector<std::vector<VertexIndex>> embedding_maps(const Hypergraph& r, const Hypergraph& g,
                                                     const EnumerationOptions& options) {
  std::vector<std::vector<VertexIndex>> out;
  for_each_embedding(
      r, g,
      [&](std::span<const VertexIndex> m) {
        out.emplace_back(m.begin(), m.end());
        return true;
      },
      options);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GraphMorphism> enumerate_embeddings(const GraphPtr& r, const GraphPtr& g,
                                                const EnumerationOptions& options) {
  std::vector<GraphMorphism> out;
  for (auto& m : embedding_maps(*r, *g, options)) out.push_back(GraphMorphism::trusted(r, g, std::move(m)));
  return out;
}

PhiResult phi(const MotifSet& motifs, const Hypergraph& g, const EnumerationOptions& options) {
  PhiResult result;
  result.motifs = motifs.materialize(g);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < result.motifs.size(); ++i) {
    for (auto& m : embedding_maps(result.motifs[i], g, options)) {
      std::string id = "m" + std::to_string(i) + "[";
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (j) id += ',';
        id += std::to_string(m[j]);
      }
      id += ']';
      VertexSet img(m.begin(), m.end());
      normalize(img);
      edges.push_back({std::move(id), std::move(img)});
      result.provenance.push_back({i, std::move(m)});
    }
  }
  // from_indexed sorts edges by id; keep provenance aligned.
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[a].id < edges[b].id; });
  std::vector<PhiProvenance> aligned;
  aligned.reserve(order.size());
  for (auto i : order) aligned.push_back(std::move(result.provenance[i]));
  result.provenance = std::move(aligned);
  result.graph = Hypergraph::from_indexed(g.vertices(), std::move(edges));
  return result;
}

std::vector<VertexSet> phi_edge_sets(const MotifSet& motifs, const Hypergraph& g, const EnumerationOptions& options) {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  VertexSet scratch;
  for (const auto& m : motifs.materialize(g)) {
    for_each_embedding(
        m, g,
        [&](std::span<const VertexIndex> map) {
          scratch.assign(map.begin(), map.end());
          normalize(scratch);
          seen.insert(scratch);
          return true;
        },
        options);
  }
  std::vector<VertexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_spanned(std::size_t vertex_count, const std::vector<VertexSet>& edge_sets) {
  return std::any_of(edge_sets.begin(), edge_sets.end(),
                     [&](const VertexSet& s) { return s.size() == vertex_count; });
}

bool is_spanned(const Hypergraph& g) { return is_spanned(g.vertex_count(), g.edge_sets()); }

std::map<std::size_t, std::uint64_t> acyclic_orientation_profile(const Hypergraph& h) {
  if (!h.is_simple()) throw DomainError("acyclic orientations need a simple graph");
  if (h.edge_count() > kOrientationEdgeBound) {
    throw RefusalError("acyclic orientation profile: " + std::to_string(h.edge_count()) + " edges exceeds the bound " +
                           std::to_string(kOrientationEdgeBound),
                       std::uint64_t{1} << std::min<std::size_t>(h.edge_count(), 63));
  }
  const auto edges = edge_pairs(h);
  std::map<std::size_t, std::uint64_t> profile;
  std::vector<char> has_out(h.vertex_count());
  for_each_acyclic_orientation(h.vertex_count(), edges, [&](const std::vector<char>& dir) {
    std::fill(has_out.begin(), has_out.end(), 0);
    for (std::size_t e = 0; e < edges.size(); ++e) has_out[dir[e] ? edges[e].second : edges[e].first] = 1;
    ++profile[static_cast<std::size_t>(std::count(has_out.begin(), has_out.end(), 0))];
  });
  return profile;
}

double embedding_count_bound(const Hypergraph& h, std::size_t degeneracy, std::size_t n) {
  double total = 0;
  for (const auto& [t, count] : acyclic_orientation_profile(h)) {
    total += static_cast<double>(count) * std::pow(static_cast<double>(degeneracy), static_cast<double>(h.vertex_count() - t)) *
             std::pow(static_cast<double>(n), static_cast<double>(t));
  }
  return total;
}

}  // namespace hyperclust
