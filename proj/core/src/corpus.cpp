#include "hyperclust/corpus.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "hyperclust/graph_params.hpp"
#include "hyperclust/json_io.hpp"
#include "hyperclust/motif.hpp"

namespace hyperclust {

std::string CorpusBounds::key() const {
  return "n" + std::to_string(max_vertices) + "-m" + std::to_string(max_edges) + "-s" + std::to_string(max_edge_size) +
         "-f" + std::to_string(morphism_vertices) + "-g" + std::to_string(simple_max_n);
}

std::string to_string(MorphismKind kind) {
  switch (kind) {
    case MorphismKind::identity:
      return "identity";
    case MorphismKind::inclusion:
      return "inclusion";
    case MorphismKind::embedding:
      return "embedding";
  }
  return "?";
}

namespace {

// Simple graph iso-class counts by vertex count.
constexpr std::uint64_t kSimpleClasses[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168};

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (r > UINT64_MAX / (n - k + i)) return UINT64_MAX;
    r = r * (n - k + i) / i;
  }
  return r;
}

std::vector<std::uint64_t> candidate_edges(std::size_t n, std::size_t max_edge_size) {
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    if (static_cast<std::size_t>(std::popcount(m)) <= max_edge_size) masks.push_back(m);
  }
  return masks;
}

bool form_less(const CanonicalForm& a, const CanonicalForm& b) {
  if (a.vertex_count != b.vertex_count) return a.vertex_count < b.vertex_count;
  if (a.edge_masks.size() != b.edge_masks.size()) return a.edge_masks.size() < b.edge_masks.size();
  return a.edge_masks < b.edge_masks;
}

std::vector<Hypergraph> graphs_from_forms(const std::set<CanonicalForm>& forms) {
  std::vector<CanonicalForm> sorted(forms.begin(), forms.end());
  std::sort(sorted.begin(), sorted.end(), form_less);
  std::vector<Hypergraph> out;
  out.reserve(sorted.size());
  for (const auto& f : sorted) out.push_back(graph_from_canonical(f));
  return out;
}

}  // namespace

std::uint64_t estimate_corpus_candidates(const CorpusBounds& b) {
  std::uint64_t total = 0;
  for (std::size_t n = 0; n <= b.max_vertices; ++n) {
    if (n >= 63) return UINT64_MAX;
    std::uint64_t subsets = 0;
    for (std::size_t s = 1; s <= std::min(n, b.max_edge_size); ++s) subsets = saturating_add(subsets, binomial(n, s));
    for (std::size_t m = 0; m <= b.max_edges; ++m) total = saturating_add(total, binomial(subsets, m));
  }
  for (std::size_t n = 1; n <= b.simple_max_n; ++n) {
    if (n > 10) return UINT64_MAX;
    total = saturating_add(total, kSimpleClasses[n - 1] << (n - 1));
  }
  return total;
}

std::vector<Hypergraph> hypergraphs_up_to_iso(std::size_t n, std::size_t max_edges, std::size_t max_edge_size) {
  if (n > 20) throw RefusalError("hypergraph enumeration supports at most 20 vertices", n);
  const auto candidates = candidate_edges(n, max_edge_size);
  std::set<CanonicalForm> forms;
  std::vector<std::uint64_t> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    auto sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    forms.insert(canonical_labeling(static_cast<std::uint32_t>(n), sorted).form);
    if (chosen.size() == max_edges) return;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      chosen.push_back(candidates[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return graphs_from_forms(forms);
}

std::vector<Hypergraph> simple_graphs_up_to_iso(std::size_t n) {
  if (n > 10) throw RefusalError("simple graph enumeration supports at most 10 vertices", n);
  std::set<CanonicalForm> level{CanonicalForm{0, {}}};
  for (std::uint32_t k = 1; k <= n; ++k) {
    std::set<CanonicalForm> next;
    const std::uint64_t fresh = std::uint64_t{1} << (k - 1);
    for (const auto& g : level) {
      for (std::uint64_t nbrs = 0; nbrs < fresh; ++nbrs) {
        auto masks = g.edge_masks;
        for (auto rest = nbrs; rest; rest &= rest - 1) masks.push_back(fresh | (rest & -rest));
        std::sort(masks.begin(), masks.end());
        next.insert(canonical_labeling(k, masks).form);
      }
    }
    level = std::move(next);
  }
  return graphs_from_forms(level);
}

void build_morphisms(Corpus& c) {
  c.morphisms.clear();
  const auto& members = c.graphs;
  for (std::size_t j = 0; j < members.size(); ++j) {
    const auto& target = members[j];
    const auto n = target->vertex_count();
    c.morphisms.push_back({GraphMorphism::identity(target), MorphismKind::identity, j, j});
    if (n < 63) {
      const std::uint64_t full = (std::uint64_t{1} << n) - 1;
      for (std::uint64_t mask = 0; mask < full; ++mask) {
        VertexSet p;
        for (auto rest = mask; rest; rest &= rest - 1) p.push_back(static_cast<VertexIndex>(std::countr_zero(rest)));
        auto r = restrict(target, p);
        c.morphisms.push_back({std::move(r.inclusion), MorphismKind::inclusion, std::nullopt, j});
      }
    }
    if (n > c.bounds.morphism_vertices) continue;
    for (std::size_t i = 0; i < members.size(); ++i) {
      const auto& source = members[i];
      if (source->vertex_count() > n) continue;
      for (auto& m : embedding_maps(*source, *target)) {
        if (i == j && std::is_sorted(m.begin(), m.end()) && (m.empty() || m.back() + 1 == m.size())) continue;
        c.morphisms.push_back({GraphMorphism::trusted(source, target, std::move(m)), MorphismKind::embedding, i, j});
      }
    }
  }
}

Corpus generate_corpus(const CorpusBounds& bounds) {
  const auto estimate = estimate_corpus_candidates(bounds);
  if (estimate > bounds.guard) {
    throw RefusalError("corpus bounds would examine about " + std::to_string(estimate) +
                           " candidates, above the guard of " + std::to_string(bounds.guard),
                       estimate);
  }
  Corpus c;
  c.bounds = bounds;
  for (std::size_t n = 0; n <= bounds.max_vertices; ++n) {
    for (auto& g : hypergraphs_up_to_iso(n, bounds.max_edges, bounds.max_edge_size)) c.graphs.push_back(share(std::move(g)));
  }
  for (std::size_t n = 0; n <= bounds.simple_max_n; ++n) {
    for (auto& g : simple_graphs_up_to_iso(n)) c.simple_graphs.push_back(share(std::move(g)));
  }
  build_morphisms(c);
  return c;
}

void augment_corpus(Corpus& c, const std::vector<Hypergraph>& extras, std::size_t restriction_vertices) {
  std::map<CanonicalForm, std::size_t> known;
  auto form_of = [](const Hypergraph& g) -> std::optional<CanonicalForm> {
    try {
      return canonical_labeling(g).form;
    } catch (const RefusalError&) {
      return std::nullopt;
    }
  };
  for (std::size_t i = 0; i < c.graphs.size(); ++i) {
    if (auto f = form_of(*c.graphs[i])) known.emplace(*f, i);
  }
  // Adds g as a member unless an isomorphic member exists; returns its index if added.
  auto admit = [&](const GraphPtr& g) -> std::optional<std::size_t> {
    auto f = form_of(*g);
    if (f && known.contains(*f)) return std::nullopt;
    c.graphs.push_back(g);
    if (f) known.emplace(*f, c.graphs.size() - 1);
    return c.graphs.size() - 1;
  };

  std::vector<std::pair<GraphPtr, std::optional<std::size_t>>> added;
  for (const auto& x : extras) {
    auto xp = share(x);
    auto idx = admit(xp);
    added.emplace_back(xp, idx);
    c.morphisms.push_back({GraphMorphism::identity(xp), MorphismKind::identity, idx, idx});
    const auto n = xp->vertex_count();
    if (n > restriction_vertices || n >= 63) continue;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 0; mask < full; ++mask) {
      VertexSet p;
      for (auto rest = mask; rest; rest &= rest - 1) p.push_back(static_cast<VertexIndex>(std::countr_zero(rest)));
      auto r = restrict(xp, p);
      auto source_idx = admit(r.graph);
      c.morphisms.push_back({std::move(r.inclusion), MorphismKind::inclusion, source_idx, idx});
    }
  }
  constexpr std::uint64_t kPairCap = 20000;
  for (const auto& [source, si] : added) {
    for (const auto& [target, ti] : added) {
      std::vector<std::vector<VertexIndex>> maps;
      for_each_embedding(*source, *target, [&](std::span<const VertexIndex> m) {
        maps.emplace_back(m.begin(), m.end());
        return maps.size() < kPairCap;
      });
      std::sort(maps.begin(), maps.end());
      for (auto& m : maps) {
        bool identity = source == target;
        for (std::size_t v = 0; identity && v < m.size(); ++v) identity = m[v] == v;
        if (identity) continue;
        c.morphisms.push_back({GraphMorphism::trusted(source, target, std::move(m)), MorphismKind::embedding, si, ti});
      }
    }
  }
}

std::string corpus_to_jsonl(const Corpus& c) {
  std::string out;
  for (const auto& g : c.graphs) out += hypergraph_to_json(*g) + "\n";
  out += "# simple\n";
  for (const auto& g : c.simple_graphs) out += hypergraph_to_json(*g) + "\n";
  return out;
}

Corpus corpus_from_jsonl(std::string_view text, const CorpusBounds& bounds) {
  Corpus c;
  c.bounds = bounds;
  bool simple = false;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line == "# simple") {
      simple = true;
      continue;
    }
    auto g = share(hypergraph_from_json(line));
    (simple ? c.simple_graphs : c.graphs).push_back(std::move(g));
  }
  build_morphisms(c);
  return c;
}

}  // namespace hyperclust
