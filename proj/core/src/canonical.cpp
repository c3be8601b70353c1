#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "hyperclust/graph_params.hpp"

namespace hyperclust {

namespace {

using Signature = std::vector<std::uint64_t>;

std::vector<std::uint32_t> rank_signatures(const std::vector<Signature>& sigs) {
  std::vector<Signature> uniq = sigs;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::vector<std::uint32_t> rank(sigs.size());
  for (std::size_t v = 0; v < sigs.size(); ++v) {
    rank[v] = static_cast<std::uint32_t>(std::lower_bound(uniq.begin(), uniq.end(), sigs[v]) - uniq.begin());
  }
  return rank;
}

std::vector<std::uint32_t> refine_colours(std::uint32_t n, const std::vector<std::uint64_t>& masks) {
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < masks.size(); ++e) {
    for (std::uint32_t v = 0; v < n; ++v) {
      if (masks[e] >> v & 1u) incident[v].push_back(e);
    }
  }
  std::vector<Signature> sigs(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    for (auto e : incident[v]) sigs[v].push_back(static_cast<std::uint64_t>(std::popcount(masks[e])));
    std::sort(sigs[v].begin(), sigs[v].end());
  }
  auto colour = rank_signatures(sigs);
  for (std::uint32_t round = 0; round < n; ++round) {
    // Each incident edge contributes (size, sorted colours of its members) flattened.
    for (std::uint32_t v = 0; v < n; ++v) {
      std::vector<Signature> parts;
      for (auto e : incident[v]) {
        Signature p{static_cast<std::uint64_t>(std::popcount(masks[e]))};
        Signature members;
        for (std::uint32_t u = 0; u < n; ++u) {
          if (masks[e] >> u & 1u) members.push_back(colour[u]);
        }
        std::sort(members.begin(), members.end());
        p.insert(p.end(), members.begin(), members.end());
        parts.push_back(std::move(p));
      }
      std::sort(parts.begin(), parts.end());
      Signature s{colour[v]};
      for (const auto& p : parts) {
        s.push_back(p.size());
        s.insert(s.end(), p.begin(), p.end());
      }
      sigs[v] = std::move(s);
    }
    auto next = rank_signatures(sigs);
    const auto classes = [](const std::vector<std::uint32_t>& c) {
      return c.empty() ? 0u : *std::max_element(c.begin(), c.end()) + 1;
    };
    const bool stable = classes(next) == classes(colour);
    colour = std::move(next);
    if (stable) break;
  }
  return colour;
}

}  // namespace

CanonicalLabeling canonical_labeling(std::uint32_t n, const std::vector<std::uint64_t>& masks, std::uint64_t cap) {
  if (n > 64) throw RefusalError("canonical form supports at most 64 vertices", n);
  auto colour = refine_colours(n, masks);

  std::vector<char> isolated(n, 1);
  for (auto m : masks) {
    for (std::uint32_t v = 0; v < n; ++v) {
      if (m >> v & 1u) isolated[v] = 0;
    }
  }
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_colour;
  for (std::uint32_t v = 0; v < n; ++v) by_colour[colour[v]].push_back(v);

  std::vector<std::vector<std::uint32_t>> cells;
  std::uint64_t space = 1;
  for (auto& [c, members] : by_colour) {
    // Isolated vertices are interchangeable; their order never changes the masks.
    if (!isolated[members.front()]) {
      for (std::uint64_t k = 2; k <= members.size(); ++k) {
        space *= k;
        if (space > cap) throw RefusalError("canonical form search space exceeds the cap", space);
      }
    }
    cells.push_back(members);
  }

  std::vector<std::uint32_t> position(n);
  std::vector<std::uint32_t> best_position;
  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> scratch(masks.size());

  auto evaluate = [&] {
    for (std::size_t e = 0; e < masks.size(); ++e) {
      std::uint64_t m = 0;
      for (auto rest = masks[e]; rest; rest &= rest - 1) {
        m |= std::uint64_t{1} << position[std::countr_zero(rest)];
      }
      scratch[e] = m;
    }
    std::sort(scratch.begin(), scratch.end());
    if (best_position.empty() || scratch < best) {
      best = scratch;
      best_position = position;
    }
  };

  // Odometer over the permutations of every non-isolated cell.
  std::vector<std::vector<std::uint32_t>> perms = cells;
  std::vector<std::uint32_t> offset(cells.size());
  for (std::size_t c = 0, pos = 0; c < cells.size(); ++c) {
    offset[c] = static_cast<std::uint32_t>(pos);
    pos += cells[c].size();
  }
  auto place = [&] {
    for (std::size_t c = 0; c < perms.size(); ++c) {
      for (std::size_t i = 0; i < perms[c].size(); ++i) position[perms[c][i]] = offset[c] + static_cast<std::uint32_t>(i);
    }
  };
  while (true) {
    place();
    evaluate();
    std::size_t c = 0;
    for (; c < perms.size(); ++c) {
      if (isolated[perms[c].front()]) continue;
      if (std::next_permutation(perms[c].begin(), perms[c].end())) break;
    }
    if (c == perms.size()) break;
  }

  CanonicalLabeling out;
  out.form.vertex_count = n;
  out.form.edge_masks = std::move(best);
  out.position.assign(best_position.begin(), best_position.end());
  return out;
}

CanonicalLabeling canonical_labeling(const Hypergraph& g, std::uint64_t cap) {
  if (g.vertex_count() > 64) throw RefusalError("canonical form supports at most 64 vertices", g.vertex_count());
  std::vector<std::uint64_t> masks;
  masks.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    std::uint64_t m = 0;
    for (auto v : e.vertices) m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end());
  return canonical_labeling(static_cast<std::uint32_t>(g.vertex_count()), masks, cap);
}

Hypergraph graph_from_canonical(const CanonicalForm& form) {
  std::vector<std::string> names(form.vertex_count);
  for (std::uint32_t i = 0; i < form.vertex_count; ++i) names[i] = std::to_string(i + 1);
  std::vector<Edge> edges;
  edges.reserve(form.edge_masks.size());
  for (std::size_t e = 0; e < form.edge_masks.size(); ++e) {
    Edge edge{"e" + std::to_string(e + 1), {}};
    for (auto rest = form.edge_masks[e]; rest; rest &= rest - 1) {
      edge.vertices.push_back(static_cast<VertexIndex>(std::countr_zero(rest)));
    }
    edges.push_back(std::move(edge));
  }
  return Hypergraph::from_indexed(std::move(names), std::move(edges));
}

}  // namespace hyperclust
