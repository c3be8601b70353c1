#include "hyperclust/property_lab.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <random>

#include "hyperclust/builders.hpp"
#include "hyperclust/graph_params.hpp"
#include "json_detail.hpp"
#include "parallel.hpp"

namespace hyperclust {

using nlohmann::ordered_json;

std::optional<std::string> CheckReport::detail(const std::string& key) const {
  for (const auto& [k, v] : details) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> CheckReport::statistic(const std::string& key) const {
  for (const auto& [k, v] : statistics) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string report_to_json(const CheckReport& r, int indent) {
  ordered_json j;
  j["property"] = r.property;
  j["schemes"] = r.schemes;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["failures"] = r.failures;
  j["bounds"] = {{"max_vertices", r.bounds.max_vertices},
                 {"max_edges", r.bounds.max_edges},
                 {"max_edge_size", r.bounds.max_edge_size},
                 {"morphism_vertices", r.bounds.morphism_vertices},
                 {"simple_max_n", r.bounds.simple_max_n}};
  j["statistics"] = ordered_json::object();
  for (const auto& [k, v] : r.statistics) j["statistics"][k] = v;
  j["details"] = ordered_json::object();
  for (const auto& [k, v] : r.details) j["details"][k] = v;
  j["counterexamples"] = ordered_json::array();
  for (const auto& ex : r.counterexamples) {
    ordered_json e;
    e["graphs"] = ordered_json::array();
    for (const auto& g : ex.graphs) e["graphs"].push_back(detail::to_json_value(*g));
    if (ex.map && ex.graphs.size() >= 2) {
      ordered_json m = ordered_json::object();
      for (std::size_t v = 0; v < ex.map->size(); ++v) {
        m[ex.graphs[0]->name(static_cast<VertexIndex>(v))] = ex.graphs[1]->name((*ex.map)[v]);
      }
      e["map"] = m;
    }
    if (ex.part && !ex.graphs.empty()) e["part"] = ex.graphs[0]->names(*ex.part);
    e["note"] = ex.note;
    j["counterexamples"].push_back(std::move(e));
  }
  return j.dump(indent);
}

namespace {

const std::vector<GraphPtr>& members(const Corpus& c, const CheckOptions& o) {
  return o.simple_graphs ? c.simple_graphs : c.graphs;
}

VertexSet all_of(std::size_t n) {
  VertexSet s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

// Collects per-item failures in parallel and merges them in item order.
struct Collector {
  std::vector<std::vector<Counterexample>> per_item;
  std::vector<std::uint64_t> failures;
  std::vector<std::uint64_t> skipped;

  explicit Collector(std::size_t n) : per_item(n), failures(n, 0), skipped(n, 0) {}

  void merge_into(CheckReport& report, std::size_t cap) {
    for (std::size_t i = 0; i < per_item.size(); ++i) {
      report.failures += failures[i];
      for (auto& ex : per_item[i]) {
        if (report.counterexamples.size() < cap) report.counterexamples.push_back(std::move(ex));
      }
    }
    report.pass = report.failures == 0;
    std::uint64_t s = 0;
    for (auto k : skipped) s += k;
    report.statistics.emplace_back("out_of_domain", s);
  }
};

// First part of p whose image under map lies in no part of q.
std::optional<VertexSet> uncovered_part(const PartitionedSet& p, const PartitionedSet& q,
                                        std::span<const VertexIndex> map) {
  for (const auto& part : p.parts()) {
    auto img = image(part, map);
    bool covered = std::any_of(q.parts().begin(), q.parts().end(), [&](const VertexSet& t) { return is_subset(img, t); });
    if (!covered) return part;
  }
  return std::nullopt;
}

bool excision_fails(const SchemeSpec& s, const Hypergraph& g, const VertexSet& part) {
  auto sub = restricted_graph(g, part);
  return !cluster(s, sub).has_part(all_of(part.size()));
}

}  // namespace

CheckReport check_excisive(const SchemeSpec& s, const Corpus& c, const CheckOptions& o) {
  CheckReport report{"excisive", {s.describe()}, true, 0, {}, {}, {}, c.bounds};
  const auto& graphs = members(c, o);
  Collector col(graphs.size());
  std::vector<std::uint64_t> parts_checked(graphs.size(), 0);
  detail::parallel_for(graphs.size(), o.jobs, [&](std::size_t i) {
    const auto& g = graphs[i];
    try {
      const auto p = cluster(s, *g);
      for (const auto& part : p.parts()) {
        ++parts_checked[i];
        if (excision_fails(s, *g, part)) {
          ++col.failures[i];
          col.per_item[i].push_back({{g}, std::nullopt, part, "part is not a part of the clustering of its restriction"});
        }
      }
    } catch (const DomainError&) {
      ++col.skipped[i];
    }
  });
  report.statistics.emplace_back("graphs", graphs.size());
  report.statistics.emplace_back("parts_checked", std::accumulate(parts_checked.begin(), parts_checked.end(), std::uint64_t{0}));
  col.merge_into(report, o.max_counterexamples);
  return report;
}

CheckReport check_functorial(const SchemeSpec& s, const Corpus& c, const CheckOptions& o) {
  CheckReport report{"functorial", {s.describe()}, true, 0, {}, {}, {}, c.bounds};
  std::vector<std::optional<PartitionedSet>> member_clusters(c.graphs.size());
  detail::parallel_for(c.graphs.size(), o.jobs, [&](std::size_t i) {
    try {
      member_clusters[i] = cluster(s, *c.graphs[i]);
    } catch (const DomainError&) {
    }
  });
  auto clustering = [&](const GraphPtr& g, const std::optional<std::size_t>& idx) -> std::optional<PartitionedSet> {
    if (idx) return member_clusters[*idx];
    try {
      return cluster(s, *g);
    } catch (const DomainError&) {
      return std::nullopt;
    }
  };
  constexpr std::size_t kChunk = 2048;
  const std::size_t chunks = (c.morphisms.size() + kChunk - 1) / kChunk;
  Collector col(chunks);
  detail::parallel_for(chunks, o.jobs, [&](std::size_t chunk) {
    const auto end = std::min(c.morphisms.size(), (chunk + 1) * kChunk);
    for (std::size_t m = chunk * kChunk; m < end; ++m) {
      const auto& cm = c.morphisms[m];
      const auto& f = cm.morphism;
      auto p = clustering(f.source_ptr(), cm.source_index);
      auto q = clustering(f.target_ptr(), cm.target_index);
      if (!p || !q) {
        ++col.skipped[chunk];
        continue;
      }
      if (auto bad = uncovered_part(*p, *q, f.map())) {
        ++col.failures[chunk];
        col.per_item[chunk].push_back({{f.source_ptr(), f.target_ptr()},
                                       f.map(),
                                       *bad,
                                       to_string(cm.kind) + ": image of part lies in no target part"});
      }
    }
  });
  report.statistics.emplace_back("morphisms", c.morphisms.size());
  col.merge_into(report, o.max_counterexamples);
  return report;
}

namespace {

template <class Compare>
CheckReport per_graph_comparison(std::string property, const SchemeSpec& a, const SchemeSpec& b, const Corpus& c,
                                 const CheckOptions& o, Compare compare) {
  CheckReport report{std::move(property), {a.describe(), b.describe()}, true, 0, {}, {}, {}, c.bounds};
  const auto& graphs = members(c, o);
  Collector col(graphs.size());
  detail::parallel_for(graphs.size(), o.jobs, [&](std::size_t i) {
    try {
      auto pa = cluster(a, *graphs[i]);
      auto pb = cluster(b, *graphs[i]);
      if (auto failure = compare(pa, pb)) {
        ++col.failures[i];
        col.per_item[i].push_back({{graphs[i]}, std::nullopt, failure->first, failure->second});
      }
    } catch (const DomainError&) {
      ++col.skipped[i];
    }
  });
  report.statistics.emplace_back("graphs", graphs.size());
  col.merge_into(report, o.max_counterexamples);
  return report;
}

using Failure = std::optional<std::pair<std::optional<VertexSet>, std::string>>;

Failure compare_refines(const PartitionedSet& a, const PartitionedSet& b) {
  auto r = is_refinement(a, b);
  if (r.refines) return std::nullopt;
  return std::make_pair(r.violating_part, r.reason);
}

Failure compare_equal(const PartitionedSet& a, const PartitionedSet& b) {
  if (a.parts() == b.parts()) return std::nullopt;
  for (const auto& p : a.parts()) {
    if (!b.has_part(p)) return std::make_pair(std::optional<VertexSet>(p), std::string("part only in the first clustering"));
  }
  for (const auto& p : b.parts()) {
    if (!a.has_part(p)) return std::make_pair(std::optional<VertexSet>(p), std::string("part only in the second clustering"));
  }
  return std::make_pair(std::optional<VertexSet>(), std::string("clusterings differ"));
}

}  // namespace

CheckReport check_refines(const SchemeSpec& finer, const SchemeSpec& coarser, const Corpus& c, const CheckOptions& o) {
  return per_graph_comparison("refines", finer, coarser, c, o, compare_refines);
}

CheckReport check_scheme_equal(const SchemeSpec& a, const SchemeSpec& b, const Corpus& c, const CheckOptions& o) {
  return per_graph_comparison("equal", a, b, c, o, compare_equal);
}

namespace {

std::vector<GraphPtr> evaluation_graphs(const Corpus& c, const Hypergraph& g, const std::vector<Hypergraph>& extras) {
  std::vector<GraphPtr> out = c.graphs;
  out.push_back(share(g));
  for (const auto& x : extras) out.push_back(share(x));
  return out;
}

MotifSet with_motif(MotifSet r, const Hypergraph& g) {
  if (g.vertex_count() == 0) throw DomainError("cannot adjoin a graph without vertices to a representing set");
  r.motifs.push_back(g);
  return r;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

CheckReport hull_check(const MotifSet& r, const Hypergraph& g, const Corpus& c, const CheckOptions& o) {
  const auto extended = with_motif(r, g);
  CheckReport report{"hull", {}, true, 0, {}, {}, {}, c.bounds};
  const bool spanned = is_spanned(g.vertex_count(), phi_edge_sets(r, g));
  const auto graphs = evaluation_graphs(c, g, {});
  std::vector<char> differs(graphs.size(), 0);
  detail::parallel_for(graphs.size(), o.jobs, [&](std::size_t i) {
    differs[i] = phi_edge_sets(r, *graphs[i]) != phi_edge_sets(extended, *graphs[i]);
  });
  const auto differing = static_cast<std::uint64_t>(std::count(differs.begin(), differs.end(), 1));
  const bool unchanged = differing == 0;
  report.details.emplace_back("spanned", yes_no(spanned));
  report.details.emplace_back("edge_sets_unchanged", yes_no(unchanged));
  report.statistics.emplace_back("graphs", graphs.size());
  report.statistics.emplace_back("differing_graphs", differing);
  report.pass = spanned == unchanged;
  if (!report.pass) {
    if (spanned) {
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (!differs[i]) continue;
        ++report.failures;
        if (report.counterexamples.size() < o.max_counterexamples) {
          report.counterexamples.push_back({{graphs[i]}, std::nullopt, std::nullopt, "phi edge sets change although phi_R(G) is spanned"});
        }
      }
    } else {
      report.failures = 1;
      report.counterexamples.push_back({{share(g)}, std::nullopt, std::nullopt, "phi_R(G) is not spanned but adjoining G changes nothing"});
    }
  } else if (!spanned) {
    // Record where adjoining G shows up, as supporting evidence.
    for (std::size_t i = 0; i < graphs.size() && report.counterexamples.size() < 3; ++i) {
      if (differs[i]) report.counterexamples.push_back({{graphs[i]}, std::nullopt, std::nullopt, "witness: phi edge sets change"});
    }
  }
  return report;
}

CheckReport connected_hull_check(const MotifSet& r, const Hypergraph& g, OverlapThreshold k, const Corpus& c,
                                 const std::vector<Hypergraph>& extra_graphs, const CheckOptions& o) {
  auto base = SchemeSpec::representable(r, k);
  auto extended = SchemeSpec::representable(with_motif(r, g), k);
  CheckReport report{"connected-hull", {base.describe(), extended.describe()}, true, 0, {}, {}, {}, c.bounds};
  const bool connected = is_k_connected(g.vertex_count(), phi_edge_sets(r, g), k);
  const auto graphs = evaluation_graphs(c, g, extra_graphs);
  std::vector<char> differs(graphs.size(), 0);
  detail::parallel_for(graphs.size(), o.jobs, [&](std::size_t i) {
    differs[i] = cluster(base, *graphs[i]).parts() != cluster(extended, *graphs[i]).parts();
  });
  const auto differing = static_cast<std::uint64_t>(std::count(differs.begin(), differs.end(), 1));
  const bool equal = differing == 0;
  const bool forward = !equal || connected;
  const bool reverse = !connected || equal;
  const bool reverse_asserted = !k.is_infinite() && k.value() == 1;
  report.details.emplace_back("k", k.to_string());
  report.details.emplace_back("k_connected", yes_no(connected));
  report.details.emplace_back("schemes_equal", yes_no(equal));
  report.details.emplace_back("forward_holds", yes_no(forward));
  report.details.emplace_back("reverse_holds", yes_no(reverse));
  report.details.emplace_back("reverse_asserted", yes_no(reverse_asserted));
  report.statistics.emplace_back("graphs", graphs.size());
  report.statistics.emplace_back("differing_graphs", differing);
  report.pass = forward && (reverse || !reverse_asserted);
  if (!forward) {
    report.failures = 1;
    report.counterexamples.push_back({{share(g)}, std::nullopt, std::nullopt, "schemes agree but phi_R(G) is not k-ly connected"});
  }
  if (!reverse) {
    if (reverse_asserted) report.failures += differing;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (!differs[i] || report.counterexamples.size() >= o.max_counterexamples) continue;
      report.counterexamples.push_back({{graphs[i]}, std::nullopt, std::nullopt,
                                        reverse_asserted ? "schemes differ although phi_R(G) is 1-ly connected"
                                                         : "reverse direction fails here (not asserted for k > 1)"});
    }
  }
  return report;
}

bool replay(const CheckReport& report, const std::vector<SchemeSpec>& schemes, const Counterexample& ex) {
  if (ex.graphs.empty() || schemes.empty()) throw DomainError("replay needs a graph and a scheme");
  const auto& g = *ex.graphs[0];
  if (report.property == "excisive") {
    if (!ex.part) throw DomainError("excisive counterexample without a part");
    return excision_fails(schemes[0], g, *ex.part);
  }
  if (report.property == "functorial") {
    if (!ex.map || ex.graphs.size() < 2) throw DomainError("functorial counterexample without a morphism");
    return uncovered_part(cluster(schemes[0], g), cluster(schemes[0], *ex.graphs[1]), *ex.map).has_value();
  }
  if (schemes.size() < 2) throw DomainError("replay of " + report.property + " needs two schemes");
  auto a = cluster(schemes[0], g);
  auto b = cluster(schemes[1], g);
  if (report.property == "refines") return !is_refinement(a, b).refines;
  if (report.property == "equal" || report.property == "connected-hull") return a.parts() != b.parts();
  if (report.property == "hull") {
    const auto* ra = std::get_if<RepresentableScheme>(&schemes[0].variant());
    const auto* rb = std::get_if<RepresentableScheme>(&schemes[1].variant());
    if (!ra || !rb) throw DomainError("hull replay needs representable schemes");
    return phi_edge_sets(ra->motifs, g) != phi_edge_sets(rb->motifs, g);
  }
  throw DomainError("unknown property " + report.property);
}

FiniteRepWitness finite_rep_witness(const std::vector<Hypergraph>& family) {
  if (family.empty()) throw DomainError("finite_rep_witness needs at least one graph");
  std::size_t r = 0;
  for (std::size_t gi = 0; gi < family.size(); ++gi) {
    const auto& g = family[gi];
    if (!g.is_simple()) throw DomainError("graph #" + std::to_string(gi) + " is not simple");
    auto adj = adjacency_lists(g);
    std::vector<char> on_triangle(g.vertex_count(), 0);
    for (const auto& e : g.edges()) {
      const auto u = e.vertices[0];
      const auto v = e.vertices[1];
      for (auto w : adj[u]) {
        if (w != v && std::binary_search(adj[v].begin(), adj[v].end(), w)) {
          on_triangle[u] = on_triangle[v] = on_triangle[w] = 1;
        }
      }
    }
    std::vector<std::size_t> dist(g.vertex_count(), static_cast<std::size_t>(-1));
    std::deque<VertexIndex> queue;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (on_triangle[v]) {
        dist[v] = 0;
        queue.push_back(v);
      }
    }
    if (queue.empty()) throw DomainError("graph #" + std::to_string(gi) + " has no triangle");
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (auto y : adj[x]) {
        if (dist[y] == static_cast<std::size_t>(-1)) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (dist[v] == static_cast<std::size_t>(-1)) {
        throw DomainError("graph #" + std::to_string(gi) + ": vertex " + g.name(v) + " cannot reach a triangle");
      }
      r = std::max(r, dist[v]);
    }
  }
  FiniteRepWitness out;
  out.r = r;
  out.witness = tailed_triangle(r + 1);
  const auto n = out.witness.vertex_count();
  out.family_connected = is_k_connected(n, phi_edge_sets(MotifSet{family, false, false}, out.witness), OverlapThreshold(1));
  out.self_connected = is_k_connected(n, phi_edge_sets(MotifSet{{out.witness}, false, false}, out.witness), OverlapThreshold(1));
  return out;
}

namespace {

// Number of components of Λ_2 over the given edge masks whose union is `full`.
std::size_t covering_components(const std::vector<std::uint64_t>& masks, std::uint64_t full) {
  const auto m = masks.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (std::popcount(masks[i] & masks[j]) >= 2) parent[find(i)] = find(j);
    }
  }
  std::vector<std::uint64_t> unions(m, 0);
  for (std::size_t i = 0; i < m; ++i) unions[find(i)] |= masks[i];
  std::size_t covering = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (find(i) == i && unions[i] == full) ++covering;
  }
  return covering;
}

Hypergraph graph_from_masks(std::size_t n, const std::vector<std::uint64_t>& masks) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < masks.size(); ++e) {
    Edge edge{"e" + std::to_string(e + 1), {}};
    for (auto rest = masks[e]; rest; rest &= rest - 1) edge.vertices.push_back(static_cast<VertexIndex>(std::countr_zero(rest)));
    edges.push_back(std::move(edge));
  }
  return Hypergraph::from_indexed(std::move(names), std::move(edges));
}

// A permutation tau of 0..n-1 such that no two vertices within distance 2 of
// each other in tau are within distance 2 in the identity order.
std::optional<std::vector<std::uint32_t>> interleaving(std::size_t n) {
  std::vector<std::uint32_t> tau;
  std::vector<char> used(n, 0);
  auto far = [](std::uint32_t a, std::uint32_t b) { return (a > b ? a - b : b - a) > 2; };
  std::uint64_t nodes = 0;
  auto rec = [&](auto&& self) -> bool {
    if (tau.size() == n) return true;
    if (++nodes > 5'000'000) return false;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      const auto k = tau.size();
      if (k >= 1 && !far(tau[k - 1], v)) continue;
      if (k >= 2 && !far(tau[k - 2], v)) continue;
      used[v] = 1;
      tau.push_back(v);
      if (self(self)) return true;
      tau.pop_back();
      used[v] = 0;
    }
    return false;
  };
  if (rec(rec)) return tau;
  return std::nullopt;
}

}  // namespace

bool validate_equal_parts_witness(const Hypergraph& g, std::vector<std::string>* transcript) {
  auto lg = k_line_graph(g, OverlapThreshold(2));
  auto comps = line_graph_components(lg);
  std::vector<VertexSet> unions(comps.count);
  std::vector<std::vector<std::string>> members(comps.count);
  for (std::size_t i = 0; i < lg.nodes.size(); ++i) {
    const auto c = comps.component_of[i];
    unions[c] = set_union(unions[c], lg.nodes[i]);
    members[c].push_back(set_literal(g, lg.nodes[i]));
  }
  std::vector<std::size_t> covering;
  if (transcript) {
    transcript->push_back("vertices: " + std::to_string(g.vertex_count()) + ", distinct edges: " +
                          std::to_string(lg.nodes.size()) + ", 2-line graph components: " + std::to_string(comps.count));
  }
  for (std::size_t c = 0; c < comps.count; ++c) {
    const bool full = unions[c].size() == g.vertex_count();
    if (full) covering.push_back(c);
    if (transcript) {
      std::string line = "component " + std::to_string(c) + ":";
      for (const auto& m : members[c]) line += " " + m;
      line += " -> union " + set_literal(g, unions[c]) + (full ? " (all vertices)" : "");
      transcript->push_back(std::move(line));
    }
  }
  const bool ok = covering.size() >= 2 && g.vertex_count() > 0;
  if (transcript) {
    if (ok) {
      transcript->push_back("the all-vertex part of pi_2 arises from components " + std::to_string(covering[0]) +
                            " and " + std::to_string(covering[1]));
    } else {
      transcript->push_back("fewer than two components cover all vertices");
    }
  }
  return ok;
}

SearchOutcome search_equal_parts_example(const SearchBounds& b, std::uint64_t seed) {
  SearchOutcome out;
  auto accept = [&](const Hypergraph& g, const std::string& how) {
    std::vector<std::string> transcript{"found by " + how};
    if (!validate_equal_parts_witness(g, &transcript)) return false;
    out.witness = g;
    out.transcript = std::move(transcript);
    return true;
  };

  // Exhaustive part: all families of distinct edges on up to 4 vertices.
  const auto exhaustive_top = std::min<std::size_t>(b.max_vertices, 4);
  for (std::size_t n = 1; n <= exhaustive_top; ++n) {
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t m = 1; m <= full; ++m) {
      if (static_cast<std::size_t>(std::popcount(m)) <= b.max_edge_size) candidates.push_back(m);
    }
    std::vector<std::uint64_t> chosen;
    bool hit = false;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (hit) return;
      ++out.examined;
      if (covering_components(chosen, full) >= 2) {
        hit = accept(graph_from_masks(n, chosen), "exhaustive enumeration");
        return;
      }
      if (chosen.size() == b.max_edges) return;
      for (std::size_t i = from; i < candidates.size() && !hit; ++i) {
        chosen.push_back(candidates[i]);
        self(self, i + 1);
        chosen.pop_back();
      }
    };
    rec(rec, 0);
    if (hit) return out;
  }
  if (b.max_vertices <= 4) {
    out.exhaustive = true;
    out.transcript.push_back("examined every edge family on at most " + std::to_string(b.max_vertices) +
                             " vertices; no witness exists within these bounds");
    return out;
  }

  // Structured family: windows of three consecutive vertices along the identity
  // order and along an interleaving order tau.
  if (b.max_edge_size >= 3) {
    for (std::size_t n = 5; n <= b.max_vertices && n <= 64; ++n) {
      if (2 * (n - 2) > b.max_edges) break;
      ++out.examined;
      auto tau = interleaving(n);
      if (!tau) continue;
      std::vector<std::uint64_t> masks;
      for (std::size_t i = 0; i + 2 < n; ++i) masks.push_back(std::uint64_t{7} << i);
      for (std::size_t i = 0; i + 2 < n; ++i) {
        masks.push_back((std::uint64_t{1} << (*tau)[i]) | (std::uint64_t{1} << (*tau)[i + 1]) |
                        (std::uint64_t{1} << (*tau)[i + 2]));
      }
      if (accept(graph_from_masks(n, masks), "two interleaved chains of 3-sets on " + std::to_string(n) + " vertices")) {
        return out;
      }
    }
  }

  // Seeded random search.
  std::mt19937_64 rng(seed);
  const auto top = std::min<std::size_t>(b.max_vertices, 64);
  std::uniform_int_distribution<std::size_t> pick_n(5, top);
  for (std::uint64_t t = 0; t < b.random_trials; ++t) {
    const auto n = pick_n(rng);
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::uniform_int_distribution<std::size_t> pick_m(2, std::max<std::size_t>(2, b.max_edges));
    std::uniform_int_distribution<std::size_t> pick_size(2, std::max<std::size_t>(2, std::min(b.max_edge_size, n)));
    std::uniform_int_distribution<std::size_t> pick_vertex(0, n - 1);
    const auto m = pick_m(rng);
    std::vector<std::uint64_t> masks;
    for (std::size_t e = 0; e < m; ++e) {
      const auto size = pick_size(rng);
      std::uint64_t mask = 0;
      while (static_cast<std::size_t>(std::popcount(mask)) < size) mask |= std::uint64_t{1} << pick_vertex(rng);
      masks.push_back(mask);
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    ++out.examined;
    if (covering_components(masks, full) >= 2 && accept(graph_from_masks(n, masks), "random search, seed " + std::to_string(seed))) {
      return out;
    }
  }
  out.transcript.push_back("no witness found within the bounds (search above 4 vertices is not exhaustive)");
  return out;
}

}  // namespace hyperclust
