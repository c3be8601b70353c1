#include "hyperclust/scheme.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "hyperclust/builders.hpp"
#include "hyperclust/graph_params.hpp"
#include "hyperclust/json_io.hpp"

namespace hyperclust {

std::string toy_name(ToyScheme id) {
  switch (id) {
    case ToyScheme::always_one_part_except_k2:
      return "always_one_part_except_K2";
    case ToyScheme::component_rule:
      return "component_rule";
    case ToyScheme::noprops:
      return "noprops";
  }
  return "?";
}

ToyScheme parse_toy_name(std::string_view name) {
  if (name == "always_one_part_except_K2" || name == "always_one_part_except_k2") {
    return ToyScheme::always_one_part_except_k2;
  }
  if (name == "component_rule") return ToyScheme::component_rule;
  if (name == "noprops") return ToyScheme::noprops;
  throw DomainError("unknown toy scheme \"" + std::string(name) + "\"");
}

SchemeSpec SchemeSpec::representable(MotifSet motifs, OverlapThreshold k, std::vector<std::string> labels) {
  for (const auto& m : motifs.motifs) {
    if (m.vertex_count() == 0) throw DomainError("motif without vertices would produce an empty edge");
  }
  return SchemeSpec(RepresentableScheme{std::move(motifs), k, std::move(labels)});
}

SchemeSpec SchemeSpec::sigma(Hypergraph motif) {
  auto check = validate_sigma_motif(motif);
  if (!check.ok()) throw ValidationError(std::move(check.violations));
  return SchemeSpec(SigmaScheme{std::move(motif)});
}

SchemeSpec SchemeSpec::classic() { return SchemeSpec(ClassicScheme{}); }

SchemeSpec SchemeSpec::toy(ToyScheme id) { return SchemeSpec(ToySchemeSpec{id}); }

std::string SchemeSpec::describe() const {
  struct Visitor {
    std::string operator()(const RepresentableScheme& r) const {
      std::vector<std::string> names = r.labels;
      if (names.empty()) {
        for (std::size_t i = 0; i < r.motifs.motifs.size(); ++i) names.push_back("#" + std::to_string(i));
        if (r.motifs.complete_edge_family) names.push_back("E*");
        if (r.motifs.tailed_triangle_family) names.push_back("R*");
      }
      std::string out = "representable({";
      for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
      return out + "},k=" + r.k.to_string() + ")";
    }
    std::string operator()(const SigmaScheme& s) const {
      return s.motif == default_sigma_motif() ? "sigma(D)" : "sigma(custom)";
    }
    std::string operator()(const ClassicScheme&) const { return "classic"; }
    std::string operator()(const ToySchemeSpec& t) const { return "toy:" + toy_name(t.id); }
  };
  return std::visit(Visitor{}, v_);
}

PartitionedSet classic_cluster(const Hypergraph& g) {
  if (!g.is_simple()) throw DomainError("classic requires simple graph");
  auto comps = connected_components(g);
  std::vector<VertexSet> parts;
  for (const auto& p : comps.parts()) {
    if (p.size() > 1) parts.push_back(p);
  }
  return PartitionedSet(g.vertices(), std::move(parts));
}

namespace {

bool is_k2(const Hypergraph& g) { return g.vertex_count() == 2 && g.edge_count() == 1 && g.is_simple(); }

bool is_two_k2(const Hypergraph& g) {
  if (g.vertex_count() != 4 || g.edge_count() != 2 || !g.is_simple()) return false;
  return intersection_size(g.edges()[0].vertices, g.edges()[1].vertices) == 0;
}

PartitionedSet single_part(const Hypergraph& g) { return PartitionedSet(g.vertices(), {g.all_vertices()}); }

PartitionedSet singletons(const Hypergraph& g) {
  std::vector<VertexSet> parts;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) parts.push_back({v});
  return PartitionedSet(g.vertices(), std::move(parts));
}

// Loops dropped, parallel edges merged.
Hypergraph underlying_simple(const Hypergraph& g) {
  std::vector<Edge> edges;
  for (const auto& s : g.edge_sets()) {
    if (s.size() == 2) edges.push_back({"e" + std::to_string(edges.size() + 1), s});
  }
  return Hypergraph::from_indexed(g.vertices(), std::move(edges));
}

PartitionedSet component_rule(const Hypergraph& g) {
  if (g.max_edge_size() > 2) return single_part(g);
  auto simple = underlying_simple(g);
  const bool whole_is_k2 = is_k2(simple);
  std::vector<VertexSet> parts;
  const auto components = connected_components(simple);
  for (const auto& p : components.parts()) {
    if (p.size() == 2 && whole_is_k2) {
      parts.push_back({p[0]});
      parts.push_back({p[1]});
    } else {
      parts.push_back(p);
    }
  }
  return PartitionedSet(g.vertices(), std::move(parts));
}

}  // namespace

PartitionedSet toy_cluster(ToyScheme id, const Hypergraph& g) {
  switch (id) {
    case ToyScheme::always_one_part_except_k2:
      return is_k2(g) ? singletons(g) : single_part(g);
    case ToyScheme::component_rule:
      return component_rule(g);
    case ToyScheme::noprops:
      if (is_k2(g)) return singletons(g);
      if (is_two_k2(g)) return PartitionedSet(g.vertices(), g.edge_sets());
      return single_part(g);
  }
  throw DomainError("unknown toy scheme");
}

namespace {

SigmaGraph build_sigma_graph(const Hypergraph& motif, const Hypergraph& g) {
  std::map<VertexSet, std::set<VertexSet>> labelled;
  VertexSet img;
  for_each_embedding(motif, g, [&](std::span<const VertexIndex> map) {
    img.assign(map.begin(), map.end());
    normalize(img);
    auto& labels = labelled[img];
    for (const auto& s : motif.edge_sets()) labels.insert(image(s, map));
    return true;
  });
  SigmaGraph out;
  std::map<VertexSet, std::vector<std::size_t>> holders;
  for (auto& [node, labels] : labelled) {
    const auto i = out.graph.nodes.size();
    out.graph.nodes.push_back(node);
    out.labels.emplace_back(labels.begin(), labels.end());
    for (const auto& l : labels) holders[l].push_back(i);
  }
  out.graph.adjacency.assign(out.graph.nodes.size(), {});
  for (const auto& [label, nodes] : holders) {
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      for (std::size_t b = a + 1; b < nodes.size(); ++b) {
        out.graph.adjacency[nodes[a]].push_back(nodes[b]);
        out.graph.adjacency[nodes[b]].push_back(nodes[a]);
      }
    }
  }
  for (auto& adj : out.graph.adjacency) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  return out;
}

}  // namespace

SigmaGraph sigma_graph(const Hypergraph& motif, const Hypergraph& g) {
  auto check = validate_sigma_motif(motif);
  if (!check.ok()) throw DomainError("invalid sigma motif: " + check.violations.front());
  return build_sigma_graph(motif, g);
}

PartitionedSet sigma_cluster(const Hypergraph& motif, const Hypergraph& g) {
  auto sg = build_sigma_graph(motif, g);
  auto comps = line_graph_components(sg.graph);
  std::vector<VertexSet> parts(comps.count);
  for (std::size_t i = 0; i < sg.graph.nodes.size(); ++i) {
    auto& p = parts[comps.component_of[i]];
    p = set_union(p, sg.graph.nodes[i]);
  }
  return PartitionedSet(g.vertices(), std::move(parts));
}

ValidationResult validate_sigma_motif(const Hypergraph& d) {
  ValidationResult result;
  if (d.edge_count() != 3) {
    result.fail("needs exactly 3 edges (has " + std::to_string(d.edge_count()) + ")");
  }
  try {
    auto f1 = glued_chain(d, 1);
    const long expected = 2 * static_cast<long>(d.vertex_count()) - 3;
    if (static_cast<long>(f1.vertex_count()) != expected) {
      result.fail("F_1 has " + std::to_string(f1.vertex_count()) + " vertices, expected " + std::to_string(expected));
    }
    auto on_f1 = sigma_cluster(d, f1);
    if (on_f1.parts() != std::vector<VertexSet>{f1.all_vertices()}) {
      result.fail("sigma does not cluster F_1 as a single all-vertex part");
    }
  } catch (const Error& e) {
    result.fail(std::string("F_1 check failed: ") + e.what());
  }
  try {
    auto glued = corner_glue(d);
    auto maximal = remove_spurious(sigma_cluster(d, glued));
    if (maximal.parts().size() != 2) {
      result.fail("sigma gives corner_glue " + std::to_string(maximal.parts().size()) +
                  " maximal parts, expected 2");
    }
    MotifSet single{{d}, false, false};
    if (!is_k_connected(glued.vertex_count(), phi_edge_sets(single, glued), OverlapThreshold(3))) {
      result.fail("phi_D(corner_glue) is not 3-ly connected");
    }
  } catch (const Error& e) {
    result.fail(std::string("corner_glue check failed: ") + e.what());
  }
  return result;
}

PartitionedSet cluster(const SchemeSpec& scheme, const Hypergraph& g) {
  struct Visitor {
    const Hypergraph& g;
    PartitionedSet operator()(const RepresentableScheme& r) const {
      return pi_k(g.vertices(), phi_edge_sets(r.motifs, g), r.k);
    }
    PartitionedSet operator()(const SigmaScheme& s) const { return sigma_cluster(s.motif, g); }
    PartitionedSet operator()(const ClassicScheme&) const { return classic_cluster(g); }
    PartitionedSet operator()(const ToySchemeSpec& t) const { return toy_cluster(t.id, g); }
  };
  return std::visit(Visitor{g}, scheme.variant());
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on commas outside parentheses; braces are ignored entirely.
std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '{' || c == '}') continue;
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.emplace_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!trim(current).empty()) out.emplace_back(trim(current));
  return out;
}

}  // namespace

MotifSet parse_motif_list(std::string_view text, std::vector<std::string>* labels) {
  MotifSet set;
  for (const auto& item : split_top_level(text)) {
    if (item.empty()) continue;
    if (labels) labels->push_back(item);
    if (item == "E*") {
      set.complete_edge_family = true;
    } else if (item == "R*") {
      set.tailed_triangle_family = true;
    } else {
      set.motifs.push_back(build_named(item));
    }
  }
  return set;
}

SchemeSpec parse_scheme(std::string_view text) {
  auto s = trim(text);
  if (!s.empty() && s.front() == '{') return scheme_from_json(s);
  if (s == "classic") return SchemeSpec::classic();
  if (s == "sigma") return SchemeSpec::sigma(default_sigma_motif());
  if (s.starts_with("sigma:")) return SchemeSpec::sigma(build_named(s.substr(6)));
  if (s.starts_with("toy:")) return SchemeSpec::toy(parse_toy_name(trim(s.substr(4))));
  if (s.starts_with("representable:")) {
    auto body = s.substr(std::string_view("representable:").size());
    std::optional<OverlapThreshold> k;
    std::string motif_text;
    for (const auto& item : split_top_level(body)) {
      if (item.starts_with("k=")) {
        k = OverlapThreshold::parse(item.substr(2));
      } else {
        if (!motif_text.empty()) motif_text += ',';
        motif_text += item;
      }
    }
    if (!k) throw DomainError("representable scheme needs k=<threshold>");
    std::vector<std::string> labels;
    auto motifs = parse_motif_list(motif_text, &labels);
    return SchemeSpec::representable(std::move(motifs), *k, std::move(labels));
  }
  throw DomainError("unknown scheme \"" + std::string(s) + "\"");
}

}  // namespace hyperclust
