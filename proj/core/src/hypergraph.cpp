#include "hyperclust/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace hyperclust {

bool is_valid_vertex_name(std::string_view name) {
  if (name.empty()) return false;
  for (unsigned char c : name) {
    if (c <= 0x20 || c == 0x7f) return false;
  }
  return true;
}

ValidationResult validate_hypergraph(const HypergraphData& data) {
  ValidationResult result;
  std::set<std::string> seen;
  for (const auto& v : data.vertices) {
    if (!is_valid_vertex_name(v)) result.fail("invalid vertex name \"" + v + "\"");
    if (!seen.insert(v).second) result.fail("duplicate vertex " + v);
  }
  std::set<std::string> ids;
  for (const auto& e : data.edges) {
    if (e.id.empty()) result.fail("edge with empty id");
    if (!ids.insert(e.id).second) result.fail("duplicate edge id " + e.id);
    if (e.vertices.empty()) result.fail("edge " + e.id + " is empty");
    std::set<std::string> members;
    for (const auto& v : e.vertices) {
      if (!seen.contains(v)) result.fail("edge " + e.id + " references unknown vertex " + v);
      if (!members.insert(v).second) result.fail("edge " + e.id + " lists vertex " + v + " twice");
    }
  }
  return result;
}

Hypergraph::Hypergraph(const HypergraphData& data) {
  auto check = validate_hypergraph(data);
  if (!check.ok()) throw ValidationError(std::move(check.violations));
  vertices_ = data.vertices;
  std::sort(vertices_.begin(), vertices_.end());
  edges_.reserve(data.edges.size());
  for (const auto& e : data.edges) {
    Edge edge{e.id, {}};
    edge.vertices.reserve(e.vertices.size());
    for (const auto& v : e.vertices) edge.vertices.push_back(index_of(v));
    normalize(edge.vertices);
    edges_.push_back(std::move(edge));
  }
  finalize();
}

Hypergraph Hypergraph::from_indexed(std::vector<std::string> vertices, std::vector<Edge> edges) {
  std::vector<VertexIndex> order(vertices.size());
  for (VertexIndex i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](VertexIndex a, VertexIndex b) { return vertices[a] < vertices[b]; });
  std::vector<VertexIndex> position(vertices.size());
  for (VertexIndex i = 0; i < order.size(); ++i) position[order[i]] = i;

  ValidationResult check;
  Hypergraph g;
  g.vertices_.reserve(vertices.size());
  for (auto i : order) g.vertices_.push_back(std::move(vertices[i]));
  for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
    if (!is_valid_vertex_name(g.vertices_[i])) check.fail("invalid vertex name \"" + g.vertices_[i] + "\"");
    if (i > 0 && g.vertices_[i] == g.vertices_[i - 1]) check.fail("duplicate vertex " + g.vertices_[i]);
  }
  std::unordered_set<std::string> ids;
  for (auto& e : edges) {
    if (e.vertices.empty()) check.fail("edge " + e.id + " is empty");
    if (!ids.insert(e.id).second) check.fail("duplicate edge id " + e.id);
    for (auto& v : e.vertices) {
      if (v >= position.size()) {
        check.fail("edge " + e.id + " references unknown vertex #" + std::to_string(v));
        v = 0;
      } else {
        v = position[v];
      }
    }
    auto before = e.vertices.size();
    normalize(e.vertices);
    if (e.vertices.size() != before) check.fail("edge " + e.id + " repeats a vertex");
  }
  if (!check.ok()) throw ValidationError(std::move(check.violations));
  g.edges_ = std::move(edges);
  g.finalize();
  return g;
}

void Hypergraph::finalize() {
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  edge_sets_.clear();
  edge_sets_.reserve(edges_.size());
  for (const auto& e : edges_) edge_sets_.push_back(e.vertices);
  std::sort(edge_sets_.begin(), edge_sets_.end());
  edge_sets_.erase(std::unique(edge_sets_.begin(), edge_sets_.end()), edge_sets_.end());
}

std::optional<VertexIndex> Hypergraph::find(std::string_view name) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == vertices_.end() || *it != name) return std::nullopt;
  return static_cast<VertexIndex>(it - vertices_.begin());
}

VertexIndex Hypergraph::index_of(std::string_view name) const {
  auto i = find(name);
  if (!i) throw DomainError("vertex " + std::string(name) + " is not in the graph");
  return *i;
}

std::vector<std::string> Hypergraph::names(const VertexSet& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (auto v : s) out.push_back(vertices_.at(v));
  return out;
}

VertexSet Hypergraph::indices(const std::vector<std::string>& names) const {
  VertexSet out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(index_of(n));
  normalize(out);
  return out;
}

VertexSet Hypergraph::all_vertices() const {
  VertexSet out(vertices_.size());
  for (VertexIndex i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

bool Hypergraph::has_edge_set(const VertexSet& s) const {
  return std::binary_search(edge_sets_.begin(), edge_sets_.end(), s);
}

std::size_t Hypergraph::max_edge_size() const noexcept {
  std::size_t m = 0;
  for (const auto& s : edge_sets_) m = std::max(m, s.size());
  return m;
}

bool Hypergraph::is_simple() const noexcept {
  if (edge_sets_.size() != edges_.size()) return false;
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.vertices.size() == 2; });
}

HypergraphData Hypergraph::data() const {
  HypergraphData d;
  d.vertices = vertices_;
  for (const auto& e : edges_) d.edges.push_back({e.id, names(e.vertices)});
  return d;
}

std::string set_literal(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out + "}";
}

std::string set_literal(const Hypergraph& g, const VertexSet& s) { return set_literal(g.names(s)); }

ValidationResult validate_graph_morphism(const Hypergraph& source, const Hypergraph& target,
                                         std::span<const VertexIndex> map) {
  ValidationResult result;
  if (map.size() != source.vertex_count()) {
    result.fail("map is not total on source vertices");
    return result;
  }
  std::vector<char> hit(target.vertex_count(), 0);
  for (VertexIndex v = 0; v < map.size(); ++v) {
    if (map[v] >= target.vertex_count()) {
      result.fail("vertex " + source.name(v) + " maps outside the target");
      return result;
    }
    if (hit[map[v]]) {
      result.fail("not injective: " + target.name(map[v]) + " is hit twice");
      return result;
    }
    hit[map[v]] = 1;
  }
  for (const auto& e : source.edges()) {
    auto img = image(e.vertices, map);
    if (!target.has_edge_set(img)) {
      result.fail("image of edge " + e.id + " = " + set_literal(target, img) + " is not an edge of the target");
    }
  }
  return result;
}

ValidationResult validate_graph_morphism(const Hypergraph& source, const Hypergraph& target,
                                         const std::map<std::string, std::string>& map) {
  ValidationResult result;
  std::vector<VertexIndex> idx(source.vertex_count());
  for (VertexIndex v = 0; v < source.vertex_count(); ++v) {
    auto it = map.find(source.name(v));
    if (it == map.end()) {
      result.fail("map is not total: " + source.name(v) + " has no image");
      continue;
    }
    auto t = target.find(it->second);
    if (!t) {
      result.fail("vertex " + it->second + " is not in the target");
      continue;
    }
    idx[v] = *t;
  }
  for (const auto& [k, _] : map) {
    if (!source.find(k)) result.fail("map mentions unknown source vertex " + k);
  }
  if (!result.ok()) return result;
  return validate_graph_morphism(source, target, idx);
}

namespace {

std::vector<VertexIndex> resolve(const Hypergraph& source, const Hypergraph& target,
                                 const std::map<std::string, std::string>& map) {
  auto check = validate_graph_morphism(source, target, map);
  if (!check.ok()) throw ValidationError(std::move(check.violations));
  std::vector<VertexIndex> idx(source.vertex_count());
  for (VertexIndex v = 0; v < idx.size(); ++v) idx[v] = target.index_of(map.at(source.name(v)));
  return idx;
}

}  // namespace

GraphMorphism::GraphMorphism(GraphPtr source, GraphPtr target, std::vector<VertexIndex> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  auto check = validate_graph_morphism(*source_, *target_, map_);
  if (!check.ok()) throw ValidationError(std::move(check.violations));
}

GraphMorphism::GraphMorphism(GraphPtr source, GraphPtr target, const std::map<std::string, std::string>& map)
    : source_(std::move(source)), target_(std::move(target)), map_(resolve(*source_, *target_, map)) {}

GraphMorphism GraphMorphism::identity(const GraphPtr& g) {
  return trusted(g, g, g->all_vertices());
}

GraphMorphism GraphMorphism::trusted(GraphPtr source, GraphPtr target, std::vector<VertexIndex> map) {
  GraphMorphism m;
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.map_ = std::move(map);
  return m;
}

std::map<std::string, std::string> GraphMorphism::named_map() const {
  std::map<std::string, std::string> out;
  for (VertexIndex v = 0; v < map_.size(); ++v) out.emplace(source_->name(v), target_->name(map_[v]));
  return out;
}

GraphMorphism compose_morphisms(const GraphMorphism& f, const GraphMorphism& g) {
  if (f.target_ptr() != g.source_ptr() && !(f.target() == g.source())) {
    throw CompositionError("cannot compose: target of the first morphism is not the source of the second");
  }
  std::vector<VertexIndex> map(f.map().size());
  for (VertexIndex v = 0; v < map.size(); ++v) map[v] = g.map()[f.map()[v]];
  return GraphMorphism::trusted(f.source_ptr(), g.target_ptr(), std::move(map));
}

Hypergraph restricted_graph(const Hypergraph& g, const VertexSet& p) {
  // p is sorted, so positions in p preserve name order and indices stay valid.
  std::vector<VertexIndex> local(g.vertex_count(), static_cast<VertexIndex>(-1));
  for (VertexIndex j = 0; j < p.size(); ++j) local[p[j]] = j;
  std::vector<std::string> names;
  names.reserve(p.size());
  for (auto v : p) names.push_back(g.name(v));
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (!is_subset(e.vertices, p)) continue;
    Edge r{e.id, {}};
    r.vertices.reserve(e.vertices.size());
    for (auto v : e.vertices) r.vertices.push_back(local[v]);
    edges.push_back(std::move(r));
  }
  return Hypergraph::from_indexed(std::move(names), std::move(edges));
}

Restriction restrict(const GraphPtr& g, const VertexSet& p) {
  for (auto v : p) {
    if (v >= g->vertex_count()) throw DomainError("restriction set is not a subset of the vertex set");
  }
  VertexSet sorted = p;
  normalize(sorted);
  auto sub = share(restricted_graph(*g, sorted));
  std::vector<VertexIndex> map(sorted.begin(), sorted.end());
  return {sub, GraphMorphism::trusted(sub, g, std::move(map))};
}

Restriction restrict(const GraphPtr& g, const std::vector<std::string>& p) {
  VertexSet idx;
  for (const auto& name : p) {
    auto v = g->find(name);
    if (!v) throw DomainError("restriction set is not a subset of the vertex set: " + name);
    idx.push_back(*v);
  }
  return restrict(g, idx);
}

}  // namespace hyperclust
