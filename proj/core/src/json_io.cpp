#include "hyperclust/json_io.hpp"

#include <json.hpp>

#include "hyperclust/builders.hpp"
#include "json_detail.hpp"
#include "hyperclust/scheme.hpp"

namespace hyperclust {

using nlohmann::ordered_json;

namespace detail {

ordered_json to_json_value(const Hypergraph& g) {
  ordered_json j;
  j["vertices"] = g.vertices();
  j["edges"] = ordered_json::array();
  for (const auto& e : g.edges()) {
    j["edges"].push_back({{"id", e.id}, {"vertices", g.names(e.vertices)}});
  }
  return j;
}

Hypergraph hypergraph_from_value(const ordered_json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw ParseError("hypergraph JSON needs \"vertices\" and \"edges\"");
  }
  HypergraphData d;
  try {
    d.vertices = j.at("vertices").get<std::vector<std::string>>();
    for (const auto& e : j.at("edges")) {
      d.edges.push_back({e.at("id").get<std::string>(), e.at("vertices").get<std::vector<std::string>>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("hypergraph JSON: ") + e.what());
  }
  return Hypergraph(d);
}

ordered_json to_json_value(const PartitionedSet& p) {
  ordered_json j;
  j["underlying"] = p.underlying();
  j["parts"] = p.named_parts();
  return j;
}

ordered_json parse(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const ordered_json& j, int indent) { return j.dump(indent); }

}  // namespace detail

using detail::dump;
using detail::parse;

std::string hypergraph_to_json(const Hypergraph& g, int indent) { return dump(detail::to_json_value(g), indent); }

Hypergraph hypergraph_from_json(std::string_view text) { return detail::hypergraph_from_value(parse(text)); }

std::string partition_to_json(const PartitionedSet& p, int indent) {
  return dump(detail::to_json_value(p), indent);
}

PartitionedSet partition_from_json(std::string_view text) {
  auto j = parse(text);
  try {
    return PartitionedSet::from_names(j.at("underlying").get<std::vector<std::string>>(),
                                      j.at("parts").get<std::vector<std::vector<std::string>>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("clustering JSON: ") + e.what());
  }
}

std::string morphism_to_json(const GraphMorphism& f, int indent) {
  ordered_json j;
  j["map"] = ordered_json::object();
  for (const auto& [a, b] : f.named_map()) j["map"][a] = b;
  return dump(j, indent);
}

std::map<std::string, std::string> morphism_map_from_json(std::string_view text) {
  auto j = parse(text);
  try {
    return j.at("map").get<std::map<std::string, std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("morphism JSON: ") + e.what());
  }
}

std::string phi_to_json(const PhiResult& result, int indent) {
  auto j = detail::to_json_value(result.graph);
  const auto& g = result.graph;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& prov = result.provenance[i];
    const auto& motif = result.motifs[prov.motif];
    ordered_json map = ordered_json::object();
    for (std::size_t v = 0; v < prov.map.size(); ++v) map[motif.name(static_cast<VertexIndex>(v))] = g.name(prov.map[v]);
    j["edges"][i]["provenance"] = {{"motif", prov.motif}, {"map", map}};
  }
  return dump(j, indent);
}

std::string line_graph_to_json(const LineGraph& lg, const Hypergraph& origin, int indent) {
  return hypergraph_to_json(line_graph_to_hypergraph(lg, origin), indent);
}

std::string scheme_to_json(const SchemeSpec& scheme, int indent) {
  struct Visitor {
    ordered_json operator()(const RepresentableScheme& r) const {
      ordered_json motifs = ordered_json::array();
      for (const auto& m : r.motifs.motifs) motifs.push_back(detail::to_json_value(m));
      if (r.motifs.complete_edge_family) motifs.push_back("E*");
      if (r.motifs.tailed_triangle_family) motifs.push_back("R*");
      ordered_json k = r.k.is_infinite() ? ordered_json("inf") : ordered_json(r.k.value());
      ordered_json out = {{"kind", "representable"}, {"motifs", motifs}, {"k", k}};
      if (!r.labels.empty()) out["labels"] = r.labels;
      return out;
    }
    ordered_json operator()(const SigmaScheme& s) const {
      return {{"kind", "sigma"}, {"motif", detail::to_json_value(s.motif)}};
    }
    ordered_json operator()(const ClassicScheme&) const { return {{"kind", "classic"}}; }
    ordered_json operator()(const ToySchemeSpec& t) const { return {{"kind", "toy"}, {"id", toy_name(t.id)}}; }
  };
  return dump(std::visit(Visitor{}, scheme.variant()), indent);
}

namespace {

Hypergraph motif_from_value(const ordered_json& m) {
  if (m.is_string()) return build_named(m.get<std::string>());
  return detail::hypergraph_from_value(m);
}

}  // namespace

SchemeSpec scheme_from_json(std::string_view text) {
  auto j = parse(text);
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "classic") return SchemeSpec::classic();
    if (kind == "toy") return SchemeSpec::toy(parse_toy_name(j.at("id").get<std::string>()));
    if (kind == "sigma") {
      return SchemeSpec::sigma(j.contains("motif") ? motif_from_value(j.at("motif")) : default_sigma_motif());
    }
    if (kind == "representable") {
      MotifSet set;
      std::vector<std::string> labels;
      for (const auto& m : j.at("motifs")) {
        if (m.is_string()) {
          const auto name = m.get<std::string>();
          if (name == "E*") {
            set.complete_edge_family = true;
          } else if (name == "R*") {
            set.tailed_triangle_family = true;
          } else {
            set.motifs.push_back(build_named(name));
          }
        } else {
          set.motifs.push_back(detail::hypergraph_from_value(m));
        }
      }
      const auto& k = j.at("k");
      auto threshold = k.is_string() ? OverlapThreshold::parse(k.get<std::string>())
                                     : OverlapThreshold(k.get<std::size_t>());
      if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
      return SchemeSpec::representable(std::move(set), threshold, std::move(labels));
    }
    throw ParseError("unknown scheme kind \"" + kind + "\"");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("scheme JSON: ") + e.what());
  }
}

}  // namespace hyperclust
