#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hyperclust/hypergraph.hpp"

namespace hyperclust {

// Vertex naming is fixed per builder so golden tests stay byte-stable:
//   E_n, K_n, C_n, P_n   vertices "1".."n"
//   R_i                  triangle "a","b","c"; tail "t1".."ti" hanging off "c"
//   D                    vertices "1".."6", edges {1,2,3},{1,4,5},{2,4,6}
//   F_i(D), corner_glue  vertices numbered "1".. in order of first appearance
//   disjoint_union       left vertices prefixed "a.", right vertices "b."

Hypergraph complete_edge(std::size_t n);
Hypergraph complete_graph(std::size_t n);
Hypergraph cycle_graph(std::size_t n);
Hypergraph path_graph(std::size_t n);
Hypergraph tailed_triangle(std::size_t tail);
Hypergraph default_sigma_motif();

/// i+1 copies of d; copy j+1's first edge (by id) is identified with copy j's
/// last edge, matching vertices in sorted order. The shared edge is kept once.
Hypergraph glued_chain(const Hypergraph& d, std::size_t i);

/// Two copies of d identified on the vertices that lie in exactly one edge.
Hypergraph corner_glue(const Hypergraph& d);

Hypergraph disjoint_union(const Hypergraph& left, const Hypergraph& right);

/// Vertices of d that belong to exactly one edge.
VertexSet private_vertices(const Hypergraph& d);

// Fixed example graphs.
Hypergraph scandalous_g();          // v1..v8, edges v1v2vi (i>2) and v3v4vj (j=5,6,7)
Hypergraph scandalous_h();          // scandalous_g plus v1v2v3v4 and v5v6v7v8
Hypergraph hull_motif();            // G_4: 1..4, edges {1,2,3},{2,3,4}
Hypergraph hull_host();             // H_6: v1..v6, {v1,v3,v4},{v2,v3,v4},{v3,v5,v6},{v4,v5,v6}
Hypergraph overlapping_parts_graph();  // {v1,v2,a},{v1,v2,b},{v1,v2,c},{a,b,c}

/// Parses a builder descriptor:
///   K<n> E<n> C<n> P<n> R<i> D F<i> F<i>(X) corner_glue corner_glue(X)
///   G4 H6 scandalous_G scandalous_H overlap union(X,Y)
/// An underscore between the family letter and the number is accepted (K_3).
/// DomainError on unknown names or out-of-range parameters.
Hypergraph build_named(std::string_view descriptor);

std::vector<std::string> builtin_descriptors();

}  // namespace hyperclust
