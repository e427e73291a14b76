#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wellcovered/graph.hpp"

namespace wc {

inline constexpr std::size_t kMaxSierpinskiOrder = 7;
inline constexpr std::size_t kMaxFamilyParameter = 64;

Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
/// K_{1,m} with the center at vertex 0.
Graph star(std::size_t m);

/// 3(3^{n-1}+1)/2.
std::size_t sierpinski_vertex_count(std::size_t n);

struct SierpinskiGraph {
  std::size_t order = 0;
  Graph graph;
  /// Lattice coordinates indexed by vertex; vertices are numbered in
  /// lexicographic coordinate order.
  std::vector<std::pair<long, long>> coords;
  /// Bottom-left, bottom-right, apex.
  std::array<Vertex, 3> corners{};
  /// side_paths[i] runs from corners[i] to corners[(i+1) % 3].
  std::array<std::vector<Vertex>, 3> side_paths;
  /// N[corner] for each corner; all three are the whole K3 when order is 1.
  std::array<VertexSet, 3> corner_cliques;
};

/// Gasket graph built on the integer lattice: S_1 is the triangle
/// (0,0),(2,0),(1,1) scaled by 2^{n-1}; S_{k+1} is three translated copies of
/// S_k with coincident corners merged. Requires 1 <= n <= kMaxSierpinskiOrder.
SierpinskiGraph sierpinski(std::size_t n);

/// Vertex sets of the three S_{n-1} blocks inside S_n (n >= 2), each listed
/// so that induced_subgraph(S_n, block) equals S_{n-1}.
std::array<VertexSet, 3> sierpinski_blocks(const SierpinskiGraph& s);

// Transcribed figures. Vertex labels are documented in the corpus comments.

/// Ten vertices v1..v10 mapped to 0..9: triangles {v1,v2,v3}, {v4,v5,v6} and
/// the K4 {v7..v10}, joined through v3 and v5.
Graph figure1();
/// Clique on k+2 vertices (0..k+1) with the path tail 0-(k+2)-(k+3).
Graph figure2_family(std::size_t k);
Graph figure6_g1();
Graph figure6_g2();
Graph figure6_composite();
/// Glue pairs (figure6_g2 vertex, figure6_g1 vertex) over the shared K4.
std::vector<std::pair<Vertex, Vertex>> figure6_glue();
/// perm[i] is the figure6_composite() label of vertex i of the composite that
/// scs_compose builds from figure6_g1, figure6_g2 and figure6_glue().
std::vector<Vertex> figure6_compose_relabel();

/// A corpus graph with the provenance comments written into its file.
struct NamedGraph {
  std::string name;
  Graph graph;
  std::vector<std::string> comments;
};

/// Every shipped corpus entry in a fixed order.
const std::vector<NamedGraph>& named_corpus();
std::optional<NamedGraph> find_named_graph(const std::string& name);

/// Builds a generator family by name: complete|path|cycle|star|sierpinski|
/// figure1|figure2|figure6-g1|figure6-g2|figure6, or any corpus entry name.
/// Throws PreconditionError on unknown names or out-of-range parameters.
NamedGraph generate_family(const std::string& family, const std::vector<std::size_t>& params);

}  // namespace wc
