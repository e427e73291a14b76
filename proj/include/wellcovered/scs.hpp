#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wellcovered/errors.hpp"
#include "wellcovered/graph.hpp"
#include "wellcovered/mis.hpp"

namespace wc {

/// Two graphs and a glue map pairing (G2 vertex, G1 vertex) over the shared
/// clique.
struct ScsSpec {
  Graph g1;
  Graph g2;
  std::vector<std::pair<Vertex, Vertex>> glue;
};

/// Which condition of a simplicial clique sum failed.
enum class ScsClause {
  glue,               // glue map not injective, out of range, or not a clique on either side
  simplicial_in_g1,   // clause 1: shared set is not N[v] of a simplicial v of G1
  simplicial_in_g2,   // clause 2: same for G2
  simplicial_in_sum,  // clause 3: same for the composite
  cross_edges,        // an edge joins the two non-shared parts
};

const char* clause_name(ScsClause c) noexcept;

class ScsValidationError : public Error {
 public:
  ScsValidationError(ScsClause clause, const std::string& message)
      : Error(std::string(clause_name(clause)) + ": " + message), clause_(clause) {}
  ScsClause clause() const noexcept { return clause_; }

 private:
  ScsClause clause_;
};

/// The composite keeps G1's labels; G2's non-shared vertices follow in
/// increasing G2 order.
struct ScsComposite {
  Graph graph;
  VertexSet shared;                // composite labels of the shared clique
  std::vector<Vertex> from_g1;     // G1 vertex -> composite vertex
  std::vector<Vertex> from_g2;     // G2 vertex -> composite vertex
  std::vector<std::string> comments;
};

/// True iff s equals N[v] for some simplicial vertex v of g.
bool is_simplicial_clique(const Graph& g, const VertexSet& s);

/// Builds and validates the clique sum. Throws ScsValidationError.
ScsComposite scs_compose(const ScsSpec& spec);

struct ScsSplit {
  ScsSpec spec;
  VertexSet shared;                // labels in the split graph
  VertexSet side1;                 // split-graph vertices forming G1
  VertexSet side2;                 // split-graph vertices forming G2
};

/// Searches the simplicial cliques of g in report order for one whose removal
/// disconnects g; the parts are grouped so the component with the smallest
/// vertex lands in G1. Throws ResourceLimitError past max_components.
std::optional<ScsSplit> scs_split(const Graph& g, std::size_t max_components = 20);
std::vector<ScsSplit> scs_split_all(const Graph& g, std::size_t max_components = 20);

struct ScsCount {
  std::vector<Vertex> shared_g1;   // v_i in G1 labels, increasing
  std::vector<std::uint64_t> l;    // MISs of G1 containing v_i
  std::vector<std::uint64_t> m;    // MISs of G2 containing the preimage of v_i
  std::uint64_t total = 0;         // sum l_i * m_i
};

/// Validates the sum first; throws ScsValidationError.
ScsCount scs_mis_count(const ScsSpec& spec, std::size_t mis_cap = kDefaultMisCap);

}  // namespace wc
