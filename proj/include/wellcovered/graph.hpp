#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "wellcovered/bitset.hpp"

namespace wc {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex indices. Ordering is lexicographic on
/// the sorted member list, which is the canonical order for MIS lists.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}
  explicit VertexSet(std::vector<Vertex> vs);
  static VertexSet from_bits(const Bitset& bits);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;

  const std::vector<Vertex>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  Vertex operator[](std::size_t i) const noexcept { return members_[i]; }

  Bitset to_bits(std::size_t n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

/// Immutable simple connected undirected graph on vertices 0..n-1.
class Graph {
 public:
  /// Empty placeholder (order 0); only Graph::build yields usable graphs.
  Graph() = default;

  /// Builds a graph, collapsing duplicate edges given in either orientation.
  /// Throws VertexRangeError, SelfLoopError or DisconnectedGraphError.
  static Graph build(std::size_t n, std::span<const Edge> edges);
  static Graph build(std::size_t n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Edges as (min, max) pairs sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_.at(v); }
  const Bitset& adjacency(Vertex v) const { return adj_.at(v); }
  bool adjacent(Vertex u, Vertex v) const { return adj_.at(u).test(v); }
  std::size_t degree(Vertex v) const { return nbrs_.at(v).size(); }

  /// Throws VertexRangeError unless every member is below order().
  void check_range(const VertexSet& s) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<Bitset> adj_;
};

/// Connectivity of the graph described by (n, edges); edges must be in range.
bool is_connected(std::size_t n, std::span<const Edge> edges);

VertexSet neighborhood(const Graph& g, const VertexSet& s);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
inline VertexSet closed_neighborhood(const Graph& g, Vertex v) { return closed_neighborhood(g, VertexSet{v}); }

bool is_clique(const Graph& g, const VertexSet& s);

/// Vertex-induced subgraph, relabeled 0..|keep|-1 in increasing original order.
/// The caller must pass a set that induces a connected subgraph.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Vertex v of g becomes perm[v]; perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Literal clique-level simpliciality: s is a clique holding a simplicial vertex.
bool contains_simplicial_vertex(const Graph& g, const VertexSet& s);

VertexSet simplicial_vertices(const Graph& g);

struct SimplicialReport {
  VertexSet simplicial_vertices;
  /// Distinct closed neighborhoods N[v] of simplicial v, by smallest member.
  std::vector<VertexSet> cliques;
  std::size_t sc = 0;
  /// Vertices lying in at least two entries of `cliques`.
  VertexSet connection_set;
  /// per_clique_w[i] = cliques[i] ∩ connection_set.
  std::vector<VertexSet> per_clique_w;
};

SimplicialReport simplicial_report(const Graph& g);

/// Lexicographic BFS followed by a perfect-elimination-ordering check.
bool is_chordal(const Graph& g);

/// A simplicial-clique-covered graph: simplicial cliques exist and cover V.
bool is_sccg(const Graph& g);
bool is_sccg(const Graph& g, const SimplicialReport& report);

}  // namespace wc
