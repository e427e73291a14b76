#include "wellcovered/graph.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "wellcovered/errors.hpp"

namespace wc {

VertexSet::VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_bits(const Bitset& bits) {
  VertexSet s;
  s.members_.reserve(bits.count());
  bits.for_each([&](std::size_t v) { s.members_.push_back(v); });
  return s;
}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

Bitset VertexSet::to_bits(std::size_t n) const {
  Bitset b(n);
  for (Vertex v : members_) b.set(v);
  return b;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

bool is_connected(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) return false;
  std::vector<std::vector<Vertex>> nbrs(n);
  for (auto [u, v] : edges) {
    nbrs[u].push_back(v);
    nbrs[v].push_back(u);
  }
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : nbrs[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw DisconnectedGraphError("graph must have at least one vertex");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw VertexRangeError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} has an endpoint outside 0.." +
                             std::to_string(n - 1));
    if (u == v) throw SelfLoopError("self-loop at vertex " + std::to_string(u));
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  if (!is_connected(n, g.edges_)) throw DisconnectedGraphError("graph on " + std::to_string(n) + " vertices is disconnected");

  g.nbrs_.assign(n, {});
  g.adj_.assign(n, Bitset(n));
  for (auto [u, v] : g.edges_) {
    g.nbrs_[u].push_back(v);
    g.nbrs_[v].push_back(u);
    g.adj_[u].set(v);
    g.adj_[v].set(u);
  }
  for (auto& row : g.nbrs_) std::sort(row.begin(), row.end());
  return g;
}

void Graph::check_range(const VertexSet& s) const {
  if (!s.empty() && s.members().back() >= n_)
    throw VertexRangeError("vertex " + std::to_string(s.members().back()) + " outside 0.." + std::to_string(n_ - 1));
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  g.check_range(s);
  Bitset acc(g.order());
  for (Vertex v : s) acc |= g.adjacency(v);
  return VertexSet::from_bits(acc);
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  g.check_range(s);
  Bitset acc(g.order());
  for (Vertex v : s) {
    acc |= g.adjacency(v);
    acc.set(v);
  }
  return VertexSet::from_bits(acc);
}

bool is_clique(const Graph& g, const VertexSet& s) {
  g.check_range(s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  g.check_range(keep);
  std::vector<Vertex> index(g.order(), g.order());
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = i;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (index[u] < g.order() && index[v] < g.order()) edges.emplace_back(index[u], index[v]);
  return Graph::build(keep.size(), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw DimensionMismatchError("relabel: permutation length differs from order");
  std::vector<bool> seen(g.order(), false);
  for (Vertex v : perm) {
    if (v >= g.order() || seen[v]) throw PreconditionError("relabel: not a permutation");
    seen[v] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::build(g.order(), edges);
}

}  // namespace wc
