#include <algorithm>
#include <vector>

#include "wellcovered/graph.hpp"

namespace wc {

namespace {

bool closed_neighborhood_is_clique(const Graph& g, Vertex v) {
  const auto& nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    const Bitset& row = g.adjacency(nb[i]);
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!row.test(nb[j])) return false;
  }
  return true;
}

}  // namespace

VertexSet simplicial_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (closed_neighborhood_is_clique(g, v)) out.push_back(v);
  return VertexSet(std::move(out));
}

bool contains_simplicial_vertex(const Graph& g, const VertexSet& s) {
  if (!is_clique(g, s)) return false;
  return std::any_of(s.begin(), s.end(), [&](Vertex v) { return closed_neighborhood_is_clique(g, v); });
}

SimplicialReport simplicial_report(const Graph& g) {
  SimplicialReport r;
  r.simplicial_vertices = simplicial_vertices(g);
  for (Vertex v : r.simplicial_vertices) r.cliques.push_back(closed_neighborhood(g, v));
  std::sort(r.cliques.begin(), r.cliques.end());
  r.cliques.erase(std::unique(r.cliques.begin(), r.cliques.end()), r.cliques.end());
  r.sc = r.cliques.size();

  std::vector<std::size_t> hits(g.order(), 0);
  for (const auto& c : r.cliques)
    for (Vertex v : c) ++hits[v];
  std::vector<Vertex> w;
  for (Vertex v = 0; v < g.order(); ++v)
    if (hits[v] >= 2) w.push_back(v);
  r.connection_set = VertexSet(std::move(w));
  for (const auto& c : r.cliques) r.per_clique_w.push_back(set_intersection(c, r.connection_set));
  return r;
}

bool is_sccg(const Graph& g, const SimplicialReport& report) {
  if (report.sc == 0) return false;
  std::vector<bool> covered(g.order(), false);
  for (const auto& c : report.cliques)
    for (Vertex v : c) covered[v] = true;
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

bool is_sccg(const Graph& g) { return is_sccg(g, simplicial_report(g)); }

}  // namespace wc
