#include <algorithm>
#include <vector>

#include "wellcovered/graph.hpp"

namespace wc {

namespace {

// Visit order produced by lexicographic BFS. Labels are compared as
// sequences of decreasing visit stamps; ties break toward the smaller index.
std::vector<Vertex> lex_bfs(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> label(n);
  std::vector<bool> visited(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (best == n || label[v] > label[best]) best = v;
    }
    visited[best] = true;
    order.push_back(best);
    for (Vertex w : g.neighbors(best))
      if (!visited[w]) label[w].push_back(n - step);
  }
  return order;
}

}  // namespace

bool is_chordal(const Graph& g) {
  const std::size_t n = g.order();
  const auto visit = lex_bfs(g);
  // Elimination order is the reverse of the visit order.
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[visit[n - 1 - i]] = i;

  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> later;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v]) later.push_back(w);
    if (later.empty()) continue;
    Vertex parent = *std::min_element(later.begin(), later.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
    for (Vertex w : later)
      if (w != parent && !g.adjacent(parent, w)) return false;
  }
  return true;
}

}  // namespace wc
