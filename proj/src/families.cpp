#include "wellcovered/families.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "wellcovered/errors.hpp"

namespace wc {

namespace {

using Point = std::pair<long, long>;

void require(bool ok, const std::string& msg) {
  if (!ok) throw PreconditionError(msg);
}

// Builds a graph from 1-based figure labels.
Graph from_labels(std::size_t n, std::initializer_list<std::pair<int, int>> labeled) {
  std::vector<Edge> edges;
  for (auto [a, b] : labeled) edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
  return Graph::build(n, edges);
}

void collect_triangles(std::size_t level, long dx, long dy, std::vector<std::array<Point, 3>>& out) {
  if (level == 1) {
    out.push_back({Point{dx, dy}, Point{dx + 2, dy}, Point{dx + 1, dy + 1}});
    return;
  }
  const long half = 1L << (level - 1);  // width of one S_{level-1} block
  collect_triangles(level - 1, dx, dy, out);
  collect_triangles(level - 1, dx + half, dy, out);
  collect_triangles(level - 1, dx + half / 2, dy + half / 2, out);
}

std::vector<std::string> labels_comment(const std::string& prefix, std::size_t count, std::size_t first_label = 1) {
  std::string line = "# labels:";
  for (std::size_t i = 0; i < count; ++i)
    line += " " + prefix + std::to_string(first_label + i) + "=" + std::to_string(i);
  return {line};
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Six-vertex SCCG of the edge-modification example (labels w1..w6) plus
// optional extra edges.
Graph edge_mod(std::initializer_list<std::pair<int, int>> extra) {
  std::vector<Edge> edges;
  for (auto [a, b] : {std::pair{4, 1}, {1, 2}, {2, 3}, {5, 1}, {5, 4}, {6, 3}, {6, 2}})
    edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
  for (auto [a, b] : extra) edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
  return Graph::build(6, edges);
}

std::vector<NamedGraph> build_corpus() {
  std::vector<NamedGraph> c;
  for (std::size_t n = 1; n <= 5; ++n)
    c.push_back({"complete-" + std::to_string(n), complete(n), {"# complete graph K" + std::to_string(n)}});
  for (std::size_t n = 2; n <= 9; ++n)
    c.push_back({"path-" + std::to_string(n), path(n), {"# path P" + std::to_string(n) + " on 0..n-1"}});
  for (std::size_t n = 4; n <= 12; ++n)
    c.push_back({"cycle-" + std::to_string(n), cycle(n), {"# cycle C" + std::to_string(n) + " on 0..n-1"}});
  for (std::size_t m : {3, 4})
    c.push_back({"star-" + std::to_string(m), star(m), {"# star K_{1," + std::to_string(m) + "}, center 0"}});

  c.push_back({"figure1", figure1(),
               concat({"# figure 1: SCCG with sc=3 and empty connection set",
                       "# simplicial cliques {v1,v2,v3}, {v4,v5,v6}, {v7,v8,v9,v10}"},
                      labels_comment("v", 10))});
  for (std::size_t k = 1; k <= 5; ++k)
    c.push_back({"figure2-k" + std::to_string(k), figure2_family(k),
                 {"# figure 2 family member k=" + std::to_string(k) + ": K" + std::to_string(k + 2) +
                      " on 0.." + std::to_string(k + 1) + " with tail 0-" + std::to_string(k + 2) + "-" +
                      std::to_string(k + 3)}});
  c.push_back({"figure6-g1", figure6_g1(),
               concat({"# figure 6 left: non-chordal SCCG (red)", "# shared K4 {w2,w3,w6,w7}"}, labels_comment("w", 7))});
  c.push_back({"figure6-g2", figure6_g2(),
               {"# figure 6 middle: chordal non-SCCG (black)", "# shared K4 {w2,w3,w6,w10}",
                "# labels: w2=0 w3=1 w6=2 w7=3 w8=4 w9=5 w10=6"}});
  c.push_back({"figure6", figure6_composite(),
               concat({"# figure 6 bottom: SCS of figure6-g1 and figure6-g2 over the yellow K4 {w2,w3,w6,w10}",
                       "# figure6-g1 w7 is w10 here; figure6-g2 keeps its labels"},
                      labels_comment("w", 10))});
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto s = sierpinski(n);
    c.push_back({"sierpinski-" + std::to_string(n), s.graph,
                 {"# Sierpinski gasket graph S" + std::to_string(n) + ", vertices in lexicographic lattice order",
                  "# corners " + std::to_string(s.corners[0]) + " " + std::to_string(s.corners[1]) + " " +
                      std::to_string(s.corners[2])}});
  }

  const std::vector<std::string> edge_mod_labels = labels_comment("w", 6);
  c.push_back({"edge-mod-base", edge_mod({}),
               concat({"# edge-modification example: triangles {w1,w4,w5}, {w2,w3,w6} joined by w1w2"}, edge_mod_labels)});
  c.push_back({"edge-mod-bowtie",
               from_labels(5, {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {4, 5}, {1, 5}}),
               concat({"# edge-modification example: two triangles sharing w1"}, labels_comment("w", 5))});
  c.push_back({"edge-mod-1", edge_mod({{1, 6}}), concat({"# edge-modification example: base + w1w6"}, edge_mod_labels)});
  c.push_back({"edge-mod-2", edge_mod({{2, 5}, {5, 6}}),
               concat({"# edge-modification example: base + w2w5 + w5w6"}, edge_mod_labels)});
  c.push_back({"edge-mod-3", edge_mod({{5, 6}}), concat({"# edge-modification example: base + w5w6"}, edge_mod_labels)});
  c.push_back({"edge-mod-4", edge_mod({{2, 5}, {1, 6}}),
               concat({"# edge-modification example: base + w2w5 + w1w6"}, edge_mod_labels)});
  c.push_back({"edge-mod-5", edge_mod({{2, 5}, {1, 6}, {5, 6}}),
               concat({"# edge-modification example: base + w2w5 + w1w6 + w5w6"}, edge_mod_labels)});

  c.push_back({"tri-pendant-a", Graph::build(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}),
               {"# triangle {a,b,c} = {0,1,2} with pendant d = 3 on a"}});
  c.push_back({"tri-pendant-b", Graph::build(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}}),
               {"# triangle {a,b,c} = {0,1,2} with pendant e = 3 on b"}});
  c.push_back({"tri-pendant-sum", Graph::build(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}}),
               {"# SCS of tri-pendant-a and tri-pendant-b over {0,1,2}; d = 3, e = 4"}});
  c.push_back({"bull", Graph::build(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {3, 4}}),
               {"# triangle {0,1,2} with pendants 3 on 0 and 4 on 1, closed by edge 3-4 (contains C5)"}});
  return c;
}

}  // namespace

Graph complete(std::size_t n) {
  require(n >= 1 && n <= kMaxFamilyParameter, "complete: n must be in 1.." + std::to_string(kMaxFamilyParameter));
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

Graph path(std::size_t n) {
  require(n >= 1 && n <= 4096, "path: n must be in 1..4096");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::build(n, edges);
}

Graph cycle(std::size_t n) {
  require(n >= 3 && n <= 4096, "cycle: n must be in 3..4096");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n - 1, 0);
  return Graph::build(n, edges);
}

Graph star(std::size_t m) {
  require(m >= 1 && m <= kMaxFamilyParameter, "star: m must be in 1.." + std::to_string(kMaxFamilyParameter));
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= m; ++v) edges.emplace_back(0, v);
  return Graph::build(m + 1, edges);
}

std::size_t sierpinski_vertex_count(std::size_t n) {
  require(n >= 1 && n <= 30, "sierpinski_vertex_count: n must be in 1..30");
  std::size_t p = 1;
  for (std::size_t i = 1; i < n; ++i) p *= 3;
  return 3 * (p + 1) / 2;
}

SierpinskiGraph sierpinski(std::size_t n) {
  require(n >= 1 && n <= kMaxSierpinskiOrder, "sierpinski: n must be in 1.." + std::to_string(kMaxSierpinskiOrder));
  std::vector<std::array<Point, 3>> triangles;
  collect_triangles(n, 0, 0, triangles);

  std::map<Point, Vertex> index;
  for (const auto& t : triangles)
    for (const auto& p : t) index.emplace(p, 0);
  SierpinskiGraph s;
  s.order = n;
  Vertex next = 0;
  for (auto& [p, v] : index) {
    v = next++;
    s.coords.push_back(p);
  }
  std::vector<Edge> edges;
  for (const auto& t : triangles) {
    edges.emplace_back(index.at(t[0]), index.at(t[1]));
    edges.emplace_back(index.at(t[1]), index.at(t[2]));
    edges.emplace_back(index.at(t[0]), index.at(t[2]));
  }
  s.graph = Graph::build(index.size(), edges);

  const long width = 1L << n;
  s.corners = {index.at({0, 0}), index.at({width, 0}), index.at({width / 2, width / 2})};
  std::array<std::vector<std::pair<long, Vertex>>, 3> sides;
  for (const auto& [p, v] : index) {
    auto [x, y] = p;
    if (y == 0) sides[0].emplace_back(x, v);          // bottom, left to right
    if (x + y == width) sides[1].emplace_back(x, v);  // right side, toward apex as x falls
    if (x == y) sides[2].emplace_back(-x, v);         // left side, apex down to origin
  }
  std::sort(sides[0].begin(), sides[0].end());
  std::sort(sides[1].begin(), sides[1].end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::sort(sides[2].begin(), sides[2].end());
  for (std::size_t i = 0; i < 3; ++i)
    for (const auto& [key, v] : sides[i]) s.side_paths[i].push_back(v);
  for (std::size_t i = 0; i < 3; ++i) s.corner_cliques[i] = closed_neighborhood(s.graph, s.corners[i]);
  return s;
}

std::array<VertexSet, 3> sierpinski_blocks(const SierpinskiGraph& s) {
  require(s.order >= 2, "sierpinski_blocks: order must be at least 2");
  const auto sub = sierpinski(s.order - 1);
  const long half = 1L << (s.order - 1);
  std::map<Point, Vertex> index;
  for (Vertex v = 0; v < s.coords.size(); ++v) index.emplace(s.coords[v], v);
  const std::array<Point, 3> offsets{Point{0, 0}, Point{half, 0}, Point{half / 2, half / 2}};
  std::array<VertexSet, 3> blocks;
  for (std::size_t b = 0; b < 3; ++b) {
    std::vector<Vertex> members;
    for (const auto& [x, y] : sub.coords) members.push_back(index.at({x + offsets[b].first, y + offsets[b].second}));
    blocks[b] = VertexSet(std::move(members));
  }
  return blocks;
}

Graph figure1() {
  return from_labels(10, {{7, 8}, {8, 9}, {9, 10}, {10, 7}, {7, 9}, {8, 10}, {7, 5}, {5, 4}, {4, 6},
                          {5, 6}, {4, 3}, {5, 3}, {7, 3}, {8, 3}, {3, 1}, {1, 2}, {3, 2}});
}

Graph figure2_family(std::size_t k) {
  require(k >= 1 && k <= kMaxFamilyParameter, "figure2_family: k must be in 1.." + std::to_string(kMaxFamilyParameter));
  const std::size_t clique = k + 2;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < clique; ++u)
    for (Vertex v = u + 1; v < clique; ++v) edges.emplace_back(u, v);
  edges.emplace_back(0, clique);
  edges.emplace_back(clique, clique + 1);
  return Graph::build(clique + 2, edges);
}

Graph figure6_g1() {
  return from_labels(7, {{4, 1}, {1, 2}, {2, 3}, {5, 1}, {2, 3}, {3, 6}, {6, 2}, {5, 6}, {3, 7}, {6, 7}, {2, 7}, {5, 4}});
}

Graph figure6_g2() {
  // w2=1 w3=2 w6=3 w7=4 w8=5 w9=6 w10=7 (1-based)
  return from_labels(7, {{1, 7}, {2, 7}, {3, 7}, {1, 2}, {3, 2}, {3, 1}, {2, 4}, {4, 5}, {5, 6}});
}

Graph figure6_composite() {
  return from_labels(10, {{2, 10}, {6, 10}, {3, 10}, {4, 1}, {1, 2}, {2, 3}, {5, 1}, {5, 4}, {6, 3}, {6, 2}, {6, 5},
                          {3, 7}, {7, 8}, {8, 9}});
}

std::vector<std::pair<Vertex, Vertex>> figure6_glue() { return {{0, 1}, {1, 2}, {2, 5}, {6, 6}}; }

std::vector<Vertex> figure6_compose_relabel() { return {0, 1, 2, 3, 4, 5, 9, 6, 7, 8}; }

const std::vector<NamedGraph>& named_corpus() {
  static const std::vector<NamedGraph> corpus = build_corpus();
  return corpus;
}

std::optional<NamedGraph> find_named_graph(const std::string& name) {
  for (const auto& g : named_corpus())
    if (g.name == name) return g;
  return std::nullopt;
}

NamedGraph generate_family(const std::string& family, const std::vector<std::size_t>& params) {
  auto one = [&](const char* what) {
    require(params.size() == 1, family + ": expected exactly one parameter (" + what + ")");
    return params[0];
  };
  auto none = [&] { require(params.empty(), family + ": takes no parameters"); };

  if (family == "complete") {
    auto n = one("n");
    return {"complete-" + std::to_string(n), complete(n), {"# complete graph K" + std::to_string(n)}};
  }
  if (family == "path") {
    auto n = one("n");
    return {"path-" + std::to_string(n), path(n), {"# path P" + std::to_string(n) + " on 0..n-1"}};
  }
  if (family == "cycle") {
    auto n = one("n");
    return {"cycle-" + std::to_string(n), cycle(n), {"# cycle C" + std::to_string(n) + " on 0..n-1"}};
  }
  if (family == "star") {
    auto m = one("m");
    return {"star-" + std::to_string(m), star(m), {"# star K_{1," + std::to_string(m) + "}, center 0"}};
  }
  if (family == "sierpinski") {
    auto n = one("n");
    const auto s = sierpinski(n);
    return {"sierpinski-" + std::to_string(n), s.graph,
            {"# Sierpinski gasket graph S" + std::to_string(n) + ", vertices in lexicographic lattice order",
             "# corners " + std::to_string(s.corners[0]) + " " + std::to_string(s.corners[1]) + " " +
                 std::to_string(s.corners[2])}};
  }
  if (family == "figure2") {
    auto k = one("k");
    if (k >= 1 && k <= 5) return *find_named_graph("figure2-k" + std::to_string(k));
    return {"figure2-k" + std::to_string(k), figure2_family(k),
            {"# figure 2 family member k=" + std::to_string(k) + ": K" + std::to_string(k + 2) + " on 0.." +
             std::to_string(k + 1) + " with tail 0-" + std::to_string(k + 2) + "-" + std::to_string(k + 3)}};
  }
  if (auto named = find_named_graph(family)) {
    none();
    return *named;
  }
  throw PreconditionError("unknown family '" + family + "'");
}

}  // namespace wc
