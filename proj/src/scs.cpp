#include "wellcovered/scs.hpp"

#include <algorithm>
#include <string>

namespace wc {

namespace {

std::string show(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

// Components of g restricted to `alive`, each listed in increasing order and
// sorted by smallest vertex.
std::vector<VertexSet> components(const Graph& g, const Bitset& alive) {
  std::vector<VertexSet> out;
  Bitset unseen = alive;
  for (std::size_t start = unseen.first(); start < g.order(); start = unseen.first()) {
    std::vector<Vertex> members{start}, stack{start};
    unseen.reset(start);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (unseen.test(w)) {
          unseen.reset(w);
          members.push_back(w);
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

std::vector<ScsSplit> splits(const Graph& g, std::size_t max_components, bool first_only) {
  std::vector<ScsSplit> out;
  const auto report = simplicial_report(g);
  for (const auto& c : report.cliques) {
    Bitset alive(g.order());
    alive.set_all();
    for (Vertex v : c) alive.reset(v);
    const auto comps = components(g, alive);
    if (comps.size() < 2) continue;
    if (comps.size() > max_components)
      throw ResourceLimitError("scs_split: " + std::to_string(comps.size()) + " components exceed the limit", max_components);
    const std::size_t rest = comps.size() - 1;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << rest); ++mask) {
      std::vector<Vertex> a(c.begin(), c.end()), b(c.begin(), c.end());
      a.insert(a.end(), comps[0].begin(), comps[0].end());
      for (std::size_t k = 0; k < rest; ++k) {
        auto& side = ((mask >> k) & 1) ? b : a;
        side.insert(side.end(), comps[k + 1].begin(), comps[k + 1].end());
      }
      ScsSplit split;
      split.shared = c;
      split.side1 = VertexSet(std::move(a));
      split.side2 = VertexSet(std::move(b));
      split.spec.g1 = induced_subgraph(g, split.side1);
      split.spec.g2 = induced_subgraph(g, split.side2);
      for (Vertex v : c) {
        auto i1 = std::lower_bound(split.side1.begin(), split.side1.end(), v) - split.side1.begin();
        auto i2 = std::lower_bound(split.side2.begin(), split.side2.end(), v) - split.side2.begin();
        split.spec.glue.emplace_back(static_cast<Vertex>(i2), static_cast<Vertex>(i1));
      }
      try {
        scs_compose(split.spec);
      } catch (const ScsValidationError&) {
        continue;
      }
      out.push_back(std::move(split));
      if (first_only) return out;
    }
  }
  return out;
}

}  // namespace

const char* clause_name(ScsClause c) noexcept {
  switch (c) {
    case ScsClause::glue: return "glue";
    case ScsClause::simplicial_in_g1: return "clause 1 (simplicial clique of G1)";
    case ScsClause::simplicial_in_g2: return "clause 2 (simplicial clique of G2)";
    case ScsClause::simplicial_in_sum: return "clause 3 (simplicial clique of the sum)";
    case ScsClause::cross_edges: return "cross edges";
  }
  return "unknown";
}

bool is_simplicial_clique(const Graph& g, const VertexSet& s) {
  g.check_range(s);
  if (s.empty()) return false;
  for (Vertex v : s)
    if (g.degree(v) + 1 == s.size() && closed_neighborhood(g, v) == s && is_clique(g, s)) return true;
  return false;
}

ScsComposite scs_compose(const ScsSpec& spec) {
  const Graph& g1 = spec.g1;
  const Graph& g2 = spec.g2;
  if (spec.glue.empty()) throw ScsValidationError(ScsClause::glue, "glue map is empty");
  std::vector<Vertex> from_g2(g2.order(), g1.order() + g2.order());
  std::vector<bool> image_used(g1.order(), false);
  std::vector<Vertex> dom, img;
  for (auto [u2, u1] : spec.glue) {
    if (u2 >= g2.order() || u1 >= g1.order())
      throw ScsValidationError(ScsClause::glue, "pair " + std::to_string(u2) + ":" + std::to_string(u1) + " out of range");
    if (from_g2[u2] < g1.order() || image_used[u1])
      throw ScsValidationError(ScsClause::glue, "glue map is not injective at " + std::to_string(u2) + ":" +
                                                    std::to_string(u1));
    from_g2[u2] = u1;
    image_used[u1] = true;
    dom.push_back(u2);
    img.push_back(u1);
  }
  const VertexSet shared2(dom), shared1(img);
  if (!is_clique(g2, shared2)) throw ScsValidationError(ScsClause::glue, show(shared2) + " is not a clique of G2");
  if (!is_clique(g1, shared1)) throw ScsValidationError(ScsClause::glue, show(shared1) + " is not a clique of G1");
  if (!is_simplicial_clique(g1, shared1))
    throw ScsValidationError(ScsClause::simplicial_in_g1, show(shared1) + " is not a simplicial clique of G1");
  if (!is_simplicial_clique(g2, shared2))
    throw ScsValidationError(ScsClause::simplicial_in_g2, show(shared2) + " is not a simplicial clique of G2");

  Vertex next = g1.order();
  for (Vertex v = 0; v < g2.order(); ++v)
    if (from_g2[v] >= g1.order() + g2.order()) from_g2[v] = next++;

  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  for (auto [u, v] : g2.edges()) edges.emplace_back(from_g2[u], from_g2[v]);

  ScsComposite out;
  out.graph = Graph::build(next, edges);
  out.shared = shared1;
  out.from_g1.resize(g1.order());
  for (Vertex v = 0; v < g1.order(); ++v) out.from_g1[v] = v;
  out.from_g2 = from_g2;

  for (auto [u, v] : out.graph.edges()) {
    const bool u2only = u >= g1.order(), v2only = v >= g1.order();
    const bool u1only = !u2only && !shared1.contains(u), v1only = !v2only && !shared1.contains(v);
    if ((u1only && v2only) || (u2only && v1only))
      throw ScsValidationError(ScsClause::cross_edges, "edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  if (!is_simplicial_clique(out.graph, shared1))
    throw ScsValidationError(ScsClause::simplicial_in_sum, show(shared1) + " is not a simplicial clique of the sum");

  out.comments.push_back("# simplicial clique sum over shared clique " + show(shared1));
  out.comments.push_back("# G1 vertices keep their labels 0.." + std::to_string(g1.order() - 1));
  std::string map = "# G2 vertex -> sum vertex:";
  for (Vertex v = 0; v < g2.order(); ++v) map += " " + std::to_string(v) + ":" + std::to_string(from_g2[v]);
  out.comments.push_back(map);
  return out;
}

std::optional<ScsSplit> scs_split(const Graph& g, std::size_t max_components) {
  auto all = splits(g, max_components, true);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

std::vector<ScsSplit> scs_split_all(const Graph& g, std::size_t max_components) {
  return splits(g, max_components, false);
}

ScsCount scs_mis_count(const ScsSpec& spec, std::size_t mis_cap) {
  scs_compose(spec);
  auto glue = spec.glue;
  std::sort(glue.begin(), glue.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  const auto mis1 = enumerate_mis(spec.g1, mis_cap);
  const auto mis2 = enumerate_mis(spec.g2, mis_cap);
  ScsCount out;
  for (auto [u2, u1] : glue) {
    std::uint64_t l = 0, m = 0;
    for (const auto& s : mis1.sets) l += s.contains(u1);
    for (const auto& s : mis2.sets) m += s.contains(u2);
    out.shared_g1.push_back(u1);
    out.l.push_back(l);
    out.m.push_back(m);
    out.total += l * m;
  }
  return out;
}

}  // namespace wc
