#include "wellcovered/mis.hpp"

#include <algorithm>
#include <string>

#include "wellcovered/errors.hpp"

namespace wc {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceLimitError("MIS count formula overflows 64 bits", 64);
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceLimitError("MIS count formula overflows 64 bits", 64);
  return r;
}

class BronKerbosch {
 public:
  BronKerbosch(const Graph& g, std::size_t cap, const std::function<void(const Bitset&)>& visit)
      : cap_(cap), visit_(visit), current_(g.order()) {
    const std::size_t n = g.order();
    non_adj_.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
      Bitset row = g.adjacency(v).complement();
      row.reset(v);
      non_adj_.push_back(std::move(row));
    }
  }

  void run() {
    Bitset p(current_.size());
    p.set_all();
    expand(p, Bitset(current_.size()));
  }

 private:
  // Cliques of the complement graph extending `current_` with candidates p,
  // excluded x.
  void expand(Bitset p, Bitset x) {
    if (p.none()) {
      if (x.none()) report();
      return;
    }
    const std::size_t n = current_.size();
    std::size_t pivot = n;
    std::size_t best = 0;
    auto consider = [&](std::size_t u) {
      std::size_t c = p.count_and(non_adj_[u]);
      if (pivot == n || c > best) {
        pivot = u;
        best = c;
      }
    };
    p.for_each(consider);
    x.for_each(consider);

    Bitset branch = p;
    branch.subtract(non_adj_[pivot]);
    for (std::size_t v = branch.first(); v < n; v = branch.next(v)) {
      current_.set(v);
      expand(p & non_adj_[v], x & non_adj_[v]);
      current_.reset(v);
      p.reset(v);
      x.set(v);
    }
  }

  void report() {
    if (++found_ > cap_)
      throw ResourceLimitError("more than " + std::to_string(cap_) + " maximal independent sets", cap_);
    visit_(current_);
  }

  std::size_t cap_;
  const std::function<void(const Bitset&)>& visit_;
  std::vector<Bitset> non_adj_;
  Bitset current_;
  std::size_t found_ = 0;
};

}  // namespace

bool is_independent(const Graph& g, const VertexSet& s) {
  g.check_range(s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_mis(const Graph& g, const VertexSet& s) {
  if (!is_independent(g, s)) return false;
  return closed_neighborhood(g, s).size() == g.order();
}

void for_each_mis(const Graph& g, std::size_t cap, const std::function<void(const Bitset&)>& visit) {
  BronKerbosch(g, cap, visit).run();
}

MisList enumerate_mis(const Graph& g, std::size_t cap) {
  MisList out;
  out.order = g.order();
  for_each_mis(g, cap, [&](const Bitset& s) { out.sets.push_back(VertexSet::from_bits(s)); });
  std::sort(out.sets.begin(), out.sets.end());
  return out;
}

std::size_t count_mis(const Graph& g, std::size_t cap) {
  std::size_t c = 0;
  for_each_mis(g, cap, [&](const Bitset&) { ++c; });
  return c;
}

VertexSet greedy_extend(const Graph& g, const VertexSet& seed) {
  if (!is_independent(g, seed)) throw PreconditionError("greedy_extend: seed set is not independent");
  Bitset alive(g.order());
  alive.set_all();
  Bitset chosen(g.order());
  auto take = [&](Vertex v) {
    chosen.set(v);
    alive.reset(v);
    alive.subtract(g.adjacency(v));
  };
  for (Vertex v : seed) take(v);
  for (std::size_t v = alive.first(); v < g.order(); v = alive.first()) take(v);
  return VertexSet::from_bits(chosen);
}

std::vector<VertexSet> independent_subsets_of_connection_set(const Graph& g, const SimplicialReport& report,
                                                             std::size_t max_w) {
  const auto& w = report.connection_set.members();
  if (w.size() > max_w)
    throw ResourceLimitError("connection set has " + std::to_string(w.size()) + " vertices (limit " +
                                 std::to_string(max_w) + ")",
                             max_w);
  std::vector<VertexSet> out;
  std::vector<Vertex> current;
  auto grow = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t i = from; i < w.size(); ++i) {
      bool ok = std::none_of(current.begin(), current.end(), [&](Vertex u) { return g.adjacent(u, w[i]); });
      if (!ok) continue;
      current.push_back(w[i]);
      out.emplace_back(current);
      self(self, i + 1);
      current.pop_back();
    }
  };
  grow(grow, 0);
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<VertexSet> independent_subsets_of_connection_set(const Graph& g) {
  return independent_subsets_of_connection_set(g, simplicial_report(g));
}

CliqueCoverSplit s_of(const Graph& g, const SimplicialReport& report, const VertexSet& subset) {
  g.check_range(subset);
  if (!subset.is_subset_of(report.connection_set)) throw PreconditionError("s_of: set is not inside the connection set");
  if (!is_independent(g, subset)) throw PreconditionError("s_of: set is not independent");
  const VertexSet closed = closed_neighborhood(g, subset);
  CliqueCoverSplit split;
  for (std::size_t i = 0; i < report.cliques.size(); ++i)
    (report.cliques[i].is_subset_of(closed) ? split.covered : split.uncovered).push_back(i);
  return split;
}

std::vector<std::uint64_t> residual_sizes(const Graph& g, const SimplicialReport& report, ResidualReading reading) {
  (void)g;
  std::vector<std::uint64_t> sizes;
  sizes.reserve(report.cliques.size());
  for (std::size_t i = 0; i < report.cliques.size(); ++i) {
    if (reading == ResidualReading::residual_size)
      sizes.push_back(report.cliques[i].size() - report.per_clique_w[i].size());
    else
      sizes.push_back(set_intersection(report.cliques[i], report.simplicial_vertices).size());
  }
  return sizes;
}

SccgCountBreakdown sccg_mis_count_formula(const Graph& g, ResidualReading reading) {
  const auto report = simplicial_report(g);
  if (!is_sccg(g, report)) throw PreconditionError("sccg_mis_count_formula: graph is not an SCCG");
  const auto sizes = residual_sizes(g, report, reading);

  SccgCountBreakdown b;
  b.product_term = 1;
  for (auto s : sizes) b.product_term = checked_mul(b.product_term, s);

  for (const auto& subset : independent_subsets_of_connection_set(g, report)) {
    const auto split = s_of(g, report, subset);
    if (split.uncovered.empty()) {
      ++b.i_count;
      continue;
    }
    std::uint64_t term = 1;
    for (auto i : split.uncovered) term = checked_mul(term, sizes[i]);
    b.sum_term = checked_add(b.sum_term, term);
  }
  b.total = checked_add(checked_add(b.i_count, b.product_term), b.sum_term);
  return b;
}

}  // namespace wc
