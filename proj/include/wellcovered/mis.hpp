#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "wellcovered/graph.hpp"

namespace wc {

inline constexpr std::size_t kDefaultMisCap = 1'000'000;

/// All maximal independent sets of one graph, in lexicographic order of their
/// sorted member lists.
struct MisList {
  std::size_t order = 0;  // vertex count of the source graph
  std::vector<VertexSet> sets;

  std::size_t size() const noexcept { return sets.size(); }
  friend bool operator==(const MisList&, const MisList&) = default;
};

bool is_independent(const Graph& g, const VertexSet& s);
bool is_mis(const Graph& g, const VertexSet& s);

/// Pivoting Bron-Kerbosch over the complement graph. Visits every MIS once in
/// discovery order; throws ResourceLimitError once more than `cap` are found.
void for_each_mis(const Graph& g, std::size_t cap, const std::function<void(const Bitset&)>& visit);

MisList enumerate_mis(const Graph& g, std::size_t cap = kDefaultMisCap);
std::size_t count_mis(const Graph& g, std::size_t cap = kDefaultMisCap);

/// Grows an independent set to a MIS, always taking the smallest surviving
/// vertex and deleting its closed neighborhood.
VertexSet greedy_extend(const Graph& g, const VertexSet& seed);

/// Nonempty independent subsets of the connection set, ordered by size and
/// then lexicographically. Throws ResourceLimitError if |W| exceeds max_w.
std::vector<VertexSet> independent_subsets_of_connection_set(const Graph& g, const SimplicialReport& report,
                                                             std::size_t max_w = 24);
std::vector<VertexSet> independent_subsets_of_connection_set(const Graph& g);

/// Partition of the simplicial cliques relative to an independent I ⊆ W:
/// `uncovered` holds indices of cliques not contained in N[I] (S(I));
/// `covered` holds the complement.
struct CliqueCoverSplit {
  std::vector<std::size_t> uncovered;
  std::vector<std::size_t> covered;
  std::size_t s() const noexcept { return uncovered.size(); }
};

CliqueCoverSplit s_of(const Graph& g, const SimplicialReport& report, const VertexSet& subset);

/// How |C_i - W_i| is counted when evaluating the SCCG count formula.
enum class ResidualReading {
  residual_size,    // literal size of C_i minus W_i
  simplicial_only,  // number of simplicial vertices in C_i
};

struct SccgCountBreakdown {
  std::uint64_t i_count = 0;
  std::uint64_t product_term = 0;
  std::uint64_t sum_term = 0;
  std::uint64_t total = 0;
};

/// Evaluates |I| + prod |C_i - W_i| + sum_m prod_{C_i in S(I_m)} |C_i - W_i|
/// with I_m ranging over nonempty independent subsets of W. The product for an
/// I_m that is itself a MIS (S(I_m) empty) contributes zero; such sets are
/// counted by |I|. Throws PreconditionError unless g is an SCCG.
SccgCountBreakdown sccg_mis_count_formula(const Graph& g, ResidualReading reading = ResidualReading::residual_size);

/// Size of each clique's residual under the given reading.
std::vector<std::uint64_t> residual_sizes(const Graph& g, const SimplicialReport& report, ResidualReading reading);

}  // namespace wc
