#pragma once

// Brute-force reference implementations that share no code with the library.

#include <gmpxx.h>

#include <cstdint>
#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "wellcovered/families.hpp"
#include "wellcovered/graph.hpp"

namespace oracle {

using wc::Graph;
using wc::Vertex;
using wc::VertexSet;

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  return adj;
}

inline VertexSet from_mask(std::uint64_t m) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < 64; ++v)
    if ((m >> v) & 1) out.push_back(v);
  return VertexSet(std::move(out));
}

/// Every subset filtered for independence and maximality, sorted.
inline std::vector<VertexSet> power_set_mis(const Graph& g) {
  const std::size_t n = g.order();
  const auto adj = adjacency_masks(g);
  std::vector<VertexSet> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool independent = true, maximal = true;
    for (Vertex v = 0; v < n && independent; ++v)
      if (((s >> v) & 1) && (adj[v] & s)) independent = false;
    if (!independent) continue;
    for (Vertex v = 0; v < n && maximal; ++v)
      if (!((s >> v) & 1) && !(adj[v] & s)) maximal = false;
    if (maximal) out.push_back(from_mask(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// True iff some vertex subset of size >= 4 induces a cycle.
inline bool has_long_induced_cycle(const Graph& g) {
  const std::size_t n = g.order();
  const auto adj = adjacency_masks(g);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (__builtin_popcountll(s) < 4) continue;
    bool degrees_two = true;
    for (Vertex v = 0; v < n && degrees_two; ++v)
      if (((s >> v) & 1) && __builtin_popcountll(adj[v] & s) != 2) degrees_two = false;
    if (!degrees_two) continue;
    // 2-regular: a cycle iff connected.
    std::uint64_t seen = s & (~s + 1), frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (Vertex v = 0; v < n; ++v)
        if ((frontier >> v) & 1) next |= adj[v] & s;
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == s) return true;
  }
  return false;
}

inline bool is_clique_direct(const Graph& g, const std::vector<Vertex>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

/// Rank over Q by fraction-free (Bareiss) elimination on an integer copy.
inline std::size_t bareiss_rank(std::vector<std::vector<mpq_class>> rows) {
  std::vector<std::vector<mpz_class>> a;
  for (auto& r : rows) {
    mpz_class l = 1;
    for (auto& x : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> z;
    for (auto& x : r) z.push_back(mpz_class(x * l));
    a.push_back(std::move(z));
  }
  if (a.empty()) return 0;
  const std::size_t m = a.size(), n = a[0].size();
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[rank][col] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

/// Rank mod p of an integer matrix by dense elimination with Fermat inverses.
inline std::size_t rank_mod_p(std::vector<std::vector<long long>> rows, std::uint64_t p) {
  auto mod = [&](long long x) { return static_cast<std::uint64_t>(((x % (long long)p) + (long long)p) % (long long)p); };
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    unsigned __int128 r = 1, x = b;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
  };
  std::vector<std::vector<std::uint64_t>> a;
  for (auto& r : rows) {
    std::vector<std::uint64_t> z;
    for (auto x : r) z.push_back(mod(x));
    a.push_back(std::move(z));
  }
  if (a.empty()) return 0;
  const std::size_t m = a.size(), n = a[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[rank]);
    const std::uint64_t inv = powmod(a[rank][col], p - 2);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const std::uint64_t f = static_cast<std::uint64_t>((unsigned __int128)a[i][col] * inv % p);
      for (std::size_t j = 0; j < n; ++j)
        a[i][j] = (a[i][j] + p - static_cast<std::uint64_t>((unsigned __int128)f * a[rank][j] % p)) % p;
    }
    ++rank;
  }
  return rank;
}

/// Connected random graphs for property sweeps, independent of the harness
/// sampler.
inline std::vector<Graph> random_connected(std::uint64_t seed, std::size_t count, std::size_t max_n) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  while (out.size() < count) {
    const std::size_t n = 1 + rng() % max_n;
    const std::uint64_t threshold = rng() % 100;
    std::vector<wc::Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 100 < threshold) edges.emplace_back(u, v);
    if (wc::is_connected(n, edges)) out.push_back(Graph::build(n, edges));
  }
  return out;
}

/// Named corpus graphs with at most max_n vertices.
inline std::vector<wc::NamedGraph> small_corpus(std::size_t max_n) {
  std::vector<wc::NamedGraph> out;
  for (const auto& g : wc::named_corpus())
    if (g.graph.order() <= max_n) out.push_back(g);
  return out;
}

}  // namespace oracle
