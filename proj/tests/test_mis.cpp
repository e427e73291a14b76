#include "doctest.h"
#include "oracles.hpp"
#include "wellcovered/errors.hpp"
#include "wellcovered/families.hpp"
#include "wellcovered/mis.hpp"
#include "wellcovered/scs.hpp"

using namespace wc;

TEST_CASE("is_independent and is_mis") {
  CHECK(is_mis(complete(3), {0}));
  const Graph p5 = path(5);
  CHECK(is_independent(p5, {0, 2}));
  CHECK_FALSE(is_mis(p5, {0, 2}));
  CHECK(is_mis(p5, {0, 2, 4}));
  CHECK(is_mis(p5, {0, 3}));
  CHECK_FALSE(is_independent(p5, {1, 2}));
  CHECK(is_mis(figure1(), {2, 5, 8}));
  CHECK_THROWS_AS(is_mis(p5, {7}), VertexRangeError);
}

TEST_CASE("enumerate small graphs") {
  const auto c4 = enumerate_mis(cycle(4));
  REQUIRE(c4.size() == 2);
  CHECK(c4.sets[0] == VertexSet{0, 2});
  CHECK(c4.sets[1] == VertexSet{1, 3});
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto k = enumerate_mis(complete(n));
    CHECK(k.size() == n);
    for (std::size_t i = 0; i < n; ++i) CHECK(k.sets[i] == VertexSet{i});
  }
}

TEST_CASE("figure 1 has exactly the 24 compatible one-per-clique selections") {
  const auto mis = enumerate_mis(figure1());
  CHECK(mis.sets == oracle::power_set_mis(figure1()));
  CHECK(mis.size() == 24);
  const auto r = simplicial_report(figure1());
  for (const auto& m : mis.sets) {
    for (const auto& c : r.cliques) CHECK(set_intersection(m, c).size() == 1);
  }
}

TEST_CASE("cap raises a resource error") {
  CHECK_THROWS_AS(enumerate_mis(complete(5), 4), ResourceLimitError);
  CHECK(enumerate_mis(complete(5), 5).size() == 5);
  try {
    count_mis(cycle(12), 3);
    FAIL("expected ResourceLimitError");
  } catch (const ResourceLimitError& e) {
    CHECK(e.limit() == 3);
  }
}

TEST_CASE("property: enumeration matches power-set filtering") {
  for (const auto& ng : oracle::small_corpus(12)) {
    INFO(ng.name);
    CHECK(enumerate_mis(ng.graph).sets == oracle::power_set_mis(ng.graph));
  }
  for (const auto& g : oracle::random_connected(3, 300, 12)) CHECK(enumerate_mis(g).sets == oracle::power_set_mis(g));
}

TEST_CASE("property: every MIS meets each clique at most once and each N[v] of a simplicial v") {
  for (const auto& ng : oracle::small_corpus(15)) {
    const auto r = simplicial_report(ng.graph);
    for (const auto& m : enumerate_mis(ng.graph).sets) {
      CHECK(is_mis(ng.graph, m));
      for (const auto& c : r.cliques) CHECK(set_intersection(m, c).size() == 1);
    }
  }
}

TEST_CASE("greedy extension") {
  CHECK(greedy_extend(path(5), {}) == VertexSet{0, 2, 4});
  CHECK(greedy_extend(cycle(4), {1}) == VertexSet{1, 3});
  CHECK(greedy_extend(path(5), {1, 3}) == VertexSet{1, 3});
  CHECK_THROWS_AS(greedy_extend(path(5), {1, 2}), PreconditionError);
  for (const auto& g : oracle::random_connected(5, 200, 10)) {
    for (const auto& m : enumerate_mis(g).sets) CHECK(greedy_extend(g, m) == m);
    const VertexSet seed{g.order() - 1};
    const auto ext = greedy_extend(g, seed);
    CHECK(is_mis(g, ext));
    CHECK(seed.is_subset_of(ext));
  }
}

TEST_CASE("independent subsets of the connection set") {
  CHECK(independent_subsets_of_connection_set(figure1()).empty());
  const auto star = independent_subsets_of_connection_set(wc::star(4));
  REQUIRE(star.size() == 1);
  CHECK(star[0] == VertexSet{0});

  for (const auto& ng : oracle::small_corpus(15)) {
    const auto& g = ng.graph;
    const auto r = simplicial_report(g);
    if (!is_sccg(g, r)) continue;
    const auto& w = r.connection_set.members();
    std::vector<VertexSet> expected;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << w.size()); ++mask) {
      std::vector<Vertex> s;
      for (std::size_t i = 0; i < w.size(); ++i)
        if ((mask >> i) & 1) s.push_back(w[i]);
      if (is_independent(g, VertexSet(s))) expected.emplace_back(s);
    }
    auto got = independent_subsets_of_connection_set(g, r);
    CHECK(got.size() == expected.size());
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
  }
}

TEST_CASE("connection set subsets and S(I)") {
  CHECK(independent_subsets_of_connection_set(figure6_composite()).empty());
  const Graph g = find_named_graph("edge-mod-bowtie")->graph;
  const auto r = simplicial_report(g);
  const auto subsets = independent_subsets_of_connection_set(g, r);
  CHECK_FALSE(subsets.empty());
  for (const auto& s : subsets) CHECK(s.is_subset_of(r.connection_set));
  for (const auto& s : subsets) {
    if (s.size() != 1) continue;
    const auto split = s_of(g, r, s);
    const auto closed = closed_neighborhood(g, s);
    for (std::size_t i : split.uncovered) CHECK_FALSE(r.cliques[i].is_subset_of(closed));
    for (std::size_t i : split.covered) CHECK(r.cliques[i].is_subset_of(closed));
  }
}

TEST_CASE("S(I) of the empty set is every clique; S(I) empty iff I is a MIS") {
  for (const auto& ng : oracle::small_corpus(15)) {
    const auto& g = ng.graph;
    const auto r = simplicial_report(g);
    if (!is_sccg(g, r)) continue;
    CHECK(s_of(g, r, {}).s() == r.sc);
    for (const auto& i : independent_subsets_of_connection_set(g, r)) CHECK((s_of(g, r, i).s() == 0) == is_mis(g, i));
  }
  const auto r = simplicial_report(path(5));
  CHECK_THROWS_AS(s_of(path(5), r, {2}), PreconditionError);
}

TEST_CASE("SCCG count formula") {
  const auto f1 = sccg_mis_count_formula(figure1());
  CHECK(f1.i_count == 0);
  CHECK(f1.product_term == 36);
  CHECK(f1.sum_term == 0);
  CHECK(f1.total == 36);
  CHECK(sccg_mis_count_formula(figure1(), ResidualReading::simplicial_only).total == 4);

  for (std::size_t n = 1; n <= 5; ++n) CHECK(sccg_mis_count_formula(complete(n)).total == n);

  const Graph bowtie = find_named_graph("edge-mod-bowtie")->graph;
  const auto b = sccg_mis_count_formula(bowtie);
  CHECK(b.i_count == 1);
  CHECK(b.product_term == 4);
  CHECK(b.total == count_mis(bowtie));

  for (std::size_t m = 2; m <= 6; ++m) {
    const auto s = sccg_mis_count_formula(wc::star(m));
    CHECK(s.total == 2);
    CHECK(count_mis(wc::star(m)) == 2);
  }
  CHECK_THROWS_AS(sccg_mis_count_formula(cycle(5)), PreconditionError);

  for (const auto& ng : oracle::small_corpus(15)) {
    if (!is_sccg(ng.graph)) continue;
    const auto s = sccg_mis_count_formula(ng.graph);
    CHECK(s.total == s.i_count + s.product_term + s.sum_term);
  }
}

TEST_CASE("two triangles joined by an edge between non-simplicial vertices") {
  const Graph g = find_named_graph("edge-mod-base")->graph;
  const auto r = simplicial_report(g);
  CHECK(is_sccg(g, r));
  CHECK(r.connection_set.empty());
  const auto f = sccg_mis_count_formula(g);
  CHECK(f.total == 9);
  CHECK(count_mis(g) == 8);
}

TEST_CASE("clique sum count") {
  const ScsSpec tri{find_named_graph("tri-pendant-a")->graph, find_named_graph("tri-pendant-b")->graph,
                    {{0, 0}, {1, 1}, {2, 2}}};
  const auto c = scs_mis_count(tri);
  CHECK(c.l == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(c.m == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(c.total == 3);
  CHECK(count_mis(scs_compose(tri).graph) == 3);

  const auto f6 = scs_mis_count({figure6_g1(), figure6_g2(), figure6_glue()});
  CHECK(f6.total == count_mis(figure6_composite()));

  // A clique glued over a simplicial clique of the same size: each l_i * 1.
  const Graph g1 = figure2_family(2);
  const ScsSpec k{g1, complete(4), {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  const auto ck = scs_mis_count(k);
  std::uint64_t sum_l = 0;
  for (auto l : ck.l) sum_l += l;
  CHECK(ck.total == sum_l);
  CHECK(ck.total == count_mis(scs_compose(k).graph));
}
