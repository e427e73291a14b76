#include <set>

#include "doctest.h"
#include "wellcovered/errors.hpp"
#include "wellcovered/families.hpp"
#include "wellcovered/wc_space.hpp"

using namespace wc;

TEST_CASE("standard families") {
  CHECK(complete(3).edge_count() == 3);
  CHECK(complete(4).edge_count() == 6);
  CHECK(path(2).edge_count() == 1);
  CHECK(cycle(3) == complete(3));
  CHECK(cycle(6).edge_count() == 6);
  CHECK(star(4).degree(0) == 4);
  CHECK_THROWS_AS(complete(0), PreconditionError);
  CHECK_THROWS_AS(cycle(2), PreconditionError);
  CHECK_THROWS_AS(path(0), PreconditionError);
  CHECK_THROWS_AS(complete(kMaxFamilyParameter + 1), PreconditionError);
}

TEST_CASE("Sierpinski vertex count formula") {
  const std::size_t expected[] = {3, 6, 15, 42, 123, 366, 1095};
  for (std::size_t n = 1; n <= 7; ++n) {
    CHECK(sierpinski_vertex_count(n) == expected[n - 1]);
    CHECK(sierpinski(n).graph.order() == expected[n - 1]);
  }
  CHECK_THROWS_AS(sierpinski(0), PreconditionError);
  CHECK_THROWS_AS(sierpinski(kMaxSierpinskiOrder + 1), PreconditionError);
}

TEST_CASE("Sierpinski structure") {
  const auto s1 = sierpinski(1);
  CHECK(s1.graph == complete(3));
  for (const auto& c : s1.corner_cliques) CHECK(c == VertexSet{0, 1, 2});

  const auto s2 = sierpinski(2);
  CHECK(s2.graph.edge_count() == 9);
  for (Vertex v = 0; v < 6; ++v) CHECK((s2.graph.degree(v) == 2 || s2.graph.degree(v) == 4));

  const auto s3 = sierpinski(3);
  const auto r = simplicial_report(s3.graph);
  CHECK(r.sc == 3);
  std::set<VertexSet> corners(s3.corner_cliques.begin(), s3.corner_cliques.end());
  CHECK(std::set<VertexSet>(r.cliques.begin(), r.cliques.end()) == corners);

  for (std::size_t n = 2; n <= 6; ++n) {
    const auto s = sierpinski(n);
    std::size_t deg2 = 0;
    for (Vertex v = 0; v < s.graph.order(); ++v) {
      CHECK((s.graph.degree(v) == 2 || s.graph.degree(v) == 4));
      deg2 += s.graph.degree(v) == 2;
    }
    CHECK(deg2 == 3);
    CHECK(simplicial_vertices(s.graph) == VertexSet{s.corners[0], s.corners[1], s.corners[2]});
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& side = s.side_paths[i];
      CHECK(side.size() == (std::size_t{1} << (n - 1)) + 1);
      CHECK(side.front() == s.corners[i]);
      CHECK(side.back() == s.corners[(i + 1) % 3]);
      for (std::size_t k = 0; k + 1 < side.size(); ++k) CHECK(s.graph.adjacent(side[k], side[k + 1]));
      CHECK(s.corner_cliques[i].size() == 3);
      CHECK(is_clique(s.graph, s.corner_cliques[i]));
      CHECK(s.graph.degree(s.corners[i]) == 2);
    }
    const auto sub = sierpinski(n - 1);
    for (const auto& block : sierpinski_blocks(s)) CHECK(induced_subgraph(s.graph, block) == sub.graph);
  }
}

TEST_CASE("Sierpinski labels are stable and lexicographic") {
  const auto s = sierpinski(4);
  for (std::size_t i = 1; i < s.coords.size(); ++i) CHECK(s.coords[i - 1] < s.coords[i]);
  CHECK(sierpinski(4).graph == s.graph);
}

TEST_CASE("figure transcriptions") {
  const Graph f1 = figure1();
  CHECK(f1.order() == 10);
  CHECK(f1.edge_count() == 17);
  const auto r1 = simplicial_report(f1);
  CHECK(r1.sc == 3);
  CHECK(r1.connection_set.empty());

  for (std::size_t k = 1; k <= 5; ++k) {
    const Graph g = figure2_family(k);
    CHECK(g.order() == k + 4);
    CHECK(is_sccg(g));
    CHECK(simplicial_report(g).sc == 2);
    for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)}) CHECK(wcdim(g, f) == 2);
  }
  CHECK_THROWS_AS(figure2_family(0), PreconditionError);

  CHECK(is_sccg(figure6_g1()));
  CHECK(is_chordal(figure6_g2()));
  const VertexSet yellow{1, 2, 5, 9};
  const Graph f6 = figure6_composite();
  const auto r6 = simplicial_report(f6);
  CHECK(std::find(r6.cliques.begin(), r6.cliques.end(), yellow) != r6.cliques.end());
  CHECK(std::find(simplicial_report(figure6_g1()).cliques.begin(), simplicial_report(figure6_g1()).cliques.end(),
                  VertexSet{1, 2, 5, 6}) != simplicial_report(figure6_g1()).cliques.end());
  const auto r2 = simplicial_report(figure6_g2());
  CHECK(std::find(r2.cliques.begin(), r2.cliques.end(), VertexSet{0, 1, 2, 6}) != r2.cliques.end());
  CHECK(r2.sc == 2);
}

TEST_CASE("corpus and generators") {
  std::set<std::string> names;
  for (const auto& ng : named_corpus()) {
    CHECK(names.insert(ng.name).second);
    CHECK_FALSE(ng.comments.empty());
  }
  CHECK(find_named_graph("figure1")->graph == figure1());
  CHECK_FALSE(find_named_graph("nope"));
  CHECK(generate_family("sierpinski", {3}).graph.order() == 15);
  CHECK(generate_family("complete", {4}).graph.edge_count() == 6);
  CHECK(generate_family("figure1", {}).graph.edge_count() == 17);
  CHECK(generate_family("figure2", {3}).graph == figure2_family(3));
  CHECK(generate_family("figure2", {9}).graph == figure2_family(9));
  CHECK(generate_family("figure6", {}).graph == figure6_composite());
  CHECK_THROWS_AS(generate_family("banana", {}), PreconditionError);
  CHECK_THROWS_AS(generate_family("complete", {}), PreconditionError);
  CHECK_THROWS_AS(generate_family("figure1", {2}), PreconditionError);
  CHECK_THROWS_AS(generate_family("sierpinski", {9}), PreconditionError);
}
