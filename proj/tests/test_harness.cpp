#include "doctest.h"
#include "wellcovered/errors.hpp"
#include "wellcovered/harness.hpp"

using namespace wc;

namespace {

Analysis analysis_of(const std::string& name) { return Analysis(name, find_named_graph(name)->graph); }

const NamedSpec& spec_named(const std::vector<NamedSpec>& specs, const std::string& name) {
  for (const auto& s : specs)
    if (s.name == name) return s;
  throw std::runtime_error("missing spec " + name);
}

}  // namespace

TEST_CASE("tiers") {
  CHECK(tier_of("check_mis_structure") == Tier::report_only);
  CHECK(tier_of("check_mis_count") == Tier::report_only);
  CHECK(tier_of("check_lower_bound") == Tier::asserting);
  CHECK(tier_of("check_scs_dimension") == Tier::asserting);
  CHECK(std::string(status_name(Status::not_applicable)) == "not_applicable");
}

TEST_CASE("graph checks on known inputs") {
  auto f1 = analysis_of("figure1");
  CHECK(check_lower_bound(f1).status == Status::holds);
  CHECK(check_sccg_dimension(f1).status == Status::holds);
  CHECK(check_weighting_lemmas(f1).status == Status::holds);
  CHECK(check_neighbor_swap(f1).status == Status::holds);

  const auto structure = check_mis_structure(f1);
  CHECK(structure.status == Status::fails);
  REQUIRE(structure.witness.is_object());
  const auto& unclassified = structure.witness.at("unclassified_mis");
  CHECK(unclassified.size() == 20);
  const auto& g = f1.graph();
  for (const auto& j : unclassified) {
    std::vector<Vertex> vs = j.get<std::vector<Vertex>>();
    const VertexSet m(vs);
    CHECK(is_mis(g, m));
    CHECK(classify_mis(g, f1.report(), m) == 0);
  }

  const auto count = check_mis_count(f1);
  CHECK(count.status == Status::fails);
  CHECK(count.details.at("enumerated") == 24);

  Analysis s3("s3", sierpinski(3).graph);
  CHECK(check_sccg_dimension(s3).status == Status::not_applicable);
  CHECK(check_lower_bound(s3).status == Status::holds);

  auto bowtie = analysis_of("edge-mod-bowtie");
  CHECK(check_mis_count(bowtie).status == Status::holds);
  CHECK(check_mis_structure(bowtie).status == Status::holds);
}

TEST_CASE("cap exhaustion becomes not applicable") {
  HarnessOptions opts;
  opts.mis_cap = 2;
  Analysis a("p9", path(9), opts);
  const auto v = check_lower_bound(a);
  CHECK(v.status == Status::not_applicable);
}

TEST_CASE("clique sum checks") {
  const auto specs = named_specs();
  CHECK(specs.size() == 6);
  for (const auto& name : {"tri-pendant-a+tri-pendant-b", "figure6-g1+figure6-g2"}) {
    const auto& s = spec_named(specs, name);
    CHECK(check_scs_mis_structure(s).status == Status::holds);
    CHECK(check_scs_count(s).status == Status::holds);
    CHECK(check_scs_dimension(s).status == Status::holds);
  }
  const auto& bad = spec_named(specs, "path-5+path-5");
  const auto v = check_scs_dimension(bad);
  CHECK(v.status == Status::not_applicable);
  CHECK(v.details.dump().find("clause 3") != std::string::npos);
}

TEST_CASE("citation checks") {
  for (std::size_t n = 1; n <= 3; ++n) CHECK(check_sierpinski(n).status == Status::holds);
  CHECK(check_path_cycle_citations("path", 6).status == Status::holds);
  CHECK(check_path_cycle_citations("cycle", 9).status == Status::holds);
  CHECK(check_path_cycle_citations("cycle", 4).status == Status::not_applicable);
  CHECK(check_path_cycle_citations("path", 4).status == Status::not_applicable);
  const auto unknown = check_path_cycle_citations("tree", 6);
  CHECK(unknown.status == Status::fails);
  CHECK(unknown.witness.contains("error"));
}

TEST_CASE("random sampler") {
  const auto a = erdos_renyi_corpus(7, 40);
  const auto b = erdos_renyi_corpus(7, 40);
  REQUIRE(a.size() == 40);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].graph == b[i].graph);
    CHECK(a[i].graph.order() >= 2);
    CHECK(a[i].graph.order() <= 10);
    CHECK(is_connected(a[i].graph.order(), a[i].graph.edges()));
  }
  CHECK(a[0].name.rfind("er-0-n", 0) == 0);
  CHECK_FALSE(erdos_renyi_corpus(8, 40)[5].graph == a[5].graph);
}

TEST_CASE("suites") {
  SuiteConfig empty;
  empty.suite = "empty";
  const auto r = run_suite(empty);
  CHECK(r.verdicts.empty());
  CHECK(r.asserting_failures() == 0);
  const auto j = r.to_json();
  CHECK(j.contains("suite"));
  CHECK(j.contains("seed"));
  CHECK(j.contains("fields"));
  CHECK(j.contains("verdicts"));

  SuiteConfig bad;
  bad.suite = "nope";
  CHECK_THROWS_AS(run_suite(bad), PreconditionError);

  SuiteConfig one;
  one.suite = "random";
  one.random_graphs = 60;
  one.seed = 3;
  one.threads = 1;
  const auto single = dump(run_suite(one).to_json());
  one.threads = 4;
  const auto multi = run_suite(one);
  CHECK(dump(multi.to_json()) == single);
  CHECK(multi.asserting_failures() == 0);
  for (const auto& v : multi.verdicts) {
    const auto vj = v.to_json();
    for (const char* key : {"check_id", "inputs", "status", "details", "witness"}) CHECK(vj.contains(key));
    if (v.status != Status::fails) CHECK(v.witness.is_null());
  }
  CHECK_FALSE(multi.summary_table().empty());
}
