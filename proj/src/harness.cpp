#include "wellcovered/harness.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace wc {

namespace {

Json dims_json(const std::vector<std::pair<std::string, std::size_t>>& dims) {
  Json out = Json::object();
  for (const auto& [name, d] : dims) out[name] = d;
  return out;
}

Verdict make(const std::string& id, std::vector<std::string> inputs) {
  Verdict v;
  v.check_id = id;
  v.inputs = std::move(inputs);
  return v;
}

Verdict not_applicable(Verdict v, const std::string& reason) {
  v.status = Status::not_applicable;
  v.details["precondition"] = reason;
  v.witness = nullptr;
  return v;
}

// Runs a check and folds any thrown error into its verdict.
Verdict guarded(const std::string& id, std::vector<std::string> inputs, const std::function<Verdict()>& body) {
  try {
    return body();
  } catch (const ResourceLimitError& e) {
    auto v = not_applicable(make(id, std::move(inputs)), "resource limit");
    v.details["limit"] = e.limit();
    v.details["error"] = e.what();
    return v;
  } catch (const ScsValidationError& e) {
    auto v = not_applicable(make(id, std::move(inputs)), "invalid simplicial clique sum");
    v.details["clause"] = clause_name(e.clause());
    v.details["error"] = e.what();
    return v;
  } catch (const std::exception& e) {
    auto v = make(id, std::move(inputs));
    v.status = Status::fails;
    v.details["error"] = e.what();
    v.witness = Json{{"error", e.what()}};
    return v;
  }
}

bool all_equal(const std::vector<FieldScalar>& f, const VertexSet& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!(f[s[i]] == f[s[0]])) return false;
  return true;
}

FieldScalar sum_values(const FieldSpec& field, const std::vector<FieldScalar>& vals) {
  return visit_field(field, [&](const auto& f) {
    auto acc = f.zero();
    for (const auto& x : vals) acc = f.add(acc, from_scalar(f, x));
    return to_scalar(f, acc);
  });
}

std::size_t clique_index_of(const SimplicialReport& r, const VertexSet& closed) {
  auto it = std::find(r.cliques.begin(), r.cliques.end(), closed);
  return it == r.cliques.end() ? r.cliques.size() : static_cast<std::size_t>(it - r.cliques.begin());
}

VertexSet map_set(const VertexSet& s, const std::vector<Vertex>& to) {
  std::vector<Vertex> out;
  for (Vertex v : s) out.push_back(to[v]);
  return VertexSet(std::move(out));
}

// Pulls a composite set back to part labels through the part -> composite map.
VertexSet pull_back(const VertexSet& s, const std::vector<Vertex>& to) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < to.size(); ++v)
    if (s.contains(to[v])) out.push_back(v);
  return VertexSet(std::move(out));
}

std::string spec_input(const NamedSpec& s) { return s.name; }

}  // namespace

const char* status_name(Status s) noexcept {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::not_applicable: return "not_applicable";
  }
  return "unknown";
}

Tier tier_of(const std::string& check_id) {
  return check_id == "check_mis_structure" || check_id == "check_mis_count" ? Tier::report_only : Tier::asserting;
}

Json Verdict::to_json() const {
  return Json{{"check_id", check_id}, {"inputs", inputs}, {"status", status_name(status)}, {"details", details},
              {"witness", witness}};
}

Analysis::Analysis(std::string name, Graph g, HarnessOptions opts)
    : name_(std::move(name)), g_(std::move(g)), opts_(std::move(opts)) {}

const MisList& Analysis::mis() {
  if (!mis_) mis_ = enumerate_mis(g_, opts_.mis_cap);
  return *mis_;
}

const SimplicialReport& Analysis::report() {
  if (!report_) report_ = simplicial_report(g_);
  return *report_;
}

const WcSpace& Analysis::space(const FieldSpec& field) {
  auto key = field.name();
  auto it = spaces_.find(key);
  if (it == spaces_.end()) it = spaces_.emplace(key, well_covered_space(g_, mis(), field)).first;
  return it->second;
}

bool Analysis::sccg() { return is_sccg(g_, report()); }

bool Analysis::chordal() {
  if (!chordal_) chordal_ = is_chordal(g_);
  return *chordal_;
}

Verdict check_lower_bound(Analysis& a) {
  return guarded("check_lower_bound", {a.name()}, [&] {
    auto v = make("check_lower_bound", {a.name()});
    const auto dim = a.space(FieldSpec::rationals()).dimension;
    const auto sc = a.report().sc;
    v.details = Json{{"wcdim_Q", dim}, {"sc", sc}};
    v.status = dim >= sc ? Status::holds : Status::fails;
    if (v.status == Status::fails) v.witness = Json{{"wcdim_Q", dim}, {"sc", sc}};
    return v;
  });
}

Verdict check_sccg_dimension(Analysis& a) {
  return guarded("check_sccg_dimension", {a.name()}, [&] {
    auto v = make("check_sccg_dimension", {a.name()});
    if (!a.sccg()) return not_applicable(v, "not an SCCG");
    const auto sc = a.report().sc;
    std::vector<std::pair<std::string, std::size_t>> dims;
    bool ok = true;
    for (const auto& f : a.options().fields) {
      dims.emplace_back(f.name(), a.space(f).dimension);
      ok = ok && dims.back().second == sc;
    }
    v.details = Json{{"sc", sc}, {"wcdim", dims_json(dims)}};
    v.status = ok ? Status::holds : Status::fails;
    if (!ok) v.witness = v.details;
    return v;
  });
}

int classify_mis(const Graph& g, const SimplicialReport& report, const VertexSet& mis) {
  const VertexSet in_w = set_intersection(mis, report.connection_set);
  const auto split = s_of(g, report, in_w);
  std::vector<std::size_t> hit;
  for (Vertex v : set_difference(mis, in_w)) {
    if (!report.simplicial_vertices.contains(v)) return 0;
    hit.push_back(clique_index_of(report, closed_neighborhood(g, v)));
  }
  std::sort(hit.begin(), hit.end());
  if (std::adjacent_find(hit.begin(), hit.end()) != hit.end()) return 0;
  auto uncovered = split.uncovered;
  std::sort(uncovered.begin(), uncovered.end());
  if (hit != uncovered) return 0;
  return in_w.empty() ? 1 : 2;
}

Verdict check_mis_structure(Analysis& a) {
  return guarded("check_mis_structure", {a.name()}, [&] {
    auto v = make("check_mis_structure", {a.name()});
    if (!a.sccg()) return not_applicable(v, "not an SCCG");
    std::size_t forms[3] = {0, 0, 0};
    std::vector<VertexSet> bad;
    for (const auto& m : a.mis().sets) {
      const int form = classify_mis(a.graph(), a.report(), m);
      ++forms[form];
      if (form == 0) bad.push_back(m);
    }
    v.details = Json{{"mis_count", a.mis().size()},
                     {"form_1", forms[1]},
                     {"form_2", forms[2]},
                     {"unclassified", forms[0]},
                     {"convention", "I_m ranges over nonempty independent subsets of the connection set"}};
    v.status = bad.empty() ? Status::holds : Status::fails;
    if (!bad.empty()) v.witness = Json{{"unclassified_mis", to_json(bad)}};
    return v;
  });
}

Verdict check_mis_count(Analysis& a) {
  return guarded("check_mis_count", {a.name()}, [&] {
    auto v = make("check_mis_count", {a.name()});
    if (!a.sccg()) return not_applicable(v, "not an SCCG");
    const auto enumerated = a.mis().size();
    const auto residual = sccg_mis_count_formula(a.graph(), ResidualReading::residual_size);
    const auto simplicial = sccg_mis_count_formula(a.graph(), ResidualReading::simplicial_only);
    v.details = Json{{"enumerated", enumerated},
                     {"residual_size", to_json(residual)},
                     {"simplicial_only", to_json(simplicial)},
                     {"convention", "I_m and members of the family I are nonempty"}};
    const bool ok = residual.total == enumerated || simplicial.total == enumerated;
    v.status = ok ? Status::holds : Status::fails;
    if (!ok)
      v.witness = Json{{"enumerated", enumerated},
                       {"formula_residual_size", residual.total},
                       {"formula_simplicial_only", simplicial.total}};
    return v;
  });
}

Verdict check_weighting_lemmas(Analysis& a) {
  return guarded("check_weighting_lemmas", {a.name()}, [&] {
    auto v = make("check_weighting_lemmas", {a.name()});
    if (!a.sccg()) return not_applicable(v, "not an SCCG");
    const auto& r = a.report();
    const auto& g = a.graph();
    constexpr std::size_t kSelectionCap = 1'000'000;
    Json violations = Json::array();
    std::size_t checked = 0;
    for (const auto& field : a.options().fields) {
      const auto& space = a.space(field);
      for (std::size_t b = 0; b < space.basis.size(); ++b) {
        const auto& f = space.basis[b].values;
        ++checked;
        for (std::size_t i = 0; i < r.cliques.size(); ++i) {
          const auto residual = set_difference(r.cliques[i], r.connection_set);
          if (!all_equal(f, residual))
            violations.push_back(Json{{"lemma", "constant_on_residual"}, {"field", field.name()}, {"basis_index", b},
                                      {"clique", to_json(r.cliques[i])}, {"weights", to_json(space.basis[b].values)}});
        }
        for (Vertex w : r.connection_set) {
          const auto covered = s_of(g, r, VertexSet{w}).covered;
          std::vector<std::vector<Vertex>> choices;
          std::size_t combos = 1;
          for (std::size_t i : covered) {
            std::vector<Vertex> simp;
            for (Vertex x : r.cliques[i])
              if (r.simplicial_vertices.contains(x)) simp.push_back(x);
            combos *= std::max<std::size_t>(simp.size(), 1);
            if (combos > kSelectionCap) throw ResourceLimitError("selection search too large", kSelectionCap);
            choices.push_back(std::move(simp));
          }
          bool found = false;
          std::vector<FieldScalar> picked;
          std::function<void(std::size_t)> search = [&](std::size_t depth) {
            if (found) return;
            if (depth == choices.size()) {
              found = sum_values(field, picked) == f[w];
              return;
            }
            for (Vertex x : choices[depth]) {
              picked.push_back(f[x]);
              search(depth + 1);
              picked.pop_back();
              if (found) return;
            }
          };
          search(0);
          if (!found)
            violations.push_back(Json{{"lemma", "connection_vertex_sum"}, {"field", field.name()}, {"basis_index", b},
                                      {"vertex", w}, {"weights", to_json(space.basis[b].values)}});
        }
      }
    }
    v.details = Json{{"basis_vectors_checked", checked}, {"cliques", r.sc}, {"connection_set", to_json(r.connection_set)}};
    v.status = violations.empty() ? Status::holds : Status::fails;
    if (!violations.empty()) v.witness = Json{{"violations", violations}};
    return v;
  });
}

Verdict check_neighbor_swap(Analysis& a) {
  return guarded("check_neighbor_swap", {a.name()}, [&] {
    auto v = make("check_neighbor_swap", {a.name()});
    const auto& g = a.graph();
    const std::size_t n = g.order();
    std::vector<Bitset> closed(n, Bitset(n));
    for (Vertex x = 0; x < n; ++x) {
      closed[x] = g.adjacency(x);
      closed[x].set(x);
    }
    // Every unordered pair {u, x} admitting a common I, with the first I found.
    std::map<std::pair<Vertex, Vertex>, VertexSet> pairs;
    for (const auto& m : a.mis().sets) {
      for (Vertex u : m) {
        Bitset in_i(n), dom(n);
        for (Vertex y : m)
          if (y != u) {
            in_i.set(y);
            dom |= closed[y];
          }
        for (Vertex x = u + 1; x < n; ++x) {
          if (m.contains(x) || g.adjacency(x).count_and(in_i) != 0) continue;
          Bitset all = dom;
          all |= closed[x];
          if (all.count() != n) continue;
          std::vector<Vertex> rest;
          for (Vertex y : m)
            if (y != u) rest.push_back(y);
          pairs.emplace(std::pair{u, x}, VertexSet(std::move(rest)));
        }
      }
    }
    Json violations = Json::array();
    for (const auto& field : a.options().fields) {
      const auto& space = a.space(field);
      for (std::size_t b = 0; b < space.basis.size(); ++b) {
        const auto& f = space.basis[b].values;
        for (const auto& [uv, i] : pairs)
          if (!(f[uv.first] == f[uv.second]))
            violations.push_back(Json{{"field", field.name()}, {"basis_index", b}, {"u", uv.first}, {"v", uv.second},
                                      {"I", to_json(i)}});
      }
    }
    v.details = Json{{"swap_pairs", pairs.size()}};
    v.status = violations.empty() ? Status::holds : Status::fails;
    if (!violations.empty()) v.witness = Json{{"violations", violations}};
    return v;
  });
}

Verdict check_scs_mis_structure(const NamedSpec& s, const HarnessOptions& opts) {
  return guarded("check_scs_mis_structure", {spec_input(s)}, [&] {
    auto v = make("check_scs_mis_structure", {spec_input(s)});
    const auto sum = scs_compose(s.spec);
    const auto mis = enumerate_mis(sum.graph, opts.mis_cap);
    const auto mis1 = enumerate_mis(s.spec.g1, opts.mis_cap);
    const auto mis2 = enumerate_mis(s.spec.g2, opts.mis_cap);
    Json bad = Json::array();
    for (const auto& m : mis.sets) {
      const auto m1 = pull_back(m, sum.from_g1), m2 = pull_back(m, sum.from_g2);
      const auto common = set_intersection(map_set(m1, sum.from_g1), map_set(m2, sum.from_g2));
      if (!is_mis(s.spec.g1, m1) || !is_mis(s.spec.g2, m2) || common.size() != 1 || !common.is_subset_of(sum.shared))
        bad.push_back(Json{{"direction", "composite_to_parts"}, {"mis", to_json(m)}});
    }
    std::set<VertexSet> unions;
    for (const auto& m1 : mis1.sets) {
      const auto c1 = set_intersection(map_set(m1, sum.from_g1), sum.shared);
      for (const auto& m2 : mis2.sets) {
        const auto c2 = set_intersection(map_set(m2, sum.from_g2), sum.shared);
        if (c1.size() != 1 || !(c1 == c2)) continue;
        const auto u = set_union(map_set(m1, sum.from_g1), map_set(m2, sum.from_g2));
        unions.insert(u);
        if (!is_mis(sum.graph, u))
          bad.push_back(Json{{"direction", "parts_to_composite"}, {"m1", to_json(m1)}, {"m2", to_json(m2)}});
      }
    }
    const bool same = unions == std::set<VertexSet>(mis.sets.begin(), mis.sets.end());
    v.details = Json{{"composite_mis", mis.size()}, {"unions", unions.size()}, {"g1_mis", mis1.size()},
                     {"g2_mis", mis2.size()}};
    v.status = bad.empty() && same ? Status::holds : Status::fails;
    if (v.status == Status::fails) v.witness = Json{{"violations", bad}, {"union_family_matches", same}};
    return v;
  });
}

Verdict check_scs_count(const NamedSpec& s, const HarnessOptions& opts) {
  return guarded("check_scs_count", {spec_input(s)}, [&] {
    auto v = make("check_scs_count", {spec_input(s)});
    const auto sum = scs_compose(s.spec);
    const auto count = scs_mis_count(s.spec, opts.mis_cap);
    const auto enumerated = count_mis(sum.graph, opts.mis_cap);
    v.details = Json{{"shared", count.shared_g1}, {"l", count.l}, {"m", count.m}, {"sum_lm", count.total},
                     {"enumerated", enumerated}};
    v.status = count.total == enumerated ? Status::holds : Status::fails;
    if (v.status == Status::fails) v.witness = Json{{"sum_lm", count.total}, {"enumerated", enumerated}};
    return v;
  });
}

Verdict check_scs_dimension(const NamedSpec& s, const HarnessOptions& opts) {
  return guarded("check_scs_dimension", {spec_input(s)}, [&] {
    auto v = make("check_scs_dimension", {spec_input(s)});
    const auto sum = scs_compose(s.spec);
    Analysis a1("g1", s.spec.g1, opts), a2("g2", s.spec.g2, opts), ac("sum", sum.graph, opts);
    const bool sccg_chordal = a1.sccg() && a2.chordal();
    const auto sc = ac.report().sc;
    Json per_field = Json::object();
    bool ok = true;
    for (const auto& f : opts.fields) {
      const auto d1 = a1.space(f).dimension, d2 = a2.space(f).dimension, dc = ac.space(f).dimension;
      const bool additive = dc + 1 == d1 + d2;
      const bool equals_sc = dc == sc;
      per_field[f.name()] = Json{{"g1", d1}, {"g2", d2}, {"sum", dc}, {"additive", additive}, {"equals_sc", equals_sc}};
      ok = ok && additive && (!sccg_chordal || equals_sc);
    }
    v.details = Json{{"wcdim", per_field}, {"sc_sum", sc}, {"sccg_plus_chordal", sccg_chordal}};
    v.status = ok ? Status::holds : Status::fails;
    if (!ok) v.witness = v.details;
    return v;
  });
}

Verdict check_sierpinski(std::size_t n, const HarnessOptions& opts) {
  const std::string input = "sierpinski-" + std::to_string(n);
  return guarded("check_sierpinski", {input}, [&] {
    auto v = make("check_sierpinski", {input});
    const auto s = sierpinski(n);
    Analysis a(input, s.graph, opts);
    const std::size_t expected = n == 1 ? 1 : 3;
    VertexSet corners;
    for (const auto& c : s.corner_cliques) corners = set_union(corners, c);
    Json per_field = Json::object();
    Json violations = Json::array();
    for (const auto& f : opts.fields) {
      const auto& space = a.space(f);
      per_field[f.name()] = space.dimension;
      if (space.dimension != expected)
        violations.push_back(Json{{"field", f.name()}, {"wcdim", space.dimension}, {"expected", expected}});
      if (n < 3) continue;
      for (std::size_t b = 0; b < space.basis.size(); ++b) {
        const auto& w = space.basis[b].values;
        for (Vertex x = 0; x < s.graph.order(); ++x)
          if (!corners.contains(x) && !w[x].is_zero())
            violations.push_back(Json{{"field", f.name()}, {"basis_index", b}, {"nonzero_outside_corners", x}});
        for (const auto& c : s.corner_cliques)
          if (!all_equal(w, c))
            violations.push_back(Json{{"field", f.name()}, {"basis_index", b}, {"not_constant_on", to_json(c)}});
      }
    }
    const bool count_ok = s.graph.order() == sierpinski_vertex_count(n);
    if (!count_ok) violations.push_back(Json{{"vertices", s.graph.order()}, {"formula", sierpinski_vertex_count(n)}});
    v.details = Json{{"vertices", s.graph.order()}, {"mis_count", a.mis().size()}, {"wcdim", per_field},
                     {"expected", expected}};
    v.status = violations.empty() ? Status::holds : Status::fails;
    if (!violations.empty()) v.witness = Json{{"violations", violations}};
    return v;
  });
}

Verdict check_path_cycle_citations(const std::string& kind, std::size_t n, const HarnessOptions& opts) {
  const std::string input = kind + "-" + std::to_string(n);
  return guarded("check_path_cycle_citations", {input}, [&] {
    auto v = make("check_path_cycle_citations", {input});
    if (kind == "path" && n < 5) return not_applicable(v, "path shorter than 5");
    if (kind == "cycle" && n < 8) return not_applicable(v, "cycle shorter than 8");
    if (kind != "path" && kind != "cycle") throw PreconditionError("unknown citation family '" + kind + "'");
    Analysis a(input, kind == "path" ? path(n) : cycle(n), opts);
    Json per_field = Json::object();
    Json violations = Json::array();
    for (const auto& f : opts.fields) {
      const auto& space = a.space(f);
      per_field[f.name()] = space.dimension;
      if (kind == "cycle") {
        if (space.dimension != 0) violations.push_back(Json{{"field", f.name()}, {"wcdim", space.dimension}});
        continue;
      }
      const std::vector<Weighting> ends{indicator_weighting(n, {0, 1}, f), indicator_weighting(n, {n - 2, n - 1}, f)};
      if (space.dimension != 2 || !span_equal(space.basis, ends, f))
        violations.push_back(Json{{"field", f.name()}, {"wcdim", space.dimension}, {"spans_end_edges", false}});
    }
    v.details = Json{{"wcdim", per_field}, {"expected", kind == "path" ? 2 : 0}};
    v.status = violations.empty() ? Status::holds : Status::fails;
    if (!violations.empty()) v.witness = Json{{"violations", violations}};
    return v;
  });
}

std::vector<NamedGraph> erdos_renyi_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n) {
  if (max_n < 2) throw PreconditionError("erdos_renyi_corpus: max_n must be at least 2");
  static constexpr double kProbabilities[] = {0.3, 0.5, 0.7};
  static constexpr const char* kLabels[] = {"0.3", "0.5", "0.7"};
  std::mt19937_64 rng(seed);
  // Explicit mappings keep samples identical across standard libraries.
  auto uniform01 = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<NamedGraph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const double p = kProbabilities[i % 3];
    for (;;) {
      const std::size_t n = 2 + static_cast<std::size_t>(rng() % (max_n - 1));
      std::vector<Edge> edges;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex w = u + 1; w < n; ++w)
          if (uniform01() < p) edges.emplace_back(u, w);
      if (!is_connected(n, edges)) continue;
      out.push_back({"er-" + std::to_string(i) + "-n" + std::to_string(n) + "-p" + kLabels[i % 3],
                     Graph::build(n, edges),
                     {"# Erdos-Renyi sample " + std::to_string(i) + " (seed " + std::to_string(seed) + ")"}});
      break;
    }
  }
  return out;
}

std::vector<NamedSpec> named_specs() {
  std::vector<NamedSpec> out;
  out.push_back({"tri-pendant-a+tri-pendant-b",
                 {find_named_graph("tri-pendant-a")->graph, find_named_graph("tri-pendant-b")->graph,
                  {{0, 0}, {1, 1}, {2, 2}}}});
  out.push_back({"figure6-g1+figure6-g2", {figure6_g1(), figure6_g2(), figure6_glue()}});
  out.push_back({"complete-3+complete-3", {complete(3), complete(3), {{0, 0}, {1, 1}, {2, 2}}}});
  out.push_back({"figure2-k1+complete-3", {figure2_family(1), complete(3), {{0, 1}, {1, 2}, {2, 0}}}});
  out.push_back({"complete-3+complete-3-vertex", {complete(3), complete(3), {{0, 0}}}});
  out.push_back({"path-5+path-5", {path(5), path(5), {{0, 3}, {1, 4}}}});
  return out;
}

Json SuiteReport::to_json() const {
  Json vs = Json::array();
  for (const auto& v : verdicts) vs.push_back(v.to_json());
  return Json{{"suite", suite}, {"seed", seed}, {"fields", fields}, {"verdicts", std::move(vs)}};
}

std::size_t SuiteReport::asserting_failures() const {
  return static_cast<std::size_t>(std::count_if(verdicts.begin(), verdicts.end(), [](const Verdict& v) {
    return v.status == Status::fails && tier_of(v.check_id) == Tier::asserting;
  }));
}

std::string SuiteReport::summary_table() const {
  struct Row {
    std::size_t holds = 0, fails = 0, na = 0;
  };
  std::map<std::string, Row> rows;
  for (const auto& v : verdicts) {
    auto& r = rows[v.check_id];
    (v.status == Status::holds ? r.holds : v.status == Status::fails ? r.fails : r.na)++;
  }
  std::ostringstream out;
  out << "suite " << suite << ", seed " << seed << ", fields";
  for (const auto& f : fields) out << ' ' << f;
  out << "\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-28s %-12s %7s %7s %7s\n", "check", "tier", "holds", "fails", "n/a");
  out << line;
  for (const auto& [id, r] : rows) {
    std::snprintf(line, sizeof line, "%-28s %-12s %7zu %7zu %7zu\n", id.c_str(),
                  tier_of(id) == Tier::asserting ? "asserting" : "report-only", r.holds, r.fails, r.na);
    out << line;
  }
  for (const auto& v : verdicts) {
    if (v.status != Status::fails) continue;
    out << (tier_of(v.check_id) == Tier::asserting ? "FAIL " : "note ") << v.check_id << " on";
    for (const auto& i : v.inputs) out << ' ' << i;
    out << "\n";
  }
  out << "asserting failures: " << asserting_failures() << "\n";
  return out.str();
}

SuiteReport run_suite(const SuiteConfig& config) {
  const auto& s = config.suite;
  if (s != "default" && s != "corpus" && s != "random" && s != "empty")
    throw PreconditionError("unknown suite '" + s + "'");
  const HarnessOptions opts = config.options;
  using Task = std::function<std::vector<Verdict>()>;
  std::vector<Task> tasks;

  auto graph_task = [&](const NamedGraph& ng, bool structural) -> Task {
    return [ng, structural, opts] {
      Analysis a(ng.name, ng.graph, opts);
      std::vector<Verdict> out{check_lower_bound(a), check_sccg_dimension(a)};
      if (structural) {
        out.push_back(check_mis_structure(a));
        out.push_back(check_mis_count(a));
        out.push_back(check_weighting_lemmas(a));
      }
      out.push_back(check_neighbor_swap(a));
      return out;
    };
  };

  if (s == "default" || s == "corpus") {
    const auto& corpus = config.corpus ? *config.corpus : named_corpus();
    for (const auto& ng : corpus) tasks.push_back(graph_task(ng, true));
  }
  if (s == "default") {
    for (const auto& spec : named_specs())
      tasks.push_back([spec, opts] {
        return std::vector<Verdict>{check_scs_mis_structure(spec, opts), check_scs_count(spec, opts),
                                    check_scs_dimension(spec, opts)};
      });
    for (std::size_t n = 1; n <= 4; ++n) tasks.push_back([n, opts] { return std::vector{check_sierpinski(n, opts)}; });
    for (std::size_t n = 5; n <= 9; ++n)
      tasks.push_back([n, opts] { return std::vector{check_path_cycle_citations("path", n, opts)}; });
    for (std::size_t n = 8; n <= 12; ++n)
      tasks.push_back([n, opts] { return std::vector{check_path_cycle_citations("cycle", n, opts)}; });
  }
  if (s == "default" || s == "random")
    for (const auto& ng : erdos_renyi_corpus(config.seed, config.random_graphs)) tasks.push_back(graph_task(ng, true));

  std::vector<std::vector<Verdict>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(config.threads, tasks.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteReport report;
  report.suite = s;
  report.seed = config.seed;
  for (const auto& f : opts.fields) report.fields.push_back(f.name());
  for (auto& r : results)
    for (auto& v : r) report.verdicts.push_back(std::move(v));
  return report;
}

}  // namespace wc
