#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wellcovered/families.hpp"
#include "wellcovered/json_io.hpp"
#include "wellcovered/scs.hpp"

namespace wc {

enum class Status { holds, fails, not_applicable };
const char* status_name(Status s) noexcept;

/// Asserting checks fail the suite; report-only checks publish their outcome.
enum class Tier { asserting, report_only };
Tier tier_of(const std::string& check_id);

struct Verdict {
  std::string check_id;
  std::vector<std::string> inputs;
  Status status = Status::not_applicable;
  Json details = Json::object();
  Json witness;  // null unless status is fails

  Json to_json() const;
};

struct HarnessOptions {
  std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)};
  std::size_t mis_cap = kDefaultMisCap;
};

/// Lazily computed data about one graph, shared by the checks that run on it.
/// Not thread-safe; each task owns its own instance.
class Analysis {
 public:
  Analysis(std::string name, Graph g, HarnessOptions opts = {});

  const std::string& name() const noexcept { return name_; }
  const Graph& graph() const noexcept { return g_; }
  const HarnessOptions& options() const noexcept { return opts_; }

  const MisList& mis();
  const SimplicialReport& report();
  const WcSpace& space(const FieldSpec& field);
  bool sccg();
  bool chordal();

 private:
  std::string name_;
  Graph g_;
  HarnessOptions opts_;
  std::optional<MisList> mis_;
  std::optional<SimplicialReport> report_;
  std::optional<bool> chordal_;
  std::map<std::string, WcSpace> spaces_;
};

struct NamedSpec {
  std::string name;
  ScsSpec spec;
};

Verdict check_lower_bound(Analysis& a);
Verdict check_sccg_dimension(Analysis& a);
Verdict check_mis_structure(Analysis& a);
Verdict check_mis_count(Analysis& a);
Verdict check_weighting_lemmas(Analysis& a);
Verdict check_neighbor_swap(Analysis& a);
Verdict check_scs_mis_structure(const NamedSpec& s, const HarnessOptions& opts = {});
Verdict check_scs_count(const NamedSpec& s, const HarnessOptions& opts = {});
Verdict check_scs_dimension(const NamedSpec& s, const HarnessOptions& opts = {});
Verdict check_sierpinski(std::size_t n, const HarnessOptions& opts = {});
/// kind is "path" (n >= 5) or "cycle" (n >= 8).
Verdict check_path_cycle_citations(const std::string& kind, std::size_t n, const HarnessOptions& opts = {});

/// Classification of one MIS against the SCCG structure theorem: 1 or 2 for
/// the two forms, 0 when neither applies.
int classify_mis(const Graph& g, const SimplicialReport& report, const VertexSet& mis);

/// Connected G(n, p) samples with 2 <= n <= max_n and p cycling through
/// {0.3, 0.5, 0.7}; rejected disconnected draws are resampled. Depends only on
/// the seed.
std::vector<NamedGraph> erdos_renyi_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n = 10);

/// The shipped SCS specifications: valid sums plus deliberately invalid ones.
std::vector<NamedSpec> named_specs();

struct SuiteConfig {
  std::string suite = "default";
  std::uint64_t seed = 0;
  HarnessOptions options;
  std::size_t threads = 1;
  std::size_t random_graphs = 500;
  /// Corpus entries to run on instead of named_corpus() when set.
  std::optional<std::vector<NamedGraph>> corpus;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<std::string> fields;
  std::vector<Verdict> verdicts;

  Json to_json() const;
  std::string summary_table() const;
  /// Number of asserting verdicts with status fails.
  std::size_t asserting_failures() const;
};

/// Suites: "default" (corpus, specs, citations, random sample), "corpus"
/// (named graphs only), "random" (random sample only), "empty". Throws
/// PreconditionError for other names. Output never depends on thread count.
SuiteReport run_suite(const SuiteConfig& config);

}  // namespace wc
