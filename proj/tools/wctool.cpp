// wctool: well-covered dimension toolkit.
//
// Exit codes: 0 ok, 1 usage, 2 parse, 3 validation / failed asserting check,
// 4 resource cap.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wellcovered/edge_list.hpp"
#include "wellcovered/harness.hpp"

namespace fs = std::filesystem;
using namespace wc;

namespace {

constexpr int kUsage = 1, kParse = 2, kValidation = 3, kCap = 4;

struct Config {
  std::vector<std::string> field_names;
  std::size_t mis_cap = kDefaultMisCap;
  bool json = false;
  std::uint64_t seed = 0;
  std::string corpus_dir;
  std::size_t threads = 1;

  std::vector<FieldSpec> fields() const {
    if (field_names.empty()) return HarnessOptions{}.fields;
    std::vector<FieldSpec> out;
    for (const auto& f : field_names) {
      FieldSpec spec = FieldSpec::rationals();
      try {
        spec = FieldSpec::parse(f);
      } catch (const wc::Error& e) {
        throw CLI::ValidationError("--field", e.what());
      }
      if (std::find(out.begin(), out.end(), spec) == out.end()) out.push_back(spec);
    }
    return out;
  }
};

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string stem(const std::string& path) { return fs::path(path).stem().string(); }

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write " + out_path);
  out << text;
}

int cmd_gen(const Config&, const std::string& family, const std::vector<std::size_t>& params, const std::string& out) {
  if (family == "corpus") {
    if (out.empty()) throw PreconditionError("gen corpus needs -o <directory>");
    fs::create_directories(out);
    for (const auto& ng : named_corpus()) write_edge_list_file(fs::path(out) / (ng.name + ".g"), ng.graph, ng.comments);
    return 0;
  }
  const auto ng = generate_family(family, params);
  emit(write_edge_list(ng.graph, ng.comments), out);
  return 0;
}

int cmd_wcdim(const Config& cfg, const std::string& in) {
  const auto file = read_edge_list(in);
  const auto& g = file.graph;
  const auto mis = enumerate_mis(g, cfg.mis_cap);
  const auto report = simplicial_report(g);
  std::vector<WcSpace> spaces;
  for (const auto& f : cfg.fields()) spaces.push_back(well_covered_space(g, mis, f));
  if (cfg.json) {
    Json out = Json::array();
    for (const auto& s : spaces) out.push_back(wcspace_report(stem(in), s));
    std::cout << dump(out);
    return 0;
  }
  const bool agree = std::all_of(spaces.begin(), spaces.end(),
                                 [&](const WcSpace& s) { return s.dimension == spaces.front().dimension; });
  std::string names;
  for (const auto& s : spaces) names += (names.empty() ? "" : ", ") + s.field.name();
  if (agree) {
    std::cout << "wcdim=" << spaces.front().dimension << " (" << names << "), sc=" << report.sc << "\n";
  } else {
    std::cout << "wcdim:";
    for (const auto& s : spaces) std::cout << ' ' << s.field.name() << '=' << s.dimension;
    std::cout << " (fields disagree), sc=" << report.sc << "\n";
  }
  std::cout << "mis_count=" << mis.size() << "\n";
  return 0;
}

int cmd_classify(const Config& cfg, const std::string& in) {
  const auto g = read_edge_list(in).graph;
  const auto report = simplicial_report(g);
  const bool chordal = is_chordal(g);
  const bool sccg = is_sccg(g, report);
  const bool wc = is_well_covered(g, cfg.mis_cap);
  const auto split = scs_split(g);
  if (cfg.json) {
    Json out{{"graph", stem(in)},
             {"chordal", chordal},
             {"sccg", sccg},
             {"well_covered", wc},
             {"scs_splittable", split.has_value()},
             {"simplicial", to_json(report)}};
    if (split) out["split"] = Json{{"shared", to_json(split->shared)}, {"g1_vertices", to_json(split->side1)},
                                   {"g2_vertices", to_json(split->side2)}};
    std::cout << dump(out);
    return 0;
  }
  std::cout << "chordal=" << std::boolalpha << chordal << "\nsccg=" << sccg << "\nwell_covered=" << wc
            << "\nscs_splittable=" << split.has_value() << "\nsc=" << report.sc << "\ncliques=";
  for (std::size_t i = 0; i < report.cliques.size(); ++i) std::cout << (i ? " " : "") << set_text(report.cliques[i]);
  std::cout << "\nconnection_set=" << set_text(report.connection_set) << "\n";
  if (split)
    std::cout << "split: shared=" << set_text(split->shared) << " g1=" << set_text(split->side1)
              << " g2=" << set_text(split->side2) << "\n";
  return 0;
}

int cmd_mis(const Config& cfg, const std::string& in, const std::string& mode) {
  const auto g = read_edge_list(in).graph;
  if (mode != "count" && mode != "list") throw PreconditionError("mis mode must be count or list");
  MisList mis;
  try {
    mis = enumerate_mis(g, cfg.mis_cap);
  } catch (const ResourceLimitError& e) {
    if (cfg.json)
      std::cout << dump(Json{{"graph", stem(in)}, {"mis_count_at_least", e.limit() + 1}, {"cap", e.limit()}});
    else
      std::cout << "mis_count>=" << e.limit() + 1 << " (cap " << e.limit() << ")\n";
    return kCap;
  }
  const auto report = simplicial_report(g);
  const bool sccg = is_sccg(g, report);
  Json out{{"graph", stem(in)}, {"mis_count", mis.size()}};
  if (mode == "list") out["mis"] = to_json(mis);
  std::optional<SccgCountBreakdown> residual, simplicial;
  if (sccg) {
    try {
      residual = sccg_mis_count_formula(g, ResidualReading::residual_size);
      simplicial = sccg_mis_count_formula(g, ResidualReading::simplicial_only);
      out["formula"] = Json{{"residual_size", to_json(*residual)}, {"simplicial_only", to_json(*simplicial)},
                            {"matches_enumeration", residual->total == mis.size() || simplicial->total == mis.size()}};
    } catch (const ResourceLimitError& e) {
      out["formula"] = Json{{"skipped", e.what()}};
    }
  }
  if (cfg.json) {
    std::cout << dump(out);
    return 0;
  }
  std::cout << "mis_count=" << mis.size() << "\n";
  if (residual) {
    for (auto [name, b] : {std::pair{"residual_size", *residual}, std::pair{"simplicial_only", *simplicial}})
      std::cout << "formula[" << name << "]=" << b.total << " (i_count=" << b.i_count << ", product=" << b.product_term
                << ", sum=" << b.sum_term << ")" << (b.total == mis.size() ? "" : " differs from enumeration") << "\n";
  }
  if (mode == "list")
    for (const auto& s : mis.sets) std::cout << set_text(s) << "\n";
  return 0;
}

std::vector<std::pair<Vertex, Vertex>> parse_glue(const std::vector<std::string>& pairs) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& p : pairs) {
    const auto colon = p.find(':');
    std::size_t a = 0, b = 0, used_a = 0, used_b = 0;
    try {
      if (colon == std::string::npos) throw std::invalid_argument(p);
      a = std::stoul(p.substr(0, colon), &used_a);
      b = std::stoul(p.substr(colon + 1), &used_b);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--glue", "expected u2:u1, got '" + p + "'");
    }
    if (used_a != colon || used_b != p.size() - colon - 1)
      throw CLI::ValidationError("--glue", "expected u2:u1, got '" + p + "'");
    out.emplace_back(a, b);
  }
  return out;
}

int cmd_compose(const Config& cfg, const std::string& in1, const std::string& in2,
                const std::vector<std::string>& glue_text, const std::string& out) {
  ScsSpec spec{read_edge_list(in1).graph, read_edge_list(in2).graph, parse_glue(glue_text)};
  const auto sum = scs_compose(spec);
  auto comments = sum.comments;
  comments.insert(comments.begin(), "# G1 = " + stem(in1) + ", G2 = " + stem(in2));
  const auto fields = cfg.fields();
  Json dims = Json::object();
  std::string text;
  for (const auto& f : fields) {
    const auto d1 = wcdim(spec.g1, f, cfg.mis_cap), d2 = wcdim(spec.g2, f, cfg.mis_cap);
    const auto dc = wcdim(sum.graph, f, cfg.mis_cap);
    dims[f.name()] = Json{{"g1", d1}, {"g2", d2}, {"sum", dc}};
    text += f.name() + ": wcdim " + std::to_string(d1) + "+" + std::to_string(d2) + "-1=" +
            std::to_string(d1 + d2 - 1) + ", composite wcdim=" + std::to_string(dc) + "\n";
  }
  const auto sc = simplicial_report(sum.graph).sc;
  const std::string file = write_edge_list(sum.graph, comments);
  std::ostream& report = out.empty() ? std::cerr : std::cout;
  if (!out.empty()) emit(file, out);
  else std::cout << file;
  if (cfg.json)
    report << dump(Json{{"order", sum.graph.order()}, {"shared", to_json(sum.shared)}, {"wcdim", dims}, {"sc", sc}});
  else
    report << "composite: " << sum.graph.order() << " vertices, shared " << set_text(sum.shared) << ", sc=" << sc << "\n"
           << text;
  return 0;
}

int cmd_split(const Config& cfg, const std::string& in, bool all) {
  const auto g = read_edge_list(in).graph;
  auto splits = all ? scs_split_all(g) : std::vector<ScsSplit>{};
  if (!all)
    if (auto s = scs_split(g)) splits.push_back(std::move(*s));
  if (cfg.json) {
    Json out = Json::array();
    for (const auto& s : splits) {
      Json glue = Json::array();
      for (auto [a, b] : s.spec.glue) glue.push_back(std::to_string(a) + ":" + std::to_string(b));
      out.push_back(Json{{"shared", to_json(s.shared)}, {"g1_vertices", to_json(s.side1)},
                         {"g2_vertices", to_json(s.side2)}, {"glue", glue}});
    }
    std::cout << dump(out);
    return 0;
  }
  if (splits.empty()) std::cout << "no simplicial clique sum split\n";
  for (const auto& s : splits)
    std::cout << "shared=" << set_text(s.shared) << " g1=" << set_text(s.side1) << " g2=" << set_text(s.side2) << "\n";
  return 0;
}

std::vector<NamedGraph> load_corpus(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".g") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<NamedGraph> out;
  for (const auto& f : files) {
    auto file = read_edge_list(f);
    out.push_back({f.stem().string(), std::move(file.graph), std::move(file.comments)});
  }
  return out;
}

int cmd_verify(const Config& cfg, const std::string& suite) {
  SuiteConfig sc;
  sc.suite = suite;
  sc.seed = cfg.seed;
  sc.options.fields = cfg.fields();
  sc.options.mis_cap = cfg.mis_cap;
  sc.threads = cfg.threads;
  if (!cfg.corpus_dir.empty()) sc.corpus = load_corpus(cfg.corpus_dir);
  const auto report = run_suite(sc);
  if (cfg.json)
    std::cout << dump(report.to_json());
  else
    std::cout << report.summary_table();
  return report.asserting_failures() == 0 ? 0 : kValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Well-covered dimension toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--field", cfg.field_names, "Field: q or gf:<p> (repeatable; default Q, GF2, GF3)");
  app.add_option("--mis-cap", cfg.mis_cap, "Maximum number of maximal independent sets")->check(CLI::PositiveNumber);
  app.add_flag("--json", cfg.json, "Emit JSON");
  app.add_option("--seed", cfg.seed, "Random seed for sampled suites");
  app.add_option("--corpus", cfg.corpus_dir, "Directory of .g files used as the verification corpus")
      ->check(CLI::ExistingDirectory);
  app.add_option("--threads", cfg.threads, "Worker threads for verify")->check(CLI::PositiveNumber);

  std::string family, in, in2, out, mode = "count", suite = "default";
  std::vector<std::size_t> params;
  std::vector<std::string> glue;
  bool all = false;

  auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen->add_option("family", family, "complete|path|cycle|star|sierpinski|figure1|figure2|figure6-g1|figure6-g2|"
                                    "figure6|<corpus name>|corpus")
      ->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("-o,--out", out, "Output file (directory for 'corpus')");

  auto* wcd = app.add_subcommand("wcdim", "Well-covered dimension over each field");
  wcd->add_option("input", in)->required()->check(CLI::ExistingFile);

  auto* cls = app.add_subcommand("classify", "Chordality, SCCG, well-coveredness, split search");
  cls->add_option("input", in)->required()->check(CLI::ExistingFile);

  auto* mis = app.add_subcommand("mis", "Count or list maximal independent sets");
  mis->add_option("input", in)->required()->check(CLI::ExistingFile);
  mis->add_option("mode", mode, "count or list")->check(CLI::IsMember({"count", "list"}));

  auto* cmp = app.add_subcommand("compose", "Simplicial clique sum of two graphs");
  cmp->add_option("g1", in)->required()->check(CLI::ExistingFile);
  cmp->add_option("g2", in2)->required()->check(CLI::ExistingFile);
  cmp->add_option("--glue", glue, "G2 vertex : G1 vertex (repeatable)")->required();
  cmp->add_option("-o,--out", out, "Output file");

  auto* spl = app.add_subcommand("split", "Search for simplicial clique sum decompositions");
  spl->add_option("input", in)->required()->check(CLI::ExistingFile);
  spl->add_flag("--all", all, "List every split");

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("suite", suite, "default|corpus|random|empty");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*gen) return cmd_gen(cfg, family, params, out);
    if (*wcd) return cmd_wcdim(cfg, in);
    if (*cls) return cmd_classify(cfg, in);
    if (*mis) return cmd_mis(cfg, in, mode);
    if (*cmp) return cmd_compose(cfg, in, in2, glue, out);
    if (*spl) return cmd_split(cfg, in, all);
    if (*ver) return cmd_verify(cfg, suite);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const wc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kCap;
  } catch (const ScsValidationError& e) {
    std::cerr << "invalid simplicial clique sum: " << e.what() << "\n";
    return kValidation;
  } catch (const wc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kUsage;
}
