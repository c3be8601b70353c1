#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hyperclust/builders.hpp"
#include "hyperclust/corpus.hpp"
#include "hyperclust/dot.hpp"
#include "hyperclust/families.hpp"
#include "hyperclust/json_io.hpp"
#include "hyperclust/property_lab.hpp"
#include "hyperclust/scheme.hpp"

namespace hyperclust::cli {

namespace fs = std::filesystem;

namespace {

// Thrown for bad input files and arguments; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_file(const std::string& s) {
  std::error_code ec;
  return fs::is_regular_file(s, ec);
}

// A JSON file path or a builtin descriptor such as "K3" or "scandalous_G".
Hypergraph load_graph(const std::string& spec) {
  if (is_file(spec)) return hypergraph_from_json(read_file(spec));
  return build_named(spec);
}

SchemeSpec load_scheme(const std::string& spec) {
  if (is_file(spec)) return scheme_from_json(read_file(spec));
  return parse_scheme(spec);
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + out_path);
  f << text;
}

Corpus load_corpus(const CorpusBounds& bounds, std::ostream& err) {
  const char* dir = std::getenv("HYPERCLUST_CACHE_DIR");
  if (!dir || !*dir) return generate_corpus(bounds);
  const fs::path path = fs::path(dir) / ("corpus-" + bounds.key() + ".jsonl");
  std::error_code ec;
  if (fs::is_regular_file(path, ec)) {
    try {
      return corpus_from_jsonl(read_file(path.string()), bounds);
    } catch (const Error& e) {
      err << "warning: ignoring unreadable corpus cache " << path.string() << ": " << e.what() << "\n";
    }
  }
  auto corpus = generate_corpus(bounds);
  fs::create_directories(dir, ec);
  std::ofstream f(path, std::ios::binary);
  if (f) f << corpus_to_jsonl(corpus);
  return corpus;
}

struct CorpusFlags {
  CorpusBounds bounds;
  std::vector<std::string> augment;
  unsigned jobs = 1;
  std::size_t max_counterexamples = 50;
  bool simple = false;

  void attach(CLI::App* app) {
    app->add_option("--max-vertices", bounds.max_vertices, "Largest member vertex count")->capture_default_str();
    app->add_option("--max-edges", bounds.max_edges, "Most distinct edges per member")->capture_default_str();
    app->add_option("--max-edge-size", bounds.max_edge_size, "Largest edge size")->capture_default_str();
    app->add_option("--morphism-vertices", bounds.morphism_vertices, "Exhaustive embeddings up to this size")
        ->capture_default_str();
    app->add_option("--simple-max-n", bounds.simple_max_n, "Largest simple-graph member")->capture_default_str();
    app->add_option("--guard", bounds.guard, "Refuse corpora needing more candidates")->capture_default_str();
    app->add_option("--augment", augment, "Extra graphs (file or descriptor) added to the corpus");
    app->add_option("--jobs,-j", jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    app->add_option("--max-counterexamples", max_counterexamples, "Counterexamples kept in the report")
        ->capture_default_str();
    app->add_flag("--simple", simple, "Check the simple-graph members instead of the hypergraphs");
  }

  Corpus corpus(std::ostream& err) const {
    auto c = load_corpus(bounds, err);
    if (!augment.empty()) {
      std::vector<Hypergraph> extras;
      for (const auto& a : augment) extras.push_back(load_graph(a));
      augment_corpus(c, extras);
    }
    return c;
  }

  CheckOptions options() const { return {jobs, max_counterexamples, simple}; }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Overlapping clustering of hypergraphs via motif embeddings and k-line graphs", "hyperclust"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out,-o", out_path, "Output file (default stdout)");

  // cluster
  auto* cluster_cmd = app.add_subcommand("cluster", "Cluster a graph with a scheme");
  std::string graph_spec;
  std::string scheme_text;
  bool drop_spurious = false;
  cluster_cmd->add_option("--graph,-g", graph_spec, "Hypergraph JSON file or builtin descriptor")->required();
  cluster_cmd->add_option("--scheme,-s", scheme_text, "Scheme: classic, sigma[:D], toy:<id>, representable:<motifs>,k=<k>, or JSON")
      ->required();
  cluster_cmd->add_flag("--drop-spurious", drop_spurious, "Remove parts strictly inside other parts");

  // phi
  auto* phi_cmd = app.add_subcommand("phi", "Replace edges by motif embeddings");
  std::string motifs_text;
  phi_cmd->add_option("--graph,-g", graph_spec, "Hypergraph JSON file or builtin descriptor")->required();
  phi_cmd->add_option("--motifs,-m", motifs_text, "Motif list, e.g. {K2,E3} or E*")->required();

  // linegraph
  auto* lg_cmd = app.add_subcommand("linegraph", "Build the k-line graph");
  std::string k_text = "1";
  std::string format = "json";
  lg_cmd->add_option("--graph,-g", graph_spec, "Hypergraph JSON file or builtin descriptor")->required();
  lg_cmd->add_option("--k", k_text, "Overlap threshold: positive integer or inf")->capture_default_str();
  lg_cmd->add_option("--motifs,-m", motifs_text, "Apply phi with these motifs first");
  lg_cmd->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();

  // check
  auto* check_cmd = app.add_subcommand("check", "Check a property on the small-graph corpus");
  std::string property;
  std::vector<std::string> schemes;
  std::vector<std::string> extra_graphs;
  std::string hull_k;
  CorpusFlags corpus_flags;
  check_cmd->add_option("property", property, "excisive, functorial, refines, equal, hull or connected-hull")
      ->required();
  check_cmd->add_option("--scheme,-s", schemes, "Scheme(s); refines and equal take two (finer first)");
  check_cmd->add_option("--motifs,-m", motifs_text, "Representing set for hull checks");
  check_cmd->add_option("--graph,-g", graph_spec, "Graph adjoined in hull checks");
  check_cmd->add_option("--k", hull_k, "Overlap threshold; makes hull the connected form");
  check_cmd->add_option("--extra", extra_graphs, "Additional graphs evaluated by connected-hull");
  corpus_flags.attach(check_cmd);

  // witness
  auto* witness_cmd = app.add_subcommand("witness", "Non-finite representability witness for a family");
  std::string family_text;
  witness_cmd->add_option("--family,-f", family_text, "Comma-separated simple graphs, e.g. R0,R1,R2")->required();

  // search
  auto* search_cmd = app.add_subcommand("search", "Search for two all-vertex parts from different components");
  SearchBounds search_bounds;
  std::uint64_t seed = 1;
  search_cmd->add_option("--max-vertices", search_bounds.max_vertices)->capture_default_str();
  search_cmd->add_option("--max-edges", search_bounds.max_edges)->capture_default_str();
  search_cmd->add_option("--max-edge-size", search_bounds.max_edge_size)->capture_default_str();
  search_cmd->add_option("--trials", search_bounds.random_trials, "Random trials above 4 vertices")
      ->capture_default_str();
  search_cmd->add_option("--seed", seed)->capture_default_str();

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Embedding counts on growing graph families (CSV)");
  BenchConfig bench;
  std::string family_name = "random";
  std::vector<std::string> bench_motifs;
  bool no_timing = false;
  bench_cmd->add_option("--family", family_name, "random, grid or path")->capture_default_str();
  bench_cmd->add_option("--degeneracy,-d", bench.degeneracy, "Degeneracy cap of the random family")
      ->capture_default_str();
  bench_cmd->add_option("--sizes", bench.sizes, "Vertex counts")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--motif,-m", bench_motifs, "Simple motif descriptor; repeatable, none for an empty set");
  bench_cmd->add_option("--repetitions,-r", bench.repetitions)->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
  bench_cmd->add_flag("--no-timing", no_timing, "Omit wall times so output is byte-stable");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (cluster_cmd->parsed()) {
      const auto g = load_graph(graph_spec);
      auto p = cluster(load_scheme(scheme_text), g);
      if (drop_spurious) p = remove_spurious(p);
      emit(partition_to_json(p, 2) + "\n", out_path, out);
      return kExitOk;
    }
    if (phi_cmd->parsed()) {
      const auto g = load_graph(graph_spec);
      emit(phi_to_json(phi(parse_motif_list(motifs_text), g), 2) + "\n", out_path, out);
      return kExitOk;
    }
    if (lg_cmd->parsed()) {
      auto g = load_graph(graph_spec);
      if (!motifs_text.empty()) g = phi(parse_motif_list(motifs_text), g).graph;
      const auto lg = k_line_graph(g, OverlapThreshold::parse(k_text));
      emit(format == "dot" ? line_graph_to_dot(lg, g) : line_graph_to_json(lg, g, 2) + "\n", out_path, out);
      return kExitOk;
    }
    if (check_cmd->parsed()) {
      static const std::vector<std::string> kProperties{"excisive", "functorial", "refines",
                                                        "equal",    "hull",       "connected-hull"};
      if (std::find(kProperties.begin(), kProperties.end(), property) == kProperties.end()) {
        throw UsageError("unknown property \"" + property + "\"");
      }
      const bool hull = property == "hull" || property == "connected-hull";
      const std::size_t want = property == "refines" || property == "equal" ? 2 : hull ? 0 : 1;
      if (schemes.size() != want) {
        throw UsageError("check " + property + " takes " + std::to_string(want) + " --scheme value(s), got " +
                         std::to_string(schemes.size()));
      }
      if (hull && (motifs_text.empty() || graph_spec.empty())) {
        throw UsageError("check " + property + " needs --motifs and --graph");
      }
      if (!extra_graphs.empty() && !(property == "connected-hull" || (property == "hull" && !hull_k.empty()))) {
        throw UsageError("--extra applies only to the connected hull check");
      }
      std::vector<SchemeSpec> specs;
      for (const auto& s : schemes) specs.push_back(load_scheme(s));
      const auto corpus = corpus_flags.corpus(err);
      const auto options = corpus_flags.options();
      CheckReport report;
      if (property == "excisive") {
        report = check_excisive(specs[0], corpus, options);
      } else if (property == "functorial") {
        report = check_functorial(specs[0], corpus, options);
      } else if (property == "refines") {
        report = check_refines(specs[0], specs[1], corpus, options);
      } else if (property == "equal") {
        report = check_scheme_equal(specs[0], specs[1], corpus, options);
      } else {
        const auto motifs = parse_motif_list(motifs_text);
        const auto g = load_graph(graph_spec);
        if (property == "hull" && hull_k.empty()) {
          report = hull_check(motifs, g, corpus, options);
        } else {
          std::vector<Hypergraph> extras;
          for (const auto& x : extra_graphs) extras.push_back(load_graph(x));
          const auto k = OverlapThreshold::parse(hull_k.empty() ? "1" : hull_k);
          report = connected_hull_check(motifs, g, k, corpus, extras, options);
        }
      }
      emit(report_to_json(report, 2) + "\n", out_path, out);
      return report.pass ? kExitOk : kExitPropertyFailure;
    }
    if (witness_cmd->parsed()) {
      std::vector<std::string> labels;
      const auto family = parse_motif_list(family_text, &labels);
      if (family.complete_edge_family || family.tailed_triangle_family) {
        throw UsageError("witness needs a finite family");
      }
      const auto w = finite_rep_witness(family.motifs);
      nlohmann::ordered_json j;
      j["family"] = labels;
      j["r"] = w.r;
      j["witness"] = nlohmann::ordered_json::parse(hypergraph_to_json(w.witness));
      j["family_connected"] = w.family_connected;
      j["self_connected"] = w.self_connected;
      j["verdict"] = w.verdict() ? "pass" : "fail";
      emit(j.dump(2) + "\n", out_path, out);
      return w.verdict() ? kExitOk : kExitPropertyFailure;
    }
    if (search_cmd->parsed()) {
      const auto outcome = search_equal_parts_example(search_bounds, seed);
      nlohmann::ordered_json j;
      j["status"] = outcome.status();
      j["exhaustive"] = outcome.exhaustive;
      j["examined"] = outcome.examined;
      j["witness"] = outcome.witness ? nlohmann::ordered_json::parse(hypergraph_to_json(*outcome.witness))
                                     : nlohmann::ordered_json(nullptr);
      j["transcript"] = outcome.transcript;
      emit(j.dump(2) + "\n", out_path, out);
      return kExitOk;
    }
    if (bench_cmd->parsed()) {
      bench.family = parse_bench_family(family_name);
      bench.timing = !no_timing;
      for (const auto& m : bench_motifs) {
        if (m == "none") continue;
        bench.motifs.emplace_back(m, build_named(m));
      }
      emit(bench_to_csv(run_bench(bench), bench.timing), out_path, out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hyperclust::cli
