#include "muspectra/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "muspectra/certificate.hpp"
#include "muspectra/fixtures.hpp"
#include "muspectra/graph_io.hpp"
#include "muspectra/search.hpp"
#include "muspectra/structural.hpp"

#ifndef MU_SPECTRA_FIXTURE_DIR
#define MU_SPECTRA_FIXTURE_DIR "fixtures"
#endif

namespace muspectra {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph = "petersen";
  int t = 0;
  std::string objective = "mu2";
  std::uint64_t node_limit = SearchConfig{}.node_limit;
  std::optional<std::int64_t> time_limit_ms;
  int threads = 1;
  std::uint64_t seed = 1;
  int count = 10;
  bool json = false;
  bool timing = false;
  bool no_symmetry = false;
  bool no_seeds = false;
  std::string certificate;
  std::string out_dir;
  std::string witness_out;
  int min_subset = 7;
};

fs::path fixture_dir() {
  if (const char* env = std::getenv("MU_SPECTRA_FIXTURES"); env != nullptr && *env != '\0') {
    return env;
  }
  return MU_SPECTRA_FIXTURE_DIR;
}

SearchConfig search_config(const Options& o) {
  SearchConfig cfg;
  cfg.node_limit = o.node_limit;
  cfg.time_limit_ms = o.time_limit_ms;
  cfg.threads = o.threads;
  cfg.use_reflection_symmetry = !o.no_symmetry;
  return cfg;
}

// Built-in Petersen colorings plus every certificate in the fixture
// directory whose graph is `g`.
std::vector<EdgeColoring> seeds_for(const Graph& g, std::ostream& err) {
  std::vector<EdgeColoring> seeds;
  if (g == petersen()) {
    for (const auto& [name, cert] : fixtures()) seeds.push_back(cert.coloring);
  }
  const fs::path dir = fixture_dir();
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return seeds;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const fs::path& file : files) {
    try {
      Certificate cert = load_certificate_file(file);
      if (cert.graph == g) seeds.push_back(std::move(cert.coloring));
    } catch (const std::exception& e) {
      err << "warning: skipping fixture " << file.string() << ": " << e.what() << "\n";
    }
  }
  return seeds;
}

ordered_json graph_summary(const Graph& g) {
  ordered_json j;
  j["name"] = g.name();
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["max_degree"] = g.max_degree();
  j["chromatic_index"] = chromatic_index(g);
  return j;
}

ordered_json evidence_json(const BoundEvidence& ev) {
  ordered_json j;
  j["kind"] = std::string(kind_name(ev.kind));
  j["value"] = ev.value;
  j["detail"] = ev.detail;
  ordered_json counts = ordered_json::object();
  for (const auto& [key, value] : ev.counts) counts[key] = value;
  j["counts"] = counts;
  return j;
}

std::string witness_name(const Graph& g, const SearchOutcome& o) {
  return g.name() + "-t" + std::to_string(o.t) + "-" + std::string(to_string(o.objective));
}

ordered_json outcome_json(const Graph& g, const SearchOutcome& o, bool with_witness) {
  ordered_json j;
  j["objective"] = std::string(to_string(o.objective));
  j["t"] = o.t;
  j["status"] = std::string(to_string(o.status));
  if (o.exact()) j["value"] = o.lo;
  j["lo"] = o.lo;
  j["hi"] = o.hi;
  j["nodes_visited"] = o.nodes_visited;
  j["search_completed"] = o.search_completed;
  ordered_json ev = ordered_json::array();
  for (const BoundEvidence& e : o.evidence) ev.push_back(evidence_json(e));
  j["evidence"] = ev;
  if (with_witness && o.witness) {
    j["witness"] = certificate_to_json(make_certificate(g, *o.witness, witness_name(g, o)));
  }
  return j;
}

std::string value_text(int lo, int hi, bool exact) {
  return exact ? std::to_string(lo) + " (exact)"
               : "[" + std::to_string(lo) + ", " + std::to_string(hi) + "] (bounds)";
}

void print_graph_line(const Graph& g, std::ostream& out) {
  out << "graph " << g.name() << ": " << g.vertex_count() << " vertices, " << g.edge_count()
      << " edges, chi'=" << chromatic_index(g) << "\n";
}

void add_timing(ordered_json& report, Clock::time_point start) {
  report["wall_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

int cmd_verify(const Options& o, std::ostream& out) {
  fs::path file = o.certificate;
  if (!fs::exists(file) && !file.has_parent_path()) {
    fs::path in_dir = fixture_dir() / file;
    if (!in_dir.has_extension()) in_dir += ".json";
    if (fs::exists(in_dir)) file = in_dir;
  }
  const Certificate cert = load_certificate_file(file);
  const CertificateCheck check = verify_certificate(cert);
  const std::string name = cert.name.empty() ? file.stem().string() : cert.name;

  if (o.json) {
    ordered_json r;
    r["command"] = "verify";
    r["certificate"] = file.string();
    r["name"] = name;
    r["graph"] = graph_summary(cert.graph);
    r["t"] = cert.coloring.t();
    r["result"] = check.ok() ? "pass" : "fail";
    if (check.report) {
      r["f"] = check.report->f;
      ordered_json ints = ordered_json::array();
      for (int v : check.report->v_int.members()) ints.push_back(cert.graph.label(v));
      r["interval_vertices"] = ints;
    }
    ordered_json vs = ordered_json::array();
    for (const Violation& v : check.violations) {
      vs.push_back({{"kind", std::string(kind_name(v.kind))}, {"message", v.message}});
    }
    r["violations"] = vs;
    r["mismatches"] = check.mismatches;
    out << r.dump(2) << "\n";
  } else {
    out << (check.ok() ? "PASS " : "FAIL ") << name << ": t=" << cert.coloring.t();
    if (check.report) out << ", f=" << check.report->f;
    out << "\n";
    if (check.report) {
      out << "  interval vertices:";
      for (int v : check.report->v_int.members()) out << " " << cert.graph.label(v);
      out << "\n";
    }
    for (const Violation& v : check.violations) {
      out << "  violation (" << kind_name(v.kind) << "): " << v.message << "\n";
    }
    for (const std::string& m : check.mismatches) out << "  mismatch: " << m << "\n";
  }
  return check.ok() ? kExitOk : kExitFailed;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const Graph g = graph_from_spec(o.graph);
  SearchConfig cfg = search_config(o);
  if (!o.no_seeds) cfg.seed_witnesses = seeds_for(g, err);
  const Objective objective = o.objective == "mu1" ? Objective::Mu1 : Objective::Mu2;
  const SearchOutcome r = solve(g, o.t, objective, cfg);

  if (!o.witness_out.empty() && r.witness) {
    std::ofstream file(o.witness_out);
    if (!file) throw InputError("cannot write " + o.witness_out);
    file << certificate_to_json(make_certificate(g, *r.witness, witness_name(g, r))).dump(2)
         << "\n";
  }
  if (o.json) {
    ordered_json report;
    report["command"] = "solve";
    report["graph"] = graph_summary(g);
    report["outcome"] = outcome_json(g, r, true);
    if (o.timing) add_timing(report, start);
    out << report.dump(2) << "\n";
    return kExitOk;
  }
  print_graph_line(g, out);
  out << to_string(objective) << "(" << g.name() << ", " << o.t
      << ") = " << value_text(r.lo, r.hi, r.exact()) << "\n";
  out << "nodes visited: " << r.nodes_visited
      << (r.search_completed ? ", search completed" : "") << "\n";
  for (const BoundEvidence& e : r.evidence) {
    out << "evidence " << kind_name(e.kind) << " = " << e.value << ": " << e.detail << "\n";
  }
  if (r.witness) {
    out << "witness:\n"
        << certificate_to_json(make_certificate(g, *r.witness, witness_name(g, r))).dump(2)
        << "\n";
  }
  if (o.timing) {
    out << "wall ms: "
        << std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count()
        << "\n";
  }
  return kExitOk;
}

int cmd_profile(const Options& o, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const Graph g = graph_from_spec(o.graph);
  const MuProfile p =
      profile(g, search_config(o), o.no_seeds ? std::vector<EdgeColoring>{} : seeds_for(g, err));
  const std::pair<const char*, const Aggregate*> aggregates[] = {
      {"mu11", &p.mu11}, {"mu12", &p.mu12}, {"mu21", &p.mu21}, {"mu22", &p.mu22}};

  if (o.json) {
    ordered_json report;
    report["command"] = "profile";
    report["graph"] = graph_summary(g);
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < p.mu1.size(); ++i) {
      rows.push_back({{"t", p.mu1[i].t},
                      {"mu1", outcome_json(g, p.mu1[i], false)},
                      {"mu2", outcome_json(g, p.mu2[i], false)}});
    }
    report["rows"] = rows;
    ordered_json agg;
    for (const auto& [name, a] : aggregates) {
      agg[name] = {{"status", a->exact() ? "exact" : "bounds"}, {"lo", a->lo}, {"hi", a->hi}};
    }
    report["aggregates"] = agg;
    if (o.timing) add_timing(report, start);
    out << report.dump(2) << "\n";
    return kExitOk;
  }
  print_graph_line(g, out);
  out << "  t  mu1                mu2\n";
  for (std::size_t i = 0; i < p.mu1.size(); ++i) {
    out << std::setw(3) << p.mu1[i].t << "  " << std::left << std::setw(19)
        << value_text(p.mu1[i].lo, p.mu1[i].hi, p.mu1[i].exact())
        << value_text(p.mu2[i].lo, p.mu2[i].hi, p.mu2[i].exact()) << std::right << "\n";
  }
  for (const auto& [name, a] : aggregates) {
    out << name << " = " << value_text(a->lo, a->hi, a->exact()) << "\n";
  }
  if (o.timing) {
    out << "wall ms: "
        << std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count()
        << "\n";
  }
  return kExitOk;
}

struct LemmaResult {
  std::string id;
  std::string status;  // pass, fail or skip
  std::string summary;
  std::vector<std::pair<std::string, std::int64_t>> counts;
};

std::vector<LemmaResult> replay_lemmas(const Graph& g, int min_subset) {
  std::vector<LemmaResult> out;
  const int chi = chromatic_index(g);

  if (g.is_cubic()) {
    const MatchingIntersectionCheck m = check_matching_intersection(g);
    out.push_back({"perfect-matchings-intersect", m.holds() ? "pass" : "fail",
                   std::to_string(m.matchings) + " perfect matchings, " +
                       std::to_string(m.intersecting_pairs) + "/" + std::to_string(m.pairs) +
                       " pairs intersect",
                   {{"matchings", m.matchings},
                    {"pairs", m.pairs},
                    {"intersecting_pairs", m.intersecting_pairs}}});
  } else {
    out.push_back({"perfect-matchings-intersect", "skip", "graph is not cubic", {}});
  }

  if (g.vertex_count() <= kMaxPathForestVertices) {
    const SubsetObstructionCheck s = check_subset_obstruction(g, min_subset);
    std::string summary = std::to_string(s.obstructed) + "/" + std::to_string(s.subsets) +
                          " vertex subsets of size >= " + std::to_string(min_subset) +
                          " contain an induced claw or 6-cycle";
    if (s.counterexample) {
      summary += "; first counterexample:";
      for (const std::string& l : InducedView{&g, *s.counterexample, {}}.labels()) summary += " " + l;
    }
    out.push_back({"large-subsets-obstructed", s.holds() ? "pass" : "fail", summary,
                   {{"subsets", s.subsets}, {"obstructed", s.obstructed}}});
  } else {
    out.push_back({"large-subsets-obstructed", "skip", "too many vertices to scan", {}});
  }

  if (g.is_cubic()) {
    const VertexDeletionCheck d = check_vertex_deletions(g, 4);
    out.push_back({"vertex-deletions-need-4-colors", d.holds() ? "pass" : "fail",
                   std::to_string(d.at_expected_index) + "/" + std::to_string(d.deletions) +
                       " vertex-deleted subgraphs have chromatic index 4",
                   {{"deletions", d.deletions}, {"at_index_4", d.at_expected_index}}});
  } else {
    out.push_back({"vertex-deletions-need-4-colors", "skip", "graph is not cubic", {}});
  }

  if (g.is_regular()) {
    const bool holds = chi > g.max_degree();
    out.push_back({"not-interval-colorable", holds ? "pass" : "fail",
                   "chi'=" + std::to_string(chi) + ", Delta=" + std::to_string(g.max_degree()),
                   {{"chromatic_index", chi}, {"max_degree", g.max_degree()}}});
  } else {
    out.push_back({"not-interval-colorable", "skip", "graph is not regular", {}});
  }

  if (g.min_degree() >= 2 && g.vertex_count() <= kMaxPathForestVertices) {
    const int cap = max_path_forest_subset(g);
    out.push_back({"path-forest-cap", "pass",
                   "largest induced path forest has " + std::to_string(cap) + " vertices",
                   {{"max_path_forest_subset", cap}}});
  } else {
    out.push_back({"path-forest-cap", "skip", "needs minimum degree >= 2 and a small graph", {}});
  }
  return out;
}

int cmd_lemmas(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const Graph g = graph_from_spec(o.graph);
  const std::vector<LemmaResult> results = replay_lemmas(g, o.min_subset);
  const bool failed = std::any_of(results.begin(), results.end(),
                                  [](const LemmaResult& r) { return r.status == "fail"; });
  if (o.json) {
    ordered_json report;
    report["command"] = "lemmas";
    report["graph"] = graph_summary(g);
    ordered_json checks = ordered_json::array();
    for (const LemmaResult& r : results) {
      ordered_json counts = ordered_json::object();
      for (const auto& [key, value] : r.counts) counts[key] = value;
      checks.push_back(
          {{"check", r.id}, {"status", r.status}, {"summary", r.summary}, {"counts", counts}});
    }
    report["checks"] = checks;
    report["result"] = failed ? "fail" : "pass";
    if (o.timing) add_timing(report, start);
    out << report.dump(2) << "\n";
  } else {
    print_graph_line(g, out);
    for (const LemmaResult& r : results) {
      std::string tag = r.status;
      std::transform(tag.begin(), tag.end(), tag.begin(), [](char c) { return std::toupper(c); });
      out << tag << " " << r.id << ": " << r.summary << "\n";
    }
  }
  return failed ? kExitFailed : kExitOk;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  const std::vector<std::string> specs = {"petersen", "cycle:<n>", "path:<n>", "complete:<n>",
                                          "@file.json"};
  if (o.json) {
    ordered_json report;
    report["command"] = "catalog";
    report["graphs"] = specs;
    report["fixture_dir"] = fixture_dir().string();
    out << report.dump(2) << "\n";
    return kExitOk;
  }
  out << "graph specs:";
  for (const std::string& s : specs) out << " " << s;
  out << "\nfixture directory: " << fixture_dir().string() << "\n";
  out << "built-in petersen: " << petersen().vertex_count() << " vertices, "
      << petersen().edge_count() << " edges\n";
  return kExitOk;
}

int cmd_fixtures(const Options& o, std::ostream& out) {
  const std::map<std::string, Certificate> all = fixtures();
  if (!o.out_dir.empty()) {
    fs::create_directories(o.out_dir);
    for (const std::string& name : fixture_names()) {
      const fs::path file = fs::path(o.out_dir) / (name + ".json");
      std::ofstream f(file);
      if (!f) throw InputError("cannot write " + file.string());
      f << certificate_to_json(all.at(name)).dump(2) << "\n";
    }
  }
  if (o.json) {
    ordered_json list = ordered_json::array();
    for (const std::string& name : fixture_names()) {
      const Certificate& c = all.at(name);
      list.push_back({{"name", name}, {"t", c.coloring.t()}, {"f", c.claimed_f.value_or(-1)}});
    }
    ordered_json report;
    report["command"] = "fixtures";
    report["fixtures"] = list;
    out << report.dump(2) << "\n";
    return kExitOk;
  }
  for (const std::string& name : fixture_names()) {
    const Certificate& c = all.at(name);
    out << std::left << std::setw(9) << name << std::right << " t=" << std::setw(2)
        << c.coloring.t() << " f=" << c.claimed_f.value_or(-1) << "\n";
  }
  if (!o.out_dir.empty()) out << "wrote " << all.size() << " certificates to " << o.out_dir << "\n";
  return kExitOk;
}

int cmd_sample(const Options& o, std::ostream& out) {
  const Graph g = graph_from_spec(o.graph);
  const std::vector<EdgeColoring> colorings = sample(g, o.t, o.seed, o.count);
  std::vector<int> fs;
  for (const EdgeColoring& c : colorings) fs.push_back(analyze(g, c).f);
  const int lo = fs.empty() ? 0 : *std::min_element(fs.begin(), fs.end());
  const int hi = fs.empty() ? 0 : *std::max_element(fs.begin(), fs.end());
  if (o.json) {
    ordered_json report;
    report["command"] = "sample";
    report["graph"] = graph_summary(g);
    report["t"] = o.t;
    report["seed"] = o.seed;
    report["f"] = fs;
    report["min_f"] = lo;
    report["max_f"] = hi;
    out << report.dump(2) << "\n";
    return kExitOk;
  }
  print_graph_line(g, out);
  out << colorings.size() << " samples at t=" << o.t << " (seed " << o.seed << "): f in [" << lo
      << ", " << hi << "]\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Interval-vertex statistics of proper edge colorings", "mu_spectra"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "emit the report as JSON");
  app.add_flag("--timing", o.timing, "include wall-clock time in reports");

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph, "petersen, cycle:<n>, path:<n>, complete:<n> or @file.json")
        ->capture_default_str();
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--node-limit", o.node_limit, "search nodes per query")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--time-limit-ms", o.time_limit_ms, "wall-clock limit per query")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--threads", o.threads, "search threads")->check(CLI::Range(1, 256));
    sub->add_flag("--no-symmetry", o.no_symmetry, "disable the reflection symmetry cut");
    sub->add_flag("--no-seeds", o.no_seeds, "do not start from fixture colorings");
  };

  CLI::App* verify = app.add_subcommand("verify", "check a coloring certificate and its claims");
  verify->add_option("certificate", o.certificate, "certificate file or fixture name")->required();

  CLI::App* solve_cmd = app.add_subcommand("solve", "compute mu1 or mu2 at one palette size");
  add_graph(solve_cmd);
  solve_cmd->add_option("--t", o.t, "number of colors")->required();
  solve_cmd->add_option("--objective", o.objective)
      ->check(CLI::IsMember({"mu1", "mu2"}))
      ->capture_default_str();
  solve_cmd->add_option("--witness-out", o.witness_out, "write the witness certificate here");
  add_budget(solve_cmd);

  CLI::App* profile_cmd = app.add_subcommand("profile", "mu1 and mu2 at every legal t");
  add_graph(profile_cmd);
  add_budget(profile_cmd);

  CLI::App* lemmas = app.add_subcommand("lemmas", "replay the mechanized structural checks");
  add_graph(lemmas);
  lemmas->add_option("--min-subset", o.min_subset, "smallest subset size for the obstruction scan")
      ->capture_default_str();

  CLI::App* catalog = app.add_subcommand("catalog", "list graph specs and the fixture directory");

  CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "list the built-in colorings");
  fixtures_cmd->add_option("--out", o.out_dir, "write one certificate per fixture into DIR");

  CLI::App* sample_cmd = app.add_subcommand("sample", "draw random proper colorings");
  add_graph(sample_cmd);
  sample_cmd->add_option("--t", o.t, "number of colors")->required();
  sample_cmd->add_option("--seed", o.seed)->capture_default_str();
  sample_cmd->add_option("--count", o.count)->check(CLI::NonNegativeNumber)->capture_default_str();

  std::vector<const char*> argv{"mu_spectra"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*verify) return cmd_verify(o, out);
    if (*solve_cmd) return cmd_solve(o, out, err);
    if (*profile_cmd) return cmd_profile(o, out, err);
    if (*lemmas) return cmd_lemmas(o, out);
    if (*catalog) return cmd_catalog(o, out);
    if (*fixtures_cmd) return cmd_fixtures(o, out);
    if (*sample_cmd) return cmd_sample(o, out);
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CertificateError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace muspectra
