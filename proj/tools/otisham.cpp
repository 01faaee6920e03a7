// otisham: command-line front end for the bowtie-OTIS toolkit.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "otisham/constructive.hpp"
#include "otisham/counting.hpp"
#include "otisham/decide.hpp"
#include "otisham/graph.hpp"
#include "otisham/report.hpp"
#include "otisham/topology.hpp"
#include "otisham/trees.hpp"

namespace {

using otisham::json;

enum Exit { kOk = 0, kFailure = 1, kInconclusive = 2, kMismatch = 3, kUsage = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

otisham::Graph load_graph(const std::string& path) {
  try {
    return otisham::parse_edge_list(slurp(path));
  } catch (const otisham::GraphError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// JSON given inline or as @path.
json load_json(const std::string& arg) {
  const std::string text = !arg.empty() && arg.front() == '@' ? slurp(arg.substr(1)) : arg;
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("bad JSON: ") + e.what());
  }
}

json load_json_file_or_inline(const std::string& arg) {
  if (!arg.empty() && arg.front() != '{' && arg.front() != '[' && arg.front() != '@') {
    return load_json("@" + arg);
  }
  return load_json(arg);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

void emit(const json& report, bool as_json, const std::string& text) {
  if (as_json) {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

std::string echo(int argc, char** argv) {
  std::string s;
  for (int k = 1; k < argc; ++k) {
    if (k > 1) s += ' ';
    s += argv[k];
  }
  return s;
}

json cycle_json(const otisham::Graph& g, const otisham::HamCycle& c) {
  return {{"graph_hash", otisham::graph_hash(g)},
          {"order", c.order},
          {"verified", otisham::is_hamiltonian_cycle(g, c.order)}};
}

otisham::EdgeSeed parse_seed(const otisham::Graph& g, const json& j) {
  otisham::EdgeSeed seed;
  auto edges = [&](const char* key, std::vector<otisham::EdgeId>& out) {
    if (!j.contains(key)) return;
    for (const auto& pair : j.at(key)) {
      if (!pair.is_array() || pair.size() != 2) throw UsageError("seed edges are [u, v] pairs");
      auto u = pair[0].get<std::string>();
      auto v = pair[1].get<std::string>();
      auto a = g.find(u);
      auto b = g.find(v);
      auto e = a && b ? g.find_edge(*a, *b) : std::nullopt;
      if (!e) throw UsageError("seed edge (" + u + ", " + v + ") is not in the graph");
      out.push_back(*e);
    }
  };
  edges("forced", seed.forced);
  edges("deleted", seed.deleted);
  return seed;
}

struct Budget {
  std::uint64_t nodes = otisham::SearchBudget{}.max_nodes;
  double seconds = otisham::SearchBudget{}.max_seconds;

  void attach(CLI::App* cmd) {
    cmd->add_option("--budget-nodes", nodes, "search node limit")->capture_default_str();
    cmd->add_option("--budget-secs", seconds, "search time limit in seconds")->capture_default_str();
  }
  otisham::DecideOptions options() const {
    otisham::DecideOptions o;
    o.budget.max_nodes = nodes;
    o.budget.max_seconds = seconds;
    return o;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bowtie-OTIS Hamiltonicity toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", otisham::kToolVersion);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a JSON report");

  int code = kOk;
  const std::string command = echo(argc, argv);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a base graph");
  gen->require_subcommand(1);
  bool dot = false;
  std::string out_path;
  std::size_t gm = 3, gn = 3, dim = 3;
  auto* gen_bowtie = gen->add_subcommand("bowtie", "two cycles sharing a cut vertex");
  gen_bowtie->add_option("--m", gm, "left cycle length")->required();
  gen_bowtie->add_option("--n", gn, "right cycle length")->required();
  auto* gen_bf = gen->add_subcommand("butterfly", "wrapped butterfly");
  gen_bf->add_option("--dim", dim, "dimension")->required();
  for (auto* sub : {gen_bowtie, gen_bf}) {
    sub->add_flag("--dot", dot, "emit DOT instead of an edge list");
    sub->add_option("--out", out_path, "output file (default stdout)");
  }
  bool normalize = false;
  gen_bowtie->add_flag("--normalize", normalize, "put the pair in canonical orientation");

  // otis
  std::string in_path;
  auto* otis_cmd = app.add_subcommand("otis", "OTIS network over a base graph");
  otis_cmd->add_option("--in", in_path, "base edge list")->required();
  otis_cmd->add_option("--out", out_path, "output file (default stdout)");
  otis_cmd->add_flag("--dot", dot, "emit DOT with clusters as subgraphs");

  // decide
  Budget budget;
  std::string seed_arg;
  bool parallel = false;
  auto* decide_cmd = app.add_subcommand("decide", "decide Hamiltonicity");
  decide_cmd->add_option("--in", in_path, "edge list")->required();
  decide_cmd->add_option("--seed", seed_arg, "JSON {\"forced\": [[u,v],..], \"deleted\": [..]} or @file");
  decide_cmd->add_flag("--parallel", parallel, "search the two root branches concurrently");
  budget.attach(decide_cmd);

  // refute-count
  auto* refute_cmd = app.add_subcommand("refute-count", "counting refutation");
  refute_cmd->add_option("--in", in_path, "edge list")->required();

  // ham-build
  std::size_t bm = 3, bn = 3;
  bool emit_keys = false;
  std::string tables = "derived";
  auto* build_cmd = app.add_subcommand("ham-build", "table-driven Hamiltonian cycle of OTIS(BF(m,n))");
  build_cmd->add_option("--m", bm, "left cycle length")->required();
  build_cmd->add_option("--n", bn, "right cycle length")->required();
  build_cmd->add_flag("--emit-key-edges", emit_keys, "print the key edges with provenance");
  build_cmd->add_option("--tables", tables, "key-edge tables")
      ->check(CLI::IsMember({"derived", "transcribed"}))
      ->capture_default_str();
  build_cmd->add_flag("--dot", dot, "emit the OTIS graph as DOT");
  budget.attach(build_cmd);

  // ist
  std::string cycle_arg, root;
  auto* ist_cmd = app.add_subcommand("ist", "two independent spanning trees from a Hamiltonian cycle");
  ist_cmd->add_option("--cycle", cycle_arg, "cycle certificate JSON (inline or file)")->required();
  ist_cmd->add_option("--root", root, "root label")->required();
  ist_cmd->add_option("--in", in_path, "host graph (default: the cycle itself)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check a Hamiltonian cycle certificate");
  verify_cmd->add_option("--in", in_path, "edge list")->required();
  verify_cmd->add_option("--cycle", cycle_arg, "cycle certificate JSON (inline or file)")->required();

  // export
  std::string format = "dot";
  auto* export_cmd = app.add_subcommand("export", "convert an edge list");
  export_cmd->add_option("--in", in_path, "edge list")->required();
  export_cmd->add_option("--format", format, "dot, edgelist or json")
      ->check(CLI::IsMember({"dot", "edgelist", "json"}))
      ->capture_default_str();
  export_cmd->add_option("--out", out_path, "output file (default stdout)");
  bool group = false;
  export_cmd->add_flag("--clusters", group, "group OTIS clusters in DOT output");

  // reproduce
  auto* reproduce_cmd = app.add_subcommand("reproduce", "recompute the even-even headline numbers");
  budget.attach(reproduce_cmd);

  // sweep
  std::size_t max_base = 21;
  std::size_t threads = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "build and check every bowtie-OTIS up to a base size");
  sweep_cmd->add_option("--max-base", max_base, "largest base order m+n-1")->capture_default_str();
  sweep_cmd->add_option("--threads", threads, "workers (default OTISHAM_THREADS or all cores)");
  budget.attach(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) {
      otisham::Graph g;
      if (gen_bowtie->parsed()) {
        auto p = normalize ? otisham::BowtieParams::normalized(gm, gn) : otisham::BowtieParams{gm, gn};
        g = otisham::gen_bowtie(p);
      } else {
        g = otisham::gen_butterfly(dim);
      }
      write_text(out_path, dot ? otisham::to_dot(g) : otisham::to_edge_list(g));
    } else if (otis_cmd->parsed()) {
      auto g = otisham::otis(load_graph(in_path));
      write_text(out_path, dot ? otisham::to_dot(g, true) : otisham::to_edge_list(g));
    } else if (decide_cmd->parsed()) {
      auto g = load_graph(in_path);
      auto options = budget.options();
      options.parallel_root = parallel;
      otisham::EdgeSeed seed;
      if (!seed_arg.empty()) seed = parse_seed(g, load_json(seed_arg));
      auto verdict = otisham::decide(g, seed, options);
      json r{{"command", command}, {"version", otisham::kToolVersion}, {"inputs", {{"graph", otisham::graph_hash(g)}}}};
      r.update(otisham::verdict_json(verdict));
      std::ostringstream text;
      text << otisham::to_string(verdict.kind) << " (" << verdict.stats.nodes << " nodes, depth "
           << verdict.stats.max_depth << ")\n";
      if (verdict.cycle) {
        for (const auto& l : verdict.cycle->order) text << l << ' ';
        text << '\n';
      }
      emit(r, as_json, text.str());
      if (verdict.kind == otisham::VerdictKind::Inconclusive) code = kInconclusive;
    } else if (refute_cmd->parsed()) {
      auto g = load_graph(in_path);
      if (!otisham::is_connected(g)) throw UsageError("refute-count needs a connected graph");
      auto analysis = otisham::counting_analysis(g);
      json r{{"command", command}, {"version", otisham::kToolVersion}, {"inputs", {{"graph", otisham::graph_hash(g)}}}};
      std::ostringstream text;
      if (analysis.refutes()) {
        r["certificate"] = otisham::certificate_json(g, analysis);
        text << "NonHamiltonian: bound " << analysis.certificate.bound() << " > budget "
             << analysis.certificate.budget << " (" << analysis.certificate.high_degree_contribution
             << " + " << analysis.certificate.independent_set.size() << ")\n";
      } else {
        r["inconclusive"] = true;
        r["too_large"] = analysis.too_large;
        r["analysis"] = otisham::certificate_json(g, analysis);
        text << "inconclusive: bound " << analysis.certificate.bound() << " <= budget "
             << analysis.certificate.budget << (analysis.too_large ? " (candidate set too large)" : "")
             << '\n';
        code = kInconclusive;
      }
      emit(r, as_json, text.str());
    } else if (build_cmd->parsed()) {
      otisham::BuildOptions options;
      options.tables = tables == "derived" ? otisham::KeyTableSource::Derived
                                           : otisham::KeyTableSource::Transcribed;
      options.fallback = budget.options();
      auto result = otisham::build_ham_cycle(bm, bn, options);
      const auto g = otisham::otis(otisham::gen_bowtie(result.params));
      json r{{"command", command}, {"version", otisham::kToolVersion},
             {"m", result.params.m}, {"n", result.params.n},
             {"class", otisham::to_string(result.param_class)}};
      std::ostringstream text;
      text << "OTIS(BF(" << result.params.m << "," << result.params.n << ")) "
           << otisham::to_string(result.param_class) << '\n';
      if (emit_keys) {
        json keys = json::array();
        if (otisham::has_key_edge_table(result.param_class)) {
          auto set = options.tables == otisham::KeyTableSource::Derived
                         ? otisham::derived_key_edges(result.params.m, result.params.n)
                         : otisham::key_edges(result.params.m, result.params.n, result.param_class);
          for (const auto& k : set.edges) {
            keys.push_back({{"cluster", k.cluster}, {"edge", {k.a, k.b}}, {"provenance", k.provenance}});
            text << "cluster " << k.cluster << ": (" << k.a << "," << k.b << ")  " << k.provenance << '\n';
          }
        }
        r["key_edges"] = keys;
      }
      if (result.ok()) {
        r["cycle"] = cycle_json(g, *result.cycle);
        r["path"] = result.via_search ? "search" : "tables";
        r["steps"] = result.propagation_steps;
        text << "Hamiltonian cycle of length " << result.cycle->size() << " (verified)\n";
        if (!emit_keys) {
          for (const auto& l : result.cycle->order) text << l << ' ';
          text << '\n';
        }
      } else {
        const auto& f = *result.failure;
        r["failure"] = {{"kind", otisham::to_string(f.kind)}, {"message", f.message}};
        if (f.element) r["failure"]["element"] = *f.element;
        text << "failed: " << otisham::to_string(f.kind) << ": " << f.message
             << (f.element ? " [" + *f.element + "]" : "") << '\n';
        code = f.kind == otisham::FailureKind::UnsupportedClass ? kOk : kMismatch;
      }
      if (dot) {
        std::cout << otisham::to_dot(g, true);
      } else {
        emit(r, as_json, text.str());
      }
    } else if (ist_cmd->parsed()) {
      auto cert = load_json_file_or_inline(cycle_arg);
      otisham::HamCycle cycle{cert.at("order").get<std::vector<std::string>>()};
      otisham::Graph g;
      if (!in_path.empty()) {
        g = load_graph(in_path);
      } else {
        for (const auto& l : cycle.order) g.add_vertex(l);
        for (std::size_t k = 0; k < cycle.size(); ++k) g.add_edge(cycle.order[k], cycle.order[(k + 1) % cycle.size()]);
      }
      if (!otisham::is_hamiltonian_cycle(g, cycle.order)) throw UsageError("cycle is not Hamiltonian in the graph");
      auto pair = otisham::build_ists(cycle, root);
      auto report = otisham::check_independence(pair, g);
      const bool independent = report.well_formed && report.vertex_disjoint;
      json r{{"command", command}, {"version", otisham::kToolVersion}, {"root", root},
             {"t1", pair.t1}, {"t2", pair.t2},
             {"omitted_1", {pair.omitted_1.first, pair.omitted_1.second}},
             {"omitted_2", {pair.omitted_2.first, pair.omitted_2.second}},
             {"independent", independent}, {"edge_disjoint", report.edge_disjoint}};
      std::ostringstream text;
      text << "root " << root << ": independent=" << (independent ? "true" : "false")
           << " edge_disjoint=" << (report.edge_disjoint ? "true" : "false") << '\n';
      emit(r, as_json, text.str());
      if (!independent) code = kMismatch;
    } else if (verify_cmd->parsed()) {
      auto g = load_graph(in_path);
      auto cert = load_json_file_or_inline(cycle_arg);
      auto order = cert.at("order").get<std::vector<std::string>>();
      auto check = otisham::check_hamiltonian_cycle(g, order);
      json r{{"command", command}, {"version", otisham::kToolVersion},
             {"inputs", {{"graph", otisham::graph_hash(g)}}},
             {"verified", check == otisham::CycleCheck::Ok}, {"reason", otisham::to_string(check)}};
      if (cert.contains("graph_hash") && cert["graph_hash"] != otisham::graph_hash(g)) {
        r["hash_mismatch"] = true;
      }
      emit(r, as_json, std::string(otisham::to_string(check)) + '\n');
      if (check != otisham::CycleCheck::Ok) code = kMismatch;
    } else if (export_cmd->parsed()) {
      auto g = load_graph(in_path);
      if (format == "dot") {
        write_text(out_path, otisham::to_dot(g, group));
      } else if (format == "edgelist") {
        write_text(out_path, otisham::to_edge_list(g));
      } else {
        json edges = json::array();
        for (const auto& e : g.edges()) edges.push_back({g.label(e.u), g.label(e.v)});
        json j{{"graph_hash", otisham::graph_hash(g)}, {"vertices", g.labels()}, {"edges", edges}};
        write_text(out_path, j.dump(2) + '\n');
      }
    } else if (reproduce_cmd->parsed()) {
      auto outcome = otisham::reproduce([](std::size_t m, std::size_t n) { return otisham::gen_bowtie(m, n); },
                                        budget.options());
      const auto& r = outcome.report;
      std::ostringstream text;
      const auto& a = r["otis_bf_4_4"];
      text << "OTIS(BF(4,4)): |V|=" << a["vertices"] << " |E|=" << a["edges"] << " budget=" << a["budget"]
           << " bound=" << a["high_degree_contribution"] << "+" << a["independent_set_size"] << "="
           << a["bound"] << '\n';
      text << "  degree census:";
      for (const auto& [deg, count] : a["degree_census"].items()) text << " deg" << deg << "=" << count;
      text << "\n  degree 5:";
      for (const auto& l : a["degree_5_vertices"]) text << ' ' << l.get<std::string>();
      text << "\n  decide: " << a["decide"]["verdict"].get<std::string>() << " (" << a["decide"]["nodes"]
           << " nodes)\n";
      const auto& b = r["otis_bf_4_6"];
      text << "OTIS(BF(4,6)): |V|=" << b["vertices"] << " |E|=" << b["edges"]
           << " counting=" << (b["certificate"]["refutes"].get<bool>() ? "refutes" : "inconclusive")
           << " decide: " << b["decide"]["verdict"].get<std::string>() << " (" << b["decide"]["nodes"]
           << " nodes)\n";
      for (const auto& m : outcome.mismatches) text << "MISMATCH " << m << '\n';
      emit(r, as_json, text.str());
      if (!outcome.ok()) code = kMismatch;
    } else if (sweep_cmd->parsed()) {
      if (max_base < 5) throw UsageError("--max-base must be at least 5");
      otisham::SweepOptions options;
      options.max_base = max_base;
      options.threads = threads;
      options.build.fallback = budget.options();
      auto entries = otisham::sweep(options);
      auto r = otisham::sweep_json(entries, max_base);
      std::ostringstream text;
      for (const auto& e : entries) {
        text << "BF(" << e.params.m << "," << e.params.n << ") " << otisham::to_string(e.param_class) << ": "
             << e.status;
        if (!e.detail.empty()) text << " (" << e.detail << ")";
        if (!e.unsupported() && e.status == "ok") text << (e.passed() ? " trees ok" : " TREES FAILED");
        text << '\n';
      }
      text << "passed " << r["summary"]["passed"] << ", failed " << r["summary"]["failed"] << ", unsupported "
           << r["summary"]["unsupported"] << '\n';
      emit(r, as_json, text.str());
      if (!r["ok"].get<bool>()) code = kMismatch;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const otisham::GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return code;
}
