#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "otisham/constructive.hpp"
#include "otisham/counting.hpp"
#include "otisham/decide.hpp"
#include "otisham/graph.hpp"
#include "otisham/topology.hpp"
#include "otisham/trees.hpp"

namespace otisham {

inline constexpr const char* kToolVersion = "0.1.0";

using json = nlohmann::ordered_json;

/// Degree -> number of vertices with that degree.
inline std::map<std::size_t, std::size_t> degree_census(const Graph& g) {
  std::map<std::size_t, std::size_t> census;
  for (VertexId v = 0; v < g.vertex_count(); ++v) ++census[g.degree(v)];
  return census;
}

inline json census_json(const std::map<std::size_t, std::size_t>& census) {
  json out = json::object();
  for (const auto& [deg, count] : census) out[std::to_string(deg)] = count;
  return out;
}

inline json labels_json(const Graph& g, const std::vector<VertexId>& ids) {
  json out = json::array();
  for (VertexId v : ids) out.push_back(g.label(v));
  return out;
}

inline json certificate_json(const Graph& g, const CountingAnalysis& a) {
  const auto& c = a.certificate;
  json out;
  out["budget"] = c.budget;
  out["high_degree"] = labels_json(g, c.high_degree);
  out["high_degree_contribution"] = c.high_degree_contribution;
  out["independent_set"] = labels_json(g, c.independent_set);
  out["independent_set_size"] = c.independent_set.size();
  out["bound"] = c.bound();
  out["candidates"] = a.candidates;
  out["too_large"] = a.too_large;
  out["refutes"] = a.refutes();
  return out;
}

inline json verdict_json(const HamVerdict& v) {
  json out;
  out["verdict"] = to_string(v.kind);
  out["witness"] = v.cycle ? json(v.cycle->order) : json::array();
  out["nodes"] = v.stats.nodes;
  out["depth"] = v.stats.max_depth;
  return out;
}

// ---------------------------------------------------------------------------
// reproduce

using BowtieGenerator = std::function<Graph(std::size_t, std::size_t)>;

struct ReproduceOutcome {
  json report;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Regenerates the two even-even instances and checks their headline numbers.
inline ReproduceOutcome reproduce(const BowtieGenerator& generator = [](std::size_t m, std::size_t n) {
  return gen_bowtie(m, n);
}, const DecideOptions& options = {}) {
  ReproduceOutcome out;
  auto expect = [&](const std::string& what, const json& got, const json& want) {
    if (got != want) out.mismatches.push_back(what + ": expected " + want.dump() + ", got " + got.dump());
  };

  const Graph g44 = otis(generator(4, 4));
  const Graph g46 = otis(generator(4, 6));
  json r;
  r["command"] = "reproduce";
  r["version"] = kToolVersion;
  r["inputs"] = {{"otis_bf_4_4", graph_hash(g44)}, {"otis_bf_4_6", graph_hash(g46)}};

  // Counting argument on OTIS(BF(4,4)).
  auto counting = counting_analysis(g44);
  json c;
  c["vertices"] = g44.vertex_count();
  c["edges"] = g44.edge_count();
  c["budget"] = counting.certificate.budget;
  c["high_degree_contribution"] = counting.certificate.high_degree_contribution;
  c["independent_set_size"] = counting.certificate.independent_set.size();
  c["bound"] = counting.certificate.bound();
  c["certificate"] = certificate_json(g44, counting);
  const auto census = degree_census(g44);
  c["degree_census"] = census_json(census);
  std::vector<VertexId> deg5;
  for (VertexId v = 0; v < g44.vertex_count(); ++v) {
    if (g44.degree(v) == 5) deg5.push_back(v);
  }
  c["degree_5_vertices"] = labels_json(g44, deg5);
  r["otis_bf_4_4"] = c;

  expect("|V| of OTIS(BF(4,4))", c["vertices"], 49);
  expect("|E| of OTIS(BF(4,4))", c["edges"], 77);
  expect("edge budget", c["budget"], 28);
  expect("degree >= 4 contribution", c["high_degree_contribution"], 20);
  expect("independent set size", c["independent_set_size"], 9);
  expect("lower bound", c["bound"], 29);
  expect("degree census", c["degree_census"], json{{"2", 6}, {"3", 36}, {"4", 1}, {"5", 6}});
  expect("degree 5 vertices", c["degree_5_vertices"],
         json{"1:4", "2:4", "3:4", "5:4", "6:4", "7:4"});
  expect("counting refutes OTIS(BF(4,4))", counting.refutes(), true);

  auto counting46 = counting_analysis(g46);
  json c46;
  c46["vertices"] = g46.vertex_count();
  c46["edges"] = g46.edge_count();
  c46["certificate"] = certificate_json(g46, counting46);
  c46["degree_census"] = census_json(degree_census(g46));
  expect("counting on OTIS(BF(4,6)) is inconclusive", counting46.refutes(), false);

  auto v44 = decide(g44, {}, options);
  auto v46 = decide(g46, {}, options);
  r["otis_bf_4_4"]["decide"] = verdict_json(v44);
  c46["decide"] = verdict_json(v46);
  r["otis_bf_4_6"] = c46;
  expect("decide OTIS(BF(4,4))", to_string(v44.kind), "NonHamiltonian");
  expect("decide OTIS(BF(4,6))", to_string(v46.kind), "NonHamiltonian");

  r["mismatches"] = out.mismatches;
  r["ok"] = out.ok();
  out.report = std::move(r);
  return out;
}

// ---------------------------------------------------------------------------
// sweep

struct RootCheck {
  std::string root;
  bool independent = false;
  bool edge_disjoint = false;
  bool trees_ok = false;
};

struct SweepEntry {
  BowtieParams params;
  ParamClass param_class = ParamClass::EvenEven;
  std::size_t vertices = 0;
  std::string status;  // "ok", "UnsupportedClass" or a failure kind
  bool via_search = false;
  std::uint64_t steps = 0;
  std::size_t key_edges = 0;
  std::vector<RootCheck> roots;
  std::string detail;
  std::optional<HamCycle> cycle;

  bool unsupported() const { return status == "UnsupportedClass"; }
  bool passed() const {
    if (unsupported()) return true;
    if (status != "ok") return false;
    return std::all_of(roots.begin(), roots.end(),
                       [](const RootCheck& r) { return r.independent && r.trees_ok; });
  }
};

struct SweepOptions {
  std::size_t max_base = 21;
  BuildOptions build;
  std::size_t threads = 0;  // 0: OTISHAM_THREADS or hardware concurrency
  bool keep_cycles = false;
};

/// Every normalized pair with m + n - 1 <= max_base, even-even included.
inline std::vector<BowtieParams> sweep_pairs(std::size_t max_base) {
  std::vector<BowtieParams> pairs;
  for (std::size_t m = 3; m + 2 <= max_base; ++m) {
    for (std::size_t n = 3; m + n - 1 <= max_base; ++n) {
      if (BowtieParams{m, n}.is_normalized()) pairs.push_back({m, n});
    }
  }
  return pairs;
}

inline SweepEntry sweep_one(const BowtieParams& p, const SweepOptions& options) {
  SweepEntry e;
  e.params = p;
  e.param_class = classify(p.m, p.n);
  e.vertices = p.last() * p.last();
  auto built = build_ham_cycle(p.m, p.n, options.build);
  e.via_search = built.via_search;
  e.steps = built.propagation_steps;
  e.key_edges = built.key_edge_count;
  if (!built.ok()) {
    e.status = to_string(built.failure->kind);
    e.detail = built.failure->message;
    if (built.failure->element) e.detail += " [" + *built.failure->element + "]";
    return e;
  }
  const Graph g = otis(gen_bowtie(p));
  if (!is_hamiltonian_cycle(g, built.cycle->order)) {
    e.status = "Unverified";
    return e;
  }
  e.status = "ok";
  const std::string last = std::to_string(p.last());
  const std::string cut = std::to_string(p.cut());
  for (const auto& root : {otis_label("1", "1"), otis_label(cut, cut), otis_label(last, last)}) {
    auto pair = build_ists(*built.cycle, root);
    auto report = check_independence(pair, g);
    RootCheck rc;
    rc.root = root;
    rc.trees_ok = check_tree(pair.t1, root, g).ok() && check_tree(pair.t2, root, g).ok();
    rc.independent = report.well_formed && report.vertex_disjoint;
    rc.edge_disjoint = report.edge_disjoint;
    e.roots.push_back(rc);
  }
  if (options.keep_cycles) e.cycle = std::move(built.cycle);
  return e;
}

inline std::size_t worker_count(std::size_t requested) {
  if (requested) return requested;
  if (const char* env = std::getenv("OTISHAM_THREADS")) {
    try {
      std::size_t n = std::stoul(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Builds, verifies and checks tree independence for each pair; results
/// come back in pair order whatever the worker count.
inline std::vector<SweepEntry> sweep(const SweepOptions& options) {
  if (options.max_base < 5) throw GraphError("sweep needs max_base >= 5");
  const auto pairs = sweep_pairs(options.max_base);
  std::vector<SweepEntry> results(pairs.size());
  const std::size_t workers = std::min(worker_count(options.threads), pairs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < pairs.size(); k = next++) results[k] = sweep_one(pairs[k], options);
  };
  std::vector<std::future<void>> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.push_back(std::async(std::launch::async, work));
  work();
  for (auto& f : pool) f.get();
  return results;
}

inline json sweep_json(const std::vector<SweepEntry>& entries, std::size_t max_base) {
  json r;
  r["command"] = "sweep";
  r["version"] = kToolVersion;
  r["max_base"] = max_base;
  json rows = json::array();
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t unsupported = 0;
  for (const auto& e : entries) {
    json row;
    row["m"] = e.params.m;
    row["n"] = e.params.n;
    row["class"] = to_string(e.param_class);
    row["vertices"] = e.vertices;
    row["status"] = e.status;
    if (!e.unsupported()) {
      row["path"] = e.via_search ? "search" : "tables";
      row["key_edges"] = e.key_edges;
      row["steps"] = e.steps;
      json roots = json::array();
      for (const auto& rc : e.roots) {
        roots.push_back({{"root", rc.root},
                         {"independent", rc.independent},
                         {"edge_disjoint", rc.edge_disjoint},
                         {"trees_ok", rc.trees_ok}});
      }
      row["roots"] = roots;
    }
    if (!e.detail.empty()) row["detail"] = e.detail;
    row["passed"] = e.passed();
    rows.push_back(row);
    if (e.unsupported()) {
      ++unsupported;
    } else if (e.passed()) {
      ++passed;
    } else {
      ++failed;
    }
  }
  r["results"] = rows;
  r["summary"] = {{"passed", passed}, {"failed", failed}, {"unsupported", unsupported}};
  r["ok"] = failed == 0;
  return r;
}

}  // namespace otisham
