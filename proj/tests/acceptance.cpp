// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "otisham/constructive.hpp"
#include "otisham/decide.hpp"
#include "otisham/report.hpp"
#include "otisham/topology.hpp"
#include "otisham/trees.hpp"
#include "support/scenarios.hpp"
#include "support/oracle.hpp"

using namespace otisham;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) note << "; ";
      pass = false;
      note << what;
    }
  }
};

int failures = 0;

void report(int id, const char* title, Outcome& o, const std::string& summary) {
  std::printf("AC%d %s  %s  (%s)\n", id, o.pass ? "PASS" : "FAIL", title,
              o.pass ? summary.c_str() : o.note.str().c_str());
  std::fflush(stdout);
  failures += !o.pass;
}

std::vector<SweepEntry> sweep_entries;
double sweep_seconds = 0;

void ac1() {
  Outcome o;
  const auto t0 = Clock::now();
  auto r = reproduce();
  const double secs = seconds_since(t0);
  for (const auto& m : r.mismatches) o.check(false, m);
  o.check(secs < 1.0, "reproduce took " + std::to_string(secs) + " s");
  std::ostringstream s;
  const auto& c = r.report["otis_bf_4_4"];
  s << "|V|=" << c["vertices"] << " |E|=" << c["edges"] << " budget=" << c["budget"] << " bound="
    << c["high_degree_contribution"] << "+" << c["independent_set_size"] << "=" << c["bound"] << ", "
    << static_cast<int>(secs * 1000) << " ms";
  report(1, "headline counts for OTIS(BF(4,4))", o, s.str());
}

void ac2() {
  Outcome o;
  std::ostringstream s;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{4, 4}, {4, 6}}) {
    const auto t0 = Clock::now();
    auto v = decide(otis(gen_bowtie(m, n)));
    const double secs = seconds_since(t0);
    o.check(v.kind == VerdictKind::NonHamiltonian,
            "decide BF(" + std::to_string(m) + "," + std::to_string(n) + ") gave " + to_string(v.kind));
    o.check(secs <= 600, "decide too slow");
    s << "BF(" << m << "," << n << ") " << v.stats.nodes << " nodes; ";
  }
  const auto g = otis(gen_bowtie(4, 6));
  auto expect_kind = [&](const std::string& name, const PropagationResult& r, ContradictionKind kind,
                         const std::string& vertex) {
    auto* bad = std::get_if<Contradiction>(&r);
    if (!bad) return o.check(false, name + ": no contradiction");
    o.check(bad->kind == kind, name + ": got " + to_string(bad->kind));
    if (!vertex.empty()) o.check(g.label(bad->vertex) == vertex, name + ": at " + g.label(bad->vertex));
  };
  expect_kind("both forced", propagate(g, scenarios::both_forced(g)), ContradictionKind::ShortSubcycle, "");
  expect_kind("both deleted", propagate(g, scenarios::both_deleted(g)), ContradictionKind::ShortSubcycle, "");
  std::size_t cases = 0;
  for (const auto& c : scenarios::case_replays(g)) {
    expect_kind(c.name, propagate(g, scenarios::replay_seed(g, c, true)), ContradictionKind::VertexUnderfilled,
                c.vertex);
    ++cases;
  }
  s << "2 subcycle scenarios, " << cases << " underfilled cases";
  report(2, "complete refutation and seeded scenarios", o, s.str());
}

void ac3() {
  Outcome o;
  SweepOptions options;
  options.max_base = 21;
  const auto t0 = Clock::now();
  sweep_entries = sweep(options);
  sweep_seconds = seconds_since(t0);
  std::size_t built = 0;
  for (const auto& e : sweep_entries) {
    if (e.unsupported()) continue;
    if (e.status != "ok") {
      o.check(false, "(" + std::to_string(e.params.m) + "," + std::to_string(e.params.n) + ") " + e.status + " " +
                         e.detail);
    } else {
      ++built;
    }
  }
  o.check(sweep_seconds < 60, "sweep took " + std::to_string(sweep_seconds) + " s");
  std::ostringstream s;
  s << built << " instances verified in " << std::fixed;
  s.precision(2);
  s << sweep_seconds << " s";
  report(3, "constructive sweep up to base order 21", o, s.str());
}

void ac4() {
  Outcome o;
  std::vector<double> x, y;
  for (const auto& e : sweep_entries) {
    if (e.unsupported() || e.via_search || e.status != "ok") continue;
    x.push_back(static_cast<double>(e.vertices));
    y.push_back(static_cast<double>(e.steps));
  }
  auto fit = [](const std::vector<double>& a, const std::vector<double>& b) {
    const double k = static_cast<double>(a.size());
    double sa = 0, sb = 0, saa = 0, sab = 0, sbb = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      sa += a[j]; sb += b[j]; saa += a[j] * a[j]; sab += a[j] * b[j]; sbb += b[j] * b[j];
    }
    const double slope = (k * sab - sa * sb) / (k * saa - sa * sa);
    const double r = (k * sab - sa * sb) / std::sqrt((k * saa - sa * sa) * (k * sbb - sb * sb));
    return std::pair{slope, r * r};
  };
  o.check(x.size() >= 10, "too few points");
  const auto [slope, r2] = fit(x, y);
  std::vector<double> lx, ly;
  for (std::size_t j = 0; j < x.size(); ++j) {
    lx.push_back(std::log(x[j]));
    ly.push_back(std::log(y[j]));
  }
  const double exponent = fit(lx, ly).first;
  o.check(r2 >= 0.95, "R^2 = " + std::to_string(r2));
  o.check(exponent <= 1.15, "log-log exponent = " + std::to_string(exponent));
  std::ostringstream s;
  s.precision(4);
  s << x.size() << " points, " << slope << " steps/vertex, R^2=" << r2 << ", exponent=" << exponent;
  report(4, "construction cost is linear", o, s.str());
}

void ac5() {
  Outcome o;
  std::size_t agree = 0, total = 0;
  auto compare = [&](const std::string& name, const Graph& g) {
    ++total;
    auto v = decide(g);
    const bool want = oracle::HamiltonOracle(g).has_cycle();
    bool ok = v.kind == (want ? VerdictKind::Hamiltonian : VerdictKind::NonHamiltonian);
    if (v.cycle) ok = ok && is_hamiltonian_cycle(g, v.cycle->order);
    if (ok) ++agree;
    else o.check(false, name);
  };
  for (std::size_t k = 3; k <= 10; ++k) compare("C" + std::to_string(k), gen_cycle(k));
  for (std::size_t k = 1; k <= 10; ++k) compare("P" + std::to_string(k), gen_path(k));
  for (std::size_t k = 1; k <= 10; ++k) compare("K" + std::to_string(k), gen_complete(k));
  for (std::size_t m = 3; m <= 8; ++m)
    for (std::size_t n = 3; m + n - 1 <= 10; ++n) compare("BF", gen_bowtie(m, n));
  compare("OTIS(K2)", otis(gen_complete(2)));
  compare("OTIS(P3)", otis(gen_path(3)));
  compare("OTIS(C3)", otis(gen_cycle(3)));
  std::mt19937_64 rng(20240501);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 3 + rng() % 8;
    const double p = 0.25 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
    auto g = oracle::random_graph(rng, n, p);
    compare("random #" + std::to_string(k), g);
  }
  report(5, "decide agrees with the backtracking oracle", o,
         std::to_string(agree) + "/" + std::to_string(total) + " graphs");
}

void ac6() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& e : sweep_entries) {
    if (e.unsupported() || e.status != "ok") continue;
    o.check(e.roots.size() == 3, "missing roots");
    for (const auto& rc : e.roots) {
      ++pairs;
      o.check(rc.independent && rc.trees_ok,
              "(" + std::to_string(e.params.m) + "," + std::to_string(e.params.n) + ") root " + rc.root);
    }
  }
  o.check(pairs > 0, "sweep produced no cycles");
  report(6, "independent spanning trees over the sweep", o, std::to_string(pairs) + " tree pairs verified");
}

void ac7() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& p : sweep_pairs(7)) {
    if (classify(p.m, p.n) == ParamClass::EvenEven) continue;
    auto g = otis(gen_bowtie(p));
    auto built = build_ham_cycle(p.m, p.n);
    if (!built.ok()) {
      o.check(false, "no cycle for (" + std::to_string(p.m) + "," + std::to_string(p.n) + ")");
      continue;
    }
    EdgeSeed seed;
    const auto& order = built.cycle->order;
    for (std::size_t j = 0; j < order.size(); ++j)
      seed.deleted.push_back(require_edge(g, order[j], order[(j + 1) % order.size()]));
    auto v = decide(g, seed);
    o.check(v.kind == VerdictKind::NonHamiltonian,
            "(" + std::to_string(p.m) + "," + std::to_string(p.n) + ") " + to_string(v.kind));
    ++checked;
  }
  report(7, "no second edge-disjoint Hamiltonian cycle", o, std::to_string(checked) + " instances");
}

void ac8() {
  Outcome o;
  const std::vector<std::pair<std::string, Graph>> bases{
      {"C3", gen_cycle(3)}, {"C4", gen_cycle(4)}, {"C5", gen_cycle(5)}, {"K4", gen_complete(4)}};
  for (const auto& [name, base] : bases) {
    const auto g = otis(base);
    const auto t0 = Clock::now();
    auto v = decide(g);
    const double secs = seconds_since(t0);
    o.check(v.kind == VerdictKind::Hamiltonian && v.cycle && is_hamiltonian_cycle(g, v.cycle->order),
            "OTIS(" + name + ") " + to_string(v.kind));
    o.check(secs < 1.0, "OTIS(" + name + ") took " + std::to_string(secs) + " s");
  }
  for (std::size_t dim : {3u, 4u}) {
    auto g = gen_butterfly(dim);
    o.check(g.vertex_count() == dim << dim, "butterfly vertex count");
    o.check(g.edge_count() == 2 * (dim << dim), "butterfly edge count");
    for (VertexId v = 0; v < g.vertex_count(); ++v) o.check(g.degree(v) == 4, "butterfly degree");
  }
  report(8, "Hamiltonian bases and butterfly checks", o, "4 OTIS instances, BF(3) and BF(4)");
}

void ac9() {
  Outcome o;
  std::vector<std::pair<std::string, Graph>> bases;
  std::mt19937_64 rng(9);
  for (int k = 0; k < 50; ++k) {
    auto g = oracle::random_connected(rng, 2 + k % 7, 0.3);
    bases.push_back({"random #" + std::to_string(k) + " " + graph_hash(g), std::move(g)});
  }
  for (std::size_t m = 3; m <= 7; ++m)
    for (std::size_t n = 3; m + n - 1 <= 9; ++n)
      bases.push_back({"BF(" + std::to_string(m) + "," + std::to_string(n) + ")", gen_bowtie(m, n)});
  for (const auto& [name, base] : bases) {
    const auto g = otis(base);
    const std::size_t n = base.vertex_count();
    bool degrees = true;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = 0; v < n; ++v)
        degrees = degrees && g.degree(otis_vertex(n, u, v)) == base.degree(v) + (u != v ? 1 : 0);
    o.check(degrees, name + ": degree law");
    const auto d = diameter(base);
    const auto dd = diameter(g);
    o.check(dd == 2 * d + 1, name + ": diam " + std::to_string(dd) + " vs 2*" + std::to_string(d) + "+1");
  }
  report(9, "degree and diameter laws", o, std::to_string(bases.size()) + " bases");
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9};
  for (const auto& run : criteria) {
    try {
      run();
    } catch (const std::exception& e) {
      std::printf("acceptance: exception: %s\n", e.what());
      ++failures;
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
