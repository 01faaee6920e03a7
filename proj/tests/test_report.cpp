#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "otisham/report.hpp"

using namespace otisham;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string(OTISHAM_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = std::string(OTISHAM_TEST_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Reproduce, HeadlineNumbers) {
  auto r = reproduce();
  EXPECT_TRUE(r.ok());
  for (const auto& m : r.mismatches) ADD_FAILURE() << m;
  const auto& c = r.report["otis_bf_4_4"];
  EXPECT_EQ(c["vertices"], 49);
  EXPECT_EQ(c["edges"], 77);
  EXPECT_EQ(c["budget"], 28);
  EXPECT_EQ(c["bound"], 29);
  EXPECT_EQ(c["decide"]["verdict"], "NonHamiltonian");
  EXPECT_EQ(r.report["otis_bf_4_6"]["decide"]["verdict"], "NonHamiltonian");
}

TEST(Reproduce, TamperedGeneratorIsCaught) {
  auto shifted = reproduce([](std::size_t m, std::size_t n) { return gen_bowtie(m + 1, n); });
  EXPECT_FALSE(shifted.ok());
  auto extra = reproduce([](std::size_t m, std::size_t n) {
    auto g = gen_bowtie(m, n);
    g.add_edge("1", "3");
    return g;
  });
  EXPECT_FALSE(extra.ok());
  EXPECT_EQ(extra.report["ok"], false);
}

TEST(Reproduce, ReportIsDeterministic) { EXPECT_EQ(reproduce().report.dump(), reproduce().report.dump()); }

TEST(Sweep, SmallestIsTheFigureCase) {
  SweepOptions o;
  o.max_base = 5;
  auto entries = sweep(o);
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].params.m, 3u);
  EXPECT_EQ(entries[0].params.n, 3u);
  EXPECT_TRUE(entries[0].via_search);
  EXPECT_TRUE(entries[0].passed());
  o.max_base = 4;
  EXPECT_THROW(sweep(o), GraphError);
}

TEST(Sweep, UpToThirteen) {
  SweepOptions o;
  o.max_base = 13;
  auto entries = sweep(o);
  bool saw44 = false, saw46 = false;
  for (const auto& e : entries) {
    EXPECT_TRUE(e.passed()) << e.params.m << "," << e.params.n << " " << e.status << " " << e.detail;
    if (e.param_class == ParamClass::EvenEven) {
      EXPECT_TRUE(e.unsupported());
      saw44 = saw44 || (e.params.m == 4 && e.params.n == 4);
      saw46 = saw46 || (e.params.m == 4 && e.params.n == 6);
    } else {
      EXPECT_EQ(e.roots.size(), 3u);
      for (const auto& rc : e.roots) EXPECT_TRUE(rc.edge_disjoint);
    }
  }
  EXPECT_TRUE(saw44);
  EXPECT_TRUE(saw46);
  EXPECT_EQ(sweep_json(entries, 13)["ok"], true);
}

TEST(Sweep, JsonDoesNotDependOnWorkerCount) {
  SweepOptions one;
  one.max_base = 11;
  one.threads = 1;
  SweepOptions four = one;
  four.threads = 4;
  EXPECT_EQ(sweep_json(sweep(one), 11).dump(), sweep_json(sweep(four), 11).dump());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("reproduce").status, 0);
  EXPECT_EQ(cli("no-such-command").status, 4);
  auto unsupported = cli("ham-build --m 4 --n 4");
  EXPECT_EQ(unsupported.status, 0);
  EXPECT_NE(unsupported.out.find("UnsupportedClass"), std::string::npos);
  EXPECT_EQ(cli("ham-build --m 7 --n 7 --tables transcribed").status, 3);

  const auto k4 = temp_file("k4.txt", to_edge_list(gen_complete(4)));
  EXPECT_EQ(cli("decide --in " + k4).status, 0);
  const auto bf46 = temp_file("bf46.txt", to_edge_list(otis(gen_bowtie(4, 6))));
  EXPECT_EQ(cli("decide --budget-nodes 1 --in " + bf46).status, 2);
  EXPECT_EQ(cli("refute-count --in " + bf46).status, 2);

  const auto c4 = temp_file("c4.txt", to_edge_list(gen_cycle(4)));
  const auto bad = temp_file("bad_cycle.json", "{\"order\": [\"1\", \"3\", \"2\", \"4\"]}");
  const auto good = temp_file("good_cycle.json", "{\"order\": [\"1\", \"2\", \"3\", \"4\"]}");
  EXPECT_EQ(cli("verify --in " + c4 + " --cycle " + good).status, 0);
  EXPECT_EQ(cli("verify --in " + c4 + " --cycle " + bad).status, 3);
}

TEST(Cli, JsonIsByteIdenticalAcrossRuns) {
  for (const std::string args : {"--json reproduce", "--json ham-build --m 5 --n 8", "--json sweep --max-base 9"}) {
    auto a = cli(args);
    auto b = cli(args);
    EXPECT_EQ(a.status, 0) << args;
    EXPECT_FALSE(a.out.empty()) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_TRUE(json::accept(a.out)) << args;
  }
  auto gen = cli("gen bowtie --m 4 --n 6");
  EXPECT_EQ(gen.out, cli("gen bowtie --m 4 --n 6").out);
  EXPECT_EQ(gen.out, to_edge_list(gen_bowtie(4, 6)));
}

TEST(Cli, IstEmitsIndependentTrees) {
  const auto c5 = temp_file("c5.txt", to_edge_list(gen_cycle(5)));
  const auto cyc = temp_file("c5_cycle.json", "{\"order\": [\"1\", \"2\", \"3\", \"4\", \"5\"]}");
  auto r = cli("--json ist --in " + c5 + " --cycle " + cyc + " --root 1");
  ASSERT_EQ(r.status, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["independent"], true);
  EXPECT_EQ(j["t1"]["2"], "3");
  EXPECT_EQ(j["t2"]["2"], "1");
}
