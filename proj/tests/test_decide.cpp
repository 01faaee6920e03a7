#include <gtest/gtest.h>

#include <random>

#include "otisham/decide.hpp"
#include "otisham/topology.hpp"
#include "support/oracle.hpp"

using namespace otisham;

namespace {

std::vector<std::pair<std::string, Graph>> fixtures() {
  std::vector<std::pair<std::string, Graph>> out;
  for (std::size_t k = 3; k <= 10; ++k) out.push_back({"C" + std::to_string(k), gen_cycle(k)});
  for (std::size_t k = 1; k <= 10; ++k) out.push_back({"P" + std::to_string(k), gen_path(k)});
  for (std::size_t k = 1; k <= 10; ++k) out.push_back({"K" + std::to_string(k), gen_complete(k)});
  for (std::size_t m = 3; m <= 8; ++m)
    for (std::size_t n = 3; m + n - 1 <= 10; ++n) {
      out.push_back({"BF(" + std::to_string(m) + "," + std::to_string(n) + ")", gen_bowtie(m, n)});
    }
  out.push_back({"OTIS(K2)", otis(gen_complete(2))});
  out.push_back({"OTIS(P3)", otis(gen_path(3))});
  out.push_back({"OTIS(C3)", otis(gen_cycle(3))});
  return out;
}

}  // namespace

TEST(Decide, Examples) {
  auto c5 = decide(gen_cycle(5));
  ASSERT_EQ(c5.kind, VerdictKind::Hamiltonian);
  EXPECT_TRUE(is_hamiltonian_cycle(gen_cycle(5), c5.cycle->order));

  EXPECT_EQ(decide(otis(gen_bowtie(4, 4))).kind, VerdictKind::NonHamiltonian);
  EXPECT_EQ(decide(otis(gen_bowtie(4, 6))).kind, VerdictKind::NonHamiltonian);

  auto g33 = otis(gen_bowtie(3, 3));
  auto v33 = decide(g33);
  ASSERT_EQ(v33.kind, VerdictKind::Hamiltonian);
  EXPECT_EQ(v33.cycle->size(), 25u);
  EXPECT_TRUE(is_hamiltonian_cycle(g33, v33.cycle->order));
}

TEST(Decide, TrivialInputs) {
  EXPECT_EQ(decide(gen_path(2)).kind, VerdictKind::NonHamiltonian);
  Graph two_triangles = parse_edge_list("V 6\n1 2\n2 3\n3 1\n4 5\n5 6\n6 4\n");
  EXPECT_EQ(decide(two_triangles).kind, VerdictKind::NonHamiltonian);
}

TEST(Decide, BudgetExhaustionIsInconclusive) {
  DecideOptions o;
  o.budget.max_nodes = 1;
  auto v = decide(otis(gen_bowtie(4, 6)), {}, o);
  EXPECT_EQ(v.kind, VerdictKind::Inconclusive);
  EXPECT_FALSE(v.cycle);
}

TEST(Decide, StatsAreReproducible) {
  auto g = otis(gen_bowtie(4, 6));
  auto a = decide(g);
  auto b = decide(g);
  EXPECT_EQ(a.stats.nodes, b.stats.nodes);
  EXPECT_EQ(a.stats.max_depth, b.stats.max_depth);
  EXPECT_EQ(a.stats.propagation_steps, b.stats.propagation_steps);
}

TEST(Decide, ParallelRootAgrees) {
  DecideOptions o;
  o.parallel_root = true;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{4, 4}, {4, 6}, {3, 3}, {3, 4}, {5, 4}}) {
    auto g = otis(gen_bowtie(m, n));
    auto serial = decide(g);
    auto parallel = decide(g, {}, o);
    EXPECT_EQ(serial.kind, parallel.kind) << m << "," << n;
    if (parallel.cycle) { EXPECT_TRUE(is_hamiltonian_cycle(g, parallel.cycle->order)); }
  }
}

TEST(Decide, SeedRestrictsTheSearch) {
  auto g = gen_complete(4);
  // Deleting a perfect matching leaves a 4-cycle.
  EdgeSeed seed{{}, {*g.find_edge(0, 1), *g.find_edge(2, 3)}};
  auto v = decide(g, seed);
  ASSERT_EQ(v.kind, VerdictKind::Hamiltonian);
  EXPECT_TRUE(is_hamiltonian_cycle(g, v.cycle->order));
  EdgeSeed impossible{{}, {*g.find_edge(0, 1), *g.find_edge(0, 2)}};
  EXPECT_EQ(decide(g, impossible).kind, VerdictKind::NonHamiltonian);
}

TEST(DecideOracle, FixturesAgree) {
  for (const auto& [name, g] : fixtures()) {
    auto v = decide(g);
    ASSERT_NE(v.kind, VerdictKind::Inconclusive) << name;
    EXPECT_EQ(v.kind == VerdictKind::Hamiltonian, oracle::hamiltonian(g)) << name;
    if (v.cycle) { EXPECT_TRUE(is_hamiltonian_cycle(g, v.cycle->order)) << name; }
  }
}

TEST(DecideOracle, RandomGraphsAgree) {
  std::mt19937_64 rng(20240501);
  int hamiltonian = 0;
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 3 + rng() % 8;
    const double p = 0.25 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
    auto g = oracle::random_graph(rng, n, p);
    auto v = decide(g);
    const bool want = oracle::hamiltonian(g);
    hamiltonian += want;
    EXPECT_EQ(v.kind, want ? VerdictKind::Hamiltonian : VerdictKind::NonHamiltonian) << to_edge_list(g);
    if (v.cycle) { EXPECT_TRUE(is_hamiltonian_cycle(g, v.cycle->order)); }
  }
  EXPECT_GT(hamiltonian, 20);
  EXPECT_LT(hamiltonian, 180);
}

TEST(Decide, HamiltonianBasesGiveHamiltonianOtis) {
  for (const auto& base : {gen_cycle(3), gen_cycle(4), gen_cycle(5), gen_complete(4)}) {
    auto g = otis(base);
    auto v = decide(g);
    ASSERT_EQ(v.kind, VerdictKind::Hamiltonian);
    EXPECT_TRUE(is_hamiltonian_cycle(g, v.cycle->order));
  }
}
