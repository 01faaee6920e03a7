#include <gtest/gtest.h>

#include <random>

#include "otisham/decide.hpp"
#include "otisham/propagation.hpp"
#include "otisham/topology.hpp"
#include "support/scenarios.hpp"
#include "support/oracle.hpp"

using namespace otisham;

namespace {

using scenarios::in_cluster;

// Outcome summary comparable across runs.
std::string fingerprint(const Graph& g, const PropagationResult& r) {
  if (std::holds_alternative<Contradiction>(r)) return "contradiction";
  const auto& a = std::get<EdgeAssignment>(r);
  std::string s;
  for (EdgeId e = 0; e < g.edge_count(); ++e) s += "UFD"[static_cast<int>(a.state(e))];
  return s;
}

}  // namespace

TEST(Propagate, PathEndpointIsUnderfilled) {
  auto r = propagate(gen_path(3));
  ASSERT_TRUE(std::holds_alternative<Contradiction>(r));
  EXPECT_EQ(std::get<Contradiction>(r).kind, ContradictionKind::VertexUnderfilled);
}

TEST(Propagate, DegreeTwoVertexForcesBothEdges) {
  auto g = parse_edge_list("V 4\n1 2\n2 3\n1 3\n1 4\n3 4\n");
  auto r = propagate(g);
  ASSERT_TRUE(std::holds_alternative<EdgeAssignment>(r));
  const auto& a = std::get<EdgeAssignment>(r);
  EXPECT_EQ(a.state(*g.find_edge(0, 1)), EdgeState::Forced);
  EXPECT_EQ(a.state(*g.find_edge(0, 3)), EdgeState::Forced);
  EXPECT_EQ(a.state(*g.find_edge(0, 2)), EdgeState::Deleted);
  EXPECT_TRUE(a.complete());
}

TEST(Propagate, CycleIsForcedCompletely) {
  auto g = gen_cycle(6);
  auto r = propagate(g);
  ASSERT_TRUE(std::holds_alternative<EdgeAssignment>(r));
  EXPECT_TRUE(std::get<EdgeAssignment>(r).complete());
  EXPECT_TRUE(is_hamiltonian_cycle(g, std::get<EdgeAssignment>(r).forced_cycle(0)));
}

TEST(Propagate, SaturationDeletesTheRest) {
  auto g = gen_complete(4);
  EdgeSeed seed{{*g.find_edge(0, 1), *g.find_edge(0, 2)}, {}};
  auto r = propagate(g, seed);
  ASSERT_TRUE(std::holds_alternative<EdgeAssignment>(r));
  const auto& a = std::get<EdgeAssignment>(r);
  EXPECT_EQ(a.state(*g.find_edge(0, 3)), EdgeState::Deleted);
  EXPECT_EQ(a.state(*g.find_edge(1, 2)), EdgeState::Deleted);  // would close a triangle
  EXPECT_TRUE(a.complete());
  EXPECT_TRUE(is_hamiltonian_cycle(g, a.forced_cycle(0)));
}

TEST(Propagate, ContradictionKinds) {
  auto k4 = gen_complete(4);
  auto over = propagate(k4, {{*k4.find_edge(0, 1), *k4.find_edge(0, 2), *k4.find_edge(0, 3)}, {}});
  ASSERT_TRUE(std::holds_alternative<Contradiction>(over));
  EXPECT_EQ(std::get<Contradiction>(over).kind, ContradictionKind::VertexOverfilled);

  auto c4 = gen_cycle(4);
  auto under = propagate(c4, {{}, {0}});
  ASSERT_TRUE(std::holds_alternative<Contradiction>(under));
  EXPECT_EQ(std::get<Contradiction>(under).kind, ContradictionKind::VertexUnderfilled);

  auto b = gen_bowtie(3, 3);  // two triangles: forcing one closes a short cycle
  auto shortc = propagate(b, {{*b.find_edge(0, 1)}, {}}, PropagationOptions{});
  ASSERT_TRUE(std::holds_alternative<Contradiction>(shortc));
}

TEST(Propagate, WithoutSubcycleRuleStillDetectsClosedCycles) {
  auto g = gen_bowtie(3, 3);
  PropagationOptions o;
  o.subcycle_rule = false;
  auto r = propagate(g, {}, o);
  ASSERT_TRUE(std::holds_alternative<Contradiction>(r));
}

TEST(SeededScenarios, BothIncidentEdgesForcedCloseASubcycle) {
  auto g = otis(gen_bowtie(4, 6));
  auto r = propagate(g, scenarios::both_forced(g));
  ASSERT_TRUE(std::holds_alternative<Contradiction>(r));
  EXPECT_EQ(std::get<Contradiction>(r).kind, ContradictionKind::ShortSubcycle);
}

TEST(SeededScenarios, BothIncidentEdgesDeletedCloseASubcycle) {
  auto g = otis(gen_bowtie(4, 6));
  auto r = propagate(g, scenarios::both_deleted(g));
  ASSERT_TRUE(std::holds_alternative<Contradiction>(r));
  EXPECT_EQ(std::get<Contradiction>(r).kind, ContradictionKind::ShortSubcycle);
}

TEST(SeededScenarios, CasesEndWithAnUnderfilledVertex) {
  auto g = otis(gen_bowtie(4, 6));
  for (const auto& c : scenarios::case_replays(g)) {
    auto r = propagate(g, scenarios::replay_seed(g, c, true));
    ASSERT_TRUE(std::holds_alternative<Contradiction>(r)) << c.name;
    const auto& bad = std::get<Contradiction>(r);
    EXPECT_EQ(bad.kind, ContradictionKind::VertexUnderfilled) << c.name;
    EXPECT_EQ(g.label(bad.vertex), c.vertex) << c.name;
  }
}

TEST(SeededScenarios, EveryCaseSubtreeIsRefutedBySearch) {
  auto g = otis(gen_bowtie(4, 6));
  for (const auto& c : scenarios::case_replays(g)) {
    EXPECT_EQ(decide(g, scenarios::replay_seed(g, c, false)).kind, VerdictKind::NonHamiltonian) << c.name;
  }
}

TEST(PropagateProperty, SoundnessAgainstEnumeratedCycles) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    auto g = oracle::random_connected(rng, 5 + trial % 5, 0.45);
    auto cycles = oracle::HamiltonOracle(g).all_cycles();
    // Seed with one random decision and compare against every cycle that
    // agrees with it.
    std::uniform_int_distribution<EdgeId> pick(0, g.edge_count() - 1);
    const EdgeId e = pick(rng);
    const bool take = rng() & 1;
    EdgeSeed seed;
    (take ? seed.forced : seed.deleted).push_back(e);
    auto r = propagate(g, seed);
    for (const auto& cyc : cycles) {
      const auto& edge = g.edge(e);
      const bool uses = cyc.count({std::min(edge.u, edge.v), std::max(edge.u, edge.v)}) > 0;
      if (uses != take) continue;
      ++checked;
      ASSERT_TRUE(std::holds_alternative<EdgeAssignment>(r)) << to_edge_list(g);
      const auto& a = std::get<EdgeAssignment>(r);
      for (EdgeId f = 0; f < g.edge_count(); ++f) {
        const auto& ed = g.edge(f);
        const bool in = cyc.count({std::min(ed.u, ed.v), std::max(ed.u, ed.v)}) > 0;
        if (a.state(f) == EdgeState::Forced) { EXPECT_TRUE(in); }
        if (a.state(f) == EdgeState::Deleted) { EXPECT_FALSE(in); }
      }
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(PropagateProperty, OrderIndependence) {
  std::mt19937_64 rng(23);
  std::vector<std::pair<Graph, EdgeSeed>> cases;
  for (int k = 0; k < 40; ++k) {
    auto g = oracle::random_connected(rng, 6 + k % 5, 0.35);
    std::uniform_int_distribution<EdgeId> pick(0, g.edge_count() - 1);
    EdgeSeed seed;
    seed.deleted.push_back(pick(rng));
    cases.push_back({std::move(g), seed});
  }
  auto big = otis(gen_bowtie(4, 6));
  cases.push_back({big, EdgeSeed{{in_cluster(big, 4, 4, 9)}, {}}});
  cases.push_back({big, EdgeSeed{{in_cluster(big, 4, 1, 4), in_cluster(big, 4, 3, 4), in_cluster(big, 4, 2, 3)}, {}}});
  for (auto& [g, seed] : cases) {
    const auto reference = fingerprint(g, propagate(g, seed));
    for (std::uint64_t s = 1; s <= 20; ++s) {
      PropagationOptions o;
      o.shuffle_seed = s;
      EXPECT_EQ(fingerprint(g, propagate(g, seed, o)), reference);
    }
  }
}

TEST(PropagateProperty, TerminationBound) {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 40; ++k) {
    auto g = oracle::random_connected(rng, 8, 0.4);
    PropagationStats stats;
    auto r = propagate(g, {}, {}, &stats);
    EXPECT_LE(stats.forced + stats.deleted, g.edge_count());
    std::size_t max_degree = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
    EXPECT_LE(stats.steps, (g.edge_count() + g.vertex_count()) * (max_degree + 2));
    if (auto* a = std::get_if<EdgeAssignment>(&r)) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        EXPECT_LE(a->forced_count(v), 2u);
        EXPECT_GE(a->live_count(v), 2u);
      }
    }
  }
}

TEST(PropagateProperty, StatesAreMonotone) {
  auto g = otis(gen_bowtie(3, 5));
  auto first = propagate(g);
  ASSERT_TRUE(std::holds_alternative<EdgeAssignment>(first));
  const auto& a = std::get<EdgeAssignment>(first);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (a.state(e) != EdgeState::Undecided) continue;
    for (bool take : {true, false}) {
      EdgeSeed seed;
      (take ? seed.forced : seed.deleted).push_back(e);
      auto next = propagate(a, seed);
      if (auto* b = std::get_if<EdgeAssignment>(&next)) {
        for (EdgeId f = 0; f < g.edge_count(); ++f) {
          if (a.state(f) != EdgeState::Undecided) { EXPECT_EQ(b->state(f), a.state(f)); }
        }
      }
    }
  }
}
