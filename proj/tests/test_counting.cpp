#include <gtest/gtest.h>

#include <random>

#include "otisham/counting.hpp"
#include "otisham/decide.hpp"
#include "otisham/topology.hpp"
#include "support/oracle.hpp"

using namespace otisham;

namespace {

// Brute-force maximum independent set size over a vertex subset.
std::size_t brute_mis(const Graph& g, const std::vector<VertexId>& cand) {
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << cand.size()); ++mask) {
    bool ok = true;
    for (std::size_t a = 0; a < cand.size() && ok; ++a)
      for (std::size_t b = a + 1; b < cand.size() && ok; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && g.has_edge(cand[a], cand[b])) ok = false;
    if (ok) best = std::max<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

}  // namespace

TEST(Counting, RefutesOtisBowtie44) {
  auto g = otis(gen_bowtie(4, 4));
  auto cert = counting_refutation(g);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->budget, 28u);
  EXPECT_EQ(cert->high_degree_contribution, 20u);
  EXPECT_EQ(cert->independent_set.size(), 9u);
  EXPECT_EQ(cert->bound(), 29u);
  EXPECT_EQ(cert->high_degree.size(), 7u);
}

TEST(Counting, InconclusiveOnOtisBowtie46) { EXPECT_FALSE(counting_refutation(otis(gen_bowtie(4, 6)))); }

TEST(Counting, CycleHasNothingToCount) {
  auto a = counting_analysis(gen_cycle(6));
  EXPECT_EQ(a.certificate.budget, 0u);
  EXPECT_TRUE(a.certificate.high_degree.empty());
  EXPECT_TRUE(a.certificate.independent_set.empty());
  EXPECT_FALSE(counting_refutation(gen_cycle(6)));
}

TEST(Counting, AdjacentHighDegreeVerticesAreSkippedGreedily) {
  auto g = gen_complete(5);  // every vertex degree 4, all adjacent
  auto a = counting_analysis(g);
  ASSERT_EQ(a.certificate.high_degree.size(), 1u);
  EXPECT_EQ(a.certificate.high_degree[0], 0u);
  EXPECT_EQ(a.certificate.high_degree_contribution, 2u);
}

TEST(Counting, CandidateCapGivesInconclusive) {
  auto g = gen_butterfly(4);  // 4-regular: no degree-3 candidates at all
  EXPECT_FALSE(counting_analysis(g).too_large);
  // 3-regular prism over a long cycle: 2k degree-3 vertices.
  Graph prism;
  const std::size_t k = 25;
  for (std::size_t v = 0; v < 2 * k; ++v) prism.add_vertex(std::to_string(v + 1));
  for (std::size_t v = 0; v < k; ++v) {
    prism.add_edge(v, (v + 1) % k);
    prism.add_edge(k + v, k + (v + 1) % k);
    prism.add_edge(v, k + v);
  }
  auto a = counting_analysis(prism);
  EXPECT_TRUE(a.too_large);
  EXPECT_FALSE(a.refutes());
}

TEST(CountingProperty, MisMatchesBruteForce) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 60; ++k) {
    auto g = oracle::random_connected(rng, 6 + k % 9, 0.25);
    auto a = counting_analysis(g);
    std::vector<VertexId> cand;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != 3) continue;
      bool near = false;
      for (auto w : g.neighbors(v)) near = near || g.degree(w) >= 4;
      if (!near) cand.push_back(v);
    }
    EXPECT_EQ(a.candidates, cand.size());
    EXPECT_EQ(a.certificate.independent_set.size(), brute_mis(g, cand));
    for (auto x : a.certificate.independent_set)
      for (auto y : a.certificate.independent_set) EXPECT_FALSE(g.has_edge(x, y));
    for (auto x : a.certificate.high_degree)
      for (auto y : a.certificate.high_degree) EXPECT_FALSE(g.has_edge(x, y));
  }
}

TEST(CountingProperty, NeverRefutesAHamiltonianGraph) {
  std::mt19937_64 rng(37);
  std::vector<Graph> graphs{gen_cycle(7), gen_complete(6), otis(gen_cycle(4)), otis(gen_complete(4)),
                            otis(gen_bowtie(3, 3)), otis(gen_bowtie(3, 4)), otis(gen_bowtie(3, 5))};
  for (int k = 0; k < 100; ++k) graphs.push_back(oracle::random_connected(rng, 5 + k % 6, 0.3));
  for (const auto& g : graphs) {
    if (decide(g).kind == VerdictKind::Hamiltonian) { EXPECT_FALSE(counting_refutation(g)) << to_edge_list(g); }
  }
}
