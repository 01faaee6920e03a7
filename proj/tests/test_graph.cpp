#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "otisham/graph.hpp"
#include "otisham/topology.hpp"
#include "support/oracle.hpp"

using namespace otisham;

TEST(Graph, RejectsLoopsDuplicatesAndUnknownEndpoints) {
  Graph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge("a", "b");
  EXPECT_THROW(g.add_edge("a", "a"), GraphError);
  EXPECT_THROW(g.add_edge("b", "a"), GraphError);
  EXPECT_THROW(g.add_edge("a", "zz"), GraphError);
  EXPECT_THROW(g.add_vertex("a"), GraphError);
  EXPECT_THROW(g.add_vertex("has space"), GraphError);
  EXPECT_THROW(g.add_vertex(""), GraphError);
}

TEST(Graph, InsertionOrderIsKept) {
  Graph g;
  for (auto l : {"z", "a", "m"}) g.add_vertex(l);
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"z", "a", "m"}));
}

TEST(Graph, DegreeExamples) {
  auto c5 = gen_cycle(5);
  for (VertexId v = 0; v < 5; ++v) EXPECT_EQ(c5.degree(v), 2u);
  EXPECT_EQ(gen_bowtie(4, 4).degree("4"), 4u);
  auto p3 = gen_path(3);
  auto nb = p3.neighbors(p3.require("2"));
  std::sort(nb.begin(), nb.end());
  EXPECT_EQ(nb, (std::vector<VertexId>{0, 2}));
}

TEST(Graph, Metrics) {
  auto m = metrics(gen_cycle(3));
  EXPECT_EQ(m.min_degree, 2u);
  EXPECT_EQ(m.max_degree, 2u);
  EXPECT_EQ(m.diameter, 1u);
  EXPECT_EQ(metrics(otis(gen_cycle(3))).diameter, 3u);
  auto big = metrics(otis(gen_bowtie(4, 4)));
  EXPECT_EQ(big.max_degree, 5u);
  EXPECT_EQ(big.min_degree, 2u);
}

TEST(Graph, DisconnectedDiameterIsInfinite) {
  Graph g;
  g.add_vertex("1");
  g.add_vertex("2");
  EXPECT_EQ(diameter(g), kInfiniteDistance);
  EXPECT_FALSE(is_connected(g));
}

TEST(Graph, VertexConnectivity) {
  EXPECT_EQ(metrics(gen_cycle(6)).connectivity, 2u);
  EXPECT_EQ(metrics(gen_complete(5)).connectivity, 4u);
  EXPECT_EQ(metrics(gen_path(4)).connectivity, 1u);
  EXPECT_EQ(metrics(gen_bowtie(3, 5)).connectivity, 1u);
  auto capped = metrics(gen_cycle(10), 4);
  EXPECT_FALSE(capped.connectivity_exact);
  EXPECT_LE(capped.connectivity, 2u);
}

TEST(Graph, EdgeDisjointBound) {
  EXPECT_EQ(max_edge_disjoint_ham_bound(otis(gen_bowtie(3, 5))), 1u);
  EXPECT_EQ(max_edge_disjoint_ham_bound(gen_complete(5)), 2u);
  EXPECT_EQ(max_edge_disjoint_ham_bound(gen_path(2)), 0u);
  for (std::size_t m = 3; m <= 5; ++m)
    for (std::size_t n = m; n <= 6; ++n) EXPECT_EQ(max_edge_disjoint_ham_bound(otis(gen_bowtie(m, n))), 1u);
}

TEST(Graph, HamiltonianCycleCheck) {
  auto c4 = gen_cycle(4);
  EXPECT_TRUE(is_hamiltonian_cycle(c4, std::vector<std::string>{"1", "2", "3", "4"}));
  EXPECT_EQ(check_hamiltonian_cycle(c4, std::vector<std::string>{"1", "3", "2", "4"}), CycleCheck::MissingEdge);
  EXPECT_EQ(check_hamiltonian_cycle(c4, std::vector<std::string>{"1", "2", "3"}), CycleCheck::WrongLength);
  EXPECT_EQ(check_hamiltonian_cycle(c4, std::vector<std::string>{"1", "2", "3", "9"}), CycleCheck::UnknownVertex);
  EXPECT_EQ(check_hamiltonian_cycle(c4, std::vector<std::string>{"1", "2", "1", "2"}), CycleCheck::RepeatedVertex);
}

TEST(GraphProperty, CycleCheckIsRotationAndReversalInvariant) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = oracle::random_graph(rng, 6, 0.6);
    std::vector<VertexId> order(6);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const bool ok = is_hamiltonian_cycle(g, order);
    for (std::size_t r = 0; r < order.size(); ++r) {
      std::vector<VertexId> rot(order.begin() + r, order.end());
      rot.insert(rot.end(), order.begin(), order.begin() + r);
      EXPECT_EQ(is_hamiltonian_cycle(g, rot), ok);
      std::reverse(rot.begin(), rot.end());
      EXPECT_EQ(is_hamiltonian_cycle(g, rot), ok);
    }
  }
}

TEST(GraphProperty, Handshake) {
  std::mt19937_64 rng(11);
  std::vector<Graph> graphs{otis(gen_bowtie(3, 4)), gen_butterfly(3), otis(gen_complete(4))};
  for (int k = 0; k < 30; ++k) graphs.push_back(oracle::random_graph(rng, 9, 0.4));
  for (const auto& g : graphs) {
    std::size_t sum = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
    EXPECT_EQ(sum, 2 * g.edge_count());
  }
}

TEST(GraphProperty, DiameterMatchesFloydWarshall) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 50; ++k) {
    auto g = oracle::random_connected(rng, 3 + k % 8, 0.2);
    EXPECT_EQ(diameter(g), oracle::diameter(g));
  }
}

TEST(EdgeList, RoundTrip) {
  Graph g = otis(gen_bowtie(3, 4));
  g.add_vertex("lonely");
  auto text = to_edge_list(g);
  auto back = parse_edge_list(text);
  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(sorted(back.labels()), sorted(g.labels()));
  EXPECT_EQ(back.edge_count(), g.edge_count());
  EXPECT_EQ(graph_hash(back), graph_hash(g));
  EXPECT_EQ(to_edge_list(back), text);
}

TEST(EdgeList, CommentsAndErrors) {
  auto g = parse_edge_list("# triangle\nV 3\n\n1 2\n2 3\n# x\n3 1\n");
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_THROW(parse_edge_list("1 2\n"), GraphError);
  EXPECT_THROW(parse_edge_list("V 4\n1 2\n"), GraphError);
  EXPECT_THROW(parse_edge_list("V 2\n1 2 3\n"), GraphError);
  EXPECT_THROW(parse_edge_list("V 2\n1 1\n"), GraphError);
}

TEST(EdgeList, HashIgnoresEdgeOrder) {
  auto a = parse_edge_list("V 3\n1 2\n2 3\n");
  auto b = parse_edge_list("V 3\n3 2\n1 2\n");
  EXPECT_EQ(graph_hash(a), graph_hash(b));
  EXPECT_NE(graph_hash(a), graph_hash(gen_cycle(3)));
  EXPECT_EQ(graph_hash(a).size(), 16u);
}
