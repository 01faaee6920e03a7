#include <gtest/gtest.h>

#include <random>

#include "otisham/constructive.hpp"
#include "otisham/trees.hpp"

using namespace otisham;

namespace {

HamCycle labels(std::initializer_list<const char*> xs) {
  HamCycle c;
  for (auto x : xs) c.order.emplace_back(x);
  return c;
}

// Walks parents from v up to the root.
std::vector<std::string> path_to_root(const ParentMap& t, std::string v) {
  std::vector<std::string> out{v};
  while (t.count(v)) {
    v = t.at(v);
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST(Ists, FiveCycle) {
  auto g = gen_cycle(5);
  auto pair = build_ists(labels({"1", "2", "3", "4", "5"}), "1");
  EXPECT_EQ(pair.root, "1");
  // t1 drops (1,2): the path 1-5-4-3-2.
  EXPECT_EQ(path_to_root(pair.t1, "2"), (std::vector<std::string>{"2", "3", "4", "5", "1"}));
  // t2 drops (5,1): the path 1-2-3-4-5.
  EXPECT_EQ(path_to_root(pair.t2, "5"), (std::vector<std::string>{"5", "4", "3", "2", "1"}));
  EXPECT_NE(pair.omitted_1, pair.omitted_2);
  EXPECT_TRUE(verify_independence(pair, g));
  auto r = check_independence(pair, g);
  EXPECT_TRUE(r.edge_disjoint);
}

TEST(Ists, Triangle) {
  auto g = gen_cycle(3);
  for (auto root : {"1", "2", "3"}) {
    auto pair = build_ists(labels({"1", "2", "3"}), root);
    EXPECT_EQ(pair.t1.size(), 2u);
    EXPECT_EQ(pair.t2.size(), 2u);
    EXPECT_TRUE(check_tree(pair.t1, root, g).ok());
    EXPECT_TRUE(verify_independence(pair, g));
  }
}

TEST(Ists, RootMustBeOnTheCycle) {
  EXPECT_THROW(build_ists(labels({"1", "2", "3"}), "9"), GraphError);
}

TEST(Ists, EqualTreesAreNotIndependent) {
  auto g = gen_cycle(5);
  auto pair = build_ists(labels({"1", "2", "3", "4", "5"}), "1");
  pair.t2 = pair.t1;
  auto r = check_independence(pair, g);
  EXPECT_TRUE(r.well_formed);
  EXPECT_FALSE(r.vertex_disjoint);
  EXPECT_FALSE(r.edge_disjoint);
  EXPECT_TRUE(r.first_vertex_violation);
  EXPECT_FALSE(verify_independence(pair, g));
}

TEST(Ists, MalformedTreesAreRejected) {
  auto g = gen_cycle(5);
  auto pair = build_ists(labels({"1", "2", "3", "4", "5"}), "1");
  pair.t1.erase("3");
  EXPECT_FALSE(check_tree(pair.t1, "1", g).spanning);
  EXPECT_FALSE(verify_independence(pair, g));

  ParentMap loop{{"2", "3"}, {"3", "2"}, {"4", "1"}, {"5", "1"}};
  auto c = check_tree(loop, "1", g);
  EXPECT_FALSE(c.ok());

  ParentMap chord{{"2", "1"}, {"3", "1"}, {"4", "3"}, {"5", "4"}};
  EXPECT_FALSE(check_tree(chord, "1", g).edges_in_graph);
}

TEST(Ists, OtisBowtieThreeFive) {
  auto g = otis(gen_bowtie(3, 5));
  auto built = build_ham_cycle(3, 5);
  ASSERT_TRUE(built.ok());
  auto pair = build_ists(*built.cycle, "1:1");
  EXPECT_EQ(g.vertex_count(), 49u);
  auto t1 = check_tree(pair.t1, "1:1", g);
  EXPECT_TRUE(t1.ok());
  EXPECT_EQ(t1.edge_count, 48u);
  EXPECT_TRUE(check_tree(pair.t2, "1:1", g).ok());
  EXPECT_TRUE(verify_independence(pair, g));
}

TEST(IstsProperty, AnyCycleAnyRoot) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 3 + rng() % 30;
    std::vector<std::string> order;
    for (std::size_t v = 1; v <= n; ++v) order.push_back(std::to_string(v));
    std::shuffle(order.begin(), order.end(), rng);
    Graph g;
    for (std::size_t v = 1; v <= n; ++v) g.add_vertex(std::to_string(v));
    for (std::size_t j = 0; j < n; ++j) g.add_edge(order[j], order[(j + 1) % n]);
    HamCycle cycle{order};
    for (const auto& root : order) {
      auto pair = build_ists(cycle, root);
      auto r = check_independence(pair, g);
      ASSERT_TRUE(r.well_formed);
      EXPECT_TRUE(r.vertex_disjoint);
      EXPECT_TRUE(r.edge_disjoint);
    }
  }
}

TEST(IstsProperty, ChordsDoNotBreakAnExistingPair) {
  std::mt19937_64 rng(19);
  for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{5, 5}, {3, 8}, {7, 9}}) {
    auto base = gen_bowtie(m, n);
    auto built = build_ham_cycle(m, n);
    ASSERT_TRUE(built.ok());
    auto pair = build_ists(*built.cycle, "1:1");
    // Chords inside each base cycle, keeping vertex 1 and vertex c+1 at degree 2.
    const std::size_t c = m, i = m + n - 1;
    Graph augmented = base;
    for (int k = 0; k < 4; ++k) {
      std::size_t a = 2 + rng() % (c - 1), b = 2 + rng() % (c - 1);
      if (a != b && !augmented.has_edge(std::to_string(a), std::to_string(b)))
        augmented.add_edge(std::to_string(a), std::to_string(b));
      a = c + 2 + rng() % (i - c - 1);
      b = c + 2 + rng() % (i - c - 1);
      if (a != b && !augmented.has_edge(std::to_string(a), std::to_string(b)))
        augmented.add_edge(std::to_string(a), std::to_string(b));
    }
    ASSERT_EQ(augmented.degree("1"), 2u);
    ASSERT_EQ(augmented.degree(std::to_string(c + 1)), 2u);
    auto g = otis(augmented);
    EXPECT_TRUE(verify_independence(pair, g)) << m << "," << n;
  }
}
