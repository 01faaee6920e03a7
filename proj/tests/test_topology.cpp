#include <gtest/gtest.h>

#include <random>
#include <set>

#include "otisham/graph.hpp"
#include "otisham/topology.hpp"
#include "support/oracle.hpp"

using namespace otisham;

TEST(Bowtie, Sizes) {
  auto b33 = gen_bowtie(3, 3);
  EXPECT_EQ(b33.vertex_count(), 5u);
  EXPECT_EQ(b33.edge_count(), 6u);
  EXPECT_EQ(b33.degree("3"), 4u);
  EXPECT_EQ(gen_bowtie(4, 4).vertex_count(), 7u);
  EXPECT_EQ(gen_bowtie(4, 4).edge_count(), 8u);
  EXPECT_EQ(gen_bowtie(4, 6).vertex_count(), 9u);
  EXPECT_EQ(gen_bowtie(4, 6).edge_count(), 10u);
  EXPECT_THROW(gen_bowtie(2, 5), GraphError);
  EXPECT_THROW(gen_bowtie(5, 2), GraphError);
}

TEST(Bowtie, Labelling) {
  auto g = gen_bowtie(4, 6);  // c = 4, i = 9
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}, {"4", "5"}, {"8", "9"}, {"9", "4"}}) {
    EXPECT_TRUE(g.has_edge(a, b)) << a << "-" << b;
  }
  EXPECT_FALSE(g.has_edge("1", "5"));
  for (std::size_t m = 3; m <= 8; ++m) {
    for (std::size_t n = 3; n <= 8; ++n) {
      auto bt = gen_bowtie(m, n);
      EXPECT_EQ(bt.edge_count(), m + n);
      std::size_t cut = 0;
      for (VertexId v = 0; v < bt.vertex_count(); ++v) {
        if (bt.degree(v) == 4) ++cut;
        else EXPECT_EQ(bt.degree(v), 2u);
      }
      EXPECT_EQ(cut, 1u);
      EXPECT_EQ(bt.degree(std::to_string(m)), 4u);
    }
  }
}

TEST(Bowtie, Normalization) {
  EXPECT_EQ(BowtieParams::normalized(7, 3).m, 3u);
  EXPECT_EQ(BowtieParams::normalized(4, 5).m, 5u);
  EXPECT_EQ(BowtieParams::normalized(4, 5).n, 4u);
  EXPECT_EQ(BowtieParams::normalized(6, 4).m, 4u);
  EXPECT_TRUE((BowtieParams{3, 5}.is_normalized()));
  EXPECT_FALSE((BowtieParams{4, 5}.is_normalized()));
  EXPECT_EQ((BowtieParams{5, 8}.cut()), 5u);
  EXPECT_EQ((BowtieParams{5, 8}.last()), 12u);
}

TEST(Butterfly, FourRegular) {
  for (std::size_t dim : {3u, 4u, 5u}) {
    auto g = gen_butterfly(dim);
    EXPECT_EQ(g.vertex_count(), dim << dim);
    EXPECT_EQ(g.edge_count(), 2 * (dim << dim));
    for (VertexId v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(g.degree(v), 4u);
  }
  EXPECT_THROW(gen_butterfly(2), GraphError);
  EXPECT_THROW(gen_butterfly(1), GraphError);
}

TEST(Butterfly, NeighboursFollowTheLevelRule) {
  const std::size_t dim = 3;
  auto g = gen_butterfly(dim);
  auto id = [&](std::size_t level, std::size_t word) {
    return g.require(std::to_string(ButterflyVertex{level, word}.index(dim)));
  };
  // (0, 000) ~ (1, 000), (1, x1 flipped), (2, 000), and the level-2 word whose
  // bit 0 differs.
  auto v = id(0, 0);
  std::set<VertexId> want{id(1, 0), id(1, 0b010), id(2, 0), id(2, 0b001)};
  auto nb = g.neighbors(v);
  EXPECT_EQ(std::set<VertexId>(nb.begin(), nb.end()), want);

  // Independent enumeration of the rule over all vertex pairs.
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t x = 0; x < 8; ++x)
      for (std::size_t b = 0; b < dim; ++b)
        for (std::size_t y = 0; y < 8; ++y) {
          auto rule = [&](std::size_t l1, std::size_t w1, std::size_t l2, std::size_t w2) {
            if (l2 != (l1 + 1) % dim) return false;
            return ((w1 ^ w2) & ~(std::size_t{1} << l2)) == 0;
          };
          bool want_edge = rule(a, x, b, y) || rule(b, y, a, x);
          EXPECT_EQ(g.has_edge(id(a, x), id(b, y)), want_edge);
        }
}

TEST(Butterfly, VertexBits) {
  ButterflyVertex v{2, 0b100};
  EXPECT_EQ(v.bits(3), "100");
  EXPECT_EQ(v.index(3), 2u * 8 + 4 + 1);
  auto back = ButterflyVertex::from_index(3, v.index(3));
  EXPECT_EQ(back.level, 2u);
  EXPECT_EQ(back.word, 4u);
}

TEST(SmallFamilies, Sizes) {
  EXPECT_EQ(gen_cycle(4).edge_count(), 4u);
  EXPECT_EQ(gen_complete(4).edge_count(), 6u);
  EXPECT_EQ(gen_path(1).vertex_count(), 1u);
  EXPECT_EQ(gen_path(1).edge_count(), 0u);
  EXPECT_THROW(gen_cycle(2), GraphError);
  EXPECT_THROW(gen_path(0), GraphError);
}

TEST(Otis, Sizes) {
  auto g = otis(gen_bowtie(4, 4));
  EXPECT_EQ(g.vertex_count(), 49u);
  EXPECT_EQ(g.edge_count(), 77u);
  auto c3 = otis(gen_cycle(3));
  EXPECT_EQ(c3.vertex_count(), 9u);
  EXPECT_EQ(c3.edge_count(), 12u);
  auto k2 = otis(gen_complete(2));
  EXPECT_EQ(k2.vertex_count(), 4u);
  EXPECT_EQ(k2.edge_count(), 3u);
  EXPECT_TRUE(k2.has_edge("1:1", "1:2"));
  EXPECT_TRUE(k2.has_edge("1:2", "2:1"));
  EXPECT_TRUE(k2.has_edge("2:1", "2:2"));
  EXPECT_THROW(otis(gen_path(1)), GraphError);
}

TEST(Otis, LabelsAndIds) {
  auto base = gen_bowtie(3, 4);
  auto g = otis(base);
  const auto n = base.vertex_count();
  for (VertexId c = 0; c < n; ++c)
    for (VertexId p = 0; p < n; ++p) {
      EXPECT_EQ(g.label(otis_vertex(n, c, p)), otis_label(base.label(c), base.label(p)));
    }
  auto parts = split_otis_label("12:3");
  ASSERT_TRUE(parts);
  EXPECT_EQ(parts->first, "12");
  EXPECT_EQ(parts->second, "3");
  EXPECT_FALSE(split_otis_label("12"));
}

namespace {

void check_otis_laws(const Graph& base) {
  const auto g = otis(base);
  const std::size_t n = base.vertex_count();
  EXPECT_EQ(g.vertex_count(), n * n);
  EXPECT_EQ(g.edge_count(), n * base.edge_count() + n * (n - 1) / 2);
  std::vector<int> transpose_count(g.vertex_count(), 0);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      const VertexId x = otis_vertex(n, u, v);
      EXPECT_EQ(g.degree(x), base.degree(v) + (u != v ? 1 : 0));
      if (u != v) {
        EXPECT_TRUE(g.has_edge(x, otis_vertex(n, v, u)));
      }
    }
  }
  // Transpose edges: a perfect matching of the off-diagonal vertices.
  for (const auto& e : g.edges()) {
    const VertexId cu = e.u / n, pu = e.u % n, cv = e.v / n, pv = e.v % n;
    if (cu == cv) {
      EXPECT_TRUE(base.has_edge(pu, pv));
    } else {
      EXPECT_EQ(cu, pv);
      EXPECT_EQ(pu, cv);
      ++transpose_count[e.u];
      ++transpose_count[e.v];
    }
  }
  for (VertexId x = 0; x < g.vertex_count(); ++x) EXPECT_EQ(transpose_count[x], x / n == x % n ? 0 : 1);
}

}  // namespace

TEST(OtisProperty, DegreeLawAndClusterStructure) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) check_otis_laws(oracle::random_connected(rng, 2 + k % 7, 0.3));
  for (std::size_t m = 3; m <= 7; ++m)
    for (std::size_t n = 3; m + n - 1 <= 9; ++n) check_otis_laws(gen_bowtie(m, n));
}

TEST(OtisProperty, BowtieDegreeCensus) {
  for (std::size_t m = 3; m <= 8; ++m) {
    for (std::size_t n = 3; n <= 8; ++n) {
      const auto g = otis(gen_bowtie(m, n));
      const std::size_t i = m + n - 1;
      const std::string c = std::to_string(m);
      std::size_t d2 = 0, d3 = 0, d4 = 0, d5 = 0;
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto parts = *split_otis_label(g.label(v));
        switch (g.degree(v)) {
          case 2: ++d2; EXPECT_EQ(parts.first, parts.second); break;
          case 3: ++d3; break;
          case 4: ++d4; EXPECT_EQ(g.label(v), otis_label(c, c)); break;
          case 5: ++d5; EXPECT_EQ(parts.second, c); break;
          default: ADD_FAILURE() << "degree " << g.degree(v);
        }
      }
      EXPECT_EQ(d4, 1u);
      EXPECT_EQ(d2, i - 1);
      EXPECT_EQ(d5, i - 1);
      EXPECT_EQ(d3, i * i - 2 * (i - 1) - 1);
    }
  }
}

TEST(OtisProperty, DiameterLaw) {
  std::mt19937_64 rng(5);
  std::vector<Graph> bases;
  for (int k = 0; k < 50; ++k) bases.push_back(oracle::random_connected(rng, 2 + k % 7, 0.3));
  for (std::size_t m = 3; m <= 7; ++m)
    for (std::size_t n = 3; m + n - 1 <= 9; ++n) bases.push_back(gen_bowtie(m, n));
  for (const auto& b : bases) {
    EXPECT_EQ(diameter(otis(b)), 2 * diameter(b) + 1) << to_edge_list(b);
  }
}

TEST(Dot, ClustersAreGrouped) {
  auto dot = to_dot(otis(gen_cycle(3)), true);
  EXPECT_NE(dot.find("subgraph \"cluster_1\""), std::string::npos);
  EXPECT_NE(dot.find("\"1:2\" -- \"2:1\""), std::string::npos);
  auto plain = to_dot(gen_cycle(3));
  EXPECT_EQ(plain.find("subgraph"), std::string::npos);
}
