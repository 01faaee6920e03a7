#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "otisham/constructive.hpp"
#include "otisham/decide.hpp"
#include "otisham/graph.hpp"

using namespace otisham;

namespace {

using Deletion = std::tuple<std::size_t, std::size_t, std::size_t>;

std::set<Deletion> as_set(const KeyEdgeSet& s) {
  std::set<Deletion> out;
  for (const auto& e : s.edges) out.emplace(e.cluster, std::min(e.a, e.b), std::max(e.a, e.b));
  return out;
}

std::set<std::pair<std::size_t, std::size_t>> in_cluster(const KeyEdgeSet& s, std::size_t x) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : s.edges)
    if (e.cluster == x) out.emplace(std::min(e.a, e.b), std::max(e.a, e.b));
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> supported_pairs(std::size_t max_last) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t m = 3; m <= max_last; ++m)
    for (std::size_t n = 3; m + n - 1 <= max_last; ++n) {
      if (!BowtieParams{m, n}.is_normalized()) continue;
      if (classify(m, n) == ParamClass::EvenEven) continue;
      out.emplace_back(m, n);
    }
  return out;
}

}  // namespace

TEST(Classify, Examples) {
  EXPECT_EQ(classify(3, 3), ParamClass::SmallFigureCase);
  EXPECT_EQ(classify(5, 7), ParamClass::SmallFigureCase);
  EXPECT_EQ(classify(7, 7), ParamClass::OddOdd_equal);
  EXPECT_EQ(classify(4, 6), ParamClass::EvenEven);
  EXPECT_EQ(classify(3, 9), ParamClass::OddOdd_3_n);
  EXPECT_EQ(classify(3, 8), ParamClass::OddEven_3);
  EXPECT_EQ(classify(5, 8), ParamClass::OddEven_general);
  EXPECT_EQ(classify(5, 9), ParamClass::OddOdd_general);
  EXPECT_THROW(classify(4, 5), GraphError);
  EXPECT_THROW(classify(2, 5), GraphError);
}

TEST(ClassifyProperty, ExhaustiveUpTo41) {
  for (std::size_t m = 3; m <= 41; ++m) {
    for (std::size_t n = m % 2 == 1 ? 3 : m; n <= 41; ++n) {
      const bool m_odd = m % 2, n_odd = n % 2;
      if (m_odd == n_odd && n < m) continue;
      if (!m_odd && n_odd) continue;
      ASSERT_TRUE((BowtieParams{m, n}.is_normalized())) << m << "," << n;
      const auto cls = classify(m, n);
      if (!m_odd && !n_odd) {
        EXPECT_EQ(cls, ParamClass::EvenEven);
      } else if (m_odd && !n_odd) {
        EXPECT_EQ(cls, m == 3 ? ParamClass::OddEven_3 : ParamClass::OddEven_general);
      } else if ((m == 3 && n == 3) || (m == 5 && n == 7)) {
        EXPECT_EQ(cls, ParamClass::SmallFigureCase);
      } else if (m == 3) {
        EXPECT_EQ(cls, ParamClass::OddOdd_3_n);
      } else if (m == n) {
        EXPECT_EQ(cls, ParamClass::OddOdd_equal);
      } else {
        EXPECT_EQ(cls, ParamClass::OddOdd_general);
      }
    }
  }
}

TEST(TranscribedTables, GoldenSevenSeven) {
  std::ifstream in(std::string(OTISHAM_TEST_DATA) + "/key_edges_7_7.txt");
  ASSERT_TRUE(in);
  std::set<Deletion> want;
  std::size_t x, a, b;
  while (in >> x >> a >> b) want.emplace(x, a, b);
  ASSERT_EQ(want.size(), 60u);
  const auto got = key_edges(7, 7);
  EXPECT_EQ(got.param_class, ParamClass::OddOdd_equal);
  EXPECT_EQ(as_set(got), want);
  for (const auto& e : got.edges) EXPECT_FALSE(e.provenance.empty());
}

TEST(TranscribedTables, ClusterOneOfSevenSeven) {
  auto c1 = in_cluster(key_edges(7, 7), 1);
  for (auto e : std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}, {4, 5}, {6, 7}, {7, 13}, {7, 8}})
    EXPECT_TRUE(c1.count(e)) << e.first << "," << e.second;
}

TEST(TranscribedTables, ThreeEvenClusterI) {
  // (3, 10): c = 3, i = 12.
  auto ci = in_cluster(key_edges(3, 10), 12);
  for (auto e : std::vector<std::pair<std::size_t, std::size_t>>{{1, 3}, {2, 3}, {4, 5}, {6, 7}, {8, 9}, {10, 11}})
    EXPECT_TRUE(ci.count(e)) << e.first << "," << e.second;
}

TEST(TranscribedTables, GeneralOddOddClusterC) {
  auto cc = in_cluster(key_edges(5, 9), 5);
  EXPECT_TRUE(cc.count({1, 5}));
  EXPECT_TRUE(cc.count({5, 6}));
}

TEST(TranscribedTables, EveryDeletionIsABaseEdge) {
  for (auto [m, n] : supported_pairs(21)) {
    if (!has_key_edge_table(classify(m, n))) continue;
    KeyEdgeSet s;
    ASSERT_NO_THROW(s = key_edges(m, n)) << m << "," << n;
    const auto base = gen_bowtie(m, n);
    for (const auto& e : s.edges) {
      EXPECT_TRUE(base.has_edge(std::to_string(e.a), std::to_string(e.b)));
      EXPECT_GE(e.cluster, 1u);
      EXPECT_LE(e.cluster, m + n - 1);
    }
  }
}

TEST(TranscribedTables, NoTableForFigureOrEvenCases) {
  EXPECT_THROW(key_edges(3, 3), GraphError);
  EXPECT_THROW(key_edges(4, 4), GraphError);
}

TEST(DerivedTables, EverySupportedPairHasAFamily) {
  for (auto [m, n] : supported_pairs(41)) {
    if (!has_key_edge_table(classify(m, n))) continue;
    EXPECT_TRUE(derived_family(m, n)) << m << "," << n;
  }
  EXPECT_FALSE(derived_family(3, 3));
  EXPECT_FALSE(derived_family(4, 4));
}

TEST(DerivedTables, ProvenanceNamesTheFamily) {
  auto s = derived_key_edges(9, 9);
  ASSERT_FALSE(s.edges.empty());
  const auto fam = *derived_family(9, 9);
  for (const auto& e : s.edges) EXPECT_EQ(e.provenance.rfind(fam + " ", 0), 0u);
}

TEST(Build, Examples) {
  auto r33 = build_ham_cycle(3, 3);
  ASSERT_TRUE(r33.ok());
  EXPECT_TRUE(r33.via_search);
  EXPECT_EQ(r33.cycle->size(), 25u);

  auto r77 = build_ham_cycle(7, 7);
  ASSERT_TRUE(r77.ok()) << r77.failure->message;
  EXPECT_EQ(r77.cycle->size(), 169u);
  EXPECT_FALSE(r77.via_search);
  EXPECT_TRUE(is_hamiltonian_cycle(otis(gen_bowtie(7, 7)), r77.cycle->order));

  auto r44 = build_ham_cycle(4, 4);
  EXPECT_FALSE(r44.ok());
  ASSERT_TRUE(r44.failure);
  EXPECT_EQ(r44.failure->kind, FailureKind::UnsupportedClass);
}

TEST(Build, NormalizesItsInput) {
  auto r = build_ham_cycle(8, 5);
  EXPECT_EQ(r.params.m, 5u);
  EXPECT_EQ(r.params.n, 8u);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(is_hamiltonian_cycle(otis(gen_bowtie(5, 8)), r.cycle->order));
}

TEST(Build, TranscribedTablesFailWithADiagnostic) {
  BuildOptions o;
  o.tables = KeyTableSource::Transcribed;
  auto r = build_ham_cycle(7, 7, o);
  ASSERT_FALSE(r.ok());
  ASSERT_TRUE(r.failure);
  EXPECT_NE(r.failure->kind, FailureKind::UnsupportedClass);
  EXPECT_TRUE(r.failure->element);
}

TEST(BuildProperty, SweepUpTo21) {
  for (auto [m, n] : supported_pairs(21)) {
    auto r = build_ham_cycle(m, n);
    ASSERT_TRUE(r.ok()) << m << "," << n << ": " << r.failure->message;
    EXPECT_TRUE(is_hamiltonian_cycle(otis(gen_bowtie(m, n)), r.cycle->order)) << m << "," << n;
  }
}

TEST(BuildProperty, SpotChecksBeyondTheSweep) {
  for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 27}, {9, 20}, {13, 13}, {11, 17}, {5, 30}}) {
    auto r = build_ham_cycle(m, n);
    ASSERT_TRUE(r.ok()) << m << "," << n << ": " << r.failure->message;
    EXPECT_EQ(r.cycle->size(), (m + n - 1) * (m + n - 1));
  }
}

TEST(Cost, ThreeFiveVersusThreeNine) {
  const double steps = static_cast<double>(construction_cost(3, 9)) / construction_cost(3, 5);
  const double verts = (11.0 * 11.0) / (7.0 * 7.0);
  EXPECT_LE(steps, 3 * verts);
  EXPECT_THROW(construction_cost(3, 3), GraphError);
  EXPECT_THROW(construction_cost(4, 4), GraphError);
}

TEST(CostProperty, GrowsLinearly) {
  std::vector<double> xs, ys;
  for (auto [m, n] : supported_pairs(21)) {
    if (!has_key_edge_table(classify(m, n))) continue;
    const double v = static_cast<double>((m + n - 1) * (m + n - 1));
    xs.push_back(v);
    ys.push_back(static_cast<double>(construction_cost(m, n)));
  }
  auto fit = [](const std::vector<double>& x, const std::vector<double>& y) {
    const double k = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      sx += x[j]; sy += y[j]; sxx += x[j] * x[j]; sxy += x[j] * y[j]; syy += y[j] * y[j];
    }
    const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    const double r = (k * sxy - sx * sy) / std::sqrt((k * sxx - sx * sx) * (k * syy - sy * sy));
    return std::pair{slope, r * r};
  };
  EXPECT_GE(fit(xs, ys).second, 0.95);
  std::vector<double> lx, ly;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    lx.push_back(std::log(xs[j]));
    ly.push_back(std::log(ys[j]));
  }
  EXPECT_LE(fit(lx, ly).first, 1.15);
}

TEST(BuildProperty, NoSecondEdgeDisjointCycle) {
  for (auto [m, n] : supported_pairs(7)) {
    auto g = otis(gen_bowtie(m, n));
    auto r = build_ham_cycle(m, n);
    ASSERT_TRUE(r.ok());
    EdgeSeed seed;
    const auto& order = r.cycle->order;
    for (std::size_t j = 0; j < order.size(); ++j)
      seed.deleted.push_back(*g.find_edge(g.require(order[j]), g.require(order[(j + 1) % order.size()])));
    EXPECT_EQ(decide(g, seed).kind, VerdictKind::NonHamiltonian) << m << "," << n;
  }
}

TEST(BuildProperty, DeciderAgreesOnNineVertexBases) {
  for (auto [m, n] : supported_pairs(9)) {
    if (m + n - 1 != 9) continue;
    auto verdict = decide(otis(gen_bowtie(m, n)));
    EXPECT_EQ(verdict.kind, VerdictKind::Hamiltonian) << m << "," << n;
    EXPECT_TRUE(build_ham_cycle(m, n).ok());
  }
}
