#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "otisham/graph.hpp"

namespace otisham {

// Lower bound on the edges no Hamiltonian cycle can use, against the budget
// |E| - |V| of edges a cycle leaves out.
struct CountingCertificate {
  std::size_t budget = 0;                    // |E| - |V|
  std::vector<VertexId> high_degree;         // independent vertices of degree >= 4
  std::size_t high_degree_contribution = 0;  // sum of (deg - 2)
  std::vector<VertexId> independent_set;     // maximum independent set of qualifying degree-3 vertices
  std::size_t bound() const { return high_degree_contribution + independent_set.size(); }
};

struct CountingAnalysis {
  CountingCertificate certificate;
  std::size_t candidates = 0;    // qualifying degree-3 vertices
  bool too_large = false;        // candidates exceeded the cap, no MIS computed
  bool refutes() const { return !too_large && certificate.bound() > certificate.budget; }
};

inline constexpr std::size_t kMisCandidateCap = 40;

namespace detail {

class MaxIndependentSet {
 public:
  explicit MaxIndependentSet(std::vector<std::uint64_t> adjacency) : adj_(std::move(adjacency)) {}

  std::uint64_t solve() {
    const std::size_t n = adj_.size();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    recurse(all, 0);
    return best_;
  }

 private:
  void recurse(std::uint64_t pool, std::uint64_t chosen) {
    const int have = std::popcount(chosen);
    if (pool == 0) {
      if (have > std::popcount(best_) || best_ == 0) best_ = chosen;
      return;
    }
    if (have + std::popcount(pool) <= std::popcount(best_)) return;
    // Vertices isolated inside the pool are always taken.
    std::uint64_t free = 0;
    int pick = -1;
    int pick_degree = -1;
    for (std::uint64_t rest = pool; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int d = std::popcount(adj_[v] & pool);
      if (d == 0) free |= std::uint64_t{1} << v;
      if (d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    if (free) {
      recurse(pool & ~free, chosen | free);
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << pick;
    recurse(pool & ~bit & ~adj_[pick], chosen | bit);
    recurse(pool & ~bit, chosen);
  }

  std::vector<std::uint64_t> adj_;
  std::uint64_t best_ = 0;
};

}  // namespace detail

/// Full counting analysis, including the inconclusive cases.
inline CountingAnalysis counting_analysis(const Graph& g) {
  CountingAnalysis out;
  auto& cert = out.certificate;
  cert.budget = g.edge_count() > g.vertex_count() ? g.edge_count() - g.vertex_count() : 0;

  // Degree >= 4 family, kept independent greedily in vertex order.
  std::vector<bool> in_family(g.vertex_count(), false);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 4) continue;
    bool clash = false;
    for (const auto& inc : g.incident(v)) clash = clash || in_family[inc.neighbor];
    if (clash) continue;
    in_family[v] = true;
    cert.high_degree.push_back(v);
    cert.high_degree_contribution += g.degree(v) - 2;
  }

  std::vector<VertexId> candidates;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) continue;
    bool near_high = false;
    for (const auto& inc : g.incident(v)) near_high = near_high || g.degree(inc.neighbor) >= 4;
    if (!near_high) candidates.push_back(v);
  }
  out.candidates = candidates.size();
  if (candidates.size() > kMisCandidateCap) {
    out.too_large = true;
    return out;
  }

  std::vector<std::uint64_t> adj(candidates.size(), 0);
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    for (std::size_t b = 0; b < candidates.size(); ++b) {
      if (a != b && g.has_edge(candidates[a], candidates[b])) adj[a] |= std::uint64_t{1} << b;
    }
  }
  const std::uint64_t mis = detail::MaxIndependentSet(std::move(adj)).solve();
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    if ((mis >> a) & 1u) cert.independent_set.push_back(candidates[a]);
  }
  return out;
}

/// Certificate of non-Hamiltonicity when the counted bound exceeds the
/// budget; nullopt means inconclusive.
inline std::optional<CountingCertificate> counting_refutation(const Graph& g) {
  if (!is_connected(g)) throw GraphError("counting refutation needs a connected graph");
  auto analysis = counting_analysis(g);
  if (!analysis.refutes()) return std::nullopt;
  return analysis.certificate;
}

}  // namespace otisham
