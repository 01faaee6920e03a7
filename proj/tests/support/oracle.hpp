#pragma once

// Reference implementations used only by the tests. They share nothing with
// the library beyond the Graph container.

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "otisham/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix adjacency(const otisham::Graph& g) {
  Matrix a(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
  return a;
}

// Plain permutation backtracking from vertex 0.
class HamiltonOracle {
 public:
  explicit HamiltonOracle(const otisham::Graph& g) : a_(adjacency(g)), n_(g.vertex_count()) {}

  bool has_cycle() {
    if (n_ < 3) return false;
    path_ = {0};
    used_.assign(n_, false);
    used_[0] = true;
    found_ = false;
    extend(false);
    return found_;
  }

  // Every Hamiltonian cycle as a sorted edge set (vertex pairs u < v).
  std::vector<std::set<std::pair<std::size_t, std::size_t>>> all_cycles() {
    cycles_.clear();
    if (n_ < 3) return {};
    path_ = {0};
    used_.assign(n_, false);
    used_[0] = true;
    found_ = false;
    extend(true);
    return {cycles_.begin(), cycles_.end()};
  }

 private:
  void extend(bool collect) {
    if (found_ && !collect) return;
    if (path_.size() == n_) {
      if (!a_[path_.back()][0]) return;
      found_ = true;
      if (collect) {
        std::set<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t k = 0; k < n_; ++k) {
          auto u = path_[k];
          auto v = path_[(k + 1) % n_];
          edges.insert({std::min(u, v), std::max(u, v)});
        }
        cycles_.insert(edges);
      }
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v] || !a_[path_.back()][v]) continue;
      used_[v] = true;
      path_.push_back(v);
      extend(collect);
      path_.pop_back();
      used_[v] = false;
      if (found_ && !collect) return;
    }
  }

  Matrix a_;
  std::size_t n_;
  std::vector<std::size_t> path_;
  std::vector<bool> used_;
  bool found_ = false;
  std::set<std::set<std::pair<std::size_t, std::size_t>>> cycles_;
};

inline bool hamiltonian(const otisham::Graph& g) { return HamiltonOracle(g).has_cycle(); }

// Erdos-Renyi graph on n vertices labelled 1..n.
inline otisham::Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  otisham::Graph g;
  for (std::size_t v = 1; v <= n; ++v) g.add_vertex(std::to_string(v));
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

// Connected random graph: a random spanning tree plus extra edges.
inline otisham::Graph random_connected(std::mt19937_64& rng, std::size_t n, double extra) {
  otisham::Graph g;
  for (std::size_t v = 1; v <= n; ++v) g.add_vertex(std::to_string(v));
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, v - 1);
    g.add_edge(pick(rng), v);
  }
  std::bernoulli_distribution coin(extra);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v) && coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

// All-pairs distances by Floyd-Warshall.
inline std::size_t diameter(const otisham::Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t inf = n + 1;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  std::size_t best = 0;
  for (auto& row : d)
    for (auto x : row) best = std::max(best, x);
  return best;
}

}  // namespace oracle
