#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "otisham/graph.hpp"

namespace otisham {

using ParentMap = std::map<std::string, std::string>;  // child -> parent; root absent

struct TreePair {
  std::string root;
  ParentMap t1;
  ParentMap t2;
  std::pair<std::string, std::string> omitted_1;  // (r, successor)
  std::pair<std::string, std::string> omitted_2;  // (predecessor, r)
};

/// Two spanning paths of the cycle rooted at `root`: t1 drops the edge to the
/// successor, t2 the edge to the predecessor.
inline TreePair build_ists(const HamCycle& cycle, const std::string& root) {
  const auto& order = cycle.order;
  const std::size_t n = order.size();
  std::size_t at = n;
  for (std::size_t k = 0; k < n; ++k) {
    if (order[k] == root) at = k;
  }
  if (at == n) throw GraphError("root '" + root + "' is not on the cycle");
  if (n < 3) throw GraphError("cycle too short for two spanning trees");

  TreePair pair;
  pair.root = root;
  pair.omitted_1 = {root, order[(at + 1) % n]};
  pair.omitted_2 = {order[(at + n - 1) % n], root};
  // t1: walk backwards from the root, each vertex hangs off the previous one.
  for (std::size_t step = 1; step < n; ++step) {
    pair.t1[order[(at + n - step) % n]] = order[(at + n - step + 1) % n];
    pair.t2[order[(at + step) % n]] = order[(at + step - 1) % n];
  }
  return pair;
}

struct TreeCheck {
  bool spanning = false;
  bool edges_in_graph = false;
  bool acyclic = false;
  std::size_t edge_count = 0;
  bool ok() const { return spanning && edges_in_graph && acyclic; }
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Parent ids of a tree over g; nullopt when a label is unknown.
inline std::optional<std::vector<std::size_t>> parent_ids(const ParentMap& tree, const Graph& g) {
  std::vector<std::size_t> parent(g.vertex_count(), kInfiniteDistance);
  for (const auto& [child, up] : tree) {
    auto a = g.find(child);
    auto b = g.find(up);
    if (!a || !b) return std::nullopt;
    parent[*a] = *b;
  }
  return parent;
}

// Path v -> ... -> root by parent walking; empty on a broken chain.
inline std::vector<std::size_t> tree_path(const std::vector<std::size_t>& parent, std::size_t root,
                                          std::size_t v) {
  std::vector<std::size_t> path{v};
  while (path.back() != root) {
    std::size_t up = parent[path.back()];
    if (up == kInfiniteDistance || path.size() > parent.size()) return {};
    path.push_back(up);
  }
  return path;
}

}  // namespace detail

inline TreeCheck check_tree(const ParentMap& tree, const std::string& root, const Graph& g) {
  TreeCheck check;
  check.edge_count = tree.size();
  check.spanning = g.find(root).has_value() && tree.size() + 1 == g.vertex_count() && !tree.count(root);
  check.edges_in_graph = true;
  check.acyclic = true;
  detail::DisjointSets sets(g.vertex_count());
  for (const auto& [child, parent] : tree) {
    auto a = g.find(child);
    auto b = g.find(parent);
    if (!a || !b || !g.has_edge(*a, *b)) {
      check.edges_in_graph = false;
      continue;
    }
    if (!sets.unite(*a, *b)) check.acyclic = false;
  }
  return check;
}

struct IndependenceReport {
  bool well_formed = false;
  bool vertex_disjoint = false;
  bool edge_disjoint = false;
  std::optional<std::string> first_vertex_violation;
  std::optional<std::string> first_edge_violation;
};

inline IndependenceReport check_independence(const TreePair& pair, const Graph& g) {
  IndependenceReport report;
  report.well_formed = check_tree(pair.t1, pair.root, g).ok() && check_tree(pair.t2, pair.root, g).ok();
  if (!report.well_formed) return report;
  const std::size_t root = g.require(pair.root);
  const auto up1 = *detail::parent_ids(pair.t1, g);
  const auto up2 = *detail::parent_ids(pair.t2, g);
  report.vertex_disjoint = true;
  report.edge_disjoint = true;
  // stamp == v + 1 marks vertices and edges on v's t1 path.
  std::vector<std::size_t> stamp(g.vertex_count(), 0);
  std::vector<std::size_t> edge_stamp(g.edge_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v == root) continue;
    auto p1 = detail::tree_path(up1, root, v);
    auto p2 = detail::tree_path(up2, root, v);
    if (p1.empty() || p2.empty()) {
      report.well_formed = report.vertex_disjoint = report.edge_disjoint = false;
      return report;
    }
    for (std::size_t k = 1; k + 1 < p1.size(); ++k) stamp[p1[k]] = v + 1;
    for (std::size_t k = 0; k + 1 < p1.size(); ++k) edge_stamp[*g.find_edge(p1[k], p1[k + 1])] = v + 1;
    for (std::size_t k = 1; k + 1 < p2.size(); ++k) {
      if (stamp[p2[k]] == v + 1 && report.vertex_disjoint) {
        report.vertex_disjoint = false;
        report.first_vertex_violation = g.label(v);
      }
    }
    for (std::size_t k = 0; k + 1 < p2.size(); ++k) {
      if (edge_stamp[*g.find_edge(p2[k], p2[k + 1])] == v + 1 && report.edge_disjoint) {
        report.edge_disjoint = false;
        report.first_edge_violation = g.label(v);
      }
    }
  }
  return report;
}

/// True iff both trees are spanning trees of g rooted at the same vertex and
/// every root path pair is internally vertex-disjoint.
inline bool verify_independence(const TreePair& pair, const Graph& g) {
  auto r = check_independence(pair, g);
  return r.well_formed && r.vertex_disjoint;
}

}  // namespace otisham
