#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "otisham/graph.hpp"

namespace otisham {

enum class EdgeState : std::uint8_t { Undecided, Forced, Deleted };

enum class ContradictionKind {
  VertexUnderfilled,  // fewer than two live edges left at a vertex
  VertexOverfilled,   // a third edge forced at a vertex
  ShortSubcycle,      // forced edges close a cycle shorter than |V|
};

inline const char* to_string(ContradictionKind k) {
  switch (k) {
    case ContradictionKind::VertexUnderfilled: return "VertexUnderfilled";
    case ContradictionKind::VertexOverfilled: return "VertexOverfilled";
    case ContradictionKind::ShortSubcycle: return "ShortSubcycle";
  }
  return "?";
}

struct Contradiction {
  ContradictionKind kind;
  VertexId vertex = 0;          // offending vertex (first cycle vertex for ShortSubcycle)
  std::vector<VertexId> cycle;  // ShortSubcycle only
};

// Tri-state edge assignment with the per-vertex counters and forced-path
// bookkeeping the propagation rules read. States only move away from
// Undecided, never back.
class EdgeAssignment {
 public:
  explicit EdgeAssignment(const Graph& g)
      : graph_(&g),
        state_(g.edge_count(), EdgeState::Undecided),
        forced_(g.vertex_count(), 0),
        live_(g.vertex_count(), 0),
        path_end_(g.vertex_count()),
        path_len_(g.vertex_count(), 1),
        undecided_(g.edge_count()) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      live_[v] = static_cast<std::uint32_t>(g.degree(v));
      path_end_[v] = v;
    }
  }

  const Graph& graph() const { return *graph_; }

  EdgeState state(EdgeId e) const { return state_[e]; }
  std::size_t forced_count(VertexId v) const { return forced_[v]; }
  std::size_t live_count(VertexId v) const { return live_[v]; }
  std::size_t undecided_edges() const { return undecided_; }
  bool complete() const { return undecided_ == 0; }

  std::vector<EdgeId> forced_edges() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < state_.size(); ++e) {
      if (state_[e] == EdgeState::Forced) out.push_back(e);
    }
    return out;
  }

  /// Walks the forced edges as a cycle starting at `start`. Returns an empty
  /// vector unless they form a single cycle through every vertex.
  std::vector<VertexId> forced_cycle(VertexId start = 0) const {
    const std::size_t n = graph_->vertex_count();
    if (n == 0) return {};
    std::vector<VertexId> order{start};
    VertexId prev = start, cur = start;
    bool first = true;
    while (order.size() <= n) {
      std::optional<VertexId> next;
      for (const auto& inc : graph_->incident(cur)) {
        if (state_[inc.edge] != EdgeState::Forced) continue;
        if (!first && inc.neighbor == prev) continue;
        next = inc.neighbor;
        break;
      }
      if (!next) return {};
      if (*next == start) break;
      prev = cur;
      cur = *next;
      first = false;
      order.push_back(cur);
    }
    if (order.size() != n) return {};
    return order;
  }

 private:
  friend class Propagator;

  const Graph* graph_;
  std::vector<EdgeState> state_;
  std::vector<std::uint32_t> forced_;
  std::vector<std::uint32_t> live_;
  // For a vertex with forced_count <= 1: the other end of its forced path
  // (itself when isolated) and the number of vertices on that path.
  std::vector<VertexId> path_end_;
  std::vector<std::size_t> path_len_;
  std::size_t undecided_;
};

struct PropagationOptions {
  bool subcycle_rule = true;
  // When set, pending rule applications are drawn in random order instead
  // of the default FIFO with subcycle checks last.
  std::optional<std::uint64_t> shuffle_seed;
  // Record contradictions and keep propagating instead of stopping at the
  // first one. The resulting assignment is not consistent; use it only to
  // read back the recorded contradictions.
  bool collect_all = false;
};

struct PropagationStats {
  std::uint64_t steps = 0;
  std::uint64_t forced = 0;
  std::uint64_t deleted = 0;
};

using PropagationResult = std::variant<EdgeAssignment, Contradiction>;

// Seed applied before the fixpoint: edges assumed in / out of the cycle.
struct EdgeSeed {
  std::vector<EdgeId> forced;
  std::vector<EdgeId> deleted;
};

// Runs the three rules to fixpoint over an assignment:
//   R1  a vertex with two forced edges deletes its other undecided edges;
//   R2  a vertex with exactly two live edges forces both;
//   R3  an undecided edge joining the two ends of one forced path shorter
//       than |V| is deleted.
// Contradictions are reported where they arise: an underfilled vertex when
// the deletion that starves it happens, an overfilled vertex or a short
// subcycle when the offending edge is forced.
class Propagator {
 public:
  explicit Propagator(PropagationOptions options = {}) : options_(options) {
    if (options_.shuffle_seed) rng_.seed(*options_.shuffle_seed);
  }

  const PropagationStats& stats() const { return stats_; }

  /// Every contradiction met during the last run (collect_all mode), or the
  /// single one that stopped it.
  const std::vector<Contradiction>& contradictions() const { return contradictions_; }

  PropagationResult run(EdgeAssignment a, const EdgeSeed& seed = {}) {
    vertex_queue_.clear();
    closing_queue_.clear();
    contradictions_.clear();
    reported_.assign(a.graph_->vertex_count(), false);
    for (EdgeId e : seed.deleted) {
      if (a.state_[e] == EdgeState::Forced) throw GraphError("seed both forces and deletes an edge");
      if (a.state_[e] == EdgeState::Undecided && !remove(a, e)) return contradictions_.front();
    }
    for (EdgeId e : seed.forced) {
      if (a.state_[e] == EdgeState::Deleted) throw GraphError("seed both forces and deletes an edge");
      if (a.state_[e] == EdgeState::Undecided && !force(a, e)) return contradictions_.front();
    }
    for (VertexId v = 0; v < a.graph_->vertex_count(); ++v) vertex_queue_.push_back(v);
    if (!drain(a) || !contradictions_.empty()) return contradictions_.front();
    return a;
  }

 private:
  struct Closing {
    VertexId a;
    VertexId b;
  };

  // Each rule application returns false when the run must stop.

  bool drain(EdgeAssignment& a) {
    while (!vertex_queue_.empty() || !closing_queue_.empty()) {
      if (options_.shuffle_seed) {
        const std::size_t total = vertex_queue_.size() + closing_queue_.size();
        const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, total - 1)(rng_);
        if (pick < vertex_queue_.size()) {
          std::swap(vertex_queue_[pick], vertex_queue_.back());
          const VertexId v = vertex_queue_.back();
          vertex_queue_.pop_back();
          if (!check_vertex(a, v)) return false;
        } else {
          std::swap(closing_queue_[pick - vertex_queue_.size()], closing_queue_.back());
          const Closing c = closing_queue_.back();
          closing_queue_.pop_back();
          if (!check_closing(a, c)) return false;
        }
      } else if (!vertex_queue_.empty()) {
        const VertexId v = vertex_queue_.front();
        vertex_queue_.pop_front();
        if (!check_vertex(a, v)) return false;
      } else {
        const Closing c = closing_queue_.front();
        closing_queue_.pop_front();
        if (!check_closing(a, c)) return false;
      }
    }
    return true;
  }

  bool check_vertex(EdgeAssignment& a, VertexId v) {
    ++stats_.steps;
    if (a.live_[v] < 2) return fail({ContradictionKind::VertexUnderfilled, v, {}});
    if (a.forced_[v] == 2 && a.live_[v] > 2) {
      for (const auto& inc : a.graph_->incident(v)) {
        ++stats_.steps;
        if (a.state_[inc.edge] == EdgeState::Undecided && !remove(a, inc.edge)) return false;
      }
    } else if (a.live_[v] == 2 && a.forced_[v] < 2) {
      for (const auto& inc : a.graph_->incident(v)) {
        ++stats_.steps;
        if (a.state_[inc.edge] == EdgeState::Undecided && !force(a, inc.edge)) return false;
      }
    }
    return true;
  }

  bool check_closing(EdgeAssignment& a, Closing c) {
    ++stats_.steps;
    const std::size_t n = a.graph_->vertex_count();
    if (a.forced_[c.a] >= 2 || a.forced_[c.b] >= 2) return true;
    if (a.path_end_[c.a] != c.b || a.path_len_[c.a] >= n) return true;
    auto e = a.graph_->find_edge(c.a, c.b);
    if (e && a.state_[*e] == EdgeState::Undecided) return remove(a, *e);
    return true;
  }

  bool fail(Contradiction c) {
    if (c.kind == ContradictionKind::VertexUnderfilled) {
      if (reported_[c.vertex]) return true;
      reported_[c.vertex] = true;
    }
    contradictions_.push_back(std::move(c));
    return options_.collect_all;
  }

  bool remove(EdgeAssignment& a, EdgeId e) {
    const Edge& edge = a.graph_->edge(e);
    a.state_[e] = EdgeState::Deleted;
    --a.undecided_;
    --a.live_[edge.u];
    --a.live_[edge.v];
    ++stats_.deleted;
    ++stats_.steps;
    vertex_queue_.push_back(edge.u);
    vertex_queue_.push_back(edge.v);
    for (VertexId w : {edge.u, edge.v}) {
      if (a.live_[w] < 2 && !fail({ContradictionKind::VertexUnderfilled, w, {}})) return false;
    }
    return true;
  }

  bool force(EdgeAssignment& a, EdgeId e) {
    const Edge& edge = a.graph_->edge(e);
    const VertexId u = edge.u, v = edge.v;
    const std::size_t n = a.graph_->vertex_count();
    ++stats_.steps;
    if (a.forced_[u] >= 2) return fail({ContradictionKind::VertexOverfilled, u, {}});
    if (a.forced_[v] >= 2) return fail({ContradictionKind::VertexOverfilled, v, {}});
    if (a.path_end_[u] == v && a.path_len_[u] < n) {
      return fail({ContradictionKind::ShortSubcycle, u, walk_path(a, u)});
    }
    const VertexId end_u = a.path_end_[u];
    const VertexId end_v = a.path_end_[v];
    const std::size_t len = a.path_len_[u] + a.path_len_[v];
    a.state_[e] = EdgeState::Forced;
    --a.undecided_;
    ++a.forced_[u];
    ++a.forced_[v];
    ++stats_.forced;
    vertex_queue_.push_back(u);
    vertex_queue_.push_back(v);
    if (end_u == v) return true;  // closed the Hamiltonian cycle
    a.path_end_[end_u] = end_v;
    a.path_end_[end_v] = end_u;
    a.path_len_[end_u] = len;
    a.path_len_[end_v] = len;
    if (options_.subcycle_rule && len < n) closing_queue_.push_back({end_u, end_v});
    return true;
  }

  // Vertices of the forced path that has `from` as one end.
  std::vector<VertexId> walk_path(const EdgeAssignment& a, VertexId from) {
    std::vector<VertexId> path{from};
    VertexId prev = from, cur = from;
    while (true) {
      std::optional<VertexId> next;
      for (const auto& inc : a.graph_->incident(cur)) {
        if (a.state_[inc.edge] == EdgeState::Forced && inc.neighbor != prev) {
          next = inc.neighbor;
          break;
        }
      }
      if (!next || *next == from) break;
      prev = cur;
      cur = *next;
      path.push_back(cur);
      ++stats_.steps;
    }
    return path;
  }

  PropagationOptions options_;
  PropagationStats stats_;
  std::deque<VertexId> vertex_queue_;
  std::deque<Closing> closing_queue_;
  std::mt19937_64 rng_;
  std::vector<Contradiction> contradictions_;
  std::vector<bool> reported_;
};

inline PropagationResult propagate(const EdgeAssignment& a, const EdgeSeed& seed = {},
                                   const PropagationOptions& options = {},
                                   PropagationStats* stats = nullptr) {
  Propagator p(options);
  auto result = p.run(a, seed);
  if (stats) *stats = p.stats();
  return result;
}

inline PropagationResult propagate(const Graph& g, const EdgeSeed& seed = {},
                                   const PropagationOptions& options = {},
                                   PropagationStats* stats = nullptr) {
  return propagate(EdgeAssignment(g), seed, options, stats);
}

/// Looks up an edge by endpoint labels; throws GraphError if absent.
inline EdgeId require_edge(const Graph& g, std::string_view u, std::string_view v) {
  auto e = g.find_edge(g.require(u), g.require(v));
  if (!e) throw GraphError("no edge '" + std::string(u) + "' - '" + std::string(v) + "'");
  return *e;
}

}  // namespace otisham
