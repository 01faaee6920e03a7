#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <future>
#include <optional>
#include <string>

#include "otisham/graph.hpp"
#include "otisham/propagation.hpp"

namespace otisham {

struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;
  double max_seconds = 600.0;
};

struct DecideOptions {
  SearchBudget budget;
  bool parallel_root = false;
  PropagationOptions propagation;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t max_depth = 0;
  std::uint64_t propagation_steps = 0;
};

enum class VerdictKind { Hamiltonian, NonHamiltonian, Inconclusive };

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Hamiltonian: return "Hamiltonian";
    case VerdictKind::NonHamiltonian: return "NonHamiltonian";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

struct HamVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::optional<HamCycle> cycle;  // set iff Hamiltonian
  SearchStats stats;
};

namespace detail {

class Search {
 public:
  Search(const Graph& g, const DecideOptions& options)
      : graph_(g),
        options_(options),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(options.budget.max_seconds))) {}

  enum class Outcome { Found, Exhausted, OutOfBudget };

  Outcome explore(const EdgeAssignment& a, const EdgeSeed& seed, std::uint64_t depth) {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (stats_.nodes > options_.budget.max_nodes) return Outcome::OutOfBudget;
    if ((stats_.nodes & 0xff) == 0 && std::chrono::steady_clock::now() > deadline_) {
      return Outcome::OutOfBudget;
    }
    Propagator p(options_.propagation);
    auto result = p.run(a, seed);
    stats_.propagation_steps += p.stats().steps;
    if (std::holds_alternative<Contradiction>(result)) return Outcome::Exhausted;
    const auto& fixed = std::get<EdgeAssignment>(result);
    if (fixed.complete()) {
      auto order = fixed.forced_cycle(0);
      if (!order.empty() && is_hamiltonian_cycle(graph_, order)) {
        witness_ = order;
        return Outcome::Found;
      }
      return Outcome::Exhausted;
    }
    const EdgeId branch = pick_branch(fixed);
    bool out_of_budget = false;
    for (bool take : {true, false}) {
      EdgeSeed next;
      (take ? next.forced : next.deleted).push_back(branch);
      auto outcome = explore(fixed, next, depth + 1);
      if (outcome == Outcome::Found) return outcome;
      if (outcome == Outcome::OutOfBudget) out_of_budget = true;
      if (out_of_budget) break;
    }
    return out_of_budget ? Outcome::OutOfBudget : Outcome::Exhausted;
  }

  // Undecided edge at the vertex with fewest live edges; ties by vertex id,
  // then adjacency order.
  EdgeId pick_branch(const EdgeAssignment& a) const {
    std::optional<VertexId> best;
    for (VertexId v = 0; v < graph_.vertex_count(); ++v) {
      if (a.forced_count(v) == a.live_count(v)) continue;  // nothing undecided here
      if (!best || a.live_count(v) < a.live_count(*best)) best = v;
    }
    for (const auto& inc : graph_.incident(*best)) {
      if (a.state(inc.edge) == EdgeState::Undecided) return inc.edge;
    }
    throw GraphError("branch vertex without undecided edge");
  }

  const SearchStats& stats() const { return stats_; }
  const std::vector<VertexId>& witness() const { return witness_; }

 private:
  const Graph& graph_;
  DecideOptions options_;
  std::chrono::steady_clock::time_point deadline_;
  SearchStats stats_;
  std::vector<VertexId> witness_;
};

inline HamVerdict make_verdict(const Graph& g, Search::Outcome outcome, const Search& s) {
  HamVerdict v;
  v.stats = s.stats();
  switch (outcome) {
    case Search::Outcome::Found:
      v.kind = VerdictKind::Hamiltonian;
      v.cycle = to_ham_cycle(g, s.witness());
      break;
    case Search::Outcome::Exhausted: v.kind = VerdictKind::NonHamiltonian; break;
    case Search::Outcome::OutOfBudget: v.kind = VerdictKind::Inconclusive; break;
  }
  return v;
}

}  // namespace detail

/// Complete branch-and-propagate Hamiltonicity decision. Hamiltonian verdicts
/// carry a verified witness; NonHamiltonian means the search tree was exhausted.
inline HamVerdict decide(const Graph& g, const EdgeSeed& seed = {}, const DecideOptions& options = {}) {
  if (g.vertex_count() < 3 || !is_connected(g)) {
    HamVerdict v;
    v.kind = VerdictKind::NonHamiltonian;
    return v;
  }
  EdgeAssignment root(g);
  if (!options.parallel_root) {
    detail::Search s(g, options);
    auto outcome = s.explore(root, seed, 0);
    return detail::make_verdict(g, outcome, s);
  }

  // Root split: propagate the seed once, then search both branches of the
  // first decision concurrently.
  detail::Search head(g, options);
  Propagator p(options.propagation);
  auto fixed = p.run(root, seed);
  if (std::holds_alternative<Contradiction>(fixed) ||
      std::get<EdgeAssignment>(fixed).complete()) {
    auto outcome = head.explore(root, seed, 0);
    return detail::make_verdict(g, outcome, head);
  }
  const auto& base = std::get<EdgeAssignment>(fixed);
  const EdgeId branch = head.pick_branch(base);
  auto run_branch = [&](bool take) {
    detail::Search s(g, options);
    EdgeSeed next;
    (take ? next.forced : next.deleted).push_back(branch);
    auto outcome = s.explore(base, next, 1);
    return std::pair{outcome, std::move(s)};
  };
  auto taken = std::async(std::launch::async, run_branch, true);
  auto skipped = std::async(std::launch::async, run_branch, false);
  auto [out_take, s_take] = taken.get();
  auto [out_skip, s_skip] = skipped.get();

  HamVerdict v;
  v.stats.nodes = 1 + s_take.stats().nodes + s_skip.stats().nodes;
  v.stats.max_depth = std::max(s_take.stats().max_depth, s_skip.stats().max_depth);
  v.stats.propagation_steps =
      p.stats().steps + s_take.stats().propagation_steps + s_skip.stats().propagation_steps;
  if (out_take == detail::Search::Outcome::Found) {
    v.kind = VerdictKind::Hamiltonian;
    v.cycle = to_ham_cycle(g, s_take.witness());
  } else if (out_skip == detail::Search::Outcome::Found) {
    v.kind = VerdictKind::Hamiltonian;
    v.cycle = to_ham_cycle(g, s_skip.witness());
  } else if (out_take == detail::Search::Outcome::OutOfBudget ||
             out_skip == detail::Search::Outcome::OutOfBudget) {
    v.kind = VerdictKind::Inconclusive;
  } else {
    v.kind = VerdictKind::NonHamiltonian;
  }
  return v;
}

}  // namespace otisham
