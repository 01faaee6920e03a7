#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace otisham {

using VertexId = std::size_t;
using EdgeId = std::size_t;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One entry of a vertex's adjacency list.
struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

struct Edge {
  VertexId u;
  VertexId v;

  VertexId other(VertexId w) const { return w == u ? v : u; }
};

// Undirected simple graph over opaque string labels. Vertices and edges keep
// insertion order so every traversal is reproducible.
class Graph {
 public:
  Graph() = default;

  VertexId add_vertex(std::string label) {
    if (label.empty() ||
        std::any_of(label.begin(), label.end(),
                    [](unsigned char ch) { return std::isspace(ch); })) {
      throw GraphError("malformed vertex label '" + label + "'");
    }
    if (index_.count(label)) {
      throw GraphError("duplicate vertex '" + label + "'");
    }
    VertexId id = labels_.size();
    index_.emplace(label, id);
    labels_.push_back(std::move(label));
    adjacency_.emplace_back();
    return id;
  }

  EdgeId add_edge(VertexId u, VertexId v) {
    if (u >= labels_.size() || v >= labels_.size()) {
      throw GraphError("edge endpoint out of range");
    }
    if (u == v) {
      throw GraphError("self-loop at '" + labels_[u] + "'");
    }
    if (!edge_index_.emplace(key(u, v), edges_.size()).second) {
      throw GraphError("duplicate edge '" + labels_[u] + "' - '" + labels_[v] + "'");
    }
    EdgeId id = edges_.size();
    edges_.push_back({u, v});
    adjacency_[u].push_back({v, id});
    adjacency_[v].push_back({u, id});
    return id;
  }

  EdgeId add_edge(std::string_view u, std::string_view v) {
    return add_edge(require(u), require(v));
  }

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<VertexId> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  VertexId require(std::string_view label) const {
    if (auto id = find(label)) return *id;
    throw GraphError("unknown vertex '" + std::string(label) + "'");
  }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<Incidence>& incident(VertexId v) const { return adjacency_.at(v); }

  std::vector<VertexId> neighbors(VertexId v) const {
    std::vector<VertexId> out;
    out.reserve(adjacency_.at(v).size());
    for (const auto& inc : adjacency_[v]) out.push_back(inc.neighbor);
    return out;
  }

  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  std::size_t degree(std::string_view label) const { return degree(require(label)); }

  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const {
    auto it = edge_index_.find(key(u, v));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }

  bool has_edge(VertexId u, VertexId v) const { return find_edge(u, v).has_value(); }

  bool has_edge(std::string_view u, std::string_view v) const {
    auto a = find(u);
    auto b = find(v);
    return a && b && has_edge(*a, *b);
  }

 private:
  static std::uint64_t key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::unordered_map<std::uint64_t, EdgeId> edge_index_;
};

inline constexpr std::size_t kInfiniteDistance = std::numeric_limits<std::size_t>::max();

struct GraphMetrics {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::size_t diameter = 0;  // kInfiniteDistance when disconnected
  std::size_t connectivity = 0;
  bool connectivity_exact = true;
};

/// Hop distances from `source`; unreachable vertices get kInfiniteDistance.
inline std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source) {
  std::vector<std::size_t> dist(g.vertex_count(), kInfiniteDistance);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(v)) {
      if (dist[inc.neighbor] == kInfiniteDistance) {
        dist[inc.neighbor] = dist[v] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::size_t d) { return d == kInfiniteDistance; });
}

inline std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    for (std::size_t d : bfs_distances(g, s)) {
      if (d == kInfiniteDistance) return kInfiniteDistance;
      best = std::max(best, d);
    }
  }
  return best;
}

namespace detail {

// Local vertex connectivity between non-adjacent s and t: unit-capacity
// max-flow on the split graph (v_in -> v_out), augmenting by BFS.
inline std::size_t local_vertex_connectivity(const Graph& g, VertexId s, VertexId t) {
  const std::size_t n = g.vertex_count();
  struct Arc {
    std::size_t to;
    int cap;
    std::size_t rev;
  };
  std::vector<std::vector<Arc>> net(2 * n);
  auto add_arc = [&](std::size_t a, std::size_t b, int cap) {
    net[a].push_back({b, cap, net[b].size()});
    net[b].push_back({a, 0, net[a].size() - 1});
  };
  const int big = static_cast<int>(n) + 1;
  for (VertexId v = 0; v < n; ++v) {
    add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
  }
  for (const auto& e : g.edges()) {
    add_arc(2 * e.u + 1, 2 * e.v, big);
    add_arc(2 * e.v + 1, 2 * e.u, big);
  }
  const std::size_t source = 2 * s + 1;
  const std::size_t sink = 2 * t;
  std::size_t flow = 0;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> parent(2 * n, {SIZE_MAX, 0});
    std::deque<std::size_t> queue{source};
    parent[source] = {source, 0};
    while (!queue.empty() && parent[sink].first == SIZE_MAX) {
      std::size_t a = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < net[a].size(); ++k) {
        const Arc& arc = net[a][k];
        if (arc.cap > 0 && parent[arc.to].first == SIZE_MAX) {
          parent[arc.to] = {a, k};
          queue.push_back(arc.to);
        }
      }
    }
    if (parent[sink].first == SIZE_MAX) break;
    for (std::size_t x = sink; x != source; x = parent[x].first) {
      Arc& arc = net[parent[x].first][parent[x].second];
      arc.cap -= 1;
      net[x][arc.rev].cap += 1;
    }
    ++flow;
  }
  return flow;
}

inline bool has_articulation_point(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::size_t timer = 0;
  bool found = false;
  std::function<void(VertexId, VertexId)> dfs = [&](VertexId v, VertexId parent) {
    disc[v] = low[v] = ++timer;
    std::size_t children = 0;
    for (const auto& inc : g.incident(v)) {
      VertexId w = inc.neighbor;
      if (disc[w] == 0) {
        ++children;
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (parent != v && low[w] >= disc[v]) found = true;
      } else if (w != parent) {
        low[v] = std::min(low[v], disc[w]);
      }
    }
    if (parent == v && children > 1) found = true;
  };
  for (VertexId v = 0; v < n; ++v) {
    if (disc[v] == 0) dfs(v, v);
  }
  return found;
}

}  // namespace detail

/// Vertex connectivity. Exact when |V| <= exact_cap; above the cap the value
/// is a lower bound (0, 1 or 2 from connectivity/articulation checks).
inline std::pair<std::size_t, bool> vertex_connectivity(const Graph& g,
                                                        std::size_t exact_cap = 64) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return {0, true};
  if (!is_connected(g)) return {0, true};
  if (detail::has_articulation_point(g)) return {1, true};
  if (n > exact_cap) return {n >= 3 ? 2 : 1, false};
  std::size_t best = n - 1;
  for (VertexId s = 0; s < n; ++s) {
    for (VertexId t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      best = std::min(best, detail::local_vertex_connectivity(g, s, t));
    }
  }
  return {best, true};
}

inline GraphMetrics metrics(const Graph& g, std::size_t connectivity_cap = 64) {
  GraphMetrics m;
  if (g.vertex_count() == 0) return m;
  m.min_degree = std::numeric_limits<std::size_t>::max();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    m.min_degree = std::min(m.min_degree, g.degree(v));
    m.max_degree = std::max(m.max_degree, g.degree(v));
  }
  m.diameter = diameter(g);
  std::tie(m.connectivity, m.connectivity_exact) = vertex_connectivity(g, connectivity_cap);
  return m;
}

/// Upper bound on the number of pairwise edge-disjoint Hamiltonian cycles:
/// every cycle spends two edges at the minimum-degree vertex.
inline std::size_t max_edge_disjoint_ham_bound(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  std::size_t delta = std::numeric_limits<std::size_t>::max();
  for (VertexId v = 0; v < g.vertex_count(); ++v) delta = std::min(delta, g.degree(v));
  return delta / 2;
}

enum class CycleCheck {
  Ok,
  WrongLength,
  UnknownVertex,
  RepeatedVertex,
  MissingEdge,
};

inline const char* to_string(CycleCheck c) {
  switch (c) {
    case CycleCheck::Ok: return "ok";
    case CycleCheck::WrongLength: return "wrong-length";
    case CycleCheck::UnknownVertex: return "unknown-vertex";
    case CycleCheck::RepeatedVertex: return "repeated-vertex";
    case CycleCheck::MissingEdge: return "missing-edge";
  }
  return "?";
}

inline CycleCheck check_hamiltonian_cycle(const Graph& g, const std::vector<VertexId>& order) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || order.size() != n) return CycleCheck::WrongLength;
  std::vector<bool> seen(n, false);
  for (VertexId v : order) {
    if (v >= n) return CycleCheck::UnknownVertex;
    if (seen[v]) return CycleCheck::RepeatedVertex;
    seen[v] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!g.has_edge(order[k], order[(k + 1) % n])) return CycleCheck::MissingEdge;
  }
  return CycleCheck::Ok;
}

inline CycleCheck check_hamiltonian_cycle(const Graph& g, const std::vector<std::string>& order) {
  std::vector<VertexId> ids;
  ids.reserve(order.size());
  for (const auto& label : order) {
    auto id = g.find(label);
    if (!id) return CycleCheck::UnknownVertex;
    ids.push_back(*id);
  }
  return check_hamiltonian_cycle(g, ids);
}

template <typename Order>
bool is_hamiltonian_cycle(const Graph& g, const Order& order) {
  return check_hamiltonian_cycle(g, order) == CycleCheck::Ok;
}

// A Hamiltonian cycle certificate: vertex labels in cyclic order.
struct HamCycle {
  std::vector<std::string> order;

  std::size_t size() const { return order.size(); }
};

inline HamCycle to_ham_cycle(const Graph& g, const std::vector<VertexId>& order) {
  HamCycle c;
  c.order.reserve(order.size());
  for (VertexId v : order) c.order.push_back(g.label(v));
  return c;
}

// ---------------------------------------------------------------------------
// Edge-list text format
//
//   V <count>
//   u v          one edge per line, labels whitespace-free
//   w            a lone label declares an isolated vertex
//
// Blank lines and lines starting with '#' are ignored.

inline Graph read_edge_list(std::istream& in) {
  Graph g;
  std::string line;
  std::optional<std::size_t> declared;
  std::size_t line_no = 0;
  auto ensure = [&g](const std::string& label) {
    if (auto id = g.find(label)) return *id;
    return g.add_vertex(label);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty() || words[0].front() == '#') continue;
    if (!declared) {
      if (words.size() != 2 || words[0] != "V") {
        throw GraphError("edge list: expected 'V <count>' header on line " +
                         std::to_string(line_no));
      }
      try {
        declared = std::stoul(words[1]);
      } catch (const std::exception&) {
        throw GraphError("edge list: bad vertex count '" + words[1] + "'");
      }
      continue;
    }
    if (words.size() == 1) {
      ensure(words[0]);
    } else if (words.size() == 2) {
      VertexId a = ensure(words[0]);
      VertexId b = ensure(words[1]);
      g.add_edge(a, b);
    } else {
      throw GraphError("edge list: malformed line " + std::to_string(line_no));
    }
  }
  if (!declared) throw GraphError("edge list: missing 'V <count>' header");
  if (*declared != g.vertex_count()) {
    throw GraphError("edge list: header declares " + std::to_string(*declared) +
                     " vertices, found " + std::to_string(g.vertex_count()));
  }
  return g;
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "V " << g.vertex_count() << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) out << g.label(v) << '\n';
  }
  for (const auto& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

/// FNV-1a over the canonical (sorted) edge list; independent of insertion order.
inline std::string graph_hash(const Graph& g) {
  std::vector<std::string> lines;
  lines.reserve(g.vertex_count() + g.edge_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) lines.push_back("v " + g.label(v));
  for (const auto& e : g.edges()) {
    auto a = g.label(e.u);
    auto b = g.label(e.v);
    if (b < a) std::swap(a, b);
    lines.push_back("e " + a + ' ' + b);
  }
  std::sort(lines.begin(), lines.end());
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& line : lines) {
    for (unsigned char ch : line) {
      h ^= ch;
      h *= 1099511628211ull;
    }
    h ^= '\n';
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

}  // namespace otisham
