#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "otisham/graph.hpp"

namespace otisham {

// Two cycles C_m and C_n glued at one cut vertex. Labels run 1..i with the
// left cycle on {1..c} and the right cycle on {c..i}, c = m, i = m + n - 1.
struct BowtieParams {
  std::size_t m = 3;
  std::size_t n = 3;

  std::size_t cut() const { return m; }
  std::size_t last() const { return m + n - 1; }

  /// Canonical orientation: m <= n when the parities agree, otherwise the
  /// odd cycle goes on the left.
  static BowtieParams normalized(std::size_t a, std::size_t b) {
    const bool a_odd = a % 2 == 1;
    const bool b_odd = b % 2 == 1;
    if (a_odd != b_odd) return a_odd ? BowtieParams{a, b} : BowtieParams{b, a};
    return a <= b ? BowtieParams{a, b} : BowtieParams{b, a};
  }

  bool is_normalized() const {
    auto canon = normalized(m, n);
    return canon.m == m && canon.n == n;
  }
};

inline Graph gen_bowtie(const BowtieParams& p) {
  if (p.m < 3 || p.n < 3) {
    throw GraphError("bowtie cycles need length >= 3 (got " + std::to_string(p.m) + ", " +
                     std::to_string(p.n) + ")");
  }
  const std::size_t c = p.cut();
  const std::size_t i = p.last();
  Graph g;
  for (std::size_t v = 1; v <= i; ++v) g.add_vertex(std::to_string(v));
  auto id = [](std::size_t label) { return label - 1; };
  for (std::size_t v = 1; v < c; ++v) g.add_edge(id(v), id(v + 1));
  g.add_edge(id(c), id(1));
  for (std::size_t v = c; v < i; ++v) g.add_edge(id(v), id(v + 1));
  g.add_edge(id(i), id(c));
  return g;
}

inline Graph gen_bowtie(std::size_t m, std::size_t n) { return gen_bowtie(BowtieParams{m, n}); }

// Vertex (level, word) of the wrapped butterfly of a given dimension.
struct ButterflyVertex {
  std::size_t level = 0;
  std::size_t word = 0;  // bit k holds x_k

  /// Decimal label used for the vertex: level * 2^dim + word + 1.
  std::size_t index(std::size_t dim) const { return level * (std::size_t{1} << dim) + word + 1; }

  static ButterflyVertex from_index(std::size_t dim, std::size_t index) {
    const std::size_t words = std::size_t{1} << dim;
    return {(index - 1) / words, (index - 1) % words};
  }

  std::string bits(std::size_t dim) const {
    std::string s(dim, '0');
    for (std::size_t k = 0; k < dim; ++k) {
      if ((word >> k) & 1u) s[dim - 1 - k] = '1';
    }
    return s;
  }
};

/// Wrapped butterfly: (a, x) ~ (a+1 mod dim, x) and (a+1 mod dim, x ^ bit(a+1 mod dim)).
inline Graph gen_butterfly(std::size_t dim) {
  if (dim < 3) {
    throw GraphError("butterfly dimension must be >= 3 (got " + std::to_string(dim) + ")");
  }
  if (dim > 20) throw GraphError("butterfly dimension too large");
  const std::size_t words = std::size_t{1} << dim;
  Graph g;
  for (std::size_t level = 0; level < dim; ++level) {
    for (std::size_t word = 0; word < words; ++word) {
      g.add_vertex(std::to_string(ButterflyVertex{level, word}.index(dim)));
    }
  }
  auto id = [&](std::size_t level, std::size_t word) { return level * words + word; };
  for (std::size_t level = 0; level < dim; ++level) {
    const std::size_t next = (level + 1) % dim;
    for (std::size_t word = 0; word < words; ++word) {
      g.add_edge(id(level, word), id(next, word));
      g.add_edge(id(level, word), id(next, word ^ (std::size_t{1} << next)));
    }
  }
  return g;
}

inline Graph gen_cycle(std::size_t k) {
  if (k < 3) throw GraphError("cycle needs k >= 3");
  Graph g;
  for (std::size_t v = 1; v <= k; ++v) g.add_vertex(std::to_string(v));
  for (std::size_t v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
  return g;
}

inline Graph gen_path(std::size_t k) {
  if (k < 1) throw GraphError("path needs k >= 1");
  Graph g;
  for (std::size_t v = 1; v <= k; ++v) g.add_vertex(std::to_string(v));
  for (std::size_t v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph gen_complete(std::size_t k) {
  if (k < 1) throw GraphError("complete graph needs k >= 1");
  Graph g;
  for (std::size_t v = 1; v <= k; ++v) g.add_vertex(std::to_string(v));
  for (std::size_t u = 0; u < k; ++u) {
    for (std::size_t v = u + 1; v < k; ++v) g.add_edge(u, v);
  }
  return g;
}

// ---------------------------------------------------------------------------
// OTIS (swapped network)

/// Label of the node with processor address `processor` in cluster `cluster`.
inline std::string otis_label(std::string_view cluster, std::string_view processor) {
  std::string s;
  s.reserve(cluster.size() + processor.size() + 1);
  s.append(cluster);
  s.push_back(':');
  s.append(processor);
  return s;
}

inline std::string otis_label(std::size_t cluster, std::size_t processor) {
  return otis_label(std::to_string(cluster), std::to_string(processor));
}

/// Splits "g:u" at the first ':'; nullopt when the label is not an OTIS label.
inline std::optional<std::pair<std::string, std::string>> split_otis_label(std::string_view label) {
  auto pos = label.find(':');
  if (pos == std::string_view::npos) return std::nullopt;
  return std::pair{std::string(label.substr(0, pos)), std::string(label.substr(pos + 1))};
}

/// Vertex id of <g,u> in otis(base) where g, u are base vertex ids.
inline VertexId otis_vertex(std::size_t base_order, VertexId cluster, VertexId processor) {
  return cluster * base_order + processor;
}

/// OTIS(base): n clusters, each a copy of the base, plus transpose edges
/// <g,u> - <u,g> for g != u. Vertex <g,u> gets id g*n + u.
inline Graph otis(const Graph& base) {
  const std::size_t n = base.vertex_count();
  if (n < 2) throw GraphError("otis needs a base with at least 2 vertices");
  Graph g;
  for (VertexId cluster = 0; cluster < n; ++cluster) {
    for (VertexId proc = 0; proc < n; ++proc) {
      g.add_vertex(otis_label(base.label(cluster), base.label(proc)));
    }
  }
  for (VertexId cluster = 0; cluster < n; ++cluster) {
    for (const auto& e : base.edges()) {
      g.add_edge(otis_vertex(n, cluster, e.u), otis_vertex(n, cluster, e.v));
    }
    for (VertexId proc = cluster + 1; proc < n; ++proc) {
      g.add_edge(otis_vertex(n, cluster, proc), otis_vertex(n, proc, cluster));
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// DOT export

inline void write_dot(std::ostream& out, const Graph& g, bool group_clusters = false) {
  auto quoted = [](const std::string& s) { return '"' + s + '"'; };
  out << "graph G {\n";
  if (group_clusters) {
    std::vector<std::string> order;
    std::unordered_map<std::string, std::vector<VertexId>> members;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto parts = split_otis_label(g.label(v));
      std::string key = parts ? parts->first : std::string();
      if (!members.count(key)) order.push_back(key);
      members[key].push_back(v);
    }
    for (const auto& key : order) {
      if (key.empty()) {
        for (VertexId v : members[key]) out << "  " << quoted(g.label(v)) << ";\n";
        continue;
      }
      out << "  subgraph " << quoted("cluster_" + key) << " {\n";
      out << "    label=" << quoted(key) << ";\n";
      for (VertexId v : members[key]) out << "    " << quoted(g.label(v)) << ";\n";
      out << "  }\n";
    }
  } else {
    for (VertexId v = 0; v < g.vertex_count(); ++v) out << "  " << quoted(g.label(v)) << ";\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << quoted(g.label(e.u)) << " -- " << quoted(g.label(e.v)) << ";\n";
  }
  out << "}\n";
}

inline std::string to_dot(const Graph& g, bool group_clusters = false) {
  std::ostringstream out;
  write_dot(out, g, group_clusters);
  return out.str();
}

}  // namespace otisham
