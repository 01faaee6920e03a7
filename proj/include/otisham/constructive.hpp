#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include "otisham/decide.hpp"
#include "otisham/graph.hpp"
#include "otisham/key_edge_tables.hpp"
#include "otisham/propagation.hpp"
#include "otisham/topology.hpp"

namespace otisham {

enum class ParamClass {
  OddOdd_3_n,       // BF(3, 2n+1), n > 1
  OddOdd_equal,     // BF(2m+1, 2m+1), m > 1
  OddOdd_general,   // BF(2m+1, 2n+1), m > 1, n > 3, n > m
  OddEven_3,        // BF(3, 2k)
  OddEven_general,  // BF(2m+1, 2k), m > 1
  SmallFigureCase,  // BF(3,3) and BF(5,7)
  EvenEven,
};

inline const char* to_string(ParamClass c) {
  switch (c) {
    case ParamClass::OddOdd_3_n: return "OddOdd_3_n";
    case ParamClass::OddOdd_equal: return "OddOdd_equal";
    case ParamClass::OddOdd_general: return "OddOdd_general";
    case ParamClass::OddEven_3: return "OddEven_3";
    case ParamClass::OddEven_general: return "OddEven_general";
    case ParamClass::SmallFigureCase: return "SmallFigureCase";
    case ParamClass::EvenEven: return "EvenEven";
  }
  return "?";
}

inline bool has_key_edge_table(ParamClass c) {
  return c != ParamClass::SmallFigureCase && c != ParamClass::EvenEven;
}

/// Class of a normalized bowtie pair (see BowtieParams::normalized).
inline ParamClass classify(std::size_t m, std::size_t n) {
  if (m < 3 || n < 3) throw GraphError("bowtie cycles need length >= 3");
  if (!BowtieParams{m, n}.is_normalized()) throw GraphError("classify expects a normalized pair");
  const bool m_odd = m % 2 == 1;
  const bool n_odd = n % 2 == 1;
  if (!m_odd && !n_odd) return ParamClass::EvenEven;
  if (m_odd && !n_odd) return m == 3 ? ParamClass::OddEven_3 : ParamClass::OddEven_general;
  if ((m == 3 && n == 3) || (m == 5 && n == 7)) return ParamClass::SmallFigureCase;
  if (m == 3) return ParamClass::OddOdd_3_n;
  if (m == n) return ParamClass::OddOdd_equal;
  return ParamClass::OddOdd_general;
}

struct KeyEdge {
  std::size_t cluster;
  std::size_t a;  // base labels of the intracluster edge (a, b)
  std::size_t b;
  std::string provenance;
};

struct KeyEdgeSet {
  BowtieParams params;
  ParamClass param_class;
  std::vector<KeyEdge> edges;
};

namespace detail {

// Collects table deletions. Labels are plain integers; only the per-cluster
// neighbourhood rule wraps around the cycle that contains the cluster label.
class KeyEdgeTable {
 public:
  KeyEdgeTable(std::size_t m, std::size_t n) : c_(m), i_(m + n - 1), base_(gen_bowtie(m, n)) {}

  std::size_t c() const { return c_; }
  std::size_t i() const { return i_; }

  void del(std::size_t cluster, long a, long b, const std::string& tag) {
    if (a < 1 || b < 1 || static_cast<std::size_t>(a) > i_ || static_cast<std::size_t>(b) > i_ ||
        !base_.has_edge(static_cast<VertexId>(a - 1), static_cast<VertexId>(b - 1))) {
      throw GraphError("key edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") in cluster " + std::to_string(cluster) + " is not a base edge [" + tag +
                       "]");
    }
    if (cluster < 1 || cluster > i_) {
      throw GraphError("key edge cluster " + std::to_string(cluster) + " out of range [" + tag + "]");
    }
    auto lo = static_cast<std::size_t>(std::min(a, b));
    auto hi = static_cast<std::size_t>(std::max(a, b));
    if (!seen_.emplace(cluster, lo, hi).second) return;
    edges_.push_back({cluster, static_cast<std::size_t>(a), static_cast<std::size_t>(b), tag});
  }

  /// Pairs (a, a+1) for a = first, first+2, ..., last.
  void pairs(std::size_t cluster, long first, long last, const std::string& tag) {
    for (long a = first; a <= last; a += 2) del(cluster, a, a + 1, tag);
  }

  /// Label at offset `k` from `x` inside the cycle holding x (left cycle for x <= c).
  long step(std::size_t x, long k) const {
    const long c = static_cast<long>(c_);
    if (x <= c_) {
      long pos = static_cast<long>(x) % c;  // c sits at position 0
      long r = ((pos + k) % c + c) % c;
      return r == 0 ? c : r;
    }
    const long len = static_cast<long>(i_ - c_ + 1);
    long pos = static_cast<long>(x) - c;
    long r = ((pos + k) % len + len) % len;
    return c + r;
  }

  /// Deletes (x-2, x-1) and (x+1, x+2) inside cluster x.
  void around(std::size_t x, const std::string& tag) {
    del(x, step(x, -2), step(x, -1), tag);
    del(x, step(x, 1), step(x, 2), tag);
  }

  std::vector<KeyEdge> take() { return std::move(edges_); }

 private:
  std::size_t c_;
  std::size_t i_;
  Graph base_;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen_;
  std::vector<KeyEdge> edges_;
};

inline std::vector<KeyEdge> table_odd_odd_equal(std::size_t m, std::size_t n) {
  KeyEdgeTable t(m, n);
  const long c = static_cast<long>(t.c());
  const long i = static_cast<long>(t.i());
  const auto C = [](long v) { return static_cast<std::size_t>(v); };

  t.pairs(1, 2, c - 1, "cluster 1: S1");
  t.pairs(1, c + 2, i - 2, "cluster 1: S2");
  t.del(1, c, i, "cluster 1");
  t.del(1, c, c - 1, "cluster 1");
  t.del(1, c, c + 1, "cluster 1");

  t.pairs(C(c + 1), 2, c - 1, "cluster c+1: S1");
  t.pairs(C(c + 1), c + 2, i - 2, "cluster c+1: S2");
  t.del(C(c + 1), c, i, "cluster c+1");
  t.del(C(c + 1), c, c - 1, "cluster c+1");
  t.del(C(c + 1), c, 1, "cluster c+1");

  t.pairs(C(c - 1), 2, c - 3, "cluster c-1: S3");
  t.del(C(c - 1), c, c + 1, "cluster c-1");
  t.del(C(c - 1), c, 1, "cluster c-1");
  if (c + 4 != i) t.del(C(c - 1), c + 3, c + 4, "cluster c-1: iff c+4 != i");

  t.pairs(C(c - 2), 1, c - 2, "cluster c-2: S4");
  t.del(C(c - 2), c, c + 1, "cluster c-2");
  if (c + 4 != i) t.del(C(c - 2), c + 3, c + 4, "cluster c-2: iff c+4 != i");

  t.pairs(C(i), c + 2, i - 2, "cluster i: S5");
  t.del(C(i), c, c + 1, "cluster i");
  t.del(C(i), c, 1, "cluster i");
  if (c - 1 != 4) t.del(C(i), 3, 4, "cluster i: iff c-1 != 4");

  t.pairs(C(i - 1), c + 1, i - 1, "cluster i-1: S6");
  t.del(C(i - 1), c, 1, "cluster i-1");
  if (c - 1 != 4) t.del(C(i - 1), 3, 4, "cluster i-1: iff c-1 != 4");

  for (long x = 2; x <= c - 1; x += 2) {
    t.del(C(x), c, 1, "even clusters");
    t.del(C(x), c, c + 1, "even clusters");
  }
  for (long x = c + 2; x <= i; x += 2) {
    t.del(C(x), c, 1, "clusters c+2, c+4, .., i");
    t.del(C(x), c, c + 1, "clusters c+2, c+4, .., i");
  }
  for (long x = 1; x <= c - 2; x += 2) {
    t.del(C(x), c, c - 1, "odd clusters");
    t.del(C(x), c, c + 1, "odd clusters");
  }
  for (long x = c + 1; x <= i - 1; x += 2) {
    t.del(C(x), c, 1, "clusters c+1, c+3, .., i-1");
    t.del(C(x), c, i, "clusters c+1, c+3, .., i-1");
  }
  for (long x = 1; x <= i; ++x) t.around(C(x), "all clusters: (x-2,x-1), (x+1,x+2)");
  return t.take();
}

inline std::vector<KeyEdge> table_odd_odd_3_n(std::size_t m, std::size_t n) {
  KeyEdgeTable t(m, n);
  const long c = static_cast<long>(t.c());
  const long i = static_cast<long>(t.i());
  const auto C = [](long v) { return static_cast<std::size_t>(v); };

  t.pairs(1, c + 2, i - 2, "cluster 1: S1");
  t.del(1, c, i, "cluster 1");
  t.del(1, c, c - 1, "cluster 1");
  t.del(1, c, c + 1, "cluster 1");

  t.del(2, c, 1, "cluster 2");
  t.del(2, c, c + 1, "cluster 2");
  if (7 > i) {
    t.del(2, 6, 7, "cluster 2: S2 iff 7 > i");
    t.del(2, i - 3, i - 2, "cluster 2: S2 iff 7 > i");
  }

  t.del(3, c, 1, "cluster 3");
  t.del(3, c, c + 1, "cluster 3");

  t.del(C(c + 1), c, 1, "cluster c+1");
  t.del(C(c + 1), c, c - 1, "cluster c+1");
  t.del(C(c + 1), c, i, "cluster c+1");
  t.del(C(c + 1), c + 2, c + 3, "cluster c+1");
  t.del(C(c + 1), i - 2, i - 1, "cluster c+1");

  t.del(C(i - 1), c, 1, "cluster i-1");
  t.del(C(i - 1), c, i, "cluster i-1");
  if (5 < i - 4) {
    t.del(C(i - 1), 4, 5, "cluster i-1: S(i-1) iff 5 < i-4");
    t.del(C(i - 1), 6, 7, "cluster i-1: S(i-1) iff 5 < i-4");
    t.del(C(i - 1), i - 3, i - 2, "cluster i-1: S(i-1) iff 5 < i-4");
  }
  for (long x = 1; x <= i; ++x) t.around(C(x), "all clusters: (x-2,x-1), (x+1,x+2)");
  return t.take();
}

inline std::vector<KeyEdge> table_odd_odd_general(std::size_t m, std::size_t n) {
  KeyEdgeTable t(m, n);
  const long c = static_cast<long>(t.c());
  const long i = static_cast<long>(t.i());
  const auto C = [](long v) { return static_cast<std::size_t>(v); };
  const bool wide = (i - 5) >= (c + 5);

  t.del(1, c, c - 1, "cluster 1");
  t.del(1, c, c + 1, "cluster 1");
  t.del(1, c, i, "cluster 1");
  t.pairs(1, 2, c - 1, "cluster 1: S1l");
  t.pairs(1, c + 2, i - 2, "cluster 1: S1r");

  t.del(2, c, 1, "cluster 2");
  t.del(2, c, i, "cluster 2");
  t.del(2, c - 2, c - 1, "cluster 2");
  if (wide) t.pairs(2, c + 5, i - 5, "cluster 2: S2 where i-5 >= c+5");

  t.del(3, i - 1, i - 2, "cluster 3");
  t.del(3, c, c - 1, "cluster 3");
  t.del(3, c, c + 1, "cluster 3");
  if (wide) t.pairs(3, c + 5, i - 5, "cluster 3: S3 where i-5 >= c+5");

  for (long x = 4; x <= c - 3; ++x) {
    t.del(C(x), c, 1, "clusters 4..c-3");
    t.del(C(x), c, c + 1, "clusters 4..c-3");
    t.del(C(x), i - 2, i - 1, "clusters 4..c-3");
  }

  t.del(C(c - 2), c, c - 1, "cluster c-2");
  t.del(C(c - 2), c, c + 1, "cluster c-2");
  t.del(C(c - 2), i - 2, i - 1, "cluster c-2");

  t.del(C(c - 1), c, 1, "cluster c-1");
  t.del(C(c - 1), c, i, "cluster c-1");
  t.del(C(c - 1), 2, 3, "cluster c-1");
  t.pairs(C(c - 1), c + 4, i - 2, "cluster c-1: S6");

  t.del(C(c), c, 1, "cluster c");
  t.del(C(c), c, c + 1, "cluster c");

  t.del(C(c + 1), c, 1, "cluster c+1");
  t.del(C(c + 1), c, c - 1, "cluster c+1");
  t.del(C(c + 1), c, i, "cluster c+1");
  t.del(C(c + 1), c + 2, c + 3, "cluster c+1");
  t.del(C(c + 1), i - 2, i - 1, "cluster c+1");

  t.del(C(c + 2), c, c - 1, "cluster c+2");
  t.del(C(c + 2), c, c + 1, "cluster c+2");
  t.del(C(c + 2), i - 1, i, "cluster c+2");

  t.del(C(c + 3), c, 1, "cluster c+3");
  t.del(C(c + 3), c, c + 1, "cluster c+3");
  t.del(C(c + 3), i - 1, i, "cluster c+3");

  t.del(C(c + 4), c, c - 1, "cluster c+4");
  t.del(C(c + 4), c, 1, "cluster c+4");
  t.del(C(c + 4), i - 1, i, "cluster c+4");

  for (long x = c + 5; x <= i - 4; ++x) {
    if (wide) t.del(C(x), 2, 3, "clusters c+5..i-4: (2,3) where i-5 >= c+5");
    t.del(C(x), c, 1, "clusters c+5..i-4");
    t.del(C(x), c, c - 1, "clusters c+5..i-4");
    t.del(C(x), i, i - 1, "clusters c+5..i-4");
  }

  t.del(C(i - 3), c, 1, "cluster i-3");
  t.del(C(i - 3), c, c - 1, "cluster i-3");
  t.del(C(i - 3), i - 1, i, "cluster i-3");

  t.pairs(C(i - 2), 3, c - 2, "cluster i-2: S(i-2)");
  t.del(C(i - 2), c, 1, "cluster i-2");
  t.del(C(i - 2), c, c + 1, "cluster i-2");
  t.del(C(i - 2), i, i - 1, "cluster i-2");

  t.pairs(C(i - 1), 3, c - 2, "cluster i-1: S(i-1)l");
  t.del(C(i - 1), c, 1, "cluster i-1");
  t.del(C(i - 1), c, i, "cluster i-1");
  t.pairs(C(i - 1), c + 1, i - 3, "cluster i-1: S(i-1)r");

  t.del(C(i), 1, 2, "cluster i");
  t.del(C(i), c, c - 1, "cluster i");
  t.del(C(i), c, c + 1, "cluster i");
  t.pairs(C(i), c + 2, i - 2, "cluster i: Si");

  for (long x = 1; x <= c - 1; ++x) t.around(C(x), "clusters 1..c-1: (x-2,x-1), (x+1,x+2)");
  return t.take();
}

inline std::vector<KeyEdge> table_odd_even_3(std::size_t m, std::size_t n) {
  KeyEdgeTable t(m, n);
  const long i = static_cast<long>(t.i());
  const auto C = [](long v) { return static_cast<std::size_t>(v); };

  t.del(1, 3, 2, "cluster 1");
  t.del(1, 3, 4, "cluster 1");
  t.del(1, 3, i, "cluster 1");

  t.del(2, 3, 1, "cluster 2");
  t.del(2, 3, 4, "cluster 2");
  t.pairs(2, 5, i - 1, "cluster 2: S2");

  t.del(3, 3, 1, "cluster 3");
  t.del(3, 3, 4, "cluster 3");

  t.del(4, 3, 1, "cluster 4");
  t.del(4, 3, 2, "cluster 4");
  t.del(4, 3, i, "cluster 4");

  for (long x = 5; x <= i - 1; ++x) {
    t.del(C(x), 3, 2, "clusters 5..i-1");
    t.del(C(x), 3, i, "clusters 5..i-1");
  }

  t.del(C(i), 3, 1, "cluster i");
  t.del(C(i), 3, 2, "cluster i");
  t.pairs(C(i), 4, i - 2, "cluster i: Si");
  return t.take();
}

inline std::vector<KeyEdge> table_odd_even_general(std::size_t m, std::size_t n) {
  KeyEdgeTable t(m, n);
  const long c = static_cast<long>(t.c());
  const long i = static_cast<long>(t.i());
  const auto C = [](long v) { return static_cast<std::size_t>(v); };

  t.del(1, c, c - 1, "cluster 1");
  t.del(1, c, c + 1, "cluster 1");
  t.del(1, c, i, "cluster 1");
  t.pairs(1, 2, c - 1, "cluster 1: S1");

  t.del(2, c, 1, "cluster 2");
  t.del(2, c, c + 1, "cluster 2");
  t.del(2, c - 2, c - 1, "cluster 2");
  if (i >= c + 3) t.pairs(2, c + 2, i - 3, "cluster 2: S2 where i >= c+3");

  t.del(3, c, c - 1, "cluster 3");
  t.del(3, c, c + 1, "cluster 3");
  if (i >= c + 3) t.pairs(3, c + 2, i - 3, "cluster 3: S3 where i >= c+3");
  if (4 < c - 1) t.del(3, i - 1, i, "cluster 3: (i-1,i) if 4 < c-1");

  if (4 < c - 1) {
    for (long x = 3; x <= c - 3; ++x) t.del(C(x), i - 1, i, "clusters 3..c-3: (i-1,i) if 4 < c-1");
  }
  if (4 < c - 3) {
    for (long x = 4; x <= c - 3; ++x) {
      t.del(C(x), c, 1, "clusters 4..c-3 if 4 < c-3");
      t.del(C(x), c, c + 1, "clusters 4..c-3 if 4 < c-3");
    }
  }

  t.del(C(c - 2), c, c - 1, "cluster c-2");
  t.del(C(c - 2), c, c + 1, "cluster c-2");

  t.del(C(c - 1), c, 1, "cluster c-1");
  t.del(C(c - 1), c, i, "cluster c-1");
  t.del(C(c - 1), 2, 3, "cluster c-1");
  t.pairs(C(c - 1), c + 1, i - 2, "cluster c-1: S(c-1)");

  t.del(C(c), c, 1, "cluster c");
  t.del(C(c), c, c + 1, "cluster c");

  t.del(C(c + 1), c, 1, "cluster c+1");
  t.del(C(c + 1), c, c - 1, "cluster c+1");
  t.del(C(c + 1), c, i, "cluster c+1");
  t.pairs(C(c + 1), 2, c - 3, "cluster c+1: S(c+1)");

  for (long x = c + 2; x <= i - 2; ++x) {
    t.del(C(x), c, c - 1, "clusters c+2..i-2");
    t.del(C(x), c, i, "clusters c+2..i-2");
    if (c + 3 < i) t.del(C(x), 2, 3, "clusters c+2..i-2: (2,3) if c+3 < i");
  }

  t.del(C(i - 1), c, c - 1, "cluster i-1");
  t.del(C(i - 1), c, i, "cluster i-1");
  if (4 < c - 1) t.pairs(C(i - 1), 3, c - 4, "cluster i-1: S(i-1) if 4 < c-1");

  t.del(C(i), c, 1, "cluster i");
  t.del(C(i), c, c - 1, "cluster i");
  t.pairs(C(i), 3, c - 4, "cluster i: Sil");
  t.pairs(C(i), c + 1, i - 2, "cluster i: Sir");

  for (long x = 1; x <= c - 1; ++x) t.around(C(x), "clusters 1..c-1: (x-2,x-1), (x+1,x+2)");
  return t.take();
}

}  // namespace detail

/// The key non-Hamiltonian intracluster edges for a supported class.
inline KeyEdgeSet key_edges(std::size_t m, std::size_t n, ParamClass cls) {
  KeyEdgeSet set{{m, n}, cls, {}};
  switch (cls) {
    case ParamClass::OddOdd_3_n: set.edges = detail::table_odd_odd_3_n(m, n); break;
    case ParamClass::OddOdd_equal: set.edges = detail::table_odd_odd_equal(m, n); break;
    case ParamClass::OddOdd_general: set.edges = detail::table_odd_odd_general(m, n); break;
    case ParamClass::OddEven_3: set.edges = detail::table_odd_even_3(m, n); break;
    case ParamClass::OddEven_general: set.edges = detail::table_odd_even_general(m, n); break;
    default:
      throw GraphError(std::string("no key-edge table for class ") + to_string(cls));
  }
  return set;
}

inline KeyEdgeSet key_edges(std::size_t m, std::size_t n) { return key_edges(m, n, classify(m, n)); }

// ---------------------------------------------------------------------------
// Derived key-edge tables
//
// Each family fixes the cluster path covers of a whole residue class of
// sizes. A cluster label is reduced to a token: exact near the ends of its
// cycle, or its residue mod 6 in the middle of a long cycle. An intracluster
// edge in cluster x is then named by the tokens of x, a and b, or by x's
// token and the offset a - x when x and a sit close together in the same
// middle stretch. The table lists the names of deleted edges.

namespace detail {

inline constexpr std::size_t kEdgeWindow = 3;
inline constexpr std::size_t kNearWindow = 4;
inline constexpr std::size_t kResiduePeriod = 6;

inline bool is_small_odd(std::size_t v) { return v == 3 || v == 5 || v == 7; }
inline bool is_small_even(std::size_t v) { return v == 4 || v == 6 || v == 8; }

class FamilyLayout {
 public:
  FamilyLayout(std::size_t m, std::size_t n)
      : c_(m), i_(m + n - 1), odd_odd_(n % 2 == 1) {
    exact_left_ = is_small_odd(m);
    exact_right_ = odd_odd_ ? is_small_odd(n) : is_small_even(n);
    auto spec = [](std::size_t v, bool exact) {
      return exact ? std::to_string(v) : "m" + std::to_string(v % kResiduePeriod);
    };
    family_ = std::string(odd_odd_ ? "oo" : "oe") + "_" + spec(m, exact_left_) + "_" +
              spec(n, exact_right_);
  }

  const std::string& family() const { return family_; }

  std::string token(std::size_t l) const {
    if (l == c_) return "c";
    if (l < c_) {
      if (exact_left_ || l <= kEdgeWindow) return "L" + std::to_string(l);
      if (c_ - l <= kEdgeWindow) return "L-" + std::to_string(c_ - l);
      return "Lm" + std::to_string((l - kEdgeWindow - 1) % kResiduePeriod);
    }
    const std::size_t k = l - c_;
    if (exact_right_ || k <= kEdgeWindow) return "R" + std::to_string(k);
    if (i_ + 1 - l <= kEdgeWindow) return "R-" + std::to_string(i_ + 1 - l);
    return "Rm" + std::to_string((k - kEdgeWindow - 1) % kResiduePeriod);
  }

  // Name of base edge (a, b), in base edge order, inside cluster x.
  std::string edge_key(std::size_t x, std::size_t a, std::size_t b) const {
    const std::string tx = token(x);
    const std::string ta = token(a);
    const long offset = static_cast<long>(a) - static_cast<long>(x);
    if (is_middle(tx) && is_middle(ta) && tx[0] == ta[0] &&
        static_cast<std::size_t>(offset < 0 ? -offset : offset) <= kNearWindow) {
      return "n:" + tx + ":" + std::to_string(offset);
    }
    return "e:" + tx + ":" + ta + ":" + token(b);
  }

 private:
  static bool is_middle(const std::string& t) { return t.size() > 1 && t[1] == 'm'; }

  std::size_t c_;
  std::size_t i_;
  bool odd_odd_;
  bool exact_left_ = false;
  bool exact_right_ = false;
  std::string family_;
};

inline const std::unordered_map<std::string_view, std::unordered_set<std::string_view>>& derived_tables() {
  static const auto tables = [] {
    std::unordered_map<std::string_view, std::unordered_set<std::string_view>> t;
    for (const auto& row : tables::kDerivedKeyEdges) t[row.family].insert(row.key);
    return t;
  }();
  return tables;
}

}  // namespace detail

/// Family name of the derived table covering a normalized pair, if any.
inline std::optional<std::string> derived_family(std::size_t m, std::size_t n) {
  if (!has_key_edge_table(classify(m, n))) return std::nullopt;
  detail::FamilyLayout layout(m, n);
  if (!detail::derived_tables().count(layout.family())) return std::nullopt;
  return layout.family();
}

/// Key edges from the derived tables; provenance is "<family> <edge name>".
inline KeyEdgeSet derived_key_edges(std::size_t m, std::size_t n) {
  const ParamClass cls = classify(m, n);
  KeyEdgeSet set{{m, n}, cls, {}};
  if (!has_key_edge_table(cls)) {
    throw GraphError(std::string("no key-edge table for class ") + to_string(cls));
  }
  detail::FamilyLayout layout(m, n);
  auto found = detail::derived_tables().find(layout.family());
  if (found == detail::derived_tables().end()) {
    throw GraphError("no derived key-edge family " + layout.family());
  }
  const Graph base = gen_bowtie(m, n);
  const std::size_t last = m + n - 1;
  for (std::size_t x = 1; x <= last; ++x) {
    for (const auto& e : base.edges()) {
      const std::size_t a = e.u + 1;
      const std::size_t b = e.v + 1;
      auto key = layout.edge_key(x, a, b);
      if (found->second.count(key)) {
        set.edges.push_back({x, a, b, layout.family() + " " + key});
      }
    }
  }
  return set;
}

// ---------------------------------------------------------------------------
// Builder

enum class KeyTableSource { Derived, Transcribed };

struct BuildOptions {
  KeyTableSource tables = KeyTableSource::Derived;
  DecideOptions fallback;  // used for the small figure cases
};

enum class FailureKind { UnsupportedClass, Contradiction, Incomplete, Unverified, BadTable };

inline const char* to_string(FailureKind k) {
  switch (k) {
    case FailureKind::UnsupportedClass: return "UnsupportedClass";
    case FailureKind::Contradiction: return "Contradiction";
    case FailureKind::Incomplete: return "Incomplete";
    case FailureKind::Unverified: return "Unverified";
    case FailureKind::BadTable: return "BadTable";
  }
  return "?";
}

struct FailureReport {
  FailureKind kind = FailureKind::UnsupportedClass;
  std::string message;
  std::optional<Contradiction> contradiction;
  std::optional<std::string> element;  // first contradicting vertex or undecided edge
  std::size_t undecided = 0;
  std::size_t forced = 0;
};

struct BuildResult {
  BowtieParams params;  // normalized
  ParamClass param_class = ParamClass::EvenEven;
  std::optional<HamCycle> cycle;
  std::optional<FailureReport> failure;
  std::size_t key_edge_count = 0;
  std::uint64_t propagation_steps = 0;
  bool via_search = false;

  bool ok() const { return cycle.has_value(); }
};

namespace detail {

inline std::string edge_text(const Graph& g, EdgeId e) {
  return "(" + g.label(g.edge(e).u) + ", " + g.label(g.edge(e).v) + ")";
}

inline EdgeId otis_base_edge(const Graph& otis_graph, std::size_t order, std::size_t cluster,
                             std::size_t a, std::size_t b) {
  auto e = otis_graph.find_edge(otis_vertex(order, cluster - 1, a - 1), otis_vertex(order, cluster - 1, b - 1));
  if (!e) throw GraphError("key edge missing from the OTIS graph");
  return *e;
}

}  // namespace detail

/// Hamiltonian cycle of OTIS(BF(m, n)) by key-edge deletion and propagation.
/// The pair is normalized first. Every returned cycle has been verified.
inline BuildResult build_ham_cycle(std::size_t m, std::size_t n, const BuildOptions& options = {}) {
  if (m < 3 || n < 3) throw GraphError("bowtie cycles need length >= 3");
  BuildResult out;
  out.params = BowtieParams::normalized(m, n);
  out.param_class = classify(out.params.m, out.params.n);
  const Graph g = otis(gen_bowtie(out.params));

  if (out.param_class == ParamClass::EvenEven) {
    out.failure = FailureReport{FailureKind::UnsupportedClass,
                                "even-even bowtie OTIS graphs have no construction", {}, {}, 0, 0};
    return out;
  }

  if (out.param_class == ParamClass::SmallFigureCase) {
    out.via_search = true;
    auto verdict = decide(g, {}, options.fallback);
    out.propagation_steps = verdict.stats.propagation_steps;
    if (verdict.kind == VerdictKind::Hamiltonian && verdict.cycle &&
        is_hamiltonian_cycle(g, verdict.cycle->order)) {
      out.cycle = verdict.cycle;
    } else {
      out.failure = FailureReport{FailureKind::Unverified,
                                  std::string("search returned ") + to_string(verdict.kind), {}, {}, 0, 0};
    }
    return out;
  }

  KeyEdgeSet keys;
  try {
    keys = options.tables == KeyTableSource::Derived ? derived_key_edges(out.params.m, out.params.n)
                                                     : key_edges(out.params.m, out.params.n, out.param_class);
  } catch (const GraphError& err) {
    out.failure = FailureReport{FailureKind::BadTable, err.what(), {}, {}, 0, 0};
    return out;
  }
  out.key_edge_count = keys.edges.size();

  const std::size_t order = out.params.last();
  EdgeSeed seed;
  seed.deleted.reserve(keys.edges.size());
  for (const auto& k : keys.edges) seed.deleted.push_back(detail::otis_base_edge(g, order, k.cluster, k.a, k.b));

  Propagator p;
  auto result = p.run(EdgeAssignment(g), seed);
  out.propagation_steps = p.stats().steps;
  if (auto* bad = std::get_if<Contradiction>(&result)) {
    out.failure = FailureReport{FailureKind::Contradiction,
                                std::string(to_string(bad->kind)) + " at " + g.label(bad->vertex),
                                *bad, g.label(bad->vertex), 0, 0};
    return out;
  }
  const auto& fixed = std::get<EdgeAssignment>(result);
  if (!fixed.complete()) {
    FailureReport report{FailureKind::Incomplete, "propagation stopped with undecided edges", {}, {},
                         fixed.undecided_edges(), fixed.forced_edges().size()};
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (fixed.state(e) == EdgeState::Undecided) {
        report.element = detail::edge_text(g, e);
        break;
      }
    }
    out.failure = std::move(report);
    return out;
  }
  auto cycle = fixed.forced_cycle(0);
  if (cycle.empty() || !is_hamiltonian_cycle(g, cycle)) {
    out.failure = FailureReport{FailureKind::Unverified, "forced edges are not a Hamiltonian cycle", {}, {},
                                0, fixed.forced_edges().size()};
    return out;
  }
  out.cycle = to_ham_cycle(g, cycle);
  return out;
}

/// Propagation steps spent by the table-driven build of OTIS(BF(m, n)).
inline std::uint64_t construction_cost(std::size_t m, std::size_t n) {
  auto params = BowtieParams::normalized(m, n);
  auto cls = classify(params.m, params.n);
  if (!has_key_edge_table(cls)) {
    throw GraphError(std::string("construction cost undefined for class ") + to_string(cls));
  }
  auto result = build_ham_cycle(m, n);
  if (!result.ok()) throw GraphError("construction failed: " + result.failure->message);
  return result.propagation_steps;
}

}  // namespace otisham
