#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spl/error.hpp"

namespace spl {

/// Unordered edge {u, v} with 1-based endpoints, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

/// Strictly increasing list of 1-based vertex indices.
struct VertexSet {
  std::vector<int> members;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(int v) const { return std::binary_search(members.begin(), members.end(), v); }

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;
};

/// True when the members form a run of cyclically consecutive vertices of 1..n.
inline bool is_cyclically_consecutive(const VertexSet& s, int n) {
  const int k = static_cast<int>(s.size());
  if (k == 0 || k == n) return true;
  for (int start = 1; start <= n; ++start) {
    bool run = true;
    for (int off = 0; off < k && run; ++off) run = s.contains((start - 1 + off) % n + 1);
    if (run) return true;
  }
  return false;
}

/// Complement of the circulant C_n(1, ..., r): vertices 1..n on a cycle, and
/// i ~ j exactly when their cyclic distance is at least r + 1.
class CirculantGraph {
 public:
  static constexpr int max_vertices = 64;

  CirculantGraph(int n, int r) : n_(n), r_(r) {
    if (n < 2) throw parameter_error("G(n,r) needs n >= 2, got n=" + std::to_string(n));
    if (n > max_vertices)
      throw parameter_error("G(n,r) supports n <= " + std::to_string(max_vertices));
    if (r < 0 || r > n / 2 - 1)
      throw parameter_error("G(n,r) needs 0 <= r <= floor(n/2)-1, got n=" + std::to_string(n) +
                            " r=" + std::to_string(r));
    adjacency_.assign(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (distance_is_edge(i, j)) {
          edges_.push_back({i, j});
          adjacency_[i - 1] |= bit(j);
          adjacency_[j - 1] |= bit(i);
        }
      }
    }
  }

  int n() const noexcept { return n_; }
  int r() const noexcept { return r_; }

  /// Size of every cyclically consecutive minimal vertex cover.
  int cover_size() const noexcept { return n_ - (r_ + 1); }
  int degree() const noexcept { return n_ - 1 - 2 * r_; }

  const EdgeList& edges() const noexcept { return edges_; }

  bool is_edge(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw index_error("is_edge needs distinct vertices");
    return (adjacency_[i - 1] & bit(j)) != 0;
  }

  /// Neighbourhood of vertex v as a bitmask (bit k-1 stands for vertex k).
  std::uint64_t neighbours(int v) const {
    check_vertex(v);
    return adjacency_[v - 1];
  }

  std::uint64_t all_vertices() const noexcept {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  void check_vertex(int v) const {
    if (v < 1 || v > n_)
      throw index_error("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }

  static std::uint64_t bit(int v) noexcept { return std::uint64_t{1} << (v - 1); }

  friend bool operator==(const CirculantGraph& a, const CirculantGraph& b) {
    return a.n_ == b.n_ && a.r_ == b.r_;
  }

 private:
  bool distance_is_edge(int i, int j) const {
    const int d = std::abs(i - j);
    return std::min(d, n_ - d) >= r_ + 1;
  }

  int n_;
  int r_;
  EdgeList edges_;
  std::vector<std::uint64_t> adjacency_;
};

inline VertexSet vertex_set_from_mask(std::uint64_t mask) {
  VertexSet s;
  while (mask != 0) {
    s.members.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return s;
}

inline std::uint64_t mask_of(const VertexSet& s) {
  std::uint64_t m = 0;
  for (int v : s.members) m |= CirculantGraph::bit(v);
  return m;
}

namespace detail {

// Bron-Kerbosch with pivoting over the complement graph: maximal cliques of
// the complement are the maximal independent sets of g.
inline void bron_kerbosch(const std::vector<std::uint64_t>& non_adj, std::uint64_t chosen,
                          std::uint64_t candidates, std::uint64_t excluded,
                          std::vector<std::uint64_t>& out, std::size_t limit) {
  if (candidates == 0 && excluded == 0) {
    out.push_back(chosen);
    if (out.size() > limit) throw scale_limit_error("maximal independent sets", out.size(), limit);
    return;
  }
  const std::uint64_t both = candidates | excluded;
  int pivot = std::countr_zero(both);
  int best = -1;
  for (std::uint64_t m = both; m != 0; m &= m - 1) {
    const int u = std::countr_zero(m);
    const int c = std::popcount(candidates & non_adj[u]);
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (std::uint64_t m = candidates & ~non_adj[pivot]; m != 0; m &= m - 1) {
    const int v = std::countr_zero(m);
    const std::uint64_t vb = std::uint64_t{1} << v;
    bron_kerbosch(non_adj, chosen | vb, candidates & non_adj[v], excluded & non_adj[v], out, limit);
    candidates &= ~vb;
    excluded |= vb;
  }
}

}  // namespace detail

/// Default cap on the number of maximal independent sets. Exact and complete
/// below it; G(2k, k-1) is a perfect matching with 2^k sets, so large even n
/// near the bipartite end is where the cap bites.
inline constexpr std::size_t default_mis_limit = std::size_t{1} << 20;

/// Every maximal independent set of g, each sorted, the list sorted
/// lexicographically.
inline std::vector<VertexSet> maximal_independent_sets(const CirculantGraph& g,
                                                       std::size_t limit = default_mis_limit) {
  const int n = g.n();
  std::vector<std::uint64_t> non_adj(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v)
    non_adj[v - 1] = g.all_vertices() & ~g.neighbours(v) & ~CirculantGraph::bit(v);
  std::vector<std::uint64_t> masks;
  detail::bron_kerbosch(non_adj, 0, g.all_vertices(), 0, masks, limit);
  std::vector<VertexSet> sets;
  sets.reserve(masks.size());
  for (auto m : masks) sets.push_back(vertex_set_from_mask(m));
  std::sort(sets.begin(), sets.end());
  return sets;
}

inline bool is_independent(const CirculantGraph& g, const VertexSet& s) {
  const std::uint64_t m = mask_of(s);
  for (int v : s.members)
    if ((g.neighbours(v) & m) != 0) return false;
  return true;
}

inline bool is_vertex_cover(const CirculantGraph& g, const VertexSet& s) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return s.contains(e.u) || s.contains(e.v); });
}

inline int independence_number(const CirculantGraph& g) {
  std::size_t best = 0;
  for (const auto& s : maximal_independent_sets(g)) best = std::max(best, s.size());
  return static_cast<int>(best);
}

inline VertexSet complement(const CirculantGraph& g, const VertexSet& s) {
  return vertex_set_from_mask(g.all_vertices() & ~mask_of(s));
}

/// Minimal vertex covers, in the same order as their complementary maximal
/// independent sets.
inline std::vector<VertexSet> minimal_vertex_covers(const CirculantGraph& g) {
  std::vector<VertexSet> covers;
  for (const auto& s : maximal_independent_sets(g)) covers.push_back(complement(g, s));
  return covers;
}

/// The n covers {i, i+1, ..., i+n-r-2} (indices mod n), i = 1..n, in order of i.
inline std::vector<VertexSet> consecutive_covers(const CirculantGraph& g) {
  const int n = g.n();
  std::vector<VertexSet> covers;
  for (int start = 1; start <= n; ++start) {
    std::uint64_t m = 0;
    for (int off = 0; off < g.cover_size(); ++off) m |= CirculantGraph::bit((start - 1 + off) % n + 1);
    covers.push_back(vertex_set_from_mask(m));
  }
  return covers;
}

inline bool is_unmixed(const CirculantGraph& g) {
  const auto covers = minimal_vertex_covers(g);
  return std::all_of(covers.begin(), covers.end(),
                     [&](const VertexSet& c) { return c.size() == covers.front().size(); });
}

struct GapCheck {
  bool gap_free = true;
  /// Two edges with disjoint endpoints and no edge between them.
  std::optional<std::pair<Edge, Edge>> witness;
};

/// Looks for an induced 2K2; the witness is the first such pair in edge order.
inline GapCheck check_gap_free(const CirculantGraph& g) {
  const auto& e = g.edges();
  for (std::size_t a = 0; a < e.size(); ++a) {
    for (std::size_t b = a + 1; b < e.size(); ++b) {
      const Edge& f = e[a];
      const Edge& h = e[b];
      if (f.u == h.u || f.u == h.v || f.v == h.u || f.v == h.v) continue;
      if (!g.is_edge(f.u, h.u) && !g.is_edge(f.u, h.v) && !g.is_edge(f.v, h.u) &&
          !g.is_edge(f.v, h.v))
        return {false, std::make_pair(f, h)};
    }
  }
  return {};
}

inline bool is_gap_free(const CirculantGraph& g) { return check_gap_free(g).gap_free; }

/// Cyclic shift k -> j - i + k (mod n, representatives 1..n); element k-1 of
/// the result is the image of vertex k.
inline std::vector<int> shift_automorphism(const CirculantGraph& g, int i, int j) {
  g.check_vertex(i);
  g.check_vertex(j);
  const int n = g.n();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    int image = ((j - i + k) % n + n) % n;
    perm[k - 1] = image == 0 ? n : image;
  }
  return perm;
}

inline Edge apply_permutation(const std::vector<int>& perm, const Edge& e) {
  const int a = perm[e.u - 1];
  const int b = perm[e.v - 1];
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// True when perm is a bijection carrying the edge set onto itself.
inline bool preserves_edges(const CirculantGraph& g, const std::vector<int>& perm) {
  if (perm.size() != static_cast<std::size_t>(g.n())) return false;
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 1; k <= g.n(); ++k)
    if (sorted[k - 1] != k) return false;
  EdgeList image;
  for (const auto& e : g.edges()) image.push_back(apply_permutation(perm, e));
  std::sort(image.begin(), image.end());
  return image == g.edges();
}

/// 0/1 incidence rows of the minimal vertex covers, ordered by cover size and
/// then lexicographically by member list.
struct CoverMatrix {
  int columns = 0;
  std::vector<VertexSet> covers;
  std::vector<std::vector<int>> rows;

  std::size_t row_count() const noexcept { return rows.size(); }
};

inline CoverMatrix cover_matrix_of(int n, std::vector<VertexSet> covers) {
  std::sort(covers.begin(), covers.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members < b.members;
  });
  CoverMatrix m;
  m.columns = n;
  for (const auto& c : covers) {
    std::vector<int> row(static_cast<std::size_t>(n), 0);
    for (int v : c.members) row[v - 1] = 1;
    m.rows.push_back(std::move(row));
  }
  m.covers = std::move(covers);
  return m;
}

inline CoverMatrix cover_matrix(const CirculantGraph& g) {
  return cover_matrix_of(g.n(), minimal_vertex_covers(g));
}

/// True when every row is the cyclic right shift of the previous one.
inline bool is_circulant(const CoverMatrix& m) {
  if (m.rows.size() != static_cast<std::size_t>(m.columns)) return false;
  // Rows are sorted lexicographically, so compare as a set of shifts of row 0.
  std::vector<std::vector<int>> shifts;
  auto row = m.rows.front();
  for (int k = 0; k < m.columns; ++k) {
    shifts.push_back(row);
    std::rotate(row.rbegin(), row.rbegin() + 1, row.rend());
  }
  std::sort(shifts.begin(), shifts.end());
  auto rows = m.rows;
  std::sort(rows.begin(), rows.end());
  return shifts == rows;
}

}  // namespace spl
