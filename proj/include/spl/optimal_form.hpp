#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "spl/circulant_graph.hpp"
#include "spl/error.hpp"
#include "spl/monomial.hpp"

namespace spl {

/// x^a written as (ancillary variables) * prod_e e^{b_e} with sum b_e maximal.
struct OptimalForm {
  /// (vertex, leftover exponent), only vertices with a positive leftover.
  std::vector<std::pair<int, Exponent>> ancillaries;
  /// (edge, b_e), only edges used at least once, in input edge order.
  std::vector<std::pair<Edge, Exponent>> edge_multiplicities;
  std::uint64_t b_value = 0;
};

namespace detail {

/// Integer max flow on a small dense network (Edmonds-Karp).
class SmallFlow {
 public:
  explicit SmallFlow(std::size_t nodes) : cap_(nodes, std::vector<std::int64_t>(nodes, 0)) {}

  void add(std::size_t from, std::size_t to, std::int64_t c) { cap_[from][to] += c; }

  std::int64_t run(std::size_t s, std::size_t t) {
    const std::size_t n = cap_.size();
    std::int64_t total = 0;
    std::vector<std::size_t> parent(n);
    while (true) {
      std::fill(parent.begin(), parent.end(), n);
      parent[s] = s;
      std::queue<std::size_t> q;
      q.push(s);
      while (!q.empty() && parent[t] == n) {
        const std::size_t u = q.front();
        q.pop();
        for (std::size_t v = 0; v < n; ++v) {
          if (parent[v] == n && cap_[u][v] > 0) {
            parent[v] = u;
            q.push(v);
          }
        }
      }
      if (parent[t] == n) return total;
      std::int64_t push = std::numeric_limits<std::int64_t>::max();
      for (std::size_t v = t; v != s; v = parent[v]) push = std::min(push, cap_[parent[v]][v]);
      for (std::size_t v = t; v != s; v = parent[v]) {
        cap_[parent[v]][v] -= push;
        cap_[v][parent[v]] += push;
      }
      total += push;
    }
  }

 private:
  std::vector<std::vector<std::int64_t>> cap_;
};

/// Branch and bound for the integer b-matching max sum b_e subject to
/// sum_{e ∋ i} b_e <= a_i. The bound at each node is the fractional optimum,
/// which is half the max flow in the bipartite double cover.
class BMatching {
 public:
  BMatching(const Monomial& a, const EdgeList& edges) : edges_(edges) {
    residual_.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) residual_.push_back(a[i]);
    for (const auto& e : edges_) {
      if (e.u < 1 || e.v < 1 || e.u > static_cast<int>(a.size()) || e.v > static_cast<int>(a.size()) ||
          e.u == e.v)
        throw index_error("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          "} does not fit a monomial in " + std::to_string(a.size()) + " variables");
    }
    mult_.assign(edges_.size(), 0);
  }

  std::uint64_t maximum() {
    best_ = 0;
    search_max(0, 0);
    return best_;
  }

  /// Lexicographically smallest multiplicity vector reaching `target`.
  std::vector<Exponent> lex_smallest(std::uint64_t target) {
    std::fill(mult_.begin(), mult_.end(), 0);
    if (!search_lex(0, 0, target)) throw error("b-matching target not reachable");
    return mult_;
  }

  const std::vector<std::uint64_t>& residual() const noexcept { return residual_; }

 private:
  std::uint64_t fractional_bound(std::size_t from) const {
    const std::size_t n = residual_.size();
    SmallFlow flow(2 * n + 2);
    const std::size_t s = 2 * n;
    const std::size_t t = 2 * n + 1;
    std::vector<bool> touched(n, false);
    for (std::size_t k = from; k < edges_.size(); ++k) {
      const auto u = static_cast<std::size_t>(edges_[k].u - 1);
      const auto v = static_cast<std::size_t>(edges_[k].v - 1);
      if (residual_[u] == 0 || residual_[v] == 0) continue;
      const auto big = static_cast<std::int64_t>(residual_[u] + residual_[v]);
      flow.add(u, n + v, big);
      flow.add(v, n + u, big);
      touched[u] = touched[v] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!touched[i]) continue;
      flow.add(s, i, static_cast<std::int64_t>(residual_[i]));
      flow.add(n + i, t, static_cast<std::int64_t>(residual_[i]));
    }
    return static_cast<std::uint64_t>(flow.run(s, t)) / 2;
  }

  void search_max(std::size_t k, std::uint64_t current) {
    if (current > best_) best_ = current;
    if (k == edges_.size()) return;
    if (current + fractional_bound(k) <= best_) return;
    const auto u = static_cast<std::size_t>(edges_[k].u - 1);
    const auto v = static_cast<std::size_t>(edges_[k].v - 1);
    const std::uint64_t top = std::min(residual_[u], residual_[v]);
    for (std::uint64_t m = top + 1; m-- > 0;) {
      residual_[u] -= m;
      residual_[v] -= m;
      search_max(k + 1, current + m);
      residual_[u] += m;
      residual_[v] += m;
    }
  }

  bool search_lex(std::size_t k, std::uint64_t current, std::uint64_t target) {
    if (current >= target) return true;
    if (k == edges_.size()) return false;
    if (current + fractional_bound(k) < target) return false;
    const auto u = static_cast<std::size_t>(edges_[k].u - 1);
    const auto v = static_cast<std::size_t>(edges_[k].v - 1);
    const std::uint64_t top = std::min({residual_[u], residual_[v], target - current});
    for (std::uint64_t m = 0; m <= top; ++m) {
      residual_[u] -= m;
      residual_[v] -= m;
      mult_[k] = static_cast<Exponent>(m);
      if (search_lex(k + 1, current + m, target)) return true;
      residual_[u] += m;
      residual_[v] += m;
    }
    mult_[k] = 0;
    return false;
  }

  const EdgeList& edges_;
  std::vector<std::uint64_t> residual_;
  std::vector<Exponent> mult_;
  std::uint64_t best_ = 0;
};

}  // namespace detail

/// b(x^a): the largest number of edge factors in a factorization of x^a.
inline std::uint64_t b_value(const Monomial& a, const EdgeList& edges) {
  return detail::BMatching(a, edges).maximum();
}

/// An optimal form of x^a. Among all optimal forms this returns the one whose
/// multiplicity vector (in input edge order) is lexicographically smallest.
inline OptimalForm optimal_form(const Monomial& a, const EdgeList& edges) {
  detail::BMatching solver(a, edges);
  const std::uint64_t b = solver.maximum();
  const auto mult = solver.lex_smallest(b);
  OptimalForm form;
  form.b_value = b;
  for (std::size_t k = 0; k < edges.size(); ++k)
    if (mult[k] != 0) form.edge_multiplicities.emplace_back(edges[k], mult[k]);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (solver.residual()[i] != 0)
      form.ancillaries.emplace_back(static_cast<int>(i + 1), static_cast<Exponent>(solver.residual()[i]));
  return form;
}

/// x^a ∈ I(G)^t decided through b(x^a) >= t.
inline bool member_power_via_b(const Monomial& a, const CirculantGraph& g, int t) {
  if (t < 1) throw parameter_error("member_power_via_b needs t >= 1");
  if (a.size() != static_cast<std::size_t>(g.n()))
    throw parameter_error("monomial length does not match the graph");
  return b_value(a, g.edges()) >= static_cast<std::uint64_t>(t);
}

/// Consecutive-edge cycle C_n: {1,2}, {2,3}, ..., {n-1,n}, {1,n}.
inline EdgeList cycle_edges(int n) {
  EdgeList edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  if (n > 2) edges.push_back({1, n});
  return edges;
}

}  // namespace spl
