#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "spl/config.hpp"
#include "spl/detail/exact_rank.hpp"
#include "spl/error.hpp"
#include "spl/ideal_powers.hpp"
#include "spl/monomial.hpp"
#include "spl/monomial_ideal.hpp"

namespace spl {

/// lcms of all nonempty subsets of the minimal generators, plus the bottom
/// element 1, ordered canonically (so the bottom comes first).
struct LcmLattice {
  std::vector<Monomial> elements;

  bool leq(const Monomial& a, const Monomial& b) const { return a.divides(b); }
  std::size_t size() const noexcept { return elements.size(); }
};

inline LcmLattice lcm_lattice(const MonomialIdeal& I, const BettiBudget& budget = {}) {
  if (I.size() > budget.max_generators)
    throw scale_limit_error("betti generators", I.size(), budget.max_generators);
  std::unordered_set<Monomial, MonomialHash> seen(I.generators().begin(), I.generators().end());
  std::vector<Monomial> frontier(I.generators().begin(), I.generators().end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& e : frontier) {
      for (const auto& g : I.generators()) {
        Monomial m = lcm(e, g);
        if (seen.insert(m).second) {
          if (seen.size() > budget.max_lattice) throw scale_limit_error("lcm lattice", seen.size(), budget.max_lattice);
          next.push_back(std::move(m));
        }
      }
    }
    frontier = std::move(next);
  }
  seen.emplace(I.nvars());
  LcmLattice L;
  L.elements.assign(seen.begin(), seen.end());
  std::sort(L.elements.begin(), L.elements.end(), CanonicalLess{});
  return L;
}

struct BettiEntry {
  int i = 0;
  Monomial multidegree;
  std::uint64_t beta = 0;
};

/// Nonzero multigraded Betti numbers β_{i,a} of the ideal (β_0 counts minimal
/// generators), sorted by i and then canonically by multidegree.
struct BettiTable {
  std::vector<BettiEntry> entries;
  long long regularity = 0;

  std::uint64_t beta(int i, const Monomial& a) const {
    for (const auto& e : entries)
      if (e.i == i && e.multidegree == a) return e.beta;
    return 0;
  }

  /// Graded Betti number β_{i,j}: sum over multidegrees of total degree j.
  std::uint64_t graded(int i, std::uint64_t j) const {
    std::uint64_t s = 0;
    for (const auto& e : entries)
      if (e.i == i && e.multidegree.degree() == j) s += e.beta;
    return s;
  }

  int projective_dimension() const {
    int p = 0;
    for (const auto& e : entries) p = std::max(p, e.i);
    return p;
  }

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    if (a.regularity != b.regularity || a.entries.size() != b.entries.size()) return false;
    for (std::size_t k = 0; k < a.entries.size(); ++k)
      if (a.entries[k].i != b.entries[k].i || a.entries[k].beta != b.entries[k].beta ||
          !(a.entries[k].multidegree == b.entries[k].multidegree))
        return false;
    return true;
  }
};

namespace detail {

inline void finish_table(BettiTable& table) {
  std::sort(table.entries.begin(), table.entries.end(), [](const BettiEntry& a, const BettiEntry& b) {
    if (a.i != b.i) return a.i < b.i;
    return CanonicalLess{}(a.multidegree, b.multidegree);
  });
  table.regularity = 0;
  bool first = true;
  for (const auto& e : table.entries) {
    const long long v = static_cast<long long>(e.multidegree.degree()) - e.i;
    if (first || v > table.regularity) table.regularity = v;
    first = false;
  }
}

/// Homology ranks of a chain complex given by its cells grouped by size
/// (faces[k] holds the size-k cells as bitmasks) and a boundary rule. The
/// result at index k is |faces[k]| - rank ∂_k - rank ∂_{k+1}.
template <class BoundaryOf>
std::vector<std::uint64_t> homology_by_size(const std::vector<std::vector<std::uint64_t>>& faces,
                                            BoundaryOf&& boundary_faces) {
  const std::size_t top = faces.size();
  std::vector<std::size_t> rank(top + 1, 0);  // rank[k] = rank of ∂_k : size k -> size k-1
  for (std::size_t k = 1; k < top; ++k) {
    if (faces[k].empty() || faces[k - 1].empty()) continue;
    std::map<std::uint64_t, std::size_t> index;
    for (std::size_t c = 0; c < faces[k - 1].size(); ++c) index[faces[k - 1][c]] = c;
    std::vector<std::vector<int>> matrix;
    for (auto f : faces[k]) {
      std::vector<int> row(faces[k - 1].size(), 0);
      int sign = 1;
      for (std::uint64_t m = f; m != 0; m &= m - 1) {
        const std::uint64_t face = f & ~(m & -m);
        if (boundary_faces(face)) {
          auto it = index.find(face);
          if (it != index.end()) row[it->second] = sign;
        }
        sign = -sign;
      }
      matrix.push_back(std::move(row));
    }
    rank[k] = exact_rank(matrix);
  }
  std::vector<std::uint64_t> h(top, 0);
  for (std::size_t k = 0; k < top; ++k)
    h[k] = faces[k].size() - rank[k] - (k + 1 < top ? rank[k + 1] : 0);
  return h;
}

}  // namespace detail

/// β_{i,b}(I) = dim H̃_{i-1}(K^b(I); Q) with the upper Koszul complex
/// K^b(I) = { squarefree τ ≤ b : x^{b-τ} ∈ I }. Entry k of the result is β_{k,b}.
inline std::vector<std::uint64_t> koszul_betti_at(const MonomialIdeal& I, const Monomial& b,
                                                  const BettiBudget& budget = {}) {
  std::vector<int> support;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] > 0) support.push_back(static_cast<int>(i));
  const std::size_t s = support.size();
  if (s >= 63 || (std::uint64_t{1} << s) > budget.max_faces)
    throw scale_limit_error("koszul faces", s >= 63 ? budget.max_faces + 1 : (std::size_t{1} << s), budget.max_faces);
  std::vector<std::vector<std::uint64_t>> faces(s + 1);
  std::unordered_set<std::uint64_t> in_complex;
  for (std::uint64_t tau = 0; tau < (std::uint64_t{1} << s); ++tau) {
    Monomial m = b;
    for (std::size_t k = 0; k < s; ++k)
      if (tau & (std::uint64_t{1} << k)) m[static_cast<std::size_t>(support[k])] -= 1;
    if (I.contains(m)) {
      faces[static_cast<std::size_t>(std::popcount(tau))].push_back(tau);
      in_complex.insert(tau);
    }
  }
  // Index k in `faces` is the face size, so homology at size k is H̃_{k-1}.
  return detail::homology_by_size(faces, [&](std::uint64_t f) { return in_complex.count(f) != 0; });
}

/// Multigraded Betti numbers from the upper Koszul complexes at every element
/// of the lcm lattice (no other multidegree can carry a nonzero β).
inline BettiTable betti_table(const MonomialIdeal& I, const BettiBudget& budget = {}) {
  if (I.is_zero()) throw zero_ideal_error("betti table of the zero ideal");
  const LcmLattice L = lcm_lattice(I, budget);
  BettiTable table;
  for (const auto& b : L.elements) {
    const auto h = koszul_betti_at(I, b, budget);
    for (std::size_t i = 0; i < h.size(); ++i)
      if (h[i] != 0) table.entries.push_back({static_cast<int>(i), b, h[i]});
  }
  detail::finish_table(table);
  return table;
}

/// Multigraded Betti numbers from the Taylor complex: at multidegree b the
/// cells are generator subsets S with lcm(S) = b, and ∂ keeps only the faces
/// S \ {g} whose lcm is still b. Homology at |S| = i + 1 is β_{i,b}.
inline BettiTable betti_table_taylor(const MonomialIdeal& I, const BettiBudget& budget = {}) {
  if (I.is_zero()) throw zero_ideal_error("betti table of the zero ideal");
  const std::size_t k = I.size();
  if (k > budget.max_taylor_generators || k >= 63)
    throw scale_limit_error("taylor generators", k, budget.max_taylor_generators);
  const auto& g = I.generators();
  const std::uint64_t full = std::uint64_t{1} << k;
  std::vector<Monomial> lcms(full, Monomial(I.nvars()));
  std::unordered_map<Monomial, std::vector<std::uint64_t>, MonomialHash> cells;
  for (std::uint64_t S = 1; S < full; ++S) {
    const int low = std::countr_zero(S);
    const std::uint64_t rest = S & (S - 1);
    lcms[S] = rest == 0 ? g[static_cast<std::size_t>(low)] : lcm(lcms[rest], g[static_cast<std::size_t>(low)]);
    cells[lcms[S]].push_back(S);
  }
  BettiTable table;
  for (const auto& [b, subsets] : cells) {
    std::vector<std::vector<std::uint64_t>> faces(k + 1);
    for (auto S : subsets) faces[static_cast<std::size_t>(std::popcount(S))].push_back(S);
    const auto h = detail::homology_by_size(faces, [&](std::uint64_t f) { return f != 0 && lcms[f] == b; });
    for (std::size_t size = 1; size < h.size(); ++size)
      if (h[size] != 0) table.entries.push_back({static_cast<int>(size) - 1, b, h[size]});
  }
  detail::finish_table(table);
  return table;
}

/// max (|a| - i) over the nonzero β_{i,a} of I.
inline long long regularity_of(const MonomialIdeal& I, const BettiBudget& budget = {}) {
  return betti_table(I, budget).regularity;
}

struct MinhReport {
  int t = 0;
  std::optional<long long> reg_power;
  std::optional<long long> reg_symbolic;
  /// Set when a side hit a budget; the other side may still be filled in.
  std::optional<std::string> skipped;
  std::optional<BettiTable> power_table;
  std::optional<BettiTable> symbolic_table;

  bool completed() const { return reg_power && reg_symbolic; }
  bool equal() const { return completed() && *reg_power == *reg_symbolic; }
};

/// reg I^t against reg I^(t). A side that exceeds its budget is reported as
/// skipped with whatever was computed.
inline MinhReport verify_minh(PowerCache& cache, int t, const BettiBudget& budget = {}) {
  MinhReport rep;
  rep.t = t;
  try {
    rep.power_table = betti_table(cache.ordinary(t), budget);
    rep.reg_power = rep.power_table->regularity;
    rep.symbolic_table = betti_table(cache.symbolic(t), budget);
    rep.reg_symbolic = rep.symbolic_table->regularity;
  } catch (const scale_limit_error& e) {
    rep.skipped = e.what();
  }
  return rep;
}

inline MinhReport verify_minh(const CirculantGraph& g, int t, const BettiBudget& budget = {},
                              const Budget& gens = default_budget()) {
  PowerCache cache(g, gens);
  return verify_minh(cache, t, budget);
}

}  // namespace spl
