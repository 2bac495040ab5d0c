#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spl/circulant_graph.hpp"
#include "spl/config.hpp"
#include "spl/error.hpp"
#include "spl/monomial.hpp"

namespace spl {

class MonomialIdeal;
MonomialIdeal minimalize(std::size_t nvars, std::vector<Monomial> gens);

/// Monomial ideal held by its minimal generators in canonical order. The
/// empty generator list is the zero ideal; the single generator 1 is the unit
/// ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars = 0) : nvars_(nvars) {}

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }

  static MonomialIdeal unit(std::size_t nvars) {
    MonomialIdeal I(nvars);
    I.gens_.emplace_back(nvars);
    return I;
  }

  /// True when some generator divides m.
  bool contains(const Monomial& m) const {
    const std::uint64_t mask = m.support_mask();
    const std::uint64_t deg = m.degree();
    for (const auto& g : gens_) {
      if (g.degree() > deg) break;
      if ((g.support_mask() & ~mask) != 0) continue;
      if (g.divides(m)) return true;
    }
    return false;
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  friend MonomialIdeal minimalize(std::size_t nvars, std::vector<Monomial> gens);

  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

/// Drops every monomial divisible by another one and sorts canonically.
inline MonomialIdeal minimalize(std::size_t nvars, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (g.size() != nvars) throw parameter_error("generator length does not match variable count");
  std::sort(gens.begin(), gens.end(), CanonicalLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<std::uint64_t> masks;
  std::vector<Monomial> kept;
  for (auto& c : gens) {
    const std::uint64_t cmask = c.support_mask();
    bool redundant = false;
    // Everything kept so far has degree <= deg(c); equal-degree distinct
    // monomials cannot divide each other, so the divides() test is exact.
    for (std::size_t k = 0; k < kept.size() && !redundant; ++k)
      redundant = (masks[k] & ~cmask) == 0 && kept[k].divides(c);
    if (!redundant) {
      masks.push_back(cmask);
      kept.push_back(std::move(c));
    }
  }
  MonomialIdeal I(nvars);
  I.gens_ = std::move(kept);
  return I;
}

inline void check_same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.nvars() != J.nvars()) throw parameter_error("ideals over different variable counts");
}

inline MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J,
                             const Budget& budget = default_budget()) {
  check_same_ring(I, J);
  budget.check("product candidates", I.size() * J.size());
  std::vector<Monomial> gens;
  gens.reserve(I.size() * J.size());
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) gens.push_back(a * b);
  return minimalize(I.nvars(), std::move(gens));
}

/// I^t for t >= 1, by repeated multiplication with I.
inline MonomialIdeal power(const MonomialIdeal& I, int t, const Budget& budget = default_budget()) {
  if (t < 1) throw parameter_error("power needs t >= 1");
  MonomialIdeal result = I;
  for (int k = 2; k <= t; ++k) result = product(result, I, budget);
  return result;
}

/// I ∩ J through pairwise lcms of generators.
inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J,
                               const Budget& budget = default_budget()) {
  check_same_ring(I, J);
  budget.check("intersection candidates", I.size() * J.size());
  std::vector<Monomial> gens;
  gens.reserve(I.size() * J.size());
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) gens.push_back(lcm(a, b));
  return minimalize(I.nvars(), std::move(gens));
}

/// P^m where P is generated by the variables of `vars`.
inline MonomialIdeal prime_power(std::size_t nvars, const VertexSet& vars, int m,
                                 const Budget& budget = default_budget()) {
  if (m < 1) throw parameter_error("prime power needs m >= 1");
  std::vector<Monomial> gens;
  for_each_monomial_of_degree(vars.size(), static_cast<std::uint64_t>(m),
                              static_cast<Exponent>(m), [&](const Monomial& e) {
                                budget.check("prime power generators", gens.size() + 1);
                                Monomial g(nvars);
                                for (std::size_t k = 0; k < vars.size(); ++k)
                                  g[static_cast<std::size_t>(vars.members[k] - 1)] = e[k];
                                gens.push_back(std::move(g));
                              });
  return minimalize(nvars, std::move(gens));
}

namespace detail {

inline std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > cap) return cap + 1;
  }
  return static_cast<std::size_t>(acc);
}

}  // namespace detail

/// J ∩ P^m for the prime P generated by `vars`. The lcm of g in J with a
/// degree-m monomial u in those variables always dominates g + e for some
/// e supported on vars with |e| = max(0, m - W(g)), and each such g + e is
/// itself such an lcm, so these candidates generate the intersection.
inline MonomialIdeal intersect_with_prime_power(const MonomialIdeal& J, const VertexSet& vars, int m,
                                                const Budget& budget = default_budget()) {
  if (m < 1) throw parameter_error("prime power needs m >= 1");
  const std::size_t k = vars.size();
  std::size_t projected = 0;
  for (const auto& g : J.generators()) {
    const std::uint64_t w = g.weight(vars);
    const std::size_t d = w >= static_cast<std::uint64_t>(m) ? 0 : static_cast<std::size_t>(m - w);
    projected += d == 0 ? 1 : detail::binomial_capped(d + k - 1, d, budget.max_generators);
    budget.check("symbolic power candidates", projected);
  }
  std::vector<Monomial> gens;
  gens.reserve(projected);
  for (const auto& g : J.generators()) {
    const std::uint64_t w = g.weight(vars);
    if (w >= static_cast<std::uint64_t>(m)) {
      gens.push_back(g);
      continue;
    }
    const std::uint64_t d = static_cast<std::uint64_t>(m) - w;
    for_each_monomial_of_degree(k, d, static_cast<Exponent>(d), [&](const Monomial& e) {
      Monomial h = g;
      for (std::size_t i = 0; i < k; ++i) h[static_cast<std::size_t>(vars.members[i] - 1)] += e[i];
      gens.push_back(std::move(h));
    });
  }
  return minimalize(J.nvars(), std::move(gens));
}

/// First generator of I that no generator of J divides; empty exactly when I ⊆ J.
inline std::optional<Monomial> find_uncontained(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ring(I, J);
  for (const auto& g : I.generators())
    if (!J.contains(g)) return g;
  return std::nullopt;
}

inline bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J) {
  return !find_uncontained(I, J).has_value();
}

/// Least degree of a minimal generator.
inline std::uint64_t alpha(const MonomialIdeal& I) {
  if (I.is_zero()) throw zero_ideal_error("alpha of the zero ideal");
  return I.generators().front().degree();
}

inline MonomialIdeal edge_ideal(const CirculantGraph& g) {
  std::vector<Monomial> gens;
  for (const auto& e : g.edges()) gens.push_back(Monomial::edge(static_cast<std::size_t>(g.n()), e));
  return minimalize(static_cast<std::size_t>(g.n()), std::move(gens));
}

/// Weight criterion for I(G)^(m): W_V(x^a) >= m on every minimal vertex cover V.
inline bool member_symbolic(const Monomial& a, const std::vector<VertexSet>& covers, int m) {
  return std::all_of(covers.begin(), covers.end(), [&](const VertexSet& c) {
    return a.weight(c) >= static_cast<std::uint64_t>(std::max(m, 0));
  });
}

inline bool member_symbolic(const Monomial& a, const CirculantGraph& g, int m) {
  if (a.size() != static_cast<std::size_t>(g.n()))
    throw parameter_error("monomial has " + std::to_string(a.size()) + " exponents, graph has " +
                          std::to_string(g.n()) + " vertices");
  return member_symbolic(a, minimal_vertex_covers(g), m);
}

/// I^(m) = ∩_V P_V^m over the given covers, built by successive intersection.
inline MonomialIdeal symbolic_power(std::size_t nvars, const std::vector<VertexSet>& covers, int m,
                                    const Budget& budget = default_budget()) {
  if (m < 1) throw parameter_error("symbolic power needs m >= 1");
  MonomialIdeal J = MonomialIdeal::unit(nvars);
  for (const auto& c : covers) J = intersect_with_prime_power(J, c, m, budget);
  return J;
}

inline MonomialIdeal symbolic_power(const CirculantGraph& g, int m,
                                    const Budget& budget = default_budget()) {
  return symbolic_power(static_cast<std::size_t>(g.n()), minimal_vertex_covers(g), m, budget);
}

}  // namespace spl
