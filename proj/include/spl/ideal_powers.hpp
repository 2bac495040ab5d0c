#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "spl/circulant_graph.hpp"
#include "spl/config.hpp"
#include "spl/error.hpp"
#include "spl/monomial.hpp"
#include "spl/monomial_ideal.hpp"

namespace spl {

/// Memoized ordinary and symbolic powers of I(G) for one graph. Not shared
/// across threads; build one per worker.
class PowerCache {
 public:
  explicit PowerCache(const CirculantGraph& g, Budget budget = default_budget())
      : g_(g), budget_(budget), covers_(minimal_vertex_covers(g)), edge_ideal_(edge_ideal(g)) {}

  const CirculantGraph& graph() const noexcept { return g_; }
  const Budget& budget() const noexcept { return budget_; }
  const std::vector<VertexSet>& covers() const noexcept { return covers_; }
  const MonomialIdeal& edge_ideal_of() const noexcept { return edge_ideal_; }
  std::size_t nvars() const noexcept { return static_cast<std::size_t>(g_.n()); }

  const MonomialIdeal& ordinary(int t) {
    if (t < 1) throw parameter_error("power needs t >= 1");
    auto it = ordinary_.find(t);
    if (it != ordinary_.end()) return it->second;
    MonomialIdeal I = t == 1 ? edge_ideal_ : product(ordinary(t - 1), edge_ideal_, budget_);
    return ordinary_.emplace(t, std::move(I)).first->second;
  }

  const MonomialIdeal& symbolic(int t) {
    auto it = symbolic_.find(t);
    if (it != symbolic_.end()) return it->second;
    return symbolic_.emplace(t, symbolic_power(nvars(), covers_, t, budget_)).first->second;
  }

 private:
  CirculantGraph g_;
  Budget budget_;
  std::vector<VertexSet> covers_;
  MonomialIdeal edge_ideal_;
  std::map<int, MonomialIdeal> ordinary_;
  std::map<int, MonomialIdeal> symbolic_;
};

/// I^(t) = (L(t)) + (D(t)), where L(t) holds the monomials of I^(t) of degree
/// >= 2t and D(t) those of degree <= 2t - 1.
struct LDSplit {
  int t = 0;
  /// Minimal generators of the ideal (L(t)) = I^(t) ∩ m^{2t}.
  std::vector<Monomial> L_gens;
  /// Minimal generators of I^(t) of degree <= 2t - 1; these are exactly the
  /// minimal elements of D(t).
  std::vector<Monomial> D_gens;
};

/// Generators of J ∩ m^d: every generator of J padded by all monomials that
/// lift it to degree d.
inline MonomialIdeal truncate_below(const MonomialIdeal& J, std::uint64_t d,
                                    const Budget& budget = default_budget()) {
  std::vector<Monomial> gens;
  for (const auto& h : J.generators()) {
    const std::uint64_t deg = h.degree();
    if (deg >= d) {
      gens.push_back(h);
      continue;
    }
    for_each_monomial_of_degree(J.nvars(), d - deg, static_cast<Exponent>(d - deg), [&](const Monomial& u) {
      budget.check("degree truncation candidates", gens.size() + 1);
      gens.push_back(h * u);
    });
  }
  return minimalize(J.nvars(), std::move(gens));
}

inline LDSplit ld_split(PowerCache& cache, int t) {
  if (t < 1) throw parameter_error("ld_split needs t >= 1");
  const MonomialIdeal& S = cache.symbolic(t);
  const auto threshold = static_cast<std::uint64_t>(2 * t);
  LDSplit split;
  split.t = t;
  for (const auto& h : S.generators())
    if (h.degree() < threshold) split.D_gens.push_back(h);
  split.L_gens = truncate_below(S, threshold, cache.budget()).generators();
  return split;
}

inline LDSplit ld_split(const CirculantGraph& g, int t, const Budget& budget = default_budget()) {
  PowerCache cache(g, budget);
  return ld_split(cache, t);
}

/// Outcome of a generator-level check. The witness, when present, is a
/// monomial on which the two sides disagree.
struct Certificate {
  bool pass = true;
  std::optional<Monomial> witness;
};

/// I^t == (L(t)), decided by mutual containment of generating sets.
inline Certificate verify_lt_theorem(PowerCache& cache, int t) {
  const LDSplit split = ld_split(cache, t);
  const MonomialIdeal L = minimalize(cache.nvars(), split.L_gens);
  const MonomialIdeal& P = cache.ordinary(t);
  if (auto w = find_uncontained(L, P)) return {false, w};
  if (auto w = find_uncontained(P, L)) return {false, w};
  return {};
}

inline Certificate verify_lt_theorem(const CirculantGraph& g, int t, const Budget& budget = default_budget()) {
  PowerCache cache(g, budget);
  return verify_lt_theorem(cache, t);
}

/// Minimal monomials of degree <= 2t - 1 whose weight is >= t on every set of
/// n - (r+1) cyclically consecutive vertices. Requires an unmixed graph.
/// Entries above t are never needed: an entry >= t already saturates every
/// window containing it, and lowering it keeps the vector in the set.
inline std::vector<Monomial> d_description_unmixed(const CirculantGraph& g, int t) {
  if (t < 1) throw parameter_error("d_description_unmixed needs t >= 1");
  if (!is_unmixed(g))
    throw not_unmixed_error("G(" + std::to_string(g.n()) + "," + std::to_string(g.r()) + ") is not unmixed");
  const auto windows = consecutive_covers(g);
  const auto nvars = static_cast<std::size_t>(g.n());
  std::vector<Monomial> found;
  const auto max_degree = static_cast<std::uint64_t>(2 * t - 1);
  for (std::uint64_t d = 0; d <= max_degree; ++d) {
    for_each_monomial_of_degree(nvars, d, static_cast<Exponent>(t), [&](const Monomial& a) {
      if (member_symbolic(a, windows, t)) found.push_back(a);
    });
  }
  return minimalize(nvars, std::move(found)).generators();
}

struct ContainmentCheck {
  bool contained = true;
  /// A minimal generator of I^(s) outside I^t.
  std::optional<Monomial> witness;
};

/// I^(s) ⊆ I^t, decided generator by generator.
inline ContainmentCheck contains_power(PowerCache& cache, int s, int t) {
  if (s < 1 || t < 1) throw parameter_error("contains_power needs s, t >= 1");
  auto w = find_uncontained(cache.symbolic(s), cache.ordinary(t));
  return {!w.has_value(), w};
}

inline ContainmentCheck contains_power(const CirculantGraph& g, int s, int t,
                                       const Budget& budget = default_budget()) {
  PowerCache cache(g, budget);
  return contains_power(cache, s, t);
}

/// m^t · I^(t) ⊆ I^t. A generator h already in I^t has all its multiples in
/// I^t; every other generator is multiplied by each degree-t monomial.
inline Certificate verify_maximal_ideal_containment(PowerCache& cache, int t) {
  if (t < 1) throw parameter_error("verify_maximal_ideal_containment needs t >= 1");
  const MonomialIdeal& S = cache.symbolic(t);
  const MonomialIdeal& P = cache.ordinary(t);
  Certificate cert;
  for (const auto& h : S.generators()) {
    if (P.contains(h)) continue;
    for_each_monomial_of_degree(cache.nvars(), static_cast<std::uint64_t>(t), static_cast<Exponent>(t),
                                [&](const Monomial& u) {
                                  if (!cert.pass) return;
                                  Monomial uh = u * h;
                                  if (!P.contains(uh)) cert = {false, std::move(uh)};
                                });
    if (!cert.pass) break;
  }
  return cert;
}

inline Certificate verify_maximal_ideal_containment(const CirculantGraph& g, int t,
                                                    const Budget& budget = default_budget()) {
  PowerCache cache(g, budget);
  return verify_maximal_ideal_containment(cache, t);
}

struct Prop55Check {
  bool holds = true;
  std::uint64_t alpha_symbolic = 0;
  std::uint64_t alpha_power = 0;
  bool contained = true;
  std::optional<Monomial> witness;
};

/// (α(I^(t)) < α(I^s)) <=> I^(t) ⊄ I^s, both sides computed from generators.
inline Prop55Check verify_prop55(PowerCache& cache, int t, int s) {
  Prop55Check c;
  c.alpha_symbolic = alpha(cache.symbolic(t));
  c.alpha_power = alpha(cache.ordinary(s));
  const auto cont = contains_power(cache, t, s);
  c.contained = cont.contained;
  c.witness = cont.witness;
  c.holds = (c.alpha_symbolic < c.alpha_power) == !c.contained;
  return c;
}

inline Prop55Check verify_prop55(const CirculantGraph& g, int t, int s, const Budget& budget = default_budget()) {
  PowerCache cache(g, budget);
  return verify_prop55(cache, t, s);
}

}  // namespace spl
