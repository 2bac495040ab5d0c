#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "spl/circulant_graph.hpp"
#include "spl/error.hpp"
#include "spl/lp.hpp"
#include "spl/monomial.hpp"
#include "spl/rational.hpp"

namespace spl {

inline void check_graph_params(int n, int r) { (void)CirculantGraph(n, r); }

/// min 1ᵀy subject to Ay >= t·1, y >= 0 over the cover matrix A. The
/// restricted program keeps only the n cyclically consecutive covers.
inline CoveringProgram cover_program(const CirculantGraph& g, int t, bool restricted) {
  if (t < 1) throw parameter_error("cover LP needs t >= 1");
  const CoverMatrix A = restricted ? cover_matrix_of(g.n(), consecutive_covers(g)) : cover_matrix(g);
  CoveringProgram cp;
  for (const auto& row : A.rows) {
    RationalVector r;
    for (int v : row) r.emplace_back(v);
    cp.M.push_back(std::move(r));
  }
  cp.d.assign(A.row_count(), Rational(t));
  cp.w.assign(static_cast<std::size_t>(g.n()), Rational(1));
  return cp;
}

struct CoverLPResult {
  CoveringProgram program;
  LPSolution solution;
  bool certified = false;
};

inline CoverLPResult solve_cover_lp(const CirculantGraph& g, int t, bool restricted) {
  CoverLPResult res;
  res.program = cover_program(g, t, restricted);
  res.solution = solve(res.program);
  res.certified = certify(res.program, res.solution);
  return res;
}

/// ⌈nt / (n - (r+1))⌉.
inline std::uint64_t alpha_symbolic_lower_bound(int n, int r, int t) {
  check_graph_params(n, r);
  if (t < 1) throw parameter_error("alpha bound needs t >= 1");
  const auto k = static_cast<std::uint64_t>(n - (r + 1));
  const auto num = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(t);
  return (num + k - 1) / k;
}

/// The uniform point of the restricted program: y = t/(n-r-1) on every
/// vertex, x = 1/(n-r-1) on every consecutive cover.
inline bool certify_uniform_point(const CirculantGraph& g, int t) {
  const CoveringProgram cp = cover_program(g, t, true);
  const Rational k(g.cover_size());
  const RationalVector y(static_cast<std::size_t>(g.n()), Rational(t) / k);
  const RationalVector x(cp.M.size(), Rational(1) / k);
  return certify(cp, y, x, Rational(g.n()) * Rational(t) / k);
}

struct AlphaResult {
  std::uint64_t degree = 0;
  Monomial witness;
};

namespace detail {

class AlphaSearch {
 public:
  AlphaSearch(int nvars, std::vector<VertexSet> covers, int t)
      : n_(static_cast<std::size_t>(nvars)), covers_(std::move(covers)), t_(static_cast<std::uint64_t>(t)) {
    touching_.resize(n_);
    for (std::size_t c = 0; c < covers_.size(); ++c) {
      last_.push_back(static_cast<std::size_t>(covers_[c].members.back() - 1));
      for (int v : covers_[c].members) touching_[static_cast<std::size_t>(v - 1)].push_back(c);
    }
  }

  /// Some vector of total degree exactly `degree` with entries <= t meeting every cover.
  bool feasible(std::uint64_t degree, Monomial& witness) {
    m_ = Monomial(n_);
    weight_.assign(covers_.size(), 0);
    if (!place(0, degree)) return false;
    witness = m_;
    return true;
  }

 private:
  bool covers_closed_ok(std::size_t i) const {
    for (std::size_t c : touching_[i])
      if (last_[c] == i && weight_[c] < t_) return false;
    return true;
  }

  bool place(std::size_t i, std::uint64_t left) {
    if (i == n_) return left == 0 && std::all_of(weight_.begin(), weight_.end(), [&](auto w) { return w >= t_; });
    // Each cover still short of t needs its deficit from the remaining budget.
    for (std::size_t c = 0; c < covers_.size(); ++c)
      if (weight_[c] < t_ && t_ - weight_[c] > left) return false;
    const std::uint64_t top = std::min(left, t_);
    const std::uint64_t low = i + 1 == n_ ? left : 0;
    if (low > top) return false;
    for (std::uint64_t e = top + 1; e-- > low;) {
      m_[i] = static_cast<Exponent>(e);
      for (std::size_t c : touching_[i]) weight_[c] += e;
      const bool ok = covers_closed_ok(i) && place(i + 1, left - e);
      for (std::size_t c : touching_[i]) weight_[c] -= e;
      if (ok) return true;
    }
    m_[i] = 0;
    return false;
  }

  std::size_t n_;
  std::vector<VertexSet> covers_;
  std::uint64_t t_;
  std::vector<std::size_t> last_;
  std::vector<std::vector<std::size_t>> touching_;
  std::vector<std::uint64_t> weight_;
  Monomial m_;
};

}  // namespace detail

/// α(I^(t)) by exact search: the least total degree of an exponent vector
/// whose weight on every minimal vertex cover is at least t. Entries never
/// need to exceed t (lowering an entry above t keeps every weight >= t), so
/// the search runs over vectors with entries <= t, degree by degree from 1.
inline AlphaResult alpha_symbolic_exact(const CirculantGraph& g, int t) {
  if (t < 1) throw parameter_error("alpha needs t >= 1");
  detail::AlphaSearch search(g.n(), minimal_vertex_covers(g), t);
  AlphaResult res;
  for (std::uint64_t d = 1;; ++d) {
    if (search.feasible(d, res.witness)) {
      res.degree = d;
      return res;
    }
  }
}

struct ChromaticResult {
  Rational value;
  CoveringProgram program;
  LPSolution solution;
  bool certified = false;
};

/// χ*(G): min Σ w_S over maximal independent sets S subject to every vertex
/// being covered with total weight >= 1.
inline ChromaticResult fractional_chromatic_lp(const CirculantGraph& g) {
  const auto sets = maximal_independent_sets(g);
  ChromaticResult res;
  for (int v = 1; v <= g.n(); ++v) {
    RationalVector row;
    for (const auto& s : sets) row.emplace_back(s.contains(v) ? 1 : 0);
    res.program.M.push_back(std::move(row));
  }
  res.program.d.assign(static_cast<std::size_t>(g.n()), Rational(1));
  res.program.w.assign(sets.size(), Rational(1));
  res.solution = solve(res.program);
  res.certified = certify(res.program, res.solution);
  res.value = res.solution.value;
  return res;
}

inline Rational fractional_chromatic(const CirculantGraph& g) { return fractional_chromatic_lp(g).value; }

/// α̂(I(G(n,r))) = n / (n - (r+1)).
inline Rational waldschmidt(int n, int r) {
  check_graph_params(n, r);
  return Rational(n) / Rational(n - (r + 1));
}

/// χ* / (χ* - 1), the Waldschmidt constant of an edge ideal in terms of the
/// fractional chromatic number of its graph.
inline Rational waldschmidt_from_chromatic(const Rational& chi) {
  if (chi <= 1) throw parameter_error("fractional chromatic number must exceed 1");
  return chi / (chi - 1);
}

}  // namespace spl
