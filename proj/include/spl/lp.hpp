#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spl/error.hpp"
#include "spl/rational.hpp"

namespace spl {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// maximize cᵀx subject to Ax <= b, x >= 0. Its dual is
/// minimize bᵀy subject to Aᵀy >= c, y >= 0.
struct LinearProgram {
  RationalMatrix A;
  RationalVector b;
  RationalVector c;

  std::size_t rows() const noexcept { return A.size(); }
  std::size_t cols() const noexcept { return c.size(); }
};

enum class LPStatus { optimal, infeasible, unbounded };

inline const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  RationalVector primal_point;
  RationalVector dual_point;
  Rational value;
};

namespace detail {

// Dense two-phase tableau simplex over the rationals with Bland's rule.
// Columns: x (n), slacks (m), artificials (one per row with negative rhs).
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : m_(lp.rows()), n_(lp.cols()) {
    for (const auto& row : lp.A)
      if (row.size() != n_) throw parameter_error("LP constraint row has the wrong length");
    if (lp.b.size() != m_) throw parameter_error("LP right-hand side has the wrong length");
    sign_.assign(m_, 1);
    identity_col_.assign(m_, 0);
    std::size_t artificials = 0;
    for (std::size_t i = 0; i < m_; ++i)
      if (lp.b[i] < 0) {
        sign_[i] = -1;
        ++artificials;
      }
    first_art_ = n_ + m_;
    width_ = n_ + m_ + artificials;
    T_.assign(m_, RationalVector(width_ + 1, Rational(0)));
    basis_.assign(m_, 0);
    std::size_t next_art = first_art_;
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational s(sign_[i]);
      for (std::size_t j = 0; j < n_; ++j) T_[i][j] = s * lp.A[i][j];
      T_[i][n_ + i] = s;
      T_[i][width_] = s * lp.b[i];
      if (sign_[i] > 0) {
        basis_[i] = n_ + i;
      } else {
        T_[i][next_art] = 1;
        basis_[i] = next_art++;
      }
      identity_col_[i] = basis_[i];
    }
    objective_.assign(width_, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) objective_[j] = lp.c[j];
  }

  LPSolution solve() {
    LPSolution sol;
    if (first_art_ < width_) {
      RationalVector phase1(width_, Rational(0));
      for (std::size_t j = first_art_; j < width_; ++j) phase1[j] = -1;
      if (!optimize(phase1, width_)) throw error("phase one cannot be unbounded");
      if (objective_value(phase1) < 0) {
        sol.status = LPStatus::infeasible;
        return sol;
      }
      drive_out_artificials();
    }
    if (!optimize(objective_, first_art_)) {
      sol.status = LPStatus::unbounded;
      return sol;
    }
    sol.status = LPStatus::optimal;
    sol.primal_point.assign(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) sol.primal_point[basis_[i]] = T_[i][width_];
    // y' = c_Bᵀ B⁻¹, where B⁻¹ sits in the columns that started as identity.
    sol.dual_point.assign(m_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      Rational y(0);
      for (std::size_t k = 0; k < m_; ++k) y += objective_[basis_[k]] * T_[k][identity_col_[i]];
      sol.dual_point[i] = Rational(sign_[i]) * y;
    }
    sol.value = objective_value(objective_);
    return sol;
  }

 private:
  Rational objective_value(const RationalVector& c) const {
    Rational v(0);
    for (std::size_t i = 0; i < m_; ++i) v += c[basis_[i]] * T_[i][width_];
    return v;
  }

  Rational reduced_cost(const RationalVector& c, std::size_t j) const {
    Rational z = c[j];
    for (std::size_t i = 0; i < m_; ++i)
      if (T_[i][j] != 0) z -= c[basis_[i]] * T_[i][j];
    return z;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = T_[row][col];
    for (auto& x : T_[row]) x /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || T_[i][col] == 0) continue;
      const Rational f = T_[i][col];
      for (std::size_t j = 0; j <= width_; ++j)
        if (T_[row][j] != 0) T_[i][j] -= f * T_[row][j];
    }
    basis_[row] = col;
  }

  // Maximizes c over columns [0, allowed). Returns false when unbounded.
  bool optimize(const RationalVector& c, std::size_t allowed) {
    while (true) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j)
        if (reduced_cost(c, j) > 0) {
          enter = j;
          break;
        }
      if (enter == allowed) return true;
      std::size_t leave = m_;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (T_[i][enter] <= 0) continue;
        const Rational ratio = T_[i][width_] / T_[i][enter];
        if (leave == m_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  // Zero-level artificials left in the basis are swapped for any structural
  // or slack column with a nonzero entry; rows with none are redundant and
  // keep their artificial, which never re-enters.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < first_art_) continue;
      for (std::size_t j = 0; j < first_art_; ++j)
        if (T_[i][j] != 0) {
          pivot(i, j);
          break;
        }
    }
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_ = 0;
  std::size_t first_art_ = 0;
  std::vector<int> sign_;
  std::vector<std::size_t> identity_col_;
  std::vector<std::size_t> basis_;
  RationalMatrix T_;
  RationalVector objective_;
};

}  // namespace detail

inline LPSolution solve(const LinearProgram& lp) { return detail::Tableau(lp).solve(); }

/// Exact optimality certificate for a max-form program: Ax <= b, x >= 0,
/// Aᵀy >= c, y >= 0 and cᵀx = bᵀy = value. Zero tolerance.
inline bool certify(const LinearProgram& lp, const LPSolution& sol) {
  if (sol.status != LPStatus::optimal) return false;
  const auto& x = sol.primal_point;
  const auto& y = sol.dual_point;
  if (x.size() != lp.cols() || y.size() != lp.rows()) return false;
  for (const auto& v : x)
    if (v < 0) return false;
  for (const auto& v : y)
    if (v < 0) return false;
  Rational cx(0), by(0);
  for (std::size_t i = 0; i < lp.rows(); ++i) {
    Rational lhs(0);
    for (std::size_t j = 0; j < lp.cols(); ++j) lhs += lp.A[i][j] * x[j];
    if (lhs > lp.b[i]) return false;
    by += lp.b[i] * y[i];
  }
  for (std::size_t j = 0; j < lp.cols(); ++j) {
    Rational lhs(0);
    for (std::size_t i = 0; i < lp.rows(); ++i) lhs += lp.A[i][j] * y[i];
    if (lhs < lp.c[j]) return false;
    cx += lp.c[j] * x[j];
  }
  return cx == by && cx == sol.value;
}

/// Covering program: minimize wᵀy subject to My >= d, y >= 0, with its
/// packing dual maximize dᵀx subject to Mᵀx <= w, x >= 0.
struct CoveringProgram {
  RationalMatrix M;
  RationalVector d;
  RationalVector w;
};

/// Solves the covering program. primal_point is y, dual_point is x.
inline LPSolution solve(const CoveringProgram& cp) {
  // minimize wᵀy s.t. My >= d  <=>  maximize -wᵀy s.t. -My <= -d.
  LinearProgram lp;
  for (const auto& row : cp.M) {
    RationalVector neg;
    for (const auto& v : row) neg.push_back(-v);
    lp.A.push_back(std::move(neg));
  }
  for (const auto& v : cp.d) lp.b.push_back(-v);
  for (const auto& v : cp.w) lp.c.push_back(-v);
  LPSolution sol = solve(lp);
  if (sol.status == LPStatus::optimal) sol.value = -sol.value;
  return sol;
}

/// Zero-tolerance check that (y, x) is a primal-dual optimal pair of the
/// covering program with common value `value`.
inline bool certify(const CoveringProgram& cp, const RationalVector& y, const RationalVector& x,
                    const Rational& value) {
  const std::size_t rows = cp.M.size();
  const std::size_t cols = cp.w.size();
  if (y.size() != cols || x.size() != rows || cp.d.size() != rows) return false;
  for (const auto& v : y)
    if (v < 0) return false;
  for (const auto& v : x)
    if (v < 0) return false;
  Rational wy(0), dx(0);
  for (std::size_t i = 0; i < rows; ++i) {
    Rational lhs(0);
    for (std::size_t j = 0; j < cols; ++j) lhs += cp.M[i][j] * y[j];
    if (lhs < cp.d[i]) return false;
    dx += cp.d[i] * x[i];
  }
  for (std::size_t j = 0; j < cols; ++j) {
    Rational lhs(0);
    for (std::size_t i = 0; i < rows; ++i) lhs += cp.M[i][j] * x[i];
    if (lhs > cp.w[j]) return false;
    wy += cp.w[j] * y[j];
  }
  return wy == dx && wy == value;
}

inline bool certify(const CoveringProgram& cp, const LPSolution& sol) {
  return sol.status == LPStatus::optimal && certify(cp, sol.primal_point, sol.dual_point, sol.value);
}

}  // namespace spl
