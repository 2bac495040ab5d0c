#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spl/circulant_graph.hpp"
#include "spl/ideal_powers.hpp"
#include "spl/lp_invariants.hpp"
#include "spl/rational.hpp"

namespace spl {

struct TracePoint {
  int t = 0;
  std::uint64_t alpha = 0;
  Rational ratio;
};

/// α(I^(t)) / t for t = 1..t_max.
inline std::vector<TracePoint> waldschmidt_trace(const CirculantGraph& g, int t_max) {
  if (t_max < 1) throw parameter_error("waldschmidt_trace needs t_max >= 1");
  std::vector<TracePoint> trace;
  for (int t = 1; t <= t_max; ++t) {
    const auto a = alpha_symbolic_exact(g, t).degree;
    trace.push_back({t, a, Rational(BigInt(a)) / Rational(t)});
  }
  return trace;
}

/// ρ(I(G(n,r))) = 2(n - (r+1)) / n.
inline Rational closed_form_resurgence(int n, int r) {
  check_graph_params(n, r);
  return Rational(2 * (n - (r + 1))) / Rational(n);
}

/// α(I) / α̂(I) with α(I) = 2.
inline Rational resurgence_from_waldschmidt(int n, int r) { return Rational(2) / waldschmidt(n, r); }

struct ResurgencePair {
  int s = 0;
  int t = 0;
  bool contained = true;
  Rational ratio;
  /// Containment by generator divisibility, when the pair was inside the
  /// cross-check zone.
  std::optional<bool> brute_force;
};

struct ResurgenceReport {
  int n = 0;
  int r = 0;
  Rational closed_form;
  std::vector<ResurgencePair> tested_pairs;
  /// Largest s/t over failing pairs; empty when nothing fails in the window.
  std::optional<Rational> max_failing_ratio;
  std::size_t cross_checked = 0;
  std::size_t cross_check_disagreements = 0;

  bool sound() const {
    for (const auto& p : tested_pairs)
      if (!p.contained && !(p.ratio < closed_form)) return false;
    return cross_check_disagreements == 0;
  }
};

/// Where the generator-level containment check also runs.
struct CrossCheckZone {
  int n_max = 7;
  int st_max = 4;
};

/// Scans s <= s_max, t <= t_max. I^(s) ⊄ I^t is decided by α(I^(s)) < 2t
/// (with α from the exact search); inside the cross-check zone the
/// containment is also decided from generators and compared.
inline ResurgenceReport resurgence_estimate(const CirculantGraph& g, int s_max, int t_max,
                                            CrossCheckZone zone = {}, const Budget& budget = default_budget()) {
  if (s_max < 1 || t_max < 1) throw parameter_error("resurgence window bounds must be >= 1");
  ResurgenceReport rep;
  rep.n = g.n();
  rep.r = g.r();
  rep.closed_form = closed_form_resurgence(g.n(), g.r());
  std::optional<PowerCache> cache;
  if (g.n() <= zone.n_max) cache.emplace(g, budget);
  for (int s = 1; s <= s_max; ++s) {
    const std::uint64_t a = alpha_symbolic_exact(g, s).degree;
    for (int t = 1; t <= t_max; ++t) {
      ResurgencePair p;
      p.s = s;
      p.t = t;
      p.ratio = Rational(s) / Rational(t);
      p.contained = a >= static_cast<std::uint64_t>(2 * t);
      if (cache && s <= zone.st_max && t <= zone.st_max) {
        p.brute_force = contains_power(*cache, s, t).contained;
        ++rep.cross_checked;
        if (*p.brute_force != p.contained) ++rep.cross_check_disagreements;
      }
      if (!p.contained && (!rep.max_failing_ratio || p.ratio > *rep.max_failing_ratio))
        rep.max_failing_ratio = p.ratio;
      rep.tested_pairs.push_back(std::move(p));
    }
  }
  return rep;
}

/// Columns n,r,s,t,contained,ratio_num,ratio_den; one row per tested pair.
inline std::string resurgence_csv(const ResurgenceReport& rep) {
  std::ostringstream out;
  out << "n,r,s,t,contained,ratio_num,ratio_den\n";
  for (const auto& p : rep.tested_pairs)
    out << rep.n << ',' << rep.r << ',' << p.s << ',' << p.t << ',' << (p.contained ? "true" : "false") << ','
        << numerator_of(p.ratio) << ',' << denominator_of(p.ratio) << '\n';
  return out.str();
}

}  // namespace spl
