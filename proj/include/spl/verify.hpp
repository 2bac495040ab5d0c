#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spl/asymptotics.hpp"
#include "spl/circulant_graph.hpp"
#include "spl/config.hpp"
#include "spl/ideal_powers.hpp"
#include "spl/lp_invariants.hpp"
#include "spl/regularity.hpp"
#include "spl/serialize.hpp"

namespace spl {

struct VerifyOptions {
  /// Ideal-level suites.
  int n_max = 7;
  /// Graph-level suites and the fractional chromatic check.
  int graph_n_max = 12;
  int t_max = 3;
  int reg_t_max = 2;
  /// Resurgence window.
  int s_window = 12;
  int t_window = 10;
  /// s, t bound for the generator-level containment cross-check.
  int cross_st_max = 4;
  /// Restrict the grid to one value (used by reproduce commands).
  std::optional<int> n, r, t, s;
  Budget budget = default_budget();
  BettiBudget betti;
};

struct VerifyCell {
  std::string lemma;
  Json params;
  bool pass = true;
  bool skipped = false;
  Json witness = nullptr;
  std::string note;
};

struct SuiteResult {
  std::string suite;
  Json grid;
  std::vector<VerifyCell> cells;
  /// Findings that do not affect the verdict.
  std::vector<std::string> observations;

  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [](const VerifyCell& c) { return !c.pass; }));
  }
  std::size_t skipped() const {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [](const VerifyCell& c) { return c.skipped; }));
  }
  bool passed() const { return failures() == 0; }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"thm-4.1", "lem-4.2", "lem-4.3", "thm-4.6", "lem-5.6",
                                                 "prop-5.5", "thm-5.8", "thm-5.9", "graph-lemmas"};
  return names;
}

/// One command that reruns just this cell.
inline std::string reproduce_command(const std::string& suite, const VerifyCell& cell) {
  std::string cmd = "spl verify --suite " + suite;
  for (const char* key : {"n", "r", "t", "s"})
    if (cell.params.contains(key)) cmd += std::string(" --") + key + " " + cell.params[key].dump();
  return cmd;
}

inline Json to_json(const VerifyCell& c) {
  Json j;
  j["lemma"] = c.lemma;
  j["params"] = c.params;
  j["pass"] = c.pass;
  if (c.skipped) j["skipped"] = true;
  j["witness"] = c.witness;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

inline Json to_json(const SuiteResult& s) {
  Json j;
  j["suite"] = s.suite;
  j["grid"] = s.grid;
  j["pass"] = s.passed();
  j["failures"] = s.failures();
  j["skipped"] = s.skipped();
  Json cells = Json::array();
  for (const auto& c : s.cells) cells.push_back(to_json(c));
  j["cells"] = std::move(cells);
  j["observations"] = s.observations;
  return j;
}

namespace detail {

inline Json params_of(int n, int r) { return Json{{"n", n}, {"r", r}}; }
inline Json params_of(int n, int r, int t) { return Json{{"n", n}, {"r", r}, {"t", t}}; }

/// Valid (n, r) with 2 <= n <= n_max, honouring the single-value filters.
inline void for_each_graph(const VerifyOptions& o, int n_max, const std::function<void(const CirculantGraph&)>& f) {
  const int lo = o.n ? *o.n : 2;
  const int hi = o.n ? *o.n : n_max;
  for (int n = lo; n <= hi; ++n)
    for (int r = 0; r <= n / 2 - 1; ++r) {
      if (o.r && *o.r != r) continue;
      f(CirculantGraph(n, r));
    }
}

inline std::vector<int> t_values(const VerifyOptions& o, int t_max) {
  if (o.t) return {*o.t};
  std::vector<int> ts;
  for (int t = 1; t <= t_max; ++t) ts.push_back(t);
  return ts;
}

inline Json grid_of(const VerifyOptions& o, int n_max, std::optional<int> t_max) {
  Json g;
  g["n_max"] = o.n ? *o.n : n_max;
  if (o.n) g["n"] = *o.n;
  if (o.r) g["r"] = *o.r;
  if (t_max) g["t_max"] = o.t ? *o.t : *t_max;
  return g;
}

/// Runs a cell body, turning a scale-limit error into a skipped cell.
inline VerifyCell guarded(std::string lemma, Json params, const std::function<void(VerifyCell&)>& body) {
  VerifyCell c;
  c.lemma = std::move(lemma);
  c.params = std::move(params);
  try {
    body(c);
  } catch (const scale_limit_error& e) {
    c.pass = true;
    c.skipped = true;
    c.witness = nullptr;
    c.note = e.what();
  }
  return c;
}

inline std::optional<Monomial> first_difference(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
  for (const auto& m : a)
    if (std::find(b.begin(), b.end(), m) == b.end()) return m;
  for (const auto& m : b)
    if (std::find(a.begin(), a.end(), m) == a.end()) return m;
  return std::nullopt;
}

inline SuiteResult suite_thm41(const VerifyOptions& o) {
  SuiteResult res{"thm-4.1", grid_of(o, o.n_max, o.t_max), {}, {}};
  for_each_graph(o, o.n_max, [&](const CirculantGraph& g) {
    PowerCache cache(g, o.budget);
    for (int t : t_values(o, o.t_max)) {
      res.cells.push_back(guarded("thm-4.1", params_of(g.n(), g.r(), t), [&](VerifyCell& c) {
        const Certificate cert = verify_lt_theorem(cache, t);
        c.pass = cert.pass;
        if (cert.witness) c.witness = to_json(*cert.witness);
        if (!c.pass) return;
        // L(t) together with D(t) must give back the whole symbolic power.
        const LDSplit split = ld_split(cache, t);
        std::vector<Monomial> both = split.L_gens;
        both.insert(both.end(), split.D_gens.begin(), split.D_gens.end());
        const MonomialIdeal rebuilt = minimalize(cache.nvars(), std::move(both));
        if (auto w = first_difference(rebuilt.generators(), cache.symbolic(t).generators())) {
          c.pass = false;
          c.witness = to_json(*w);
          c.note = "L and D do not regenerate the symbolic power";
        }
      }));
    }
  });
  return res;
}

inline SuiteResult suite_lem42(const VerifyOptions& o) {
  SuiteResult res{"lem-4.2", grid_of(o, o.n_max, o.t_max), {}, {}};
  for_each_graph(o, o.n_max, [&](const CirculantGraph& g) {
    if (!is_unmixed(g)) return;
    PowerCache cache(g, o.budget);
    for (int t : t_values(o, o.t_max)) {
      res.cells.push_back(guarded("lem-4.2", params_of(g.n(), g.r(), t), [&](VerifyCell& c) {
        const auto described = d_description_unmixed(g, t);
        const auto actual = ld_split(cache, t).D_gens;
        if (auto w = first_difference(described, actual)) {
          c.pass = false;
          c.witness = to_json(*w);
        }
      }));
    }
  });
  return res;
}

inline SuiteResult suite_lem43(const VerifyOptions& o) {
  SuiteResult res{"lem-4.3", grid_of(o, o.n_max, o.t_max), {}, {}};
  for_each_graph(o, o.n_max, [&](const CirculantGraph& g) {
    PowerCache cache(g, o.budget);
    for (int t : t_values(o, o.t_max)) {
      res.cells.push_back(guarded("lem-4.3", params_of(g.n(), g.r(), t), [&](VerifyCell& c) {
        const Certificate cert = verify_maximal_ideal_containment(cache, t);
        c.pass = cert.pass;
        if (cert.witness) c.witness = to_json(*cert.witness);
      }));
    }
  });
  return res;
}

inline SuiteResult suite_thm46(const VerifyOptions& o) {
  SuiteResult res{"thm-4.6", grid_of(o, o.n_max, o.reg_t_max), {}, {}};
  for_each_graph(o, o.n_max, [&](const CirculantGraph& g) {
    PowerCache cache(g, o.budget);
    for (int t : t_values(o, o.reg_t_max)) {
      res.cells.push_back(guarded("thm-4.6", params_of(g.n(), g.r(), t), [&](VerifyCell& c) {
        const MinhReport rep = verify_minh(cache, t, o.betti);
        if (!rep.completed()) {
          c.skipped = true;
          c.note = rep.skipped.value_or("incomplete");
          return;
        }
        c.pass = rep.equal();
        c.note = "reg " + std::to_string(*rep.reg_power);
        if (!c.pass) c.witness = to_json(rep);
      }));
    }
  });
  return res;
}

inline SuiteResult suite_lem56(const VerifyOptions& o) {
  SuiteResult res{"lem-5.6", grid_of(o, o.n_max, o.t_max), {}, {}};
  for_each_graph(o, o.n_max, [&](const CirculantGraph& g) {
    for (int t : t_values(o, o.t_max)) {
      res.cells.push_back(guarded("lem-5.6", params_of(g.n(), g.r(), t), [&](VerifyCell& c) {
        const auto bound = alpha_symbolic_lower_bound(g.n(), g.r(), t);
        const auto exact = alpha_symbolic_exact(g, t);
        const Rational expected = Rational(g.n()) * Rational(t) / Rational(g.cover_size());
        const auto restricted = solve_cover_lp(g, t, true);
        const auto full = solve_cover_lp(g, t, false);
        const bool uniform = certify_uniform_point(g, t);
        c.pass = exact.degree >= bound && restricted.certified && restricted.solution.value == expected &&
                 full.certified && full.solution.value == expected && uniform;
        c.note = "alpha " + std::to_string(exact.degree) + ", bound " + std::to_string(bound);
        if (!c.pass) {
          Json w;
          w["alpha"] = exact.degree;
          w["alpha_witness"] = to_json(exact.witness);
          w["bound"] = bound;
          w["expected_value"] = to_json(expected);
          w["restricted"] = to_json(restricted.solution, restricted.certified);
          w["full"] = to_json(full.solution, full.certified);
          w["uniform_certified"] = uniform;
          c.witness = std::move(w);
        }
      }));
    }
  });
  return res;
}

inline SuiteResult suite_prop55(const VerifyOptions& o) {
  SuiteResult res{"prop-5.5", grid_of(o, o.n_max, o.t_max), {}, {}};
  for_each_graph(o, o.n_max, [&](const CirculantGraph& g) {
    PowerCache cache(g, o.budget);
    for (int t : t_values(o, o.t_max)) {
      std::vector<int> ss;
      if (o.s) ss = {*o.s};
      else
        for (int s = 1; s <= o.t_max; ++s) ss.push_back(s);
      for (int s : ss) {
        Json params = params_of(g.n(), g.r(), t);
        params["s"] = s;
        res.cells.push_back(guarded("prop-5.5", params, [&](VerifyCell& c) {
          const Prop55Check chk = verify_prop55(cache, t, s);
          const auto fast = alpha_symbolic_exact(g, t).degree;
          const bool fast_agrees = fast == chk.alpha_symbolic && (fast < 2u * s) == !chk.contained;
          c.pass = chk.holds && fast_agrees;
          if (!c.pass) {
            Json w;
            w["alpha_symbolic"] = chk.alpha_symbolic;
            w["alpha_symbolic_search"] = fast;
            w["alpha_power"] = chk.alpha_power;
            w["contained"] = chk.contained;
            w["generator"] = chk.witness ? to_json(*chk.witness) : Json(nullptr);
            c.witness = std::move(w);
          }
        }));
      }
    }
  });
  return res;
}

inline SuiteResult suite_thm58(const VerifyOptions& o) {
  SuiteResult res{"thm-5.8", grid_of(o, o.graph_n_max, std::nullopt), {}, {}};
  res.grid["trace_n_max"] = o.n_max;
  for_each_graph(o, o.graph_n_max, [&](const CirculantGraph& g) {
    res.cells.push_back(guarded("thm-5.8", params_of(g.n(), g.r()), [&](VerifyCell& c) {
      const auto chi = fractional_chromatic_lp(g);
      const Rational chi_expected = Rational(g.n()) / Rational(g.r() + 1);
      const Rational w = waldschmidt(g.n(), g.r());
      bool ok = chi.certified && chi.value == chi_expected && waldschmidt_from_chromatic(chi.value) == w &&
                w == Rational(g.n()) / Rational(g.cover_size());
      Json wit;
      wit["chi"] = to_json(chi.value);
      wit["chi_certified"] = chi.certified;
      wit["waldschmidt"] = to_json(w);
      if (g.n() <= o.n_max) {
        const int k = g.cover_size();
        const auto trace = waldschmidt_trace(g, k);
        ok = ok && trace.back().ratio == w;
        wit["trace_at_cover_size"] = to_json(trace.back().ratio);
      }
      c.pass = ok;
      c.note = "chi* " + to_string(chi.value) + ", waldschmidt " + to_string(w);
      if (!ok) c.witness = std::move(wit);
    }));
  });
  return res;
}

inline SuiteResult suite_thm59(const VerifyOptions& o) {
  SuiteResult res{"thm-5.9", grid_of(o, o.n_max, std::nullopt), {}, {}};
  res.grid["s_window"] = o.s_window;
  res.grid["t_window"] = o.t_window;
  res.grid["cross_st_max"] = o.cross_st_max;
  for_each_graph(o, o.n_max, [&](const CirculantGraph& g) {
    res.cells.push_back(guarded("thm-5.9", params_of(g.n(), g.r()), [&](VerifyCell& c) {
      const auto rep = resurgence_estimate(g, o.s_window, o.t_window, {o.n_max, o.cross_st_max}, o.budget);
      bool ok = rep.sound() && rep.closed_form == resurgence_from_waldschmidt(g.n(), g.r());
      // Symbolic and ordinary powers agree for the bipartite members, so a
      // pair fails exactly when s < t.
      const bool bipartite = g.n() % 2 == 0 && g.r() == g.n() / 2 - 1;
      std::optional<ResurgencePair> bad;
      for (const auto& p : rep.tested_pairs) {
        if ((!p.contained && !(p.ratio < rep.closed_form)) || (p.brute_force && *p.brute_force != p.contained) ||
            (bipartite && p.contained != (p.s >= p.t))) {
          bad = p;
          break;
        }
      }
      ok = ok && !bad;
      c.pass = ok;
      c.note = "closed form " + to_string(rep.closed_form) + ", max failing " +
               (rep.max_failing_ratio ? to_string(*rep.max_failing_ratio) : std::string("none"));
      if (!ok) {
        Json w;
        w["closed_form"] = to_json(rep.closed_form);
        if (bad) w["pair"] = {bad->s, bad->t};
        w["cross_check_disagreements"] = rep.cross_check_disagreements;
        c.witness = std::move(w);
      }
    }));
  });
  return res;
}

inline SuiteResult suite_graph_lemmas(const VerifyOptions& o) {
  SuiteResult res{"graph-lemmas", grid_of(o, o.graph_n_max, std::nullopt), {}, {}};
  for_each_graph(o, o.graph_n_max, [&](const CirculantGraph& g) {
    const int n = g.n();
    const int r = g.r();
    const auto sets = maximal_independent_sets(g);
    const bool unmixed = is_unmixed(g);

    res.cells.push_back(guarded("lem-3.4", params_of(n, r), [&](VerifyCell& c) {
      for (const auto& s : sets)
        if (static_cast<int>(s.size()) > r + 1) {
          c.pass = false;
          c.witness = to_json(s);
          return;
        }
      for (int start = 1; start <= n; ++start) {
        VertexSet window;
        for (int k = 0; k <= r; ++k) window.members.push_back((start - 1 + k) % n + 1);
        std::sort(window.members.begin(), window.members.end());
        if (std::find(sets.begin(), sets.end(), window) == sets.end()) {
          c.pass = false;
          c.witness = to_json(window);
          return;
        }
      }
      c.pass = independence_number(g) == r + 1;
    }));

    // A maximal independent set smaller than r+1 exists exactly when the graph
    // is not unmixed; such a set is never consecutive.
    res.cells.push_back(guarded("cor-3.6", params_of(n, r), [&](VerifyCell& c) {
      std::optional<VertexSet> small;
      for (const auto& s : sets)
        if (static_cast<int>(s.size()) <= r) {
          small = s;
          break;
        }
      c.pass = small.has_value() == !unmixed && (!small || !is_cyclically_consecutive(*small, n));
      if (small) c.witness = to_json(*small);
      if (unmixed) {
        for (const auto& s : sets)
          if (!is_cyclically_consecutive(s, n)) {
            res.observations.push_back("G(" + std::to_string(n) + "," + std::to_string(r) +
                                       ") is unmixed but has the non-consecutive maximal independent set " +
                                       to_json(s).dump());
            break;
          }
      }
    }));

    if (r == 1 || r == 2)
      res.cells.push_back(guarded("lem-3.8", params_of(n, r), [&](VerifyCell& c) { c.pass = unmixed; }));

    if (n == 11 && r == 4)
      res.cells.push_back(guarded("ex-3.9", params_of(n, r), [&](VerifyCell& c) {
        const VertexSet w{{3, 6, 7, 10}};
        const bool listed = std::find(sets.begin(), sets.end(), w) != sets.end();
        c.pass = !unmixed && listed;
        c.witness = to_json(w);
      }));

    if ((r == 1 && n >= 5) || (r == 2 && n >= 9))
      res.cells.push_back(guarded("lem-3.10", params_of(n, r), [&](VerifyCell& c) {
        const GapCheck gc = check_gap_free(g);
        c.pass = gc.gap_free;
        if (gc.witness)
          c.witness = Json::array({{gc.witness->first.u, gc.witness->first.v},
                                   {gc.witness->second.u, gc.witness->second.v}});
      }));

    res.cells.push_back(guarded("lem-5.3", params_of(n, r), [&](VerifyCell& c) {
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          const auto perm = shift_automorphism(g, i, j);
          if (perm[static_cast<std::size_t>(i - 1)] != j || !preserves_edges(g, perm)) {
            c.pass = false;
            c.witness = Json::array({i, j});
            return;
          }
        }
    }));
  });
  return res;
}

}  // namespace detail

inline SuiteResult run_suite(const std::string& name, const VerifyOptions& o) {
  if (name == "thm-4.1") return detail::suite_thm41(o);
  if (name == "lem-4.2") return detail::suite_lem42(o);
  if (name == "lem-4.3") return detail::suite_lem43(o);
  if (name == "thm-4.6") return detail::suite_thm46(o);
  if (name == "lem-5.6") return detail::suite_lem56(o);
  if (name == "prop-5.5") return detail::suite_prop55(o);
  if (name == "thm-5.8") return detail::suite_thm58(o);
  if (name == "thm-5.9") return detail::suite_thm59(o);
  if (name == "graph-lemmas") return detail::suite_graph_lemmas(o);
  throw parameter_error("unknown suite '" + name + "'");
}

/// "all" expands to every suite in a fixed order.
inline std::vector<SuiteResult> run_suites(const std::string& name, const VerifyOptions& o) {
  std::vector<SuiteResult> out;
  if (name == "all") {
    for (const auto& s : suite_names()) out.push_back(run_suite(s, o));
  } else {
    out.push_back(run_suite(name, o));
  }
  return out;
}

}  // namespace spl
