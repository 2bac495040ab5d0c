// spl: command-line front end for the G(n,r) edge-ideal toolkit.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "spl/asymptotics.hpp"
#include "spl/circulant_graph.hpp"
#include "spl/ideal_powers.hpp"
#include "spl/lp_invariants.hpp"
#include "spl/optimal_form.hpp"
#include "spl/regularity.hpp"
#include "spl/serialize.hpp"
#include "spl/verify.hpp"

namespace {

constexpr int exit_usage = 64;
constexpr int exit_scale = 2;
constexpr int exit_verify = 1;

struct Common {
  int n = 0;
  int r = 0;
  int t = 1;
  bool json = false;
  bool csv = false;
  bool power = false;
  bool symbolic = false;
  std::string monomial;
  std::optional<std::size_t> budget_gens;
  std::optional<unsigned long long> seed;
};

spl::Budget budget_of(const Common& c) {
  spl::Budget b = spl::default_budget();
  if (c.budget_gens) b.max_generators = *c.budget_gens;
  return b;
}

void print(const spl::Json& j) { std::cout << j.dump(2) << '\n'; }

std::string pair_list(const spl::EdgeList& edges) {
  std::string out;
  for (const auto& e : edges) out += (out.empty() ? "" : " ") + std::to_string(e.u) + "-" + std::to_string(e.v);
  return out;
}

std::string set_text(const spl::VertexSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.members.size(); ++k) out += (k ? "," : "") + std::to_string(s.members[k]);
  return out + "}";
}

int cmd_graph(const Common& c) {
  const spl::CirculantGraph g(c.n, c.r);
  if (c.json) {
    print(spl::with_schema(spl::to_json(g)));
    return 0;
  }
  std::cout << "G(" << g.n() << "," << g.r() << ")\n";
  std::cout << "edges (" << g.edges().size() << "): " << pair_list(g.edges()) << '\n';
  const auto covers = spl::minimal_vertex_covers(g);
  std::cout << "minimal vertex covers (" << covers.size() << "):";
  for (const auto& v : covers) std::cout << ' ' << set_text(v);
  std::cout << '\n';
  std::cout << "unmixed: " << (spl::is_unmixed(g) ? "true" : "false") << '\n';
  const auto gap = spl::check_gap_free(g);
  std::cout << "gap_free: " << (gap.gap_free ? "true" : "false");
  if (gap.witness)
    std::cout << " (induced 2K2 on " << gap.witness->first.u << "-" << gap.witness->first.v << ", "
              << gap.witness->second.u << "-" << gap.witness->second.v << ")";
  std::cout << '\n';
  std::cout << "independence_number: " << spl::independence_number(g) << '\n';
  return 0;
}

int cmd_ideal(const Common& c) {
  spl::PowerCache cache(spl::CirculantGraph(c.n, c.r), budget_of(c));
  const spl::MonomialIdeal& I = c.symbolic ? cache.symbolic(c.t) : cache.ordinary(c.t);
  if (c.json) {
    spl::Json j = spl::to_json(I);
    j["kind"] = c.symbolic ? "symbolic" : "power";
    j["t"] = c.t;
    print(spl::with_schema(std::move(j)));
    return 0;
  }
  std::cout << (c.symbolic ? "symbolic power " : "power ") << c.t << ", " << I.size() << " generators, alpha "
            << spl::alpha(I) << '\n';
  for (const auto& m : I.generators()) std::cout << m.to_string() << '\n';
  return 0;
}

int cmd_member(const Common& c) {
  const spl::CirculantGraph g(c.n, c.r);
  const spl::Monomial a = spl::Monomial::parse(c.monomial);
  if (a.size() != static_cast<std::size_t>(g.n()))
    throw spl::parameter_error("monomial has " + std::to_string(a.size()) + " exponents, expected " +
                               std::to_string(g.n()));
  spl::Json j;
  j["monomial"] = spl::to_json(a);
  j["t"] = c.t;
  bool member = false;
  if (c.symbolic) {
    member = spl::member_symbolic(a, g, c.t);
    j["kind"] = "symbolic";
  } else {
    const auto form = spl::optimal_form(a, g.edges());
    member = form.b_value >= static_cast<std::uint64_t>(c.t);
    j["kind"] = "power";
    j["optimal_form"] = spl::to_json(form);
  }
  j["member"] = member;
  if (c.json) {
    print(spl::with_schema(std::move(j)));
  } else {
    std::cout << (member ? "true" : "false") << '\n';
    if (!c.symbolic) std::cout << "b = " << j["optimal_form"]["b"].get<std::uint64_t>() << '\n';
  }
  return 0;
}

int cmd_alpha(const Common& c) {
  const spl::CirculantGraph g(c.n, c.r);
  const auto res = spl::alpha_symbolic_exact(g, c.t);
  const auto bound = spl::alpha_symbolic_lower_bound(c.n, c.r, c.t);
  if (c.json) {
    spl::Json j;
    j["t"] = c.t;
    j["alpha"] = res.degree;
    j["witness"] = spl::to_json(res.witness);
    j["lower_bound"] = bound;
    print(spl::with_schema(std::move(j)));
  } else {
    std::cout << res.degree << '\n';
  }
  return 0;
}

int cmd_lp(const Common& c, bool restricted) {
  const spl::CirculantGraph g(c.n, c.r);
  const auto res = spl::solve_cover_lp(g, c.t, restricted);
  if (c.json) {
    spl::Json j = spl::to_json(res.solution, res.certified);
    j["restricted"] = restricted;
    j["t"] = c.t;
    print(spl::with_schema(std::move(j)));
  } else {
    std::cout << spl::to_string(res.solution.value) << (res.certified ? "" : " (certificate failed)") << '\n';
  }
  return res.certified ? 0 : exit_verify;
}

int cmd_chi(const Common& c) {
  const auto res = spl::fractional_chromatic_lp(spl::CirculantGraph(c.n, c.r));
  if (c.json) {
    spl::Json j;
    j["chi_frac"] = spl::to_json(res.value);
    j["lp"] = spl::to_json(res.solution, res.certified);
    print(spl::with_schema(std::move(j)));
  } else {
    std::cout << spl::to_string(res.value) << '\n';
  }
  return res.certified ? 0 : exit_verify;
}

int cmd_waldschmidt(const Common& c) {
  const spl::Rational w = spl::waldschmidt(c.n, c.r);
  if (c.json) {
    spl::Json j;
    j["n"] = c.n;
    j["r"] = c.r;
    j["waldschmidt"] = spl::to_json(w);
    print(spl::with_schema(std::move(j)));
  } else {
    std::cout << spl::to_string(w) << '\n';
  }
  return 0;
}

int cmd_resurgence(const Common& c, int s_max, int t_max) {
  const auto rep = spl::resurgence_estimate(spl::CirculantGraph(c.n, c.r), s_max, t_max, {}, budget_of(c));
  if (c.csv) {
    std::cout << spl::resurgence_csv(rep);
  } else if (c.json) {
    print(spl::with_schema(spl::to_json(rep)));
  } else {
    std::cout << "closed form " << spl::to_string(rep.closed_form) << '\n';
    std::cout << "max failing ratio "
              << (rep.max_failing_ratio ? spl::to_string(*rep.max_failing_ratio) : std::string("none")) << '\n';
    std::cout << "sound " << (rep.sound() ? "true" : "false") << '\n';
  }
  return rep.sound() ? 0 : exit_verify;
}

int cmd_regularity(const Common& c) {
  spl::PowerCache cache(spl::CirculantGraph(c.n, c.r), budget_of(c));
  const spl::MonomialIdeal& I = c.symbolic ? cache.symbolic(c.t) : cache.ordinary(c.t);
  const spl::BettiTable table = spl::betti_table(I);
  if (c.json) {
    spl::Json j = spl::to_json(table);
    j["kind"] = c.symbolic ? "symbolic" : "power";
    j["t"] = c.t;
    print(spl::with_schema(std::move(j)));
  } else {
    std::cout << table.regularity << '\n';
  }
  return 0;
}

int cmd_verify(const Common& c, const std::string& suite, spl::VerifyOptions opts) {
  opts.budget = budget_of(c);
  const auto results = spl::run_suites(suite, opts);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed();
  if (c.json) {
    spl::Json j;
    spl::Json arr = spl::Json::array();
    for (const auto& r : results) arr.push_back(spl::to_json(r));
    j["suites"] = std::move(arr);
    j["pass"] = ok;
    print(spl::with_schema(std::move(j)));
    return ok ? 0 : exit_verify;
  }
  for (const auto& r : results) {
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.suite << ": " << r.cells.size() << " cells, " << r.failures()
              << " failed, " << r.skipped() << " skipped\n";
    for (const auto& cell : r.cells) {
      if (cell.skipped) std::cout << "  skipped " << cell.lemma << ' ' << cell.params.dump() << ": " << cell.note << '\n';
      if (cell.pass) continue;
      std::cout << "  failed " << cell.lemma << ' ' << cell.params.dump() << " witness " << cell.witness.dump() << '\n';
      std::cout << "    reproduce: " << spl::reproduce_command(r.suite, cell) << '\n';
    }
    for (const auto& note : r.observations) std::cout << "  note: " << note << '\n';
  }
  return ok ? 0 : exit_verify;
}

void report_error(const std::string& kind, const std::string& message, spl::Json extra = spl::Json::object()) {
  spl::Json j;
  j["error"] = kind;
  j["message"] = message;
  for (auto& [k, v] : extra.items()) j[k] = v;
  std::cerr << spl::with_schema(std::move(j)).dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge ideals of the graphs G(n,r): powers, symbolic powers and their invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--budget-gens", c.budget_gens, "Generator budget (overrides SPL_BUDGET_GENS)");
  app.add_option("--seed", c.seed, "Reserved; every computation is deterministic");

  auto graph_opts = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "Number of vertices")->required();
    sub->add_option("--r", c.r, "Gap parameter")->required();
    sub->add_flag("--json", c.json, "JSON output");
  };
  auto kind_opts = [&](CLI::App* sub) {
    auto* p = sub->add_flag("--power", c.power, "Ordinary power (default)");
    auto* s = sub->add_flag("--symbolic", c.symbolic, "Symbolic power");
    p->excludes(s);
  };

  auto* graph = app.add_subcommand("graph", "Edges, covers and structural properties");
  graph_opts(graph);

  auto* ideal = app.add_subcommand("ideal", "Minimal generators of a power or symbolic power");
  graph_opts(ideal);
  ideal->add_option("--t", c.t, "Exponent")->check(CLI::PositiveNumber);
  kind_opts(ideal);

  auto* member = app.add_subcommand("member", "Membership of a monomial in a power or symbolic power");
  graph_opts(member);
  member->add_option("--t", c.t, "Exponent")->check(CLI::PositiveNumber);
  member->add_option("--monomial", c.monomial, "Exponent list a1,a2,...,an")->required();
  kind_opts(member);

  auto* alpha = app.add_subcommand("alpha", "Least degree of the symbolic power");
  graph_opts(alpha);
  alpha->add_option("--t", c.t, "Exponent")->check(CLI::PositiveNumber);

  bool restricted = false;
  auto* lp = app.add_subcommand("lp", "Vertex cover linear program");
  graph_opts(lp);
  lp->add_option("--t", c.t, "Right-hand side")->check(CLI::PositiveNumber);
  lp->add_flag("--restricted", restricted, "Only the covers of consecutive vertices");

  auto* chi = app.add_subcommand("chi-frac", "Fractional chromatic number");
  graph_opts(chi);

  auto* wald = app.add_subcommand("waldschmidt", "Waldschmidt constant of the edge ideal");
  graph_opts(wald);

  int s_max = 12;
  int t_window = 10;
  auto* res = app.add_subcommand("resurgence", "Containment scan and resurgence");
  graph_opts(res);
  res->add_option("--s-max", s_max, "Largest symbolic exponent")->check(CLI::PositiveNumber);
  res->add_option("--t-max", t_window, "Largest ordinary exponent")->check(CLI::PositiveNumber);
  res->add_flag("--csv", c.csv, "CSV output");

  auto* reg = app.add_subcommand("regularity", "Betti table and regularity");
  graph_opts(reg);
  reg->add_option("--t", c.t, "Exponent")->check(CLI::PositiveNumber);
  kind_opts(reg);

  std::string suite = "all";
  spl::VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "Suite name or 'all'")
      ->check(CLI::IsMember([] {
        auto names = spl::suite_names();
        names.push_back("all");
        return names;
      }()));
  verify->add_option("--n-max", vopts.n_max, "Largest n for ideal-level suites")->check(CLI::Range(2, 64));
  verify->add_option("--graph-n-max", vopts.graph_n_max, "Largest n for graph-level suites")->check(CLI::Range(2, 64));
  verify->add_option("--t-max", vopts.t_max, "Largest t")->check(CLI::PositiveNumber);
  verify->add_option("--reg-t-max", vopts.reg_t_max, "Largest t for regularity")->check(CLI::PositiveNumber);
  verify->add_option("--s-window", vopts.s_window, "Resurgence window in s")->check(CLI::PositiveNumber);
  verify->add_option("--t-window", vopts.t_window, "Resurgence window in t")->check(CLI::PositiveNumber);
  verify->add_option("--n", vopts.n, "Only this n");
  verify->add_option("--r", vopts.r, "Only this r");
  verify->add_option("--t", vopts.t, "Only this t")->check(CLI::PositiveNumber);
  verify->add_option("--s", vopts.s, "Only this s")->check(CLI::PositiveNumber);
  verify->add_flag("--json", c.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*graph) return cmd_graph(c);
    if (*ideal) return cmd_ideal(c);
    if (*member) return cmd_member(c);
    if (*alpha) return cmd_alpha(c);
    if (*lp) return cmd_lp(c, restricted);
    if (*chi) return cmd_chi(c);
    if (*wald) return cmd_waldschmidt(c);
    if (*res) return cmd_resurgence(c, s_max, t_window);
    if (*reg) return cmd_regularity(c);
    if (*verify) return cmd_verify(c, suite, vopts);
  } catch (const spl::scale_limit_error& e) {
    report_error("scale_limit", e.what(),
                 spl::Json{{"budget", e.budget()}, {"projected", e.projected()}, {"limit", e.limit()}});
    return exit_scale;
  } catch (const spl::error& e) {
    report_error("usage", e.what());
    return exit_usage;
  }
  return exit_usage;
}
