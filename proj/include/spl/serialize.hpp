#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spl/asymptotics.hpp"
#include "spl/circulant_graph.hpp"
#include "spl/lp.hpp"
#include "spl/monomial.hpp"
#include "spl/monomial_ideal.hpp"
#include "spl/optimal_form.hpp"
#include "spl/rational.hpp"
#include "spl/regularity.hpp"

namespace spl {

/// Insertion-ordered so that output is byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "1";

inline Json with_schema(Json body) {
  Json out;
  out["schema"] = schema_version;
  for (auto& [k, v] : body.items()) out[k] = std::move(v);
  return out;
}

inline Json to_json(const Monomial& m) { return Json(m.exponents()); }

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

inline Json to_json(const VertexSet& s) { return Json(s.members); }

inline Json to_json(const CirculantGraph& g) {
  Json j;
  j["n"] = g.n();
  j["r"] = g.r();
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  Json covers = Json::array();
  for (const auto& c : minimal_vertex_covers(g)) covers.push_back(to_json(c));
  j["covers"] = std::move(covers);
  j["unmixed"] = is_unmixed(g);
  j["gap_free"] = is_gap_free(g);
  j["independence_number"] = independence_number(g);
  return j;
}

inline Json to_json(const MonomialIdeal& I) {
  Json j;
  j["n"] = I.nvars();
  Json gens = Json::array();
  for (const auto& g : I.generators()) gens.push_back(to_json(g));
  j["gens"] = std::move(gens);
  return j;
}

inline Json to_json(const OptimalForm& f) {
  Json j;
  j["b"] = f.b_value;
  Json edges = Json::array();
  for (const auto& [e, m] : f.edge_multiplicities) edges.push_back({e.u, e.v, m});
  j["edges"] = std::move(edges);
  Json anc = Json::array();
  for (const auto& [i, m] : f.ancillaries) anc.push_back({i, m});
  j["ancillaries"] = std::move(anc);
  return j;
}

/// "certified" is written only as true, and only when the caller has
/// checked the certificate.
inline Json to_json(const LPSolution& s, bool certified) {
  Json j;
  j["status"] = to_string(s.status);
  j["primal"] = to_json(s.primal_point);
  j["dual"] = to_json(s.dual_point);
  j["value"] = s.status == LPStatus::optimal ? to_json(s.value) : Json(nullptr);
  if (certified) j["certified"] = true;
  return j;
}

inline Json to_json(const BettiTable& t) {
  Json j;
  Json entries = Json::array();
  for (const auto& e : t.entries) {
    Json x;
    x["i"] = e.i;
    x["multidegree"] = to_json(e.multidegree);
    x["beta"] = e.beta;
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  j["reg"] = t.regularity;
  return j;
}

inline Json to_json(const ResurgenceReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["closed_form"] = to_json(rep.closed_form);
  j["max_failing_ratio"] = rep.max_failing_ratio ? to_json(*rep.max_failing_ratio) : Json(nullptr);
  j["sound"] = rep.sound();
  j["cross_checked"] = rep.cross_checked;
  j["cross_check_disagreements"] = rep.cross_check_disagreements;
  Json pairs = Json::array();
  for (const auto& p : rep.tested_pairs) {
    Json x;
    x["s"] = p.s;
    x["t"] = p.t;
    x["contained"] = p.contained;
    x["ratio"] = to_json(p.ratio);
    if (p.brute_force) x["brute_force"] = *p.brute_force;
    pairs.push_back(std::move(x));
  }
  j["tested_pairs"] = std::move(pairs);
  return j;
}

inline Json to_json(const MinhReport& rep) {
  Json j;
  j["t"] = rep.t;
  j["reg_power"] = rep.reg_power ? Json(*rep.reg_power) : Json(nullptr);
  j["reg_symbolic"] = rep.reg_symbolic ? Json(*rep.reg_symbolic) : Json(nullptr);
  j["skipped"] = rep.skipped ? Json(*rep.skipped) : Json(nullptr);
  if (rep.completed() && !rep.equal()) {
    j["power_table"] = to_json(*rep.power_table);
    j["symbolic_table"] = to_json(*rep.symbolic_table);
  }
  return j;
}

}  // namespace spl
