#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spl/monomial_ideal.hpp"
#include "spl/optimal_form.hpp"

using namespace spl;

namespace {

std::vector<std::pair<int, int>> pairs_of(const EdgeList& e) {
  std::vector<std::pair<int, int>> out;
  for (const auto& x : e) out.emplace_back(x.u, x.v);
  return out;
}

// Every vertex's exponent is split exactly between ancillary and edge use.
void expect_accounting(const Monomial& a, const OptimalForm& f) {
  std::vector<std::uint64_t> used(a.size(), 0);
  std::uint64_t total = 0;
  for (const auto& [e, m] : f.edge_multiplicities) {
    EXPECT_GT(m, 0u);
    used[static_cast<std::size_t>(e.u - 1)] += m;
    used[static_cast<std::size_t>(e.v - 1)] += m;
    total += m;
  }
  for (const auto& [v, m] : f.ancillaries) {
    EXPECT_GT(m, 0u);
    used[static_cast<std::size_t>(v - 1)] += m;
  }
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(used[i], a[i]) << "vertex " << i + 1;
  EXPECT_EQ(total, f.b_value);
}

}  // namespace

TEST(OptimalForm, CycleExample) {
  const Monomial a{3, 4, 1, 1, 3};
  const EdgeList c5 = cycle_edges(5);
  EXPECT_EQ(c5, (EdgeList{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}));
  EXPECT_EQ(b_value(a, c5), 5u);
  const OptimalForm f = optimal_form(a, c5);
  EXPECT_EQ(f.b_value, 5u);
  expect_accounting(a, f);
}

TEST(OptimalForm, TrivialCases) {
  const CirculantGraph g(5, 1);
  EXPECT_EQ(b_value(Monomial{1, 0, 1, 0, 0}, g.edges()), 1u);
  EXPECT_EQ(b_value(Monomial{4, 0, 0, 0, 0}, g.edges()), 0u);
  const OptimalForm zero = optimal_form(Monomial(5), g.edges());
  EXPECT_EQ(zero.b_value, 0u);
  EXPECT_TRUE(zero.edge_multiplicities.empty());
  EXPECT_TRUE(zero.ancillaries.empty());

  const OptimalForm f = optimal_form(Monomial{1, 1, 1, 1, 1}, g.edges());
  EXPECT_EQ(f.b_value, 2u);
  EXPECT_EQ(f.ancillaries.size(), 1u);
  expect_accounting(Monomial{1, 1, 1, 1, 1}, f);
}

TEST(OptimalForm, WitnessIsLexSmallestOptimum) {
  // Optima for x1x2x3x4x5 on G(5,1) are pairs of disjoint edges; over the edge
  // order 13,14,24,25,35 the smallest multiplicity vector is 24 + 35.
  const CirculantGraph g(5, 1);
  const OptimalForm f = optimal_form(Monomial{1, 1, 1, 1, 1}, g.edges());
  std::vector<Exponent> mult(g.edges().size(), 0);
  for (const auto& [e, m] : f.edge_multiplicities)
    mult[static_cast<std::size_t>(std::find(g.edges().begin(), g.edges().end(), e) - g.edges().begin())] = m;
  EXPECT_EQ(mult, (std::vector<Exponent>{0, 0, 1, 0, 1}));
}

TEST(OptimalForm, MemberPowerViaB) {
  const CirculantGraph g(5, 1);
  EXPECT_TRUE(member_power_via_b(Monomial{1, 1, 1, 1, 1}, g, 2));
  EXPECT_FALSE(member_power_via_b(Monomial{1, 1, 1, 1, 1}, g, 3));
  for (const auto& e : g.edges()) EXPECT_TRUE(member_power_via_b(Monomial::edge(5, e), g, 1));
  EXPECT_TRUE(member_power_via_b(Monomial{2, 2, 0}, CirculantGraph(3, 0), 2));
}

TEST(OptimalForm, AgreesWithExhaustiveSearch) {
  for (int n = 2; n <= 7; ++n)
    for (int r = 0; r <= n / 2 - 1; ++r) {
      const CirculantGraph g(n, r);
      const auto edges = pairs_of(g.edges());
      for_each_monomial_in_box(static_cast<std::size_t>(n), 2, [&](const Monomial& a) {
        const OptimalForm f = optimal_form(a, g.edges());
        ASSERT_EQ(f.b_value, oracle::b_value(a.exponents(), edges)) << a.to_string();
        expect_accounting(a, f);
      });
    }
  for_each_monomial_in_box(5, 4, [&](const Monomial& a) {
    ASSERT_EQ(b_value(a, cycle_edges(5)), oracle::b_value(a.exponents(), pairs_of(cycle_edges(5))));
  });
}

// b >= t exactly when some generator of I^t divides the monomial.
TEST(OptimalForm, MembershipMatchesPowerGenerators) {
  for (int n = 2; n <= 7; ++n)
    for (int r = 0; r <= n / 2 - 1; ++r) {
      const CirculantGraph g(n, r);
      for (int t = 1; t <= 3; ++t) {
        const MonomialIdeal P = power(edge_ideal(g), t);
        for_each_monomial_in_box(static_cast<std::size_t>(n), 2, [&](const Monomial& a) {
          ASSERT_EQ(member_power_via_b(a, g, t), P.contains(a)) << n << "," << r << "," << t << " " << a.to_string();
        });
      }
    }
}

TEST(OptimalForm, ShiftInvariantSuperadditiveMonotone) {
  const CirculantGraph g(7, 2);
  const auto perm = shift_automorphism(g, 1, 4);
  std::vector<Monomial> samples;
  for_each_monomial_in_box(7, 1, [&](const Monomial& a) { samples.push_back(a); });
  for (const auto& a : samples) {
    Monomial shifted(7);
    for (int k = 1; k <= 7; ++k) shifted[static_cast<std::size_t>(perm[k - 1] - 1)] = a[static_cast<std::size_t>(k - 1)];
    EXPECT_EQ(b_value(a, g.edges()), b_value(shifted, g.edges()));
  }
  for (std::size_t i = 0; i < samples.size(); i += 7)
    for (std::size_t j = 0; j < samples.size(); j += 11) {
      const auto& a = samples[i];
      const auto& c = samples[j];
      const auto ab = b_value(a * c, g.edges());
      EXPECT_GE(ab, b_value(a, g.edges()) + b_value(c, g.edges()));
      EXPECT_GE(ab, b_value(a, g.edges()));
    }
}

TEST(OptimalForm, RejectsMismatchedEdges) {
  EXPECT_THROW(b_value(Monomial{1, 1}, EdgeList{{1, 3}}), index_error);
}
