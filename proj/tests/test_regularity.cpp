#include <gtest/gtest.h>

#include "spl/regularity.hpp"

using namespace spl;

namespace {

MonomialIdeal ideal(std::size_t n, std::vector<Monomial> gens) { return minimalize(n, std::move(gens)); }

}  // namespace

// Calibration: a principal ideal has only beta_0; two coprime quadrics have
// beta_0 = 2 in degree 2 and beta_1 = 1 in degree 4.
TEST(Betti, CalibrationPrincipal) {
  const BettiTable t = betti_table(ideal(2, {{1, 1}}));
  ASSERT_EQ(t.entries.size(), 1u);
  EXPECT_EQ(t.entries[0].i, 0);
  EXPECT_EQ(t.entries[0].multidegree, (Monomial{1, 1}));
  EXPECT_EQ(t.entries[0].beta, 1u);
  EXPECT_EQ(t.regularity, 2);
}

TEST(Betti, CalibrationCoprimeQuadrics) {
  const BettiTable t = betti_table(ideal(4, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
  EXPECT_EQ(t.graded(0, 2), 2u);
  EXPECT_EQ(t.graded(1, 4), 1u);
  EXPECT_EQ(t.beta(1, Monomial{1, 1, 1, 1}), 1u);
  EXPECT_EQ(t.entries.size(), 3u);
  EXPECT_EQ(t.projective_dimension(), 1);
  EXPECT_EQ(t.regularity, 3);
}

TEST(Betti, KnownIdeals) {
  EXPECT_EQ(regularity_of(edge_ideal(CirculantGraph(3, 0))), 2);
  EXPECT_EQ(regularity_of(edge_ideal(CirculantGraph(4, 0))), 2);
  EXPECT_EQ(regularity_of(edge_ideal(CirculantGraph(5, 1))), 3);
  EXPECT_EQ(regularity_of(ideal(3, {{1, 1, 0}})), 2);
  // The maximal ideal in three variables: Koszul complex, beta_i = C(3, i+1).
  const BettiTable k = betti_table(ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(k.graded(0, 1), 3u);
  EXPECT_EQ(k.graded(1, 2), 3u);
  EXPECT_EQ(k.graded(2, 3), 1u);
  EXPECT_EQ(k.regularity, 1);
  // The unit ideal is free of rank one.
  const BettiTable u = betti_table(MonomialIdeal::unit(2));
  ASSERT_EQ(u.entries.size(), 1u);
  EXPECT_EQ(u.regularity, 0);
  EXPECT_THROW(betti_table(MonomialIdeal(2)), zero_ideal_error);
}

TEST(Betti, FiveCycleTotals) {
  // C5: 1 -> 5 -> 5 -> R^5 -> I with beta_2 in degree 5.
  const BettiTable t = betti_table(edge_ideal(CirculantGraph(5, 1)));
  EXPECT_EQ(t.graded(0, 2), 5u);
  EXPECT_EQ(t.graded(1, 3), 5u);
  EXPECT_EQ(t.graded(2, 5), 1u);
  EXPECT_EQ(t.projective_dimension(), 2);
}

TEST(Betti, BetaZeroCountsGenerators) {
  for (int n = 4; n <= 7; ++n)
    for (int r = 0; r <= n / 2 - 1; ++r) {
      PowerCache cache(CirculantGraph(n, r));
      for (const MonomialIdeal* I : {&cache.edge_ideal_of(), &cache.symbolic(2)}) {
        const BettiTable t = betti_table(*I);
        std::size_t beta0 = 0;
        for (const auto& e : t.entries)
          if (e.i == 0) {
            beta0 += e.beta;
            EXPECT_EQ(e.beta, 1u);
            EXPECT_TRUE(std::find(I->generators().begin(), I->generators().end(), e.multidegree) !=
                        I->generators().end());
          }
        EXPECT_EQ(beta0, I->size());
      }
    }
}

// Upper Koszul complexes against the Taylor complex, entry by entry.
TEST(Betti, TwoMethodsAgree) {
  std::size_t compared = 0;
  for (int n = 3; n <= 7; ++n)
    for (int r = 0; r <= n / 2 - 1; ++r) {
      PowerCache cache(CirculantGraph(n, r));
      for (int t = 1; t <= 3; ++t)
        for (const MonomialIdeal* I : {&cache.ordinary(t), &cache.symbolic(t)}) {
          if (I->size() > 10) continue;
          EXPECT_EQ(betti_table(*I), betti_table_taylor(*I)) << n << "," << r << "," << t;
          ++compared;
        }
    }
  EXPECT_GE(compared, 20u);
  const MonomialIdeal mixed = ideal(4, {{2, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 2}, {0, 0, 2, 1}, {1, 1, 1, 1}});
  EXPECT_EQ(betti_table(mixed), betti_table_taylor(mixed));
}

// Alternating sum of Betti numbers at each multidegree equals the reduced
// Euler characteristic of the Taylor cells with that lcm.
TEST(Betti, EulerCharacteristicPerMultidegree) {
  const MonomialIdeal I = power(edge_ideal(CirculantGraph(5, 1)), 2);
  const BettiTable t = betti_table(I);
  const auto& g = I.generators();
  std::map<std::vector<Exponent>, long long> euler;
  for (std::uint64_t S = 1; S < (std::uint64_t{1} << g.size()); ++S) {
    Monomial m(5);
    for (std::size_t k = 0; k < g.size(); ++k)
      if (S & (std::uint64_t{1} << k)) m = lcm(m, g[k]);
    euler[m.exponents()] += (std::popcount(S) % 2 == 1) ? 1 : -1;
  }
  std::map<std::vector<Exponent>, long long> alt;
  for (const auto& e : t.entries) alt[e.multidegree.exponents()] += (e.i % 2 == 0 ? 1 : -1) * static_cast<long long>(e.beta);
  for (auto& [k, v] : euler)
    EXPECT_EQ(v, alt.count(k) ? alt[k] : 0);
}

TEST(Betti, PowersHaveRegularityAtLeastTwoT) {
  for (int n = 4; n <= 6; ++n)
    for (int r = 0; r <= n / 2 - 1; ++r)
      for (int t = 1; t <= 2; ++t)
        EXPECT_GE(regularity_of(power(edge_ideal(CirculantGraph(n, r)), t)), 2 * t);
}

TEST(Betti, BudgetsAreEnforced) {
  BettiBudget tight;
  tight.max_generators = 3;
  EXPECT_THROW(betti_table(edge_ideal(CirculantGraph(5, 1)), tight), scale_limit_error);
  BettiBudget taylor;
  taylor.max_taylor_generators = 4;
  EXPECT_THROW(betti_table_taylor(edge_ideal(CirculantGraph(5, 1)), taylor), scale_limit_error);
  BettiBudget lattice;
  lattice.max_lattice = 8;
  EXPECT_THROW(betti_table(edge_ideal(CirculantGraph(5, 1)), lattice), scale_limit_error);
}

TEST(Minh, Examples) {
  const auto a = verify_minh(CirculantGraph(5, 1), 1);
  EXPECT_TRUE(a.equal());
  EXPECT_EQ(*a.reg_power, 3);
  const auto b = verify_minh(CirculantGraph(5, 1), 2);
  EXPECT_TRUE(b.completed());
  EXPECT_TRUE(b.equal());
  for (int t = 1; t <= 2; ++t) EXPECT_TRUE(verify_minh(CirculantGraph(6, 2), t).equal());
}

TEST(Minh, BudgetProducesSkippedReport) {
  BettiBudget tight;
  tight.max_generators = 6;
  const auto rep = verify_minh(CirculantGraph(5, 1), 2, tight);
  EXPECT_FALSE(rep.completed());
  EXPECT_TRUE(rep.skipped.has_value());
}
