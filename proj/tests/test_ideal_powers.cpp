#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spl/ideal_powers.hpp"

using namespace spl;

TEST(LDSplit, Examples) {
  const CirculantGraph g(5, 1);
  const LDSplit s2 = ld_split(g, 2);
  EXPECT_TRUE(s2.D_gens.empty());
  const MonomialIdeal S2 = symbolic_power(g, 2);
  for (const auto& h : S2.generators()) EXPECT_GE(h.degree(), 4u);

  const LDSplit s3 = ld_split(g, 3);
  EXPECT_NE(std::find(s3.D_gens.begin(), s3.D_gens.end(), Monomial({1, 1, 1, 1, 1})), s3.D_gens.end());

  for (int n = 2; n <= 8; ++n)
    for (int r = 0; r <= n / 2 - 1; ++r) {
      const LDSplit s1 = ld_split(CirculantGraph(n, r), 1);
      EXPECT_TRUE(s1.D_gens.empty());
      EXPECT_EQ(s1.L_gens, edge_ideal(CirculantGraph(n, r)).generators());
    }
  EXPECT_THROW(ld_split(g, 0), parameter_error);
}

TEST(LDSplit, PartsSatisfyDegreeAndWeightConditions) {
  for (int n = 4; n <= 7; ++n)
    for (int r = 0; r <= n / 2 - 1; ++r) {
      const CirculantGraph g(n, r);
      PowerCache cache(g);
      for (int t = 1; t <= 3; ++t) {
        const LDSplit s = ld_split(cache, t);
        for (const auto& h : s.L_gens) {
          EXPECT_GE(h.degree(), static_cast<std::uint64_t>(2 * t));
          EXPECT_TRUE(member_symbolic(h, cache.covers(), t));
        }
        for (const auto& h : s.D_gens) {
          EXPECT_LE(h.degree(), static_cast<std::uint64_t>(2 * t - 1));
          EXPECT_TRUE(member_symbolic(h, cache.covers(), t));
        }
        std::vector<Monomial> both = s.L_gens;
        both.insert(both.end(), s.D_gens.begin(), s.D_gens.end());
        EXPECT_EQ(minimalize(cache.nvars(), both), cache.symbolic(t));
      }
    }
}

// The ideal of degree >= 2t monomials of I^(t) should be I^t; compared here
// against the product oracle rather than the library's own power.
TEST(LTTheorem, HighDegreePartEqualsOrdinaryPower) {
  for (int n = 2; n <= 7; ++n)
    for (int r = 0; r <= n / 2 - 1; ++r)
      for (int t = 1; t <= 3; ++t) {
        const LDSplit s = ld_split(CirculantGraph(n, r), t);
        std::vector<oracle::Vec> got;
        const MonomialIdeal L = minimalize(static_cast<std::size_t>(n), s.L_gens);
        for (const auto& h : L.generators())
          got.push_back(h.exponents());
        EXPECT_EQ(got, oracle::power_generators(n, r, t)) << n << "," << r << "," << t;
      }
}

TEST(LTTheorem, Examples) {
  for (int t = 1; t <= 3; ++t) EXPECT_TRUE(verify_lt_theorem(CirculantGraph(5, 1), t).pass);
  for (int t = 1; t <= 2; ++t) EXPECT_TRUE(verify_lt_theorem(CirculantGraph(7, 2), t).pass);
  EXPECT_TRUE(verify_lt_theorem(CirculantGraph(11, 4), 2).pass);
}

TEST(DDescription, Examples) {
  const CirculantGraph g(5, 1);
  const auto d3 = d_description_unmixed(g, 3);
  EXPECT_NE(std::find(d3.begin(), d3.end(), Monomial({1, 1, 1, 1, 1})), d3.end());
  EXPECT_TRUE(d_description_unmixed(g, 2).empty());
  EXPECT_THROW(d_description_unmixed(CirculantGraph(11, 4), 2), not_unmixed_error);
}

TEST(DDescription, MatchesLDSplitOnUnmixedGraphs) {
  for (int n = 2; n <= 8; ++n)
    for (int r = 0; r <= n / 2 - 1; ++r) {
      const CirculantGraph g(n, r);
      if (!is_unmixed(g)) continue;
      for (int t = 1; t <= 3; ++t) EXPECT_EQ(d_description_unmixed(g, t), ld_split(g, t).D_gens) << n << "," << r;
    }
}

TEST(ContainsPower, Examples) {
  const CirculantGraph g(5, 1);
  const auto c = contains_power(g, 3, 3);
  EXPECT_FALSE(c.contained);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(*c.witness, (Monomial{1, 1, 1, 1, 1}));
  for (int n = 2; n <= 7; ++n)
    for (int r = 0; r <= n / 2 - 1; ++r) {
      PowerCache cache(CirculantGraph(n, r));
      EXPECT_TRUE(contains_power(cache, 1, 1).contained);
      for (int t = 1; t <= 2; ++t) EXPECT_TRUE(contains_power(cache, 2 * t, t).contained);
    }
  EXPECT_THROW(contains_power(g, 0, 1), parameter_error);
}

// Once I^(s) escapes I^t it escapes every higher ordinary power too.
TEST(ContainsPower, MonotoneInT) {
  for (int n = 4; n <= 7; ++n)
    for (int r = 0; r <= n / 2 - 1; ++r) {
      PowerCache cache(CirculantGraph(n, r));
      for (int s = 1; s <= 3; ++s) {
        bool failed = false;
        for (int t = 1; t <= 4; ++t) {
          const bool c = contains_power(cache, s, t).contained;
          if (failed) EXPECT_FALSE(c) << n << "," << r << " s=" << s << " t=" << t;
          failed = failed || !c;
        }
      }
    }
}

TEST(MaximalIdealContainment, Examples) {
  for (int t = 1; t <= 3; ++t) EXPECT_TRUE(verify_maximal_ideal_containment(CirculantGraph(5, 1), t).pass);
  EXPECT_TRUE(verify_maximal_ideal_containment(CirculantGraph(4, 1), 2).pass);
  EXPECT_TRUE(verify_maximal_ideal_containment(CirculantGraph(11, 4), 1).pass);
}

// Exhaustive check of u*h against the b-value oracle for small n.
TEST(MaximalIdealContainment, AgreesWithOracleOnSmallGraphs) {
  for (int n = 4; n <= 6; ++n)
    for (int r = 0; r <= n / 2 - 1; ++r)
      for (int t = 1; t <= 2; ++t) {
        PowerCache cache(CirculantGraph(n, r));
        bool ok = true;
        for (const auto& h : cache.symbolic(t).generators())
          for_each_monomial_of_degree(cache.nvars(), static_cast<std::uint64_t>(t), static_cast<Exponent>(t),
                                      [&](const Monomial& u) {
                                        if (!oracle::power_member((u * h).exponents(), n, r, t)) ok = false;
                                      });
        EXPECT_EQ(verify_maximal_ideal_containment(cache, t).pass, ok);
        EXPECT_TRUE(ok);
      }
}

TEST(Prop55, Examples) {
  const auto a = verify_prop55(CirculantGraph(5, 1), 3, 3);
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(a.alpha_symbolic, 5u);
  EXPECT_EQ(a.alpha_power, 6u);
  EXPECT_FALSE(a.contained);

  const auto b = verify_prop55(CirculantGraph(5, 1), 6, 5);
  EXPECT_TRUE(b.holds);
  EXPECT_EQ(b.alpha_symbolic, 10u);
  EXPECT_TRUE(b.contained);

  for (int n = 2; n <= 8; ++n)
    for (int r = 0; r <= n / 2 - 1; ++r) {
      const auto c = verify_prop55(CirculantGraph(n, r), 1, 1);
      EXPECT_TRUE(c.holds);
      EXPECT_TRUE(c.contained);
    }
}

TEST(PowerCache, MemoizesAndValidates) {
  PowerCache cache(CirculantGraph(5, 1));
  const MonomialIdeal* first = &cache.ordinary(2);
  EXPECT_EQ(first, &cache.ordinary(2));
  EXPECT_EQ(cache.ordinary(1), cache.edge_ideal_of());
  EXPECT_THROW(cache.ordinary(0), parameter_error);
  EXPECT_THROW(cache.symbolic(0), parameter_error);
}
