#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"
#include "spl/monomial_ideal.hpp"

using namespace spl;

namespace {

MonomialIdeal ideal(std::size_t n, std::vector<Monomial> gens) { return minimalize(n, std::move(gens)); }

std::vector<oracle::Vec> as_vecs(const MonomialIdeal& I) {
  std::vector<oracle::Vec> out;
  for (const auto& g : I.generators()) out.push_back(g.exponents());
  return out;
}

}  // namespace

TEST(Monomial, WireFormatRoundTrip) {
  const Monomial m = Monomial::parse("3,4,1,1,3");
  EXPECT_EQ(m, (Monomial{3, 4, 1, 1, 3}));
  EXPECT_EQ(m.to_string(), "3,4,1,1,3");
  EXPECT_EQ(m.degree(), 12u);
  EXPECT_EQ(Monomial({2, 0, 1}).pretty(), "x1^2*x3");
  EXPECT_EQ(Monomial({0, 0}).pretty(), "1");
  EXPECT_THROW(Monomial::parse("1,,2"), parameter_error);
  EXPECT_THROW(Monomial::parse("1,-2"), parameter_error);
  EXPECT_THROW(Monomial::parse("a"), parameter_error);
}

TEST(Monomial, ArithmeticAndWeights) {
  const Monomial a{2, 0, 1, 3};
  const Monomial b{1, 1, 0, 3};
  EXPECT_EQ(lcm(a, b), (Monomial{2, 1, 1, 3}));
  EXPECT_EQ(gcd(a, b), (Monomial{1, 0, 0, 3}));
  EXPECT_EQ(a * b, (Monomial{3, 1, 1, 6}));
  EXPECT_TRUE(gcd(a, b).divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ(quotient(a, Monomial({1, 0, 1, 0})), (Monomial{1, 0, 0, 3}));
  EXPECT_EQ(a.weight(VertexSet{{1, 4}}), 5u);
  EXPECT_THROW(a * Monomial({1, 1}), parameter_error);
}

TEST(Monomial, OverflowIsDetected) {
  Monomial big{std::numeric_limits<Exponent>::max()};
  EXPECT_THROW(big *= Monomial{1}, overflow_error);
}

TEST(Monomial, CanonicalOrderIsDegreeThenLexDescending) {
  std::vector<Monomial> v{{0, 1, 1}, {2, 0, 0}, {1, 0, 1}, {1, 0, 0}, {1, 1, 0}};
  std::sort(v.begin(), v.end(), CanonicalLess{});
  EXPECT_EQ(v, (std::vector<Monomial>{{1, 0, 0}, {2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
}

TEST(Monomial, DegreeEnumerationIsCompleteAndCanonical) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::uint64_t d = 0; d <= 4; ++d) {
      std::vector<Monomial> seen;
      for_each_monomial_of_degree(n, d, static_cast<Exponent>(d), [&](const Monomial& m) { seen.push_back(m); });
      std::vector<oracle::Vec> expect;
      oracle::for_each_in_box(static_cast<int>(n), static_cast<std::uint32_t>(d), [&](const oracle::Vec& a) {
        if (oracle::degree(a) == d) expect.push_back(a);
      });
      oracle::canonical_sort(expect);
      ASSERT_EQ(seen.size(), expect.size());
      for (std::size_t k = 0; k < seen.size(); ++k) EXPECT_EQ(seen[k].exponents(), expect[k]);
    }
}

TEST(MonomialIdeal, Minimalize) {
  EXPECT_EQ(ideal(2, {{1, 1}, {2, 1}}).generators(), (std::vector<Monomial>{{1, 1}}));
  EXPECT_EQ(ideal(2, {{1, 0}, {0, 1}, {1, 1}}).generators(), (std::vector<Monomial>{{1, 0}, {0, 1}}));
  EXPECT_TRUE(ideal(2, {}).is_zero());
  EXPECT_EQ(ideal(2, {{1, 1}, {1, 1}}).size(), 1u);
}

TEST(MonomialIdeal, EdgeIdealExamples) {
  EXPECT_EQ(edge_ideal(CirculantGraph(3, 0)), ideal(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(edge_ideal(CirculantGraph(5, 1)),
            ideal(5, {{1, 0, 1, 0, 0}, {1, 0, 0, 1, 0}, {0, 1, 0, 1, 0}, {0, 1, 0, 0, 1}, {0, 0, 1, 0, 1}}));
  EXPECT_EQ(edge_ideal(CirculantGraph(6, 2)), ideal(6, {{1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}}));
  for (int n = 2; n <= 12; ++n)
    for (int r = 0; r <= n / 2 - 1; ++r)
      EXPECT_EQ(edge_ideal(CirculantGraph(n, r)).size(), static_cast<std::size_t>(n * (n - 1 - 2 * r) / 2));
}

TEST(MonomialIdeal, PowerOfTriangle) {
  const MonomialIdeal I = edge_ideal(CirculantGraph(3, 0));
  const MonomialIdeal I2 = power(I, 2);
  EXPECT_EQ(I2, ideal(3, {{2, 2, 0}, {2, 1, 1}, {2, 0, 2}, {1, 2, 1}, {1, 1, 2}, {0, 2, 2}}));
  EXPECT_EQ(power(I, 1), I);
  EXPECT_THROW(power(I, 0), parameter_error);
}

TEST(MonomialIdeal, PowersMatchProductOracle) {
  for (int n = 2; n <= 7; ++n)
    for (int r = 0; r <= n / 2 - 1; ++r)
      for (int t = 1; t <= 3; ++t) {
        const auto P = power(edge_ideal(CirculantGraph(n, r)), t);
        EXPECT_EQ(as_vecs(P), oracle::power_generators(n, r, t)) << n << "," << r << "," << t;
        EXPECT_EQ(alpha(P), static_cast<std::uint64_t>(2 * t));
      }
}

TEST(MonomialIdeal, Intersections) {
  EXPECT_EQ(intersect(ideal(2, {{1, 0}}), ideal(2, {{0, 1}})), ideal(2, {{1, 1}}));
  EXPECT_EQ(intersect(ideal(2, {{1, 1}}), ideal(2, {{1, 1}})), ideal(2, {{1, 1}}));
  EXPECT_EQ(intersect(ideal(3, {{1, 0, 0}, {0, 1, 0}}), ideal(3, {{0, 1, 0}, {0, 0, 1}})),
            ideal(3, {{0, 1, 0}, {1, 0, 1}}));
  EXPECT_THROW(intersect(ideal(2, {{1, 0}}), ideal(3, {{1, 0, 0}})), parameter_error);
}

TEST(MonomialIdeal, IntersectWithPrimePowerMatchesGeneralIntersection) {
  const MonomialIdeal J = edge_ideal(CirculantGraph(6, 1));
  for (int m = 1; m <= 3; ++m)
    for (const auto& V : minimal_vertex_covers(CirculantGraph(6, 1)))
      EXPECT_EQ(intersect_with_prime_power(J, V, m), intersect(J, prime_power(6, V, m)));
}

TEST(MonomialIdeal, MembershipAndContainment) {
  const MonomialIdeal I = edge_ideal(CirculantGraph(5, 1));
  EXPECT_TRUE(I.contains(Monomial{1, 1, 1, 0, 0}));
  EXPECT_FALSE(I.contains(Monomial{1, 1, 0, 0, 0}));
  EXPECT_TRUE(is_subset(power(I, 2), I));
  EXPECT_FALSE(is_subset(I, power(I, 2)));
  const auto w = find_uncontained(I, power(I, 2));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, I.generators().front());
  EXPECT_FALSE(MonomialIdeal::unit(3).is_zero());
  EXPECT_EQ(alpha(MonomialIdeal::unit(3)), 0u);
}

// Divisibility containment agrees with monomial-by-monomial membership.
TEST(MonomialIdeal, ContainmentAgreesWithPointwiseMembership) {
  const MonomialIdeal I = edge_ideal(CirculantGraph(5, 1));
  const MonomialIdeal S2 = symbolic_power(CirculantGraph(5, 1), 2);
  const MonomialIdeal P2 = power(I, 2);
  bool pointwise = true;
  for_each_monomial_in_box(5, 3, [&](const Monomial& m) {
    if (S2.contains(m) && !P2.contains(m)) pointwise = false;
  });
  EXPECT_EQ(is_subset(S2, P2), pointwise);
}

TEST(MonomialIdeal, Alpha) {
  EXPECT_THROW(alpha(MonomialIdeal(3)), zero_ideal_error);
  EXPECT_EQ(alpha(edge_ideal(CirculantGraph(7, 2))), 2u);
  EXPECT_EQ(alpha(symbolic_power(CirculantGraph(5, 1), 3)), 5u);
}

TEST(SymbolicPower, Examples) {
  const CirculantGraph g(5, 1);
  EXPECT_EQ(symbolic_power(g, 1), edge_ideal(g));
  EXPECT_TRUE(symbolic_power(g, 3).contains(Monomial{1, 1, 1, 1, 1}));
  EXPECT_NE(std::find(symbolic_power(g, 3).generators().begin(), symbolic_power(g, 3).generators().end(),
                      Monomial({1, 1, 1, 1, 1})),
            symbolic_power(g, 3).generators().end());
  const CirculantGraph b(6, 2);
  for (int m = 1; m <= 3; ++m) EXPECT_EQ(symbolic_power(b, m), power(edge_ideal(b), m));
  EXPECT_THROW(symbolic_power(g, 0), parameter_error);
}

TEST(SymbolicPower, MemberSymbolicExamples) {
  const CirculantGraph g(5, 1);
  EXPECT_TRUE(member_symbolic(Monomial{1, 1, 1, 1, 1}, g, 3));
  EXPECT_FALSE(member_symbolic(Monomial{1, 1, 0, 0, 0}, g, 1));
  EXPECT_TRUE(member_symbolic(Monomial{2, 0, 2, 0, 0}, g, 2));
}

// Intersection of prime powers against the box search over the weight criterion.
TEST(SymbolicPower, MatchesWeightCriterionOracle) {
  for (int n = 2; n <= 7; ++n)
    for (int r = 0; r <= n / 2 - 1; ++r)
      for (int m = 1; m <= 3; ++m) {
        const CirculantGraph g(n, r);
        EXPECT_EQ(as_vecs(symbolic_power(g, m)), oracle::symbolic_generators(n, r, m)) << n << "," << r << "," << m;
      }
}

TEST(SymbolicPower, ContainsOrdinaryPower) {
  for (int n = 4; n <= 7; ++n)
    for (int r = 0; r <= n / 2 - 1; ++r)
      for (int m = 1; m <= 3; ++m) {
        const CirculantGraph g(n, r);
        EXPECT_TRUE(is_subset(power(edge_ideal(g), m), symbolic_power(g, m)));
      }
}

TEST(SymbolicPower, BudgetIsEnforced) {
  Budget tiny;
  tiny.max_generators = 10;
  try {
    (void)symbolic_power(CirculantGraph(7, 0), 3, tiny);
    FAIL() << "expected a scale-limit error";
  } catch (const scale_limit_error& e) {
    EXPECT_EQ(e.limit(), 10u);
    EXPECT_GT(e.projected(), 10u);
  }
  EXPECT_THROW(power(edge_ideal(CirculantGraph(7, 0)), 3, tiny), scale_limit_error);
}
