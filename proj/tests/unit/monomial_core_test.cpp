#include "monoclosure/errors.hpp"
#include "monoclosure/monomial_ideal.hpp"
#include "oracles.hpp"
#include "random_ideals.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace monoclosure;
using monoclosure::testing::brute_member;
using monoclosure::testing::brute_minimal;
using monoclosure::testing::degree_box;
using monoclosure::testing::random_ideal;
using monoclosure::testing::sorted;

namespace {

MonomialIdeal ideal2(std::initializer_list<ExponentVector> gens) {
  return MonomialIdeal::from_generators(2, std::vector<ExponentVector>(gens));
}

}  // namespace

TEST(ExponentVector, RejectsNegativeCoordinates) {
  EXPECT_THROW(ExponentVector({1, -1}), PreconditionError);
}

TEST(ExponentVector, DivisibilityIsComponentwise) {
  EXPECT_TRUE(ExponentVector({1, 2}).divides(ExponentVector({1, 3})));
  EXPECT_FALSE(ExponentVector({2, 0}).divides(ExponentVector({1, 3})));
  EXPECT_EQ(ExponentVector({3, 4, 0}).degree(), 7);
  EXPECT_THROW(ExponentVector({1}).divides(ExponentVector({1, 2})), DimensionMismatch);
}

TEST(Minimalize, DropsDivisibleVectors) {
  const auto ideal = minimalize(2, {{2, 0}, {3, 0}, {0, 3}});
  EXPECT_EQ(ideal.generators(), (std::vector<ExponentVector>{{2, 0}, {0, 3}}));
}

TEST(Minimalize, EmptyIsZeroIdeal) {
  const auto ideal = minimalize(3, {});
  EXPECT_TRUE(ideal.is_zero());
  EXPECT_EQ(ideal, MonomialIdeal::zero(3));
}

TEST(Minimalize, DimensionMismatch) {
  EXPECT_THROW(minimalize(2, {{1, 0}, {1, 0, 0}}), DimensionMismatch);
}

TEST(Minimalize, MatchesPairwiseFilterOnRandomSets) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ExponentVector> raw;
    for (int i = 0; i < 50; ++i) raw.push_back(monoclosure::testing::random_vector(rng, 3, 6));
    const auto ideal = minimalize(3, raw);
    EXPECT_EQ(sorted(ideal.generators()), brute_minimal(raw));
  }
}

TEST(Minimalize, IsAClosureOperator) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<ExponentVector> raw;
    for (int i = 0; i < 12; ++i) raw.push_back(monoclosure::testing::random_vector(rng, 3, 4));
    const auto once = minimalize(3, raw);
    EXPECT_EQ(minimalize(3, once.generators()), once);
    // Adding a vector can only grow the ideal.
    auto bigger_raw = raw;
    bigger_raw.push_back(monoclosure::testing::random_vector(rng, 3, 4));
    const auto bigger = minimalize(3, bigger_raw);
    EXPECT_TRUE(contains_ideal(bigger, once));
    for (const auto& u : degree_box(3, 8)) {
      const bool in_raw = std::any_of(raw.begin(), raw.end(),
                                      [&](const ExponentVector& g) { return g.divides(u); });
      EXPECT_EQ(once.contains(u), in_raw);
    }
  }
}

TEST(MonomialIdeal, CanonicalOrderIsDescendingLex) {
  const auto a = ideal2({{0, 3}, {2, 0}, {1, 2}});
  const auto b = ideal2({{1, 2}, {0, 3}, {2, 0}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.generators(), (std::vector<ExponentVector>{{2, 0}, {1, 2}, {0, 3}}));
}

TEST(Sum, KeepsFloorSymbolic) {
  const auto s = sum(ideal2({{2, 0}}), m_power(2, 5));
  EXPECT_EQ(s.generators(), (std::vector<ExponentVector>{{2, 0}}));
  ASSERT_EQ(s.floors().size(), 1u);
  EXPECT_EQ(s.floors()[0].vars, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(s.floors()[0].degree, 5);
}

TEST(Sum, FloorInsideGeneratorsIsDropped) {
  // Every degree-6 monomial is divisible by x^2 or y^3.
  const auto s = sum(ideal2({{2, 0}, {0, 3}}), m_power(2, 6));
  EXPECT_FALSE(s.has_floors());
  EXPECT_EQ(s, ideal2({{2, 0}, {0, 3}}));
}

TEST(Product, PowerOfTwoGenerators) {
  const auto p = power(ideal2({{2, 0}, {0, 3}}), 2);
  EXPECT_EQ(p.generators(), (std::vector<ExponentVector>{{4, 0}, {2, 3}, {0, 6}}));
}

TEST(Product, UnitIsIdentity) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ideal = random_ideal(rng, 3, 5, 4);
    EXPECT_EQ(product(ideal, MonomialIdeal::unit(3)), ideal);
    EXPECT_EQ(product(MonomialIdeal::unit(3), ideal), ideal);
    EXPECT_TRUE(product(ideal, MonomialIdeal::zero(3)).is_zero());
  }
  const auto with_floor = sum(ideal2({{3, 0}}), m_power(2, 4));
  EXPECT_EQ(product(with_floor, MonomialIdeal::unit(2)), with_floor);
}

TEST(Product, PowersOfFloorsStaySymbolic) {
  const auto p = power(m_power(3, 2), 18);
  ASSERT_EQ(p.floors().size(), 1u);
  EXPECT_EQ(p.floors()[0].degree, 36);
  EXPECT_EQ(power(m_power(3, 2), 0), MonomialIdeal::unit(3));
  EXPECT_EQ(materialize(product(m_power(2, 1), m_power(2, 2))).generators().size(), 4u);
}

TEST(Product, MatchesBruteForceMembership) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_ideal(rng, 2, 4, 3);
    const auto b = random_ideal(rng, 2, 4, 3);
    const auto p = product(a, b);
    for (const auto& u : degree_box(2, 12)) {
      bool expected = false;
      for (const auto& g : a.generators()) {
        for (const auto& h : b.generators()) expected = expected || (g + h).divides(u);
      }
      EXPECT_EQ(p.contains(u), expected);
    }
  }
}

TEST(Product, ExponentsAreArbitraryPrecision) {
  const Integer big = Integer(1) << 70;
  const auto ideal = MonomialIdeal::from_generators(1, {ExponentVector(std::vector<Integer>{big})});
  const auto p = power(ideal, Integer(1) << 40);
  EXPECT_EQ(p.generators()[0][0], Integer(1) << 110);
}

TEST(Intersection, CoprimePowers) {
  const auto i = intersection(ideal2({{2, 0}}), ideal2({{0, 3}}));
  EXPECT_EQ(i.generators(), (std::vector<ExponentVector>{{2, 3}}));
}

TEST(Intersection, WithVariable) {
  const auto a = ideal2({{2, 0}, {0, 3}});
  const auto b = ideal2({{1, 0}});
  const auto i = intersection(a, b);
  EXPECT_EQ(i.generators(), (std::vector<ExponentVector>{{2, 0}, {1, 3}}));
  for (const auto& u : degree_box(2, 6)) {
    EXPECT_EQ(i.contains(u), brute_member(a, u) && brute_member(b, u)) << u[0] << "," << u[1];
  }
}

TEST(Intersection, Idempotent) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ideal = random_ideal(rng, 3, 5, 4);
    EXPECT_EQ(intersection(ideal, ideal), ideal);
  }
}

TEST(Colon, DivideOutOneVariable) {
  const auto c = colon(ideal2({{2, 1}}), ExponentVector{1, 0});
  EXPECT_EQ(c.generators(), (std::vector<ExponentVector>{{1, 1}}));
}

TEST(Colon, ByOneIsIdentity) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto ideal = random_ideal(rng, 3, 5, 4);
    EXPECT_EQ(colon(ideal, ExponentVector(3)), ideal);
  }
}

TEST(Colon, ByMixedMonomial) {
  const auto a = ideal2({{2, 0}, {0, 3}});
  const ExponentVector u{1, 1};
  const auto c = colon(a, u);
  EXPECT_EQ(c.generators(), (std::vector<ExponentVector>{{1, 0}, {0, 2}}));
  for (const auto& v : degree_box(2, 5)) EXPECT_EQ(c.contains(v), brute_member(a, v + u));
}

TEST(Colon, FloorsLoseDegree) {
  const auto c = colon(m_power(3, 5), ExponentVector{1, 1, 0});
  ASSERT_EQ(c.floors().size(), 1u);
  EXPECT_EQ(c.floors()[0].degree, 3);
  EXPECT_TRUE(colon(m_power(3, 2), ExponentVector{1, 1, 0}).is_unit());
}

TEST(Radical, SupportVectors) {
  EXPECT_EQ(radical(ideal2({{2, 0}, {0, 3}})).generators(), (std::vector<ExponentVector>{{1, 0}, {0, 1}}));
  EXPECT_EQ(radical(ideal2({{2, 4}})).generators(), (std::vector<ExponentVector>{{1, 1}}));
  EXPECT_TRUE(same_ideal(radical(m_power(3, 7)), m_power(3, 1)));
}

TEST(Radical, IdempotentAndSomePowerInside) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ideal = random_ideal(rng, 3, 4, 3);
    const auto r = radical(ideal);
    EXPECT_EQ(radical(r), r);
    EXPECT_TRUE(contains_ideal(r, ideal));
    Integer top = 0;
    for (const auto& g : ideal.generators()) top = std::max(top, g.degree());
    EXPECT_TRUE(contains_ideal(ideal, power(r, top)));
    EXPECT_EQ(radical(power(r, 2)), r);
  }
}

TEST(Contains, Examples) {
  const auto a = ideal2({{2, 0}, {0, 3}});
  EXPECT_TRUE(contains_monomial(a, ExponentVector{2, 3}));
  EXPECT_FALSE(contains_monomial(a, ExponentVector{1, 2}));
  // Degree test only: m^5 in 3 variables has no explicit generators.
  const auto m5 = m_power(3, 5);
  EXPECT_TRUE(m5.generators().empty());
  EXPECT_TRUE(contains_monomial(m5, ExponentVector{3, 2, 2}));
  EXPECT_FALSE(contains_monomial(m5, ExponentVector{1, 2, 1}));
  EXPECT_THROW(contains_monomial(m5, ExponentVector{1, 2}), DimensionMismatch);
}

TEST(Contains, IdealContainment) {
  const auto m2 = m_power(2, 2);
  EXPECT_TRUE(contains_ideal(m2, ideal2({{2, 0}, {1, 1}})));
  EXPECT_FALSE(contains_ideal(ideal2({{2, 0}, {0, 2}}), m2));
  EXPECT_TRUE(contains_ideal(m_power(3, 2), m_power(3, 5)));
  EXPECT_TRUE(contains_ideal(m_power(3, 1), m_power(3, 2, std::vector<std::size_t>{1, 2})));
  EXPECT_FALSE(contains_ideal(m_power(3, 2, std::vector<std::size_t>{1, 2}), m_power(3, 2)));
}

TEST(MPower, MaterializesAllDegreeMonomials) {
  const auto m3 = materialize(m_power(2, 3));
  EXPECT_EQ(m3.generators(), (std::vector<ExponentVector>{{3, 0}, {2, 1}, {1, 2}, {0, 3}}));
  EXPECT_EQ(materialize(m_power(3, 36)).generators().size(), 703u);
}

TEST(MPower, FirstPowerIsMaximalIdeal) {
  const auto m = materialize(m_power(3, 1));
  EXPECT_EQ(m.generators(), (std::vector<ExponentVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST(MPower, SubsetDegree) {
  const auto j = m_power(3, 4, std::vector<std::size_t>{1, 2});
  EXPECT_FALSE(j.contains(ExponentVector{9, 0, 0}));
  EXPECT_TRUE(j.contains(ExponentVector{0, 2, 2}));
}

TEST(MPower, ZeroAndErrors) {
  EXPECT_TRUE(m_power(3, 0).is_unit());
  EXPECT_THROW(m_power(3, 2, std::vector<std::size_t>{}), PreconditionError);
  EXPECT_TRUE(m_power(3, 0, std::vector<std::size_t>{}).is_unit());
}

TEST(Properties, MembershipLawsOnBox) {
  std::mt19937_64 rng(23);
  const auto box = degree_box(3, 9);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_ideal(rng, 3, 4, 3);
    auto b = random_ideal(rng, 3, 4, 3);
    if (trial % 3 == 0) a = sum(a, m_power(3, 6));
    if (trial % 4 == 0) b = sum(b, m_power(3, 5, std::vector<std::size_t>{0, 2}));
    const auto v = monoclosure::testing::random_vector(rng, 3, 2);
    const auto s = sum(a, b);
    const auto i = intersection(a, b);
    const auto c = colon(a, v);
    const auto ma = materialize(a);
    for (const auto& u : box) {
      const bool in_a = brute_member(a, u);
      const bool in_b = brute_member(b, u);
      EXPECT_EQ(s.contains(u), in_a || in_b);
      EXPECT_EQ(i.contains(u), in_a && in_b);
      EXPECT_EQ(c.contains(u), brute_member(a, u + v));
      EXPECT_EQ(ma.contains(u), in_a);
    }
  }
}

TEST(Properties, ZeroAndUnitAreFirstClass) {
  const auto z = MonomialIdeal::zero(2);
  const auto one = MonomialIdeal::unit(2);
  const auto a = ideal2({{1, 2}});
  EXPECT_EQ(sum(z, a), a);
  EXPECT_EQ(sum(one, a), one);
  EXPECT_EQ(intersection(z, a), z);
  EXPECT_EQ(intersection(one, a), a);
  EXPECT_EQ(power(z, 3), z);
  EXPECT_EQ(power(z, 0), one);
  EXPECT_EQ(radical(z), z);
  EXPECT_EQ(radical(one), one);
  EXPECT_EQ(colon(z, ExponentVector{1, 1}), z);
  EXPECT_EQ(colon(a, ExponentVector{1, 2}), one);
}
