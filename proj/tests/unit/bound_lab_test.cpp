#include "monoclosure/bound_lab.hpp"
#include "monoclosure/errors.hpp"
#include "monoclosure/newton_closure.hpp"
#include "random_ideals.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace monoclosure;
using monoclosure::testing::random_ideal;

namespace {

MonomialIdeal ideal_of(std::size_t dim, std::initializer_list<ExponentVector> gens) {
  return MonomialIdeal::from_generators(dim, std::vector<ExponentVector>(gens));
}

const MonomialIdeal& m2() {
  static const MonomialIdeal m = m_power(2, 1);
  return m;
}

// f(n) from the definition: the least J-order over closure generators not in
// closure(I), with J-order taken from explicit powers of J.
GrowthValue brute_f(const MonomialIdeal& ideal, const MonomialIdeal& modulus, int n) {
  const auto big = integral_closure(sum(ideal, power(modulus, n)));
  const auto small = integral_closure(ideal);
  std::optional<Integer> best;
  for (const auto& g : big.generators()) {
    if (small.contains(g)) continue;
    Integer k = 0;
    while (power(modulus, k + 1).contains(g)) ++k;
    if (!best || k < *best) best = k;
  }
  return best ? GrowthValue::finite(*best) : GrowthValue::infinite();
}

}  // namespace

TEST(IdealOrder, MaximalIdealPowersAndMixedModulus) {
  EXPECT_EQ(ideal_order(m2(), ExponentVector{2, 3}), 5);
  EXPECT_EQ(ideal_order(m_power(2, 2), ExponentVector{2, 3}), 2);
  const auto j = ideal_of(2, {{2, 0}, {0, 1}});
  EXPECT_EQ(ideal_order(j, ExponentVector{5, 1}), 3);  // x^4 * y
  EXPECT_EQ(ideal_order(j, ExponentVector{1, 0}), 0);
  EXPECT_THROW(ideal_order(MonomialIdeal::unit(2), ExponentVector{1, 0}), PreconditionError);
}

TEST(FMax, XSquaredAtTen) {
  const auto x2 = ideal_of(2, {{2, 0}});
  EXPECT_EQ(f_max(x2, m2(), 10), GrowthValue::finite(6));
  EXPECT_EQ(brute_f(x2, m2(), 10), GrowthValue::finite(6));
  const auto point = f_max_point(x2, x2, m2(), 10);
  ASSERT_TRUE(point.witness);
  EXPECT_EQ(*point.witness, (ExponentVector{1, 5}));
}

TEST(FMax, PrimaryIdealIsEventuallyInfinite) {
  const auto ideal = ideal_of(2, {{2, 0}, {0, 2}});
  for (int n = 4; n <= 10; ++n) EXPECT_TRUE(f_max(ideal, m2(), n).is_infinite()) << n;
}

TEST(FMax, UnitIdealIsInfinite) {
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(f_max(MonomialIdeal::unit(2), m2(), n).is_infinite());
  EXPECT_EQ(GrowthValue::infinite().str(), "inf");
}

TEST(FMax, Errors) {
  const auto x2 = ideal_of(2, {{2, 0}});
  EXPECT_THROW(f_max(x2, MonomialIdeal::unit(2), 3), PreconditionError);
  EXPECT_THROW(f_max(x2, MonomialIdeal::zero(2), 3), PreconditionError);
  EXPECT_THROW(f_max(x2, m2(), 0), PreconditionError);
  EXPECT_THROW(f_max(x2, m_power(3, 1), 2), DimensionMismatch);
}

TEST(FMax, MatchesDefinitionOnRandomIdeals) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    const auto ideal = random_ideal(rng, 2, 4, 3);
    const MonomialIdeal modulus = trial % 3 == 0 ? ideal_of(2, {{2, 0}, {1, 1}, {0, 3}}) : m2();
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(f_max(ideal, modulus, n), brute_f(ideal, modulus, n));
  }
}

TEST(SmallestConstant, MatchesSearch) {
  for (std::int64_t n = 1; n <= 40; ++n) {
    for (int f = 0; f <= 20; ++f) {
      std::int64_t c = 1;
      while (n / c > f) ++c;
      EXPECT_EQ(smallest_constant(n, GrowthValue::finite(f)), c);
    }
  }
  EXPECT_EQ(smallest_constant(17, GrowthValue::infinite()), 1);
}

TEST(GrowthReport, PrincipalPurePowerWithCTwo) {
  const auto report = growth_report(ideal_of(2, {{2, 0}}), m2(), 2, 40, 2);
  ASSERT_EQ(report.rows.size(), 39u);
  EXPECT_TRUE(report.all_verified());
  EXPECT_EQ(report.rows.front().n, 2);
  EXPECT_EQ(report.rows.back().n, 40);
  EXPECT_LE(report.empirical_c, 2);
}

TEST(GrowthReport, TwoPurePowersInThreeVariables) {
  const auto ideal = ideal_of(3, {{2, 0, 0}, {0, 3, 0}});
  const auto report = growth_report(ideal, m_power(3, 1), 6, 14, 6);
  EXPECT_TRUE(report.all_verified());
}

TEST(GrowthReport, DistinguishedVariableModulus) {
  const auto ideal = ideal_of(3, {{3, 0, 0}});
  const auto modulus = m_power(3, 1, std::vector<std::size_t>{1, 2});
  const auto report = growth_report(ideal, modulus, 3, 18, 3);
  EXPECT_TRUE(report.all_verified());
}

TEST(GrowthReport, WorkersDoNotChangeTheReport) {
  const auto ideal = ideal_of(2, {{3, 1}, {0, 2}});
  const auto serial = growth_report(ideal, m2(), 1, 16, 2, 1);
  const auto parallel = growth_report(ideal, m2(), 1, 16, 2, 4);
  ASSERT_EQ(serial.rows.size(), parallel.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    EXPECT_EQ(serial.rows[i].n, parallel.rows[i].n);
    EXPECT_EQ(serial.rows[i].point.f, parallel.rows[i].point.f);
    EXPECT_EQ(serial.rows[i].point.witness, parallel.rows[i].point.witness);
  }
  EXPECT_EQ(serial.empirical_c, parallel.empirical_c);
}

TEST(GrowthReport, RangeErrors) {
  EXPECT_THROW(growth_report(ideal_of(2, {{2, 0}}), m2(), 0, 3), PreconditionError);
  EXPECT_THROW(growth_report(ideal_of(2, {{2, 0}}), m2(), 5, 3), PreconditionError);
  EXPECT_THROW(growth_report(ideal_of(2, {{2, 0}}), m2(), 1, 3, 0), PreconditionError);
}

TEST(Properties, GrowthIsMonotone) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 12; ++trial) {
    const auto ideal = random_ideal(rng, 2, 5, 3);
    const auto report = growth_report(ideal, m2(), 1, 14);
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
      const auto& prev = report.rows[i - 1].point.f;
      const auto& cur = report.rows[i].point.f;
      EXPECT_TRUE(cur.is_infinite() || (!prev.is_infinite() && prev.value() <= cur.value()));
    }
  }
}

TEST(Properties, PurePowerConstantBoundsGrowth) {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> e(1, 4);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t d = trial % 2 == 0 ? 2 : 3;
    std::vector<ExponentVector> gens{ExponentVector::unit(d, 0, e(rng))};
    if (trial % 4 < 2) gens.push_back(ExponentVector::unit(d, 1, e(rng)));
    const auto ideal = MonomialIdeal::from_generators(d, gens);
    const auto c = pure_power_constant(ideal);
    ASSERT_TRUE(c);
    const auto report = growth_report(ideal, m_power(d, 1), 1, 16, c->convert_to<std::int64_t>());
    EXPECT_TRUE(report.all_verified());
  }
}

TEST(Properties, SquarefreeGapStaysBounded) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 6; ++trial) {
    const auto ideal = monoclosure::testing::random_squarefree_ideal(rng, 3, 3);
    const auto report = growth_report(ideal, m_power(3, 1), 2, 20);
    EXPECT_TRUE(gaps_bounded(additive_gaps(report)));
  }
}

TEST(Properties, TightnessAtTwo) {
  const auto report = growth_report(ideal_of(2, {{2, 0}}), m2(), 2, 40);
  for (const auto& row : report.rows) {
    if (row.n % 2 != 0) continue;
    ASSERT_FALSE(row.point.f.is_infinite());
    EXPECT_LE(row.point.f.value(), row.n / 2 + 1) << row.n;
  }
}

TEST(Gaps, BoundedCriterion) {
  using G = std::vector<std::optional<Integer>>;
  EXPECT_TRUE(gaps_bounded(G{3, 2, 2, 2}));
  EXPECT_TRUE(gaps_bounded(G{0, 1, 2, 2}));
  EXPECT_TRUE(gaps_bounded(G{std::nullopt, 1, std::nullopt}));
  EXPECT_FALSE(gaps_bounded(G{0, 1, 2, 3, 1}));
}

TEST(IntersectionLemma, TwoVariables) {
  const auto report =
      verify_intersection_lemma(ideal_of(2, {{1, 0}}), ideal_of(2, {{0, 1}}), 1, 30);
  EXPECT_EQ(report.intersection, ideal_of(2, {{1, 1}}));
  EXPECT_TRUE(report.holds());
  EXPECT_GE(report.smallest_c, 1);
}

TEST(IntersectionLemma, EqualFactorsDegenerate) {
  const auto j = ideal_of(2, {{2, 0}, {1, 1}, {0, 2}});
  const auto report = verify_intersection_lemma(j, j, 1, 12);
  EXPECT_EQ(report.intersection, j);
  EXPECT_EQ(report.c_first, report.c_second);
  EXPECT_TRUE(report.holds());
  const auto direct = growth_report(j, m2(), 1, 12);
  EXPECT_EQ(report.smallest_c, direct.empirical_c);
}

TEST(IntersectionLemma, MatchesDirectGrowthOfIntersection) {
  const auto j = ideal_of(2, {{2, 0}, {1, 1}, {0, 2}});
  const auto k = ideal_of(2, {{1, 0}});
  const auto report = verify_intersection_lemma(j, k, 1, 15);
  EXPECT_TRUE(report.holds());
  // (x) ∩ m^2 = (x^2, xy), written out by hand.
  const auto direct = growth_report(ideal_of(2, {{2, 0}, {1, 1}}), m2(), 1, 15);
  ASSERT_EQ(report.rows.size(), direct.rows.size());
  for (std::size_t i = 0; i < direct.rows.size(); ++i) EXPECT_EQ(report.rows[i].f, direct.rows[i].point.f);
  EXPECT_EQ(report.smallest_c, direct.empirical_c);
}

TEST(IntersectionLemma, RejectsNonClosedInput) {
  EXPECT_THROW(verify_intersection_lemma(ideal_of(2, {{2, 0}, {0, 3}}), ideal_of(2, {{1, 0}}), 1, 5),
               PreconditionError);
}

TEST(RadicalSwap, SquareOfMaximalIdeal) {
  const auto report = verify_radical_swap(ideal_of(2, {{2, 0}}), m_power(2, 2), 1, 15);
  EXPECT_EQ(report.k, 2);
  EXPECT_TRUE(report.holds());
  EXPECT_TRUE(same_ideal(report.radical_of_modulus, m2()));
}

TEST(RadicalSwap, RadicalModulusGivesEqualFunctions) {
  const auto report = verify_radical_swap(ideal_of(2, {{2, 1}}), m2(), 1, 10);
  EXPECT_EQ(report.k, 1);
  for (const auto& row : report.rows) EXPECT_EQ(row.f, row.g);
  EXPECT_TRUE(report.holds());
}

TEST(RadicalSwap, ExplicitSquareModulus) {
  const auto report =
      verify_radical_swap(ideal_of(2, {{2, 1}}), ideal_of(2, {{2, 0}, {1, 1}, {0, 2}}), 1, 12);
  EXPECT_EQ(report.k, 2);
  EXPECT_TRUE(report.holds());
}

TEST(Counterexample, Instances) {
  EXPECT_TRUE(counterexample_check(10, 2));
  EXPECT_TRUE(counterexample_check(20, 5));
  EXPECT_THROW(counterexample_check(10, 5), PreconditionError);
  EXPECT_THROW(counterexample_check(9, 1), PreconditionError);
  EXPECT_THROW(counterexample_check(2, 0), PreconditionError);
  EXPECT_THROW(counterexample_check(10, -1), PreconditionError);
}

TEST(PurePowerConstant, Cases) {
  EXPECT_EQ(pure_power_constant(ideal_of(2, {{2, 0}, {0, 3}})), Integer(6));
  EXPECT_EQ(pure_power_constant(ideal_of(2, {{4, 0}})), Integer(4));
  EXPECT_EQ(pure_power_constant(ideal_of(3, {{0, 0, 5}})), Integer(5));
  EXPECT_FALSE(pure_power_constant(ideal_of(2, {{2, 1}})));
  EXPECT_FALSE(pure_power_constant(MonomialIdeal::unit(2)));
  EXPECT_FALSE(pure_power_constant(m_power(2, 3)));
}
