#include <cmath>

#include <gtest/gtest.h>

#include "permlab/exact_dist.hpp"
#include "permlab/oracle.hpp"
#include "support.hpp"

using namespace permlab;
using permlab::testing::pmf_of;

namespace {
ExactPmf oracle_pmf(std::size_t n, auto stat) { return ExactPmf::from_counts(oracle::histogram(n, stat)); }
}  // namespace

TEST(Numeric, FractionText) {
  EXPECT_EQ(to_fraction_string(Rational(1)), "1/1");
  EXPECT_EQ(to_fraction_string(parse_fraction("6/15")), "2/5");
  EXPECT_EQ(to_decimal_string(to_real(Rational(1))), "1.0");
  EXPECT_EQ(to_decimal_string(to_real(parse_fraction("11/24"))), "0.458333333333");
  EXPECT_THROW(parse_fraction("1/0"), std::domain_error);
  EXPECT_THROW(parse_fraction("x"), std::invalid_argument);
}

TEST(Derangements, KnownValues) {
  const std::vector<long> d{1, 0, 1, 2, 9, 44, 265, 1854, 14833, 133496, 1334961};
  for (long n = 0; n <= 10; ++n) EXPECT_EQ(derangement_count(n), d[n]) << n;
  EXPECT_THROW(derangement_count(-1), std::domain_error);
}

TEST(FixedPointPmf, SmallCases) {
  EXPECT_EQ(fixed_point_pmf(1), ExactPmf::point_mass(1));
  EXPECT_EQ(fixed_point_pmf(4)[0], Rational(9, 24));
  EXPECT_EQ(fixed_point_pmf(4), pmf_of({{0, "3/8"}, {1, "1/3"}, {2, "1/4"}, {4, "1/24"}}));
  for (std::size_t n = 1; n <= 7; ++n)
    EXPECT_EQ(fixed_point_pmf(n), oracle_pmf(n, [](const Permutation& p) { return fixed_point_count(p); }));
}

TEST(UnseparatedPmf, SmallCases) {
  EXPECT_EQ(unseparated_pmf(1), ExactPmf::point_mass(0));
  EXPECT_EQ(unseparated_pmf(4), pmf_of({{0, "11/24"}, {1, "3/8"}, {2, "1/8"}, {3, "1/24"}}));
  EXPECT_EQ(unseparated_pmf(5), pmf_of({{0, "53/120"}, {1, "11/30"}, {2, "3/20"}, {3, "1/30"}, {4, "1/120"}}));
  for (std::size_t n = 1; n <= 8; ++n)
    EXPECT_EQ(unseparated_pmf(n), oracle_pmf(n, [](const Permutation& p) { return unseparated_pairs(p).size(); }));
  EXPECT_THROW(unseparated_pmf(0), std::domain_error);
}

TEST(UnseparatedPmf, SumsToOneAndMeanIsOneMinusOneOverN) {
  for (long n = 1; n <= 40; ++n) {
    const auto pmf = unseparated_pmf(n);
    EXPECT_EQ(pmf.total(), Rational(1));
    EXPECT_EQ(pmf.mean(), Rational(n - 1, n));
  }
}

TEST(Whitworth, Values) {
  EXPECT_EQ(whitworth_zero_prob(1), Rational(1));
  EXPECT_EQ(whitworth_zero_prob(3), Rational(1, 2));
  EXPECT_EQ(whitworth_zero_prob(4), Rational(11, 24));
}

TEST(ShiftedPmf, MatchesOracle) {
  EXPECT_EQ(shifted_pmf(5, 2), pmf_of({{0, "8/15"}, {1, "7/20"}, {2, "1/10"}, {3, "1/60"}}));
  EXPECT_EQ(shifted_pmf(6, 3), pmf_of({{0, "71/120"}, {1, "13/40"}, {2, "3/40"}, {3, "1/120"}}));
  EXPECT_EQ(shifted_pmf(5, 4), pmf_of({{0, "4/5"}, {1, "1/5"}}));
  for (int h = 1; h < 6; ++h)
    EXPECT_EQ(shifted_pmf(6, h), oracle_pmf(6, [h](const Permutation& p) { return shifted_successions(p, h).size(); }));
  EXPECT_EQ(shifted_pmf(7, 1), unseparated_pmf(7));
  EXPECT_THROW(shifted_pmf(5, 5), std::out_of_range);
}

TEST(CircularPmf, MatchesOracle) {
  EXPECT_EQ(circular_pmf(4)[4], Rational(1, 6));
  EXPECT_EQ(circular_pmf(5), pmf_of({{0, "1/3"}, {1, "5/24"}, {2, "5/12"}, {5, "1/24"}}));
  EXPECT_EQ(circular_pmf(6), pmf_of({{0, "3/10"}, {1, "2/5"}, {2, "1/8"}, {3, "1/6"}, {6, "1/120"}}));
  for (std::size_t n = 1; n <= 8; ++n)
    EXPECT_EQ(circular_pmf(n), oracle_pmf(n, [](const Permutation& p) { return circular_successions(p).size(); }));
}

TEST(CircularPmf, ApproachesPoissonOne) {
  const auto pmf = circular_pmf(200);
  EXPECT_EQ(pmf.total(), Rational(1));
  double factorial = 1;
  for (int m = 0; m <= 8; ++m) {
    if (m > 0) factorial *= m;
    EXPECT_NEAR(to_real(pmf[m]).convert_to<double>(), std::exp(-1.0) / factorial, 0.01) << m;
  }
}

TEST(ThetaEmptyCount, KnownList) {
  const std::vector<long> expected{0, 0, 1, 1, 8, 36, 229, 1625, 13208, 120288};
  for (long n = 1; n <= 10; ++n) EXPECT_EQ(theta_empty_count(n), expected[n - 1]) << n;
  EXPECT_EQ(theta_empty_count(0), 1);
}

TEST(DerangementIdentity, HoldsUpTo40) {
  for (long n = 1; n <= 40; ++n) EXPECT_TRUE(check_derangement_identity(n)) << n;
}

TEST(Poisson, Reference) {
  const auto ref = poisson_reference(Rational(1));
  const double e1 = std::exp(-1.0);
  EXPECT_NEAR(ref.masses[0].convert_to<double>(), e1, 1e-15);
  EXPECT_NEAR(ref.masses[1].convert_to<double>(), e1, 1e-15);
  Real sum = ref.tail;
  for (const auto& m : ref.masses) sum += m;
  EXPECT_NEAR(sum.convert_to<double>(), 1.0, 1e-30);
}

TEST(TotalVariation, Basics) {
  const auto a = circular_pmf(7);
  EXPECT_EQ(exact_tv_distance(a, a), Rational(0));
  EXPECT_EQ(exact_tv_distance(ExactPmf::point_mass(0), ExactPmf::point_mass(1)), Rational(1));
  EXPECT_EQ(exact_tv_distance(ExactPmf::point_mass(0), fixed_point_pmf(2)), Rational(1, 2));
  const auto point = tv_distance(ExactPmf::point_mass(0), poisson_reference(Rational(1)));
  EXPECT_NEAR(point.distance.convert_to<double>(), 1 - std::exp(-1.0), 1e-15);
}

TEST(TotalVariation, CircularDecaysLikeOneOverN) {
  const auto ref = poisson_reference(Rational(1));
  double previous = 1;
  for (long n : {20, 40, 80, 160}) {
    const double tv = tv_distance(circular_pmf(n), ref).distance.convert_to<double>();
    EXPECT_LT(tv, previous);
    EXPECT_GT(n * tv, 0.2);
    EXPECT_LT(n * tv, 2.0);
    previous = tv;
  }
}

TEST(ExactPmf, FactorialMoments) {
  const auto pmf = fixed_point_pmf(8);
  for (int k = 1; k <= 8; ++k) EXPECT_EQ(pmf.factorial_moment(k), Rational(1)) << k;
}
