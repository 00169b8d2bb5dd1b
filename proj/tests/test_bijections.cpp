#include <set>

#include <gtest/gtest.h>

#include "permlab/bijections.hpp"
#include "permlab/oracle.hpp"
#include "support.hpp"

using namespace permlab;
using permlab::testing::perm;
using permlab::testing::range_set;

namespace {
const Permutation kPi = perm({7, 2, 6, 4, 1, 3, 5});
const Permutation kRhoPi = perm({1, 3, 7, 5, 2, 4, 6});
const Permutation kHat = perm({2, 3, 7, 6, 4, 5, 1});
const Permutation kShifted = perm({7, 1, 2, 5, 6, 4, 3});

std::vector<int> reversal(int n) {
  std::vector<int> w;
  for (int v = n; v >= 1; --v) w.push_back(v);
  return w;
}
}  // namespace

TEST(CanonicalCycleForm, WorkedExample) {
  EXPECT_EQ(to_string(canonical_cycle_form(kPi)), "(4)(3,6)(2)(1,7,5)");
  EXPECT_EQ(to_string(canonical_cycle_form(Permutation::identity(3))), "(3)(2)(1)");
  EXPECT_EQ(to_string(canonical_cycle_form(kRhoPi)), "(2,3,7,6,4,5)(1)");
  EXPECT_EQ(canonical_cycle_form(kPi).to_permutation(), kPi);
}

TEST(FundamentalTransform, Examples) {
  EXPECT_EQ(fundamental_transform(kRhoPi), kHat);
  EXPECT_EQ(fundamental_transform(Permutation::identity(6)), Permutation(reversal(6)));
  EXPECT_EQ(inverse_fundamental(kHat), kRhoPi);
  EXPECT_EQ(inverse_fundamental(Permutation(reversal(6))), Permutation::identity(6));
}

TEST(FundamentalTransform, IsABijectionWithInverse) {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<Permutation> images;
    oracle::for_each_permutation(n, [&](const Permutation& p) {
      const auto w = fundamental_transform(p);
      ASSERT_EQ(inverse_fundamental(w), p);
      images.insert(w);
    });
    EXPECT_EQ(images.size(), static_cast<std::size_t>(factorial(static_cast<long>(n))));
  }
}

TEST(FixedToShifted, WorkedExample) {
  EXPECT_EQ(fixed_to_shifted(kPi, 1), kShifted);
  EXPECT_EQ(shifted_successions(kShifted, 1), (IndexSet{2, 4}));
  EXPECT_EQ(shifted_to_fixed(kShifted, 1), kPi);
}

TEST(FixedToShifted, IdentityMapsToIdentity) {
  for (std::size_t n = 2; n <= 9; ++n) {
    const auto q = fixed_to_shifted(Permutation::identity(n), 1);
    EXPECT_EQ(q, Permutation::identity(n));
    EXPECT_EQ(unseparated_pairs(q), range_set(1, static_cast<int>(n) - 1));
  }
}

TEST(ShiftedToFixed, RotationPreimage) {
  // pi(n) = 1 breaks the last pair, so the rotation has unseparated set [n-2].
  for (int n = 3; n <= 9; ++n) {
    const auto p = shifted_to_fixed(Permutation::rotation(n, 1), 1);
    EXPECT_EQ(fixed_points(p), range_set(1, n - 2)) << n;
    EXPECT_EQ(p(n - 1), n);
    EXPECT_EQ(p(n), n - 1);
  }
}

TEST(FixedToShifted, SetIdentityForEveryShift) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (int h = 1; h < static_cast<int>(n); ++h) {
      std::set<Permutation> images;
      oracle::for_each_permutation(n, [&](const Permutation& p) {
        const auto q = fixed_to_shifted(p, h);
        IndexSet expected;
        for (int k : fixed_points(p))
          if (k <= static_cast<int>(n) - h) expected.push_back(k);
        ASSERT_EQ(shifted_successions(q, h), expected);
        ASSERT_EQ(shifted_to_fixed(q, h), p);
        images.insert(q);
      });
      EXPECT_EQ(images.size(), static_cast<std::size_t>(factorial(static_cast<long>(n))));
    }
  }
  EXPECT_THROW(fixed_to_shifted(kPi, 7), std::out_of_range);
}

TEST(Theta, MatchesCycleView) {
  oracle::for_each_circular(7, [](const std::vector<int>& listing) {
    const CircularPermutation c(listing);
    ASSERT_EQ(theta(c), theta_of_cycle(c.n_cycle()));
  });
  EXPECT_EQ(theta(std::vector<int>{1}), (IndexSet{1}));
  EXPECT_EQ(theta(std::vector<int>{3, 1, 6, 5, 7, 2, 4}), IndexSet{});
}

TEST(CircularInsert, FirstExample) {
  const auto trace = build_circular_trace({3, 1, 6, 5, 7, 2, 4}, {3, 5, 6});
  ASSERT_EQ(trace.size(), 4u);
  EXPECT_EQ(trace[1], (std::vector<int>{3, 4, 1, 7, 6, 8, 2, 5}));
  EXPECT_EQ(trace[2], (std::vector<int>{3, 4, 1, 8, 7, 9, 2, 5, 6}));
  EXPECT_EQ(trace[3], (std::vector<int>{3, 4, 1, 9, 8, 10, 2, 5, 6, 7}));
  EXPECT_EQ(theta(trace[3]), (IndexSet{3, 5, 6}));
}

TEST(CircularInsert, SecondExample) {
  const auto trace = build_circular_trace({6, 1, 3, 5, 4, 7, 2}, {5, 8, 9});
  EXPECT_EQ(trace[1], (std::vector<int>{7, 1, 3, 5, 6, 4, 8, 2}));
  EXPECT_EQ(trace[2], (std::vector<int>{7, 1, 3, 5, 6, 4, 8, 9, 2}));
  EXPECT_EQ(trace[3], (std::vector<int>{7, 1, 3, 5, 6, 4, 8, 9, 10, 2}));
  EXPECT_EQ(circular_insert(CircularPermutation({6, 1, 3, 5, 4, 7, 2}), 5),
            CircularPermutation({7, 1, 3, 5, 6, 4, 8, 2}));
}

TEST(CircularDelete, PeelsExampleBack) {
  const auto trace = peel_circular_trace({7, 1, 3, 5, 6, 4, 8, 9, 10, 2});
  ASSERT_EQ(trace.size(), 4u);
  EXPECT_EQ(trace[1], (std::vector<int>{7, 1, 3, 5, 6, 4, 8, 9, 2}));
  EXPECT_EQ(trace[2], (std::vector<int>{7, 1, 3, 5, 6, 4, 8, 2}));
  EXPECT_EQ(trace[3], (std::vector<int>{6, 1, 3, 5, 4, 7, 2}));
  const auto peeled = peel_circular(CircularPermutation({7, 1, 3, 5, 6, 4, 8, 9, 10, 2}));
  EXPECT_EQ(peeled.seed, CircularPermutation({6, 1, 3, 5, 4, 7, 2}));
  EXPECT_EQ(peeled.labels, (std::vector<int>{5, 8, 9}));
  EXPECT_THROW(circular_delete(CircularPermutation({7, 1, 3, 5, 6, 4, 8, 9, 10, 2}), 8), std::invalid_argument);
}

TEST(BuildCircular, RejectsBadArguments) {
  const CircularPermutation seed({3, 1, 6, 5, 7, 2, 4});
  EXPECT_EQ(build_circular(seed, {}), seed);
  EXPECT_THROW(build_circular(seed, {5, 3}), std::invalid_argument);
  EXPECT_THROW(build_circular(seed, {9}), std::out_of_range);
  EXPECT_THROW(build_circular(CircularPermutation({1, 2, 3}), {1}), std::invalid_argument);
}

TEST(BuildCircular, BijectsSeedsAndLabelsOntoClasses) {
  // For each n, pairs (seed of size n-|K| with empty Theta, K) hit every
  // circular permutation of [n] exactly once.
  for (int n = 1; n <= 7; ++n) {
    std::set<CircularPermutation> hit;
    std::size_t pairs = 0;
    for (const auto& ks : oracle::all_subsets(n)) {
      const int seed_size = n - static_cast<int>(ks.size());
      bool labels_fit = true;
      for (std::size_t i = 0; i < ks.size(); ++i) labels_fit = labels_fit && ks[i] <= seed_size + static_cast<int>(i) + 1;
      if (!labels_fit) continue;
      oracle::for_each_circular(seed_size, [&](const std::vector<int>& seed) {
        if (!theta(seed).empty()) return;
        const auto built = build_circular(CircularPermutation(seed), ks);
        ASSERT_EQ(theta(built), ks);
        const auto back = peel_circular(built);
        ASSERT_EQ(back.seed, CircularPermutation(seed));
        ASSERT_EQ(back.labels, ks);
        hit.insert(built);
        ++pairs;
      });
    }
    EXPECT_EQ(pairs, hit.size());
    EXPECT_EQ(static_cast<long>(hit.size()), factorial(n - 1)) << n;
  }
}
