#pragma once

// Oracle-backed verification suites. Each suite compares a closed form or a
// construction against exhaustive enumeration and reports the first mismatch.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "permlab/bijections.hpp"
#include "permlab/commutator.hpp"
#include "permlab/exact_dist.hpp"
#include "permlab/generators.hpp"
#include "permlab/oracle.hpp"
#include "permlab/permutation.hpp"

namespace permlab::verify {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

/// n! * pmf as integers; throws if some mass is not an integer multiple of 1/n!.
inline std::vector<BigInt> scaled_counts(const ExactPmf& pmf, long n) {
  const BigInt nf = factorial(n);
  std::vector<BigInt> out;
  for (const auto& p : pmf.masses()) {
    const Rational scaled = p * Rational(nf);
    if (denominator(scaled) != 1) throw std::logic_error("mass is not a multiple of 1/n!");
    out.push_back(numerator(scaled));
  }
  return out;
}

inline bool same_counts(const std::vector<std::uint64_t>& oracle, const std::vector<BigInt>& formula) {
  for (std::size_t m = 0; m < std::max(oracle.size(), formula.size()); ++m) {
    const BigInt a = m < oracle.size() ? BigInt(oracle[m]) : BigInt(0);
    const BigInt b = m < formula.size() ? formula[m] : BigInt(0);
    if (a != b) return false;
  }
  return true;
}

inline std::string describe_counts(const std::vector<std::uint64_t>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

/// #S_n and #T_n histograms agree with each other and with n! * unseparated_pmf(n).
inline SuiteResult unseparated_law(std::size_t n) {
  SuiteResult r{"thm1"};
  const auto s_hist = oracle::histogram(n, [](const Permutation& p) { return unseparated_pairs(p).size(); });
  const auto t_hist = oracle::histogram(n, [](const Permutation& p) {
    std::size_t c = 0;
    for (int k = 1; k < static_cast<int>(p.size()); ++k) c += p(k) == k;
    return c;
  });
  if (s_hist != t_hist) r.fail("n=" + std::to_string(n) + ": #S " + describe_counts(s_hist) + " vs #T " + describe_counts(t_hist));
  if (!same_counts(s_hist, scaled_counts(unseparated_pmf(static_cast<long>(n)), static_cast<long>(n))))
    r.fail("n=" + std::to_string(n) + ": oracle histogram differs from the closed form");
  const Rational zero = Rational(factorial(static_cast<long>(n))) * whitworth_zero_prob(static_cast<long>(n));
  if (denominator(zero) != 1 || numerator(zero) != BigInt(s_hist[0]))
    r.fail("n=" + std::to_string(n) + ": zero-count formula disagrees with oracle");
  return r;
}

/// Counts of {pi : S(pi) = A} and {pi : U(pi) = A} depend only on |A|.
inline SuiteResult exchangeability(std::size_t n) {
  SuiteResult r{"exchangeability"};
  std::string witness;
  auto s_counts = oracle::set_counts(n, [](const Permutation& p) { return unseparated_pairs(p); });
  if (!oracle::exchangeable_counts(s_counts, oracle::all_subsets(static_cast<int>(n) - 1), &witness))
    r.fail("S_n, n=" + std::to_string(n) + ": " + witness);
  auto u_counts = oracle::set_counts(n, [](const Permutation& p) { return circular_successions(p); });
  if (!oracle::exchangeable_counts(u_counts, oracle::all_subsets(static_cast<int>(n)), &witness))
    r.fail("U_n, n=" + std::to_string(n) + ": " + witness);
  return r;
}

/// Round trips of the fundamental transform and the fixed-point/shifted-succession
/// bijection for every shift h.
inline SuiteResult bijection(std::size_t n) {
  SuiteResult r{"bijection"};
  std::set<Permutation> images;
  oracle::for_each_permutation(n, [&](const Permutation& p) {
    const Permutation w = fundamental_transform(p);
    images.insert(w);
    if (inverse_fundamental(w) != p) r.fail("fundamental transform round trip fails at " + to_string(p));
  });
  if (images.size() != factorial(static_cast<long>(n)).convert_to<std::size_t>())
    r.fail("fundamental transform is not injective");
  for (int h = 1; h < static_cast<int>(n); ++h) {
    std::set<Permutation> shifted;
    oracle::for_each_permutation(n, [&](const Permutation& p) {
      const Permutation q = fixed_to_shifted(p, h);
      shifted.insert(q);
      IndexSet fixed;
      for (int k : fixed_points(p))
        if (k <= static_cast<int>(n) - h) fixed.push_back(k);
      if (shifted_successions(q, h) != fixed)
        r.fail("h=" + std::to_string(h) + ": set identity fails at " + to_string(p));
      if (shifted_to_fixed(q, h) != p) r.fail("h=" + std::to_string(h) + ": inverse fails at " + to_string(p));
    });
    if (shifted.size() != images.size()) r.fail("h=" + std::to_string(h) + ": map is not a bijection");
  }
  return r;
}

/// shifted_pmf(n, h) against the oracle histogram, every h.
inline SuiteResult shifted(std::size_t n) {
  SuiteResult r{"shifted"};
  for (int h = 1; h < static_cast<int>(n); ++h) {
    const auto hist = oracle::histogram(n, [h](const Permutation& p) { return shifted_successions(p, h).size(); });
    if (!same_counts(hist, scaled_counts(shifted_pmf(static_cast<long>(n), h), static_cast<long>(n))))
      r.fail("n=" + std::to_string(n) + ", h=" + std::to_string(h) + ": oracle " + describe_counts(hist));
  }
  return r;
}

/// Circular successions: law, empty-Theta counts, the per-set identity and the
/// insertion bijection onto {tau : Theta(tau) = K} for every K.
inline SuiteResult circular(std::size_t n) {
  SuiteResult r{"circular"};
  const long nl = static_cast<long>(n);
  const auto hist = oracle::histogram(n, [](const Permutation& p) { return circular_successions(p).size(); });
  if (!same_counts(hist, scaled_counts(circular_pmf(nl), nl))) r.fail("circular law differs: oracle " + describe_counts(hist));

  // seeds[size]: circular permutations of that size with empty Theta.
  std::vector<std::vector<CircularPermutation>> seeds(n + 1);
  std::map<IndexSet, std::size_t> targets;
  for (std::size_t size = 0; size <= n; ++size) {
    oracle::for_each_circular(size, [&](const std::vector<int>& w) {
      const IndexSet th = theta(w);
      if (th.empty()) seeds[size].push_back(CircularPermutation(w));
      if (size == n) ++targets[th];
    });
  }
  if (BigInt(seeds[n].size()) != theta_empty_count(nl)) r.fail("theta_empty_count differs from oracle");

  const auto set_counts = oracle::set_counts(n, [](const Permutation& p) { return circular_successions(p); });
  for (const auto& k_set : oracle::all_subsets(static_cast<int>(n))) {
    const std::size_t m = k_set.size();
    const auto it = set_counts.find(k_set);
    const std::uint64_t perms = it == set_counts.end() ? 0 : it->second;
    // (n-1)! P{U_n = A} = perms / n must equal the empty-Theta count at size n-m.
    if (perms % n != 0 || BigInt(perms / n) != theta_empty_count(nl - static_cast<long>(m)))
      r.fail("per-set identity fails at A=" + to_string(k_set));

    std::set<CircularPermutation> image;
    for (const auto& sigma : seeds[n - m]) {
      const CircularPermutation tau = build_circular(sigma, k_set);
      if (theta(tau) != k_set) r.fail("build_circular misses Theta at K=" + to_string(k_set));
      const PeeledCircular back = peel_circular(tau);
      if (back.seed != sigma || back.labels != k_set) r.fail("peel does not invert build at K=" + to_string(k_set));
      image.insert(tau);
    }
    const auto target = targets.find(k_set);
    const std::size_t target_size = target == targets.end() ? 0 : target->second;
    if (image.size() != seeds[n - m].size() || image.size() != target_size)
      r.fail("build_circular is not onto {Theta = " + to_string(k_set) + "}");
  }
  return r;
}

/// D(n) = c(n) + c(n+1) for n <= nmax, and the tabulated values for n <= 10.
inline SuiteResult derangement_identity(long nmax) {
  SuiteResult r{"identity53"};
  const long derangements[] = {0, 1, 2, 9, 44, 265, 1854, 14833, 133496, 1334961};
  const long empty_theta[] = {0, 0, 1, 1, 8, 36, 229, 1625, 13208, 120288};
  for (long n = 1; n <= 10; ++n) {
    if (derangement_count(n) != derangements[n - 1]) r.fail("D(" + std::to_string(n) + ") mismatch");
    if (theta_empty_count(n) != empty_theta[n - 1]) r.fail("c(" + std::to_string(n) + ") mismatch");
  }
  for (long n = 1; n <= nmax; ++n)
    if (!check_derangement_identity(n)) r.fail("identity fails at n=" + std::to_string(n));
  return r;
}

inline bool uniform_law(const std::map<Permutation, Rational>& law, std::size_t support) {
  if (law.size() != support) return false;
  const Rational each(1, static_cast<long>(support));
  for (const auto& [p, prob] : law)
    if (prob != each) return false;
  return true;
}

/// Per-state transition counts: out of `choices` equally likely moves, exactly
/// `count` decrease the statistic, one increases it, the rest keep it.
struct TransitionTally {
  std::size_t down = 0, same = 0, up = 0, other = 0;
  void add(long before, long after) {
    if (after == before - 1) ++down;
    else if (after == before) ++same;
    else if (after == before + 1) ++up;
    else ++other;
  }
  bool matches(std::size_t count, std::size_t choices) const {
    return other == 0 && down == count && up == 1 && same == choices - count - 1;
  }
};

inline SuiteResult insertion_transitions(std::size_t nmax) {
  SuiteResult r{"insertion-transitions"};
  for (std::size_t n = 1; n < nmax; ++n) {
    oracle::for_each_permutation(n, [&](const Permutation& p) {
      const long m = static_cast<long>(unseparated_pairs(p).size());
      TransitionTally t;
      for (std::size_t slot = 0; slot <= n; ++slot) t.add(m, static_cast<long>(unseparated_pairs(insert_at_slot(p, slot)).size()));
      if (!t.matches(static_cast<std::size_t>(m), n + 1)) r.fail("M transition law fails from " + to_string(p));
    });
  }
  return r;
}

inline SuiteResult crp_transitions(std::size_t nmax) {
  SuiteResult r{"crp-transitions"};
  std::vector<RestaurantState> level{RestaurantState()};
  for (std::size_t n = 1; n < nmax; ++n) {
    std::vector<RestaurantState> next;
    for (const auto& state : level) {
      const long before = static_cast<long>(late_fixed_point_count(state.permutation()));
      TransitionTally t;
      for (std::size_t c = 1; c <= n + 1; ++c) {
        next.push_back(state.seat(c));
        t.add(before, static_cast<long>(late_fixed_point_count(next.back().permutation())));
      }
      if (!t.matches(static_cast<std::size_t>(before), n + 1))
        r.fail("N transition law fails from " + to_string(state.permutation()));
    }
    level = std::move(next);
  }
  return r;
}

inline SuiteResult cycle_growth_transitions(std::size_t nmax) {
  SuiteResult r{"cycle-growth-transitions"};
  for (std::size_t n = 1; n < nmax; ++n) {
    oracle::for_each_n_cycle(n, [&](const Permutation& g) {
      const long before = static_cast<long>(cycle_successor_count(g));
      TransitionTally t;
      for (int k = 1; k <= static_cast<int>(n); ++k) t.add(before, static_cast<long>(cycle_successor_count(splice_after(g, k))));
      if (!t.matches(static_cast<std::size_t>(before), n)) r.fail("N transition law fails from " + to_string(g));
    });
  }
  return r;
}

/// {k in [n] : Gamma_{n+1}(k) = k+1} over (n+1)-cycles has the same law as the
/// fixed-point set of a uniform permutation of [n], and is exchangeable.
inline SuiteResult cycle_successor_law(std::size_t n) {
  SuiteResult r{"cycle-successor-law"};
  std::vector<std::uint64_t> g_hist(n + 1, 0);
  std::map<IndexSet, std::uint64_t> g_sets;
  oracle::for_each_n_cycle(n + 1, [&](const Permutation& g) {
    IndexSet s;
    for (int k = 1; k <= static_cast<int>(n); ++k)
      if (g(k) == k + 1) s.push_back(k);
    ++g_hist[s.size()];
    ++g_sets[s];
  });
  const auto f_hist = oracle::histogram(n, [](const Permutation& p) { return fixed_point_count(p); });
  if (g_hist != f_hist) r.fail("n=" + std::to_string(n) + ": G " + describe_counts(g_hist) + " vs F " + describe_counts(f_hist));
  std::string witness;
  if (!oracle::exchangeable_counts(g_sets, oracle::all_subsets(static_cast<int>(n)), &witness))
    r.fail("G_n not exchangeable: " + witness);
  return r;
}

inline SuiteResult chains(std::size_t n) {
  SuiteResult r{"chains"};
  const std::size_t fact = factorial(static_cast<long>(n)).convert_to<std::size_t>();
  const std::size_t cycles_count = factorial(static_cast<long>(n) - 1).convert_to<std::size_t>();
  if (!uniform_law(exact_chain_law(Chain::insertion, n), fact)) r.fail("insertion chain is not uniform at n=" + std::to_string(n));
  if (!uniform_law(exact_chain_law(Chain::crp, n), fact)) r.fail("crp chain is not uniform at n=" + std::to_string(n));
  if (!uniform_law(exact_chain_law(Chain::cycle_growth, n), cycles_count))
    r.fail("cycle growth is not uniform on n-cycles at n=" + std::to_string(n));
  for (const auto& sub : {insertion_transitions(n), crp_transitions(n), cycle_growth_transitions(n), cycle_successor_law(n)})
    if (!sub.passed) r.fail(sub.name + ": " + sub.detail);
  return r;
}

/// Exact commutator laws: rotation gives the circular law; means match the
/// closed form for every eta in S_n.
inline SuiteResult commutator(std::size_t n, bool all_eta = true) {
  SuiteResult r{"commutator"};
  const long nl = static_cast<long>(n);
  if (exact_commutator_pmf(Permutation::rotation(n)) != circular_pmf(nl)) r.fail("rotation law differs from circular law");
  if (all_eta && n >= 2) {
    oracle::for_each_permutation(n, [&](const Permutation& eta) {
      const auto hist = commutator_fixed_point_histogram(eta, 1);
      if (ExactPmf::from_counts(hist).mean() != expectation_formula(nl, static_cast<long>(fixed_point_count(eta))))
        r.fail("mean formula fails at eta=" + to_string(eta));
    });
  }
  return r;
}

}  // namespace permlab::verify
