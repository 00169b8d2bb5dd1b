#pragma once

// Fixed points of the commutator [eta, Pi] for uniform Pi: exact laws by
// enumeration, Monte Carlo laws with a confidence half-width for the distance
// to Poisson(1), and the exchangeable pair (W, W') used to bound that distance.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <future>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "permlab/exact_dist.hpp"
#include "permlab/generators.hpp"
#include "permlab/numeric.hpp"
#include "permlab/permutation.hpp"
#include "permlab/random.hpp"

namespace permlab {

inline constexpr std::size_t kExactCommutatorCap = 8;

namespace detail {
inline unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned hw = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(hw, std::max<std::size_t>(jobs, 1)));
}

inline void merge_into(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
  if (from.size() > into.size()) into.resize(from.size(), 0);
  for (std::size_t i = 0; i < from.size(); ++i) into[i] += from[i];
}
}  // namespace detail

/// Histogram of chi([eta, pi]) over all pi in S_n. The enumeration is split by
/// the value of pi(1), one block of (n-1)! permutations per job.
inline std::vector<std::uint64_t> commutator_fixed_point_histogram(const Permutation& eta, unsigned threads = 0) {
  const std::size_t n = eta.size();
  if (n > kExactCommutatorCap)
    throw std::out_of_range("exact commutator law is capped at n <= " + std::to_string(kExactCommutatorCap));
  auto block = [&eta, n](int first) {
    std::vector<std::uint64_t> counts(n + 1, 0);
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::rotate(w.begin(), w.begin() + (first - 1), w.begin() + first);  // first, 1, 2, ..., n
    do {
      ++counts[commutator_fixed_point_count(eta, Permutation::unchecked(w))];
    } while (std::next_permutation(w.begin() + 1, w.end()));
    return counts;
  };
  std::vector<std::uint64_t> total(n + 1, 0);
  const unsigned workers = detail::worker_count(threads, n);
  for (std::size_t start = 1; start <= n; start += workers) {
    std::vector<std::future<std::vector<std::uint64_t>>> jobs;
    for (std::size_t f = start; f < start + workers && f <= n; ++f)
      jobs.push_back(std::async(std::launch::async, block, static_cast<int>(f)));
    for (auto& j : jobs) detail::merge_into(total, j.get());
  }
  return total;
}

/// The identity commutes with everything, so its law is known at any n.
inline ExactPmf exact_commutator_pmf(const Permutation& eta, unsigned threads = 0) {
  if (eta == Permutation::identity(eta.size())) return ExactPmf::point_mass(eta.size());
  return ExactPmf::from_counts(commutator_fixed_point_histogram(eta, threads));
}

/// E[chi([eta, Pi])] for eta with f fixed points.
inline Rational expectation_formula(long n, long f) {
  if (n < 2) throw std::domain_error("expectation formula needs n >= 2");
  if (f < 0 || f > n) throw std::domain_error("fixed point count must satisfy 0 <= f <= n");
  const Rational moved(n - f, n);
  const Rational fixed(f, n);
  return Rational(n) * (moved * moved / Rational(n - 1) + fixed * fixed);
}

/// E[M (M-1) ... (M-k+1)] for M = chi/2 when eta is a product of m disjoint 2-cycles.
inline Rational two_cycle_factorial_moment(long m, long k) {
  if (k < 1 || k > m) throw std::domain_error("factorial moment order must satisfy 1 <= k <= m");
  BigInt num = 1, den = 1;
  for (long j = 0; j < k; ++j) {
    num *= m - j;
    den *= 2 * m - 2 * j - 1;
  }
  return Rational(num, den);
}

/// The law of #{i : U(i) = V(i)} for U, V independent and uniform on the
/// conjugacy class of eta, by enumerating every pair in the class.
inline constexpr std::size_t kAgreementCap = 7;

inline std::vector<Permutation> conjugacy_class(const Permutation& eta) {
  if (eta.size() > kAgreementCap)
    throw std::out_of_range("conjugacy class enumeration is capped at n <= " + std::to_string(kAgreementCap));
  std::set<Permutation> cls;
  std::vector<int> w(eta.size());
  std::iota(w.begin(), w.end(), 1);
  do {
    cls.insert(conjugate(eta, Permutation::unchecked(w)));
  } while (std::next_permutation(w.begin(), w.end()));
  return {cls.begin(), cls.end()};
}

inline ExactPmf exact_agreement_pmf(const Permutation& eta) {
  const auto cls = conjugacy_class(eta);
  std::vector<std::uint64_t> counts(eta.size() + 1, 0);
  for (const auto& u : cls)
    for (const auto& v : cls) {
      std::size_t c = 0;
      for (int i = 1; i <= static_cast<int>(eta.size()); ++i) c += u(i) == v(i);
      ++counts[c];
    }
  return ExactPmf::from_counts(counts);
}

// ---------------------------------------------------------------------------
// Reports.

enum class Method { exact, monte_carlo };

inline std::string to_string(Method m) { return m == Method::exact ? "exact" : "monte-carlo"; }

struct EtaDescriptor {
  std::size_t n = 0;
  int fixed_points = 0;
  int two_cycles = 0;
  CyclePartition cycle_type;
  std::string label;
};

inline EtaDescriptor describe(const Permutation& eta, std::string label = {}) {
  EtaDescriptor d;
  d.n = eta.size();
  d.cycle_type = cycle_partition(eta);
  d.fixed_points = d.cycle_type.fixed_points();
  d.two_cycles = d.cycle_type.two_cycles();
  d.label = label.empty() ? to_string(eta) : std::move(label);
  return d;
}

struct CommutatorReport {
  EtaDescriptor eta;
  Method method = Method::exact;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  /// Exact law, or the empirical law count/samples for Monte Carlo.
  ExactPmf pmf;
  Rational mean;
  TvReport tv;
  /// 99% half-width on tv.distance; zero for exact reports.
  Real ci_half_width = 0;
};

inline CommutatorReport exact_commutator_report(const Permutation& eta, std::string label = {}) {
  CommutatorReport r;
  r.eta = describe(eta, std::move(label));
  r.method = Method::exact;
  r.pmf = exact_commutator_pmf(eta);
  r.mean = r.pmf.mean();
  r.tv = tv_distance(r.pmf, poisson_reference(Rational(1)));
  return r;
}

inline constexpr double kZ99 = 2.5758293035489004;
inline constexpr std::size_t kCiBinCap = 20;

/// Conservative half-width for the TV distance of an empirical law: half the
/// sum of per-bin normal-approximation half-widths over outcomes 0..20 plus one
/// tail bin for everything above.
inline Real tv_half_width(const std::vector<std::uint64_t>& counts, std::uint64_t samples, double z = kZ99) {
  std::vector<std::uint64_t> bins(kCiBinCap + 2, 0);
  for (std::size_t m = 0; m < counts.size(); ++m) bins[std::min(m, kCiBinCap + 1)] += counts[m];
  double sum = 0;
  const double nn = static_cast<double>(samples);
  for (auto c : bins) {
    const double p = static_cast<double>(c) / nn;
    sum += z * std::sqrt(p * (1 - p) / nn);
  }
  return Real(sum / 2);
}

namespace detail {
inline void shuffle_in_place(std::vector<int>& w, RandomSource& rng) {
  for (std::size_t i = w.size() - 1; i > 0; --i) std::swap(w[i], w[rng.uniform(i + 1) - 1]);
}
}  // namespace detail

inline constexpr std::uint64_t kMonteCarloStreams = 64;

/// Histogram of chi([eta, Pi]) over `samples` uniform draws. Samples are split
/// into kMonteCarloStreams chunks, chunk c drawing from stream (seed, c), so the
/// result depends only on (eta, samples, seed) and not on the thread count.
inline std::vector<std::uint64_t> mc_commutator_histogram(const Permutation& eta, std::uint64_t samples,
                                                          std::uint64_t seed, unsigned threads = 0) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  const std::size_t n = eta.size();
  auto chunk = [&eta, n, samples, seed](std::uint64_t c) {
    const std::uint64_t lo = samples * c / kMonteCarloStreams;
    const std::uint64_t hi = samples * (c + 1) / kMonteCarloStreams;
    RandomSource rng(seed, c);
    std::vector<std::uint64_t> counts(n + 1, 0);
    std::vector<int> w(n);
    const auto e = eta.image();
    for (std::uint64_t s = lo; s < hi; ++s) {
      std::iota(w.begin(), w.end(), 1);
      if (n > 1) detail::shuffle_in_place(w, rng);
      std::size_t fixed = 0;
      for (std::size_t i = 0; i < n; ++i) fixed += e[w[i] - 1] == w[e[i] - 1];
      ++counts[fixed];
    }
    return counts;
  };
  std::vector<std::uint64_t> total(n + 1, 0);
  const unsigned workers = detail::worker_count(threads, kMonteCarloStreams);
  for (std::uint64_t start = 0; start < kMonteCarloStreams; start += workers) {
    std::vector<std::future<std::vector<std::uint64_t>>> jobs;
    for (std::uint64_t c = start; c < start + workers && c < kMonteCarloStreams; ++c)
      jobs.push_back(std::async(std::launch::async, chunk, c));
    for (auto& j : jobs) detail::merge_into(total, j.get());
  }
  return total;
}

inline CommutatorReport mc_commutator_pmf(const Permutation& eta, std::uint64_t samples, std::uint64_t seed,
                                          std::string label = {}, unsigned threads = 0) {
  const auto counts = mc_commutator_histogram(eta, samples, seed, threads);
  CommutatorReport r;
  r.eta = describe(eta, std::move(label));
  r.method = Method::monte_carlo;
  r.samples = samples;
  r.seed = seed;
  r.pmf = ExactPmf::from_counts(counts);
  r.mean = r.pmf.mean();
  r.tv = tv_distance(r.pmf, poisson_reference(Rational(1)));
  r.ci_half_width = tv_half_width(counts, samples);
  return r;
}

// ---------------------------------------------------------------------------
// Exchangeable pair.

struct ExchangeablePairSample {
  std::size_t w = 0;
  std::size_t w_prime = 0;
  /// I and J both avoid the fixed points and 2-cycle members of U and V.
  bool event_a = false;
  int i = 0;
  int j = 0;
  Permutation u = Permutation::identity(1);
  Permutation v = Permutation::identity(1);
};

namespace detail {
/// Marks fixed points and members of 2-cycles.
inline void mark_short_cycles(const Permutation& p, std::vector<bool>& marked) {
  for (int k = 1; k <= static_cast<int>(p.size()); ++k)
    if (p(p(k)) == k) marked[k] = true;
}

/// #{i : u(i) = v(i), i outside the short cycles of u and v}.
inline std::size_t long_cycle_agreements(const Permutation& u, const Permutation& v) {
  std::vector<bool> excluded(u.size() + 1, false);
  mark_short_cycles(u, excluded);
  mark_short_cycles(v, excluded);
  std::size_t c = 0;
  for (int k = 1; k <= static_cast<int>(u.size()); ++k) c += !excluded[k] && u(k) == v(k);
  return c;
}
}  // namespace detail

/// U, V independent and uniform on the class of eta; I != J uniform; V' is V
/// with the labels I and J exchanged in its cycles. W = N 1_A and W' = N' 1_A.
inline ExchangeablePairSample exchangeable_pair_sample(const Permutation& eta, RandomSource& rng) {
  const std::size_t n = eta.size();
  if (n < 4) throw std::invalid_argument("exchangeable pair needs n >= 4");
  ExchangeablePairSample s;
  s.u = conjugacy_sampler(eta, rng);
  s.v = conjugacy_sampler(eta, rng);
  s.i = static_cast<int>(rng.uniform(n));
  do {
    s.j = static_cast<int>(rng.uniform(n));
  } while (s.j == s.i);

  std::vector<bool> short_cycles(n + 1, false);
  detail::mark_short_cycles(s.u, short_cycles);
  detail::mark_short_cycles(s.v, short_cycles);
  s.event_a = !short_cycles[s.i] && !short_cycles[s.j];
  if (!s.event_a) return s;

  std::vector<int> swap_img(n);
  std::iota(swap_img.begin(), swap_img.end(), 1);
  std::swap(swap_img[s.i - 1], swap_img[s.j - 1]);
  const Permutation tau = Permutation::unchecked(std::move(swap_img));
  const Permutation v_prime = compose(tau, compose(s.v, tau));

  s.w = detail::long_cycle_agreements(s.u, s.v);
  s.w_prime = detail::long_cycle_agreements(s.u, v_prime);
  return s;
}

}  // namespace permlab
