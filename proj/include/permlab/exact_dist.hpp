#pragma once

// Closed-form laws of the permutation statistics, evaluated in exact rationals,
// and total variation distance to a Poisson reference.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "permlab/numeric.hpp"

namespace permlab {

/// Probability mass function on {0, 1, ..., size()-1} with exact rational masses.
class ExactPmf {
 public:
  ExactPmf() = default;
  explicit ExactPmf(std::vector<Rational> probs) : probs_(std::move(probs)) {
    for (const auto& p : probs_)
      if (p < 0) throw std::invalid_argument("negative probability");
    trim();
  }

  /// counts[m] / sum(counts).
  template <typename Count>
  static ExactPmf from_counts(const std::vector<Count>& counts) {
    BigInt total = 0;
    for (const auto& c : counts) total += BigInt(c);
    if (total == 0) throw std::invalid_argument("empty histogram");
    std::vector<Rational> probs;
    probs.reserve(counts.size());
    for (const auto& c : counts) probs.emplace_back(BigInt(c), total);
    return ExactPmf(std::move(probs));
  }

  static ExactPmf point_mass(std::size_t at) {
    std::vector<Rational> probs(at + 1, Rational(0));
    probs[at] = 1;
    return ExactPmf(std::move(probs));
  }

  /// One past the largest outcome with positive mass.
  std::size_t size() const noexcept { return probs_.size(); }
  Rational operator[](std::size_t m) const { return m < probs_.size() ? probs_[m] : Rational(0); }
  const std::vector<Rational>& masses() const noexcept { return probs_; }

  Rational total() const {
    Rational s = 0;
    for (const auto& p : probs_) s += p;
    return s;
  }
  bool normalized() const { return total() == 1; }

  Rational mean() const {
    Rational s = 0;
    for (std::size_t m = 0; m < probs_.size(); ++m) s += probs_[m] * m;
    return s;
  }

  /// E[X (X-1) ... (X-k+1)].
  Rational factorial_moment(int k) const {
    Rational s = 0;
    for (std::size_t m = 0; m < probs_.size(); ++m) {
      BigInt falling = 1;
      for (int j = 0; j < k; ++j) falling *= static_cast<long>(m) - j;
      s += probs_[m] * Rational(falling);
    }
    return s;
  }

  bool operator==(const ExactPmf& o) const { return probs_ == o.probs_; }

 private:
  void trim() {
    while (!probs_.empty() && probs_.back() == 0) probs_.pop_back();
  }
  std::vector<Rational> probs_;
};

// ---------------------------------------------------------------------------

/// D(n) = n! sum_{j=0}^n (-1)^j / j!.
inline BigInt derangement_count(long n) {
  if (n < 0) throw std::domain_error("derangement_count needs n >= 0");
  // D(n) = n D(n-1) + (-1)^n
  BigInt d = 1;
  for (long k = 1; k <= n; ++k) d = d * k + (k % 2 == 0 ? 1 : -1);
  return d;
}

namespace detail {
inline void require_positive_n(long n) {
  if (n < 1) throw std::domain_error("n must be >= 1");
}
/// P{exactly m fixed points} for a uniform permutation of [n].
inline Rational fixed_point_mass(long n, long m) {
  if (m < 0 || m > n) return 0;
  return alternating_inverse_factorial_sum(n - m) / Rational(factorial(m));
}
}  // namespace detail

inline ExactPmf fixed_point_pmf(long n) {
  detail::require_positive_n(n);
  std::vector<Rational> probs;
  for (long m = 0; m <= n; ++m) probs.push_back(detail::fixed_point_mass(n, m));
  return ExactPmf(std::move(probs));
}

/// Common law of the number of unseparated pairs and of fixed points in [n-1].
inline ExactPmf unseparated_pmf(long n) {
  detail::require_positive_n(n);
  std::vector<Rational> probs;
  for (long m = 0; m <= n - 1; ++m) {
    probs.push_back(detail::fixed_point_mass(n, m) * Rational(n - m, n) +
                    detail::fixed_point_mass(n, m + 1) * Rational(m + 1, n));
  }
  return ExactPmf(std::move(probs));
}

/// Probability that a uniform permutation of [n] has no unseparated pair.
inline Rational whitworth_zero_prob(long n) {
  detail::require_positive_n(n);
  return alternating_inverse_factorial_sum(n) + alternating_inverse_factorial_sum(n - 1) / Rational(n);
}

/// Law of #{k in [n-h] : pi(k+h) = pi(k)+1}: the total fixed-point count l is
/// thinned hypergeometrically onto [n-h].
inline ExactPmf shifted_pmf(long n, long h) {
  detail::require_positive_n(n);
  if (h < 1 || h >= n) throw std::out_of_range("shift h must satisfy 1 <= h < n");
  std::vector<Rational> probs;
  for (long m = 0; m <= n - h; ++m) {
    Rational p = 0;
    for (long l = m; l <= m + h; ++l) {
      const BigInt ways = binomial(n - h, m) * binomial(h, l - m);
      if (ways == 0) continue;
      p += detail::fixed_point_mass(n, l) * Rational(ways, binomial(n, l));
    }
    probs.push_back(p);
  }
  return ExactPmf(std::move(probs));
}

/// Law of the number of circular successions of a uniform permutation of [n].
inline ExactPmf circular_pmf(long n) {
  detail::require_positive_n(n);
  std::vector<Rational> probs;
  BigInt h_fact = 1;
  for (long m = 0; m <= n; ++m) {
    Rational inner = 0;
    h_fact = 1;
    for (long h = 0; h <= n - m - 1; ++h) {
      if (h > 0) h_fact *= h;
      Rational term(BigInt(n), BigInt(h_fact * (n - m - h)));
      if (h % 2 == 0) inner += term;
      else inner -= term;
    }
    Rational boundary(BigInt(n), factorial(n - m));
    if ((n - m) % 2 == 0) inner += boundary;
    else inner -= boundary;
    probs.push_back(inner / Rational(factorial(m)));
  }
  return ExactPmf(std::move(probs));
}

/// Number of circular permutations of [n] with no k followed by k+1 (mod n).
/// Also defined at n = 0, where the formula gives 1 (the empty class).
inline BigInt theta_empty_count(long n) {
  if (n < 0) throw std::domain_error("theta_empty_count needs n >= 0");
  BigInt sum = 0;
  for (long h = 0; h <= n - 1; ++h) {
    const BigInt term = binomial(n, h) * factorial(n - h - 1);
    if (h % 2 == 0) sum += term;
    else sum -= term;
  }
  sum += (n % 2 == 0) ? 1 : -1;
  return sum;
}

/// D(n) = theta_empty_count(n) + theta_empty_count(n+1).
inline bool check_derangement_identity(long n) {
  detail::require_positive_n(n);
  return derangement_count(n) == theta_empty_count(n) + theta_empty_count(n + 1);
}

// ---------------------------------------------------------------------------
// Poisson reference and total variation.

/// Masses e^-lambda lambda^m / m! for m <= cap, plus the mass beyond cap.
struct PoissonReference {
  Rational lambda;
  std::vector<Real> masses;
  Real tail;

  Real operator[](std::size_t m) const { return m < masses.size() ? masses[m] : Real(0); }
  std::size_t cap() const { return masses.size() - 1; }
};

inline constexpr long kDefaultPoissonCap = 40;

inline PoissonReference poisson_reference(const Rational& lambda, long cap = kDefaultPoissonCap) {
  if (lambda <= 0) throw std::domain_error("Poisson mean must be positive");
  if (cap < 0) throw std::domain_error("Poisson cap must be >= 0");
  PoissonReference ref;
  ref.lambda = lambda;
  const Real lam = to_real(lambda);
  Real term = boost::multiprecision::exp(-lam);
  for (long m = 0; m <= cap; ++m) {
    if (m > 0) term = term * lam / m;
    ref.masses.push_back(term);
  }
  // Sum the tail directly; terms decay factorially once m exceeds lambda.
  ref.tail = 0;
  const Real eps = std::numeric_limits<Real>::epsilon() * std::numeric_limits<Real>::epsilon();
  for (long m = cap + 1;; ++m) {
    term = term * lam / m;
    ref.tail += term;
    if (m > lam + 1 && term < eps * (ref.tail + eps)) break;
  }
  return ref;
}

struct TvReport {
  Real distance;
  /// Part of `distance` coming from reference mass beyond its cap.
  Real tail_contribution;
  std::string reference;
};

/// d_TV = 1/2 sum |a(m) - b(m)|. The reference is widened to cover a's
/// support, so mass of `b` beyond its cap is where `a` has none and enters
/// the sum exactly.
inline TvReport tv_distance(const ExactPmf& a, const PoissonReference& reference) {
  const PoissonReference b = a.size() > reference.masses.size()
                                 ? poisson_reference(reference.lambda, static_cast<long>(a.size()) - 1)
                                 : reference;
  Real sum = 0;
  for (std::size_t m = 0; m < b.masses.size(); ++m) sum += boost::multiprecision::abs(to_real(a[m]) - b.masses[m]);
  TvReport r;
  r.tail_contribution = b.tail / 2;
  r.distance = sum / 2 + r.tail_contribution;
  const std::string lam = denominator(b.lambda) == 1 ? numerator(b.lambda).str() : to_fraction_string(b.lambda);
  r.reference = "Poisson(" + lam + ")";
  return r;
}

inline Rational exact_tv_distance(const ExactPmf& a, const ExactPmf& b) {
  Rational sum = 0;
  for (std::size_t m = 0; m < std::max(a.size(), b.size()); ++m) sum += boost::multiprecision::abs(a[m] - b[m]);
  return sum / 2;
}

inline TvReport tv_distance(const ExactPmf& a, const ExactPmf& b) {
  return TvReport{to_real(exact_tv_distance(a, b)), Real(0), "exact"};
}

}  // namespace permlab
