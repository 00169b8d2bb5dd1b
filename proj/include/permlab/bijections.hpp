#pragma once

// Two constructive bijections:
//  * the parenthesis-erasing transform on canonical cycle forms, and the map
//    it induces from fixed points to shifted successions;
//  * insertion/deletion on circular permutations that adds one prescribed
//    element to the set Theta(sigma) = {j : sigma~(j) = j+1 mod n}.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "permlab/permutation.hpp"

namespace permlab {

/// Cycles each led by their minimum, leaders strictly decreasing left to right.
struct CanonicalCycleForm {
  std::vector<std::vector<int>> cycles;

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& c : cycles) n += c.size();
    return n;
  }
  Permutation to_permutation() const { return Permutation::from_cycles(size(), cycles); }
  bool operator==(const CanonicalCycleForm&) const = default;
};

inline std::string to_string(const CanonicalCycleForm& f) {
  std::string out;
  for (const auto& c : f.cycles) out += "(" + detail::join(c) + ")";
  return out;
}

inline CanonicalCycleForm canonical_cycle_form(const Permutation& p) {
  auto cs = cycles(p);  // leaders increasing
  std::reverse(cs.begin(), cs.end());
  return CanonicalCycleForm{std::move(cs)};
}

/// Concatenation of the canonical cycle form, read as a one-line word.
inline Permutation fundamental_transform(const Permutation& p) {
  std::vector<int> word;
  word.reserve(p.size());
  for (const auto& c : canonical_cycle_form(p).cycles) word.insert(word.end(), c.begin(), c.end());
  return Permutation::unchecked(std::move(word));
}

/// Opens a new cycle at every left-to-right minimum of the word.
inline Permutation inverse_fundamental(const Permutation& word) {
  const auto w = word.image();
  std::vector<int> img(w.size());
  std::size_t start = 0;
  while (start < w.size()) {
    std::size_t end = start + 1;
    while (end < w.size() && w[end] > w[start]) ++end;
    for (std::size_t i = start; i < end; ++i) img[w[i] - 1] = (i + 1 < end) ? w[i + 1] : w[start];
    start = end;
  }
  return Permutation::unchecked(std::move(img));
}

/// Inverse of the transformed word of rho_h p, with rho_h(i) = i+h mod n. The
/// shifted successions of the result are exactly the fixed points of p in [n-h].
inline Permutation fixed_to_shifted(const Permutation& p, int h) {
  const int n = static_cast<int>(p.size());
  if (h < 1 || h >= n) throw std::out_of_range("shift h must satisfy 1 <= h < n");
  return inverse(fundamental_transform(compose(Permutation::rotation(p.size(), h), p)));
}

inline Permutation shifted_to_fixed(const Permutation& q, int h) {
  const int n = static_cast<int>(q.size());
  if (h < 1 || h >= n) throw std::out_of_range("shift h must satisfy 1 <= h < n");
  return compose(Permutation::rotation(q.size(), -h), inverse_fundamental(inverse(q)));
}

// ---------------------------------------------------------------------------
// Circular permutations.

/// {j : j is immediately followed by j+1 (mod n) in the circular listing}.
inline IndexSet theta(std::span<const int> listing) {
  const int n = static_cast<int>(listing.size());
  IndexSet out;
  for (int i = 0; i < n; ++i) {
    const int v = listing[i];
    if (listing[(i + 1) % n] == detail::wrap(v + 1, n)) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline IndexSet theta(const CircularPermutation& sigma) { return theta(sigma.word()); }

/// The same listing seen as the class of n-cycles: Theta via sigma~(j) = j+1.
inline IndexSet theta_of_cycle(const Permutation& n_cycle) {
  const int n = static_cast<int>(n_cycle.size());
  IndexSet out;
  for (int j = 1; j <= n; ++j)
    if (n_cycle(j) == detail::wrap(j + 1, n)) out.push_back(j);
  return out;
}

/// One insertion step on a concrete listing (rotation preserved, for traces).
/// For k <= n: raise entries above k by one, then place k+1 right after k.
/// For k = n+1: place n+1 right before the entry 1.
inline std::vector<int> circular_insert_listing(std::vector<int> listing, int k) {
  const int n = static_cast<int>(listing.size());
  if (k < 1 || k > n + 1) throw std::out_of_range("insertion label k must satisfy 1 <= k <= n+1");
  if (k == n + 1) {
    const auto one = std::find(listing.begin(), listing.end(), 1);
    listing.insert(one, k);
    return listing;
  }
  for (int& v : listing)
    if (v > k) ++v;
  const auto at = std::find(listing.begin(), listing.end(), k);
  listing.insert(at + 1, k + 1);
  return listing;
}

inline CircularPermutation circular_insert(const CircularPermutation& sigma, int k) {
  const auto w = sigma.word();
  return CircularPermutation(circular_insert_listing(std::vector<int>(w.begin(), w.end()), k));
}

/// Undoes circular_insert. k must be the largest element of Theta(listing).
inline std::vector<int> circular_delete_listing(std::vector<int> listing, int k) {
  const IndexSet th = theta(listing);
  if (th.empty() || th.back() != k)
    throw std::invalid_argument("k = " + std::to_string(k) + " is not the largest element of Theta");
  const int n = static_cast<int>(listing.size());
  if (k == n) {
    listing.erase(std::find(listing.begin(), listing.end(), n));
    return listing;
  }
  listing.erase(std::find(listing.begin(), listing.end(), k + 1));
  for (int& v : listing)
    if (v > k + 1) --v;
  return listing;
}

inline CircularPermutation circular_delete(const CircularPermutation& sigma, int k) {
  const auto w = sigma.word();
  return CircularPermutation(circular_delete_listing(std::vector<int>(w.begin(), w.end()), k));
}

namespace detail {
inline void check_build_args(std::span<const int> seed, const std::vector<int>& ks) {
  if (!theta(seed).empty()) throw std::invalid_argument("seed circular permutation must have empty Theta");
  std::size_t size = seed.size();
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i > 0 && ks[i] <= ks[i - 1]) throw std::invalid_argument("labels must be strictly increasing");
    if (ks[i] < 1 || ks[i] > static_cast<int>(size) + 1)
      throw std::out_of_range("label " + std::to_string(ks[i]) + " exceeds the current size + 1");
    ++size;
  }
}
}  // namespace detail

/// sigma_0, sigma_1, ..., sigma_m as concrete listings.
inline std::vector<std::vector<int>> build_circular_trace(std::vector<int> seed, const std::vector<int>& ks) {
  detail::check_build_args(seed, ks);
  std::vector<std::vector<int>> trace{seed};
  for (int k : ks) trace.push_back(circular_insert_listing(trace.back(), k));
  return trace;
}

/// Maps sigma0 (Theta empty) to the circular permutation of size |sigma0|+|ks|
/// whose Theta is exactly ks.
inline CircularPermutation build_circular(const CircularPermutation& sigma0, const std::vector<int>& ks) {
  const auto w = sigma0.word();
  return CircularPermutation(build_circular_trace(std::vector<int>(w.begin(), w.end()), ks).back());
}

/// Inverse of build_circular: peels Theta in descending order. The first entry
/// of the trace is the input, the last has empty Theta.
inline std::vector<std::vector<int>> peel_circular_trace(std::vector<int> listing) {
  std::vector<std::vector<int>> trace{listing};
  for (IndexSet th = theta(listing); !th.empty(); th = theta(trace.back()))
    trace.push_back(circular_delete_listing(trace.back(), th.back()));
  return trace;
}

struct PeeledCircular {
  CircularPermutation seed;
  std::vector<int> labels;  // ascending
};

inline PeeledCircular peel_circular(const CircularPermutation& tau) {
  const auto w = tau.word();
  PeeledCircular out{CircularPermutation(), theta(tau)};
  out.seed = CircularPermutation(peel_circular_trace(std::vector<int>(w.begin(), w.end())).back());
  return out;
}

}  // namespace permlab
