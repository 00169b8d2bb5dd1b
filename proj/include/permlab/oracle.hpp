#pragma once

// Brute-force enumeration over S_n and over circular permutations. Nothing in
// here touches the closed-form laws; histograms are plain counts of statistics
// evaluated permutation by permutation.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "permlab/permutation.hpp"

namespace permlab::oracle {

inline constexpr std::size_t kEnumerationCap = 10;

inline void require_enumerable(std::size_t n, std::size_t cap = kEnumerationCap) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > cap) throw std::out_of_range("exhaustive enumeration is capped at n <= " + std::to_string(cap));
}

/// Calls fn(p) for every p in S_n, in lexicographic order of the one-line word.
template <typename Fn>
void for_each_permutation(std::size_t n, Fn&& fn) {
  require_enumerable(n);
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    fn(Permutation::unchecked(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

/// Calls fn(listing) for the (n-1)! listings of [n] that start with 1, i.e.
/// one representative per circular permutation.
template <typename Fn>
void for_each_circular(std::size_t n, Fn&& fn) {
  require_enumerable(n + 1);
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  if (n == 0) {
    fn(std::vector<int>{});
    return;
  }
  do {
    fn(w);
  } while (std::next_permutation(w.begin() + 1, w.end()));
}

/// Calls fn(p) for every n-cycle of [n].
template <typename Fn>
void for_each_n_cycle(std::size_t n, Fn&& fn) {
  for_each_circular(n, [&](const std::vector<int>& listing) {
    std::vector<int> img(n);
    for (std::size_t i = 0; i < n; ++i) img[listing[i] - 1] = listing[(i + 1) % n];
    fn(Permutation::unchecked(std::move(img)));
  });
}

/// counts[m] = #{p in S_n : stat(p) = m}.
template <typename Stat>
std::vector<std::uint64_t> histogram(std::size_t n, Stat&& stat) {
  std::vector<std::uint64_t> counts(n + 1, 0);
  for_each_permutation(n, [&](const Permutation& p) {
    const std::size_t m = static_cast<std::size_t>(stat(p));
    if (m >= counts.size()) counts.resize(m + 1, 0);
    ++counts[m];
  });
  return counts;
}

/// Number of permutations realising each value of a set-valued statistic.
template <typename SetStat>
std::map<IndexSet, std::uint64_t> set_counts(std::size_t n, SetStat&& stat) {
  std::map<IndexSet, std::uint64_t> out;
  for_each_permutation(n, [&](const Permutation& p) { ++out[stat(p)]; });
  return out;
}

/// All subsets of [n] as sorted index sets.
inline std::vector<IndexSet> all_subsets(int n) {
  std::vector<IndexSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    IndexSet s;
    for (int k = 1; k <= n; ++k)
      if (mask & (1u << (k - 1))) s.push_back(k);
    out.push_back(std::move(s));
  }
  return out;
}

/// Checks that count(A) depends only on |A| for all A in `universe`
/// (missing sets count as zero). On failure `witness` names the offending pair.
inline bool exchangeable_counts(const std::map<IndexSet, std::uint64_t>& counts, const std::vector<IndexSet>& universe,
                                std::string* witness = nullptr) {
  std::map<std::size_t, std::pair<IndexSet, std::uint64_t>> by_size;
  for (const auto& a : universe) {
    const auto it = counts.find(a);
    const std::uint64_t c = it == counts.end() ? 0 : it->second;
    const auto [slot, fresh] = by_size.try_emplace(a.size(), a, c);
    if (!fresh && slot->second.second != c) {
      if (witness)
        *witness = to_string(slot->second.first) + " -> " + std::to_string(slot->second.second) + " vs " +
                   to_string(a) + " -> " + std::to_string(c);
      return false;
    }
  }
  return true;
}

}  // namespace permlab::oracle
