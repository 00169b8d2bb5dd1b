#pragma once

// Sequential constructions of uniform random permutations:
//  * insertion: put n+1 into one of the n+1 slots of the one-line word;
//  * Chinese restaurant: patron n+1 sits left of someone or at a new table;
//  * cycle growth: splice n+1 into an n-cycle right after a uniform K.
// Each random step has a deterministic twin indexed by its choice, which the
// exact path enumeration in exact_chain_law drives.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "permlab/numeric.hpp"
#include "permlab/permutation.hpp"
#include "permlab/random.hpp"

namespace permlab {

/// Fisher-Yates.
inline Permutation uniform_permutation(std::size_t n, RandomSource& rng) {
  Permutation id = Permutation::identity(n);
  std::vector<int> img(id.image().begin(), id.image().end());
  for (std::size_t i = n - 1; i > 0; --i) std::swap(img[i], img[rng.uniform(i + 1) - 1]);
  return Permutation::unchecked(std::move(img));
}

// --- insertion chain --------------------------------------------------------

/// Slot j in 0..n sits after position j of the word (slot 0 is the front).
inline Permutation insert_at_slot(const Permutation& p, std::size_t slot) {
  if (slot > p.size()) throw std::out_of_range("slot must be in [0, n]");
  std::vector<int> img(p.image().begin(), p.image().end());
  img.insert(img.begin() + static_cast<std::ptrdiff_t>(slot), static_cast<int>(p.size() + 1));
  return Permutation::unchecked(std::move(img));
}

inline Permutation insertion_step(const Permutation& p, RandomSource& rng) {
  return insert_at_slot(p, rng.uniform(p.size() + 1) - 1);
}

// --- Chinese restaurant process ---------------------------------------------

/// Each table lists its patrons so that the induced permutation sends every
/// patron to the next one listed (wrapping). Patron i's successor is the
/// patron sitting immediately to i's left; a lone patron maps to itself.
class RestaurantState {
 public:
  /// Patron 1 alone at the first table.
  RestaurantState() : tables_{{1}}, patrons_(1) {}

  std::size_t patrons() const noexcept { return patrons_; }
  const std::vector<std::vector<int>>& tables() const noexcept { return tables_; }

  /// choice in [1, n]: the newcomer sits immediately left of patron `choice`;
  /// choice n+1: the newcomer opens a new table (appended at the end).
  RestaurantState seat(std::size_t choice) const {
    if (choice < 1 || choice > patrons_ + 1) throw std::out_of_range("seating choice must be in [1, n+1]");
    RestaurantState next = *this;
    const int newcomer = static_cast<int>(patrons_ + 1);
    if (choice == patrons_ + 1) {
      next.tables_.push_back({newcomer});
    } else {
      for (auto& t : next.tables_) {
        const auto at = std::find(t.begin(), t.end(), static_cast<int>(choice));
        if (at != t.end()) {
          t.insert(at + 1, newcomer);
          break;
        }
      }
    }
    next.patrons_ = patrons_ + 1;
    return next;
  }

  Permutation permutation() const { return Permutation::from_cycles(patrons_, tables_); }

 private:
  std::vector<std::vector<int>> tables_;
  std::size_t patrons_;
};

inline RestaurantState crp_step(const RestaurantState& state, RandomSource& rng) {
  return state.seat(rng.uniform(state.patrons() + 1));
}

/// #{2 <= k <= n : Sigma_n(k) = k}.
inline std::size_t late_fixed_point_count(const Permutation& p) {
  std::size_t c = 0;
  for (int k = 2; k <= static_cast<int>(p.size()); ++k) c += p(k) == k;
  return c;
}

// --- n-cycle growth ---------------------------------------------------------

/// Replaces (..., K, gamma(K), ...) by (..., K, n+1, gamma(K), ...).
inline Permutation splice_after(const Permutation& gamma, int k) {
  if (!is_single_cycle(gamma)) throw std::invalid_argument("cycle growth needs a single n-cycle");
  const int n = static_cast<int>(gamma.size());
  if (k < 1 || k > n) throw std::out_of_range("splice point must be in [1, n]");
  std::vector<int> img(gamma.image().begin(), gamma.image().end());
  img.push_back(gamma(k));
  img[k - 1] = n + 1;
  return Permutation::unchecked(std::move(img));
}

inline Permutation cycle_growth_step(const Permutation& gamma, RandomSource& rng) {
  return splice_after(gamma, static_cast<int>(rng.uniform(gamma.size())));
}

/// #{k in [n-1] : gamma(k) = k+1}.
inline std::size_t cycle_successor_count(const Permutation& gamma) {
  std::size_t c = 0;
  for (int k = 1; k < static_cast<int>(gamma.size()); ++k) c += gamma(k) == k + 1;
  return c;
}

// --- conjugacy classes --------------------------------------------------------

/// g^-1 eta g with g uniform: uniform on the conjugacy class of eta.
inline Permutation conjugacy_sampler(const Permutation& eta, RandomSource& rng) {
  return conjugate(eta, uniform_permutation(eta.size(), rng));
}

// --- whole-chain runs and exact laws -----------------------------------------

enum class Chain { insertion, crp, cycle_growth };

inline std::string to_string(Chain c) {
  switch (c) {
    case Chain::insertion: return "insertion";
    case Chain::crp: return "crp";
    case Chain::cycle_growth: return "cycle-growth";
  }
  return "?";
}

inline Chain parse_chain(const std::string& name) {
  if (name == "insertion") return Chain::insertion;
  if (name == "crp") return Chain::crp;
  if (name == "cycle-growth") return Chain::cycle_growth;
  throw std::invalid_argument("unknown chain '" + name + "'");
}

/// Pi_1, ..., Pi_n from one run of the chain started at the identity of [1].
inline std::vector<Permutation> run_chain(Chain chain, std::size_t n, RandomSource& rng) {
  if (n < 1) throw std::invalid_argument("chain length n must be >= 1");
  std::vector<Permutation> path{Permutation::identity(1)};
  RestaurantState table;
  while (path.size() < n) {
    switch (chain) {
      case Chain::insertion: path.push_back(insertion_step(path.back(), rng)); break;
      case Chain::crp:
        table = crp_step(table, rng);
        path.push_back(table.permutation());
        break;
      case Chain::cycle_growth: path.push_back(cycle_growth_step(path.back(), rng)); break;
    }
  }
  return path;
}

inline constexpr std::size_t kExactChainCap = 7;

/// Exact law of the chain's state at size n, by summing the probabilities of
/// every choice path from the one-element start.
inline std::map<Permutation, Rational> exact_chain_law(Chain chain, std::size_t n) {
  if (n < 1) throw std::invalid_argument("chain length n must be >= 1");
  if (n > kExactChainCap)
    throw std::out_of_range("exact chain law is capped at n <= " + std::to_string(kExactChainCap));
  std::map<Permutation, Rational> law;
  // Depth-first over paths; `prob` is the product of the step probabilities so far.
  std::function<void(const Permutation&, const RestaurantState&, const Rational&)> walk =
      [&](const Permutation& p, const RestaurantState& table, const Rational& prob) {
        const std::size_t size = p.size();
        if (size == n) {
          law[p] += prob;
          return;
        }
        switch (chain) {
          case Chain::insertion: {
            const Rational step(1, static_cast<long>(size + 1));
            for (std::size_t slot = 0; slot <= size; ++slot) walk(insert_at_slot(p, slot), table, prob * step);
            break;
          }
          case Chain::crp: {
            const Rational step(1, static_cast<long>(size + 1));
            for (std::size_t c = 1; c <= size + 1; ++c) {
              const RestaurantState next = table.seat(c);
              walk(next.permutation(), next, prob * step);
            }
            break;
          }
          case Chain::cycle_growth: {
            const Rational step(1, static_cast<long>(size));
            for (int k = 1; k <= static_cast<int>(size); ++k) walk(splice_after(p, k), table, prob * step);
            break;
          }
        }
      };
  walk(Permutation::identity(1), RestaurantState(), Rational(1));
  return law;
}

}  // namespace permlab
