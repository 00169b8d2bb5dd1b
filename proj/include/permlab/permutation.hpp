#pragma once

// Permutations of [n] in one-line notation and the statistics built on them.
//
// Every value crossing the public API is 1-indexed: perm(k) is the image of k,
// index sets contain labels in [n], and rotations wrap n+1 back to 1.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace permlab {

/// Sorted ascending list of labels in [n].
using IndexSet = std::vector<int>;

class Permutation {
 public:
  /// Throws std::invalid_argument unless `image` lists 1..n exactly once.
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    if (image_.empty()) throw std::invalid_argument("permutation must have n >= 1");
    std::vector<bool> seen(image_.size() + 1, false);
    for (int v : image_) {
      if (v < 1 || v > static_cast<int>(image_.size()) || seen[v])
        throw std::invalid_argument("not a permutation of [n]");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
  }

  /// i -> i + shift (mod n), representatives in [n].
  static Permutation rotation(std::size_t n, long shift = 1) {
    if (n == 0) throw std::invalid_argument("permutation must have n >= 1");
    const long nn = static_cast<long>(n);
    const long s = ((shift % nn) + nn) % nn;
    std::vector<int> img(n);
    for (long i = 0; i < nn; ++i) img[i] = static_cast<int>((i + s) % nn + 1);
    return unchecked(std::move(img));
  }

  /// Each cycle (c1, c2, ..., cr) maps c1 -> c2 -> ... -> cr -> c1; unlisted labels are fixed.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(n, 0);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        const int from = c[i];
        if (from < 1 || from > static_cast<int>(n) || img[from - 1] != 0)
          throw std::invalid_argument("cycles must be disjoint and drawn from [n]");
        img[from - 1] = c[(i + 1) % c.size()];
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (img[i] == 0) img[i] = static_cast<int>(i + 1);
    return Permutation(std::move(img));
  }

  /// Skips validation; callers guarantee a bijection of [n].
  static Permutation unchecked(std::vector<int> image) {
    Permutation p;
    p.image_ = std::move(image);
    return p;
  }

  std::size_t size() const noexcept { return image_.size(); }
  int operator()(int k) const { return image_[static_cast<std::size_t>(k - 1)]; }
  std::span<const int> image() const noexcept { return image_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  Permutation() = default;
  std::vector<int> image_;
};

namespace detail {
inline void require_same_size(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation sizes differ");
}
inline int wrap(int k, int n) { return (k - 1) % n + 1; }
}  // namespace detail

/// (p o q)(k) = p(q(k)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  detail::require_same_size(p, q);
  std::vector<int> img(p.size());
  for (std::size_t k = 0; k < img.size(); ++k) img[k] = p(q.image()[k]);
  return Permutation::unchecked(std::move(img));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> img(p.size());
  for (std::size_t k = 0; k < img.size(); ++k) img[p.image()[k] - 1] = static_cast<int>(k + 1);
  return Permutation::unchecked(std::move(img));
}

/// [eta, pi] = eta^-1 pi^-1 eta pi.
inline Permutation commutator(const Permutation& eta, const Permutation& pi) {
  detail::require_same_size(eta, pi);
  return compose(inverse(eta), compose(inverse(pi), compose(eta, pi)));
}

/// g^-1 p g.
inline Permutation conjugate(const Permutation& p, const Permutation& g) {
  detail::require_same_size(p, g);
  return compose(inverse(g), compose(p, g));
}

inline IndexSet fixed_points(const Permutation& p) {
  IndexSet out;
  for (int k = 1; k <= static_cast<int>(p.size()); ++k)
    if (p(k) == k) out.push_back(k);
  return out;
}

inline std::size_t fixed_point_count(const Permutation& p) {
  std::size_t c = 0;
  for (int k = 1; k <= static_cast<int>(p.size()); ++k) c += p(k) == k;
  return c;
}

/// Number of fixed points of [eta, pi] without materialising the commutator:
/// [eta, pi](i) = i exactly when eta(pi(i)) = pi(eta(i)).
inline std::size_t commutator_fixed_point_count(const Permutation& eta, const Permutation& pi) {
  detail::require_same_size(eta, pi);
  std::size_t c = 0;
  for (int i = 1; i <= static_cast<int>(eta.size()); ++i) c += eta(pi(i)) == pi(eta(i));
  return c;
}

/// {k in [n-h] : p(k+h) = p(k)+1}.
inline IndexSet shifted_successions(const Permutation& p, int h) {
  const int n = static_cast<int>(p.size());
  if (h < 1 || h >= n) throw std::out_of_range("shift h must satisfy 1 <= h < n");
  IndexSet out;
  for (int k = 1; k + h <= n; ++k)
    if (p(k + h) == p(k) + 1) out.push_back(k);
  return out;
}

/// {k in [n-1] : p(k+1) = p(k)+1}; empty for n = 1.
inline IndexSet unseparated_pairs(const Permutation& p) {
  if (p.size() == 1) return {};
  return shifted_successions(p, 1);
}

/// {k in [n] : p(k+1 mod n) = p(k)+1 mod n}, with n+1 read as 1 on both sides.
inline IndexSet circular_successions(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  IndexSet out;
  for (int k = 1; k <= n; ++k)
    if (p(detail::wrap(k + 1, n)) == detail::wrap(p(k) + 1, n)) out.push_back(k);
  return out;
}

struct CyclePartition {
  /// Cycle lengths, largest first.
  std::vector<int> lengths;

  int size() const { return std::accumulate(lengths.begin(), lengths.end(), 0); }
  int fixed_points() const { return static_cast<int>(std::count(lengths.begin(), lengths.end(), 1)); }
  int two_cycles() const { return static_cast<int>(std::count(lengths.begin(), lengths.end(), 2)); }

  bool operator==(const CyclePartition&) const = default;
  auto operator<=>(const CyclePartition&) const = default;
};

/// Cycles of p, each listed from its least element, in increasing order of that element.
inline std::vector<std::vector<int>> cycles(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> seen(n + 1, false);
  std::vector<std::vector<int>> out;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> c;
    for (int k = start; !seen[k]; k = p(k)) {
      seen[k] = true;
      c.push_back(k);
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline CyclePartition cycle_partition(const Permutation& p) {
  CyclePartition cp;
  for (const auto& c : cycles(p)) cp.lengths.push_back(static_cast<int>(c.size()));
  std::sort(cp.lengths.begin(), cp.lengths.end(), std::greater<>());
  return cp;
}

inline bool is_single_cycle(const Permutation& p) {
  int len = 1;
  for (int k = p(1); k != 1; k = p(k)) ++len;
  return len == static_cast<int>(p.size());
}

/// One class of S_n under rotation of the one-line word, held as the rotation
/// that starts with 1. Size 0 is the empty class (needed to seed a full build
/// in the circular insertion bijection).
class CircularPermutation {
 public:
  CircularPermutation() = default;

  /// Accepts any rotation of a listing of [n].
  explicit CircularPermutation(std::vector<int> listing) : word_(std::move(listing)) {
    std::vector<bool> seen(word_.size() + 1, false);
    for (int v : word_) {
      if (v < 1 || v > static_cast<int>(word_.size()) || seen[v])
        throw std::invalid_argument("not a listing of [n]");
      seen[v] = true;
    }
    if (!word_.empty()) std::rotate(word_.begin(), std::find(word_.begin(), word_.end(), 1), word_.end());
  }

  /// The class whose n-cycle avatar is `cycle`.
  static CircularPermutation from_cycle(const Permutation& cycle) {
    if (!is_single_cycle(cycle)) throw std::invalid_argument("not a single n-cycle");
    std::vector<int> w;
    int k = 1;
    do {
      w.push_back(k);
      k = cycle(k);
    } while (k != 1);
    return CircularPermutation(std::move(w));
  }

  std::size_t size() const noexcept { return word_.size(); }
  /// Canonical rotation: word()[0] == 1.
  std::span<const int> word() const noexcept { return word_; }

  /// The n-cycle sending word[i] to word[i+1 mod n].
  Permutation n_cycle() const {
    if (word_.empty()) throw std::logic_error("empty circular permutation has no cycle");
    std::vector<int> img(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i) img[word_[i] - 1] = word_[(i + 1) % word_.size()];
    return Permutation::unchecked(std::move(img));
  }

  bool operator==(const CircularPermutation&) const = default;
  auto operator<=>(const CircularPermutation&) const = default;

 private:
  std::vector<int> word_;
};

// ---------------------------------------------------------------------------
// Text forms: "5,6,7,4,1,2,3" and "c:1,3,2".

namespace detail {
inline std::string join(std::span<const int> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

inline std::vector<int> split_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}
}  // namespace detail

inline std::string to_string(const Permutation& p) { return detail::join(p.image()); }
inline std::string to_string(const CircularPermutation& c) { return "c:" + detail::join(c.word()); }
inline std::string to_string(const IndexSet& s) { return "{" + detail::join(s) + "}"; }

inline Permutation parse_permutation(const std::string& text) {
  return Permutation(detail::split_ints(text));
}

inline CircularPermutation parse_circular(const std::string& text) {
  if (text.rfind("c:", 0) != 0) throw std::invalid_argument("circular permutation must start with 'c:'");
  const std::string body = text.substr(2);
  if (body.empty()) return CircularPermutation();
  return CircularPermutation(detail::split_ints(body));
}

}  // namespace permlab
