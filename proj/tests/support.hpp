#pragma once

#include <map>
#include <string>
#include <vector>

#include "permlab/exact_dist.hpp"
#include "permlab/numeric.hpp"
#include "permlab/permutation.hpp"

namespace permlab::testing {

/// Builds a pmf from {outcome, "num/den"} pairs; missing outcomes get zero.
inline ExactPmf pmf_of(const std::map<std::size_t, std::string>& masses) {
  std::vector<Rational> probs(masses.empty() ? 0 : masses.rbegin()->first + 1, Rational(0));
  for (const auto& [m, text] : masses) probs[m] = parse_fraction(text);
  return ExactPmf(std::move(probs));
}

inline Permutation perm(std::vector<int> image) { return Permutation(std::move(image)); }

inline IndexSet range_set(int lo, int hi) {
  IndexSet s;
  for (int k = lo; k <= hi; ++k) s.push_back(k);
  return s;
}

}  // namespace permlab::testing
