#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace sparsepm {

// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Advances `ids` (strictly increasing, values < n) to the next k-subset in
// lexicographic order. Returns false after the last subset.
bool next_combination(std::vector<std::size_t>& ids, std::size_t n);

// Uniformly random sorted k-subset of [0, n).
std::vector<std::size_t> sample_combination(std::size_t n, std::size_t k, std::mt19937_64& rng);

// Visits every k-subset of [0, n) when C(n, k) <= max_exhaustive, otherwise
// `samples` random subsets drawn with `seed`. Returns true when exhaustive.
// `visit` returns false to stop early.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t k, std::uint64_t max_exhaustive, std::size_t samples,
                     std::uint64_t seed, Visit&& visit) {
  if (binomial(n, k) <= max_exhaustive) {
    std::vector<std::size_t> ids(k);
    for (std::size_t i = 0; i < k; ++i) ids[i] = i;
    do {
      if (!visit(ids)) break;
    } while (next_combination(ids, n));
    return true;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    if (!visit(sample_combination(n, k, rng))) break;
  }
  return false;
}

}  // namespace sparsepm
