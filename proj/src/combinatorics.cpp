#include "sparsepm/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace sparsepm {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i: result is C(n-k+i-1, i-1).
    const unsigned __int128 next = static_cast<unsigned __int128>(result) * (n - k + i) / i;
    if (next > kMax) return kMax;
    result = static_cast<std::uint64_t>(next);
  }
  return result;
}

bool next_combination(std::vector<std::size_t>& ids, std::size_t n) {
  const std::size_t k = ids.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (ids[pos] < n - k + pos) {
      ++ids[pos];
      for (std::size_t j = pos + 1; j < k; ++j) ids[j] = ids[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> sample_combination(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace sparsepm
