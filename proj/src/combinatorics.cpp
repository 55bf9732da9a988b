#include "hgc/combinatorics.hpp"

#include <limits>

#include "hgc/errors.hpp"

namespace hgc {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step
    const std::uint64_t factor = n - k + i;
    if (result > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw ArgumentError("binomial coefficient overflows 64 bits");
    }
    result = result * factor / i;
  }
  return result;
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || n < 0 || k > n) return out;
  std::vector<int> current(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) current[i] = i;
  while (true) {
    out.push_back(current);
    int pos = k - 1;
    while (pos >= 0 && current[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++current[pos];
    for (int j = pos + 1; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

}  // namespace hgc
