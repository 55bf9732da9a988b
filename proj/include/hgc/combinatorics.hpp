#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hgc {

/// C(n, k); returns 0 for k > n. Throws ArgumentError on 64-bit overflow.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// All strictly increasing k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k);

}  // namespace hgc
