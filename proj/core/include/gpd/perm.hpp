#pragma once

#include <cstdint>
#include <vector>

namespace gpd {

// Permutations of {0..n-1} as image vectors: p[i] is the image of i.
// Ranking follows the Lehmer code in lexicographic order, so rank 0 is the
// identity and rank n!-1 is the reversal. Sizes stay small (n <= 20 keeps
// n! inside uint64, callers here never exceed n = 12).
using Perm = std::vector<std::uint8_t>;

std::uint64_t factorial(std::uint32_t n);

Perm perm_identity(std::uint32_t n);
Perm perm_compose(const Perm& second, const Perm& first);  // (second*first)[i] = second[first[i]]
Perm perm_inverse(const Perm& p);

std::uint64_t perm_rank(const Perm& p);
Perm perm_unrank(std::uint32_t n, std::uint64_t rank);

// Packs a permutation of n <= 16 into nibbles, for hash keys.
std::uint64_t perm_pack(const Perm& p);

}  // namespace gpd
