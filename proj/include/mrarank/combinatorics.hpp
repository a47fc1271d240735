#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mrarank {

// n! for n <= 20.
std::uint64_t factorial(std::size_t n);

// C(n, k); zero when k > n.
std::uint64_t binomial(std::size_t n, std::size_t k);

// Number of fixed-point free permutations of k elements (d_0 = 1, d_1 = 0).
std::uint64_t derangements(std::size_t k);

// Lexicographic rank of a permutation of {0, ..., k-1} among all k! of them.
std::size_t permutation_rank(std::span<const std::uint8_t> perm);

// Inverse of permutation_rank.
std::vector<std::uint8_t> permutation_unrank(std::size_t rank, std::size_t k);

// All k-element combinations of {0, ..., n-1}, each sorted, in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace mrarank
