#include "mrarank/combinatorics.hpp"

#include "mrarank/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace mrarank {

std::uint64_t factorial(std::size_t n) {
    if (n > 20) throw ResourceError("factorial overflow for n = " + std::to_string(n));
    std::uint64_t r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= i;
    return r;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

std::uint64_t derangements(std::size_t k) {
    if (k == 0) return 1;
    std::uint64_t prev2 = 1, prev1 = 0;  // d_0, d_1
    for (std::size_t i = 2; i <= k; ++i) {
        const std::uint64_t cur = (i - 1) * (prev1 + prev2);
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

std::size_t permutation_rank(std::span<const std::uint8_t> perm) {
    const std::size_t k = perm.size();
    std::size_t rank = 0;
    std::uint32_t used = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const std::uint32_t below = used & ((1u << perm[i]) - 1u);
        const std::size_t smaller_unused = perm[i] - static_cast<std::size_t>(std::popcount(below));
        rank = rank * (k - i) + smaller_unused;
        used |= 1u << perm[i];
    }
    return rank;
}

std::vector<std::uint8_t> permutation_unrank(std::size_t rank, std::size_t k) {
    std::vector<std::uint8_t> digits(k);
    // Factorial-base digits, most significant first.
    for (std::size_t i = 1; i <= k; ++i) {
        digits[k - i] = static_cast<std::uint8_t>(rank % i);
        rank /= i;
    }
    std::vector<std::uint8_t> pool(k);
    std::iota(pool.begin(), pool.end(), std::uint8_t{0});
    std::vector<std::uint8_t> out(k);
    for (std::size_t i = 0; i < k; ++i) {
        out[i] = pool[digits[i]];
        pool.erase(pool.begin() + digits[i]);
    }
    return out;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    std::iota(cur.begin(), cur.end(), std::size_t{0});
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace mrarank
