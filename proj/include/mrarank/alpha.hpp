#pragma once

#include "mrarank/ranking.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mrarank {

inline constexpr std::size_t kDefaultAlphaSize = 8;
inline constexpr std::size_t kAlphaSizeCap = 10;

/// Exact alpha coefficients alpha_k(12...k, pi') for k = 2..k_max. Only the
/// row of the identity word is stored; every other entry follows from
/// relabeling. Immutable once built.
class AlphaTable {
public:
    explicit AlphaTable(std::size_t k_max = kDefaultAlphaSize, std::size_t cap = kAlphaSizeCap);

    std::size_t k_max() const noexcept { return k_max_; }

    // alpha_k(id, pi') where pi' is the permutation of {0..k-1} with the given lexicographic rank.
    const mpq_class& canonical(std::size_t k, std::size_t rank) const;
    const std::vector<mpq_class>& canonical_row(std::size_t k) const;
    const std::vector<double>& canonical_row_double(std::size_t k) const;

    // alpha_B(pi, pi') for content(pi) == content(pi') == B.
    mpq_class alpha(const Word& pi, const Word& pi_prime) const;
    double alpha_value(const Word& pi, const Word& pi_prime) const;

    // Multiply-adds spent by the recursion while building the table.
    std::uint64_t construction_ops() const noexcept { return ops_; }

private:
    std::size_t rank_in_frame(const Word& pi, const Word& pi_prime) const;

    std::size_t k_max_;
    std::vector<std::vector<mpq_class>> rows_;
    std::vector<std::vector<double>> rows_double_;
    std::uint64_t ops_ = 0;
};

}  // namespace mrarank
