#include "mrarank/alpha.hpp"

#include "mrarank/combinatorics.hpp"
#include "mrarank/errors.hpp"

#include <unordered_map>

namespace mrarank {

AlphaTable::AlphaTable(std::size_t k_max, std::size_t cap) : k_max_(k_max) {
    if (cap > kAlphaSizeCap) cap = kAlphaSizeCap;
    if (k_max < 2) throw DomainError("alpha table needs k_max >= 2");
    if (k_max > cap)
        throw ResourceError("alpha table size " + std::to_string(k_max) + " exceeds the cap " + std::to_string(cap));

    rows_.resize(k_max + 1);
    rows_double_.resize(k_max + 1);
    rows_[0] = {mpq_class(1)};
    rows_double_[0] = {1.0};

    std::vector<mpq_class> inv_fact(k_max + 1);
    for (std::size_t i = 0; i <= k_max; ++i) inv_fact[i] = mpq_class(1, factorial(i));

    std::vector<std::uint8_t> sub;
    sub.reserve(k_max);
    for (std::size_t k = 2; k <= k_max; ++k) {
        const std::size_t size = factorial(k);
        auto& row = rows_[k];
        row.assign(size, mpq_class(0));
        for (std::size_t q = 0; q < size; ++q) {
            const auto perm = permutation_unrank(q, k);
            mpq_class value = (q == 0 ? mpq_class(1) : mpq_class(0)) - inv_fact[k];
            ++ops_;
            // Proper factors [i, j] of the identity word, of length 2..k-1.
            for (std::size_t len = 2; len < k; ++len) {
                const mpq_class& weight = inv_fact[k - len + 1];
                for (std::size_t i = 0; i + len <= k; ++i) {
                    sub.clear();
                    for (auto x : perm)
                        if (x >= i && x < i + len) sub.push_back(static_cast<std::uint8_t>(x - i));
                    value -= weight * rows_[len][permutation_rank(sub)];
                    ++ops_;
                }
            }
            row[q] = value;
        }
        rows_double_[k].resize(size);
        for (std::size_t q = 0; q < size; ++q) rows_double_[k][q] = row[q].get_d();
    }
}

const mpq_class& AlphaTable::canonical(std::size_t k, std::size_t rank) const {
    return canonical_row(k).at(rank);
}

const std::vector<mpq_class>& AlphaTable::canonical_row(std::size_t k) const {
    if (k == 1 || k > k_max_) throw ResourceError("alpha table does not cover size " + std::to_string(k));
    return rows_[k];
}

const std::vector<double>& AlphaTable::canonical_row_double(std::size_t k) const {
    if (k == 1 || k > k_max_) throw ResourceError("alpha table does not cover size " + std::to_string(k));
    return rows_double_[k];
}

std::size_t AlphaTable::rank_in_frame(const Word& pi, const Word& pi_prime) const {
    if (pi.size() != pi_prime.size()) throw DomainError("alpha: words of different length");
    const std::size_t k = pi.size();
    if (k == 1) throw DomainError("alpha: single item words are not rankings");
    if (k > k_max_) throw ResourceError("alpha table does not cover size " + std::to_string(k));
    // Relabel so that pi becomes 0 1 ... k-1 and read pi' in that frame.
    std::unordered_map<Item, std::uint8_t> position;
    for (std::size_t i = 0; i < k; ++i) position.emplace(pi[i], static_cast<std::uint8_t>(i));
    std::vector<std::uint8_t> image(k);
    for (std::size_t i = 0; i < k; ++i) {
        auto it = position.find(pi_prime[i]);
        if (it == position.end()) throw DomainError("alpha: words have different contents");
        image[i] = it->second;
    }
    return permutation_rank(image);
}

mpq_class AlphaTable::alpha(const Word& pi, const Word& pi_prime) const {
    if (pi.empty() && pi_prime.empty()) return mpq_class(1);
    const std::size_t r = rank_in_frame(pi, pi_prime);
    return rows_[pi.size()][r];
}

double AlphaTable::alpha_value(const Word& pi, const Word& pi_prime) const {
    if (pi.empty() && pi_prime.empty()) return 1.0;
    const std::size_t r = rank_in_frame(pi, pi_prime);
    return rows_double_[pi.size()][r];
}

}  // namespace mrarank
