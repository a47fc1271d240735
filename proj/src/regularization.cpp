#include "mrarank/regularization.hpp"

#include "mrarank/combinatorics.hpp"
#include "mrarank/errors.hpp"

#include <algorithm>

namespace mrarank {

std::size_t subset_distance(const Subset& b, const Subset& b_prime) {
    if (b.size() != b_prime.size()) throw DomainError("subset_distance: subsets of different sizes");
    return b.size() - set_intersection(b, b_prime).size();
}

Block transport(const Block& x, const Subset& from, const Subset& to) {
    if (from.size() != to.size()) throw DomainError("transport: subsets of different sizes");
    if (x.size() != factorial(from.size())) throw DomainError("transport: block length does not match the subset");
    if (from == to) return x;

    const Subset leaving = set_difference(from, to);
    std::vector<Item> arriving;
    for (Item it : set_difference(to, from)) arriving.push_back(it);

    const auto words = enumerate_rankings(from);
    Block out(x.size(), 0.0);
    std::size_t count = 0;
    std::vector<Item> image(from.size());
    do {
        ++count;
        for (std::size_t q = 0; q < words.size(); ++q) {
            if (x[q] == 0.0) continue;
            const Word& w = words[q];
            for (std::size_t i = 0; i < w.size(); ++i) {
                const Item it = w[i];
                image[i] = leaving.contains(it) ? arriving[leaving.index_of(it)] : it;
            }
            out[ranking_index(Word(image), to)] += x[q];
        }
    } while (std::next_permutation(arriving.begin(), arriving.end()));
    const double inv = 1.0 / static_cast<double>(count);
    for (double& v : out) v *= inv;
    return out;
}

std::size_t kernel_window(std::size_t n, std::size_t k, std::size_t h) {
    if (k > n) throw DomainError("kernel_window: scale larger than the universe");
    return std::min({h, k, n - k});
}

std::vector<mpq_class> kernel_weights(std::size_t n, std::size_t k, std::size_t h) {
    const std::size_t w = kernel_window(n, k, h);
    std::vector<mpq_class> q(w + 1);
    for (std::size_t j = 0; j <= w; ++j) {
        mpz_class denom = mpz_class(static_cast<unsigned long>(w + 1));
        denom *= mpz_class(static_cast<unsigned long>(binomial(k, j)));
        denom *= mpz_class(static_cast<unsigned long>(binomial(n - k, j)));
        q[j] = mpq_class(mpz_class(1), denom);
    }
    return q;
}

KernelProfile step_profile(std::size_t h) {
    return [h](std::size_t distance, std::size_t n, std::size_t k) -> double {
        const std::size_t w = kernel_window(n, k, h);
        if (distance > w) return 0.0;
        return 1.0 / (static_cast<double>(w + 1) * static_cast<double>(binomial(k, distance)) *
                      static_cast<double>(binomial(n - k, distance)));
    };
}

WaveletCoefficients kernel_smooth(const WaveletCoefficients& x, const Subset& universe,
                                  const std::function<std::size_t(std::size_t k)>& radius,
                                  const KernelProfile& profile, SmoothStats* stats) {
    const std::size_t n = universe.size();
    WaveletCoefficients out;
    for (const auto& [b, blk] : x.blocks()) {
        if (!universe.contains(b)) throw DomainError("kernel_smooth: block " + format_subset(b) + " outside the universe");
        if (stats) ++stats->blocks_read;
        const std::size_t k = b.size();
        if (k == 0) {
            Block& dst = out.block(b);
            for (std::size_t i = 0; i < blk.size(); ++i) dst[i] += blk[i];
            continue;
        }
        const std::size_t r_max = std::min({radius(k), k, n - k});
        const Subset outside = set_difference(universe, b);
        for (std::size_t r = 0; r <= r_max; ++r) {
            const double weight = profile(r, n, k);
            if (weight == 0.0) continue;
            for (const auto& removed : subsets_of_size(b, r)) {
                const Subset kept = set_difference(b, removed);
                for (const auto& added : subsets_of_size(outside, r)) {
                    const Subset target = set_union(kept, added);
                    const Block moved = transport(blk, b, target);
                    if (stats) ++stats->transports;
                    Block& dst = out.block(target);
                    for (std::size_t i = 0; i < moved.size(); ++i) dst[i] += weight * moved[i];
                }
            }
        }
    }
    return out;
}

WaveletCoefficients kernel_smooth(const WaveletCoefficients& x, std::size_t h, const Subset& universe,
                                  SmoothStats* stats) {
    return kernel_smooth(x, universe, [h](std::size_t) { return h; }, step_profile(h), stats);
}

WaveletCoefficients local_regularize(const WaveletCoefficients& x, const Subset& a, std::size_t h,
                                     SmoothStats* stats) {
    return kernel_smooth(feature_marginal(x, a), h, a, stats);
}

}  // namespace mrarank
