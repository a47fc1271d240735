#include "doctest.h"

#include "support.hpp"

#include "mrarank/combinatorics.hpp"
#include "mrarank/errors.hpp"
#include "mrarank/regularization.hpp"
#include "mrarank/validation.hpp"

#include <algorithm>
#include <functional>
#include <random>

using namespace mrarank;

namespace {

const AlphaTable& table() {
    static const AlphaTable t(8);
    return t;
}

Block pair_block(double up) { return Block{up, -up}; }

WaveletCoefficients random_h_element(const Subset& universe, std::size_t max_size, std::mt19937& gen) {
    std::normal_distribution<double> z;
    WaveletCoefficients x;
    x.block(Subset{})[0] = 1.0;
    for (const auto& b : ranking_subsets(universe)) {
        if (b.empty() || b.size() > max_size) continue;
        auto& blk = x.block(b);
        for (const auto& v : h_basis(b)) {
            const double c = z(gen);
            for (std::size_t i = 0; i < v.size(); ++i) blk[i] += c * v[i];
        }
    }
    return x;
}

WaveletCoefficients relabel_coefficients(const WaveletCoefficients& x, const std::function<Item(Item)>& tau) {
    WaveletCoefficients out;
    for (const auto& [b, blk] : x.blocks()) {
        std::vector<Item> image;
        for (Item i : b) image.push_back(tau(i));
        for (const auto& w : enumerate_rankings(b)) out.add(Subset(image), relabel(w, tau), blk[ranking_index(w, b)]);
    }
    return out;
}

}  // namespace

TEST_CASE("subset distance") {
    CHECK(subset_distance(Subset{1, 2}, Subset{1, 3}) == 1);
    CHECK(subset_distance(Subset{1, 2}, Subset{1, 2}) == 0);
    CHECK(subset_distance(Subset{1, 2}, Subset{3, 4}) == 2);
    CHECK(subset_distance(Subset{1, 2, 5}, Subset{2, 5, 9}) == 1);
    CHECK_THROWS_AS(subset_distance(Subset{1, 2}, Subset{1, 2, 3}), DomainError);
}

TEST_CASE("transport examples") {
    const Block x{0.7, -0.7};
    CHECK(transport(x, Subset{1, 2}, Subset{1, 2}) == x);
    const auto moved = transport(pair_block(1.0), Subset{1, 2}, Subset{1, 3});
    CHECK(moved[ranking_index(Word{1, 3}, Subset{1, 3})] == doctest::Approx(1.0));
    CHECK(moved[ranking_index(Word{3, 1}, Subset{1, 3})] == doctest::Approx(-1.0));
    const auto far = transport(pair_block(1.0), Subset{1, 2}, Subset{3, 4});
    CHECK(far[0] == doctest::Approx(0.0));
    CHECK(far[1] == doctest::Approx(0.0));
    CHECK_THROWS_AS(transport(x, Subset{1, 2}, Subset{1, 2, 3}), DomainError);
}

TEST_CASE("transport keeps H membership") {
    std::mt19937 gen(3);
    for (const auto& [from, to] : std::vector<std::pair<Subset, Subset>>{
             {{1, 2, 3}, {1, 2, 4}}, {{1, 2, 3}, {4, 5, 6}}, {{1, 2, 3, 4}, {2, 3, 5, 6}}, {{1, 3, 5, 7}, {1, 2, 3, 4}}}) {
        const auto basis = h_basis(from);
        std::normal_distribution<double> z;
        Block blk(factorial(from.size()), 0.0);
        for (const auto& v : basis) {
            const double c = z(gen);
            for (std::size_t i = 0; i < v.size(); ++i) blk[i] += c * v[i];
        }
        WaveletCoefficients out;
        out.block(to) = transport(blk, from, to);
        CHECK(h_membership_residual(out) <= 1e-12);
    }
}

TEST_CASE("kernel weights") {
    for (std::size_t n = 2; n <= 12; ++n)
        for (std::size_t k = 2; k <= n; ++k)
            for (std::size_t h = 0; h <= n; ++h) {
                const auto q = kernel_weights(n, k, h);
                CHECK(q.size() == kernel_window(n, k, h) + 1);
                mpq_class total = 0;
                for (std::size_t j = 0; j < q.size(); ++j) total += q[j] * binomial(k, j) * binomial(n - k, j);
                CHECK(total == 1);
            }
    const auto q = kernel_weights(4, 2, 1);
    CHECK(q[0] == mpq_class(1, 2));
    CHECK(q[1] == mpq_class(1, 8));
}

TEST_CASE("step kernel at h = 1 on four items") {
    WaveletCoefficients x;
    x.block(Subset{1, 2}) = pair_block(1.0);
    SmoothStats stats;
    const auto y = kernel_smooth(x, 1, range_subset(4), &stats);
    CHECK(y.value(Subset{1, 2}, Word{1, 2}) == doctest::Approx(0.5));
    CHECK(y.value(Subset{1, 3}, Word{1, 3}) == doctest::Approx(1.0 / 8));
    CHECK(y.value(Subset{1, 4}, Word{1, 4}) == doctest::Approx(1.0 / 8));
    CHECK(y.value(Subset{2, 3}, Word{3, 2}) == doctest::Approx(1.0 / 8));
    CHECK(y.value(Subset{2, 4}, Word{4, 2}) == doctest::Approx(1.0 / 8));
    CHECK(y.value(Subset{3, 4}, Word{3, 4}) == doctest::Approx(0.0));
    CHECK(stats.transports > 0);
}

TEST_CASE("kernel smoothing properties") {
    std::mt19937 gen(5);
    const auto u = range_subset(5);
    const auto x = random_h_element(u, 4, gen);
    const auto g = random_h_element(u, 3, gen);

    CHECK(max_abs_diff(kernel_smooth(x, 0, u), x) <= 1e-15);

    const auto y = kernel_smooth(x, 2, u);
    CHECK(h_membership_residual(y) <= 1e-9);
    CHECK(y.value(Subset{}, Word{}) == x.value(Subset{}, Word{}));
    for (const auto& [b, blk] : y.blocks()) CHECK(blk.size() == factorial(b.size()));

    const auto lin = kernel_smooth(2.0 * x + (-3.0) * g, 1, u);
    const auto sep = 2.0 * kernel_smooth(x, 1, u) + (-3.0) * kernel_smooth(g, 1, u);
    CHECK(max_abs_diff(lin, sep) <= 1e-12);
}

TEST_CASE("smoothing commutes with relabeling") {
    std::mt19937 gen(9);
    const auto u = range_subset(5);
    const auto x = random_h_element(u, 4, gen);
    std::vector<Item> perm(u.begin(), u.end());
    for (int trial = 0; trial < 4; ++trial) {
        std::shuffle(perm.begin(), perm.end(), gen);
        const auto tau = [&](Item i) { return perm[i - 1]; };
        const auto moved = relabel_coefficients(x, tau);
        for (std::size_t h = 0; h <= 3; ++h)
            CHECK(max_abs_diff(kernel_smooth(moved, h, u), relabel_coefficients(kernel_smooth(x, h, u), tau)) <= 1e-12);
    }

    WaveletCoefficients invariant;
    invariant.block(Subset{})[0] = 0.8;
    for (std::size_t h = 0; h <= 3; ++h) CHECK(max_abs_diff(kernel_smooth(invariant, h, u), invariant) == 0.0);
}

TEST_CASE("local regularization") {
    std::mt19937 gen(7);
    const auto u = range_subset(5);
    const auto x = random_h_element(u, 5, gen);
    CHECK(max_abs_diff(local_regularize(x, u, 2), kernel_smooth(x, 2, u)) <= 1e-12);
    const Subset a{1, 3, 4};
    CHECK(max_abs_diff(local_regularize(x, a, 0), feature_marginal(x, a)) <= 1e-15);

    // Twenty items, blocks everywhere; local work only touches the subsets of A.
    const auto big = range_subset(20);
    Dataset d;
    std::vector<Item> items(big.begin(), big.end());
    for (int i = 0; i < 200; ++i) {
        std::shuffle(items.begin(), items.end(), gen);
        d.add(Word(std::vector<Item>(items.begin(), items.begin() + 4)));
    }
    const auto est = fwt(d.histogram(), table());
    const Subset local{2, 5, 11, 17};
    SmoothStats stats;
    const auto r = local_regularize(est, local, 1, &stats);
    CHECK(stats.blocks_read <= ranking_subsets(local).size());
    for (const auto& [b, blk] : r.blocks()) CHECK(local.contains(b));

    WaveletCoefficients padded = est;
    padded.block(Subset{1, 3, 6}) = h_basis(Subset{1, 3, 6}).front();
    SmoothStats stats2;
    const auto r2 = local_regularize(padded, local, 1, &stats2);
    CHECK(stats2.blocks_read == stats.blocks_read);
    CHECK(stats2.transports == stats.transports);
    CHECK(max_abs_diff(r, r2) == 0.0);
}
