// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "mrarank/alpha.hpp"
#include "mrarank/combinatorics.hpp"
#include "mrarank/inference.hpp"
#include "mrarank/marginals.hpp"
#include "mrarank/transform.hpp"
#include "mrarank/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace mrarank;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string audit_failures(const AuditReport& r) {
    std::string out;
    for (const auto& c : r.checks)
        if (!c.passed) out += " [" + r.suite + " n=" + std::to_string(r.n) + " " + c.name + ": " + c.detail + "]";
    return out;
}

const AlphaTable& table() {
    static const AlphaTable t(8);
    return t;
}

RankingFunction random_function(const Subset& a, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    RankingFunction f;
    for (const auto& w : enumerate_rankings(a)) f.set(w, u(gen));
    return f;
}

WaveletCoefficients random_coefficients(const Subset& u, std::mt19937_64& gen) {
    std::normal_distribution<double> z;
    WaveletCoefficients x;
    for (const auto& b : ranking_subsets(u)) {
        Block& blk = x.block(b);
        if (b.empty()) {
            blk[0] = z(gen);
            continue;
        }
        for (const auto& v : h_basis(b)) {
            const double c = z(gen);
            for (std::size_t i = 0; i < v.size(); ++i) blk[i] += c * v[i];
        }
    }
    return x;
}

// ---------------------------------------------------------------------------

Outcome alpha_matrices() {
    const auto t0 = Clock::now();
    const AlphaTable t(3);
    const mpq_class h(1, 2), a(1, 3), b(-1, 6);
    const mpq_class k2[2][2] = {{h, -h}, {-h, h}};
    const mpq_class k3[6][6] = {
        {a, b, b, b, b, a}, {b, a, b, a, b, b}, {b, b, a, b, a, b},
        {b, a, b, a, b, b}, {b, b, a, b, a, b}, {a, b, b, b, b, a},
    };
    Outcome o;
    const auto g2 = enumerate_rankings(Subset{1, 2});
    const auto g3 = enumerate_rankings(Subset{1, 2, 3});
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            if (t.alpha(g2[i], g2[j]) != k2[i][j]) ++mismatches;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            if (t.alpha(g3[i], g3[j]) != k3[i][j]) ++mismatches;
    const double ms = 1e3 * seconds_since(t0);
    o.ok = mismatches == 0 && ms < 1.0;
    o.detail = std::to_string(mismatches) + " mismatched entries of 40, " + fmt(ms) + " ms";
    return o;
}

Outcome derangement_dimensions() {
    Outcome o;
    const std::size_t expected[] = {1, 2, 9, 44, 265};
    double t6 = 0.0;
    for (std::size_t k = 2; k <= 6; ++k) {
        const auto t0 = Clock::now();
        const std::size_t r = top_block_rank(k, table());
        if (k == 6) t6 = seconds_since(t0);
        o.detail += (k > 2 ? "," : "ranks ") + std::to_string(r);
        if (r != expected[k - 2]) o.ok = false;
    }
    if (t6 >= 30.0) o.ok = false;
    o.detail += ", k=6 in " + fmt(t6) + " s";
    return o;
}

Outcome round_trip() {
    const auto t0 = Clock::now();
    std::mt19937_64 gen(101);
    double worst = 0.0;
    for (std::size_t k = 2; k <= 6; ++k) {
        const auto a = range_subset(k);
        for (int i = 0; i < 200; ++i) {
            const auto f = random_function(a, gen);
            worst = std::max(worst, max_abs_diff(synthesize(fwt_single(f, a, table()), a), f) / max_abs(f));
        }
    }
    double worst_section = 0.0;
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto u = range_subset(n);
        for (int i = 0; i < 20; ++i) {
            const auto x = random_coefficients(u, gen);
            worst_section = std::max(worst_section, max_abs_diff(fwt(synthesize(x, u), table()), x) / max_abs(x));
        }
    }
    const double s = seconds_since(t0);
    Outcome o;
    o.ok = worst <= 1e-9 && worst_section <= 1e-9 && s < 60.0;
    o.detail = "synthesis after transform " + fmt(worst) + ", transform after synthesis " + fmt(worst_section) +
               " (relative), " + fmt(s) + " s";
    return o;
}

Outcome commuting_diagram() {
    std::mt19937_64 gen(202);
    std::uniform_int_distribution<std::size_t> size(2, 5);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto a = range_subset(size(gen));
        auto subs = ranking_subsets(a);
        subs.erase(subs.begin());
        const auto& sub = subs[std::uniform_int_distribution<std::size_t>(0, subs.size() - 1)(gen)];
        const auto f = random_function(a, gen);
        worst = std::max(worst, max_abs_diff(fwt(marginal(f, sub), table()), feature_marginal(fwt(f, table()), sub)));
    }
    return {worst <= 1e-9, "max deviation " + fmt(worst) + " over 100 pairs"};
}

Outcome solution_space_example() {
    const std::set<Subset> design{{1, 3}, {2, 4}, {3, 4}, {1, 2, 3}, {1, 3, 4}};
    const auto a = range_subset(4);
    std::mt19937_64 gen(303);
    const auto sol = solution_space(random_function(a, gen), a, design, table());
    const std::size_t nullity = constraint_nullity(a, design);
    const auto hidden = unidentifiable_blocks(ObservationDesign(design), a);
    const std::uint64_t formula = derangements(4) + 2 * derangements(3);
    Outcome o;
    o.ok = sol.dimension == 13 && nullity == 13 && hidden.dof == 13 && formula == 13;
    o.detail = "formula " + std::to_string(sol.dimension) + ", null space rank " + std::to_string(nullity) +
               ", hidden blocks dof " + std::to_string(hidden.dof);
    return o;
}

Outcome oracle_equivalence() {
    double worst = 0.0;
    const auto a4 = range_subset(4);
    for (const auto& w : enumerate_rankings(a4)) {
        const auto f = RankingFunction::dirac(w);
        worst = std::max(worst, max_abs_diff(fwt_single(f, a4, table()), brute_force_wavelet(f, a4)));
    }
    std::mt19937_64 gen(404);
    const auto a5 = range_subset(5);
    for (int i = 0; i < 50; ++i) {
        const auto f = random_function(a5, gen);
        worst = std::max(worst, max_abs_diff(fwt_single(f, a5, table()), brute_force_wavelet(f, a5)));
    }
    return {worst < 1e-8, "max deviation " + fmt(worst) + " over 24 Diracs and 50 random functions"};
}

Outcome unbiasedness() {
    const auto t0 = Clock::now();
    const auto u = range_subset(4);
    // Non-uniform model: weights decay with the Kendall distance to 1234, normalized.
    RankingFunction p;
    double total = 0.0;
    for (const auto& w : enumerate_rankings(u)) {
        const double v = std::exp(-0.5 * static_cast<double>(generalized_kendall(w, Word{1, 2, 3, 4}, 2)));
        p.set(w, v);
        total += v;
    }
    p *= 1.0 / total;
    const Word top{1, 2, 3, 4};
    p.set(top, p(top) + (1.0 - p.total_mass()));
    const ObservationDesign nu(
        std::map<Subset, double>{{{1, 3}, 0.15}, {{2, 4}, 0.15}, {{3, 4}, 0.2}, {{1, 2, 3}, 0.25}, {{1, 3, 4}, 0.25}});
    const auto truth = fwt(p, table());
    const auto blocks = identifiable_support(nu).blocks;

    const std::size_t reps = 200, n_obs = 2000;
    std::map<Subset, std::vector<double>> sum, sum2;
    for (const auto& b : blocks) {
        sum[b].assign(factorial(b.size()), 0.0);
        sum2[b].assign(factorial(b.size()), 0.0);
    }
    for (std::size_t r = 0; r < reps; ++r) {
        const auto x = wavelet_empirical_estimator(generate_dataset(p, nu, n_obs, 7000 + r), table());
        for (const auto& b : blocks) {
            const Block* blk = x.find(b);
            for (std::size_t i = 0; i < sum[b].size(); ++i) {
                const double v = blk ? (*blk)[i] : 0.0;
                sum[b][i] += v;
                sum2[b][i] += v * v;
            }
        }
    }
    std::size_t components = 0, bad = 0;
    double worst = 0.0;
    const double rd = static_cast<double>(reps);
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < sum[b].size(); ++i) {
            ++components;
            const double mean = sum[b][i] / rd;
            const double var = std::max(sum2[b][i] / rd - mean * mean, 0.0) * rd / (rd - 1.0);
            const double se = std::sqrt(var / rd);
            const double dev = std::abs(mean - truth.find(b)->at(i));
            if (se <= 1e-12) {
                if (dev > 1e-12) ++bad;
                continue;
            }
            worst = std::max(worst, dev / se);
            if (dev >= 4.0 * se) ++bad;
        }
    }
    const double s = seconds_since(t0);
    Outcome o;
    o.ok = bad == 0 && s < 120.0;
    o.detail = std::to_string(components) + " components, " + std::to_string(bad) + " outside 4 SE, worst " +
               fmt(worst) + " SE, " + fmt(s) + " s";
    return o;
}

Outcome complexity_bounds() {
    std::mt19937_64 gen(808);
    std::uniform_int_distribution<std::size_t> size(2, 8);
    std::size_t violations = 0;
    double worst_ratio = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t k = size(gen);
        const auto a = range_subset(k);
        std::vector<Item> items(a.begin(), a.end());
        const std::size_t cap = std::min<std::size_t>(factorial(k), 60);
        const std::size_t count = std::uniform_int_distribution<std::size_t>(1, cap)(gen);
        RankingFunction f;
        while (f.size() < count) {
            std::shuffle(items.begin(), items.end(), gen);
            f.set(Word(items), std::uniform_real_distribution<double>(0.1, 1.0)(gen));
        }
        OpCounter c;
        fwt(f, table(), &c);
        const double ratio = static_cast<double>(c.total()) / fwt_op_bound(k, f.size());
        worst_ratio = std::max(worst_ratio, ratio);
        if (ratio > 1.0) ++violations;
    }
    double worst_alpha = 0.0;
    for (std::size_t k = 2; k <= 8; ++k) {
        const AlphaTable t(k);
        const double ratio = static_cast<double>(t.construction_ops()) / alpha_op_bound(k);
        worst_alpha = std::max(worst_alpha, ratio);
        if (ratio > 1.0) ++violations;
    }
    return {violations == 0, "worst transform ops/bound " + fmt(worst_ratio) + ", worst alpha ops/bound " +
                                 fmt(worst_alpha)};
}

Outcome shuffle_suite() {
    const auto t0 = Clock::now();
    Outcome o;
    std::size_t checks = 0;
    for (std::size_t n : {4, 5}) {
        const auto r = shuffle_audit(n);
        checks += r.checks.size();
        if (!r.passed()) {
            o.ok = false;
            o.detail += audit_failures(r);
        }
    }
    const double s = seconds_since(t0);
    if (s >= 60.0) o.ok = false;
    o.detail = std::to_string(checks) + " checks, " + fmt(s) + " s" + o.detail;
    return o;
}

Outcome h2_suite() {
    Outcome o;
    std::size_t checks = 0;
    for (std::size_t n = 3; n <= 6; ++n) {
        const auto r = h2_audit(n);
        checks += r.checks.size();
        if (!r.passed()) {
            o.ok = false;
            o.detail += audit_failures(r);
        }
    }
    o.detail = std::to_string(checks) + " checks for n=3..6" + o.detail;
    return o;
}

Outcome syt_suite() {
    const auto t0 = Clock::now();
    Outcome o;
    std::size_t checks = 0;
    for (std::size_t n = 2; n <= 8; ++n) {
        const auto r = syt_dimension_audit(n);
        checks += r.checks.size();
        if (!r.passed()) {
            o.ok = false;
            o.detail += audit_failures(r);
        }
    }
    const double s = seconds_since(t0);
    if (s >= 10.0) o.ok = false;
    o.detail = std::to_string(checks) + " checks for n=2..8, " + fmt(s) + " s" + o.detail;
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"alpha matrices for k=2,3 exact", alpha_matrices},
        {"top block rank equals derangement count, k=2..6", derangement_dimensions},
        {"round trip and section inverse", round_trip},
        {"transform commutes with marginals", commuting_diagram},
        {"solution space dimension 13", solution_space_example},
        {"fast transform matches brute-force oracle", oracle_equivalence},
        {"estimator unbiased within 4 standard errors", unbiasedness},
        {"operation counts within bounds", complexity_bounds},
        {"shuffle matrices at n=4,5", shuffle_suite},
        {"scale-2 decomposition at n=3..6", h2_suite},
        {"tableau dimension accounting for n<=8", syt_suite},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.ok) ++failed;
        std::printf("%s criterion %zu: %s (%s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
