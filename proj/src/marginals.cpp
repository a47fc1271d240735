#include "mrarank/marginals.hpp"

#include "mrarank/combinatorics.hpp"
#include "mrarank/errors.hpp"

#include <cmath>

namespace mrarank {

namespace {

void check_ranking_subset(const Subset& a) {
    if (a.size() == 1) throw DomainError("marginal on a single item is undefined");
}

void check_weights(const SubsetWeights& nu, const Subset& universe) {
    double total = 0.0;
    for (const auto& [a, w] : nu) {
        if (w < 0.0) throw DomainError("negative subset weight");
        if (a.size() < 2) throw DomainError("weighted subsets need at least two items");
        if (!universe.contains(a)) throw DomainError("weighted subset outside the universe");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) throw DomainError("subset weights must sum to 1");
}

}  // namespace

RankingFunction marginal(const RankingFunction& f, const Subset& a) {
    check_ranking_subset(a);
    RankingFunction out;
    if (a.empty()) {
        double mass = f.total_mass();
        if (!f.empty()) out.set(Word{}, mass);
        return out;
    }
    for (const auto& [w, v] : f.entries()) {
        if (w.size() < a.size()) continue;
        if (!content(w).contains(a)) continue;
        out.add(induce(w, a), v);
    }
    return out;
}

RankingFunction naive_empirical_marginal(const Dataset& d, const Subset& a) {
    RankingFunction out;
    std::size_t n_a = 0;
    for (const auto& o : d.observations()) {
        if (o.subset != a) continue;
        out.add(o.ranking, 1.0);
        ++n_a;
    }
    if (n_a == 0) throw DomainError("unobserved subset " + format_subset(a));
    out *= 1.0 / static_cast<double>(n_a);
    return out;
}

RankingFunction marginal_based_estimator(const Dataset& d, const Subset& b) {
    check_ranking_subset(b);
    RankingFunction out;
    std::size_t covered = 0;
    for (const auto& o : d.observations()) {
        if (!o.subset.contains(b)) continue;
        out.add(b.empty() ? Word{} : induce(o.ranking, b), 1.0);
        ++covered;
    }
    if (covered == 0) throw DomainError("no observation covers " + format_subset(b));
    out *= 1.0 / static_cast<double>(covered);
    return out;
}

RankingFunction linear_extension_embed(const RankingFunction& f, const Subset& a) {
    RankingFunction out;
    const double a_fact = static_cast<double>(factorial(a.size()));
    for (const auto& [w, v] : f.entries()) {
        const Subset c = content(w);
        if (!a.contains(c)) throw DomainError("linear_extension_embed: word content not contained in target subset");
        const double scale = static_cast<double>(factorial(w.size())) / a_fact;
        for (const auto& s : linear_extensions(w, a)) out.add(s, scale * v);
    }
    return out;
}

RankingFunction biased_estimator(const Dataset& d, const Subset& universe) {
    if (universe.size() > kMaxFullRankingItems)
        throw ResourceError("biased_estimator is limited to " + std::to_string(kMaxFullRankingItems) + " items");
    if (d.empty()) throw DomainError("biased_estimator: empty dataset");
    RankingFunction out;
    const double n_fact = static_cast<double>(factorial(universe.size()));
    const double inv_n = 1.0 / static_cast<double>(d.size());
    for (const auto& o : d.observations()) {
        if (!universe.contains(o.subset)) throw DomainError("observation outside the universe");
        const double w = inv_n * static_cast<double>(factorial(o.subset.size())) / n_fact;
        for (const auto& s : linear_extensions(o.ranking, universe)) out.add(s, w);
    }
    return out;
}

Matrix similarity_matrix(const SubsetWeights& nu, const Subset& universe) {
    if (universe.size() > kMaxDenseMatrixItems)
        throw ResourceError("similarity_matrix is limited to " + std::to_string(kMaxDenseMatrixItems) + " items");
    check_weights(nu, universe);
    const auto perms = enumerate_rankings(universe);
    const std::size_t m = perms.size();
    const double n_fact = static_cast<double>(m);
    Matrix t(m, m);
    for (const auto& [a, w] : nu) {
        const double coef = w * static_cast<double>(factorial(a.size())) / n_fact;
        std::vector<std::size_t> key(m);
        for (std::size_t i = 0; i < m; ++i) key[i] = ranking_index(induce(perms[i], a), a);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (key[i] == key[j]) t(i, j) += coef;
    }
    return t;
}

RankingFunction similarity_row(const SubsetWeights& nu, const Subset& universe, const Word& sigma) {
    if (universe.size() > kMaxFullRankingItems)
        throw ResourceError("similarity_row is limited to " + std::to_string(kMaxFullRankingItems) + " items");
    if (content(sigma) != universe) throw DomainError("similarity_row: sigma must rank the whole universe");
    check_weights(nu, universe);
    RankingFunction row;
    const double n_fact = static_cast<double>(factorial(universe.size()));
    for (const auto& [a, w] : nu) {
        const double coef = w * static_cast<double>(factorial(a.size())) / n_fact;
        for (const auto& s : linear_extensions(induce(sigma, a), universe)) row.add(s, coef);
    }
    return row;
}

}  // namespace mrarank
