#pragma once

#include "mrarank/ranking.hpp"

#include <algorithm>
#include <random>

namespace testsupport {

inline mrarank::RankingFunction random_function(const mrarank::Subset& a, std::mt19937& gen) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    mrarank::RankingFunction f;
    for (const auto& w : mrarank::enumerate_rankings(a)) f.set(w, u(gen));
    return f;
}

inline mrarank::RankingFunction random_sparse(const mrarank::Subset& a, std::size_t count, std::mt19937& gen) {
    std::uniform_real_distribution<double> u(0.1, 1.0);
    std::vector<mrarank::Item> items(a.begin(), a.end());
    mrarank::RankingFunction f;
    for (std::size_t i = 0; i < count; ++i) {
        std::shuffle(items.begin(), items.end(), gen);
        f.add(mrarank::Word(items), u(gen));
    }
    return f;
}

}  // namespace testsupport
