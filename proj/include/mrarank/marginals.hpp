#pragma once

#include "mrarank/linalg.hpp"
#include "mrarank/ranking.hpp"

#include <map>

namespace mrarank {

/// M_A f: sums f(sigma) over the support words sigma whose content contains A,
/// keyed by the induced ranking on A. A = ∅ gives the total mass at 0̄.
RankingFunction marginal(const RankingFunction& f, const Subset& a);

/// Frequencies of the rankings observed on exactly A, normalized by N_A.
RankingFunction naive_empirical_marginal(const Dataset& d, const Subset& a);

/// Average of the induced rankings on B over observations whose subset contains B.
RankingFunction marginal_based_estimator(const Dataset& d, const Subset& b);

/// phi'_A: spreads each delta_pi uniformly over its linear extensions in Gamma_A,
/// scaled by |pi|!/|A|! so that mass is preserved.
RankingFunction linear_extension_embed(const RankingFunction& f, const Subset& a);

// Largest universe accepted by the dense full-ranking helpers below.
inline constexpr std::size_t kMaxFullRankingItems = 8;
// Largest universe for an explicit n! x n! matrix.
inline constexpr std::size_t kMaxDenseMatrixItems = 7;

/// (1/N) sum_i (|A_i|!/n!) 1_{S_n(Pi_i)}, a function on full rankings of the universe.
RankingFunction biased_estimator(const Dataset& d, const Subset& universe);

using SubsetWeights = std::map<Subset, double>;

/// T_nu(sigma, sigma') = sum_A nu(A) |A|!/n! 1{sigma|A = sigma'|A}, rows and
/// columns over the full rankings of the universe in lexicographic order.
Matrix similarity_matrix(const SubsetWeights& nu, const Subset& universe);

/// One row of T_nu, without building the matrix.
RankingFunction similarity_row(const SubsetWeights& nu, const Subset& universe, const Word& sigma);

}  // namespace mrarank
