#pragma once

#include "mrarank/alpha.hpp"
#include "mrarank/linalg.hpp"
#include "mrarank/ranking.hpp"
#include "mrarank/transform.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace mrarank {

// ---- dense helpers over Gamma_A (lexicographic order) -----------------------

/// Rows Gamma_B, columns Gamma_A: entry 1 when sigma induces pi on B.
Matrix marginal_matrix(const Subset& a, const Subset& b);

/// A basis of H_B as dense vectors over Gamma_B, from the null space of the
/// marginal constraints on every strict subset of B.
std::vector<std::vector<double>> h_basis(const Subset& b);

/// phi_A of a dense block on Gamma_B, straight from the definition on Diracs.
std::vector<double> synthesis_by_definition(const Subset& a, const Subset& b, const std::vector<double>& block);

/// phi'_universe of a dense block on Gamma_B, as a dense vector over the full rankings.
std::vector<double> extension_embedding(const Subset& universe, const Subset& b, const std::vector<double>& block);

/// Wavelet transform of f on Gamma_A by solving the change of basis to the
/// direct sum of the phi_A(H_B). Limited to |A| <= 5.
WaveletCoefficients brute_force_wavelet(const RankingFunction& f, const Subset& a);

/// Dimension of {F on Gamma_A : M_{A'} F = 0 for all A' in constraints}, by elimination.
std::size_t constraint_nullity(const Subset& a, const std::set<Subset>& constraints);

/// Largest violation of the H_B membership condition over all blocks of x.
double h_membership_residual(const WaveletCoefficients& x);

// ---- audits -----------------------------------------------------------------

struct AuditCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct AuditReport {
    std::string suite;
    std::size_t n = 0;
    std::vector<AuditCheck> checks;

    bool passed() const;
    void add(std::string name, bool ok, std::string detail = {});
    // One JSON object per check, newline separated.
    std::string to_json_lines() const;
};

/// Universe {1, ..., n}.
Subset range_subset(std::size_t n);

/// Oracle equivalence on all Diracs of Gamma_[n], block dimensions d_k, and
/// H_B membership. n <= 5 for the oracle part, n <= 6 for the rank part.
AuditReport mra_audit(std::size_t n, const AlphaTable& table);

/// Rank of the top blocks of fwt(delta_pi) over all pi in Gamma_[k].
std::size_t top_block_rank(std::size_t k, const AlphaTable& table);

/// Number of k-subsets on which two full rankings disagree.
std::size_t generalized_kendall(const Word& sigma, const Word& sigma_prime, std::size_t k);

/// R_k(sigma, sigma') = (n-k)! (k!/n!)^2 (C(n,k) - d^k(sigma, sigma')) over S_n, n <= 6.
Matrix shuffle_matrix(std::size_t n, std::size_t k);

/// Checks that R_k kills phi'(H^j) for j > k and has rank 1 + sum_{j<=k} C(n,j) d_j. n <= 5.
AuditReport null_space_check(std::size_t n, std::size_t k);

/// Symmetry, positive semidefiniteness, commutation and null spaces of every R_k.
AuditReport shuffle_audit(std::size_t n);

// ---- scale-2 decomposition --------------------------------------------------

/// x_{a>b} = delta_ab - delta_ba as a coefficient set.
WaveletCoefficients pair_element(Item a, Item b);
/// e_a = sum over b != a of x_{a>b}.
WaveletCoefficients gradient_element(Item a, const Subset& universe);
/// f_(a,b) = sum over c not in {a,b} of x_{a>b} + x_{b>c} + x_{c>a}.
WaveletCoefficients cycle_element(Item a, Item b, const Subset& universe);

/// Inner product of scale-2 coefficient sets in which the x_{a>b}, a < b, are orthonormal.
double h2_inner(const WaveletCoefficients& x, const WaveletCoefficients& y);

struct HodgeParts {
    WaveletCoefficients gradient;
    WaveletCoefficients curl;
};

/// Orthogonal split of a scale-2 coefficient set into span{e_a} and its complement.
HodgeParts hodge_decompose(const WaveletCoefficients& x2, const Subset& universe);

AuditReport h2_audit(std::size_t n);

// ---- tableaux -----------------------------------------------------------------

using Partition = std::vector<std::size_t>;
using Tableau = std::vector<std::vector<std::size_t>>;  // rows, top first

std::vector<Partition> partitions(std::size_t n);
std::uint64_t hook_length_count(const Partition& shape);
std::vector<Tableau> standard_tableaux(const Partition& shape);
Partition tableau_shape(const Tableau& q);

/// The statistic assigning a tableau to the scale n - eig(Q): l is the length
/// of the run 1, 2, ..., l at the start of the first row, m the length of the
/// run l+1, l+2, ... going down the first column below 1; eig is l for even m
/// and l - 1 for odd m.
std::size_t tableau_eig(const Tableau& q);

/// Multiplicities kappa[k][shape] for k in {0, 2, ..., n}.
std::map<std::size_t, std::map<Partition, std::size_t>> scale_multiplicities(std::size_t n);

AuditReport syt_dimension_audit(std::size_t n);

AuditReport embedding_audit(std::size_t n);

}  // namespace mrarank
