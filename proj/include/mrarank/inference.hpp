#pragma once

#include "mrarank/alpha.hpp"
#include "mrarank/ranking.hpp"
#include "mrarank/transform.hpp"

#include <cstdint>
#include <istream>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace mrarank {

/// The set of observable subsets, optionally with observation probabilities.
class ObservationDesign {
public:
    ObservationDesign() = default;
    explicit ObservationDesign(std::set<Subset> subsets);
    explicit ObservationDesign(std::map<Subset, double> weights);

    const std::set<Subset>& subsets() const noexcept { return subsets_; }
    bool weighted() const noexcept { return !weights_.empty(); }
    // Observation probabilities; uniform over the subsets when none were given.
    std::map<Subset, double> weights() const;

private:
    std::set<Subset> subsets_;
    std::map<Subset, double> weights_;
};

/// Design file: one subset per line ("1,2,3"), optionally followed by a weight.
/// Either every line has a weight or none does.
ObservationDesign parse_design(std::istream& in);

/// Model file: one full ranking per line ("3>1>2") followed by its probability.
/// The probabilities must sum to 1 within `tol`.
RankingFunction parse_model(std::istream& in, double tol = 1e-9);

// ----------------------------------------------------------------------------

/// Streaming form of the wavelet empirical estimator. Keeps the histogram of
/// observed rankings (at most min(N, sum |A|!) entries) and the per-subset
/// counts; partial accumulators merge by addition.
class EstimatorAccumulator {
public:
    void add(const Word& ranking);
    void add(const Dataset& d);
    void merge(const EstimatorAccumulator& other);

    std::size_t observations() const noexcept { return n_; }
    const RankingFunction& histogram() const noexcept { return histogram_; }
    const std::map<Subset, std::size_t>& subset_counts() const noexcept { return counts_; }

    // Z_B = #{i : B ⊆ A_i} for every B in the downward closure of the observed
    // subsets (Z of the empty set is N).
    std::map<Subset, std::size_t> coverage() const;

    // X_B = Psi_B(F_N) / Z_B on every covered block.
    WaveletCoefficients finalize(const AlphaTable& table, OpCounter* counter = nullptr, unsigned workers = 1) const;

private:
    RankingFunction histogram_;
    std::map<Subset, std::size_t> counts_;
    std::size_t n_ = 0;
};

WaveletCoefficients wavelet_empirical_estimator(const Dataset& d, const AlphaTable& table,
                                                OpCounter* counter = nullptr, unsigned workers = 1);

/// [e K! + (K + 4) 2^(K-1)] * stored, the estimator op bound for largest subset size K.
double estimator_op_bound(std::size_t k_max, std::size_t stored);

/// Downward closure of a family: every subset of size >= 2 of a member, plus ∅.
std::set<Subset> downward_closure(const std::set<Subset>& family);

/// Sum of d_|B| over a family of subsets (d_0 = 1).
std::uint64_t degrees_of_freedom(const std::set<Subset>& family);

struct IdentifiableSupport {
    std::set<Subset> blocks;  // the blocks determined by the design
    std::uint64_t dof = 0;    // their total dimension
};

IdentifiableSupport identifiable_support(const ObservationDesign& design);

/// Blocks of P̄(universe) that the design leaves undetermined, with their dimension.
IdentifiableSupport unidentifiable_blocks(const ObservationDesign& design, const Subset& universe);

struct SolutionSpace {
    RankingFunction particular;
    std::set<Subset> free_blocks;
    std::uint64_t dimension = 0;
};

/// Solutions F on Gamma_A of M_{A'} F = M_{A'} F0 for all A' in `constraints`.
SolutionSpace solution_space(const RankingFunction& f0, const Subset& a, const std::set<Subset>& constraints,
                             const AlphaTable& table);

// ----------------------------------------------------------------------------

/// Counter-based generator: output t for key `seed` is the SplitMix64
/// finalizer applied to seed + (t + 1) * 0x9E3779B97F4A7C15.
std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t counter);
/// The top 53 bits of splitmix64 scaled to [0, 1).
double uniform01(std::uint64_t seed, std::uint64_t counter);

/// N observations: draw sigma ~ p and A ~ nu, record sigma restricted to A.
/// Observation i uses counters 2i (ranking) and 2i + 1 (subset).
Dataset generate_dataset(const RankingFunction& p, const ObservationDesign& nu, std::size_t n, std::uint64_t seed);

/// phi_A of the blocks of X on subsets of A.
RankingFunction estimate_marginal(const WaveletCoefficients& x, const Subset& a);

/// Euclidean projection of f restricted to Gamma_A onto the probability simplex.
RankingFunction project_to_simplex(const RankingFunction& f, const Subset& a);

struct GroupFeatures {
    std::map<std::string, WaveletCoefficients> features;
    std::vector<std::string> skipped;  // empty groups
};

GroupFeatures per_group_features(const std::map<std::string, Dataset>& groups, const AlphaTable& table);

/// Euclidean distance between two coefficient sets, absent blocks read as zero.
double coefficient_distance(const WaveletCoefficients& a, const WaveletCoefficients& b);

}  // namespace mrarank
