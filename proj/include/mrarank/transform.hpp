#pragma once

#include "mrarank/alpha.hpp"
#include "mrarank/ranking.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace mrarank {

/// Dense function on the rankings of a subset B, indexed by the lexicographic
/// rank of the word within Gamma_B. The block of the empty set has one entry.
using Block = std::vector<double>;

/// Element of the feature space: one block per subset.
class WaveletCoefficients {
public:
    using Map = std::map<Subset, Block>;

    WaveletCoefficients() = default;

    // Returns the block of b, creating a zero block if absent.
    Block& block(const Subset& b);
    const Block* find(const Subset& b) const;
    bool contains(const Subset& b) const { return blocks_.count(b) != 0; }

    double value(const Subset& b, const Word& w) const;
    void add(const Subset& b, const Word& w, double v);

    const Map& blocks() const noexcept { return blocks_; }
    bool empty() const noexcept { return blocks_.empty(); }
    std::size_t size() const noexcept { return blocks_.size(); }
    void erase(const Subset& b) { blocks_.erase(b); }

    // The block as a sparse ranking function on Gamma_B (zeros dropped).
    RankingFunction block_function(const Subset& b) const;

    WaveletCoefficients& operator+=(const WaveletCoefficients& o);
    WaveletCoefficients& operator*=(double s);
    friend WaveletCoefficients operator+(WaveletCoefficients a, const WaveletCoefficients& b) { return a += b; }
    friend WaveletCoefficients operator*(double s, WaveletCoefficients a) { return a *= s; }

private:
    Map blocks_;
};

// Max absolute entry difference; an absent block counts as zero.
double max_abs_diff(const WaveletCoefficients& a, const WaveletCoefficients& b);
double max_abs(const WaveletCoefficients& x);

/// Filter multiply-add counters.
struct OpCounter {
    std::uint64_t low_pass = 0;
    std::uint64_t high_pass = 0;
    std::uint64_t total() const noexcept { return low_pass + high_pass; }
    OpCounter& operator+=(const OpCounter& o) {
        low_pass += o.low_pass;
        high_pass += o.high_pass;
        return *this;
    }
};

/// Approximation coefficients at one scale: the marginals on every j-subset of A.
using ApproximationLevel = std::map<Subset, Block>;

/// Order-j low-pass filter: scale-j marginals on subsets of A to scale j-1.
/// For j = 2 the result is the single 0̄ entry, read from the block of the two
/// smallest items of A.
ApproximationLevel low_pass(const ApproximationLevel& level, const Subset& a, std::size_t j,
                            OpCounter* counter = nullptr);

/// Order-j high-pass filter: applies alpha_B to each scale-j marginal block.
ApproximationLevel high_pass(const ApproximationLevel& level, const AlphaTable& table,
                             OpCounter* counter = nullptr);

/// Fast wavelet transform of a function supported on Gamma_A. Output holds a
/// block for every subset of A of size >= 2 and for the empty set.
WaveletCoefficients fwt_single(const RankingFunction& f, const Subset& a, const AlphaTable& table,
                               OpCounter* counter = nullptr);

/// Fast wavelet transform of a function on all incomplete rankings: the sum of
/// fwt_single over the content blocks of f. `workers` > 1 spreads content
/// blocks over threads; the result does not depend on the worker count.
WaveletCoefficients fwt(const RankingFunction& f, const AlphaTable& table, OpCounter* counter = nullptr,
                        unsigned workers = 1);

/// phi_A X on Gamma_A via the contiguous-factor formula. Blocks on subsets not
/// contained in A contribute nothing.
RankingFunction synthesize(const WaveletCoefficients& x, const Subset& a);

/// Keeps exactly the blocks on subsets of A.
WaveletCoefficients feature_marginal(const WaveletCoefficients& x, const Subset& a);

/// Keeps the blocks whose subset is in `family`.
WaveletCoefficients restrict_blocks(const WaveletCoefficients& x, const std::vector<Subset>& family);

/// [e k! + k (2^(k-1) - 1)] * support size, the filter-bank op bound.
double fwt_op_bound(std::size_t k, std::size_t support_size);
/// k^2 k! / 2, the alpha table construction bound.
double alpha_op_bound(std::size_t k);

// ----------------------------------------------------------------------------
// Text serialization.

inline constexpr const char* kCoefficientHeader = "mra-coefficients v1";

struct CoefficientFile {
    WaveletCoefficients coefficients;
    std::size_t k_max = kDefaultAlphaSize;
    Subset universe;
};

void write_coefficients(std::ostream& out, const CoefficientFile& file);
std::string format_coefficients(const CoefficientFile& file);
CoefficientFile read_coefficients(std::istream& in);
CoefficientFile parse_coefficients(const std::string& text);

// Union of the subsets carrying blocks.
Subset coefficient_universe(const WaveletCoefficients& x);

}  // namespace mrarank
