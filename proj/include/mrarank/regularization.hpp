#pragma once

#include "mrarank/ranking.hpp"
#include "mrarank/transform.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <vector>

namespace mrarank {

/// k - |B ∩ B'| for two k-subsets.
std::size_t subset_distance(const Subset& b, const Subset& b_prime);

/// Average of tau . X_B over the bijections tau: B -> B' that fix B ∩ B'.
Block transport(const Block& x, const Subset& from, const Subset& to);

/// Largest distance with a nonzero weight: min(h, k, n - k).
std::size_t kernel_window(std::size_t n, std::size_t k, std::size_t h);

/// Exact step-kernel weights q(j) = [(w + 1) C(k, j) C(n - k, j)]^-1 for
/// j = 0..w with w = kernel_window(n, k, h).
std::vector<mpq_class> kernel_weights(std::size_t n, std::size_t k, std::size_t h);

/// Weight of a target block at a given distance, for universe size n and scale k.
using KernelProfile = std::function<double(std::size_t distance, std::size_t n, std::size_t k)>;

KernelProfile step_profile(std::size_t h);

struct SmoothStats {
    std::size_t blocks_read = 0;
    std::size_t transports = 0;
};

/// K X_B = sum over k-subsets B' of the universe within distance `radius(k)`
/// of profile(D(B, B')) * transport(X_B, B'), scale by scale. The empty-set
/// block is copied.
WaveletCoefficients kernel_smooth(const WaveletCoefficients& x, const Subset& universe,
                                  const std::function<std::size_t(std::size_t k)>& radius,
                                  const KernelProfile& profile, SmoothStats* stats = nullptr);

/// Step kernel of width h.
WaveletCoefficients kernel_smooth(const WaveletCoefficients& x, std::size_t h, const Subset& universe,
                                  SmoothStats* stats = nullptr);

/// Smooths only the blocks on subsets of A, treating A as the universe.
WaveletCoefficients local_regularize(const WaveletCoefficients& x, const Subset& a, std::size_t h,
                                     SmoothStats* stats = nullptr);

}  // namespace mrarank
