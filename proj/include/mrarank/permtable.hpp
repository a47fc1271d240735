#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mrarank {

/// All permutations of {0..k-1} in lexicographic order together with their
/// inverses, built once per k and shared read-only.
class PermTable {
public:
    static const PermTable& get(std::size_t k);

    std::size_t k() const noexcept { return k_; }
    std::size_t count() const noexcept { return count_; }
    std::span<const std::uint8_t> perm(std::size_t rank) const { return {perms_.data() + rank * k_, k_}; }
    std::span<const std::uint8_t> inverse(std::size_t rank) const { return {inverses_.data() + rank * k_, k_}; }

private:
    explicit PermTable(std::size_t k);

    std::size_t k_;
    std::size_t count_;
    std::vector<std::uint8_t> perms_;
    std::vector<std::uint8_t> inverses_;
};

}  // namespace mrarank
