#include "mrarank/permtable.hpp"

#include "mrarank/alpha.hpp"
#include "mrarank/combinatorics.hpp"
#include "mrarank/errors.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <numeric>

namespace mrarank {

PermTable::PermTable(std::size_t k) : k_(k), count_(factorial(k)) {
    perms_.resize(count_ * k_);
    inverses_.resize(count_ * k_);
    std::vector<std::uint8_t> cur(k);
    std::iota(cur.begin(), cur.end(), std::uint8_t{0});
    std::size_t r = 0;
    do {
        std::copy(cur.begin(), cur.end(), perms_.begin() + static_cast<std::ptrdiff_t>(r * k_));
        for (std::size_t i = 0; i < k; ++i) inverses_[r * k_ + cur[i]] = static_cast<std::uint8_t>(i);
        ++r;
    } while (std::next_permutation(cur.begin(), cur.end()));
}

const PermTable& PermTable::get(std::size_t k) {
    static std::array<std::once_flag, kAlphaSizeCap + 1> flags;
    static std::array<std::unique_ptr<PermTable>, kAlphaSizeCap + 1> tables;
    if (k > kAlphaSizeCap) throw ResourceError("permutation table limited to " + std::to_string(kAlphaSizeCap) + " items");
    std::call_once(flags[k], [k] { tables[k].reset(new PermTable(k)); });
    return *tables[k];
}

}  // namespace mrarank
