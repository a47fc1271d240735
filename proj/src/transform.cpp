#include "mrarank/transform.hpp"

#include "mrarank/combinatorics.hpp"
#include "mrarank/errors.hpp"
#include "mrarank/permtable.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

namespace mrarank {

Block& WaveletCoefficients::block(const Subset& b) {
    auto it = blocks_.find(b);
    if (it == blocks_.end()) it = blocks_.emplace(b, Block(factorial(b.size()), 0.0)).first;
    return it->second;
}

const Block* WaveletCoefficients::find(const Subset& b) const {
    auto it = blocks_.find(b);
    return it == blocks_.end() ? nullptr : &it->second;
}

double WaveletCoefficients::value(const Subset& b, const Word& w) const {
    const Block* blk = find(b);
    if (!blk) return 0.0;
    return (*blk)[b.empty() ? 0 : ranking_index(w, b)];
}

void WaveletCoefficients::add(const Subset& b, const Word& w, double v) {
    block(b)[b.empty() ? 0 : ranking_index(w, b)] += v;
}

RankingFunction WaveletCoefficients::block_function(const Subset& b) const {
    RankingFunction f;
    const Block* blk = find(b);
    if (!blk) return f;
    for (std::size_t i = 0; i < blk->size(); ++i)
        if ((*blk)[i] != 0.0) f.set(b.empty() ? Word{} : ranking_at(b, i), (*blk)[i]);
    return f;
}

WaveletCoefficients& WaveletCoefficients::operator+=(const WaveletCoefficients& o) {
    for (const auto& [b, blk] : o.blocks_) {
        Block& mine = block(b);
        for (std::size_t i = 0; i < blk.size(); ++i) mine[i] += blk[i];
    }
    return *this;
}

WaveletCoefficients& WaveletCoefficients::operator*=(double s) {
    for (auto& [b, blk] : blocks_)
        for (double& v : blk) v *= s;
    return *this;
}

double max_abs_diff(const WaveletCoefficients& a, const WaveletCoefficients& b) {
    double m = 0.0;
    for (const auto& [s, blk] : a.blocks()) {
        const Block* other = b.find(s);
        for (std::size_t i = 0; i < blk.size(); ++i) m = std::max(m, std::abs(blk[i] - (other ? (*other)[i] : 0.0)));
    }
    for (const auto& [s, blk] : b.blocks()) {
        if (a.contains(s)) continue;
        for (double v : blk) m = std::max(m, std::abs(v));
    }
    return m;
}

double max_abs(const WaveletCoefficients& x) {
    double m = 0.0;
    for (const auto& [s, blk] : x.blocks())
        for (double v : blk) m = std::max(m, std::abs(v));
    return m;
}

namespace {

std::size_t rank_of(std::span<const std::uint8_t> perm) {
    std::size_t rank = 0;
    std::uint32_t used = 0;
    const std::size_t k = perm.size();
    for (std::size_t i = 0; i < k; ++i) {
        const std::uint32_t below = used & ((1u << perm[i]) - 1u);
        rank = rank * (k - i) + (perm[i] - static_cast<std::size_t>(std::popcount(below)));
        used |= 1u << perm[i];
    }
    return rank;
}

void check_level(const ApproximationLevel& level, const Subset& a, std::size_t j) {
    for (const auto& [b, blk] : level) {
        if (b.size() != j) throw DomainError("approximation level mixes scales");
        if (!a.contains(b)) throw DomainError("approximation block outside the subset");
        if (blk.size() != factorial(j)) throw DomainError("approximation block has the wrong length");
    }
}

}  // namespace

ApproximationLevel low_pass(const ApproximationLevel& level, const Subset& a, std::size_t j, OpCounter* counter) {
    if (j < 2 || j > a.size()) throw DomainError("low_pass: scale out of range");
    check_level(level, a, j);
    ApproximationLevel out;
    std::uint64_t ops = 0;

    if (j == 2) {
        const Subset lowest{a[0], a[1]};
        double mass = 0.0;
        auto it = level.find(lowest);
        if (it != level.end())
            for (double v : it->second)
                if (v != 0.0) {
                    mass += v;
                    ++ops;
                }
        out.emplace(Subset{}, Block{mass});
        if (counter) counter->low_pass += ops;
        return out;
    }

    for (auto& b : subsets_of_size(a, j - 1)) out.emplace(std::move(b), Block(factorial(j - 1), 0.0));

    const PermTable& table = PermTable::get(j);
    std::vector<std::uint8_t> reduced(j - 1);
    for (const auto& [b, blk] : level) {
        // Items of B that are the smallest missing item once removed: those below min(A \ B).
        const Subset rest = set_difference(a, b);
        std::size_t eligible = b.size();
        if (!rest.empty())
            eligible = static_cast<std::size_t>(std::lower_bound(b.begin(), b.end(), rest[0]) - b.begin());
        if (eligible == 0) continue;
        std::vector<Block*> targets(eligible);
        for (std::size_t x = 0; x < eligible; ++x) targets[x] = &out.at(b.without(b[x]));

        for (std::size_t q = 0; q < blk.size(); ++q) {
            const double v = blk[q];
            if (v == 0.0) continue;
            const auto perm = table.perm(q);
            for (std::size_t x = 0; x < eligible; ++x) {
                std::size_t t = 0;
                for (std::size_t r = 0; r < j; ++r) {
                    const std::uint8_t y = perm[r];
                    if (y == x) continue;
                    reduced[t++] = static_cast<std::uint8_t>(y > x ? y - 1 : y);
                }
                (*targets[x])[rank_of(reduced)] += v;
                ++ops;
            }
        }
    }
    if (counter) counter->low_pass += ops;
    return out;
}

ApproximationLevel high_pass(const ApproximationLevel& level, const AlphaTable& table, OpCounter* counter) {
    ApproximationLevel out;
    std::uint64_t ops = 0;
    std::vector<std::uint8_t> target;
    for (const auto& [b, blk] : level) {
        const std::size_t k = b.size();
        if (k == 1) throw DomainError("high_pass: single item block");
        if (k == 0) {
            out.emplace(b, blk);
            continue;
        }
        const auto& row = table.canonical_row_double(k);
        const PermTable& perms = PermTable::get(k);
        Block result(blk.size(), 0.0);
        target.resize(k);
        for (std::size_t q = 0; q < blk.size(); ++q) {
            const double v = blk[q];
            if (v == 0.0) continue;
            const auto src = perms.perm(q);
            // alpha_B(pi, pi') = row[pi^-1 o pi'], so pi = pi' o R^-1 for each row entry R.
            for (std::size_t r = 0; r < row.size(); ++r) {
                const auto inv = perms.inverse(r);
                for (std::size_t i = 0; i < k; ++i) target[i] = src[inv[i]];
                result[rank_of(target)] += row[r] * v;
            }
            ops += row.size();
        }
        out.emplace(b, std::move(result));
    }
    if (counter) counter->high_pass += ops;
    return out;
}

WaveletCoefficients fwt_single(const RankingFunction& f, const Subset& a, const AlphaTable& table,
                               OpCounter* counter) {
    const std::size_t k = a.size();
    if (k == 1) throw DomainError("fwt_single: a single item has no rankings");
    if (k > table.k_max()) throw ResourceError("fwt_single: subset larger than the alpha table");
    WaveletCoefficients out;
    if (k == 0) {
        out.block(Subset{})[0] = f(Word{});
        for (const auto& [w, v] : f.entries())
            if (!w.empty()) throw DomainError("fwt_single: support outside Gamma_A");
        return out;
    }

    ApproximationLevel level;
    Block& top = level.emplace(a, Block(factorial(k), 0.0)).first->second;
    for (const auto& [w, v] : f.entries()) {
        if (w.size() != k || content(w) != a) throw DomainError("fwt_single: support outside Gamma_A");
        top[ranking_index(w, a)] += v;
    }

    for (std::size_t j = k; j >= 2; --j) {
        for (auto& [b, blk] : high_pass(level, table, counter)) out.block(b) = std::move(blk);
        level = low_pass(level, a, j, counter);
    }
    out.block(Subset{}) = level.at(Subset{});
    return out;
}

WaveletCoefficients fwt(const RankingFunction& f, const AlphaTable& table, OpCounter* counter, unsigned workers) {
    std::vector<Subset> contents;
    for (const auto& s : f.global_support()) {
        if (s.size() == 1) throw DomainError("fwt: single item words are not rankings");
        contents.push_back(s);
    }
    std::vector<RankingFunction> parts(contents.size());
    {
        std::map<Subset, std::size_t> slot;
        for (std::size_t i = 0; i < contents.size(); ++i) slot.emplace(contents[i], i);
        for (const auto& [w, v] : f.entries())
            if (v != 0.0) parts[slot.at(content(w))].set(w, v);
    }

    std::vector<WaveletCoefficients> results(contents.size());
    std::vector<OpCounter> counts(contents.size());
    auto run = [&](std::size_t i) { results[i] = fwt_single(parts[i], contents[i], table, &counts[i]); };

    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(contents.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < contents.size(); ++i) run(i);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < contents.size(); i += workers) run(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    WaveletCoefficients out;
    for (std::size_t i = 0; i < contents.size(); ++i) {
        out += results[i];
        if (counter) *counter += counts[i];
    }
    return out;
}

RankingFunction synthesize(const WaveletCoefficients& x, const Subset& a) {
    const std::size_t k = a.size();
    if (k == 1) throw DomainError("synthesize: a single item has no rankings");
    RankingFunction out;
    const Block* empty_block = x.find(Subset{});
    const double base = empty_block ? (*empty_block)[0] : 0.0;
    if (k == 0) {
        out.set(Word{}, base);
        return out;
    }
    if (k > kAlphaSizeCap) throw ResourceError("synthesize: subset too large");

    std::vector<const Block*> by_mask(std::size_t{1} << k, nullptr);
    for (const auto& [b, blk] : x.blocks()) {
        if (b.size() < 2 || !a.contains(b)) continue;
        std::size_t mask = 0;
        for (Item it : b) mask |= std::size_t{1} << a.index_of(it);
        by_mask[mask] = &blk;
    }
    std::vector<double> inv_fact(k + 1);
    for (std::size_t i = 0; i <= k; ++i) inv_fact[i] = 1.0 / static_cast<double>(factorial(i));

    const PermTable& perms = PermTable::get(k);
    std::vector<std::uint8_t> local(k);
    std::vector<Item> items(k);
    for (std::size_t q = 0; q < perms.count(); ++q) {
        const auto p = perms.perm(q);
        double v = base * inv_fact[k];
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t mask = std::size_t{1} << p[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                mask |= std::size_t{1} << p[j];
                const Block* blk = by_mask[mask];
                if (!blk) continue;
                const std::size_t len = j - i + 1;
                for (std::size_t t = 0; t < len; ++t)
                    local[t] = static_cast<std::uint8_t>(std::popcount(mask & ((std::size_t{1} << p[i + t]) - 1)));
                v += (*blk)[rank_of(std::span<const std::uint8_t>(local.data(), len))] * inv_fact[k - len + 1];
            }
        }
        for (std::size_t i = 0; i < k; ++i) items[i] = a[p[i]];
        out.set(Word(items), v);
    }
    return out;
}

WaveletCoefficients feature_marginal(const WaveletCoefficients& x, const Subset& a) {
    WaveletCoefficients out;
    for (const auto& [b, blk] : x.blocks())
        if (a.contains(b)) out.block(b) = blk;
    return out;
}

WaveletCoefficients restrict_blocks(const WaveletCoefficients& x, const std::vector<Subset>& family) {
    WaveletCoefficients out;
    for (const auto& b : family)
        if (const Block* blk = x.find(b)) out.block(b) = *blk;
    return out;
}

double fwt_op_bound(std::size_t k, std::size_t support_size) {
    const double kf = static_cast<double>(factorial(k));
    const double pow = std::ldexp(1.0, static_cast<int>(k) - 1);
    return (std::numbers::e * kf + static_cast<double>(k) * (pow - 1.0)) * static_cast<double>(support_size);
}

double alpha_op_bound(std::size_t k) {
    return 0.5 * static_cast<double>(k * k) * static_cast<double>(factorial(k));
}

// ----------------------------------------------------------------------------

Subset coefficient_universe(const WaveletCoefficients& x) {
    Subset u;
    for (const auto& [b, blk] : x.blocks()) u = set_union(u, b);
    return u;
}

void write_coefficients(std::ostream& out, const CoefficientFile& file) {
    out << kCoefficientHeader << '\n';
    out << "kmax " << file.k_max << '\n';
    out << "universe " << format_subset(file.universe) << '\n';
    char buf[40];
    for (const auto& [b, blk] : file.coefficients.blocks()) {
        out << "block " << format_subset(b) << '\n';
        for (std::size_t i = 0; i < blk.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", blk[i]);
            out << format_word(b.empty() ? Word{} : ranking_at(b, i)) << ' ' << buf << '\n';
        }
    }
}

std::string format_coefficients(const CoefficientFile& file) {
    std::ostringstream out;
    write_coefficients(out, file);
    return out.str();
}

CoefficientFile read_coefficients(std::istream& in) {
    CoefficientFile file;
    std::string line;
    std::size_t n = 0;
    auto next = [&]() -> bool {
        while (std::getline(in, line)) {
            ++n;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line.front() == '#') continue;
            return true;
        }
        return false;
    };
    if (!next() || line != kCoefficientHeader) throw ParseError(n, "missing header '" + std::string(kCoefficientHeader) + "'");

    auto keyword = [&](const std::string& key) -> std::string {
        if (line.rfind(key + " ", 0) != 0) throw ParseError(n, "expected '" + key + "'");
        return line.substr(key.size() + 1);
    };
    if (!next()) throw ParseError(n, "missing kmax line");
    try {
        file.k_max = std::stoul(keyword("kmax"));
    } catch (const std::logic_error&) {
        throw ParseError(n, "bad kmax value");
    }
    if (!next()) throw ParseError(n, "missing universe line");
    file.universe = parse_subset(keyword("universe"), n);

    Subset current;
    Block* blk = nullptr;
    while (next()) {
        if (line.rfind("block ", 0) == 0) {
            current = parse_subset(line.substr(6), n);
            if (current.size() == 1) throw ParseError(n, "block on a single item");
            if (file.coefficients.contains(current)) throw ParseError(n, "duplicate block");
            blk = &file.coefficients.block(current);
            continue;
        }
        if (!blk) throw ParseError(n, "entry before any block");
        const auto space = line.find(' ');
        if (space == std::string::npos) throw ParseError(n, "expected '<word> <value>'");
        const Word w = parse_word(line.substr(0, space), n);
        if (w.size() != current.size() || (!w.empty() && content(w) != current))
            throw ParseError(n, "word does not rank the block subset");
        double v = 0.0;
        try {
            std::size_t used = 0;
            const std::string num = line.substr(space + 1);
            v = std::stod(num, &used);
            if (used != num.size()) throw std::invalid_argument("trailing");
        } catch (const std::logic_error&) {
            throw ParseError(n, "bad coefficient value");
        }
        (*blk)[current.empty() ? 0 : ranking_index(w, current)] = v;
    }
    return file;
}

CoefficientFile parse_coefficients(const std::string& text) {
    std::istringstream in(text);
    return read_coefficients(in);
}

}  // namespace mrarank
