#include "mrarank/validation.hpp"

#include "mrarank/combinatorics.hpp"
#include "mrarank/errors.hpp"
#include "mrarank/inference.hpp"
#include "mrarank/marginals.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <sstream>

namespace mrarank {

namespace {

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(3);
    s << v;
    return s.str();
}

double norm_inf(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

void require_size(std::size_t n, std::size_t lo, std::size_t hi, const char* what) {
    if (n < lo || n > hi)
        throw ResourceError(std::string(what) + " supports " + std::to_string(lo) + " <= n <= " + std::to_string(hi));
}

std::vector<double> dense(const RankingFunction& f, const Subset& a) {
    std::vector<double> v(factorial(a.size()), 0.0);
    for (const auto& [w, x] : f.entries()) {
        if (w.size() != a.size() || content(w) != a) throw DomainError("function not supported on Gamma_A");
        v[a.empty() ? 0 : ranking_index(w, a)] += x;
    }
    return v;
}

struct WaveletOracle {
    Subset a;
    std::vector<std::pair<Subset, std::vector<std::vector<double>>>> bases;
    Matrix change;

    explicit WaveletOracle(const Subset& subset) : a(subset) {
        const std::size_t size = factorial(a.size());
        change = Matrix(size, size);
        std::size_t col = 0;
        for (const auto& b : ranking_subsets(a)) {
            auto basis = h_basis(b);
            for (const auto& v : basis) {
                if (col >= size) throw AuditFailure("wavelet oracle: more basis vectors than rankings");
                change.set_column(col++, synthesis_by_definition(a, b, v));
            }
            bases.emplace_back(b, std::move(basis));
        }
        if (col != size) throw AuditFailure("wavelet oracle: basis vectors do not match |A|!");
    }

    WaveletCoefficients apply(const std::vector<double>& f) const {
        const auto c = solve(change, f);
        WaveletCoefficients out;
        std::size_t col = 0;
        for (const auto& [b, basis] : bases) {
            Block& blk = out.block(b);
            for (const auto& v : basis) {
                for (std::size_t i = 0; i < v.size(); ++i) blk[i] += c[col] * v[i];
                ++col;
            }
        }
        return out;
    }
};

// phi' images of the H_B bases for all B of size k in the universe.
std::vector<std::vector<double>> embedded_scale(const Subset& universe, std::size_t k) {
    std::vector<std::vector<double>> out;
    if (k == 0) {
        out.push_back(extension_embedding(universe, Subset{}, {1.0}));
        return out;
    }
    for (const auto& b : subsets_of_size(universe, k))
        for (const auto& v : h_basis(b)) out.push_back(extension_embedding(universe, b, v));
    return out;
}

Matrix rows_matrix(const std::vector<std::vector<double>>& rows) {
    Matrix m;
    for (const auto& r : rows) m.append_row(r);
    return m;
}

std::vector<double> pair_coordinates(const WaveletCoefficients& x, const Subset& universe) {
    std::vector<double> c;
    for (std::size_t i = 0; i < universe.size(); ++i)
        for (std::size_t j = i + 1; j < universe.size(); ++j) {
            const Subset p{universe[i], universe[j]};
            const Block* blk = x.find(p);
            c.push_back(blk ? ((*blk)[0] - (*blk)[1]) / 2.0 : 0.0);
        }
    return c;
}

}  // namespace

Matrix marginal_matrix(const Subset& a, const Subset& b) {
    if (!a.contains(b)) throw DomainError("marginal_matrix: B not contained in A");
    const auto cols = enumerate_rankings(a);
    Matrix m(factorial(b.size()), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const std::size_t r = b.empty() ? 0 : ranking_index(induce(cols[c], b), b);
        m(r, c) = 1.0;
    }
    return m;
}

std::vector<std::vector<double>> h_basis(const Subset& b) {
    if (b.size() == 1) throw DomainError("h_basis: single item");
    if (b.empty()) return {{1.0}};
    Matrix constraints;
    for (const auto& s : ranking_subsets(b)) {
        if (s == b) continue;
        const Matrix m = marginal_matrix(b, s);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            std::vector<double> row(m.cols());
            for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
            constraints.append_row(row);
        }
    }
    return nullspace(constraints);
}

std::vector<double> synthesis_by_definition(const Subset& a, const Subset& b, const std::vector<double>& block) {
    if (!a.contains(b)) return std::vector<double>(factorial(a.size()), 0.0);
    const auto targets = enumerate_rankings(a);
    std::vector<double> out(targets.size(), 0.0);
    if (b.empty()) {
        const double v = block.at(0) / static_cast<double>(targets.size());
        std::fill(out.begin(), out.end(), v);
        return out;
    }
    const double scale = 1.0 / static_cast<double>(factorial(a.size() - b.size() + 1));
    const auto sources = enumerate_rankings(b);
    for (std::size_t q = 0; q < sources.size(); ++q) {
        if (block[q] == 0.0) continue;
        for (std::size_t s = 0; s < targets.size(); ++s)
            if (is_contiguous_subword(sources[q], targets[s])) out[s] += scale * block[q];
    }
    return out;
}

std::vector<double> extension_embedding(const Subset& universe, const Subset& b, const std::vector<double>& block) {
    RankingFunction f;
    if (b.empty()) {
        f.set(Word{}, block.at(0));
    } else {
        for (std::size_t q = 0; q < block.size(); ++q)
            if (block[q] != 0.0) f.set(ranking_at(b, q), block[q]);
    }
    return dense(linear_extension_embed(f, universe), universe);
}

WaveletCoefficients brute_force_wavelet(const RankingFunction& f, const Subset& a) {
    require_size(a.size(), 2, 5, "brute_force_wavelet");
    const WaveletOracle oracle(a);
    return oracle.apply(dense(f, a));
}

std::size_t constraint_nullity(const Subset& a, const std::set<Subset>& constraints) {
    if (a.size() > 6) throw ResourceError("constraint_nullity supports |A| <= 6");
    Matrix stacked;
    for (const auto& s : constraints) {
        const Matrix m = marginal_matrix(a, s);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            std::vector<double> row(m.cols());
            for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
            stacked.append_row(row);
        }
    }
    const std::size_t total = factorial(a.size());
    if (stacked.rows() == 0) return total;
    return total - rank(stacked);
}

double h_membership_residual(const WaveletCoefficients& x) {
    double worst = 0.0;
    for (const auto& [b, blk] : x.blocks()) {
        if (b.size() < 2) continue;
        const RankingFunction f = x.block_function(b);
        for (const auto& s : ranking_subsets(b)) {
            if (s == b) continue;
            worst = std::max(worst, max_abs(marginal(f, s)));
        }
    }
    return worst;
}

// ----------------------------------------------------------------------------

bool AuditReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.passed; });
}

void AuditReport::add(std::string name, bool ok, std::string detail) {
    checks.push_back(AuditCheck{std::move(name), ok, std::move(detail)});
}

std::string AuditReport::to_json_lines() const {
    std::string out;
    for (const auto& c : checks) {
        nlohmann::json j;
        j["suite"] = suite;
        j["n"] = n;
        j["check"] = c.name;
        j["passed"] = c.passed;
        j["detail"] = c.detail;
        out += j.dump();
        out.push_back('\n');
    }
    return out;
}

Subset range_subset(std::size_t n) {
    std::vector<Item> items(n);
    for (std::size_t i = 0; i < n; ++i) items[i] = static_cast<Item>(i + 1);
    return Subset(std::move(items));
}

std::size_t top_block_rank(std::size_t k, const AlphaTable& table) {
    const Subset a = range_subset(k);
    const auto words = enumerate_rankings(a);
    Matrix m(words.size(), words.size());
    for (std::size_t r = 0; r < words.size(); ++r) {
        const auto x = fwt_single(RankingFunction::dirac(words[r]), a, table);
        const Block& top = *x.find(a);
        for (std::size_t c = 0; c < top.size(); ++c) m(r, c) = top[c];
    }
    return rank(m);
}

AuditReport mra_audit(std::size_t n, const AlphaTable& table) {
    require_size(n, 2, 6, "mra audit");
    AuditReport report{"mra", n, {}};
    const Subset a = range_subset(n);

    for (std::size_t k = 2; k <= n; ++k) {
        const std::size_t r = top_block_rank(k, table);
        report.add("top_block_rank_k" + std::to_string(k), r == derangements(k),
                   "rank " + std::to_string(r) + ", expected " + std::to_string(derangements(k)));
    }

    double worst_member = 0.0, worst_round = 0.0, worst_oracle = 0.0;
    const std::unique_ptr<WaveletOracle> oracle = n <= 5 ? std::make_unique<WaveletOracle>(a) : nullptr;
    for (const auto& w : enumerate_rankings(a)) {
        const auto f = RankingFunction::dirac(w);
        const auto x = fwt_single(f, a, table);
        worst_member = std::max(worst_member, h_membership_residual(x));
        worst_round = std::max(worst_round, max_abs_diff(synthesize(x, a), f));
        if (oracle) worst_oracle = std::max(worst_oracle, max_abs_diff(x, oracle->apply(dense(f, a))));
    }
    report.add("h_membership", worst_member <= 1e-9, "max residual " + fmt(worst_member));
    report.add("round_trip", worst_round <= 1e-9, "max deviation " + fmt(worst_round));
    if (oracle) report.add("oracle_equivalence", worst_oracle < 1e-8, "max deviation " + fmt(worst_oracle));
    return report;
}

// ----------------------------------------------------------------------------

std::size_t generalized_kendall(const Word& sigma, const Word& sigma_prime, std::size_t k) {
    const Subset c = content(sigma);
    if (content(sigma_prime) != c) throw DomainError("generalized_kendall: rankings of different items");
    require_size(c.size(), 2, kMaxFullRankingItems, "generalized_kendall");
    if (k < 2 || k > c.size()) throw DomainError("generalized_kendall: k out of range");
    std::size_t count = 0;
    for (const auto& s : subsets_of_size(c, k))
        if (induce(sigma, s) != induce(sigma_prime, s)) ++count;
    return count;
}

Matrix shuffle_matrix(std::size_t n, std::size_t k) {
    require_size(n, 2, 6, "shuffle_matrix");
    if (k < 2 || k > n) throw DomainError("shuffle_matrix: k out of range");
    const Subset u = range_subset(n);
    const auto perms = enumerate_rankings(u);
    const auto subsets = subsets_of_size(u, k);
    std::vector<std::size_t> key(perms.size() * subsets.size());
    for (std::size_t i = 0; i < perms.size(); ++i)
        for (std::size_t s = 0; s < subsets.size(); ++s)
            key[i * subsets.size() + s] = ranking_index(induce(perms[i], subsets[s]), subsets[s]);

    const double ratio = static_cast<double>(factorial(k)) / static_cast<double>(factorial(n));
    const double scale = static_cast<double>(factorial(n - k)) * ratio * ratio;
    Matrix r(perms.size(), perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i)
        for (std::size_t j = i; j < perms.size(); ++j) {
            std::size_t common = 0;
            for (std::size_t s = 0; s < subsets.size(); ++s)
                if (key[i * subsets.size() + s] == key[j * subsets.size() + s]) ++common;
            r(i, j) = r(j, i) = scale * static_cast<double>(common);
        }
    return r;
}

AuditReport null_space_check(std::size_t n, std::size_t k) {
    require_size(n, 3, 5, "null_space_check");
    if (k < 2 || k >= n) throw DomainError("null_space_check: k must satisfy 2 <= k < n");
    AuditReport report{"shuffle", n, {}};
    const Subset u = range_subset(n);
    const Matrix r = shuffle_matrix(n, k);
    const std::string tag = "_k" + std::to_string(k);

    std::vector<std::vector<double>> high;
    for (std::size_t j = k + 1; j <= n; ++j) {
        auto part = embedded_scale(u, j);
        high.insert(high.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    double worst = 0.0;
    const double scale = r.inf_norm();
    for (const auto& v : high) worst = std::max(worst, norm_inf(r * v) / (scale * norm_inf(v)));
    report.add("annihilates_high_scales" + tag, worst <= 1e-8, "max relative residual " + fmt(worst));

    std::uint64_t expected_rank = 1;
    for (std::size_t j = 2; j <= k; ++j) expected_rank += binomial(n, j) * derangements(j);
    const std::size_t rk = rank(r);
    report.add("rank" + tag, rk == expected_rank,
               "rank " + std::to_string(rk) + ", expected " + std::to_string(expected_rank));

    std::uint64_t expected_nullity = 0;
    for (std::size_t j = k + 1; j <= n; ++j) expected_nullity += binomial(n, j) * derangements(j);
    const std::size_t span = rank(rows_matrix(high));
    const std::size_t nullity = r.rows() - rk;
    report.add("kernel_is_high_scales" + tag, span == expected_nullity && nullity == expected_nullity,
               "nullity " + std::to_string(nullity) + ", span of embedded high scales " + std::to_string(span) +
                   ", expected " + std::to_string(expected_nullity));
    return report;
}

AuditReport shuffle_audit(std::size_t n) {
    require_size(n, 3, 5, "shuffle audit");
    AuditReport report{"shuffle", n, {}};
    std::vector<Matrix> rs;
    for (std::size_t k = 2; k < n; ++k) {
        const Matrix r = shuffle_matrix(n, k);
        const std::string tag = "_k" + std::to_string(k);
        report.add("symmetric" + tag, (r - r.transpose()).max_abs() == 0.0);
        const auto ev = symmetric_eigenvalues(r);
        report.add("psd" + tag, ev.front() >= -1e-10, "min eigenvalue " + fmt(ev.front()));
        double lo = 1e300, hi = -1e300;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < r.cols(); ++j) s += r(i, j);
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
        report.add("constant_row_sums" + tag, hi - lo <= 1e-12 * std::max(1.0, hi), "spread " + fmt(hi - lo));
        for (auto& c : null_space_check(n, k).checks) report.checks.push_back(std::move(c));
        rs.push_back(r);
    }
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = i + 1; j < rs.size(); ++j) {
            const Matrix c = rs[i] * rs[j] - rs[j] * rs[i];
            double fro = 0.0;
            for (double v : c.data()) fro += v * v;
            fro = std::sqrt(fro);
            report.add("commute_k" + std::to_string(i + 2) + "_k" + std::to_string(j + 2), fro < 1e-10,
                       "commutator norm " + fmt(fro));
        }
    return report;
}

// ----------------------------------------------------------------------------

WaveletCoefficients pair_element(Item a, Item b) {
    if (a == b) throw DomainError("pair_element: identical items");
    WaveletCoefficients x;
    x.add(Subset{a, b}, Word{a, b}, 1.0);
    x.add(Subset{a, b}, Word{b, a}, -1.0);
    return x;
}

WaveletCoefficients gradient_element(Item a, const Subset& universe) {
    if (!universe.contains(a)) throw DomainError("gradient_element: item outside the universe");
    WaveletCoefficients x;
    for (Item b : universe)
        if (b != a) x += pair_element(a, b);
    return x;
}

WaveletCoefficients cycle_element(Item a, Item b, const Subset& universe) {
    if (!universe.contains(a) || !universe.contains(b)) throw DomainError("cycle_element: item outside the universe");
    WaveletCoefficients x;
    for (Item c : universe) {
        if (c == a || c == b) continue;
        x += pair_element(a, b);
        x += pair_element(b, c);
        x += pair_element(c, a);
    }
    return x;
}

double h2_inner(const WaveletCoefficients& x, const WaveletCoefficients& y) {
    double s = 0.0;
    for (const auto& [b, blk] : x.blocks()) {
        if (b.size() != 2) throw DomainError("h2_inner: scale-2 blocks only");
        const Block* other = y.find(b);
        if (!other) continue;
        s += ((blk[0] - blk[1]) / 2.0) * (((*other)[0] - (*other)[1]) / 2.0);
    }
    for (const auto& [b, blk] : y.blocks())
        if (b.size() != 2) throw DomainError("h2_inner: scale-2 blocks only");
    return s;
}

HodgeParts hodge_decompose(const WaveletCoefficients& x2, const Subset& universe) {
    const std::size_t n = universe.size();
    if (n < 2) throw DomainError("hodge_decompose: need at least two items");
    for (const auto& [b, blk] : x2.blocks()) {
        if (b.size() != 2) throw DomainError("hodge_decompose: scale-2 blocks only");
        if (!universe.contains(b)) throw DomainError("hodge_decompose: block outside the universe");
    }
    const auto y = pair_coordinates(x2, universe);
    std::vector<double> score(n, 0.0);
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++p) {
            score[i] += y[p];
            score[j] -= y[p];
        }
    for (double& s : score) s /= static_cast<double>(n);

    HodgeParts parts;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double g = score[i] - score[j];
            Block& blk = parts.gradient.block(Subset{universe[i], universe[j]});
            blk[0] = g;
            blk[1] = -g;
        }
    parts.curl = x2;
    parts.curl += -1.0 * parts.gradient;
    return parts;
}

AuditReport h2_audit(std::size_t n) {
    require_size(n, 3, 8, "h2 audit");
    AuditReport report{"h2", n, {}};
    const Subset u = range_subset(n);
    const double nd = static_cast<double>(n);

    std::vector<WaveletCoefficients> e;
    for (Item a : u) e.push_back(gradient_element(a, u));

    bool table_ok = true;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const double expected = a == b ? nd - 1.0 : -1.0;
            if (h2_inner(e[a], e[b]) != expected) table_ok = false;
        }
    report.add("inner_e_e", table_ok, "<e_a,e_a> = n-1, <e_a,e_b> = -1");

    bool ex_ok = true, antisym_ok = true, identity_ok = true, orth_ok = true;
    for (Item a : u)
        for (Item b : u) {
            if (a == b) continue;
            const auto x = pair_element(a, b);
            if (max_abs_diff(pair_element(b, a), -1.0 * x) != 0.0) antisym_ok = false;
            for (Item c : u) {
                const double expected = c == a ? 1.0 : (c == b ? -1.0 : 0.0);
                if (h2_inner(e[c - 1], x) != expected) ex_ok = false;
            }
            const auto f = cycle_element(a, b, u);
            WaveletCoefficients rhs = nd * x;
            rhs += e[b - 1];
            rhs += -1.0 * e[a - 1];
            if (max_abs_diff(f, rhs) != 0.0) identity_ok = false;
            for (const auto& ec : e)
                if (h2_inner(ec, f) != 0.0) orth_ok = false;
        }
    report.add("inner_e_x", ex_ok, "<e_a,x_(b>c)> = 1 if a=b, -1 if a=c, 0 otherwise");
    report.add("antisymmetry", antisym_ok, "x_(b>a) = -x_(a>b)");
    report.add("cycle_identity", identity_ok, "f_(a,b) = n x_(a>b) + e_b - e_a");
    report.add("orthogonality", orth_ok, "<e_a, f_(b,c)> = 0");

    std::vector<std::vector<double>> ecoords, fcoords;
    for (const auto& x : e) ecoords.push_back(pair_coordinates(x, u));
    for (Item a : u)
        for (Item b : u)
            if (a != b) fcoords.push_back(pair_coordinates(cycle_element(a, b, u), u));
    const std::size_t de = rank(rows_matrix(ecoords));
    const std::size_t df = rank(rows_matrix(fcoords));
    const std::size_t pairs = binomial(n, 2);
    report.add("dim_gradient", de == n - 1, "dim " + std::to_string(de) + ", expected " + std::to_string(n - 1));
    report.add("dim_curl", df == pairs - n + 1,
               "dim " + std::to_string(df) + ", expected " + std::to_string(pairs - n + 1));

    // Decomposition of a fixed pseudo-random element.
    WaveletCoefficients x;
    std::uint64_t counter = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            x += (2.0 * uniform01(0x5eed, counter++) - 1.0) * pair_element(u[i], u[j]);
    const auto parts = hodge_decompose(x, u);
    const double cross = std::abs(h2_inner(parts.gradient, parts.curl));
    const double recon = max_abs_diff(parts.gradient + parts.curl, x);
    report.add("hodge_orthogonal", cross < 1e-10, "<grad,curl> = " + fmt(cross));
    report.add("hodge_sum", recon <= 1e-10, "reconstruction error " + fmt(recon));
    double residual = 0.0;
    for (const auto& ec : e) residual = std::max(residual, std::abs(h2_inner(ec, parts.curl)));
    report.add("curl_orthogonal_to_gradients", residual < 1e-10, "max <e_a,curl> = " + fmt(residual));
    return report;
}

// ----------------------------------------------------------------------------

std::vector<Partition> partitions(std::size_t n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t cap) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t part = std::min(left, cap); part >= 1; --part) {
            cur.push_back(part);
            rec(left - part, part);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::uint64_t hook_length_count(const Partition& shape) {
    std::size_t n = 0;
    for (auto p : shape) n += p;
    std::uint64_t num = factorial(n), den = 1;
    for (std::size_t r = 0; r < shape.size(); ++r)
        for (std::size_t c = 0; c < shape[r]; ++c) {
            std::size_t below = 0;
            for (std::size_t rr = r + 1; rr < shape.size() && shape[rr] > c; ++rr) ++below;
            den *= shape[r] - c - 1 + below + 1;
        }
    return num / den;
}

std::vector<Tableau> standard_tableaux(const Partition& shape) {
    std::size_t n = 0;
    for (auto p : shape) n += p;
    std::vector<Tableau> out;
    Tableau cur(shape.size());
    std::function<void(std::size_t)> rec = [&](std::size_t next) {
        if (next > n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t r = 0; r < shape.size(); ++r) {
            if (cur[r].size() >= shape[r]) continue;
            if (r > 0 && cur[r].size() >= cur[r - 1].size()) continue;
            cur[r].push_back(next);
            rec(next + 1);
            cur[r].pop_back();
        }
    };
    rec(1);
    return out;
}

Partition tableau_shape(const Tableau& q) {
    Partition p;
    for (const auto& row : q)
        if (!row.empty()) p.push_back(row.size());
    return p;
}

std::size_t tableau_eig(const Tableau& q) {
    if (q.empty() || q[0].empty()) throw DomainError("tableau_eig: empty tableau");
    std::size_t l = 0;
    while (l < q[0].size() && q[0][l] == l + 1) ++l;
    std::size_t m = 0;
    while (m + 1 < q.size() && !q[m + 1].empty() && q[m + 1][0] == l + m + 1) ++m;
    return m % 2 == 0 ? l : l - 1;
}

std::map<std::size_t, std::map<Partition, std::size_t>> scale_multiplicities(std::size_t n) {
    std::map<std::size_t, std::map<Partition, std::size_t>> out;
    for (const auto& shape : partitions(n))
        for (const auto& q : standard_tableaux(shape)) ++out[n - tableau_eig(q)][shape];
    return out;
}

AuditReport syt_dimension_audit(std::size_t n) {
    require_size(n, 2, 8, "syt audit");
    AuditReport report{"syt", n, {}};
    const auto shapes = partitions(n);

    std::map<Partition, std::uint64_t> dims;
    bool hook_ok = true;
    for (const auto& s : shapes) {
        const auto count = standard_tableaux(s).size();
        dims[s] = count;
        if (count != hook_length_count(s)) hook_ok = false;
    }
    report.add("hook_length", hook_ok, "enumerated tableaux match the hook length formula");

    const auto kappa = scale_multiplicities(n);
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        std::uint64_t dim = 0;
        if (auto it = kappa.find(k); it != kappa.end())
            for (const auto& [shape, mult] : it->second) dim += mult * dims[shape];
        total += dim;
        const std::uint64_t expected = binomial(n, k) * derangements(k);
        report.add("dim_H" + std::to_string(k), dim == expected,
                   "sum " + std::to_string(dim) + ", expected " + std::to_string(expected));
    }
    report.add("total", total == factorial(n), "sum " + std::to_string(total));

    Partition hook{n - 1, 1};
    bool one_copy = true;
    for (std::size_t k = 2; k <= n; ++k) {
        auto it = kappa.find(k);
        const std::size_t mult = it == kappa.end() || !it->second.count(hook) ? 0 : it->second.at(hook);
        if (mult != 1) one_copy = false;
    }
    report.add("one_standard_copy_per_scale", one_copy, "multiplicity of (n-1,1) is 1 for every k >= 2");

    bool vanishing = true;
    for (const auto& [k, per_shape] : kappa)
        for (const auto& [shape, mult] : per_shape)
            if (shape[0] + k < n && mult != 0) vanishing = false;
    report.add("vanishing_below_first_row", vanishing, "kappa is 0 when the first row is shorter than n-k");

    bool per_shape_total = true;
    for (const auto& s : shapes) {
        std::uint64_t sum = 0;
        for (const auto& [k, per_shape] : kappa)
            if (auto it = per_shape.find(s); it != per_shape.end()) sum += it->second;
        if (sum != dims[s]) per_shape_total = false;
    }
    report.add("multiplicities_sum_to_dimension", per_shape_total, "sum over k of kappa equals #SYT(shape)");
    return report;
}

AuditReport embedding_audit(std::size_t n) {
    require_size(n, 2, 5, "embedding audit");
    AuditReport report{"embedding", n, {}};
    const Subset u = range_subset(n);

    std::vector<std::size_t> scales{0};
    for (std::size_t k = 2; k <= n; ++k) scales.push_back(k);
    std::map<std::size_t, std::vector<std::vector<double>>> images;
    for (auto k : scales) images[k] = embedded_scale(u, k);

    bool inj = true;
    for (std::size_t k = 2; k <= n; ++k)
        for (const auto& b : subsets_of_size(u, k)) {
            std::vector<std::vector<double>> rows;
            for (const auto& v : h_basis(b)) rows.push_back(extension_embedding(u, b, v));
            if (rank(rows_matrix(rows)) != derangements(k)) inj = false;
        }
    report.add("injective_on_blocks", inj, "rank of each embedded H_B equals d_|B|");

    for (auto k : scales) {
        const std::size_t r = rank(rows_matrix(images[k]));
        const std::uint64_t expected = binomial(n, k) * derangements(k);
        report.add("dim_W" + std::to_string(k), r == expected,
                   "dim " + std::to_string(r) + ", expected " + std::to_string(expected));
    }

    double worst = 0.0;
    for (std::size_t i = 0; i < scales.size(); ++i)
        for (std::size_t j = i + 1; j < scales.size(); ++j)
            for (const auto& v : images[scales[i]])
                for (const auto& w : images[scales[j]]) {
                    const double denom = std::sqrt(dot(v, v) * dot(w, w));
                    worst = std::max(worst, std::abs(dot(v, w)) / denom);
                }
    report.add("scales_orthogonal", worst <= 1e-9, "max normalized inner product " + fmt(worst));

    bool partition_ok = true;
    const auto perms = enumerate_rankings(u);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto ab = linear_extensions(Word{u[i], u[j]}, u);
            const auto ba = linear_extensions(Word{u[j], u[i]}, u);
            std::vector<Word> all(ab);
            all.insert(all.end(), ba.begin(), ba.end());
            std::sort(all.begin(), all.end());
            if (all != perms) partition_ok = false;
        }
    report.add("indicator_split", partition_ok, "1_Sn = 1_Sn(ab) + 1_Sn(ba) for every pair");
    return report;
}

}  // namespace mrarank
