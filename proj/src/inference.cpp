#include "mrarank/inference.hpp"

#include "mrarank/combinatorics.hpp"
#include "mrarank/errors.hpp"
#include "mrarank/marginals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace mrarank {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& tok, std::size_t line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::logic_error&) {
        throw ParseError(line, "not a number: '" + tok + "'");
    }
}

void check_design_subset(const Subset& a) {
    if (a.size() < 2) throw DomainError("design subsets need at least two items");
}

}  // namespace

ObservationDesign::ObservationDesign(std::set<Subset> subsets) : subsets_(std::move(subsets)) {
    for (const auto& a : subsets_) check_design_subset(a);
}

ObservationDesign::ObservationDesign(std::map<Subset, double> weights) : weights_(std::move(weights)) {
    double total = 0.0;
    for (const auto& [a, w] : weights_) {
        check_design_subset(a);
        if (!(w > 0.0)) throw DomainError("design weights must be strictly positive");
        subsets_.insert(a);
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) throw DomainError("design weights must sum to 1");
}

std::map<Subset, double> ObservationDesign::weights() const {
    if (!weights_.empty()) return weights_;
    std::map<Subset, double> out;
    for (const auto& a : subsets_) out.emplace(a, 1.0 / static_cast<double>(subsets_.size()));
    return out;
}

ObservationDesign parse_design(std::istream& in) {
    std::map<Subset, double> weights;
    std::set<Subset> plain;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string t = trim(raw);
        if (t.empty() || t.front() == '#') continue;
        std::istringstream fields(t);
        std::string subset_tok, weight_tok, extra;
        fields >> subset_tok >> weight_tok >> extra;
        if (!extra.empty()) throw ParseError(line, "expected '<subset> [weight]'");
        const Subset a = parse_subset(subset_tok, line);
        if (a.size() < 2) throw ParseError(line, "design subsets need at least two items");
        if (weights.count(a) || plain.count(a)) throw ParseError(line, "duplicate subset");
        if (weight_tok.empty()) {
            if (!weights.empty()) throw ParseError(line, "missing weight");
            plain.insert(a);
        } else {
            if (!plain.empty()) throw ParseError(line, "unexpected weight");
            weights.emplace(a, parse_number(weight_tok, line));
        }
    }
    if (weights.empty() && plain.empty()) throw ParseError(line, "empty design");
    if (!weights.empty()) return ObservationDesign(std::move(weights));
    return ObservationDesign(std::move(plain));
}

RankingFunction parse_model(std::istream& in, double tol) {
    RankingFunction p;
    std::string raw;
    std::size_t line = 0;
    double total = 0.0;
    std::size_t width = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string t = trim(raw);
        if (t.empty() || t.front() == '#') continue;
        std::istringstream fields(t);
        std::string word_tok, prob_tok, extra;
        fields >> word_tok >> prob_tok >> extra;
        if (prob_tok.empty() || !extra.empty()) throw ParseError(line, "expected '<ranking> <probability>'");
        const Word w = parse_word(word_tok, line);
        if (w.size() < 2) throw ParseError(line, "a model ranking needs at least two items");
        if (width == 0) width = w.size();
        if (w.size() != width) throw ParseError(line, "model rankings must all have the same length");
        const double v = parse_number(prob_tok, line);
        if (v < 0.0) throw ParseError(line, "negative probability");
        if (p(w) != 0.0) throw ParseError(line, "duplicate ranking");
        p.set(w, v);
        total += v;
    }
    if (p.empty()) throw ParseError(line, "empty model");
    if (std::abs(total - 1.0) > tol) throw DomainError("model probabilities sum to " + std::to_string(total));
    return p;
}

// ----------------------------------------------------------------------------

void EstimatorAccumulator::add(const Word& ranking) {
    if (ranking.size() < 2) throw DomainError("observation on fewer than two items");
    histogram_.add(ranking, 1.0);
    ++counts_[content(ranking)];
    ++n_;
}

void EstimatorAccumulator::add(const Dataset& d) {
    for (const auto& o : d.observations()) add(o.ranking);
}

void EstimatorAccumulator::merge(const EstimatorAccumulator& other) {
    histogram_ += other.histogram_;
    for (const auto& [a, c] : other.counts_) counts_[a] += c;
    n_ += other.n_;
}

std::map<Subset, std::size_t> EstimatorAccumulator::coverage() const {
    std::set<Subset> observed;
    for (const auto& kv : counts_) observed.insert(kv.first);
    std::map<Subset, std::size_t> out;
    for (const auto& b : downward_closure(observed)) {
        std::size_t z = 0;
        for (const auto& [a, c] : counts_)
            if (a.contains(b)) z += c;
        out.emplace(b, z);
    }
    return out;
}

WaveletCoefficients EstimatorAccumulator::finalize(const AlphaTable& table, OpCounter* counter,
                                                   unsigned workers) const {
    if (n_ == 0) throw DomainError("estimator needs at least one observation");
    WaveletCoefficients x = fwt(histogram_, table, counter, workers);
    const auto z = coverage();
    WaveletCoefficients out;
    for (const auto& [b, blk] : x.blocks()) {
        const double scale = 1.0 / static_cast<double>(z.at(b));
        Block& dst = out.block(b);
        for (std::size_t i = 0; i < blk.size(); ++i) dst[i] = blk[i] * scale;
    }
    return out;
}

WaveletCoefficients wavelet_empirical_estimator(const Dataset& d, const AlphaTable& table, OpCounter* counter,
                                                unsigned workers) {
    EstimatorAccumulator acc;
    acc.add(d);
    return acc.finalize(table, counter, workers);
}

double estimator_op_bound(std::size_t k_max, std::size_t stored) {
    const double kf = static_cast<double>(factorial(k_max));
    const double pow = std::ldexp(1.0, static_cast<int>(k_max) - 1);
    return (std::numbers::e * kf + static_cast<double>(k_max + 4) * pow) * static_cast<double>(stored);
}

std::set<Subset> downward_closure(const std::set<Subset>& family) {
    std::set<Subset> out{Subset{}};
    for (const auto& a : family)
        for (auto& b : ranking_subsets(a)) out.insert(std::move(b));
    return out;
}

std::uint64_t degrees_of_freedom(const std::set<Subset>& family) {
    std::uint64_t dof = 0;
    for (const auto& b : family) dof += derangements(b.size());
    return dof;
}

IdentifiableSupport identifiable_support(const ObservationDesign& design) {
    IdentifiableSupport s;
    s.blocks = downward_closure(design.subsets());
    s.dof = degrees_of_freedom(s.blocks);
    return s;
}

IdentifiableSupport unidentifiable_blocks(const ObservationDesign& design, const Subset& universe) {
    const auto known = downward_closure(design.subsets());
    IdentifiableSupport s;
    for (auto& b : ranking_subsets(universe))
        if (!known.count(b)) s.blocks.insert(std::move(b));
    s.dof = degrees_of_freedom(s.blocks);
    return s;
}

SolutionSpace solution_space(const RankingFunction& f0, const Subset& a, const std::set<Subset>& constraints,
                             const AlphaTable& table) {
    for (const auto& s : constraints) {
        if (s.size() < 2) throw DomainError("constraint subsets need at least two items");
        if (!a.contains(s)) throw DomainError("constraint subset " + format_subset(s) + " not contained in A");
    }
    const auto closure = downward_closure(constraints);
    const WaveletCoefficients x = fwt_single(f0, a, table);
    SolutionSpace out;
    out.particular = synthesize(restrict_blocks(x, std::vector<Subset>(closure.begin(), closure.end())), a);
    for (auto& b : ranking_subsets(a))
        if (!closure.count(b)) out.free_blocks.insert(std::move(b));
    out.dimension = factorial(a.size()) - degrees_of_freedom(closure);
    return out;
}

// ----------------------------------------------------------------------------

std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double uniform01(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(splitmix64(seed, counter) >> 11) * 0x1.0p-53;
}

namespace {

template <typename Key>
struct Sampler {
    std::vector<Key> keys;
    std::vector<double> cdf;

    const Key& draw(double u) const {
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u * cdf.back());
        std::size_t i = static_cast<std::size_t>(it - cdf.begin());
        if (i >= keys.size()) i = keys.size() - 1;
        return keys[i];
    }
};

}  // namespace

Dataset generate_dataset(const RankingFunction& p, const ObservationDesign& nu, std::size_t n, std::uint64_t seed) {
    if (p.empty()) throw DomainError("generate_dataset: empty model");
    Sampler<Word> rankings;
    const Subset universe = content(p.entries().begin()->first);
    if (universe.size() > kMaxFullRankingItems)
        throw ResourceError("generate_dataset is limited to " + std::to_string(kMaxFullRankingItems) + " items");
    double total = 0.0;
    for (const auto& [w, v] : p.entries()) {
        if (w.size() != universe.size() || content(w) != universe)
            throw DomainError("generate_dataset: model must be on full rankings of one universe");
        if (v < 0.0) throw DomainError("generate_dataset: negative probability");
        if (v == 0.0) continue;
        total += v;
        rankings.keys.push_back(w);
        rankings.cdf.push_back(total);
    }
    if (std::abs(total - 1.0) > 1e-12) throw DomainError("generate_dataset: model does not sum to 1");

    Sampler<Subset> subsets;
    double wsum = 0.0;
    for (const auto& [a, w] : nu.weights()) {
        if (!universe.contains(a)) throw DomainError("generate_dataset: design subset outside the universe");
        wsum += w;
        subsets.keys.push_back(a);
        subsets.cdf.push_back(wsum);
    }
    if (subsets.keys.empty()) throw DomainError("generate_dataset: empty design");

    std::vector<Observation> obs;
    obs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Word& sigma = rankings.draw(uniform01(seed, 2 * i));
        const Subset& a = subsets.draw(uniform01(seed, 2 * i + 1));
        obs.push_back(Observation{a, induce(sigma, a)});
    }
    return Dataset(std::move(obs));
}

RankingFunction estimate_marginal(const WaveletCoefficients& x, const Subset& a) {
    return synthesize(feature_marginal(x, a), a);
}

RankingFunction project_to_simplex(const RankingFunction& f, const Subset& a) {
    const auto words = enumerate_rankings(a);
    std::vector<double> v(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) v[i] = f(words[i]);
    std::vector<double> sorted(v);
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double cum = 0.0, theta = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        cum += sorted[i];
        const double t = (cum - 1.0) / static_cast<double>(i + 1);
        if (sorted[i] - t > 0.0) theta = t;
    }
    RankingFunction out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        const double x = std::max(v[i] - theta, 0.0);
        if (x != 0.0) out.set(words[i], x);
    }
    return out;
}

GroupFeatures per_group_features(const std::map<std::string, Dataset>& groups, const AlphaTable& table) {
    GroupFeatures out;
    for (const auto& [name, d] : groups) {
        if (d.empty()) {
            out.skipped.push_back(name);
            continue;
        }
        out.features.emplace(name, wavelet_empirical_estimator(d, table));
    }
    return out;
}

double coefficient_distance(const WaveletCoefficients& a, const WaveletCoefficients& b) {
    double s = 0.0;
    for (const auto& [sub, blk] : a.blocks()) {
        const Block* other = b.find(sub);
        for (std::size_t i = 0; i < blk.size(); ++i) {
            const double d = blk[i] - (other ? (*other)[i] : 0.0);
            s += d * d;
        }
    }
    for (const auto& [sub, blk] : b.blocks()) {
        if (a.contains(sub)) continue;
        for (double v : blk) s += v * v;
    }
    return std::sqrt(s);
}

}  // namespace mrarank
