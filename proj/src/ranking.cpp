#include "mrarank/ranking.hpp"

#include "mrarank/combinatorics.hpp"
#include "mrarank/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace mrarank {

namespace {

void check_injective(const std::vector<Item>& items) {
    std::vector<Item> sorted(items);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("word contains a repeated item");
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Item parse_item(const std::string& raw, std::size_t line) {
    const std::string tok = trim(raw);
    if (tok.empty()) throw ParseError(line, "empty item");
    std::uint64_t v = 0;
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || v > 0xffffffffULL)
        throw ParseError(line, "not a non-negative integer: '" + tok + "'");
    return static_cast<Item>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

Word::Word(std::initializer_list<Item> items) : items_(items) { check_injective(items_); }

Word::Word(std::vector<Item> items) : items_(std::move(items)) { check_injective(items_); }

Word Word::factor(std::size_t i, std::size_t j) const {
    if (i > j || j >= items_.size()) throw DomainError("factor bounds out of range");
    Word w;
    w.items_.assign(items_.begin() + static_cast<std::ptrdiff_t>(i),
                    items_.begin() + static_cast<std::ptrdiff_t>(j) + 1);
    return w;
}

Subset::Subset(std::initializer_list<Item> items) : Subset(std::vector<Item>(items)) {}

Subset::Subset(std::vector<Item> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    if (std::adjacent_find(items_.begin(), items_.end()) != items_.end())
        throw DomainError("subset contains a repeated item");
}

bool Subset::contains(Item a) const { return std::binary_search(items_.begin(), items_.end(), a); }

bool Subset::contains(const Subset& other) const {
    return std::includes(items_.begin(), items_.end(), other.items_.begin(), other.items_.end());
}

std::size_t Subset::index_of(Item a) const {
    auto it = std::lower_bound(items_.begin(), items_.end(), a);
    if (it == items_.end() || *it != a) throw DomainError("item not in subset");
    return static_cast<std::size_t>(it - items_.begin());
}

Subset Subset::with(Item a) const {
    Subset s(*this);
    auto it = std::lower_bound(s.items_.begin(), s.items_.end(), a);
    if (it != s.items_.end() && *it == a) return s;
    s.items_.insert(it, a);
    return s;
}

Subset Subset::without(Item a) const {
    Subset s(*this);
    auto it = std::lower_bound(s.items_.begin(), s.items_.end(), a);
    if (it != s.items_.end() && *it == a) s.items_.erase(it);
    return s;
}

Subset set_union(const Subset& a, const Subset& b) {
    std::vector<Item> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Subset(std::move(out));
}

Subset set_intersection(const Subset& a, const Subset& b) {
    std::vector<Item> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Subset(std::move(out));
}

Subset set_difference(const Subset& a, const Subset& b) {
    std::vector<Item> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Subset(std::move(out));
}

std::vector<Subset> subsets_of_size(const Subset& a, std::size_t k) {
    std::vector<Subset> out;
    for (const auto& idx : combinations(a.size(), k)) {
        std::vector<Item> items;
        items.reserve(k);
        for (auto i : idx) items.push_back(a[i]);
        out.emplace_back(std::move(items));
    }
    return out;
}

std::vector<Subset> ranking_subsets(const Subset& a) {
    std::vector<Subset> out{Subset{}};
    for (std::size_t k = 2; k <= a.size(); ++k) {
        auto layer = subsets_of_size(a, k);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

Subset content(const Word& w) { return Subset(std::vector<Item>(w.begin(), w.end())); }

Word induce(const Word& w, const Subset& a) {
    std::vector<Item> out;
    out.reserve(a.size());
    for (Item x : w)
        if (a.contains(x)) out.push_back(x);
    if (out.size() != a.size()) throw DomainError("induce: subset not contained in the word's content");
    return Word(std::move(out));
}

bool is_subword(const Word& sub, const Word& w) {
    std::size_t pos = 0;
    for (Item x : w) {
        if (pos < sub.size() && sub[pos] == x) ++pos;
    }
    return pos == sub.size();
}

bool is_contiguous_subword(const Word& sub, const Word& w) {
    if (sub.empty()) return true;
    auto it = std::search(w.begin(), w.end(), sub.begin(), sub.end());
    return it != w.end();
}

std::vector<Factor> contiguous_subwords(const Word& w) {
    std::vector<Factor> out;
    const std::size_t k = w.size();
    for (std::size_t len = 2; len <= k; ++len)
        for (std::size_t i = 0; i + len <= k; ++i)
            out.push_back(Factor{i + 1, i + len, w.factor(i, i + len - 1)});
    return out;
}

std::vector<Word> enumerate_rankings(const Subset& a) {
    if (a.size() == 1) throw DomainError("a single item has no ranking");
    if (a.empty()) return {Word{}};
    std::vector<Item> cur(a.begin(), a.end());
    std::vector<Word> out;
    out.reserve(factorial(a.size()));
    do {
        out.emplace_back(cur);
    } while (std::next_permutation(cur.begin(), cur.end()));
    return out;
}

std::size_t ranking_index(const Word& w, const Subset& a) {
    if (w.size() != a.size()) throw DomainError("ranking_index: word is not a ranking of the subset");
    std::vector<std::uint8_t> perm(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) perm[i] = static_cast<std::uint8_t>(a.index_of(w[i]));
    return permutation_rank(perm);
}

Word ranking_at(const Subset& a, std::size_t index) {
    auto perm = permutation_unrank(index, a.size());
    std::vector<Item> items(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) items[i] = a[perm[i]];
    return Word(std::move(items));
}

std::vector<Word> linear_extensions(const Word& w, const Subset& a) {
    const Subset c = content(w);
    if (!a.contains(c)) throw DomainError("linear_extensions: word content not contained in subset");
    std::vector<std::vector<Item>> frontier{std::vector<Item>(w.begin(), w.end())};
    for (Item extra : set_difference(a, c)) {
        std::vector<std::vector<Item>> next;
        next.reserve(frontier.size() * (frontier.front().size() + 1));
        for (const auto& base : frontier) {
            for (std::size_t pos = 0; pos <= base.size(); ++pos) {
                auto v = base;
                v.insert(v.begin() + static_cast<std::ptrdiff_t>(pos), extra);
                next.push_back(std::move(v));
            }
        }
        frontier = std::move(next);
    }
    std::sort(frontier.begin(), frontier.end());
    std::vector<Word> out;
    out.reserve(frontier.size());
    for (auto& v : frontier) out.emplace_back(std::move(v));
    return out;
}

Word relabel(const Word& w, const std::function<Item(Item)>& map) {
    std::vector<Item> out;
    out.reserve(w.size());
    for (Item x : w) out.push_back(map(x));
    return Word(std::move(out));
}

// ----------------------------------------------------------------------------

RankingFunction::RankingFunction(std::initializer_list<std::pair<const Word, double>> entries) {
    for (const auto& [w, v] : entries) add(w, v);
}

RankingFunction RankingFunction::dirac(const Word& w, double value) {
    RankingFunction f;
    f.set(w, value);
    return f;
}

RankingFunction RankingFunction::uniform(const Subset& a) {
    RankingFunction f;
    const auto words = enumerate_rankings(a);
    const double v = 1.0 / static_cast<double>(words.size());
    for (const auto& w : words) f.entries_.emplace_hint(f.entries_.end(), w, v);
    return f;
}

double RankingFunction::operator()(const Word& w) const {
    auto it = entries_.find(w);
    return it == entries_.end() ? 0.0 : it->second;
}

void RankingFunction::add(const Word& w, double value) { entries_[w] += value; }

void RankingFunction::set(const Word& w, double value) { entries_[w] = value; }

void RankingFunction::compact() {
    std::erase_if(entries_, [](const auto& kv) { return kv.second == 0.0; });
}

std::set<Word> RankingFunction::support() const {
    std::set<Word> out;
    for (const auto& [w, v] : entries_)
        if (v != 0.0) out.insert(w);
    return out;
}

std::set<Subset> RankingFunction::global_support() const {
    std::set<Subset> out;
    for (const auto& [w, v] : entries_)
        if (v != 0.0) out.insert(content(w));
    return out;
}

RankingFunction RankingFunction::restricted_to(const Subset& a) const {
    RankingFunction f;
    for (const auto& [w, v] : entries_)
        if (w.size() == a.size() && content(w) == a) f.entries_.emplace_hint(f.entries_.end(), w, v);
    return f;
}

double RankingFunction::total_mass() const {
    double s = 0.0;
    for (const auto& kv : entries_) s += kv.second;
    return s;
}

RankingFunction& RankingFunction::operator+=(const RankingFunction& o) {
    for (const auto& [w, v] : o.entries_) entries_[w] += v;
    return *this;
}

RankingFunction& RankingFunction::operator-=(const RankingFunction& o) {
    for (const auto& [w, v] : o.entries_) entries_[w] -= v;
    return *this;
}

RankingFunction& RankingFunction::operator*=(double s) {
    for (auto& kv : entries_) kv.second *= s;
    return *this;
}

double max_abs_diff(const RankingFunction& a, const RankingFunction& b) {
    double m = 0.0;
    for (const auto& [w, v] : a.entries()) m = std::max(m, std::abs(v - b(w)));
    for (const auto& [w, v] : b.entries()) m = std::max(m, std::abs(v - a(w)));
    return m;
}

double max_abs(const RankingFunction& f) {
    double m = 0.0;
    for (const auto& kv : f.entries()) m = std::max(m, std::abs(kv.second));
    return m;
}

// ----------------------------------------------------------------------------

Dataset::Dataset(std::vector<Observation> observations) : observations_(std::move(observations)) {
    for (const auto& o : observations_) {
        if (o.subset.size() < 2) throw DomainError("observation on fewer than two items");
        if (content(o.ranking) != o.subset) throw DomainError("observation subset does not match ranking content");
    }
}

void Dataset::add(const Word& ranking) {
    if (ranking.size() < 2) throw DomainError("observation on fewer than two items");
    observations_.push_back(Observation{content(ranking), ranking});
}

Subset Dataset::universe() const {
    std::set<Item> items;
    for (const auto& o : observations_) items.insert(o.subset.begin(), o.subset.end());
    return Subset(std::vector<Item>(items.begin(), items.end()));
}

std::map<Subset, std::size_t> Dataset::subset_counts() const {
    std::map<Subset, std::size_t> out;
    for (const auto& o : observations_) ++out[o.subset];
    return out;
}

RankingFunction Dataset::histogram() const {
    RankingFunction f;
    for (const auto& o : observations_) f.add(o.ranking, 1.0);
    return f;
}

Word parse_word(const std::string& token, std::size_t line) {
    const std::string t = trim(token);
    if (t == "-") return Word{};
    std::vector<Item> items;
    for (const auto& part : split(t, '>')) items.push_back(parse_item(part, line));
    try {
        return Word(std::move(items));
    } catch (const DomainError&) {
        throw ParseError(line, "duplicate item in ranking '" + t + "'");
    }
}

Subset parse_subset(const std::string& token, std::size_t line) {
    const std::string t = trim(token);
    if (t == "-" || t.empty()) return Subset{};
    std::vector<Item> items;
    for (const auto& part : split(t, ',')) items.push_back(parse_item(part, line));
    try {
        return Subset(std::move(items));
    } catch (const DomainError&) {
        throw ParseError(line, "duplicate item in subset '" + t + "'");
    }
}

Dataset parse_dataset(std::istream& in) {
    Dataset d;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string t = trim(raw);
        if (t.empty() || t.front() == '#') continue;
        Word w = parse_word(t, line);
        if (w.size() < 2) throw ParseError(line, "a ranking needs at least two items");
        d.add(w);
    }
    return d;
}

Dataset parse_dataset_string(const std::string& text) {
    std::istringstream in(text);
    return parse_dataset(in);
}

std::string format_word(const Word& w) {
    if (w.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back('>');
        out += std::to_string(w[i]);
    }
    return out;
}

std::string format_subset(const Subset& s) {
    if (s.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(s[i]);
    }
    return out;
}

std::string serialize_dataset(const Dataset& d) {
    std::string out;
    for (const auto& o : d.observations()) {
        out += format_word(o.ranking);
        out.push_back('\n');
    }
    return out;
}

std::uint64_t storage_bound(const std::set<Subset>& design, std::uint64_t n_observations) {
    std::uint64_t total = 0;
    for (const auto& a : design) {
        if (a.size() < 2) throw DomainError("design subsets need at least two items");
        total += factorial(a.size());
    }
    return std::min(total, n_observations);
}

}  // namespace mrarank

std::size_t std::hash<mrarank::Word>::operator()(const mrarank::Word& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : w) h = (h ^ x) * 0x100000001b3ULL;
    return h ^ w.size();
}

std::size_t std::hash<mrarank::Subset>::operator()(const mrarank::Subset& s) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ULL;
    for (auto x : s) h = (h ^ x) * 0x100000001b3ULL;
    return h ^ (s.size() << 1);
}
