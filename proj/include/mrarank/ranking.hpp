#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <istream>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace mrarank {

// Item label. Labels are arbitrary non-negative integers; nothing assumes
// they are contiguous or start at 1.
using Item = std::uint32_t;

class Subset;

/// An injective word a_1 a_2 ... a_k (best first). The empty word is the
/// ranking of the empty subset; length-1 words are allowed as values but are
/// not rankings.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Item> items);
    explicit Word(std::vector<Item> items);

    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    Item operator[](std::size_t i) const { return items_[i]; }
    std::span<const Item> items() const noexcept { return items_; }
    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }

    // Factor a_i ... a_j with 0-based inclusive bounds.
    Word factor(std::size_t i, std::size_t j) const;

    friend bool operator==(const Word&, const Word&) = default;
    // Lexicographic order on the item sequences.
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Item> items_;
};

/// A canonical set of items, stored strictly ascending.
class Subset {
public:
    Subset() = default;
    Subset(std::initializer_list<Item> items);
    // Sorts the input; duplicates are a DomainError.
    explicit Subset(std::vector<Item> items);

    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    Item operator[](std::size_t i) const { return items_[i]; }
    std::span<const Item> items() const noexcept { return items_; }
    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }

    bool contains(Item a) const;
    bool contains(const Subset& other) const;  // other ⊆ *this
    // Index of `a` in the ascending member list; throws if absent.
    std::size_t index_of(Item a) const;

    Subset with(Item a) const;
    Subset without(Item a) const;

    friend bool operator==(const Subset&, const Subset&) = default;
    // Canonical order: by size, then lexicographically.
    friend bool operator<(const Subset& a, const Subset& b) {
        if (a.items_.size() != b.items_.size()) return a.items_.size() < b.items_.size();
        return a.items_ < b.items_;
    }

private:
    std::vector<Item> items_;
};

Subset set_union(const Subset& a, const Subset& b);
Subset set_intersection(const Subset& a, const Subset& b);
Subset set_difference(const Subset& a, const Subset& b);

// All subsets of `a` of size >= 2, plus the empty set, in canonical order
// (the family written P̄(A)).
std::vector<Subset> ranking_subsets(const Subset& a);
// All subsets of `a` with exactly k members, lexicographic.
std::vector<Subset> subsets_of_size(const Subset& a, std::size_t k);

/// content(w): the set of items of w.
Subset content(const Word& w);

/// The subword of w with content `a`, order preserved. DomainError when a ⊄ content(w).
Word induce(const Word& w, const Subset& a);

/// True when `sub` is a (not necessarily contiguous) subword of `w`.
bool is_subword(const Word& sub, const Word& w);

/// True when `sub` occurs as a factor of `w`.
bool is_contiguous_subword(const Word& sub, const Word& w);

struct Factor {
    std::size_t i;  // 1-based start
    std::size_t j;  // 1-based end, i < j
    Word word;
    friend bool operator==(const Factor&, const Factor&) = default;
};

/// All factors of length >= 2, ordered by length then start.
std::vector<Factor> contiguous_subwords(const Word& w);

/// All |a|! rankings of `a` in lexicographic order; {0̄} for the empty set.
std::vector<Word> enumerate_rankings(const Subset& a);

/// Lexicographic rank of a ranking within the rankings of its content.
std::size_t ranking_index(const Word& w, const Subset& a);
/// Inverse of ranking_index.
Word ranking_at(const Subset& a, std::size_t index);

/// All linear extensions of w to a ⊇ content(w), i.e. every ranking of `a`
/// that induces w. Emitted in lexicographic order.
std::vector<Word> linear_extensions(const Word& w, const Subset& a);

/// Relabel every item of w through `map` (which must be injective on content(w)).
Word relabel(const Word& w, const std::function<Item(Item)>& map);

// ----------------------------------------------------------------------------

/// Sparse real function on injective words; an absent key means zero.
class RankingFunction {
public:
    using Map = std::map<Word, double>;

    RankingFunction() = default;
    RankingFunction(std::initializer_list<std::pair<const Word, double>> entries);

    static RankingFunction dirac(const Word& w, double value = 1.0);
    // Uniform value 1/|a|! on the rankings of a.
    static RankingFunction uniform(const Subset& a);

    double operator()(const Word& w) const;
    void add(const Word& w, double value);
    void set(const Word& w, double value);

    const Map& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }

    // Drops stored exact zeros.
    void compact();

    std::set<Word> support() const;
    // Contents of the words in the support.
    std::set<Subset> global_support() const;
    // The part supported on rankings of `a` (the component F_A).
    RankingFunction restricted_to(const Subset& a) const;

    double total_mass() const;

    RankingFunction& operator+=(const RankingFunction& o);
    RankingFunction& operator-=(const RankingFunction& o);
    RankingFunction& operator*=(double s);
    friend RankingFunction operator+(RankingFunction a, const RankingFunction& b) { return a += b; }
    friend RankingFunction operator-(RankingFunction a, const RankingFunction& b) { return a -= b; }
    friend RankingFunction operator*(double s, RankingFunction a) { return a *= s; }

private:
    Map entries_;
};

// Max absolute difference over the union of both supports.
double max_abs_diff(const RankingFunction& a, const RankingFunction& b);
double max_abs(const RankingFunction& f);

// ----------------------------------------------------------------------------

struct Observation {
    Subset subset;
    Word ranking;
    friend bool operator==(const Observation&, const Observation&) = default;
};

/// Sequence of observations, each a subset together with a ranking of it.
class Dataset {
public:
    Dataset() = default;
    explicit Dataset(std::vector<Observation> observations);

    // DomainError when content(ranking) has fewer than two items.
    void add(const Word& ranking);

    const std::vector<Observation>& observations() const noexcept { return observations_; }
    std::size_t size() const noexcept { return observations_.size(); }
    bool empty() const noexcept { return observations_.empty(); }

    // Union of all observed items.
    Subset universe() const;
    // Observed subsets with their counts N_A.
    std::map<Subset, std::size_t> subset_counts() const;
    // F_N = sum of the Diracs of the observed rankings.
    RankingFunction histogram() const;

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    std::vector<Observation> observations_;
};

/// Parses the ranking text format: one ranking per line, items separated by
/// '>' and best first, '#' starting a comment line, blank lines ignored.
Dataset parse_dataset(std::istream& in);
Dataset parse_dataset_string(const std::string& text);

/// Parses one ranking such as "3>1>4". `line` is reported in errors.
Word parse_word(const std::string& token, std::size_t line);
/// Parses "1,2,3" (or "-" for the empty set).
Subset parse_subset(const std::string& token, std::size_t line);

std::string format_word(const Word& w);      // "3>1>4", "-" for the empty word
std::string format_subset(const Subset& s);  // "1,3,4", "-" for the empty set

/// Canonical serialization: one line per observation, LF terminated.
std::string serialize_dataset(const Dataset& d);

/// min(N, sum over the design of |A|!).
std::uint64_t storage_bound(const std::set<Subset>& design, std::uint64_t n_observations);

}  // namespace mrarank

template <>
struct std::hash<mrarank::Word> {
    std::size_t operator()(const mrarank::Word& w) const noexcept;
};

template <>
struct std::hash<mrarank::Subset> {
    std::size_t operator()(const mrarank::Subset& s) const noexcept;
};
