#include "doctest.h"

#include "mrarank/combinatorics.hpp"
#include "mrarank/errors.hpp"
#include "mrarank/ranking.hpp"

#include <random>

using namespace mrarank;

TEST_CASE("combinatorics tables") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK_THROWS_AS(factorial(21), ResourceError);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 4) == 0);
    const std::uint64_t d[] = {1, 0, 1, 2, 9, 44, 265};
    for (std::size_t k = 0; k < 7; ++k) CHECK(derangements(k) == d[k]);
    for (std::size_t k = 1; k <= 5; ++k)
        for (std::size_t r = 0; r < factorial(k); ++r) CHECK(permutation_rank(permutation_unrank(r, k)) == r);
    CHECK(combinations(4, 2).size() == 6);
}

TEST_CASE("content") {
    CHECK(content(Word{2, 3, 1}) == Subset{1, 2, 3});
    CHECK(content(Word{}) == Subset{});
    CHECK(content(Word{4, 2}) == Subset{2, 4});
}

TEST_CASE("words and subsets reject repeated items") {
    CHECK_THROWS_AS(Word({1, 1}), DomainError);
    CHECK_THROWS_AS(Subset({3, 3}), DomainError);
}

TEST_CASE("induce") {
    CHECK(induce(Word{2, 3, 1}, Subset{1, 3}) == Word{3, 1});
    CHECK(induce(Word{2, 3, 1}, Subset{1, 2, 3}) == Word{2, 3, 1});
    CHECK(induce(Word{4, 5, 1, 2, 3}, Subset{1, 2, 4}) == Word{4, 1, 2});
    CHECK_THROWS_AS(induce(Word{1, 2}, Subset{1, 3}), DomainError);
}

TEST_CASE("subwords") {
    CHECK(is_subword(Word{1, 3}, Word{1, 2, 3}));
    CHECK_FALSE(is_subword(Word{3, 1}, Word{1, 2, 3}));
    CHECK(is_subword(Word{4, 2}, Word{4, 2, 1, 3}));
    CHECK(is_contiguous_subword(Word{2, 1}, Word{4, 2, 1, 3}));
    CHECK_FALSE(is_contiguous_subword(Word{4, 1}, Word{4, 2, 1, 3}));
}

TEST_CASE("contiguous subwords") {
    const auto f = contiguous_subwords(Word{2, 1, 3});
    REQUIRE(f.size() == 3);
    CHECK(f[0] == Factor{1, 2, Word{2, 1}});
    CHECK(f[1] == Factor{2, 3, Word{1, 3}});
    CHECK(f[2] == Factor{1, 3, Word{2, 1, 3}});
    CHECK(contiguous_subwords(Word{1, 2}).size() == 1);
    const auto g = contiguous_subwords(Word{4, 2, 1, 3});
    CHECK(g.size() == 6);
    CHECK(std::find(g.begin(), g.end(), Factor{2, 4, Word{2, 1, 3}}) != g.end());
}

TEST_CASE("enumerate rankings") {
    CHECK(enumerate_rankings(Subset{1, 2}) == std::vector<Word>{Word{1, 2}, Word{2, 1}});
    CHECK(enumerate_rankings(Subset{}) == std::vector<Word>{Word{}});
    const auto w3 = enumerate_rankings(Subset{1, 2, 3});
    REQUIRE(w3.size() == 6);
    CHECK(w3.front() == Word{1, 2, 3});
    CHECK(w3.back() == Word{3, 2, 1});
    CHECK(std::is_sorted(w3.begin(), w3.end()));
    CHECK_THROWS_AS(enumerate_rankings(Subset{7}), DomainError);
    const Subset a{3, 10, 42, 7};
    const auto words = enumerate_rankings(a);
    for (std::size_t i = 0; i < words.size(); ++i) {
        CHECK(ranking_index(words[i], a) == i);
        CHECK(ranking_at(a, i) == words[i]);
    }
}

TEST_CASE("linear extensions") {
    const auto ext = linear_extensions(Word{4, 2}, Subset{1, 2, 3, 4});
    CHECK(ext.size() == 12);
    for (const auto& w : ext) CHECK(induce(w, Subset{2, 4}) == Word{4, 2});
    CHECK(linear_extensions(Word{1, 2}, Subset{1, 2}) == std::vector<Word>{Word{1, 2}});
}

TEST_CASE("induce is projective and commutes with monotone relabeling") {
    std::mt19937 gen(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Item> items{1, 2, 3, 4, 5, 6};
        std::shuffle(items.begin(), items.end(), gen);
        const Word w(items);
        CHECK(induce(w, content(w)) == w);
        const Subset a{1, 2, 4, 6}, b{2, 6};
        CHECK(induce(induce(w, a), b) == induce(w, b));
        auto shift = [](Item x) { return 3 * x + 5; };
        CHECK(induce(relabel(w, shift), Subset{11, 23}) == relabel(induce(w, b), shift));
    }
}

TEST_CASE("ranking function basics") {
    RankingFunction f{{Word{1, 2}, 0.5}, {Word{2, 1}, 0.5}};
    CHECK(f.total_mass() == doctest::Approx(1.0));
    f.add(Word{1, 2}, -0.5);
    CHECK(f.size() == 2);
    f.compact();
    CHECK(f.size() == 1);
    CHECK(f.support() == std::set<Word>{Word{2, 1}});
    const auto g = RankingFunction::uniform(Subset{1, 2, 3}) + RankingFunction::dirac(Word{4, 5});
    CHECK(g.global_support() == std::set<Subset>{Subset{4, 5}, Subset{1, 2, 3}});
    CHECK(g.restricted_to(Subset{4, 5}).size() == 1);
}

TEST_CASE("dataset parsing and serialization") {
    const Dataset d = parse_dataset_string("3>1\n2>4>5\n");
    REQUIRE(d.size() == 2);
    CHECK(d.observations()[0].subset == Subset{1, 3});
    CHECK(d.observations()[1].subset == Subset{2, 4, 5});
    CHECK(serialize_dataset(d) == "3>1\n2>4>5\n");
    CHECK(parse_dataset_string(serialize_dataset(d)) == d);

    const Dataset c = parse_dataset_string("# header\n\n 1 > 2 \n");
    CHECK(c.size() == 1);

    auto line_of = [](const std::string& text) {
        try {
            parse_dataset_string(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(line_of("3>3") == 1);
    CHECK(line_of("1>2\n5\n") == 2);
    CHECK(line_of("1>2\n\n1>x\n") == 3);
    CHECK(line_of("1>-2") == 1);
}

TEST_CASE("storage bound") {
    const std::set<Subset> fig1{{1, 2, 5}, {2, 3, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
    CHECK(storage_bound(fig1, 1000000) == 28);
    const std::set<Subset> fig2{{1, 2, 3, 5}, {2, 3, 4, 5}, {1, 4, 5}};
    CHECK(storage_bound(fig2, 1000000) == 54);
    CHECK(storage_bound({Subset{1, 2}}, 1) == 1);
}
