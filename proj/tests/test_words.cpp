#include "doctest.h"

#include <map>
#include <stdexcept>
#include <vector>

#include "shufflelab/errors.hpp"
#include "shufflelab/recognizers.hpp"
#include "shufflelab/words.hpp"

using shufflelab::ExactInt;
namespace words = shufflelab::words;

namespace {

std::vector<words::Word> all_words(int length, int k) {
    std::vector<words::Word> out;
    std::uint64_t total = 1;
    for (int i = 0; i < length; ++i) total *= static_cast<std::uint64_t>(k);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::uint8_t> syms(static_cast<std::size_t>(length));
        std::uint64_t c = code;
        for (int i = 0; i < length; ++i) {
            syms[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(c % k);
            c /= static_cast<std::uint64_t>(k);
        }
        out.emplace_back(std::move(syms), k);
    }
    return out;
}

}  // namespace

TEST_CASE("parsing and printing") {
    words::Word w = words::Word::parse("0110");
    CHECK(w.alphabet == 2);
    CHECK(w.str() == "0110");
    CHECK(words::Word::parse("0,1,2", 12).str() == "0,1,2");
    CHECK_THROWS_AS(words::Word::parse("01a"), std::invalid_argument);
    CHECK_THROWS_AS(words::Word({3}, 2), std::invalid_argument);
}

TEST_CASE("subsequence") {
    words::Word w = words::Word::parse("0110");
    CHECK(words::subsequence(w, {1, 4}).str() == "00");
    CHECK(words::subsequence(words::Word::parse("1000110100"), {1, 2, 3, 4}).str() == "1000");
    CHECK(words::subsequence(w, {1, 2, 3, 4}) == w);
    CHECK(words::subsequence(w, {}).size() == 0);
    CHECK_THROWS_AS(words::subsequence(w, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(words::subsequence(w, {0, 1}), std::out_of_range);
    CHECK_THROWS_AS(words::subsequence(w, {5}), std::out_of_range);
}

TEST_CASE("reverse") {
    CHECK(words::reverse(words::Word::parse("012")).str() == "210");
    CHECK(words::reverse(words::Word::parse("0110")).str() == "0110");
    words::Word empty;
    CHECK(words::reverse(empty) == empty);
    for (const auto& w : all_words(5, 3)) CHECK(words::reverse(words::reverse(w)) == w);
}

TEST_CASE("abelian squares") {
    CHECK(words::is_abelian_square(words::Word::parse("0110")));
    CHECK_FALSE(words::is_abelian_square(words::Word::parse("0100")));
    CHECK_FALSE(words::is_abelian_square(words::Word::parse("0")));
    CHECK(words::is_abelian_square(words::Word{}));
}

TEST_CASE("pattern canonicalization") {
    words::Word w = words::Word::parse("2002", 3);
    auto p = words::pattern_of(w);
    CHECK(p.as_word().str() == "0110");
    CHECK(p.blocks == 2);
    // relabeling-invariant predicates agree on a word and its pattern
    for (int len = 0; len <= 6; len += 2)
        for (int k = 1; k <= 3; ++k)
            for (const auto& word : all_words(len, k)) {
                auto canon = words::pattern_of(word).as_word();
                CHECK(shufflelab::recognizers::is_shuffle_square(word) ==
                      shufflelab::recognizers::is_shuffle_square(canon));
                CHECK(shufflelab::recognizers::is_reverse_shuffle_square(word) ==
                      shufflelab::recognizers::is_reverse_shuffle_square(canon));
                CHECK(words::is_abelian_square(word) == words::is_abelian_square(canon));
            }
}

TEST_CASE("pattern enumeration") {
    auto two = words::gen_patterns(2, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].as_word().str() == "00");
    CHECK(two[1].as_word().str() == "01");
    CHECK(words::gen_patterns(4, 4).size() == 15);  // Bell(4)
    CHECK(words::gen_patterns(4, 2).size() == 8);   // binary strings fixing the first bit
    CHECK(words::pattern_count(4, 4) == ExactInt(15));
    CHECK(words::pattern_count(4, 2) == ExactInt(8));
    CHECK(words::pattern_count(0, 0) == ExactInt(1));
    CHECK_THROWS_AS(words::gen_patterns(16, 16, 10), shufflelab::resource_cap_error);
}

TEST_CASE("prefix splitting covers the pattern space") {
    for (int len : {0, 3, 5, 8})
        for (int blocks : {1, 2, len}) {
            std::vector<words::PatternWord> whole;
            words::for_each_pattern(len, blocks,
                                    [&](const words::PatternWord& p) { whole.push_back(p); });
            std::vector<words::PatternWord> split;
            for (const auto& prefix : words::pattern_prefixes(len, blocks, 3))
                words::for_each_pattern_from(prefix, len, blocks,
                                             [&](const words::PatternWord& p) {
                                                 split.push_back(p);
                                             });
            CHECK(whole == split);
        }
}

TEST_CASE("pattern weights expand to the full word count") {
    for (int len = 0; len <= 6; ++len)
        for (int k = 1; k <= 4; ++k) {
            std::map<words::PatternWord, long long> seen;
            for (const auto& w : all_words(len, k)) ++seen[words::pattern_of(w)];
            ExactInt total = 0;
            words::for_each_pattern(len, std::min(len, k), [&](const words::PatternWord& p) {
                ExactInt weight = words::falling_factorial(k, p.blocks);
                auto it = seen.find(p);
                long long direct = it == seen.end() ? 0 : it->second;
                CHECK(weight == ExactInt(direct));
                total += weight;
            });
            ExactInt k_pow = 1;
            for (int i = 0; i < len; ++i) k_pow *= k;
            CHECK(total == k_pow);
        }
}

TEST_CASE("packed two-bit form") {
    words::Word w = words::Word::parse("0123", 4);
    CHECK(words::unpack2(words::pack2(w), 4, 4) == w);
    CHECK_THROWS_AS(words::pack2(words::Word::parse("0,1,2,3,4", 5)), std::invalid_argument);
}
