#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "shufflelab/exact_int.hpp"

namespace shufflelab::words {

// A finite word over the alphabet [k] = {0, ..., k-1}.
struct Word {
    std::vector<std::uint8_t> symbols;
    int alphabet = 1;

    Word() = default;
    Word(std::vector<std::uint8_t> syms, int k);

    // Text form: one digit per symbol when the alphabet fits in digits,
    // comma-separated integers otherwise. alphabet_hint = 0 infers k as
    // max symbol + 1.
    static Word parse(const std::string& text, int alphabet_hint = 0);
    static Word from_bits(std::uint64_t bits, int length);  // binary, LSB first

    int size() const { return static_cast<int>(symbols.size()); }
    std::string str() const;

    bool operator==(const Word&) const = default;
    bool operator<(const Word& o) const {
        return symbols < o.symbols;
    }
};

// The indexed subsequence w_I; indices are 1-based and must be strictly
// increasing and in range.
Word subsequence(const Word& w, const std::vector<int>& indices);

Word reverse(const Word& w);

// True iff |w| is even and the two halves carry the same symbol multiset.
bool is_abelian_square(const Word& w);

// Canonical form of a word up to symbol renaming: a restricted growth
// string (symbols[0] = 0 and each new value is exactly one more than the
// maximum seen so far).
struct PatternWord {
    std::vector<std::uint8_t> symbols;
    int blocks = 0;

    Word as_word() const { return Word(symbols, blocks > 0 ? blocks : 1); }
    bool operator==(const PatternWord&) const = default;
    bool operator<(const PatternWord& o) const { return symbols < o.symbols; }
};

PatternWord pattern_of(const Word& w);

// Number of restricted growth strings of the given length with at most
// max_blocks distinct values (a partial Bell number).
ExactInt pattern_count(int length, int max_blocks);

// k (k-1) ... (k-b+1); the number of words over [k] realizing a fixed
// pattern with b blocks.
ExactInt falling_factorial(long long k, int b);

// Visit every restricted growth string of the given length with at most
// max_blocks blocks, each exactly once, in lexicographic order.
void for_each_pattern(int length, int max_blocks,
                      const std::function<void(const PatternWord&)>& fn);

// Materialized variant, refused above the cap (cap = 0 picks the default).
std::vector<PatternWord> gen_patterns(int length, int max_blocks, std::uint64_t cap = 0);

// Prefix splitting for parallel sweeps: all valid pattern prefixes of
// min(depth, length) symbols; for_each_pattern_from completes one prefix.
std::vector<PatternWord> pattern_prefixes(int length, int max_blocks, int depth);
void for_each_pattern_from(const PatternWord& prefix, int length, int max_blocks,
                           const std::function<void(const PatternWord&)>& fn);

// Packed 2-bit form for alphabets of size <= 4 and length <= 32; the census
// hot loops work on these rather than heap words.
std::uint64_t pack2(const Word& w);
Word unpack2(std::uint64_t bits, int length, int alphabet);

}  // namespace shufflelab::words
