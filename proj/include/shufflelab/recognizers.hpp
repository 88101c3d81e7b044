#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shufflelab/objects.hpp"
#include "shufflelab/words.hpp"

namespace shufflelab::recognizers {

// Shuffle-square decision with witness: a rectangular tableau (I, J) over
// [2n] with w_I = w_J symbol by symbol, or nullopt.
//
// Left-to-right scan; the state is the current position plus the queue of
// first-copy symbols not yet matched. Assigning a position to I pushes its
// symbol; assigning to J must match and pops the queue front; accept iff
// the queue empties exactly at the end. Dead states are memoized on
// (position, queue contents). The search tries the J branch first, and the
// first accepting path is the witness.
std::optional<objects::Tableau> shuffle_square_witness(const words::Word& w,
                                                       std::uint64_t cap = 0);
bool is_shuffle_square(const words::Word& w, std::uint64_t cap = 0);

// Reverse-shuffle-square decision with witness: split w = w'w'' in half and
// search for a 123-avoiding pi with w''_i = w'_{pi(i)}, backtracking over
// positions of w'' with candidates grouped by symbol and pruning any prefix
// that already contains an ascending triple.
std::optional<objects::Permutation> reverse_shuffle_square_witness(const words::Word& w);
bool is_reverse_shuffle_square(const words::Word& w);

// Two disjoint identical subsequences, as parallel 1-based index lists.
struct TwinsWitness {
    std::vector<int> first, second;
};

// Minimum number of deletions taking w to a shuffle square: |w| - 2L where
// L is the maximum twins length. Same queue search as above, extended to
// maximize matched columns instead of requiring perfection.
struct DeltaResult {
    int value = 0;
    TwinsWitness twins;
};

DeltaResult delta(const words::Word& w, std::uint64_t cap = 0);

// Runs the reverse-shuffle-square recognizer on a binary word and checks
// the answer against the abelian-square test; the two must agree.
bool binary_rss_equals_abelian(const words::Word& w);

// Definition-driven partition searches (exponential, no memoization); the
// oracles the memoized recognizers are checked against.
bool naive_is_shuffle_square(const words::Word& w);
bool naive_is_reverse_shuffle_square(const words::Word& w);

}  // namespace shufflelab::recognizers
