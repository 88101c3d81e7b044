#pragma once

#include <cstdint>
#include <vector>

#include "shufflelab/objects.hpp"
#include "shufflelab/words.hpp"

namespace shufflelab::greedy {

// One greedy run: i_r is always the least unused index, j_r the first index
// past j_{r-1} carrying the same symbol. On failure (or an odd leftover) the
// remaining unused indices, the current i_r included, go to the end of I in
// sorted order, deduplicated. Iteration r is a pivot when i_r > j_{r-1},
// i.e. every index before the current j-frontier is already used.
struct GreedyTrace {
    objects::Tableau tableau;  // |I| >= |J|; columns match symbolwise
    std::vector<int> pivots;   // pivot iteration numbers, ascending
    int delta_greedy = 0;      // |I| - |J|
};

GreedyTrace greedy_tableau(const words::Word& w);

int delta_greedy(const words::Word& w);

// Bit-packed binary run for the exhaustive sweeps; position p holds bit
// (bits >> (p-1)) & 1.
int delta_greedy_packed(std::uint64_t bits, int length);

// Up-step on the indices in I, down-step on the indices in J. Requires a
// binary word of even length; the result never goes below the x-axis and
// ends at height delta_greedy(w).
objects::UDPath phi_s(const words::Word& w);

// Lattice points of p on the x-axis, counting the origin but not the
// terminal point. Requires p never below the axis.
int x_touch_count(const objects::UDPath& p);

// All binary words whose greedy run reproduces p's tableau: a free bit at
// each pivot, every other bit forced. Requires p never below the axis with
// even length; the result has exactly 2^x_touch_count(p) words and each is
// verified by rerunning the greedy scan.
std::vector<words::Word> fiber_s(const objects::UDPath& p);

// Reflect every maximal below-axis excursion above the axis. Accepts any
// path of even length.
objects::UDPath phi_p(const objects::UDPath& p);

// All paths mapping to q under phi_p: one reflection choice per excursion
// of q. Requires q never below the axis.
std::vector<objects::UDPath> phi_p_fiber(const objects::UDPath& q);

}  // namespace shufflelab::greedy
