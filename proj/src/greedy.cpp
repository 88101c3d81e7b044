#include "shufflelab/greedy.hpp"

#include <algorithm>
#include <stdexcept>

#include "shufflelab/errors.hpp"

namespace shufflelab::greedy {

using objects::Step;
using objects::Tableau;
using objects::UDPath;
using words::Word;

GreedyTrace greedy_tableau(const Word& w) {
    int len = w.size();
    std::vector<char> used(static_cast<std::size_t>(len) + 1, 0);
    std::vector<int> row_i, row_j, pivots;
    int i_cursor = 1;
    int j_prev = 0;
    for (int r = 1; r <= len / 2; ++r) {
        while (i_cursor <= len && used[static_cast<std::size_t>(i_cursor)]) ++i_cursor;
        int ir = i_cursor;
        if (ir > j_prev) pivots.push_back(r);
        int jr = 0;
        for (int j = j_prev + 1; j <= len; ++j) {
            if (j == ir || used[static_cast<std::size_t>(j)]) continue;
            if (w.symbols[static_cast<std::size_t>(j) - 1] ==
                w.symbols[static_cast<std::size_t>(ir) - 1]) {
                jr = j;
                break;
            }
        }
        if (jr == 0) break;  // no valid j_r: leftovers are appended below
        used[static_cast<std::size_t>(ir)] = used[static_cast<std::size_t>(jr)] = 1;
        row_i.push_back(ir);
        row_j.push_back(jr);
        j_prev = jr;
    }
    for (int p = 1; p <= len; ++p)
        if (!used[static_cast<std::size_t>(p)]) row_i.push_back(p);

    GreedyTrace trace;
    trace.tableau = Tableau(std::move(row_i), std::move(row_j));  // validates shape
    trace.pivots = std::move(pivots);
    trace.delta_greedy =
        static_cast<int>(trace.tableau.row_i.size() - trace.tableau.row_j.size());
    for (std::size_t r = 0; r < trace.tableau.row_j.size(); ++r)
        if (w.symbols[static_cast<std::size_t>(trace.tableau.row_i[r]) - 1] !=
            w.symbols[static_cast<std::size_t>(trace.tableau.row_j[r]) - 1])
            throw identity_error("greedy tableau has a mismatched column");
    if (((trace.delta_greedy ^ len) & 1) != 0 || trace.delta_greedy < 0)
        throw identity_error("greedy deficiency has the wrong parity");
    return trace;
}

int delta_greedy(const Word& w) { return greedy_tableau(w).delta_greedy; }

int delta_greedy_packed(std::uint64_t bits, int length) {
    if (length < 0 || length > 64)
        throw std::invalid_argument("delta_greedy_packed length must be in [0, 64]");
    std::uint64_t used = 0;
    int i_cursor = 1, j_prev = 0, matched = 0;
    for (int r = 1; r <= length / 2; ++r) {
        while (i_cursor <= length && ((used >> (i_cursor - 1)) & 1u)) ++i_cursor;
        int ir = i_cursor;
        std::uint64_t want = (bits >> (ir - 1)) & 1u;
        int jr = 0;
        for (int j = j_prev + 1; j <= length; ++j) {
            if (j == ir || ((used >> (j - 1)) & 1u)) continue;
            if (((bits >> (j - 1)) & 1u) == want) {
                jr = j;
                break;
            }
        }
        if (jr == 0) break;
        used |= (1ull << (ir - 1)) | (1ull << (jr - 1));
        ++matched;
        j_prev = jr;
    }
    return length - 2 * matched;
}

UDPath phi_s(const Word& w) {
    if (w.alphabet > 2) throw std::invalid_argument("phi_s requires a binary word");
    if (w.size() % 2 != 0) throw std::invalid_argument("phi_s requires an even-length word");
    GreedyTrace trace = greedy_tableau(w);
    std::vector<Step> steps(static_cast<std::size_t>(w.size()), Step::down);
    for (int idx : trace.tableau.row_i) steps[static_cast<std::size_t>(idx) - 1] = Step::up;
    UDPath p(std::move(steps));
    if (!p.never_below_axis() || p.end_height() != trace.delta_greedy)
        throw identity_error("phi_s path violates the tableau shape");
    return p;
}

int x_touch_count(const UDPath& p) {
    if (!p.never_below_axis()) throw std::invalid_argument("x_touch_count requires a nonnegative path");
    int h = 0, touches = 0;
    for (int t = 0; t < p.length(); ++t) {  // t = 0 counts, t = length never does
        if (h == 0) ++touches;
        h += p.steps[static_cast<std::size_t>(t)] == Step::up ? 1 : -1;
    }
    return touches;
}

std::vector<Word> fiber_s(const UDPath& p) {
    if (!p.never_below_axis()) throw std::invalid_argument("fiber_s requires a nonnegative path");
    if (p.length() % 2 != 0) throw std::invalid_argument("fiber_s requires an even-length path");
    int len = p.length();
    std::vector<int> ups, downs;
    for (int idx = 1; idx <= len; ++idx)
        (p.steps[static_cast<std::size_t>(idx) - 1] == Step::up ? ups : downs).push_back(idx);
    int n_j = static_cast<int>(downs.size());
    int n_i = static_cast<int>(ups.size());

    auto j_at = [&](int r) { return r >= 1 ? downs[static_cast<std::size_t>(r) - 1] : 0; };
    // the gap rule: an index strictly between j_{k-1} and j_k was rejected by
    // iteration k, so its bit is the opposite of the bit at j_k
    auto forced_bit = [&](const std::vector<std::uint8_t>& s, int idx) -> std::uint8_t {
        auto it = std::upper_bound(downs.begin(), downs.end(), idx);
        return 1 ^ s[static_cast<std::size_t>(*it) - 1];
    };

    std::vector<char> is_pivot(static_cast<std::size_t>(n_j) + 2, 0);
    int pivot_count = 0;
    for (int r = 1; r <= n_j; ++r)
        if (ups[static_cast<std::size_t>(r) - 1] > j_at(r - 1)) {
            is_pivot[static_cast<std::size_t>(r)] = 1;
            ++pivot_count;
        }
    bool tail_pivot = n_i > n_j && ups[static_cast<std::size_t>(n_j)] > j_at(n_j);
    if (tail_pivot) {
        is_pivot[static_cast<std::size_t>(n_j) + 1] = 1;
        ++pivot_count;
    }
    if (pivot_count != x_touch_count(p))
        throw identity_error("fiber_s: pivot count differs from the axis-touch count");

    std::vector<Word> out;
    out.reserve(1ull << pivot_count);
    for (std::uint64_t mask = 0; mask < (1ull << pivot_count); ++mask) {
        std::vector<std::uint8_t> s(static_cast<std::size_t>(len), 0);
        int choice = 0;
        for (int r = 1; r <= n_j; ++r) {
            int ir = ups[static_cast<std::size_t>(r) - 1];
            std::uint8_t bit = is_pivot[static_cast<std::size_t>(r)]
                                   ? static_cast<std::uint8_t>((mask >> choice++) & 1u)
                                   : forced_bit(s, ir);
            s[static_cast<std::size_t>(ir) - 1] = bit;
            s[static_cast<std::size_t>(j_at(r)) - 1] = bit;
        }
        if (n_i > n_j) {
            int t0 = ups[static_cast<std::size_t>(n_j)];
            std::uint8_t b0 = tail_pivot ? static_cast<std::uint8_t>((mask >> choice++) & 1u)
                                         : forced_bit(s, t0);
            s[static_cast<std::size_t>(t0) - 1] = b0;
            for (int r = n_j + 2; r <= n_i; ++r) {
                int idx = ups[static_cast<std::size_t>(r) - 1];
                // past the last j the failed iteration forbids the bit at t0
                s[static_cast<std::size_t>(idx) - 1] =
                    (n_j > 0 && idx < j_at(n_j)) ? forced_bit(s, idx) : static_cast<std::uint8_t>(1 ^ b0);
            }
        }
        Word w(std::move(s), 2);
        GreedyTrace check = greedy_tableau(w);
        if (check.tableau.row_i != ups || check.tableau.row_j != downs)
            throw identity_error("fiber_s: reconstructed word does not retrace the path");
        out.push_back(std::move(w));
    }
    return out;
}

UDPath phi_p(const UDPath& p) {
    if (p.length() % 2 != 0) throw std::invalid_argument("phi_p requires an even-length path");
    std::vector<Step> out;
    out.reserve(p.steps.size());
    int h = 0;
    bool flip = false;
    for (Step st : p.steps) {
        if (h == 0) flip = st == Step::down;  // a new excursion starts here
        out.push_back(flip ? (st == Step::up ? Step::down : Step::up) : st);
        h += st == Step::up ? 1 : -1;
    }
    UDPath q(std::move(out));
    if (!q.never_below_axis()) throw identity_error("phi_p produced a negative path");
    return q;
}

std::vector<UDPath> phi_p_fiber(const UDPath& q) {
    if (!q.never_below_axis()) throw std::invalid_argument("phi_p_fiber requires a nonnegative path");
    if (q.length() % 2 != 0) throw std::invalid_argument("phi_p_fiber requires an even-length path");
    // maximal excursions: step ranges between consecutive axis touches
    std::vector<std::pair<int, int>> segments;
    int h = 0, start = 0;
    for (int t = 0; t < q.length(); ++t) {
        if (h == 0) start = t;
        h += q.steps[static_cast<std::size_t>(t)] == Step::up ? 1 : -1;
        if (h == 0 || t + 1 == q.length()) segments.emplace_back(start, t + 1);
    }
    if (static_cast<int>(segments.size()) != x_touch_count(q))
        throw identity_error("phi_p_fiber: segment count differs from the axis-touch count");
    std::vector<UDPath> out;
    out.reserve(1ull << segments.size());
    for (std::uint64_t mask = 0; mask < (1ull << segments.size()); ++mask) {
        std::vector<Step> steps = q.steps;
        for (std::size_t seg = 0; seg < segments.size(); ++seg) {
            if (!((mask >> seg) & 1u)) continue;
            for (int t = segments[seg].first; t < segments[seg].second; ++t)
                steps[static_cast<std::size_t>(t)] =
                    steps[static_cast<std::size_t>(t)] == Step::up ? Step::down : Step::up;
        }
        out.emplace_back(std::move(steps));
    }
    return out;
}

}  // namespace shufflelab::greedy
