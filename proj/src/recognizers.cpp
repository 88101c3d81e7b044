#include "shufflelab/recognizers.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "shufflelab/errors.hpp"

namespace shufflelab::recognizers {

namespace {

int bits_per_symbol(int alphabet) {
    if (alphabet <= 2) return 1;
    if (alphabet <= 4) return 2;
    if (alphabet <= 16) return 4;
    return 8;
}

struct SearchKey {
    std::uint32_t pos;
    std::uint32_t len;
    std::uint64_t packed;
    bool operator==(const SearchKey&) const = default;
};

struct SearchKeyHash {
    std::size_t operator()(const SearchKey& k) const {
        std::uint64_t z = k.packed ^ (static_cast<std::uint64_t>(k.pos) << 48) ^
                          (static_cast<std::uint64_t>(k.len) << 40);
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return static_cast<std::size_t>(z ^ (z >> 31));
    }
};

// Scan state shared by the exact decision and the maximization: a FIFO of
// open first-copy symbols, stored with the positions that pushed them.
class QueueScan {
public:
    explicit QueueScan(const words::Word& w, std::uint64_t cap)
        : syms_(w.symbols),
          len_(static_cast<int>(w.symbols.size())),
          bits_(bits_per_symbol(w.alphabet)),
          cap_(cap ? cap : default_cap()) {}

protected:
    int queue_len() const { return static_cast<int>(buf_.size()) - head_; }

    SearchKey key(int pos) const {
        int qlen = queue_len();
        if (qlen * bits_ > 64)
            throw resource_cap_error("recognizer queue too long to memoize");
        std::uint64_t packed = 0;
        for (int i = 0; i < qlen; ++i)
            packed |= static_cast<std::uint64_t>(
                          buf_[static_cast<std::size_t>(head_ + i)].symbol)
                      << (bits_ * i);
        return SearchKey{static_cast<std::uint32_t>(pos), static_cast<std::uint32_t>(qlen), packed};
    }

    struct Entry {
        std::uint8_t symbol;
        int position;  // 1-based position that pushed this symbol
    };

    const std::vector<std::uint8_t>& syms_;
    int len_;
    int bits_;
    std::uint64_t cap_;
    std::vector<Entry> buf_;
    int head_ = 0;
};

class SsDecision : QueueScan {
public:
    using QueueScan::QueueScan;

    bool run(std::vector<int>& row_i, std::vector<int>& row_j) {
        bool ok = dfs(0);
        if (ok) {
            row_i = row_i_;
            row_j = row_j_;
        }
        return ok;
    }

private:
    bool dfs(int pos) {
        int qlen = queue_len();
        if (pos == len_) return qlen == 0;
        int rem = len_ - pos;
        if (qlen > rem || ((rem - qlen) & 1)) return false;
        SearchKey k = key(pos);
        if (failed_.contains(k)) return false;
        std::uint8_t sym = syms_[static_cast<std::size_t>(pos)];
        // match the oldest open copy first
        if (qlen > 0 && buf_[static_cast<std::size_t>(head_)].symbol == sym) {
            ++head_;
            row_j_.push_back(pos + 1);
            if (dfs(pos + 1)) return true;
            row_j_.pop_back();
            --head_;
        }
        buf_.push_back(Entry{sym, pos + 1});
        row_i_.push_back(pos + 1);
        if (dfs(pos + 1)) return true;
        row_i_.pop_back();
        buf_.pop_back();
        if (failed_.size() >= cap_) throw resource_cap_error("shuffle-square memo exceeded cap");
        failed_.insert(k);
        return false;
    }

    std::unordered_set<SearchKey, SearchKeyHash> failed_;
    std::vector<int> row_i_, row_j_;
};

class TwinsMaximizer : QueueScan {
public:
    using QueueScan::QueueScan;

    int run(TwinsWitness& twins) {
        int best = dfs(0);
        replay(best, twins);
        return best;
    }

private:
    // largest number of matched columns reachable from (pos, queue)
    int dfs(int pos) {
        if (pos == len_) return 0;
        SearchKey k = key(pos);
        if (auto it = memo_.find(k); it != memo_.end()) return it->second;
        std::uint8_t sym = syms_[static_cast<std::size_t>(pos)];
        int best = dfs(pos + 1);  // skip: the position is deleted
        if (queue_len() > 0 && buf_[static_cast<std::size_t>(head_)].symbol == sym) {
            ++head_;
            best = std::max(best, 1 + dfs(pos + 1));
            --head_;
        }
        // pushing with no room left for a matching pop gains nothing
        if (queue_len() + 2 <= len_ - pos) {
            buf_.push_back(Entry{sym, pos + 1});
            best = std::max(best, dfs(pos + 1));
            buf_.pop_back();
        }
        if (memo_.size() >= cap_) throw resource_cap_error("twins search memo exceeded cap");
        memo_.emplace(k, best);
        return best;
    }

    // walk one optimal run again, preferring pop > push > skip
    void replay(int total, TwinsWitness& twins) {
        buf_.clear();
        head_ = 0;
        int pos = 0, want = total;
        while (pos < len_) {
            std::uint8_t sym = syms_[static_cast<std::size_t>(pos)];
            if (queue_len() > 0 && buf_[static_cast<std::size_t>(head_)].symbol == sym) {
                int pushed_at = buf_[static_cast<std::size_t>(head_)].position;
                ++head_;
                if (1 + dfs(pos + 1) == want) {
                    twins.first.push_back(pushed_at);
                    twins.second.push_back(pos + 1);
                    --want;
                    ++pos;
                    continue;
                }
                --head_;
            }
            if (queue_len() + 2 <= len_ - pos) {
                buf_.push_back(Entry{sym, pos + 1});
                if (dfs(pos + 1) == want) {
                    ++pos;
                    continue;
                }
                buf_.pop_back();
            }
            ++pos;  // skip
        }
    }

    std::unordered_map<SearchKey, int, SearchKeyHash> memo_;
};

}  // namespace

std::optional<objects::Tableau> shuffle_square_witness(const words::Word& w, std::uint64_t cap) {
    if (w.size() % 2 != 0) return std::nullopt;
    std::vector<int> row_i, row_j;
    SsDecision search(w, cap);
    if (!search.run(row_i, row_j)) return std::nullopt;
    objects::Tableau t(std::move(row_i), std::move(row_j));
    for (std::size_t r = 0; r < t.row_j.size(); ++r)
        if (w.symbols[static_cast<std::size_t>(t.row_i[r]) - 1] !=
            w.symbols[static_cast<std::size_t>(t.row_j[r]) - 1])
            throw identity_error("shuffle-square witness has mismatched columns");
    return t;
}

bool is_shuffle_square(const words::Word& w, std::uint64_t cap) {
    return shuffle_square_witness(w, cap).has_value();
}

namespace {

class RssSearch {
public:
    explicit RssSearch(const words::Word& w) : n_(w.size() / 2) {
        by_symbol_.resize(static_cast<std::size_t>(w.alphabet));
        for (int p = 0; p < n_; ++p)
            by_symbol_[w.symbols[static_cast<std::size_t>(p)]].push_back(p + 1);
        second_ = {w.symbols.begin() + n_, w.symbols.end()};
        used_.assign(static_cast<std::size_t>(n_) + 1, 0);
        img_.reserve(static_cast<std::size_t>(n_));
    }

    bool run(std::vector<int>& images) {
        bool ok = dfs(0, std::numeric_limits<int>::max(), std::numeric_limits<int>::max());
        if (ok) images = img_;
        return ok;
    }

private:
    bool dfs(int i, int lowest, int pair_top) {
        if (i == n_) return true;
        for (int v : by_symbol_[second_[static_cast<std::size_t>(i)]]) {
            if (v > pair_top) break;  // candidates ascend; the rest complete a 123 too
            if (used_[static_cast<std::size_t>(v)]) continue;
            int next_top = v > lowest ? std::min(pair_top, v) : pair_top;
            used_[static_cast<std::size_t>(v)] = 1;
            img_.push_back(v);
            if (dfs(i + 1, std::min(lowest, v), next_top)) return true;
            img_.pop_back();
            used_[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    }

    int n_;
    std::vector<std::vector<int>> by_symbol_;
    std::vector<std::uint8_t> second_;
    std::vector<char> used_;
    std::vector<int> img_;
};

}  // namespace

std::optional<objects::Permutation> reverse_shuffle_square_witness(const words::Word& w) {
    if (w.size() % 2 != 0) return std::nullopt;
    RssSearch search(w);
    std::vector<int> images;
    if (!search.run(images)) return std::nullopt;
    objects::Permutation pi(std::move(images));
    if (!pi.avoids_123()) throw identity_error("reverse-shuffle-square witness contains a 123");
    int n = w.size() / 2;
    for (int i = 1; i <= n; ++i)
        if (w.symbols[static_cast<std::size_t>(n + i) - 1] !=
            w.symbols[static_cast<std::size_t>(pi(i)) - 1])
            throw identity_error("reverse-shuffle-square witness does not map the halves");
    return pi;
}

bool is_reverse_shuffle_square(const words::Word& w) {
    return reverse_shuffle_square_witness(w).has_value();
}

DeltaResult delta(const words::Word& w, std::uint64_t cap) {
    TwinsMaximizer search(w, cap);
    DeltaResult out;
    int matched = search.run(out.twins);
    out.value = w.size() - 2 * matched;
    if (static_cast<int>(out.twins.first.size()) != matched ||
        static_cast<int>(out.twins.second.size()) != matched)
        throw identity_error("twins witness length disagrees with the maximum");
    for (int r = 0; r < matched; ++r)
        if (w.symbols[static_cast<std::size_t>(out.twins.first[static_cast<std::size_t>(r)]) - 1] !=
            w.symbols[static_cast<std::size_t>(out.twins.second[static_cast<std::size_t>(r)]) - 1])
            throw identity_error("twins witness has mismatched symbols");
    return out;
}

bool binary_rss_equals_abelian(const words::Word& w) {
    if (w.alphabet > 2) throw std::domain_error("binary_rss_equals_abelian requires a binary word");
    bool rss = is_reverse_shuffle_square(w);
    bool abelian = words::is_abelian_square(w);
    if (rss != abelian)
        throw identity_error("binary reverse-shuffle-square and abelian-square answers differ on " +
                             w.str());
    return rss;
}

namespace {

// Assign each position to I or J outright, checking the pairing constraint
// as soon as both members of a column are placed.
class NaivePartition {
public:
    NaivePartition(const words::Word& w, bool mirrored)
        : syms_(w.symbols), len_(w.size()), n_(len_ / 2), mirrored_(mirrored) {}

    bool run() {
        if (len_ % 2 != 0) return false;
        side_i_.reserve(static_cast<std::size_t>(n_));
        side_j_.reserve(static_cast<std::size_t>(n_));
        return dfs(0);
    }

private:
    bool pair_ok(const std::vector<int>& self, const std::vector<int>& other) const {
        std::size_t rank = self.size();              // rank of the just-placed element
        std::size_t partner = mirrored_ ? static_cast<std::size_t>(n_) + 1 - rank : rank;
        if (other.size() < partner) return true;     // partner not placed yet
        return syms_[static_cast<std::size_t>(self.back()) - 1] ==
               syms_[static_cast<std::size_t>(other[partner - 1]) - 1];
    }

    bool dfs(int pos) {
        if (pos == len_) return true;
        if (static_cast<int>(side_i_.size()) < n_) {
            side_i_.push_back(pos + 1);
            if (pair_ok(side_i_, side_j_) && dfs(pos + 1)) return true;
            side_i_.pop_back();
        }
        if (static_cast<int>(side_j_.size()) < n_) {
            side_j_.push_back(pos + 1);
            if (pair_ok(side_j_, side_i_) && dfs(pos + 1)) return true;
            side_j_.pop_back();
        }
        return false;
    }

    const std::vector<std::uint8_t>& syms_;
    int len_, n_;
    bool mirrored_;
    std::vector<int> side_i_, side_j_;
};

}  // namespace

bool naive_is_shuffle_square(const words::Word& w) {
    return NaivePartition(w, /*mirrored=*/false).run();
}

bool naive_is_reverse_shuffle_square(const words::Word& w) {
    return NaivePartition(w, /*mirrored=*/true).run();
}

}  // namespace shufflelab::recognizers
