// Acceptance suite: the end-to-end identity checks at their full desk-scale
// ranges, one pass/fail line per criterion. Run with no arguments for the
// whole suite, or pass criterion numbers to run a subset.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "shufflelab/census.hpp"
#include "shufflelab/errors.hpp"
#include "shufflelab/exact_int.hpp"
#include "shufflelab/experiments.hpp"
#include "shufflelab/greedy.hpp"
#include "shufflelab/numbers.hpp"
#include "shufflelab/objects.hpp"
#include "shufflelab/recognizers.hpp"
#include "shufflelab/rng.hpp"
#include "shufflelab/words.hpp"

namespace sl = shufflelab;
namespace nums = sl::numbers;
namespace obj = sl::objects;
namespace rec = sl::recognizers;
namespace grd = sl::greedy;
namespace cen = sl::census;
namespace ex = sl::experiments;
using sl::ExactInt;
using sl::words::Word;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& message) {
    if (!cond) throw Failure(message);
}

template <typename T>
std::string str_of(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// ---- criterion 1: shuffle-square polynomial coefficients -----------------

void criterion_ss_coefficients() {
    for (int n = 1; n <= 5; ++n) {
        auto poly = cen::polynomial(n, cen::CountMode::ss);
        require(poly.degree() == n, "degree mismatch at n=" + std::to_string(n));
        require(poly.coeff(n) == nums::catalan(n),
                "leading coefficient mismatch at n=" + std::to_string(n));
        require(poly.coeff(n - 1) == -nums::valley_total(n),
                "second coefficient mismatch at n=" + std::to_string(n));
    }
    auto p4 = cen::polynomial(4, cen::CountMode::ss);
    require(p4.coeff(4) == ExactInt(14) && p4.coeff(3) == ExactInt(-21),
            "n=4 coefficients are not (14, -21)");
}

// ---- criterion 2: reverse-shuffle-square polynomial coefficients ---------

void criterion_rss_coefficients() {
    std::array<long long, 3> expected{-1, -6, -27};
    for (int n = 2; n <= 5; ++n) {
        auto poly = cen::polynomial(n, cen::CountMode::rss);
        require(poly.coeff(n) == nums::catalan(n),
                "leading coefficient mismatch at n=" + std::to_string(n));
        require(poly.coeff(n - 1) == -nums::b_n(n),
                "second coefficient mismatch at n=" + std::to_string(n));
        if (n <= 4)
            require(poly.coeff(n - 1) == ExactInt(expected[static_cast<std::size_t>(n) - 2]),
                    "pinned second coefficient mismatch at n=" + std::to_string(n));
    }
}

// ---- criterion 3: valley identity ----------------------------------------

void criterion_valley_identity() {
    std::array<long long, 5> pinned{1, 5, 21, 84, 330};
    for (int n = 2; n <= 6; ++n) {
        ExactInt pairs = cen::matching_pair_census(n);
        require(pairs == ExactInt(pinned[static_cast<std::size_t>(n) - 2]),
                "pair count mismatch at n=" + std::to_string(n));

        // the valley map is a bijection onto those pairs
        auto matchings = obj::gen_nonnesting_matchings(n);
        std::set<std::pair<obj::Matching, obj::Matching>> close_pairs;
        for (std::size_t a = 0; a < matchings.size(); ++a)
            for (std::size_t b = a + 1; b < matchings.size(); ++b) {
                std::array<obj::Matching, 2> pair{matchings[a], matchings[b]};
                if (obj::components_of_union(pair) == n - 1)
                    close_pairs.emplace(std::min(matchings[a], matchings[b]),
                                        std::max(matchings[a], matchings[b]));
            }
        std::set<std::pair<obj::Matching, obj::Matching>> images;
        for (const auto& p : obj::gen_dyck_paths(n))
            for (int b : obj::valleys(p)) {
                auto [m1, m2] = obj::valley_pair(p, b);
                auto key = std::make_pair(std::min(m1, m2), std::max(m1, m2));
                require(images.insert(key).second, "valley map repeated a pair");
            }
        require(images == close_pairs, "valley map is not onto at n=" + std::to_string(n));
    }
}

// ---- criterion 4: type table ----------------------------------------------

void criterion_type_table() {
    for (int n = 2; n <= 7; ++n) {
        auto table = obj::type_count_table(n);  // throws if any entry disagrees
        require(table.union_size == nums::b_n(n), "union mismatch at n=" + std::to_string(n));
    }
}

// ---- criterion 5: convolution identities ----------------------------------

void criterion_convolution_identities() {
    for (int n = 2; n <= 12; ++n)
        require(nums::verify_composition_identity(n), "composition identity failed at n=" + std::to_string(n));
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k)
            require(nums::catalan_convolution(n, k) == nums::catalan_convolution_sum(n, k),
                    "convolution mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k));
}

// ---- criterion 6: deficiency histogram ------------------------------------

void criterion_deficiency_histogram() {
    for (int n = 1; n <= 10; ++n) {
        auto hist = cen::greedy_histogram(n);  // asserts the binomial law
        ExactInt four_n = 1;
        for (int i = 0; i < n; ++i) four_n *= 4;
        require(hist.total == four_n, "histogram total mismatch at n=" + std::to_string(n));
    }
}

// ---- criterion 7: fiber laws ----------------------------------------------

void criterion_fiber_laws() {
    for (int n = 1; n <= 6; ++n) {
        int len = 2 * n;
        std::set<Word> seen;
        for (std::uint64_t bits = 0; bits < (1ull << len); ++bits) {
            obj::UDPath p;
            for (int i = 0; i < len; ++i)
                p.steps.push_back(((bits >> i) & 1u) ? obj::Step::down : obj::Step::up);
            if (!p.never_below_axis()) continue;
            auto fiber = grd::fiber_s(p);  // rechecks each word by retracing
            require(fiber.size() == (1ull << grd::x_touch_count(p)),
                    "fiber size is not 2^x at " + p.str());
            require(fiber.size() == grd::phi_p_fiber(p).size(),
                    "path-map fiber size mismatch at " + p.str());
            for (const auto& w : fiber)
                require(seen.insert(w).second, "fibers overlap at " + w.str());
        }
        require(seen.size() == (1ull << len),
                "fibers do not cover the cube at n=" + std::to_string(n));
    }
}

// ---- criterion 8: binary shuffle-square lower bound ------------------------

void criterion_binary_lower_bound() {
    for (int n = 1; n <= 8; ++n) {
        ExactInt count = cen::binary_ss_count(n);  // asserts >=, strict for n >= 3
        ExactInt central = nums::binomial(2 * n, n);
        if (n <= 2)
            require(count == central, "expected equality at n=" + std::to_string(n));
        else
            require(count > central, "expected strict inequality at n=" + std::to_string(n));
    }
    for (int n = 3; n <= 8; ++n) {
        std::vector<std::uint8_t> syms;
        for (int rep = 0; rep < 2; ++rep) {
            for (int i = 0; i < n - 1; ++i) syms.push_back(1);
            syms.push_back(0);
        }
        Word w(std::move(syms), 2);
        require(rec::is_shuffle_square(w), "witness family member is not a square");
        require(grd::delta_greedy(w) > 0, "witness family member has zero greedy deficiency");
    }
}

// ---- criterion 9: recognizer oracle equivalence -----------------------------

void check_witnesses(const Word& w) {
    if (auto t = rec::shuffle_square_witness(w)) {
        require(t->rectangular() && t->size() == w.size(), "ss witness shape");
        for (std::size_t r = 0; r < t->row_j.size(); ++r)
            require(w.symbols[static_cast<std::size_t>(t->row_i[r]) - 1] ==
                        w.symbols[static_cast<std::size_t>(t->row_j[r]) - 1],
                    "ss witness column mismatch");
    }
    if (auto pi = rec::reverse_shuffle_square_witness(w)) {
        int n = w.size() / 2;
        require(pi->avoids_123(), "rss witness has a 123");
        for (int i = 1; i <= n; ++i)
            require(w.symbols[static_cast<std::size_t>(n + i) - 1] ==
                        w.symbols[static_cast<std::size_t>((*pi)(i)) - 1],
                    "rss witness mapping mismatch");
    }
}

void criterion_oracle_equivalence() {
    for (int len = 0; len <= 8; len += 2)
        for (int k = 1; k <= 3; ++k) {
            std::vector<std::uint8_t> syms(static_cast<std::size_t>(len), 0);
            std::uint64_t total = 1;
            for (int i = 0; i < len; ++i) total *= static_cast<std::uint64_t>(k);
            for (std::uint64_t code = 0; code < total; ++code) {
                std::uint64_t c = code;
                for (int i = 0; i < len; ++i) {
                    syms[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(c % k);
                    c /= static_cast<std::uint64_t>(k);
                }
                Word w(syms, k);
                require(rec::is_shuffle_square(w) == rec::naive_is_shuffle_square(w),
                        "ss oracle mismatch on " + w.str());
                require(rec::is_reverse_shuffle_square(w) ==
                            rec::naive_is_reverse_shuffle_square(w),
                        "rss oracle mismatch on " + w.str());
                check_witnesses(w);
            }
        }

    for (std::uint64_t trial = 0; trial < 10'000; ++trial) {
        ex::TrialRng rng(0x5ca1ab1e, trial);
        int len = 10 + 2 * static_cast<int>(rng.next() % 6);  // 10..20 even
        int k = 2 + static_cast<int>(rng.next() % 2);
        std::vector<std::uint8_t> syms(static_cast<std::size_t>(len));
        for (auto& s : syms) s = static_cast<std::uint8_t>(rng.next() % k);
        Word w(std::move(syms), k);
        require(rec::is_shuffle_square(w) == rec::naive_is_shuffle_square(w),
                "ss oracle mismatch on random word " + w.str());
        require(rec::is_reverse_shuffle_square(w) == rec::naive_is_reverse_shuffle_square(w),
                "rss oracle mismatch on random word " + w.str());
        check_witnesses(w);
    }
}

// ---- criterion 10: deficiency tail and distribution -------------------------

void criterion_tail_and_distribution() {
    ex::ExperimentConfig tail;
    tail.mode = ex::ExperimentMode::delta_tail;
    tail.n = 100;
    tail.h = 10.0;
    tail.trials = 10'000;
    tail.seed = 20260810;
    auto t = ex::mc_delta_tail(tail);  // throws if the bound is violated
    require(t.tail <= t.bound + t.slack, "tail result inconsistent");

    for (int n = 1; n <= 10; ++n) {
        ex::ExperimentConfig cfg;
        cfg.mode = ex::ExperimentMode::delta_distribution;
        cfg.n = n;
        cfg.exhaustive = true;
        auto r = ex::mc_delta_distribution(cfg);
        require(r.tv == 0.0, "exhaustive tv distance nonzero at n=" + std::to_string(n));
    }
}

// ---- criterion 11: binary reverse squares are the abelian squares -----------

void criterion_binary_rss_count() {
    for (int n = 1; n <= 6; ++n) {
        int len = 2 * n;
        ExactInt count = 0;
        for (std::uint64_t bits = 0; bits < (1ull << len); ++bits)
            if (rec::binary_rss_equals_abelian(Word::from_bits(bits, len))) count += 1;
        require(count == nums::binomial(len, n),
                "binary rss count mismatch at n=" + std::to_string(n) + ": " + str_of(count));
    }
}

struct Criterion {
    int id;
    const char* name;
    std::function<void()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "ss polynomial coefficients, n=1..5", criterion_ss_coefficients},
        {2, "rss polynomial coefficients, n=2..5", criterion_rss_coefficients},
        {3, "valley identity and bijection, n=2..6", criterion_valley_identity},
        {4, "type table closed forms, n=2..7", criterion_type_table},
        {5, "convolution identities, n<=12", criterion_convolution_identities},
        {6, "deficiency histogram law, n=1..10", criterion_deficiency_histogram},
        {7, "fiber partition and sizes, n=1..6", criterion_fiber_laws},
        {8, "binary square lower bound, n=1..8", criterion_binary_lower_bound},
        {9, "recognizer oracle equivalence", criterion_oracle_equivalence},
        {10, "deficiency tail bound and exact distribution", criterion_tail_and_distribution},
        {11, "binary rss equals abelian squares, n=1..6", criterion_binary_rss_count},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> wanted;
    for (int a = 1; a < argc; ++a) wanted.insert(std::stoi(argv[a]));

    int failures = 0;
    for (const auto& crit : criteria()) {
        if (!wanted.empty() && !wanted.count(crit.id)) continue;
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            crit.run();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", crit.id,
                    crit.name, secs, detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
