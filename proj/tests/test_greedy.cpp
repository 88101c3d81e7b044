#include "doctest.h"

#include <set>
#include <stdexcept>
#include <vector>

#include "shufflelab/errors.hpp"
#include "shufflelab/greedy.hpp"
#include "shufflelab/recognizers.hpp"
#include "shufflelab/rng.hpp"
#include "shufflelab/words.hpp"

namespace grd = shufflelab::greedy;
namespace obj = shufflelab::objects;
using shufflelab::experiments::TrialRng;
using shufflelab::words::Word;

namespace {

std::vector<obj::UDPath> nonnegative_paths(int length) {
    std::vector<obj::UDPath> out;
    for (std::uint64_t bits = 0; bits < (1ull << length); ++bits) {
        obj::UDPath p;
        for (int i = 0; i < length; ++i)
            p.steps.push_back(((bits >> i) & 1u) ? obj::Step::down : obj::Step::up);
        if (p.never_below_axis()) out.push_back(p);
    }
    return out;
}

}  // namespace

TEST_CASE("greedy traces") {
    auto t = grd::greedy_tableau(Word::parse("1000110100"));
    CHECK(t.tableau == obj::Tableau({1, 2, 3, 4, 6, 8}, {5, 7, 9, 10}));
    CHECK(t.delta_greedy == 2);
    CHECK(t.pivots == std::vector<int>{1});

    auto t2 = grd::greedy_tableau(Word::parse("0011"));
    CHECK(t2.tableau == obj::Tableau({1, 3}, {2, 4}));
    CHECK(t2.delta_greedy == 0);
    CHECK(t2.pivots == std::vector<int>{1, 2});

    auto t3 = grd::greedy_tableau(Word::parse("110110"));
    CHECK(t3.tableau == obj::Tableau({1, 3, 4, 5}, {2, 6}));
    CHECK(t3.delta_greedy == 2);

    auto t4 = grd::greedy_tableau(Word::parse("01"));
    CHECK(t4.tableau == obj::Tableau({1, 2}, {}));
    CHECK(t4.delta_greedy == 2);

    CHECK(grd::greedy_tableau(Word{}).delta_greedy == 0);
}

TEST_CASE("greedy works on any alphabet and odd lengths") {
    auto t = grd::greedy_tableau(Word::parse("0120211", 3));
    CHECK(t.tableau.size() == 7);
    CHECK(t.delta_greedy % 2 == 1);
    for (std::uint64_t trial = 0; trial < 300; ++trial) {
        TrialRng rng(3, trial);
        int len = static_cast<int>(rng.next() % 15);
        int k = 2 + static_cast<int>(rng.next() % 3);
        std::vector<std::uint8_t> syms(static_cast<std::size_t>(len));
        for (auto& s : syms) s = static_cast<std::uint8_t>(rng.next() % k);
        Word w(std::move(syms), k);
        auto trace = grd::greedy_tableau(w);  // validates its own invariants
        CHECK(trace.delta_greedy % 2 == len % 2);
        if (trace.delta_greedy == 0) {
            // a rectangular greedy tableau is itself a shuffle-square witness
            CHECK(shufflelab::recognizers::is_shuffle_square(w));
        }
    }
}

TEST_CASE("packed run agrees with the general one") {
    for (int len = 0; len <= 10; ++len)
        for (std::uint64_t bits = 0; bits < (1ull << len); ++bits)
            CHECK(grd::delta_greedy_packed(bits, len) ==
                  grd::delta_greedy(Word::from_bits(bits, len)));
}

TEST_CASE("phi_s") {
    CHECK(grd::phi_s(Word::parse("0011")) == obj::UDPath::parse("UDUD"));
    CHECK(grd::phi_s(Word::parse("1000110100")) == obj::UDPath::parse("UUUUDUDUDD"));
    CHECK(grd::phi_s(Word::parse("00")) == obj::UDPath::parse("UD"));
    CHECK(grd::phi_s(Word::parse("1000110100")).end_height() == 2);
    CHECK_THROWS_AS(grd::phi_s(Word::parse("011")), std::invalid_argument);
    CHECK_THROWS_AS(grd::phi_s(Word::parse("012")), std::invalid_argument);
}

TEST_CASE("x-axis touches") {
    CHECK(grd::x_touch_count(obj::UDPath::parse("UUDD")) == 1);
    CHECK(grd::x_touch_count(obj::UDPath::parse("UDUD")) == 2);
    CHECK(grd::x_touch_count(obj::UDPath::parse("UU")) == 1);
    CHECK(grd::x_touch_count(obj::UDPath{}) == 0);
    CHECK_THROWS_AS(grd::x_touch_count(obj::UDPath::parse("DU")), std::invalid_argument);
}

TEST_CASE("fibers of phi_s") {
    auto f1 = grd::fiber_s(obj::UDPath::parse("UDUD"));
    std::set<std::string> got;
    for (const auto& w : f1) got.insert(w.str());
    CHECK(got == std::set<std::string>{"0000", "0011", "1100", "1111"});

    auto f2 = grd::fiber_s(obj::UDPath::parse("UUDD"));
    got.clear();
    for (const auto& w : f2) got.insert(w.str());
    CHECK(got == std::set<std::string>{"0101", "1010"});

    CHECK(grd::fiber_s(obj::UDPath{}).size() == 1);
    CHECK_THROWS_AS(grd::fiber_s(obj::UDPath::parse("DU")), std::invalid_argument);
    CHECK_THROWS_AS(grd::fiber_s(obj::UDPath::parse("UUD")), std::invalid_argument);
}

TEST_CASE("fibers partition the cube and sizes match both maps") {
    for (int n = 1; n <= 4; ++n) {
        std::set<Word> seen;
        for (const auto& p : nonnegative_paths(2 * n)) {
            auto fiber = grd::fiber_s(p);
            CHECK(fiber.size() == (1ull << grd::x_touch_count(p)));
            CHECK(fiber.size() == grd::phi_p_fiber(p).size());
            for (const auto& w : fiber) CHECK(seen.insert(w).second);
        }
        CHECK(seen.size() == (1ull << (2 * n)));
    }
}

TEST_CASE("phi_p reflections") {
    CHECK(grd::phi_p(obj::UDPath::parse("DUUD")) == obj::UDPath::parse("UDUD"));
    CHECK(grd::phi_p(obj::UDPath::parse("UUDD")) == obj::UDPath::parse("UUDD"));
    CHECK(grd::phi_p(obj::UDPath::parse("DD")) == obj::UDPath::parse("UU"));
    CHECK_THROWS_AS(grd::phi_p(obj::UDPath::parse("UUD")), std::invalid_argument);

    auto fiber = grd::phi_p_fiber(obj::UDPath::parse("UDUD"));
    std::set<std::string> got;
    for (const auto& q : fiber) got.insert(q.str());
    CHECK(got == std::set<std::string>{"UDUD", "DUUD", "UDDU", "DUDU"});
    for (const auto& q : fiber) CHECK(grd::phi_p(q) == obj::UDPath::parse("UDUD"));

    // every preimage found by full enumeration is produced exactly once
    for (int len : {2, 4, 6}) {
        for (const auto& target : nonnegative_paths(len)) {
            std::size_t direct = 0;
            for (std::uint64_t bits = 0; bits < (1ull << len); ++bits) {
                obj::UDPath q;
                for (int i = 0; i < len; ++i)
                    q.steps.push_back(((bits >> i) & 1u) ? obj::Step::down : obj::Step::up);
                if (grd::phi_p(q) == target) ++direct;
            }
            CHECK(direct == grd::phi_p_fiber(target).size());
        }
    }
}

TEST_CASE("square witness family with positive greedy deficiency") {
    for (int n = 3; n <= 8; ++n) {
        std::vector<std::uint8_t> syms;
        for (int rep = 0; rep < 2; ++rep) {
            for (int i = 0; i < n - 1; ++i) syms.push_back(1);
            syms.push_back(0);
        }
        Word w(std::move(syms), 2);
        CHECK(shufflelab::recognizers::is_shuffle_square(w));
        CHECK(grd::delta_greedy(w) > 0);
    }
}
