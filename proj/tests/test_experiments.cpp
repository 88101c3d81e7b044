#include "doctest.h"

#include <cmath>

#include "shufflelab/experiments.hpp"
#include "shufflelab/rng.hpp"

namespace ex = shufflelab::experiments;

TEST_CASE("trial rng is a pure function of seed and trial") {
    ex::TrialRng a(42, 7);
    ex::TrialRng b(42, 7);
    for (int i = 0; i < 16; ++i) CHECK(a.next() == b.next());
    CHECK(ex::TrialRng(42, 7).next() != ex::TrialRng(42, 8).next());
    CHECK(ex::TrialRng(42, 7).next() != ex::TrialRng(43, 7).next());
    auto w = ex::TrialRng(1, 1).binary_word(100);
    CHECK(w.size() == 100);
    CHECK(w == ex::TrialRng(1, 1).binary_word(100));
}

TEST_CASE("conjecture experiment, exhaustive") {
    ex::ExperimentConfig cfg;
    cfg.n = 1;
    cfg.exhaustive = true;
    auto r1 = ex::mc_conjecture(cfg);
    CHECK(r1.samples == 2);
    CHECK(r1.hits == 2);
    CHECK(r1.fraction == 1.0);

    cfg.n = 2;
    auto r2 = ex::mc_conjecture(cfg);
    CHECK(r2.samples == 8);
    CHECK(r2.hits == 6);
    CHECK(r2.fraction == 0.75);
}

TEST_CASE("conjecture experiment, sampled") {
    ex::ExperimentConfig cfg;
    cfg.n = 3;
    cfg.trials = 4000;
    cfg.seed = 20260810;
    auto sampled = ex::mc_conjecture(cfg);
    CHECK(sampled.samples == 4000);
    CHECK(sampled.timeouts == 0);

    cfg.exhaustive = true;
    auto exact = ex::mc_conjecture(cfg);
    double slack = 3.0 / std::sqrt(4000.0);
    CHECK(std::abs(sampled.fraction - exact.fraction) <= slack);

    // identical configs, identical outputs
    cfg.exhaustive = false;
    auto again = ex::mc_conjecture(cfg);
    CHECK(again.hits == sampled.hits);
    CHECK(again.fraction == sampled.fraction);

    // workers must not change the outcome
    cfg.workers = 3;
    auto threaded = ex::mc_conjecture(cfg);
    CHECK(threaded.hits == sampled.hits);
}

TEST_CASE("recognizer cap shows up as a timeout counter") {
    ex::ExperimentConfig cfg;
    cfg.n = 4;
    cfg.trials = 64;
    cfg.seed = 9;
    cfg.cap = 1;  // starves the recognizer memo
    auto r = ex::mc_conjecture(cfg);
    CHECK(r.timeouts > 0);
    CHECK(r.timeouts < r.samples);  // the easy words still decide
    CHECK(r.hits <= r.samples - r.timeouts);
    auto again = ex::mc_conjecture(cfg);
    CHECK(again.timeouts == r.timeouts);
    CHECK(again.hits == r.hits);
}

TEST_CASE("deficiency distribution experiment") {
    ex::ExperimentConfig cfg;
    cfg.exhaustive = true;
    for (int n = 1; n <= 5; ++n) {
        cfg.n = n;
        auto r = ex::mc_delta_distribution(cfg);
        CHECK(r.tv == 0.0);
        CHECK(r.pass);
    }

    ex::ExperimentConfig sampled;
    sampled.n = 8;
    sampled.trials = 2000;
    sampled.seed = 11;
    auto r = ex::mc_delta_distribution(sampled);
    CHECK(r.samples == 2000);
    CHECK(r.slack == doctest::Approx(3.0 / std::sqrt(2000.0)));
    CHECK(r.pass);
    auto again = ex::mc_delta_distribution(sampled);
    CHECK(again.tv == r.tv);
}

TEST_CASE("deficiency tail experiment") {
    ex::ExperimentConfig cfg;
    cfg.n = 16;
    cfg.h = 6.0;
    cfg.trials = 500;
    cfg.seed = 5;
    auto r = ex::mc_delta_tail(cfg);
    CHECK(r.pass);
    CHECK(r.bound == doctest::Approx(2.0 * std::exp(-36.0 / 96.0)));
    auto again = ex::mc_delta_tail(cfg);
    CHECK(again.exceedances == r.exceedances);
    CHECK(again.tail == r.tail);
}
