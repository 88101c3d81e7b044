#include "shufflelab/experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "shufflelab/census.hpp"
#include "shufflelab/errors.hpp"
#include "shufflelab/greedy.hpp"
#include "shufflelab/numbers.hpp"
#include "shufflelab/recognizers.hpp"
#include "shufflelab/rng.hpp"
#include "shufflelab/words.hpp"

namespace shufflelab::experiments {

namespace {

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Trials are partitioned into index ranges; each accumulator is merged by
// addition, so results do not depend on the schedule.
template <typename Acc>
Acc run_trials(std::uint64_t trials, int workers,
               const std::function<void(std::uint64_t, Acc&)>& per_trial) {
    workers = static_cast<int>(std::min<std::uint64_t>(std::max(workers, 1),
                                                       std::max<std::uint64_t>(trials, 1)));
    std::vector<std::thread> threads;
    std::vector<Acc> accs(static_cast<std::size_t>(workers));
    std::exception_ptr error;
    std::mutex error_mutex;
    std::uint64_t per = trials / static_cast<std::uint64_t>(workers);
    std::uint64_t extra = trials % static_cast<std::uint64_t>(workers);
    std::uint64_t lo = 0;
    for (int t = 0; t < workers; ++t) {
        std::uint64_t hi = lo + per + (static_cast<std::uint64_t>(t) < extra ? 1 : 0);
        threads.emplace_back([&, t, lo, hi] {
            try {
                for (std::uint64_t trial = lo; trial < hi; ++trial)
                    per_trial(trial, accs[static_cast<std::size_t>(t)]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
        lo = hi;
    }
    for (auto& th : threads) th.join();
    if (error) std::rethrow_exception(error);
    Acc total{};
    for (auto& a : accs) total.merge(a);
    return total;
}

bool even_ones(const words::Word& w) {
    int ones = 0;
    for (auto s : w.symbols) ones += s;
    return ones % 2 == 0;
}

}  // namespace

ConjectureResult mc_conjecture(const ExperimentConfig& cfg) {
    if (cfg.n < 1) throw std::domain_error("mc_conjecture requires n >= 1");
    ConjectureResult out;
    out.exhaustive = cfg.exhaustive;
    int length = 2 * cfg.n;

    if (cfg.exhaustive) {
        if (length > 62 || (1ull << length) > (cfg.cap ? cfg.cap : default_cap()))
            throw resource_cap_error("mc_conjecture exhaustive sweep exceeds cap");
        for (std::uint64_t bits = 0; bits < (1ull << length); ++bits) {
            if (std::popcount(bits) % 2 != 0) continue;
            ++out.samples;
            if (recognizers::is_shuffle_square(words::Word::from_bits(bits, length), cfg.cap))
                ++out.hits;
        }
    } else {
        if (cfg.trials < 1) throw std::domain_error("mc_conjecture requires trials >= 1");
        struct Acc {
            std::uint64_t hits = 0, timeouts = 0;
            void merge(const Acc& o) {
                hits += o.hits;
                timeouts += o.timeouts;
            }
        };
        Acc acc = run_trials<Acc>(
            cfg.trials, resolve_workers(cfg.workers), [&](std::uint64_t trial, Acc& a) {
                TrialRng rng(cfg.seed, trial);
                words::Word w = rng.binary_word(length);
                while (!even_ones(w)) w = rng.binary_word(length);
                try {
                    if (recognizers::is_shuffle_square(w, cfg.cap)) ++a.hits;
                } catch (const resource_cap_error&) {
                    ++a.timeouts;
                }
            });
        out.samples = cfg.trials;
        out.hits = acc.hits;
        out.timeouts = acc.timeouts;
    }

    std::uint64_t effective = out.samples - out.timeouts;
    if (effective > 0) {
        double p = static_cast<double>(out.hits) / static_cast<double>(effective);
        out.fraction = p;
        double half = 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(effective));
        out.ci_low = std::max(0.0, p - half);
        out.ci_high = std::min(1.0, p + half);
    }
    return out;
}

DeltaDistributionResult mc_delta_distribution(const ExperimentConfig& cfg) {
    if (cfg.n < 1) throw std::domain_error("mc_delta_distribution requires n >= 1");
    DeltaDistributionResult out;
    out.exhaustive = cfg.exhaustive;
    int length = 2 * cfg.n;

    if (cfg.exhaustive) {
        census::CensusOptions opts;
        opts.workers = cfg.workers;
        opts.cap = cfg.cap;
        // greedy_histogram already asserts the exact binomial law; the
        // comparison below is therefore an exact match
        census::GreedyHistogram hist = census::greedy_histogram(cfg.n, opts);
        out.histogram = hist.counts;
        out.samples = static_cast<std::uint64_t>(hist.total.to_int64());
        double tv = 0.0;
        for (int i = 0; i <= cfg.n; ++i) {
            ExactInt expected = i == 0 ? numbers::binomial(length, cfg.n)
                                       : ExactInt(2) * numbers::binomial(length, cfg.n + i);
            tv += std::abs(hist.counts.at(2 * i).to_double() - expected.to_double());
        }
        out.tv = tv / (2.0 * static_cast<double>(out.samples));
        out.slack = 0.0;
        out.pass = out.tv == 0.0;
        return out;
    }

    if (cfg.trials < 1) throw std::domain_error("mc_delta_distribution requires trials >= 1");
    struct Acc {
        std::map<int, std::uint64_t> hist;
        void merge(const Acc& o) {
            for (auto [k, v] : o.hist) hist[k] += v;
        }
    };
    Acc acc = run_trials<Acc>(cfg.trials, resolve_workers(cfg.workers),
                              [&](std::uint64_t trial, Acc& a) {
                                  TrialRng rng(cfg.seed, trial);
                                  ++a.hist[greedy::delta_greedy(rng.binary_word(length))];
                              });
    out.samples = cfg.trials;
    double four_n = std::pow(4.0, cfg.n);
    double tv = 0.0;
    for (int i = 0; i <= cfg.n; ++i) {
        ExactInt expected = i == 0 ? numbers::binomial(length, cfg.n)
                                   : ExactInt(2) * numbers::binomial(length, cfg.n + i);
        auto it = acc.hist.find(2 * i);
        std::uint64_t got = it == acc.hist.end() ? 0 : it->second;
        out.histogram[2 * i] = ExactInt(static_cast<long long>(got));
        double empirical = static_cast<double>(got) / static_cast<double>(cfg.trials);
        tv += std::abs(empirical - expected.to_double() / four_n);
    }
    out.tv = tv / 2.0;
    out.slack = 3.0 / std::sqrt(static_cast<double>(cfg.trials));
    out.pass = out.tv <= out.slack;
    return out;
}

DeltaTailResult mc_delta_tail(const ExperimentConfig& cfg) {
    if (cfg.n < 1) throw std::domain_error("mc_delta_tail requires n >= 1");
    if (cfg.h <= 0.0) throw std::domain_error("mc_delta_tail requires h > 0");
    if (cfg.trials < 1) throw std::domain_error("mc_delta_tail requires trials >= 1");

    double threshold = cfg.h * std::sqrt(static_cast<double>(cfg.n));
    struct Acc {
        std::uint64_t exceedances = 0;
        void merge(const Acc& o) { exceedances += o.exceedances; }
    };
    Acc acc = run_trials<Acc>(cfg.trials, resolve_workers(cfg.workers),
                              [&](std::uint64_t trial, Acc& a) {
                                  TrialRng rng(cfg.seed, trial);
                                  if (greedy::delta_greedy(rng.binary_word(cfg.n)) > threshold)
                                      ++a.exceedances;
                              });

    DeltaTailResult out;
    out.exceedances = acc.exceedances;
    out.tail = static_cast<double>(acc.exceedances) / static_cast<double>(cfg.trials);
    out.bound = 2.0 * std::exp(-cfg.h * cfg.h / 96.0);
    out.slack = 3.0 / std::sqrt(static_cast<double>(cfg.trials));
    out.pass = out.tail <= out.bound + out.slack;
    if (!out.pass)
        throw identity_error("mc_delta_tail: empirical tail exceeds the proven bound");
    return out;
}

}  // namespace shufflelab::experiments
