#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "shufflelab/exact_int.hpp"

namespace shufflelab::experiments {

enum class ExperimentMode { conjecture, delta_distribution, delta_tail };

// Identical configs produce identical outputs bit for bit: per-trial
// randomness is a pure function of (seed, trial index).
struct ExperimentConfig {
    ExperimentMode mode = ExperimentMode::conjecture;
    int n = 1;
    std::uint64_t trials = 10'000;
    std::uint64_t seed = 1;
    double h = 0.0;          // delta_tail only
    bool exhaustive = false;
    int workers = 0;
    std::uint64_t cap = 0;
};

// Fraction of shuffle squares among words of length 2n with an even number
// of ones, sampled by rejection (or enumerated exactly with exhaustive).
// Informational: no pass/fail is attached to the limiting value. Samples on
// which the recognizer hits its resource cap are counted as timeouts and
// excluded from the fraction.
struct ConjectureResult {
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
    std::uint64_t timeouts = 0;
    double fraction = 0.0;
    double ci_low = 0.0;   // 95% normal approximation
    double ci_high = 0.0;
    bool exhaustive = false;
};

ConjectureResult mc_conjecture(const ExperimentConfig& cfg);

// Empirical law of delta_greedy/2 over uniform binary words of length 2n
// against the exact law of |Bin(2n, 1/2) - n|, as total-variation distance.
// The exhaustive mode is an exact integer comparison, so tv is exactly 0.
struct DeltaDistributionResult {
    std::map<int, ExactInt> histogram;  // deficiency -> count
    std::uint64_t samples = 0;
    double tv = 0.0;
    double slack = 0.0;  // 3 / sqrt(trials); 0 in exhaustive mode
    bool pass = false;
    bool exhaustive = false;
};

DeltaDistributionResult mc_delta_distribution(const ExperimentConfig& cfg);

// Tail of delta_greedy over uniform binary words of length n: the empirical
// frequency of delta_greedy > h sqrt(n) must stay below 2 exp(-h^2/96) plus
// the sampling slack 3 / sqrt(trials); a violation is reported as an
// identity failure since the bound is proven.
struct DeltaTailResult {
    std::uint64_t exceedances = 0;
    double tail = 0.0;
    double bound = 0.0;
    double slack = 0.0;
    bool pass = false;
};

DeltaTailResult mc_delta_tail(const ExperimentConfig& cfg);

}  // namespace shufflelab::experiments
