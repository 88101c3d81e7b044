#pragma once

#include <cstdint>

#include "shufflelab/words.hpp"

namespace shufflelab::experiments {

// Counter-based generator: the stream for a trial is a pure function of
// (seed, trial index), so results are reproducible regardless of how trials
// are scheduled across workers. splitmix64 underneath.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial)
        : state_(mix(mix(seed + 0x9E3779B97F4A7C15ull) ^
                     mix(trial * 0xD2B74407B1CE6E93ull + 0x8CB92BA72F3D8DD7ull))) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    // uniform bit string of the given length, LSB-first per 64-bit block
    words::Word binary_word(int length) {
        std::vector<std::uint8_t> syms(static_cast<std::size_t>(length));
        std::uint64_t bits = 0;
        for (int i = 0; i < length; ++i) {
            if (i % 64 == 0) bits = next();
            syms[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((bits >> (i % 64)) & 1u);
        }
        return words::Word(std::move(syms), 2);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace shufflelab::experiments
