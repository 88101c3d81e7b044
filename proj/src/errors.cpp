#include "shufflelab/errors.hpp"

#include <cstdlib>

namespace shufflelab {

namespace {

std::uint64_t env_cap() {
    const char* env = std::getenv("SHUFFLELAB_CAP");
    if (!env || !*env) return 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (!end || *end != '\0' || v == 0) return 0;
    // keep caps comparable to signed 64-bit counters
    if (v > 9'000'000'000'000'000'000ull) v = 9'000'000'000'000'000'000ull;
    return v;
}

}  // namespace

std::uint64_t default_cap() {
    std::uint64_t v = env_cap();
    return v ? v : 100'000'000ull;
}

std::uint64_t default_generator_cap() {
    std::uint64_t v = env_cap();
    return v ? v : 10'000'000ull;
}

}  // namespace shufflelab
