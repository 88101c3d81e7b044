#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shufflelab/exact_int.hpp"

namespace shufflelab::census {

enum class CountMode { ss, rss };

struct CensusOptions {
    int workers = 0;        // 0: one per hardware thread
    std::uint64_t cap = 0;  // 0: default work cap
};

// Exact integer polynomial in the alphabet size k, standard power basis.
struct CountPolynomial {
    std::map<int, ExactInt> coeffs;  // degree -> coefficient, zeros omitted

    int degree() const { return coeffs.empty() ? 0 : coeffs.rbegin()->first; }
    ExactInt coeff(int d) const {
        auto it = coeffs.find(d);
        return it == coeffs.end() ? ExactInt(0) : it->second;
    }
    ExactInt eval(long long k) const;
    std::string str() const;  // "2k^2 - k"
};

// Exact |SS_k(n)| or |RSS_k(n)|: enumerate equality patterns of length 2n
// with at most min(2n, k) blocks, decide each pattern once, and weight by
// the falling factorial k(k-1)...(k-b+1).
ExactInt count_exact(int n, int k, CountMode mode, const CensusOptions& opts = {});

// The full counting polynomial in k: per-block-count pattern totals pushed
// through the falling-factorial-to-power basis change (signed Stirling
// numbers of the first kind). Degree n with leading coefficient C_n, both
// verified.
CountPolynomial polynomial(int n, CountMode mode, const CensusOptions& opts = {});

// True iff the coefficient of k^n is C_n and the coefficient of k^{n-1} is
// -valley_total(n) (shuffle squares) or -B_n (reverse shuffle squares).
bool verify_polynomial_coefficients(int n, CountMode mode, const CensusOptions& opts = {});

// Number of unordered pairs of distinct non-nesting matchings on [2n] whose
// union has n - 1 components; asserted equal to valley_total(n).
ExactInt matching_pair_census(int n, const CensusOptions& opts = {});

// Exhaustive deficiency histogram over all binary words of length 2n,
// asserted to match binom(2n, n) at deficiency 0 and 2 binom(2n, n+i) at
// deficiency 2i.
struct GreedyHistogram {
    int n = 0;
    std::map<int, ExactInt> counts;  // deficiency -> word count
    ExactInt total;
};

GreedyHistogram greedy_histogram(int n, const CensusOptions& opts = {});

// |SS_2(n)| by exhaustive sweep; asserted >= binom(2n, n), strictly for
// n >= 3.
ExactInt binary_ss_count(int n, const CensusOptions& opts = {});

// CLI-facing bundle.
struct CensusRequest {
    std::string mode;  // "ss" | "rss" | "greedy" | "bss"
    int n = 0;
    int k = 0;          // 0: no per-k count (ss/rss only)
    bool poly = false;  // ss/rss only
    CensusOptions opts;
};

struct CensusReport {
    std::string mode;
    int n = 0;
    std::optional<int> k;
    std::vector<std::pair<std::string, ExactInt>> counts;
    std::optional<CountPolynomial> polynomial;
    bool checks_passed = true;
    double elapsed_seconds = 0.0;
    int worker_count = 1;
};

CensusReport run_census(const CensusRequest& req);

}  // namespace shufflelab::census
