#pragma once

#include "shufflelab/exact_int.hpp"

namespace shufflelab::numbers {

// binom(a, b), with value 0 when b < 0 or b > a. Requires a >= 0.
ExactInt binomial(long long a, long long b);

// n-th Catalan number. Computed by the convolution recursion and verified
// against binom(2n, n) / (n + 1); the two must agree.
ExactInt catalan(long long n);

// Total number of valleys (a down-step followed by an up-step) across all
// Dyck paths of semilength n: binom(2n - 1, n + 1). Cross-checked against
// the recursion V_n = 2 * sum_{k<n} V_k C_{n-1-k} + C_n - C_{n-1} when
// n <= 12.
ExactInt valley_total(long long n);

// Catalan convolution C_{n,k} = k/(2n-k) * binom(2n-k, n) for 1 <= k <= n.
// Counts Dyck paths of semilength n touching the x-axis exactly k - 1 times
// internally. Cross-checked against catalan_convolution_sum when n <= 12.
ExactInt catalan_convolution(long long n, long long k);

// The composition-sum route to C_{n,k}: sum over nonnegative compositions
// a_1 + ... + a_k = n - k of prod C_{a_i}.
ExactInt catalan_convolution_sum(long long n, long long k);

// A_n = sum over 4-compositions a+b+c+d = n-2 of
//   binom(a+c, a) * C_{a+b+1, a+1} * C_{c+d+1, c+1},
// asserted equal to binom(2n-2, n-2). Requires n >= 2.
ExactInt a_n(long long n);

// B_n, the number of unordered pairs of 123-avoiding permutations of [n]
// differing by one transposition. Both closed forms are computed and must
// agree:
//   2 A_n + 2 C_{n+1} - 8 C_n + 5 C_{n-1}
//   (2n^3 + 9n^2 - 35n + 30) / (n^3 + 3n^2 + 2n) * binom(2n-2, n-1)
ExactInt b_n(long long n);

// True iff binom(2n-2, n-2) equals the 4-composition sum above, both
// evaluated exactly. Requires n >= 2.
bool verify_composition_identity(long long n);

}  // namespace shufflelab::numbers
