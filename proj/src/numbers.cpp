#include "shufflelab/numbers.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "shufflelab/errors.hpp"

namespace shufflelab::numbers {

namespace {

// C_0 .. C_n by the convolution recursion
std::vector<ExactInt> catalan_table(long long n) {
    std::vector<ExactInt> c(static_cast<std::size_t>(n) + 1);
    c[0] = 1;
    for (long long m = 1; m <= n; ++m) {
        ExactInt s = 0;
        for (long long k = 0; k < m; ++k) s += c[k] * c[m - 1 - k];
        c[m] = s;
    }
    return c;
}

}  // namespace

ExactInt binomial(long long a, long long b) {
    if (a < 0) throw std::domain_error("binomial requires a >= 0");
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    ExactInt r = 1;
    // each partial product is itself a binomial coefficient, so the division
    // by i is exact at every step
    for (long long i = 1; i <= b; ++i) r = (r * ExactInt(a - b + i)).div_exact(i);
    return r;
}

ExactInt catalan(long long n) {
    if (n < 0) throw std::domain_error("catalan requires n >= 0");
    ExactInt closed = binomial(2 * n, n).div_exact(n + 1);
    ExactInt recursive = catalan_table(n).back();
    if (recursive != closed)
        throw identity_error("catalan: recursion and closed form disagree at n=" + std::to_string(n));
    return closed;
}

ExactInt valley_total(long long n) {
    if (n < 1) throw std::domain_error("valley_total requires n >= 1");
    ExactInt closed = binomial(2 * n - 1, n + 1);
    if (n <= 12) {
        auto c = catalan_table(n);
        std::vector<ExactInt> v(static_cast<std::size_t>(n) + 1);
        v[0] = 0;
        for (long long m = 1; m <= n; ++m) {
            ExactInt s = 0;
            for (long long k = 0; k < m; ++k) s += v[k] * c[m - 1 - k];
            v[m] = ExactInt(2) * s + c[m] - c[m - 1];
        }
        if (v[n] != closed)
            throw identity_error("valley_total: recursion and closed form disagree at n=" +
                                 std::to_string(n));
    }
    return closed;
}

ExactInt catalan_convolution_sum(long long n, long long k) {
    if (k < 1 || k > n) throw std::domain_error("catalan_convolution requires 1 <= k <= n");
    long long m = n - k;
    auto c = catalan_table(m);
    // k-fold convolution of the Catalan sequence, read off at degree m
    std::vector<ExactInt> cur(c.begin(), c.end());
    for (long long step = 2; step <= k; ++step) {
        std::vector<ExactInt> next(static_cast<std::size_t>(m) + 1, ExactInt(0));
        for (long long j = 0; j <= m; ++j)
            for (long long t = 0; t <= j; ++t) next[j] += cur[t] * c[j - t];
        cur = std::move(next);
    }
    return cur[m];
}

ExactInt catalan_convolution(long long n, long long k) {
    if (k < 1 || k > n) throw std::domain_error("catalan_convolution requires 1 <= k <= n");
    ExactInt closed = (binomial(2 * n - k, n) * ExactInt(k)).div_exact(2 * n - k);
    if (n <= 12 && catalan_convolution_sum(n, k) != closed)
        throw identity_error("catalan_convolution: closed form and composition sum disagree at n=" +
                             std::to_string(n) + " k=" + std::to_string(k));
    return closed;
}

namespace {

ExactInt four_composition_sum(long long n) {
    ExactInt total = 0;
    for (long long a = 0; a <= n - 2; ++a)
        for (long long b = 0; a + b <= n - 2; ++b)
            for (long long c = 0; a + b + c <= n - 2; ++c) {
                long long d = n - 2 - a - b - c;
                total += binomial(a + c, a) * catalan_convolution(a + b + 1, a + 1) *
                         catalan_convolution(c + d + 1, c + 1);
            }
    return total;
}

}  // namespace

ExactInt a_n(long long n) {
    if (n < 2) throw std::domain_error("a_n requires n >= 2");
    ExactInt sum = four_composition_sum(n);
    if (sum != binomial(2 * n - 2, n - 2))
        throw identity_error("a_n: composition sum and binomial disagree at n=" + std::to_string(n));
    return sum;
}

ExactInt b_n(long long n) {
    if (n < 2) throw std::domain_error("b_n requires n >= 2");
    ExactInt combination_form =
        ExactInt(2) * a_n(n) + ExactInt(2) * catalan(n + 1) - ExactInt(8) * catalan(n) +
        ExactInt(5) * catalan(n - 1);
    ExactInt num = ExactInt(2) * n * n * n + ExactInt(9) * n * n - ExactInt(35) * n + 30;
    ExactInt den = ExactInt(n) * n * n + ExactInt(3) * n * n + ExactInt(2) * n;
    ExactInt rational_form = (num * binomial(2 * n - 2, n - 1)).div_exact(den);
    if (combination_form != rational_form)
        throw identity_error("b_n: the two closed forms disagree at n=" + std::to_string(n));
    return combination_form;
}

bool verify_composition_identity(long long n) {
    if (n < 2) throw std::domain_error("verify_composition_identity requires n >= 2");
    return four_composition_sum(n) == binomial(2 * n - 2, n - 2);
}

}  // namespace shufflelab::numbers
