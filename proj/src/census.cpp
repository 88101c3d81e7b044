#include "shufflelab/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <span>
#include <stdexcept>
#include <thread>

#include "shufflelab/errors.hpp"
#include "shufflelab/greedy.hpp"
#include "shufflelab/numbers.hpp"
#include "shufflelab/objects.hpp"
#include "shufflelab/recognizers.hpp"
#include "shufflelab/words.hpp"

namespace shufflelab::census {

namespace {

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

std::uint64_t resolve_cap(std::uint64_t cap) { return cap ? cap : default_cap(); }

// Run fn(worker_index) on `workers` threads; the first exception wins.
void run_workers(int workers, const std::function<void(int)>& fn) {
    if (workers <= 1) {
        fn(0);
        return;
    }
    std::vector<std::thread> threads;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int t = 0; t < workers; ++t) {
        threads.emplace_back([&, t] {
            try {
                fn(t);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    if (error) std::rethrow_exception(error);
}

// Pattern totals per block count: patterns of the given length satisfying
// pred, split by prefix across workers. The reduction is addition, so the
// result is independent of scheduling.
std::vector<std::uint64_t> pattern_block_counts(
    int length, int max_blocks, const std::function<bool(const words::Word&)>& pred,
    const CensusOptions& opts) {
    std::uint64_t cap = resolve_cap(opts.cap);
    if (words::pattern_count(length, max_blocks) > ExactInt(static_cast<long long>(cap)))
        throw resource_cap_error("census: pattern space exceeds cap");
    auto prefixes = words::pattern_prefixes(length, max_blocks, 6);
    int workers = std::min(resolve_workers(opts.workers),
                           static_cast<int>(std::max<std::size_t>(prefixes.size(), 1)));

    std::vector<std::uint64_t> totals(static_cast<std::size_t>(max_blocks) + 1, 0);
    std::mutex merge_mutex;
    std::atomic<std::size_t> next{0};
    run_workers(workers, [&](int) {
        std::vector<std::uint64_t> local(totals.size(), 0);
        for (;;) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= prefixes.size()) break;
            words::for_each_pattern_from(prefixes[idx], length, max_blocks,
                                         [&](const words::PatternWord& p) {
                                             if (pred(p.as_word()))
                                                 ++local[static_cast<std::size_t>(p.blocks)];
                                         });
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        for (std::size_t b = 0; b < totals.size(); ++b) totals[b] += local[b];
    });
    return totals;
}

std::function<bool(const words::Word&)> mode_predicate(CountMode mode) {
    if (mode == CountMode::ss)
        return [](const words::Word& w) { return recognizers::is_shuffle_square(w); };
    return [](const words::Word& w) { return recognizers::is_reverse_shuffle_square(w); };
}

}  // namespace

ExactInt CountPolynomial::eval(long long k) const {
    ExactInt acc = 0;
    ExactInt kk(k);
    int d = degree();
    for (int e = d; e >= 0; --e) acc = acc * kk + coeff(e);
    return acc;
}

std::string CountPolynomial::str() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        auto [d, c] = *it;
        if (c.is_zero()) continue;
        bool neg = c < ExactInt(0);
        ExactInt mag = neg ? -c : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        bool unit = mag == ExactInt(1) && d != 0;
        if (!unit) out += mag.str();
        if (d >= 1) out += "k";
        if (d >= 2) out += "^" + std::to_string(d);
    }
    return out.empty() ? "0" : out;
}

ExactInt count_exact(int n, int k, CountMode mode, const CensusOptions& opts) {
    if (n < 0 || k < 1) throw std::domain_error("count_exact requires n >= 0 and k >= 1");
    int length = 2 * n;
    int max_blocks = std::min(length, k);
    auto totals = pattern_block_counts(length, max_blocks, mode_predicate(mode), opts);
    ExactInt sum = 0;
    for (int b = 0; b < static_cast<int>(totals.size()); ++b)
        if (totals[static_cast<std::size_t>(b)])
            sum += ExactInt(static_cast<long long>(totals[static_cast<std::size_t>(b)])) *
                   words::falling_factorial(k, b);
    return sum;
}

CountPolynomial polynomial(int n, CountMode mode, const CensusOptions& opts) {
    if (n < 0) throw std::domain_error("polynomial requires n >= 0");
    int length = 2 * n;
    auto totals = pattern_block_counts(length, length, mode_predicate(mode), opts);

    // falling factorials to powers via signed Stirling numbers of the first
    // kind: (k)_b = sum_d s(b, d) k^d
    int top = std::max(length, 1);
    std::vector<std::vector<ExactInt>> stirling(
        static_cast<std::size_t>(top) + 1,
        std::vector<ExactInt>(static_cast<std::size_t>(top) + 1, ExactInt(0)));
    stirling[0][0] = 1;
    for (int b = 1; b <= top; ++b)
        for (int d = 0; d <= b; ++d) {
            ExactInt v = d >= 1 ? stirling[b - 1][d - 1] : ExactInt(0);
            stirling[b][d] = v - ExactInt(b - 1) * stirling[b - 1][d];
        }

    CountPolynomial poly;
    for (int d = 0; d <= length; ++d) {
        ExactInt c = 0;
        for (int b = d; b <= length; ++b)
            if (totals[static_cast<std::size_t>(b)])
                c += ExactInt(static_cast<long long>(totals[static_cast<std::size_t>(b)])) *
                     stirling[static_cast<std::size_t>(b)][static_cast<std::size_t>(d)];
        if (!c.is_zero()) poly.coeffs[d] = c;
    }
    if (n == 0) {
        if (poly.coeffs != std::map<int, ExactInt>{{0, ExactInt(1)}})
            throw identity_error("census polynomial at n=0 is not the constant 1");
        return poly;
    }
    if (poly.degree() != n || poly.coeff(n) != numbers::catalan(n))
        throw identity_error("census polynomial degree or leading coefficient is wrong at n=" +
                             std::to_string(n));
    return poly;
}

bool verify_polynomial_coefficients(int n, CountMode mode, const CensusOptions& opts) {
    if (n < 1) throw std::domain_error("verify_polynomial_coefficients requires n >= 1");
    CountPolynomial poly = polynomial(n, mode, opts);
    if (poly.coeff(n) != numbers::catalan(n)) return false;
    ExactInt second = poly.coeff(n - 1);
    if (mode == CountMode::ss) return second == -numbers::valley_total(n);
    if (n == 1) return second == ExactInt(0);  // |RSS_k(1)| = k exactly
    return second == -numbers::b_n(n);
}

ExactInt matching_pair_census(int n, const CensusOptions& opts) {
    if (n < 1) throw std::domain_error("matching_pair_census requires n >= 1");
    ExactInt cn = numbers::catalan(n);
    if (cn * cn > ExactInt(static_cast<long long>(resolve_cap(opts.cap))))
        throw resource_cap_error("matching_pair_census: C_n^2 exceeds cap");
    auto matchings = objects::gen_nonnesting_matchings(n, opts.cap);
    ExactInt pairs = 0;
    for (std::size_t a = 0; a < matchings.size(); ++a)
        for (std::size_t b = a + 1; b < matchings.size(); ++b) {
            std::array<objects::Matching, 2> pair{matchings[a], matchings[b]};
            if (objects::components_of_union(pair) == n - 1) pairs += 1;
        }
    ExactInt expected = numbers::valley_total(n);
    if (pairs != expected)
        throw identity_error("matching_pair_census: counted " + pairs.str() +
                             " pairs, valley total is " + expected.str());
    return pairs;
}

GreedyHistogram greedy_histogram(int n, const CensusOptions& opts) {
    if (n < 1 || n > 30) throw std::domain_error("greedy_histogram requires 1 <= n <= 30");
    int length = 2 * n;
    std::uint64_t total_words = 1ull << length;
    if (total_words > resolve_cap(opts.cap))
        throw resource_cap_error("greedy_histogram: 4^n exceeds cap");

    const std::uint64_t chunk = 1ull << 16;
    std::uint64_t chunks = (total_words + chunk - 1) / chunk;
    int workers = static_cast<int>(std::min<std::uint64_t>(
        static_cast<std::uint64_t>(resolve_workers(opts.workers)), chunks));

    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    std::mutex merge_mutex;
    std::atomic<std::uint64_t> next{0};
    run_workers(workers, [&](int) {
        std::vector<std::uint64_t> local(counts.size(), 0);
        for (;;) {
            std::uint64_t c = next.fetch_add(1);
            if (c >= chunks) break;
            std::uint64_t hi = std::min(total_words, (c + 1) * chunk);
            for (std::uint64_t bits = c * chunk; bits < hi; ++bits)
                ++local[static_cast<std::size_t>(greedy::delta_greedy_packed(bits, length) / 2)];
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += local[i];
    });

    GreedyHistogram hist;
    hist.n = n;
    hist.total = 0;
    for (int i = 0; i <= n; ++i) {
        ExactInt got(static_cast<long long>(counts[static_cast<std::size_t>(i)]));
        ExactInt expected = i == 0 ? numbers::binomial(length, n)
                                   : ExactInt(2) * numbers::binomial(length, n + i);
        if (got != expected)
            throw identity_error("greedy_histogram: deficiency " + std::to_string(2 * i) +
                                 " count " + got.str() + " differs from " + expected.str());
        hist.counts[2 * i] = got;
        hist.total += got;
    }
    if (hist.total != ExactInt(static_cast<long long>(total_words)))
        throw identity_error("greedy_histogram: totals do not sum to 4^n");
    return hist;
}

ExactInt binary_ss_count(int n, const CensusOptions& opts) {
    if (n < 1 || n > 30) throw std::domain_error("binary_ss_count requires 1 <= n <= 30");
    int length = 2 * n;
    std::uint64_t total_words = 1ull << length;
    if (total_words > resolve_cap(opts.cap))
        throw resource_cap_error("binary_ss_count: 4^n exceeds cap");

    const std::uint64_t chunk = 1ull << 12;
    std::uint64_t chunks = (total_words + chunk - 1) / chunk;
    int workers = static_cast<int>(std::min<std::uint64_t>(
        static_cast<std::uint64_t>(resolve_workers(opts.workers)), chunks));

    std::uint64_t hits = 0;
    std::mutex merge_mutex;
    std::atomic<std::uint64_t> next{0};
    run_workers(workers, [&](int) {
        std::uint64_t local = 0;
        for (;;) {
            std::uint64_t c = next.fetch_add(1);
            if (c >= chunks) break;
            std::uint64_t hi = std::min(total_words, (c + 1) * chunk);
            for (std::uint64_t bits = c * chunk; bits < hi; ++bits)
                if (recognizers::is_shuffle_square(words::Word::from_bits(bits, length))) ++local;
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        hits += local;
    });

    ExactInt count(static_cast<long long>(hits));
    ExactInt central = numbers::binomial(length, n);
    if (count < central)
        throw identity_error("binary_ss_count fell below binom(2n, n) at n=" + std::to_string(n));
    if (n >= 3 && count == central)
        throw identity_error("binary_ss_count is not strictly above binom(2n, n) at n=" +
                             std::to_string(n));
    return count;
}

CensusReport run_census(const CensusRequest& req) {
    CensusReport report;
    report.mode = req.mode;
    report.n = req.n;
    report.worker_count = resolve_workers(req.opts.workers);
    auto start = std::chrono::steady_clock::now();

    if (req.mode == "ss" || req.mode == "rss") {
        CountMode mode = req.mode == "ss" ? CountMode::ss : CountMode::rss;
        if (req.k > 0) {
            report.k = req.k;
            report.counts.emplace_back("count", count_exact(req.n, req.k, mode, req.opts));
        }
        if (req.poly) {
            report.polynomial = polynomial(req.n, mode, req.opts);
            report.checks_passed = verify_polynomial_coefficients(req.n, mode, req.opts);
        }
        if (req.k <= 0 && !req.poly)
            throw std::invalid_argument("census ss/rss needs --k, --poly, or both");
    } else if (req.mode == "greedy") {
        GreedyHistogram hist = greedy_histogram(req.n, req.opts);
        for (auto& [deficiency, count] : hist.counts)
            report.counts.emplace_back(std::to_string(deficiency), count);
        report.counts.emplace_back("total", hist.total);
    } else if (req.mode == "bss") {
        ExactInt count = binary_ss_count(req.n, req.opts);
        report.counts.emplace_back("count", count);
        report.counts.emplace_back("central_binomial", numbers::binomial(2 * req.n, req.n));
    } else {
        throw std::invalid_argument("unknown census mode: " + req.mode);
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace shufflelab::census
