// Workbench CLI: recognize / greedy / gen / verify / census / experiment.
//
// Exit codes: 0 success, 1 identity failure (an internal cross-check
// disagreed), 2 usage error, 3 resource-cap refusal.

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "shufflelab/census.hpp"
#include "shufflelab/errors.hpp"
#include "shufflelab/exact_int.hpp"
#include "shufflelab/experiments.hpp"
#include "shufflelab/greedy.hpp"
#include "shufflelab/numbers.hpp"
#include "shufflelab/objects.hpp"
#include "shufflelab/recognizers.hpp"
#include "shufflelab/words.hpp"

namespace sl = shufflelab;
using nlohmann::json;

namespace {

std::vector<std::string> collect_inputs(const std::vector<std::string>& args) {
    if (!args.empty()) return args;
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(std::cin, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

json tableau_json(const sl::objects::Tableau& t) {
    return json{{"i", t.row_i}, {"j", t.row_j}};
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

int run_recognize(const std::vector<std::string>& inputs, int alphabet, bool with_delta,
                  bool with_witness) {
    for (const auto& text : collect_inputs(inputs)) {
        sl::words::Word w = sl::words::Word::parse(text, alphabet);
        json out;
        out["word"] = w.str();
        auto ss = sl::recognizers::shuffle_square_witness(w);
        auto rss = sl::recognizers::reverse_shuffle_square_witness(w);
        out["ss"] = ss.has_value();
        out["rss"] = rss.has_value();
        if (with_witness && ss) out["ss_witness"] = tableau_json(*ss);
        if (with_witness && rss) out["rss_witness"] = rss->str();
        if (with_delta) {
            auto d = sl::recognizers::delta(w);
            out["delta"] = d.value;
            if (with_witness)
                out["twins"] = json{{"first", d.twins.first}, {"second", d.twins.second}};
        }
        std::cout << out.dump() << "\n";
    }
    return 0;
}

int run_greedy(const std::vector<std::string>& inputs, bool with_path) {
    for (const auto& text : collect_inputs(inputs)) {
        sl::words::Word w = sl::words::Word::parse(text);
        sl::greedy::GreedyTrace trace = sl::greedy::greedy_tableau(w);
        json out;
        out["word"] = w.str();
        out["tableau"] = tableau_json(trace.tableau);
        out["pivots"] = trace.pivots;
        out["delta_greedy"] = trace.delta_greedy;
        if (with_path) out["path"] = sl::greedy::phi_s(w).str();
        std::cout << out.dump() << "\n";
    }
    return 0;
}

int run_gen(const std::string& kind, int n, int length, int max_blocks, std::uint64_t cap) {
    if (kind == "dyck") {
        for (const auto& p : sl::objects::gen_dyck_paths(n, cap)) std::cout << p.str() << "\n";
    } else if (kind == "av123") {
        for (const auto& pi : sl::objects::gen_av123(n, cap)) std::cout << pi.str() << "\n";
    } else if (kind == "matchings") {
        for (const auto& m : sl::objects::gen_nonnesting_matchings(n, cap))
            std::cout << m.str() << "\n";
    } else if (kind == "tableaux") {
        for (const auto& p : sl::objects::gen_dyck_paths(n, cap))
            std::cout << sl::objects::dyck_to_tableau(p).str() << "\n";
    } else if (kind == "patterns") {
        for (const auto& p : sl::words::gen_patterns(length, max_blocks, cap))
            std::cout << p.as_word().str() << "\n";
    } else {
        throw CLI::ValidationError("gen", "unknown kind: " + kind);
    }
    return 0;
}

json census_report_json(const sl::census::CensusReport& report) {
    json out;
    out["mode"] = report.mode;
    out["n"] = report.n;
    if (report.k) out["k"] = *report.k;
    json counts = json::object();
    for (const auto& [key, value] : report.counts) counts[key] = value.str();
    if (!counts.empty()) out["counts"] = counts;
    if (report.polynomial) {
        json coeffs = json::object();
        for (const auto& [d, c] : report.polynomial->coeffs) coeffs[std::to_string(d)] = c.str();
        out["polynomial"] = coeffs;
        out["polynomial_text"] = report.polynomial->str();
    }
    out["checks_passed"] = report.checks_passed;
    out["elapsed_seconds"] = report.elapsed_seconds;
    out["workers"] = report.worker_count;
    return out;
}

int run_verify(int max_n, int workers, std::uint64_t cap);

struct ExperimentRow {
    std::string mode;
    const sl::experiments::ExperimentConfig& cfg;
    std::string value, ci_low, ci_high, tv, bound, slack, exceedances, timeouts, pass;
};

void print_experiment(const ExperimentRow& row, const std::string& out_file, bool json_summary) {
    std::string header =
        "mode,n,trials,seed,h,exhaustive,value,ci_low,ci_high,tv,bound,slack,exceedances,"
        "timeouts,pass";
    std::string line = row.mode + "," + std::to_string(row.cfg.n) + "," +
                       std::to_string(row.cfg.trials) + "," + std::to_string(row.cfg.seed) + "," +
                       format_double(row.cfg.h) + "," + (row.cfg.exhaustive ? "1" : "0") + "," +
                       row.value + "," + row.ci_low + "," + row.ci_high + "," + row.tv + "," +
                       row.bound + "," + row.slack + "," + row.exceedances + "," + row.timeouts +
                       "," + row.pass;
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) throw std::runtime_error("cannot open output file: " + out_file);
        f << header << "\n" << line << "\n";
    } else {
        std::cout << header << "\n" << line << "\n";
    }
    if (json_summary) {
        json j;
        j["mode"] = row.mode;
        j["n"] = row.cfg.n;
        j["trials"] = row.cfg.trials;
        j["seed"] = row.cfg.seed;
        j["exhaustive"] = row.cfg.exhaustive;
        if (!row.value.empty()) j["value"] = row.value;
        if (!row.tv.empty()) j["tv"] = row.tv;
        if (!row.bound.empty()) j["bound"] = row.bound;
        if (!row.pass.empty()) j["pass"] = row.pass == "1";
        std::cout << j.dump() << "\n";
    }
}

int run_experiment(const std::string& mode, sl::experiments::ExperimentConfig cfg,
                   const std::string& out_file, bool json_summary) {
    namespace ex = sl::experiments;
    if (mode == "conjecture") {
        cfg.mode = ex::ExperimentMode::conjecture;
        auto r = ex::mc_conjecture(cfg);
        print_experiment({mode, cfg, format_double(r.fraction), format_double(r.ci_low),
                          format_double(r.ci_high), "", "", "", "", std::to_string(r.timeouts), ""},
                         out_file, json_summary);
    } else if (mode == "delta-distribution") {
        cfg.mode = ex::ExperimentMode::delta_distribution;
        auto r = ex::mc_delta_distribution(cfg);
        print_experiment({mode, cfg, "", "", "", format_double(r.tv), "", format_double(r.slack),
                          "", "", r.pass ? "1" : "0"},
                         out_file, json_summary);
        if (!r.pass) return 1;
    } else if (mode == "delta-tail") {
        cfg.mode = ex::ExperimentMode::delta_tail;
        auto r = ex::mc_delta_tail(cfg);
        print_experiment({mode, cfg, format_double(r.tail), "", "", "", format_double(r.bound),
                          format_double(r.slack), std::to_string(r.exceedances), "",
                          r.pass ? "1" : "0"},
                         out_file, json_summary);
    } else {
        throw CLI::ValidationError("experiment", "unknown mode: " + mode);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for shuffle squares, reverse shuffle squares, and greedy twins"};
    app.require_subcommand(1);

    // recognize
    std::vector<std::string> rec_words;
    int rec_alphabet = 0;
    bool rec_delta = false, rec_witness = false;
    auto* rec = app.add_subcommand("recognize", "decide membership; JSON line per word");
    rec->add_option("words", rec_words, "input words (stdin if omitted)");
    rec->add_option("--k", rec_alphabet, "alphabet size (inferred if omitted)");
    rec->add_flag("--delta", rec_delta, "also report the deletion distance");
    rec->add_flag("--witness", rec_witness, "include witnesses in the output");

    // greedy
    std::vector<std::string> greedy_words;
    bool greedy_path = false;
    auto* gr = app.add_subcommand("greedy", "print the greedy trace; JSON line per word");
    gr->add_option("words", greedy_words, "input words (stdin if omitted)");
    gr->add_flag("--path", greedy_path, "also emit the up/down path of the run");

    // gen
    std::string gen_kind;
    int gen_n = 0, gen_length = 0, gen_blocks = 0;
    std::uint64_t gen_cap = 0;
    auto* gen = app.add_subcommand("gen", "enumerate objects, one text token per line");
    gen->add_option("--kind", gen_kind, "dyck | av123 | matchings | tableaux | patterns")
        ->required();
    gen->add_option("--n", gen_n, "semilength / permutation size");
    gen->add_option("--length", gen_length, "pattern length (patterns only)");
    gen->add_option("--max-blocks", gen_blocks, "maximum distinct symbols (patterns only)");
    gen->add_option("--cap", gen_cap, "object-count cap override");

    // verify
    int verify_max_n = 0, verify_workers = 0;
    std::uint64_t verify_cap = 0;
    auto* ver = app.add_subcommand("verify", "run the identity suite and print a pass/fail table");
    ver->add_option("--max-n", verify_max_n, "cap every check family at this n (0 = full ranges)");
    ver->add_option("--workers", verify_workers, "worker threads (0 = all cores)");
    ver->add_option("--cap", verify_cap, "work cap override");

    // census
    sl::census::CensusRequest census_req;
    auto* cen = app.add_subcommand("census", "exact counts and counting polynomials; JSON report");
    cen->add_option("--mode", census_req.mode, "ss | rss | greedy | bss")->required();
    cen->add_option("--n", census_req.n, "semilength")->required();
    cen->add_option("--k", census_req.k, "alphabet size for a direct count (ss/rss)");
    cen->add_flag("--poly", census_req.poly, "compute the counting polynomial (ss/rss)");
    cen->add_option("--workers", census_req.opts.workers, "worker threads (0 = all cores)");
    cen->add_option("--cap", census_req.opts.cap, "work cap override");

    // experiment
    std::string exp_mode, exp_out;
    bool exp_json = false;
    sl::experiments::ExperimentConfig exp_cfg;
    auto* exp = app.add_subcommand("experiment", "seeded Monte Carlo studies; CSV output");
    exp->set_help_flag("--help", "print help");  // frees -h for the threshold option
    exp->add_option("--mode", exp_mode, "conjecture | delta-distribution | delta-tail")->required();
    exp->add_option("--n", exp_cfg.n, "size parameter")->required();
    exp->add_option("--trials", exp_cfg.trials, "number of samples");
    exp->add_option("--seed", exp_cfg.seed, "random seed");
    exp->add_option("--h", exp_cfg.h, "threshold multiplier (delta-tail)");
    exp->add_flag("--exhaustive", exp_cfg.exhaustive, "exact sweep instead of sampling");
    exp->add_option("--workers", exp_cfg.workers, "worker threads (0 = all cores)");
    exp->add_option("--cap", exp_cfg.cap, "work cap override");
    exp->add_option("--out", exp_out, "write the CSV to a file");
    exp->add_flag("--json", exp_json, "also print a JSON summary line");

    try {
        app.parse(argc, argv);
        if (rec->parsed()) return run_recognize(rec_words, rec_alphabet, rec_delta, rec_witness);
        if (gr->parsed()) return run_greedy(greedy_words, greedy_path);
        if (gen->parsed()) return run_gen(gen_kind, gen_n, gen_length, gen_blocks, gen_cap);
        if (ver->parsed()) return run_verify(verify_max_n, verify_workers, verify_cap);
        if (cen->parsed()) {
            std::cout << census_report_json(sl::census::run_census(census_req)).dump() << "\n";
            return 0;
        }
        if (exp->parsed()) return run_experiment(exp_mode, exp_cfg, exp_out, exp_json);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const sl::resource_cap_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const sl::identity_error& e) {
        std::cerr << "identity failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

namespace {

int run_verify(int max_n, int workers, std::uint64_t cap) {
    namespace nums = sl::numbers;
    namespace obj = sl::objects;
    namespace rec = sl::recognizers;
    namespace grd = sl::greedy;
    namespace cen = sl::census;

    auto capped = [&](int spec_max) { return max_n > 0 ? std::min(max_n, spec_max) : spec_max; };
    sl::census::CensusOptions opts;
    opts.workers = workers;
    opts.cap = cap;

    struct Row {
        std::string name;
        bool ok;
        std::string detail;
    };
    std::vector<Row> rows;
    auto run = [&](const std::string& name, const std::function<void()>& fn) {
        try {
            fn();
            rows.push_back({name, true, ""});
        } catch (const std::exception& e) {
            rows.push_back({name, false, e.what()});
        }
    };

    run("catalan recursion vs closed form (n<=15)", [&] {
        for (int n = 0; n <= 15; ++n) nums::catalan(n);
    });
    run("valley totals: closed form vs recursion (n<=12)", [&] {
        for (int n = 1; n <= 12; ++n) nums::valley_total(n);
    });
    run("catalan convolution vs composition sum (n<=12)", [&] {
        for (int n = 1; n <= 12; ++n)
            for (int k = 1; k <= n; ++k)
                if (nums::catalan_convolution(n, k) != nums::catalan_convolution_sum(n, k))
                    throw sl::identity_error("convolution mismatch");
    });
    run("4-composition sum equals its binomial (2<=n<=12)", [&] {
        for (int n = 2; n <= 12; ++n)
            if (!nums::verify_composition_identity(n)) throw sl::identity_error("composition identity failed");
    });
    run("B_n: combination form vs rational form (2<=n<=12)", [&] {
        for (int n = 2; n <= 12; ++n) nums::b_n(n);
    });
    run("strict path count: C_{n,1} = C_{n-1} (n<=12)", [&] {
        for (int n = 1; n <= 12; ++n)
            if (nums::catalan_convolution(n, 1) != nums::catalan(n - 1))
                throw sl::identity_error("strict path count mismatch");
    });
    {
        int top = capped(8);
        run("generator counts equal C_n (n<=" + std::to_string(top) + ")", [&, top] {
            for (int n = 0; n <= top; ++n) {
                auto c = nums::catalan(n).to_int64();
                if (static_cast<long long>(obj::gen_dyck_paths(n).size()) != c ||
                    static_cast<long long>(obj::gen_av123(n).size()) != c)
                    throw sl::identity_error("generator count mismatch");
            }
        });
        run("path/tableau/matching round trips (n<=" + std::to_string(top) + ")", [&, top] {
            for (int n = 0; n <= top; ++n)
                for (const auto& p : obj::gen_dyck_paths(n)) {
                    auto t = obj::dyck_to_tableau(p);
                    if (obj::tableau_to_dyck(t) != p) throw sl::identity_error("path round trip");
                    auto m = obj::tableau_to_matching(t);
                    if (!obj::is_nonnesting(m)) throw sl::identity_error("nesting image");
                    if (obj::matching_to_tableau(m) != t)
                        throw sl::identity_error("matching round trip");
                }
        });
    }
    {
        int top = capped(6);
        run("valley pairs are exactly the close matching pairs (n<=" + std::to_string(top) + ")",
            [&, top] {
                for (int n = 2; n <= top; ++n) {
                    cen::matching_pair_census(n, opts);
                    std::set<std::pair<obj::Matching, obj::Matching>> images;
                    for (const auto& p : obj::gen_dyck_paths(n))
                        for (int b : obj::valleys(p)) {
                            auto [m1, m2] = obj::valley_pair(p, b);
                            if (m2 < m1) std::swap(m1, m2);
                            if (!images.emplace(m1, m2).second)
                                throw sl::identity_error("valley pair repeated");
                        }
                    if (images.size() !=
                        static_cast<std::size_t>(nums::valley_total(n).to_int64()))
                        throw sl::identity_error("valley pair image count mismatch");
                }
            });
    }
    {
        int top = capped(4);
        run("three distinct matchings leave at most n-2 components (n<=" + std::to_string(top) +
                ")",
            [&, top] {
                for (int n = 2; n <= top; ++n) {
                    auto ms = obj::gen_nonnesting_matchings(n);
                    for (std::size_t a = 0; a < ms.size(); ++a)
                        for (std::size_t b = a + 1; b < ms.size(); ++b)
                            for (std::size_t c = b + 1; c < ms.size(); ++c) {
                                std::array<obj::Matching, 3> triple{ms[a], ms[b], ms[c]};
                                if (obj::components_of_union(triple) > n - 2)
                                    throw sl::identity_error("triple union too loose");
                            }
                }
            });
    }
    {
        int top = capped(7);
        run("type table matches closed forms (2<=n<=" + std::to_string(top) + ")", [&, top] {
            for (int n = 2; n <= top; ++n) obj::type_count_table(n);
        });
    }
    {
        int top = capped(4);
        run("ss polynomial coefficients (n<=" + std::to_string(top) + ")", [&, top] {
            for (int n = 1; n <= top; ++n)
                if (!cen::verify_polynomial_coefficients(n, cen::CountMode::ss, opts))
                    throw sl::identity_error("ss coefficient mismatch");
        });
        run("rss polynomial coefficients (n<=" + std::to_string(top) + ")", [&, top] {
            for (int n = 1; n <= top; ++n)
                if (!cen::verify_polynomial_coefficients(n, cen::CountMode::rss, opts))
                    throw sl::identity_error("rss coefficient mismatch");
        });
    }
    run("recognizers vs naive partition search (2n<=8, k<=3)", [&] {
        for (int len = 0; len <= 8; len += 2)
            for (int k = 1; k <= 3; ++k) {
                std::vector<std::uint8_t> syms(static_cast<std::size_t>(len), 0);
                std::uint64_t total = 1;
                for (int i = 0; i < len; ++i) total *= static_cast<std::uint64_t>(k);
                for (std::uint64_t code = 0; code < total; ++code) {
                    std::uint64_t c = code;
                    for (int i = 0; i < len; ++i) {
                        syms[static_cast<std::size_t>(i)] =
                            static_cast<std::uint8_t>(c % static_cast<std::uint64_t>(k));
                        c /= static_cast<std::uint64_t>(k);
                    }
                    sl::words::Word w(syms, k);
                    if (rec::is_shuffle_square(w) != rec::naive_is_shuffle_square(w))
                        throw sl::identity_error("ss oracle mismatch on " + w.str());
                    if (rec::is_reverse_shuffle_square(w) !=
                        rec::naive_is_reverse_shuffle_square(w))
                        throw sl::identity_error("rss oracle mismatch on " + w.str());
                }
            }
    });
    {
        int top = capped(8);
        run("deficiency histogram matches the binomial law (n<=" + std::to_string(top) + ")",
            [&, top] {
                for (int n = 1; n <= top; ++n) cen::greedy_histogram(n, opts);
            });
    }
    {
        int top = capped(6);
        run("fibers partition the binary cube (n<=" + std::to_string(top) + ")", [&, top] {
            for (int n = 1; n <= top; ++n) {
                int len = 2 * n;
                std::set<sl::words::Word> seen;
                for (std::uint64_t bits = 0; bits < (1ull << len); ++bits) {
                    obj::UDPath p;
                    for (int i = 0; i < len; ++i)
                        p.steps.push_back(((bits >> i) & 1u) ? obj::Step::down : obj::Step::up);
                    if (!p.never_below_axis()) continue;
                    auto fiber = grd::fiber_s(p);
                    if (fiber.size() != (1ull << grd::x_touch_count(p)))
                        throw sl::identity_error("fiber size is not 2^x");
                    if (fiber.size() != grd::phi_p_fiber(p).size())
                        throw sl::identity_error("path-map fiber size mismatch");
                    for (auto& w : fiber)
                        if (!seen.insert(w).second) throw sl::identity_error("fibers overlap");
                }
                if (seen.size() != (1ull << len))
                    throw sl::identity_error("fibers do not cover the cube");
            }
        });
    }
    {
        int top = capped(8);
        run("binary shuffle squares beat the central binomial (n<=" + std::to_string(top) + ")",
            [&, top] {
                for (int n = 1; n <= top; ++n) cen::binary_ss_count(n, opts);
            });
    }
    {
        int top = capped(6);
        run("binary rss words are exactly the abelian squares (n<=" + std::to_string(top) + ")",
            [&, top] {
                for (int n = 1; n <= top; ++n) {
                    int len = 2 * n;
                    sl::ExactInt count = 0;
                    for (std::uint64_t bits = 0; bits < (1ull << len); ++bits)
                        if (rec::binary_rss_equals_abelian(sl::words::Word::from_bits(bits, len)))
                            count += 1;
                    if (count != nums::binomial(len, n))
                        throw sl::identity_error("rss count differs from the central binomial");
                }
            });
    }

    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.name.size());
    bool all_ok = true;
    for (const auto& row : rows) {
        all_ok = all_ok && row.ok;
        std::cout << (row.ok ? "ok   " : "FAIL ") << row.name;
        if (!row.ok) std::cout << std::string(width - row.name.size() + 2, ' ') << row.detail;
        std::cout << "\n";
    }
    std::cout << (all_ok ? "all checks passed" : "some checks FAILED") << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace
