#include "shufflelab/words.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "shufflelab/errors.hpp"

namespace shufflelab::words {

Word::Word(std::vector<std::uint8_t> syms, int k) : symbols(std::move(syms)), alphabet(k) {
    if (k < 1 || k > 255) throw std::invalid_argument("alphabet size must be in [1, 255]");
    for (auto s : symbols)
        if (s >= alphabet) throw std::invalid_argument("symbol out of alphabet range");
}

Word Word::parse(const std::string& text, int alphabet_hint) {
    std::vector<std::uint8_t> syms;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            int v = std::stoi(tok);
            if (v < 0 || v > 254) throw std::invalid_argument("symbol out of range: " + tok);
            syms.push_back(static_cast<std::uint8_t>(v));
        }
    } else {
        for (char c : text) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad word character: " + text);
            syms.push_back(static_cast<std::uint8_t>(c - '0'));
        }
    }
    int k = alphabet_hint;
    if (k == 0) {
        int maxs = 0;
        for (auto s : syms) maxs = std::max(maxs, static_cast<int>(s));
        k = syms.empty() ? 1 : maxs + 1;
    }
    return Word(std::move(syms), k);
}

Word Word::from_bits(std::uint64_t bits, int length) {
    if (length < 0 || length > 64) throw std::invalid_argument("from_bits length must be in [0, 64]");
    std::vector<std::uint8_t> syms(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) syms[i] = static_cast<std::uint8_t>((bits >> i) & 1u);
    return Word(std::move(syms), 2);
}

std::string Word::str() const {
    std::string out;
    if (alphabet <= 10) {
        for (auto s : symbols) out.push_back(static_cast<char>('0' + s));
    } else {
        for (std::size_t i = 0; i < symbols.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(static_cast<int>(symbols[i]));
        }
    }
    return out;
}

Word subsequence(const Word& w, const std::vector<int>& indices) {
    std::vector<std::uint8_t> syms;
    syms.reserve(indices.size());
    int prev = 0;
    for (int idx : indices) {
        if (idx < 1 || idx > w.size()) throw std::out_of_range("subsequence index out of range");
        if (idx <= prev) throw std::invalid_argument("subsequence indices must be strictly increasing");
        syms.push_back(w.symbols[static_cast<std::size_t>(idx) - 1]);
        prev = idx;
    }
    return Word(std::move(syms), w.alphabet);
}

Word reverse(const Word& w) {
    std::vector<std::uint8_t> syms(w.symbols.rbegin(), w.symbols.rend());
    return Word(std::move(syms), w.alphabet);
}

bool is_abelian_square(const Word& w) {
    if (w.size() % 2 != 0) return false;
    std::array<int, 256> diff{};
    int half = w.size() / 2;
    for (int i = 0; i < half; ++i) {
        ++diff[w.symbols[static_cast<std::size_t>(i)]];
        --diff[w.symbols[static_cast<std::size_t>(half + i)]];
    }
    return std::all_of(diff.begin(), diff.end(), [](int d) { return d == 0; });
}

PatternWord pattern_of(const Word& w) {
    std::array<int, 256> label;
    label.fill(-1);
    PatternWord p;
    p.symbols.reserve(w.symbols.size());
    for (auto s : w.symbols) {
        if (label[s] < 0) label[s] = p.blocks++;
        p.symbols.push_back(static_cast<std::uint8_t>(label[s]));
    }
    return p;
}

ExactInt pattern_count(int length, int max_blocks) {
    if (length < 0) throw std::domain_error("pattern_count requires length >= 0");
    if (length == 0) return 1;
    // Stirling numbers of the second kind, summed over b <= max_blocks
    int cap_b = std::min(length, std::max(max_blocks, 0));
    std::vector<std::vector<ExactInt>> s(static_cast<std::size_t>(length) + 1,
                                         std::vector<ExactInt>(static_cast<std::size_t>(length) + 1,
                                                               ExactInt(0)));
    s[0][0] = 1;
    for (int m = 1; m <= length; ++m)
        for (int b = 1; b <= m; ++b) s[m][b] = s[m - 1][b - 1] + ExactInt(b) * s[m - 1][b];
    ExactInt total = 0;
    for (int b = 1; b <= cap_b; ++b) total += s[length][b];
    return total;
}

ExactInt falling_factorial(long long k, int b) {
    if (b < 0) throw std::domain_error("falling_factorial requires b >= 0");
    ExactInt r = 1;
    for (int i = 0; i < b; ++i) r *= ExactInt(k - i);
    return r;
}

namespace {

void extend(PatternWord& p, int length, int max_blocks,
            const std::function<void(const PatternWord&)>& fn) {
    if (static_cast<int>(p.symbols.size()) == length) {
        fn(p);
        return;
    }
    int limit = std::min(p.blocks, max_blocks - 1);
    for (int v = 0; v <= limit; ++v) {
        bool fresh = v == p.blocks;
        p.symbols.push_back(static_cast<std::uint8_t>(v));
        if (fresh) ++p.blocks;
        extend(p, length, max_blocks, fn);
        if (fresh) --p.blocks;
        p.symbols.pop_back();
    }
}

}  // namespace

void for_each_pattern(int length, int max_blocks,
                      const std::function<void(const PatternWord&)>& fn) {
    if (length < 0) throw std::domain_error("pattern length must be >= 0");
    PatternWord p;
    if (length > 0 && max_blocks < 1) return;
    extend(p, length, max_blocks, fn);
}

std::vector<PatternWord> gen_patterns(int length, int max_blocks, std::uint64_t cap) {
    std::uint64_t limit = cap ? cap : default_generator_cap();
    if (pattern_count(length, max_blocks) > ExactInt(static_cast<long long>(limit)))
        throw resource_cap_error("gen_patterns: pattern count exceeds cap");
    std::vector<PatternWord> out;
    for_each_pattern(length, max_blocks, [&](const PatternWord& p) { out.push_back(p); });
    return out;
}

std::vector<PatternWord> pattern_prefixes(int length, int max_blocks, int depth) {
    int d = std::min(depth, length);
    std::vector<PatternWord> out;
    if (length > 0 && max_blocks < 1) return out;
    PatternWord p;
    extend(p, d, max_blocks, [&](const PatternWord& q) { out.push_back(q); });
    return out;
}

void for_each_pattern_from(const PatternWord& prefix, int length, int max_blocks,
                           const std::function<void(const PatternWord&)>& fn) {
    PatternWord p = prefix;
    extend(p, length, max_blocks, fn);
}

std::uint64_t pack2(const Word& w) {
    if (w.alphabet > 4 || w.size() > 32)
        throw std::invalid_argument("pack2 requires alphabet <= 4 and length <= 32");
    std::uint64_t bits = 0;
    for (int i = 0; i < w.size(); ++i)
        bits |= static_cast<std::uint64_t>(w.symbols[static_cast<std::size_t>(i)]) << (2 * i);
    return bits;
}

Word unpack2(std::uint64_t bits, int length, int alphabet) {
    if (alphabet > 4 || length > 32)
        throw std::invalid_argument("unpack2 requires alphabet <= 4 and length <= 32");
    std::vector<std::uint8_t> syms(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) syms[i] = static_cast<std::uint8_t>((bits >> (2 * i)) & 3u);
    return Word(std::move(syms), alphabet);
}

}  // namespace shufflelab::words
