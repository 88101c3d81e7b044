#include "shufflelab/objects.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "shufflelab/errors.hpp"
#include "shufflelab/numbers.hpp"

namespace shufflelab::objects {

UDPath UDPath::parse(const std::string& text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
        if (c == 'U' || c == 'u')
            steps.push_back(Step::up);
        else if (c == 'D' || c == 'd')
            steps.push_back(Step::down);
        else
            throw std::invalid_argument("bad path character: " + text);
    }
    return UDPath(std::move(steps));
}

int UDPath::end_height() const {
    int h = 0;
    for (Step s : steps) h += s == Step::up ? 1 : -1;
    return h;
}

bool UDPath::never_below_axis() const {
    int h = 0;
    for (Step s : steps) {
        h += s == Step::up ? 1 : -1;
        if (h < 0) return false;
    }
    return true;
}

bool UDPath::is_dyck() const { return never_below_axis() && end_height() == 0; }

std::string UDPath::str() const {
    std::string out;
    out.reserve(steps.size());
    for (Step s : steps) out.push_back(s == Step::up ? 'U' : 'D');
    return out;
}

namespace {

std::string join_row(const std::vector<int>& row) {
    std::string out;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(row[i]);
    }
    return out;
}

void require_tableau(const std::vector<int>& row_i, const std::vector<int>& row_j) {
    if (row_i.size() < row_j.size())
        throw std::invalid_argument("tableau first row must be at least as long as the second");
    int size = static_cast<int>(row_i.size() + row_j.size());
    std::vector<char> seen(static_cast<std::size_t>(size) + 1, 0);
    auto check_row = [&](const std::vector<int>& row) {
        int prev = 0;
        for (int v : row) {
            if (v < 1 || v > size) throw std::invalid_argument("tableau entry out of range");
            if (v <= prev) throw std::invalid_argument("tableau rows must be strictly increasing");
            if (seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("tableau entries must be distinct");
            seen[static_cast<std::size_t>(v)] = 1;
            prev = v;
        }
    };
    check_row(row_i);
    check_row(row_j);
    for (std::size_t r = 0; r < row_j.size(); ++r)
        if (row_i[r] >= row_j[r])
            throw std::invalid_argument("tableau columns must increase downward");
}

}  // namespace

Tableau::Tableau(std::vector<int> i, std::vector<int> j)
    : row_i(std::move(i)), row_j(std::move(j)) {
    require_tableau(row_i, row_j);
}

std::string Tableau::str() const { return join_row(row_i) + "/" + join_row(row_j); }

Matching::Matching(std::vector<std::pair<int, int>> e) : edges(std::move(e)) {
    for (auto& [a, b] : edges) {
        if (a == b) throw std::invalid_argument("matching edge endpoints must differ");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    int size = vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(size) + 1, 0);
    for (auto [a, b] : edges) {
        if (a < 1 || b > size) throw std::invalid_argument("matching vertex out of range");
        if (seen[static_cast<std::size_t>(a)] || seen[static_cast<std::size_t>(b)])
            throw std::invalid_argument("matching vertices must be covered exactly once");
        seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(b)] = 1;
    }
}

std::string Matching::str() const {
    std::string out;
    for (auto [a, b] : edges) out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return out;
}

Permutation::Permutation(std::vector<int> images) : img(std::move(images)) {
    int size = n();
    std::vector<char> seen(static_cast<std::size_t>(size) + 1, 0);
    for (int v : img) {
        if (v < 1 || v > size || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation of [n]");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> img;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) img.push_back(std::stoi(tok));
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad permutation text: " + text);
            img.push_back(c - '0');
        }
    }
    return Permutation(std::move(img));
}

bool Permutation::avoids_123() const {
    // min value so far, and the least value known to end an ascending pair
    int lowest = std::numeric_limits<int>::max();
    int pair_top = std::numeric_limits<int>::max();
    for (int v : img) {
        if (v > pair_top) return false;
        if (v > lowest) pair_top = std::min(pair_top, v);
        lowest = std::min(lowest, v);
    }
    return true;
}

Permutation Permutation::with_swapped(int i, int j) const {
    if (i < 1 || j < 1 || i > n() || j > n() || i == j)
        throw std::invalid_argument("with_swapped requires distinct positions in [1, n]");
    std::vector<int> images = img;
    std::swap(images[static_cast<std::size_t>(i) - 1], images[static_cast<std::size_t>(j) - 1]);
    return Permutation(std::move(images));
}

std::string Permutation::str() const {
    if (n() <= 9) {
        std::string out;
        for (int v : img) out.push_back(static_cast<char>('0' + v));
        return out;
    }
    return join_row(img);
}

namespace {

std::uint64_t object_cap(std::uint64_t cap) { return cap ? cap : default_generator_cap(); }

void require_count_within(int n, std::uint64_t cap, const char* what) {
    if (numbers::catalan(n) > ExactInt(static_cast<long long>(cap)))
        throw resource_cap_error(std::string(what) + ": object count exceeds cap");
}

void dyck_rec(std::vector<Step>& cur, int ups, int downs, int n, std::vector<UDPath>& out) {
    if (static_cast<int>(cur.size()) == 2 * n) {
        out.emplace_back(cur);
        return;
    }
    if (ups < n) {
        cur.push_back(Step::up);
        dyck_rec(cur, ups + 1, downs, n, out);
        cur.pop_back();
    }
    if (downs < ups) {
        cur.push_back(Step::down);
        dyck_rec(cur, ups, downs + 1, n, out);
        cur.pop_back();
    }
}

struct Av123State {
    int lowest = std::numeric_limits<int>::max();
    int pair_top = std::numeric_limits<int>::max();
};

void av123_rec(std::vector<int>& cur, std::vector<char>& used, Av123State st, int n,
               std::vector<Permutation>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.emplace_back(Permutation(cur));
        return;
    }
    for (int v = 1; v <= n; ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        if (v > st.pair_top) break;  // any larger value also completes a 123
        Av123State next = st;
        if (v > next.lowest) next.pair_top = std::min(next.pair_top, v);
        next.lowest = std::min(next.lowest, v);
        used[static_cast<std::size_t>(v)] = 1;
        cur.push_back(v);
        av123_rec(cur, used, next, n, out);
        cur.pop_back();
        used[static_cast<std::size_t>(v)] = 0;
    }
}

}  // namespace

std::vector<UDPath> gen_dyck_paths(int n, std::uint64_t cap) {
    if (n < 0) throw std::domain_error("gen_dyck_paths requires n >= 0");
    require_count_within(n, object_cap(cap), "gen_dyck_paths");
    std::vector<UDPath> out;
    std::vector<Step> cur;
    cur.reserve(static_cast<std::size_t>(2 * n));
    dyck_rec(cur, 0, 0, n, out);
    return out;
}

std::vector<Permutation> gen_av123(int n, std::uint64_t cap) {
    if (n < 0) throw std::domain_error("gen_av123 requires n >= 0");
    require_count_within(n, object_cap(cap), "gen_av123");
    std::vector<Permutation> out;
    std::vector<int> cur;
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    av123_rec(cur, used, Av123State{}, n, out);
    return out;
}

std::vector<Matching> gen_nonnesting_matchings(int n, std::uint64_t cap) {
    auto paths = gen_dyck_paths(n, cap);
    std::vector<Matching> out;
    out.reserve(paths.size());
    for (const auto& p : paths) out.push_back(tableau_to_matching(dyck_to_tableau(p)));
    return out;
}

Tableau dyck_to_tableau(const UDPath& p) {
    if (!p.is_dyck()) throw std::invalid_argument("dyck_to_tableau requires a Dyck path");
    std::vector<int> row_i, row_j;
    for (int idx = 1; idx <= p.length(); ++idx)
        (p.steps[static_cast<std::size_t>(idx) - 1] == Step::up ? row_i : row_j).push_back(idx);
    return Tableau(std::move(row_i), std::move(row_j));
}

UDPath tableau_to_dyck(const Tableau& t) {
    if (!t.rectangular()) throw std::invalid_argument("tableau_to_dyck requires a rectangular tableau");
    std::vector<Step> steps(static_cast<std::size_t>(t.size()), Step::down);
    for (int idx : t.row_i) steps[static_cast<std::size_t>(idx) - 1] = Step::up;
    UDPath p(std::move(steps));
    if (!p.is_dyck()) throw identity_error("tableau_to_dyck produced a non-Dyck path");
    return p;
}

Matching tableau_to_matching(const Tableau& t) {
    if (!t.rectangular())
        throw std::invalid_argument("tableau_to_matching requires a rectangular tableau");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(t.row_i.size());
    for (std::size_t r = 0; r < t.row_j.size(); ++r) edges.emplace_back(t.row_i[r], t.row_j[r]);
    return Matching(std::move(edges));
}

Tableau matching_to_tableau(const Matching& m) {
    std::vector<int> row_i, row_j;
    row_i.reserve(m.edges.size());
    row_j.reserve(m.edges.size());
    for (auto [a, b] : m.edges) {  // already sorted by smaller endpoint
        row_i.push_back(a);
        row_j.push_back(b);
    }
    return Tableau(std::move(row_i), std::move(row_j));
}

std::vector<int> valleys(const UDPath& p) {
    if (!p.is_dyck()) throw std::invalid_argument("valleys requires a Dyck path");
    std::vector<int> out;
    for (int b = 1; b + 1 <= p.length(); ++b)
        if (p.steps[static_cast<std::size_t>(b) - 1] == Step::down &&
            p.steps[static_cast<std::size_t>(b)] == Step::up)
            out.push_back(b);
    return out;
}

std::pair<Matching, Matching> valley_pair(const UDPath& p, int b) {
    auto vs = valleys(p);
    if (std::find(vs.begin(), vs.end(), b) == vs.end())
        throw std::invalid_argument("valley_pair: index is not a valley of the path");
    Tableau t1 = dyck_to_tableau(p);
    std::vector<int> row_i, row_j;
    for (int v : t1.row_i) row_i.push_back(v == b + 1 ? b : v);
    for (int v : t1.row_j) row_j.push_back(v == b ? b + 1 : v);
    std::sort(row_i.begin(), row_i.end());
    std::sort(row_j.begin(), row_j.end());
    Matching m1 = tableau_to_matching(t1);
    Matching m2 = tableau_to_matching(Tableau(std::move(row_i), std::move(row_j)));
    if (m1 == m2) throw identity_error("valley_pair produced identical matchings");
    std::array<Matching, 2> both{m1, m2};
    if (components_of_union(both) != static_cast<int>(m1.edges.size()) - 1)
        throw identity_error("valley_pair union does not have n - 1 components");
    return {std::move(m1), std::move(m2)};
}

Matching perm_to_matching(const Permutation& pi) {
    int n = pi.n();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) edges.emplace_back(i, n + pi(i));
    return Matching(std::move(edges));
}

bool is_nonnesting(const Matching& m) {
    for (std::size_t x = 0; x < m.edges.size(); ++x)
        for (std::size_t y = 0; y < m.edges.size(); ++y) {
            if (x == y) continue;
            auto [i, j] = m.edges[x];
            auto [i2, j2] = m.edges[y];
            if (i < i2 && i2 < j2 && j2 < j) return false;
        }
    return true;
}

bool is_precedence_free(const Matching& m) {
    for (std::size_t x = 0; x < m.edges.size(); ++x)
        for (std::size_t y = 0; y < m.edges.size(); ++y) {
            if (x == y) continue;
            auto [i1, j1] = m.edges[x];
            auto [i2, j2] = m.edges[y];
            if (j1 < i2) return false;
        }
    return true;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

}  // namespace

int components_of_union(std::span<const Matching> ms) {
    if (ms.empty()) throw std::invalid_argument("components_of_union requires at least one matching");
    int vertices = ms.front().vertex_count();
    for (const auto& m : ms)
        if (m.vertex_count() != vertices)
            throw std::invalid_argument("components_of_union requires a shared vertex set");
    Dsu dsu(vertices);
    int comps = vertices;
    for (const auto& m : ms)
        for (auto [a, b] : m.edges)
            if (dsu.unite(a - 1, b - 1)) --comps;
    return comps;
}

namespace {

// type bitmask allowed for a third point in sector (x, y); bit t-1 = type t
constexpr std::array<std::array<unsigned, 3>, 3> kSectorTypes = {{
    // y = 0 (below pi(i)), y = 1 (between), y = 2 (above pi(j))
    {{0u, 0b0101u, 0b1111u}},  // x = 0: left of i
    {{0b1001u, 0u, 0b1010u}},  // x = 1: between i and j
    {{0b1111u, 0b0110u, 0u}},  // x = 2: right of j
}};

unsigned classify_mask(const Permutation& pi, int i, int j) {
    unsigned mask = 0b1111u;
    int vi = pi(i), vj = pi(j);
    for (int p = 1; p <= pi.n() && mask; ++p) {
        if (p == i || p == j) continue;
        int v = pi(p);
        int x = p < i ? 0 : (p < j ? 1 : 2);
        int y = v < vi ? 0 : (v < vj ? 1 : 2);
        mask &= kSectorTypes[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    }
    return mask;
}

}  // namespace

std::set<int> classify_types(const Permutation& pi, int i, int j) {
    if (i < 1 || j > pi.n() || i >= j) throw std::invalid_argument("classify_types requires 1 <= i < j <= n");
    if (pi(i) >= pi(j)) throw std::invalid_argument("classify_types requires pi(i) < pi(j)");
    if (!pi.avoids_123() || !pi.with_swapped(i, j).avoids_123())
        throw std::invalid_argument("classify_types requires both permutations to avoid 123");
    unsigned mask = classify_mask(pi, i, j);
    std::set<int> out;
    for (int t = 1; t <= 4; ++t)
        if (mask & (1u << (t - 1))) out.insert(t);
    return out;
}

namespace {

template <typename Fn>
void for_each_swappable_ascent(int n, std::uint64_t cap, Fn&& fn) {
    if (n < 2) throw std::domain_error("pair enumeration requires n >= 2");
    ExactInt cn = numbers::catalan(n);
    if (cn * cn > ExactInt(static_cast<long long>(object_cap(cap))))
        throw resource_cap_error("pair enumeration: C_n^2 exceeds cap");
    for (const auto& pi : gen_av123(n, cap)) {
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                if (pi(i) >= pi(j)) continue;
                if (!pi.with_swapped(i, j).avoids_123()) continue;
                fn(pi, i, j);
            }
    }
}

}  // namespace

TypeCountTable type_count_table(int n, std::uint64_t cap) {
    TypeCountTable table;
    table.n = n;
    table.union_size = 0;
    for (auto& v : table.intersections) v = 0;
    for_each_swappable_ascent(n, cap, [&](const Permutation& pi, int i, int j) {
        unsigned mask = classify_mask(pi, i, j);
        if (mask == 0)
            throw identity_error("a swappable ascent belongs to no type: " + pi.str() + " (" +
                                 std::to_string(i) + " " + std::to_string(j) + ")");
        table.union_size += 1;
        for (unsigned sub = 1; sub < 16; ++sub)
            if ((mask & sub) == sub) table.intersections[sub] += 1;
    });

    auto check = [&](unsigned mask, ExactInt expect, const char* label) {
        if (table.intersections[mask] != expect)
            throw identity_error(std::string("type_count_table: ") + label + " mismatch at n=" +
                                 std::to_string(n) + ": counted " +
                                 table.intersections[mask].str() + ", closed form " + expect.str());
    };
    ExactInt cn = numbers::catalan(n);
    ExactInt cn1 = numbers::catalan(n + 1);
    ExactInt cnm1 = numbers::catalan(n - 1);
    ExactInt an = numbers::a_n(n);
    check(0b0001, cn1 - ExactInt(2) * cn, "|P1|");
    check(0b0010, cn1 - ExactInt(2) * cn, "|P2|");
    check(0b0100, an, "|P3|");
    check(0b1000, an, "|P4|");
    check(0b0011, cnm1, "|P1 ^ P2|");
    check(0b1100, cnm1, "|P3 ^ P4|");
    for (unsigned mask : {0b0101u, 0b1001u, 0b0110u, 0b1010u}) check(mask, cn - cnm1, "mixed pair");
    for (unsigned mask : {0b0111u, 0b1011u, 0b1101u, 0b1110u}) check(mask, cnm1, "triple");
    check(0b1111, cnm1, "quadruple");
    if (table.union_size != numbers::b_n(n))
        throw identity_error("type_count_table: union differs from B_n at n=" + std::to_string(n));
    return table;
}

ExactInt transposition_pair_count(int n, std::uint64_t cap) {
    ExactInt count = 0;
    for_each_swappable_ascent(n, cap, [&](const Permutation&, int, int) { count += 1; });
    return count;
}

}  // namespace shufflelab::objects
