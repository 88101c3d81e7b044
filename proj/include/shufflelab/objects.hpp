#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shufflelab/exact_int.hpp"

namespace shufflelab::objects {

enum class Step : std::uint8_t { up, down };

// A lattice path of unit up/down steps. A Dyck path additionally never goes
// below the x-axis and ends on it.
struct UDPath {
    std::vector<Step> steps;

    UDPath() = default;
    explicit UDPath(std::vector<Step> s) : steps(std::move(s)) {}
    static UDPath parse(const std::string& text);  // e.g. "UUDD"

    int length() const { return static_cast<int>(steps.size()); }
    int end_height() const;
    bool never_below_axis() const;
    bool is_dyck() const;
    std::string str() const;

    bool operator==(const UDPath&) const = default;
    bool operator<(const UDPath& o) const { return steps < o.steps; }
};

// Two-row standard Young tableau over [|I| + |J|]: both rows strictly
// increasing, disjoint, covering 1..size, |I| >= |J|, and I[r] < J[r]
// columnwise.
struct Tableau {
    std::vector<int> row_i, row_j;

    Tableau() = default;
    Tableau(std::vector<int> i, std::vector<int> j);  // validates

    int size() const { return static_cast<int>(row_i.size() + row_j.size()); }
    bool rectangular() const { return row_i.size() == row_j.size(); }
    std::string str() const;  // "1,2,5/3,4,6"

    bool operator==(const Tableau&) const = default;
};

// Perfect matching on [2n]: n pairwise disjoint edges covering every vertex.
struct Matching {
    std::vector<std::pair<int, int>> edges;  // each (a, b) with a < b, sorted by a

    Matching() = default;
    explicit Matching(std::vector<std::pair<int, int>> e);  // normalizes + validates

    int vertex_count() const { return 2 * static_cast<int>(edges.size()); }
    std::string str() const;  // "(1,3)(2,4)"

    bool operator==(const Matching&) const = default;
    bool operator<(const Matching& o) const { return edges < o.edges; }
};

// Permutation of [n] in one-line notation; img[i] = pi(i + 1).
struct Permutation {
    std::vector<int> img;

    Permutation() = default;
    explicit Permutation(std::vector<int> images);  // validates
    static Permutation parse(const std::string& text);  // "132" or "1,3,2"

    int n() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[static_cast<std::size_t>(i) - 1]; }
    // contains no i1 < i2 < i3 with pi(i1) < pi(i2) < pi(i3)
    bool avoids_123() const;
    Permutation with_swapped(int i, int j) const;  // pi composed with (i j)
    std::string str() const;

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return img < o.img; }
};

// All Dyck paths of semilength n in lexicographic step order (up < down),
// refused when C_n exceeds the cap.
std::vector<UDPath> gen_dyck_paths(int n, std::uint64_t cap = 0);

// All 123-avoiding permutations of [n] in lexicographic one-line order.
std::vector<Permutation> gen_av123(int n, std::uint64_t cap = 0);

// All non-nesting perfect matchings on [2n] (images of the Dyck paths).
std::vector<Matching> gen_nonnesting_matchings(int n, std::uint64_t cap = 0);

// Up-step indices into I, down-step indices into J. Rejects non-Dyck input.
Tableau dyck_to_tableau(const UDPath& p);
UDPath tableau_to_dyck(const Tableau& t);

// Columns of a rectangular tableau as matching edges, and back.
Matching tableau_to_matching(const Tableau& t);
Tableau matching_to_tableau(const Matching& m);

// 1-based indices b with step b = down and step b+1 = up.
std::vector<int> valleys(const UDPath& p);

// The matching of p's tableau paired with the matching of the tableau that
// swaps b and b+1 between the rows. Requires b to be a valley of p; the two
// matchings are distinct, non-nesting, and their union has n - 1 components.
std::pair<Matching, Matching> valley_pair(const UDPath& p, int b);

// m(pi): edges (i, n + pi(i)) on [2n].
Matching perm_to_matching(const Permutation& pi);

// No two edges (i, j), (i', j') with i < i' < j' < j.
bool is_nonnesting(const Matching& m);

// No edge entirely before another: no (i1, j1), (i2, j2) with
// i1 < j1 < i2 < j2.
bool is_precedence_free(const Matching& m);

// Connected components of the edge union; all matchings must share one
// vertex set.
int components_of_union(std::span<const Matching> ms);

// Sector classification of a swappable ascent. Requires i < j,
// pi(i) < pi(j), and both pi and pi o (i j) 123-avoiding. Returns the set
// of types t in {1,2,3,4} whose allowed-sector constraint holds for every
// third point. Allowed sectors, in the 3x3 grid cut by the lines through
// (i, pi(i)) and (j, pi(j)):
//   type 1: s01 s02 s10 s20     type 2: s02 s12 s21 s20
//   type 3: s01 s02 s21 s20     type 4: s02 s12 s10 s20
std::set<int> classify_types(const Permutation& pi, int i, int j);

// Exhaustive classification of all swappable ascents at size n: the size of
// every nonempty intersection of the four type classes (indexed by bitmask,
// bit t-1 for type t) plus the union. Each entry is checked against its
// closed form and the union against B_n.
struct TypeCountTable {
    int n = 0;
    std::array<ExactInt, 16> intersections{};  // [mask], mask = 1..15
    ExactInt union_size;
};

TypeCountTable type_count_table(int n, std::uint64_t cap = 0);

// Number of unordered pairs of distinct 123-avoiding permutations of [n]
// differing by one transposition, counted by direct enumeration.
ExactInt transposition_pair_count(int n, std::uint64_t cap = 0);

}  // namespace shufflelab::objects
