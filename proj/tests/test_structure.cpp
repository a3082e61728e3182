#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "ppcd/dual_tree.hpp"
#include "ppcd/pairings.hpp"
#include "ppcd/structure.hpp"

using namespace ppcd;

namespace {

Matching sorted(Matching m) {
    for (Chord& c : m) c = make_chord(c.a, c.b);
    std::sort(m.begin(), m.end());
    return m;
}

}  // namespace

TEST_CASE("chord type counts by substitution") {
    CHECK(chord_type_counts(Genus(4), -1) == ChordTypeCounts{1, 2, 0});
    CHECK(chord_type_counts(Genus(5), 0) == ChordTypeCounts{1, 2, 1});
    CHECK(chord_type_counts(Genus(3), 0) == ChordTypeCounts{0, 1, 0});
    CHECK_THROWS_AS(chord_type_counts(Genus(4), 0), Error);
    CHECK_THROWS_AS(chord_type_counts(Genus(4), 3), Error);
}

TEST_CASE("chord type counts solve the linear system") {
    for (int gv = 3; gv <= 50; ++gv) {
        for (int i = -(gv - 3); i <= gv - 3; i += 2) {
            const ChordTypeCounts c = chord_type_counts(Genus(gv), i);
            REQUIRE(c.alpha >= 0);
            REQUIRE(c.beta >= 0);
            REQUIRE(c.gamma >= 0);
            REQUIRE(c.alpha + c.beta == gv - 2 - i);
            REQUIRE(c.alpha + c.gamma == gv - 3);
            REQUIRE(c.beta + c.gamma == gv - 2);
        }
    }
}

TEST_CASE("structural diagrams for small cases") {
    const Diagram a = build_structural(Genus(3), 0, 0);
    CHECK(a.chords() == Matching{{0, 1}, {2, 7}, {3, 4}, {5, 6}});
    CHECK(a.puncture_gap() == 0);

    const Diagram b = build_structural(Genus(4), 0, 0);
    CHECK(b.chords() == sorted({{0, 1}, {11, 2}, {10, 3}, {5, 6}, {8, 9}, {4, 7}}));
    CHECK(b.puncture_gap() == 0);

    const Diagram c = build_structural(Genus(3), 2, 0);
    CHECK(c.chords() == sorted({{4, 5}, {6, 3}, {7, 0}, {1, 2}}));
    CHECK(c.puncture_gap() == 4);

    CHECK_THROWS_AS(build_structural(Genus(4), 0, 2), Error);
    CHECK_THROWS_AS(build_structural(Genus(4), 4, 0), Error);
}

TEST_CASE("loci counts") {
    CHECK(valid_loci(Genus(3), true).size() == 4);
    CHECK(valid_loci(Genus(5), true).size() == 8);
    CHECK(valid_loci(Genus(3), false).size() == 4);
    for (int gv = 3; gv <= 200; ++gv) {
        REQUIRE(valid_loci(Genus(gv), false).size() == static_cast<std::size_t>(4 * (gv - 2)));
        REQUIRE(static_cast<std::int64_t>(valid_loci(Genus(gv), true).size()) == 4 * oracle::totient_scan(gv - 1));
    }
}

TEST_CASE("admissibility") {
    CHECK(is_admissible(build_structural(Genus(4), 0, 0)));
    CHECK_FALSE(is_admissible(validate(Genus(3), Matching{{0, 3}, {1, 2}, {4, 7}, {5, 6}}, 1)));
    for (int gap = 0; gap < 8; ++gap) {
        try {
            CHECK_FALSE(is_admissible(validate(Genus(3), Matching{{0, 7}, {1, 2}, {3, 4}, {5, 6}}, gap)));
        } catch (const Error&) {
        }
    }
    CHECK_THROWS_AS(is_admissible(validate(Genus(2), Matching{{0, 1}, {2, 3}}, 1)), Error);
}

TEST_CASE("structural output is valid, and admissible exactly when connected") {
    for (int gv = 3; gv <= 20; ++gv) {
        const Genus g(gv);
        for (const StructuralLocus& l : valid_loci(g, false)) {
            const Diagram d = build_structural(l);
            REQUIRE(find_landmarks(d).has_value());
            REQUIRE(leaf_count(build_dual_tree(d)) == 3);
            int longest = 0;
            int unit = 0;
            for (Chord c : d.chords()) {
                longest += chord_length(d, c) == max_possible_length(g);
                unit += chord_length(d, c) == 1;
            }
            REQUIRE(longest == 1);
            REQUIRE(unit == 2);
            REQUIRE(is_admissible(d) == gcd_connected(g, l.offset()));
        }
    }
}

TEST_CASE("distinct loci give distinct diagrams") {
    for (int gv = 3; gv <= 20; ++gv) {
        std::set<std::string> keys;
        for (const StructuralLocus& l : valid_loci(Genus(gv), false)) keys.insert(canonical_key(build_structural(l)));
        REQUIRE(keys.size() == static_cast<std::size_t>(4 * (gv - 2)));
    }
}

TEST_CASE("chord classification") {
    const Diagram d = build_structural(Genus(4), 0, 0);
    CHECK(classify_chord(d, {2, 11}) == ChordType::ParallelToC);
    CHECK(classify_chord(d, {4, 7}) == ChordType::ParallelToCPrime);
    std::map<ChordType, int> sizes;
    for (Chord c : d.chords()) ++sizes[classify_chord(d, c)];
    CHECK(sizes[ChordType::ParallelToC] == 3);
    CHECK(sizes[ChordType::ParallelToCPrime] == 2);
    CHECK(sizes[ChordType::ParallelToCDoublePrime] == 1);

    CHECK_THROWS_AS(classify_chord(validate(Genus(3), Matching{{0, 3}, {1, 2}, {4, 7}, {5, 6}}, 1), {0, 3}), Error);
}

TEST_CASE("class sizes follow the signed offset") {
    for (int gv = 3; gv <= 20; ++gv) {
        for (const StructuralLocus& l : valid_loci(Genus(gv), false)) {
            const Diagram d = build_structural(l);
            std::map<ChordType, int> sizes;
            for (Chord c : d.chords()) ++sizes[classify_chord(d, c)];
            const int i = l.signed_offset();
            REQUIRE(sizes[ChordType::ParallelToC] == gv - 1);
            REQUIRE(sizes[ChordType::ParallelToCPrime] == (gv - 1 - i) / 2);
            REQUIRE(sizes[ChordType::ParallelToCDoublePrime] == (gv - 1 + i) / 2);
        }
    }
}
