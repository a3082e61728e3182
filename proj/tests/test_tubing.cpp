#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "ppcd/enumeration.hpp"
#include "ppcd/pairings.hpp"
#include "ppcd/structure.hpp"
#include "ppcd/tubing.hpp"

using namespace ppcd;

TEST_CASE("the longest chord is the innermost tube") {
    const Diagram d = build_structural(Genus(3), 0, 0);
    const TubingDescription t = build_tubing(d, 0);
    const auto deepest = std::max_element(t.tubes.begin(), t.tubes.end(),
                                          [](const Tube& x, const Tube& y) { return x.depth < y.depth; });
    CHECK(deepest->chord == Chord{0, 1});
    CHECK(deepest->depth == 3);
}

TEST_CASE("the two sphere choices differ only in the tag") {
    const Diagram d = build_structural(Genus(5), 2, 1);
    TubingDescription a = build_tubing(d, 0);
    const TubingDescription b = build_tubing(d, 1);
    CHECK(a != b);
    a.sc_choice = 1;
    CHECK(a == b);
    CHECK_THROWS_AS(build_tubing(d, 2), Error);
}

TEST_CASE("tube and sphere counts") {
    const TubingDescription t = build_tubing(build_structural(Genus(4), 0, 0), 0);
    CHECK(t.tubes.size() == 6);
    CHECK(t.spheres == std::vector<int>{1, 2, 3});
}

TEST_CASE("tube ends and depths over all diagrams") {
    for (int gv = 2; gv <= 6; ++gv) {
        const Genus g(gv);
        for (const Diagram& d : enumerate_wellformed(g)) {
            const TubingDescription t = build_tubing(d, 0);
            std::vector<int> uses(static_cast<std::size_t>(g.per_region() + 1), 0);
            std::vector<int> depths;
            DisjointSets sets(g.per_region() + 1);
            for (const Tube& tube : t.tubes) {
                for (const TubeEnd& end : {tube.from, tube.to}) {
                    REQUIRE(end.arc >= 0);
                    REQUIRE(end.arc <= 3);
                    ++uses[static_cast<std::size_t>(end.sphere)];
                }
                REQUIRE(tube.from.sphere == sc_index(g, tube.chord.a));
                REQUIRE(tube.to.sphere == sc_index(g, tube.chord.b));
                sets.unite(tube.from.sphere, tube.to.sphere);
                depths.push_back(tube.depth);
            }
            // four punctures per sphere, each used once
            for (int s = 1; s <= g.per_region(); ++s) REQUIRE(uses[static_cast<std::size_t>(s)] == 4);
            std::sort(depths.begin(), depths.end());
            std::vector<int> expected(depths.size());
            std::iota(expected.begin(), expected.end(), 0);
            REQUIRE(depths == expected);
            for (const Tube& x : t.tubes) {
                for (const Tube& y : t.tubes) {
                    if (chord_length(d, x.chord) > chord_length(d, y.chord)) REQUIRE(x.depth > y.depth);
                }
            }
            std::set<int> roots;
            for (int s = 1; s <= g.per_region(); ++s) roots.insert(sets.find(s));
            REQUIRE(roots.size() == sc_components(d).count());
        }
    }
}

TEST_CASE("component genera") {
    CHECK(component_genera(build_structural(Genus(4), 0, 0)) == std::vector<int>{4});
    CHECK(component_genera(validate(Genus(3), Matching{{0, 3}, {1, 2}, {4, 7}, {5, 6}}, 1)) == std::vector<int>{2, 2});
    for (const Diagram& d : enumerate_wellformed(Genus(2))) CHECK(component_genera(d) == std::vector<int>{2});
}

TEST_CASE("genera add up and detect connectivity") {
    for (int gv = 2; gv <= 6; ++gv) {
        for (const Diagram& d : enumerate_wellformed(Genus(gv))) {
            const auto genera = component_genera(d);
            int total = 0;
            for (int h : genera) total += h - 1;
            REQUIRE(total == gv - 1);
            REQUIRE(is_connected(d) == (genera == std::vector<int>{gv}));
        }
    }
}
