#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "ppcd/enumeration.hpp"
#include "ppcd/pairings.hpp"
#include "ppcd/structure.hpp"

using namespace ppcd;

TEST_CASE("pairings map increasing or decreasing") {
    const Pairing up({1, 3}, {4, 6}, Orientation::Preserving);
    const Pairing down({1, 3}, {4, 6}, Orientation::Reversing);
    CHECK(up(1) == 4);
    CHECK(up(3) == 6);
    CHECK(down(1) == 6);
    CHECK(down(3) == 4);
    CHECK(down.inverse()(6) == 1);
    CHECK_THROWS_AS(up(4), Error);
    CHECK_THROWS_AS(Pairing({1, 2}, {1, 3}, Orientation::Preserving), Error);
}

TEST_CASE("orbits of the empty pseudogroup are singletons") {
    const OrbitPartition p = orbits({}, 4);
    CHECK(p.count() == 4);
}

TEST_CASE("reflection pairings give gcd(u, v) orbits") {
    CHECK(orbits(reflection_pairings(1, 2), 6).count() == 1);
    CHECK(orbits(reflection_pairings(2, 2), 8).count() == 2);
    for (int u = 1; u <= 30; ++u) {
        for (int v = 1; v <= 30; ++v) {
            REQUIRE(orbits(reflection_pairings(u, v), 2 * (u + v)).count() == static_cast<std::size_t>(std::gcd(u, v)));
        }
    }
}

TEST_CASE("orbits reject intervals outside the ground set") {
    const std::vector<Pairing> bad{Pairing({1, 2}, {4, 5}, Orientation::Preserving)};
    CHECK_THROWS_AS(orbits(bad, 4), Error);
}

TEST_CASE("adding inverses does not change the orbits") {
    auto ps = reflection_pairings(3, 5);
    const OrbitPartition before = orbits(ps, 16);
    const std::size_t n = ps.size();
    for (std::size_t i = 0; i < n; ++i) ps.push_back(ps[i].inverse());
    ps.emplace_back(Interval{2, 3}, Interval{6, 7}, Orientation::Preserving);
    ps.push_back(ps.back().inverse());
    auto extra = reflection_pairings(3, 5);
    extra.emplace_back(Interval{2, 3}, Interval{6, 7}, Orientation::Preserving);
    CHECK(orbits(ps, 16) == orbits(extra, 16));
    CHECK(before.count() == 1);
}

TEST_CASE("sphere components") {
    const OrbitPartition one = sc_components(build_structural(Genus(4), 0, 0));
    CHECK(one.classes == std::vector<std::vector<int>>{{1, 2, 3}});

    const Diagram split = validate(Genus(3), Matching{{0, 3}, {1, 2}, {4, 7}, {5, 6}}, 1);
    CHECK(sc_components(split).classes == std::vector<std::vector<int>>{{1}, {2}});
    CHECK_FALSE(is_connected(split));
    CHECK(is_connected(build_structural(Genus(4), 0, 0)));
    for (const Diagram& d : enumerate_wellformed(Genus(2))) CHECK(sc_components(d).count() == 1);
}

TEST_CASE("component count agrees with graph search") {
    for (int gv = 2; gv <= 6; ++gv) {
        for (const Diagram& d : enumerate_wellformed(Genus(gv))) {
            REQUIRE(static_cast<int>(sc_components(d).count()) == oracle::sphere_components(d));
        }
    }
}

TEST_CASE("offset criterion") {
    CHECK(gcd_connected(Genus(4), 0));
    CHECK_FALSE(gcd_connected(Genus(5), 1));
    CHECK(gcd_connected(Genus(3), 0));
    CHECK_THROWS_AS(gcd_connected(Genus(4), 2), Error);
    CHECK_THROWS_AS(gcd_connected(Genus(4), -1), Error);
    CHECK_THROWS_AS(gcd_connected(Genus(2), 0), Error);
}

TEST_CASE("offset criterion matches union-find on the explicit diagrams") {
    for (int gv = 3; gv <= 30; ++gv) {
        const Genus g(gv);
        for (int r = 0; r < 4; ++r) {
            for (int p = 0; p <= gv - 3; ++p) REQUIRE(gcd_connected(g, p) == is_connected(build_structural(g, r, p)));
        }
    }
}
