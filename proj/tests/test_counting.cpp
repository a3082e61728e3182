#include "doctest.h"
#include "oracles.hpp"
#include "ppcd/counting.hpp"
#include "ppcd/enumeration.hpp"

using namespace ppcd;

TEST_CASE("surface counts") {
    CHECK(surface_count(Genus(2)) == 12);
    CHECK(surface_count(Genus(7)) == 16);
    CHECK(surface_count(Genus(12)) == 80);
    const KnotSpec pretzel{{{1, 4}, {1, 3}, {1, 3}, {1, 3}}};
    CHECK(surface_count(pretzel, Genus(5)) == 16);
    CHECK_THROWS_AS(surface_count(KnotSpec{{{1, 4}, {1, 3}, {1, 3}}}, Genus(3)), Error);
    CHECK_THROWS_AS(surface_count(KnotSpec{{{1, 4}, {1, 2}, {1, 3}, {1, 3}}}, Genus(3)), Error);
}

TEST_CASE("totient") {
    CHECK(euler_totient(1) == 1);
    CHECK(euler_totient(4) == 2);
    CHECK(euler_totient(19) == 18);
    CHECK_THROWS_AS(euler_totient(0), Error);
    for (std::int64_t n = 1; n <= 10000; ++n) REQUIRE(euler_totient(n) == oracle::totient_scan(n));
}

TEST_CASE("sphere curve counts") {
    CHECK(sc_curve_count(4) == 2);
    CHECK(sc_curve_count(5) == 5);
    CHECK(sc_curve_count(6) == 9);
    CHECK_THROWS_AS(sc_curve_count(3), Error);
}

TEST_CASE("spheres and Euler characteristic") {
    CHECK(spheres_for_genus(Genus(2)) == 1);
    CHECK(spheres_for_genus(Genus(5)) == 4);
    CHECK(euler_char(3) == -6);
    CHECK(2 - 2 * 4 == euler_char(3));
}

TEST_CASE("generating function expansion") {
    const auto c = gf_expand(bm_generating_function(), 30);
    CHECK(c[0] == 0);
    CHECK(c[1] == 12);
    CHECK(c[2] == 38);
    CHECK(c[2] == 12 * 4 - 10 * 1);
    CHECK(c == oracle::over_one_minus_x_fourth({0, 12, -10, 8, -2}, 30));
    for (std::size_t k = 5; k < c.size(); ++k) REQUIRE(c[k] == 4 * c[k - 1] - 6 * c[k - 2] + 4 * c[k - 3] - c[k - 4]);

    const auto q = gf_expand_rational(bm_generating_function(), 10);
    for (std::size_t k = 0; k < q.size(); ++k) CHECK(static_cast<bool>(q[k] == boost::rational<std::int64_t>(c[k])));

    const RationalGF half{{1}, {2, -1}};  // 1/(2-x) = sum x^k / 2^(k+1)
    CHECK_THROWS_AS(gf_expand(half, 3), Error);
    const auto h = gf_expand_rational(half, 4);
    CHECK(static_cast<bool>(h[3] == boost::rational<std::int64_t>(1, 16)));
    CHECK_THROWS_AS(gf_expand_rational(RationalGF{{1}, {0, 1}}, 3), Error);
}

TEST_CASE("sequence report") {
    const CountReport full = sequence_report(21);
    REQUIRE(full.rows.size() == 20);
    for (const CountRow& row : full.rows) {
        CHECK(row.published_match);
        CHECK(row.published.has_value());
    }
    CHECK(full.consistent());
    CHECK(full.rows[0].bm_match);
    CHECK_FALSE(full.rows[1].bm_match);

    const CountReport small = sequence_report(6, 6);
    for (const CountRow& row : small.rows) {
        REQUIRE(row.enumerated.has_value());
        CHECK(*row.enumerated == row.closed_form);
    }

    const CountReport one = sequence_report(2);
    REQUIRE(one.rows.size() == 1);
    CHECK(one.rows[0].closed_form == 12);
    CHECK(one.rows[0].published == 12);
    CHECK_FALSE(one.rows[0].enumerated.has_value());
}

TEST_CASE("twice the connected diagrams is the closed form") {
    for (int gv = 2; gv <= 6; ++gv) {
        CHECK(2 * static_cast<std::int64_t>(enumerate_connected(Genus(gv)).size()) == surface_count(Genus(gv)));
    }
}
