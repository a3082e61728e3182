#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "ppcd/diagram.hpp"
#include "ppcd/enumeration.hpp"
#include "ppcd/structure.hpp"

using namespace ppcd;

namespace {

Diagram g4_structural() { return build_structural(Genus(4), 0, 0); }

}  // namespace

TEST_CASE("genus derives point, chord and face counts") {
    const Genus g(5);
    CHECK(g.points() == 16);
    CHECK(g.chords() == 8);
    CHECK(g.faces() == 9);
    CHECK_THROWS_AS(Genus(1), Error);
}

TEST_CASE("sphere index reflects at every region boundary") {
    for (int gv = 2; gv <= 8; ++gv) {
        const Genus g(gv);
        for (int p = 0; p < g.points(); ++p) {
            CHECK(sc_index(g, p) >= 1);
            CHECK(sc_index(g, p) <= g.per_region());
        }
        for (int r = 0; r < 4; ++r) {
            const int last = (r + 1) * g.per_region() - 1;
            const int next_first = ((r + 1) % 4) * g.per_region();
            CHECK(sc_index(g, last) == sc_index(g, next_first));
        }
    }
}

TEST_CASE("validate accepts and rejects the basic fixtures") {
    CHECK_NOTHROW(validate(Genus(2), Matching{{0, 1}, {2, 3}}, 1));
    CHECK_NOTHROW(validate(Genus(3), Matching{{0, 1}, {2, 7}, {3, 4}, {5, 6}}, 0));
    for (int gap = 0; gap < 4; ++gap) {
        try {
            validate(Genus(2), Matching{{0, 2}, {1, 3}}, gap);
            FAIL("crossing matching accepted");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::Crossing);
        }
    }
}

TEST_CASE("validate names the violated clause") {
    auto code = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::Schema;
    };
    CHECK(code([] { validate(Genus(2), Matching{{0, 1}}, 0); }) == Errc::NotPerfect);
    CHECK(code([] { validate(Genus(2), Matching{{0, 1}, {1, 3}}, 0); }) == Errc::NotPerfect);
    CHECK(code([] { validate(Genus(2), Matching{{0, 1}, {2, 3}}, 4); }) == Errc::BadGapIndex);
    CHECK(code([] { validate(Genus(2), Matching{{0, 1}, {2, 3}}, -1); }) == Errc::BadGapIndex);
    // (2,3) lies in region 1 and the puncture is elsewhere
    CHECK(code([] { validate(Genus(3), Matching{{0, 1}, {2, 3}, {4, 7}, {5, 6}}, 0); }) == Errc::IntraRegionChord);
}

TEST_CASE("puncture gap is canonicalized to the face minimum") {
    const Diagram d = validate(Genus(2), Matching{{0, 1}, {2, 3}}, 3);
    CHECK(d.puncture_gap() == 1);
}

TEST_CASE("faces agree with the separation rule") {
    const Diagram d = validate(Genus(2), Matching{{0, 1}, {2, 3}}, 1);
    CHECK(face_of_gap(d, 1) == face_of_gap(d, 3));
    CHECK(face_of_gap(d, 1).id == 1);
    CHECK(face_of_gap(d, 0).id == 0);
    CHECK_THROWS_AS(face_of_gap(d, 4), Error);

    CHECK(faces(build_structural(Genus(3), 0, 0)).size() == 5);

    for (int gv = 2; gv <= 5; ++gv) {
        for (const Diagram& e : enumerate_wellformed(Genus(gv))) {
            const auto labels = oracle::face_labels(e.points(), e.chords());
            for (int gap = 0; gap < e.points(); ++gap) {
                REQUIRE(face_of_gap(e, gap).id == labels[static_cast<std::size_t>(gap)]);
            }
            REQUIRE(faces(e).size() == e.chords().size() + 1);
        }
    }
}

TEST_CASE("chord lengths on the genus 4 structural diagram") {
    const Diagram d = g4_structural();
    CHECK(chord_length(d, {0, 1}) == 11);
    CHECK(chord_length(d, {5, 6}) == 1);
    CHECK(chord_length(d, {2, 11}) == 9);
    CHECK_THROWS_AS(chord_length(d, {0, 2}), Error);
}

TEST_CASE("max possible length") {
    CHECK(max_possible_length(Genus(4)) == 11);
    CHECK(max_possible_length(Genus(2)) == 3);
    CHECK(max_possible_length(Genus(3)) == 7);
}

TEST_CASE("distance between base points") {
    CHECK(distance(Genus(3), 0, 1) == 0);
    CHECK(distance(Genus(3), 0, 4) == 3);
    CHECK(distance(Genus(2), 0, 2) == 1);
    CHECK_THROWS_AS(distance(Genus(3), 2, 2), Error);
}

TEST_CASE("parallel chords") {
    const Diagram d = g4_structural();
    CHECK(are_parallel(d, {0, 1}, {2, 11}));
    CHECK_FALSE(are_parallel(d, {0, 1}, {5, 6}));
    for (Chord c : d.chords()) CHECK(are_parallel(d, c, c));
    CHECK_THROWS_AS(are_parallel(d, {0, 1}, {1, 2}), Error);
}

TEST_CASE("intra-region isotopy") {
    CHECK(is_intra_region_isotopic(Genus(3), {2, 3}, 0));
    CHECK_FALSE(is_intra_region_isotopic(Genus(4), {0, 1}, 0));
    CHECK_FALSE(is_intra_region_isotopic(Genus(3), {1, 2}, 0));
}

TEST_CASE("canonical keys") {
    const Diagram d = g4_structural();
    CHECK(canonical_key(d) == canonical_key(d));
    std::set<std::string> keys;
    for (const Diagram& e : enumerate_wellformed(Genus(2))) keys.insert(canonical_key(e));
    CHECK(keys.size() == 6);
    CHECK(canonical_key(build_structural(Genus(3), 0, 0)) != canonical_key(build_structural(Genus(3), 2, 0)));
}

TEST_CASE("invariants over every enumerated diagram") {
    for (int gv = 2; gv <= 6; ++gv) {
        const Genus g(gv);
        for (const Diagram& d : enumerate_wellformed(g)) {
            int maximal = 0;
            for (Chord c : d.chords()) {
                const int len = chord_length(d, c);
                REQUIRE(len % 2 == 1);
                // points on the puncture side of c
                const int puncture_side = encloses_puncture(c, d.puncture_gap()) ? c.b - c.a - 1 : g.points() - (c.b - c.a + 1);
                REQUIRE(len + puncture_side == g.points() - 1);
                if (len == max_possible_length(g)) {
                    ++maximal;
                    REQUIRE(distance(g, c.a, c.b) == 0);
                }
            }
            REQUIRE(maximal <= 1);
            REQUIRE(validate(g, d.chords(), d.puncture_gap()) == d);
        }
    }
}
