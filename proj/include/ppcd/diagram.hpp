#pragma once

// Punctured partitioned chord diagrams.
//
// A diagram of genus g has N = 4(g-1) base points 0..N-1 placed in cyclic
// order on the boundary circle. Region r holds the contiguous block
// [r(g-1), (r+1)(g-1)). The chords form a non-crossing perfect matching and
// the puncture sits in one complementary face, recorded by a boundary gap:
// gap k lies between points k and (k+1) mod N.

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "ppcd/error.hpp"

namespace ppcd {

class Genus {
public:
    explicit Genus(int g);

    int value() const noexcept { return g_; }
    int per_region() const noexcept { return g_ - 1; }
    int points() const noexcept { return 4 * (g_ - 1); }
    int chords() const noexcept { return 2 * (g_ - 1); }
    int faces() const noexcept { return 2 * g_ - 1; }

    friend auto operator<=>(const Genus&, const Genus&) = default;

private:
    int g_;
};

int region_of(Genus g, int point);
int slot_of(Genus g, int point);

// Index of the 4-punctured sphere a base point lies on, in [1, g-1].
// Even regions ascend and odd regions descend, so the last point of a region
// and the first point of the next one share a sphere.
int sc_index(Genus g, int point);

struct Chord {
    int a = 0;
    int b = 0;

    friend auto operator<=>(const Chord&, const Chord&) = default;
};

// Orders the endpoints so that a < b.
Chord make_chord(int x, int y);

using Matching = std::vector<Chord>;

struct FaceId {
    int id = 0;
    friend auto operator<=>(const FaceId&, const FaceId&) = default;
};

class Diagram {
public:
    Genus genus() const noexcept { return genus_; }
    int points() const noexcept { return genus_.points(); }
    const Matching& chords() const noexcept { return chords_; }
    int puncture_gap() const noexcept { return gap_; }
    int partner(int point) const { return partner_.at(static_cast<std::size_t>(point)); }
    bool contains(Chord c) const;

    friend bool operator==(const Diagram& x, const Diagram& y) {
        return x.genus_ == y.genus_ && x.gap_ == y.gap_ && x.chords_ == y.chords_;
    }

private:
    Diagram(Genus g, Matching chords, std::vector<int> partner, int gap)
        : genus_(g), chords_(std::move(chords)), partner_(std::move(partner)), gap_(gap) {}

    friend Diagram validate(Genus g, std::span<const Chord> m, int puncture_gap);

    Genus genus_;
    Matching chords_;  // sorted by a
    std::vector<int> partner_;
    int gap_;          // minimal gap of the puncture face
};

// Checks every clause of the definition and returns the diagram with its
// puncture gap canonicalized. Throws NotPerfect, Crossing, BadGapIndex or
// IntraRegionChord naming the violated clause.
Diagram validate(Genus g, std::span<const Chord> m, int puncture_gap);

FaceId face_of_gap(const Diagram& d, int gap);
std::vector<FaceId> faces(const Diagram& d);

// True when the puncture lies on the side of c spanned by points a+1..b-1.
bool encloses_puncture(Chord c, int puncture_gap);

// Base points strictly on the side of c away from the puncture, plus one.
int chord_length(const Diagram& d, Chord c);
int max_possible_length(Genus g);

int distance(Genus g, int b1, int b2);
bool are_parallel(const Diagram& d, Chord c1, Chord c2);

// Both endpoints in one region R, and every point on the puncture-free side
// of c also in R. Works on unvalidated candidates.
bool is_intra_region_isotopic(Genus g, Chord c, int puncture_gap);

// Deterministic text key "g;a-b,a-b,...;gap". Region labels are not quotiented.
std::string canonical_key(const Diagram& d);

}  // namespace ppcd
