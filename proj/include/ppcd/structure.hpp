#pragma once

// Closed-form description of the diagrams that carry connected surfaces of
// genus g >= 3. Such a diagram is pinned down by where its longest chord
// (length 4g-5) sits: a region r and an offset p in [0, g-3] inside it.
//
// Naming: c is the longest chord, c' and c'' the two length-1 chords at the
// junctions r+1/r+2 and r+2/r+3. Every other chord is parallel to exactly one
// of them. The signed offset i = 2p - (g-3) and the pair u = g-2-p, v = p+1
// (u + v = g-1) are the parameters of the connectivity criterion.

#include <optional>
#include <vector>

#include "ppcd/diagram.hpp"

namespace ppcd {

// Counts of chords parallel to c', c and c'' respectively, not counting c,
// c' and c'' themselves. They solve
//   alpha + beta  = g - 2 - i
//   alpha + gamma = g - 3
//   beta  + gamma = g - 2
struct ChordTypeCounts {
    int alpha = 0;
    int beta = 0;
    int gamma = 0;

    friend bool operator==(const ChordTypeCounts&, const ChordTypeCounts&) = default;
};

ChordTypeCounts chord_type_counts(Genus g, int i);

class StructuralLocus {
public:
    StructuralLocus(Genus g, int region, int offset);

    Genus genus() const noexcept { return g_; }
    int region() const noexcept { return region_; }
    int offset() const noexcept { return offset_; }
    int signed_offset() const noexcept { return 2 * offset_ - (g_.value() - 3); }
    int u() const noexcept { return g_.value() - 2 - offset_; }
    int v() const noexcept { return offset_ + 1; }

    friend bool operator==(const StructuralLocus&, const StructuralLocus&) = default;

private:
    Genus g_;
    int region_;
    int offset_;
};

Diagram build_structural(Genus g, int region, int offset);
inline Diagram build_structural(const StructuralLocus& locus) {
    return build_structural(locus.genus(), locus.region(), locus.offset());
}

// All (region, offset) pairs in region-major order; 4(g-2) of them, or
// 4 phi(g-1) when restricted to connected surfaces.
std::vector<StructuralLocus> valid_loci(Genus g, bool connected_only);

struct Landmarks {
    Chord longest;
    Chord c_prime;
    Chord c_double_prime;
    int region;  // region holding both endpoints of the longest chord
};

// The longest chord and the two length-1 chords, when the diagram has
// exactly one of the former, exactly two of the latter, the longest chord
// inside a single region and the short ones at the two junctions that avoid
// it. Otherwise nullopt.
std::optional<Landmarks> find_landmarks(const Diagram& d);

bool is_admissible(const Diagram& d);

enum class ChordType { ParallelToC, ParallelToCPrime, ParallelToCDoublePrime };

ChordType classify_chord(const Diagram& d, Chord c);

}  // namespace ppcd
