#pragma once

#include <span>
#include <string>
#include <vector>

#include "ppcd/diagram.hpp"

namespace ppcd {

struct DualEdge {
    FaceId inner;  // face on the a+1..b-1 side of the chord
    FaceId outer;
    Chord chord;
};

// Rooted tree dual to the complementary faces. Vertices are sorted; edges
// follow the diagram's chord order. The root is the puncture face but is
// otherwise an ordinary vertex.
struct DualTree {
    std::vector<FaceId> vertices;
    std::vector<DualEdge> edges;
    FaceId root;

    int degree(FaceId v) const;
};

DualTree build_dual_tree(const Diagram& d);

// Raw form for fixtures outside the valid genus range: any non-crossing
// perfect matching on `points` boundary points.
DualTree build_dual_tree(int points, std::span<const Chord> chords, int puncture_gap);

int leaf_count(const DualTree& t);

// Chords whose dual edge touches a leaf. Every such chord must have length 1
// or 4g-5; anything else throws LeafLengthViolation.
std::vector<Chord> leaf_chords(const Diagram& d);

std::string to_dot(const DualTree& t);

}  // namespace ppcd
