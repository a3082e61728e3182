#pragma once

// Tubing descriptions: the g-1 spheres plus one tube per chord joining the
// two punctures its endpoints stand for.

#include <vector>

#include "ppcd/diagram.hpp"

namespace ppcd {

struct TubeEnd {
    int sphere = 1;  // sc_index of the base point, 1 = innermost
    int arc = 0;     // region of the base point

    friend bool operator==(const TubeEnd&, const TubeEnd&) = default;
};

struct Tube {
    Chord chord;
    TubeEnd from;  // endpoint a
    TubeEnd to;    // endpoint b
    int depth = 0;  // larger is further in

    friend bool operator==(const Tube&, const Tube&) = default;
};

struct TubingDescription {
    int sc_choice = 0;  // which of the two 4-punctured spheres, 0 or 1
    std::vector<int> spheres;
    std::vector<Tube> tubes;  // in chord order

    friend bool operator==(const TubingDescription&, const TubingDescription&) = default;
};

// Depths come from sorting by descending chord length, ties by smaller
// first endpoint: the longest chord gets depth M-1 and sits innermost.
TubingDescription build_tubing(const Diagram& d, int sc_choice);

// One entry per connected component: its sphere count plus one, largest
// first.
std::vector<int> component_genera(const Diagram& d);

}  // namespace ppcd
