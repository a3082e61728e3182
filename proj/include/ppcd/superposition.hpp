#pragma once

// Two diagrams of the same genus drawn on one disk, and the faces of the
// resulting planar subdivision.
//
// The combined boundary has P = 8(g-1) points. Region r owns the block
// [2rn, 2(r+1)n) with n = g-1; the first diagram (layer A) takes the first n
// slots of even regions and the last n slots of odd regions, the second
// (layer B) the remaining ones. Every chord is drawn as two legs and a
// horizontal segment at its height, running over its puncture-free arc, with
// the puncture above every chord. Heights ordered by arc length put all
// pairs in minimal position.

#include <optional>
#include <string>
#include <vector>

#include "ppcd/diagram.hpp"

namespace ppcd {

enum class Layer { A, B };

char layer_letter(Layer l) noexcept;

struct PlacedChord {
    Layer layer = Layer::A;
    Chord original;
    int start = 0;  // the puncture-free arc runs ccw from start to end
    int end = 0;
    int height = 0;  // 1 = lowest
    std::vector<int> crossings;  // ids, in order from start to end

    bool full() const noexcept { return crossings.empty(); }
};

// `leg` passes through the horizontal segment of `horizontal`, with its
// rising leg (at its start) or its falling one (at its end).
struct Crossing {
    int horizontal = 0;
    int leg = 0;
    bool rising = true;

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

// A chord segment between two consecutive vertices of that chord; the
// puncture lies to its left when walked from `from` to `to`. Boundary
// points are vertices 0..P-1 and crossing k is vertex P+k.
struct DartMark {
    int chord = 0;
    int from = 0;
    int to = 0;

    friend bool operator==(const DartMark&, const DartMark&) = default;
};

struct CrossingPair {
    Chord a;  // chord of the first diagram
    Chord b;

    friend auto operator<=>(const CrossingPair&, const CrossingPair&) = default;
};

struct SuperimposedDiagram {
    Genus genus{3};
    int boundary_points = 0;
    std::vector<int> placement_a;  // base point of the first diagram -> combined position
    std::vector<int> placement_b;
    std::vector<PlacedChord> chords;  // first diagram's chords, then the second's
    std::vector<Crossing> crossings;
    DartMark puncture;

    // [start, crossing vertices..., end]
    std::vector<int> vertex_path(int chord) const;
    Layer layer_at(int position) const;
    int chord_at(int position) const;
    std::vector<CrossingPair> crossing_pairs() const;  // sorted, with repeats
};

// Requires equal genus >= 3 and two admissible diagrams.
SuperimposedDiagram superimpose(const Diagram& d1, const Diagram& d2);

// Same drawing with caller-chosen heights, a permutation of 1..4(g-1) listed
// in chord order (first diagram, then second). Heights out of arc-length
// order create removable bigons. No admissibility requirement.
SuperimposedDiagram superimpose_with_heights(const Diagram& d1, const Diagram& d2, const std::vector<int>& heights);

struct FaceSide {
    bool boundary = false;
    int index = 0;  // boundary arc b..b+1, or chord id
    Layer layer = Layer::A;
    bool full = false;  // a chord with no crossings at all
    int from = 0;
    int to = 0;
};

struct Face {
    std::vector<FaceSide> sides;
    bool puncture = false;

    // e.g. "OABA*": O for a boundary arc, a layer letter per chord segment,
    // * for an uncrossed chord. Starts at a boundary arc when there is one.
    std::string composition() const;
};

// Bounded faces only.
std::vector<Face> faces(const SuperimposedDiagram& s);

enum class FaceKind { I, II, III, IV, V, Collar };

std::string_view to_string(FaceKind k) noexcept;

// Collar covers the faces cut off by uncrossed chords hugging the boundary:
// one arc and one chord (n = 1), or two uncrossed parallel chords of one
// layer and the two arcs between them (n = 2).
struct FaceType {
    FaceKind kind = FaceKind::I;
    int n = 0;  // meaningful for II, IV and Collar

    friend bool operator==(const FaceType&, const FaceType&) = default;
};

std::optional<FaceType> classify_face(const SuperimposedDiagram& s, const Face& f);

struct ClassifiedFace {
    Face face;
    std::optional<FaceType> type;
};

std::vector<ClassifiedFace> face_report(const SuperimposedDiagram& s);

// Throws UnclassifiableFace naming the first face that fits no kind.
std::vector<FaceType> classify_faces(const SuperimposedDiagram& s);

bool has_type_iv_n_ge_2(const SuperimposedDiagram& s);

// A face bounded by one segment from each layer, no boundary, no puncture.
bool is_bigon(const Face& f);

enum class BigonOrder { InnermostFirst, OutermostFirst };

// Removes one bigon at a time until none is left. Innermost means the
// bigon whose higher chord is lowest.
SuperimposedDiagram reduce_bigons(const SuperimposedDiagram& s, BigonOrder order = BigonOrder::InnermostFirst);

struct EulerCounts {
    int vertices = 0;
    int edges = 0;
    int faces = 0;

    int characteristic() const noexcept { return vertices - edges + faces; }
};

EulerCounts euler_counts(const SuperimposedDiagram& s);

// Two chords of one layer, both the layer's longest chord or parallel to it,
// with one pair of ends adjacent on the combined circle and exactly 2(g-1)
// points of the other layer between the other pair.
struct ParallelWitness {
    Layer layer = Layer::A;
    Chord first;
    Chord second;
};

std::optional<ParallelWitness> parallel_witness(const SuperimposedDiagram& s, const Diagram& own, Layer layer);

}  // namespace ppcd
