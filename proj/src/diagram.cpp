#include "ppcd/diagram.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace ppcd {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::GenusTooSmall: return "GenusTooSmall";
        case Errc::NotPerfect: return "NotPerfect";
        case Errc::Crossing: return "Crossing";
        case Errc::IntraRegionChord: return "IntraRegionChord";
        case Errc::BadGapIndex: return "BadGapIndex";
        case Errc::ChordNotInDiagram: return "ChordNotInDiagram";
        case Errc::SamePoint: return "SamePoint";
        case Errc::LeafLengthViolation: return "LeafLengthViolation";
        case Errc::IntervalOutOfRange: return "IntervalOutOfRange";
        case Errc::InvalidPairing: return "InvalidPairing";
        case Errc::OffsetOutOfRange: return "OffsetOutOfRange";
        case Errc::ParityViolation: return "ParityViolation";
        case Errc::RangeViolation: return "RangeViolation";
        case Errc::Unclassifiable: return "Unclassifiable";
        case Errc::NonPositive: return "NonPositive";
        case Errc::TooFewTangles: return "TooFewTangles";
        case Errc::NotExpandable: return "NotExpandable";
        case Errc::GenusMismatch: return "GenusMismatch";
        case Errc::NotAdmissible: return "NotAdmissible";
        case Errc::UnclassifiableFace: return "UnclassifiableFace";
        case Errc::Schema: return "Schema";
    }
    return "Unknown";
}

Genus::Genus(int g) : g_(g) {
    if (g < 2) {
        throw Error(Errc::GenusTooSmall, "genus must be at least 2, got " + std::to_string(g));
    }
}

namespace {

void check_point(Genus g, int point) {
    if (point < 0 || point >= g.points()) {
        throw Error(Errc::RangeViolation, "base point " + std::to_string(point) +
                                              " outside [0, " + std::to_string(g.points() - 1) + "]");
    }
}

std::string chord_text(Chord c) {
    return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
}

}  // namespace

int region_of(Genus g, int point) {
    check_point(g, point);
    return point / g.per_region();
}

int slot_of(Genus g, int point) {
    check_point(g, point);
    return point % g.per_region();
}

int sc_index(Genus g, int point) {
    const int r = region_of(g, point);
    const int s = slot_of(g, point);
    return r % 2 == 0 ? s + 1 : g.per_region() - s;
}

Chord make_chord(int x, int y) { return x < y ? Chord{x, y} : Chord{y, x}; }

bool Diagram::contains(Chord c) const {
    if (c.a < 0 || c.b >= points() || c.a >= c.b) return false;
    return partner_[static_cast<std::size_t>(c.a)] == c.b;
}

bool encloses_puncture(Chord c, int puncture_gap) { return c.a <= puncture_gap && puncture_gap < c.b; }

bool is_intra_region_isotopic(Genus g, Chord c, int puncture_gap) {
    c = make_chord(c.a, c.b);
    const int r = region_of(g, c.a);
    if (region_of(g, c.b) != r) return false;
    const int lo = r * g.per_region();
    const int hi = lo + g.per_region() - 1;
    if (!encloses_puncture(c, puncture_gap)) {
        // free side a+1..b-1 sits between two points of the contiguous block
        return true;
    }
    // free side is the complement [b+1, N-1] U [0, a-1]
    const bool tail_ok = c.b == g.points() - 1 || hi == g.points() - 1;
    const bool head_ok = c.a == 0 || lo == 0;
    return tail_ok && head_ok;
}

Diagram validate(Genus g, std::span<const Chord> m, int puncture_gap) {
    const int n = g.points();
    if (static_cast<int>(m.size()) != g.chords()) {
        throw Error(Errc::NotPerfect, "expected " + std::to_string(g.chords()) + " chords, got " +
                                          std::to_string(m.size()));
    }
    std::vector<int> partner(static_cast<std::size_t>(n), -1);
    Matching chords;
    chords.reserve(m.size());
    for (Chord raw : m) {
        const Chord c = make_chord(raw.a, raw.b);
        if (c.a < 0 || c.b >= n) {
            throw Error(Errc::NotPerfect, "chord " + chord_text(raw) + " has an endpoint outside [0, " +
                                              std::to_string(n - 1) + "]");
        }
        if (c.a == c.b) throw Error(Errc::NotPerfect, "chord " + chord_text(raw) + " is a loop");
        for (int x : {c.a, c.b}) {
            if (partner[static_cast<std::size_t>(x)] != -1) {
                throw Error(Errc::NotPerfect, "base point " + std::to_string(x) + " used twice");
            }
        }
        partner[static_cast<std::size_t>(c.a)] = c.b;
        partner[static_cast<std::size_t>(c.b)] = c.a;
        chords.push_back(c);
    }
    std::sort(chords.begin(), chords.end());

    std::vector<int> open;
    open.reserve(chords.size());
    for (int x = 0; x < n; ++x) {
        const int y = partner[static_cast<std::size_t>(x)];
        if (y > x) {
            open.push_back(x);
        } else if (open.back() != y) {
            throw Error(Errc::Crossing, "chords " + chord_text(make_chord(open.back(), partner[static_cast<std::size_t>(open.back())])) +
                                            " and " + chord_text(make_chord(y, x)) + " interleave");
        } else {
            open.pop_back();
        }
    }

    if (puncture_gap < 0 || puncture_gap >= n) {
        throw Error(Errc::BadGapIndex, "puncture gap " + std::to_string(puncture_gap) + " outside [0, " +
                                           std::to_string(n - 1) + "]");
    }
    for (Chord c : chords) {
        if (is_intra_region_isotopic(g, c, puncture_gap)) {
            throw Error(Errc::IntraRegionChord,
                        "chord " + chord_text(c) + " is isotopic into region " + std::to_string(region_of(g, c.a)));
        }
    }
    Diagram d(g, std::move(chords), std::move(partner), puncture_gap);
    d.gap_ = face_of_gap(d, puncture_gap).id;
    return d;
}

FaceId face_of_gap(const Diagram& d, int gap) {
    if (gap < 0 || gap >= d.points()) {
        throw Error(Errc::BadGapIndex, "gap " + std::to_string(gap) + " outside [0, " +
                                           std::to_string(d.points() - 1) + "]");
    }
    // The face is determined by the innermost chord enclosing the gap; its
    // smallest gap is that chord's first endpoint. Gaps enclosed by nothing
    // belong to the outer face, whose smallest gap is the partner of point 0.
    int best = -1;
    int best_width = d.points() + 1;
    for (Chord c : d.chords()) {
        if (c.a <= gap && gap < c.b && c.b - c.a < best_width) {
            best = c.a;
            best_width = c.b - c.a;
        }
    }
    return FaceId{best >= 0 ? best : d.partner(0)};
}

std::vector<FaceId> faces(const Diagram& d) {
    std::vector<FaceId> out;
    out.reserve(d.chords().size() + 1);
    for (Chord c : d.chords()) out.push_back(FaceId{c.a});
    out.push_back(FaceId{d.partner(0)});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void require_member(const Diagram& d, Chord c) {
    if (!d.contains(make_chord(c.a, c.b))) {
        throw Error(Errc::ChordNotInDiagram, "chord " + chord_text(c) + " is not in the diagram");
    }
}

}  // namespace

int chord_length(const Diagram& d, Chord c) {
    require_member(d, c);
    c = make_chord(c.a, c.b);
    const int n = d.points();
    if (encloses_puncture(c, d.puncture_gap())) return n - (c.b - c.a + 1) + 1;
    return c.b - c.a;
}

int max_possible_length(Genus g) { return 4 * g.value() - 5; }

int distance(Genus g, int b1, int b2) {
    check_point(g, b1);
    check_point(g, b2);
    if (b1 == b2) throw Error(Errc::SamePoint, "distance needs two distinct base points");
    const int n = g.points();
    const int forward = ((b2 - b1) % n + n) % n - 1;
    const int backward = n - 2 - forward;
    return std::min(forward, backward);
}

bool are_parallel(const Diagram& d, Chord c1, Chord c2) {
    require_member(d, c1);
    require_member(d, c2);
    c1 = make_chord(c1.a, c1.b);
    c2 = make_chord(c2.a, c2.b);
    if (c1 == c2) return true;
    std::array<std::pair<int, int>, 4> ends{{{c1.a, 0}, {c1.b, 0}, {c2.a, 1}, {c2.b, 1}}};
    std::sort(ends.begin(), ends.end());
    const int n = d.points();
    // Non-crossing chords leave exactly two arcs that join an endpoint of c1
    // to an endpoint of c2; the chords are parallel when both hold equally
    // many base points.
    std::array<int, 2> between{};
    std::size_t found = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        const auto& here = ends[k];
        const auto& next = ends[(k + 1) % 4];
        if (here.second != next.second) {
            between[found++ % 2] = ((next.first - here.first - 1) % n + n) % n;
        }
    }
    return found == 2 && between[0] == between[1];
}

std::string canonical_key(const Diagram& d) {
    std::string key = std::to_string(d.genus().value()) + ";";
    bool first = true;
    for (Chord c : d.chords()) {
        if (!first) key += ',';
        first = false;
        key += std::to_string(c.a) + "-" + std::to_string(c.b);
    }
    key += ";" + std::to_string(d.puncture_gap());
    return key;
}

}  // namespace ppcd
