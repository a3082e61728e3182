#include "ppcd/dual_tree.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ppcd {

namespace {

int innermost_face(int points, std::span<const Chord> chords, int outer_id, int gap) {
    int best = -1;
    int best_width = points + 1;
    for (Chord c : chords) {
        if (c.a <= gap && gap < c.b && c.b - c.a < best_width) {
            best = c.a;
            best_width = c.b - c.a;
        }
    }
    return best >= 0 ? best : outer_id;
}

}  // namespace

int DualTree::degree(FaceId v) const {
    int deg = 0;
    for (const DualEdge& e : edges) {
        if (e.inner == v) ++deg;
        if (e.outer == v) ++deg;
    }
    return deg;
}

DualTree build_dual_tree(int points, std::span<const Chord> chords, int puncture_gap) {
    std::vector<Chord> sorted;
    sorted.reserve(chords.size());
    for (Chord c : chords) sorted.push_back(make_chord(c.a, c.b));
    std::sort(sorted.begin(), sorted.end());

    int outer_id = points - 1;
    for (Chord c : sorted) {
        if (c.a == 0) outer_id = c.b;
    }

    DualTree t;
    for (Chord c : sorted) t.vertices.push_back(FaceId{c.a});
    t.vertices.push_back(FaceId{outer_id});
    std::sort(t.vertices.begin(), t.vertices.end());
    for (Chord c : sorted) {
        t.edges.push_back(DualEdge{FaceId{c.a}, FaceId{innermost_face(points, sorted, outer_id, c.b % points)}, c});
    }
    t.root = FaceId{innermost_face(points, sorted, outer_id, puncture_gap)};
    return t;
}

DualTree build_dual_tree(const Diagram& d) {
    return build_dual_tree(d.points(), d.chords(), d.puncture_gap());
}

int leaf_count(const DualTree& t) {
    std::map<FaceId, int> deg;
    for (const DualEdge& e : t.edges) {
        ++deg[e.inner];
        ++deg[e.outer];
    }
    return static_cast<int>(std::count_if(deg.begin(), deg.end(), [](const auto& kv) { return kv.second == 1; }));
}

std::vector<Chord> leaf_chords(const Diagram& d) {
    const DualTree t = build_dual_tree(d);
    std::map<FaceId, int> deg;
    for (const DualEdge& e : t.edges) {
        ++deg[e.inner];
        ++deg[e.outer];
    }
    const int longest = max_possible_length(d.genus());
    std::vector<Chord> out;
    for (const DualEdge& e : t.edges) {
        if (deg[e.inner] != 1 && deg[e.outer] != 1) continue;
        const int len = chord_length(d, e.chord);
        if (len != 1 && len != longest) {
            throw Error(Errc::LeafLengthViolation, "leaf chord (" + std::to_string(e.chord.a) + "," +
                                                       std::to_string(e.chord.b) + ") has length " +
                                                       std::to_string(len));
        }
        out.push_back(e.chord);
    }
    return out;
}

std::string to_dot(const DualTree& t) {
    std::ostringstream os;
    os << "graph dual_tree {\n";
    for (FaceId v : t.vertices) {
        os << "  f" << v.id << " [label=\"" << v.id << "\"";
        if (v == t.root) os << ", shape=doublecircle";
        else os << ", shape=circle";
        os << "];\n";
    }
    for (const DualEdge& e : t.edges) {
        os << "  f" << e.inner.id << " -- f" << e.outer.id << " [label=\"" << e.chord.a << "-" << e.chord.b
           << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace ppcd
