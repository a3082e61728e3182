#include "ppcd/superposition.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "ppcd/structure.hpp"

namespace ppcd {

char layer_letter(Layer l) noexcept { return l == Layer::A ? 'A' : 'B'; }

std::string_view to_string(FaceKind k) noexcept {
    switch (k) {
        case FaceKind::I: return "I";
        case FaceKind::II: return "II";
        case FaceKind::III: return "III";
        case FaceKind::IV: return "IV";
        case FaceKind::V: return "V";
        case FaceKind::Collar: return "collar";
    }
    return "?";
}

namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

int combined_position(Genus g, int point, Layer layer) {
    const int n = g.per_region();
    const int r = region_of(g, point);
    const int slot = slot_of(g, point);
    const bool first = (layer == Layer::A) == (r % 2 == 0);
    return r * 2 * n + (first ? slot : n + slot);
}

int arc_length(const SuperimposedDiagram& s, const PlacedChord& c) {
    return mod(c.end - c.start, s.boundary_points);
}

bool in_arc(const SuperimposedDiagram& s, const PlacedChord& c, int x) {
    const int off = mod(x - c.start, s.boundary_points);
    return off > 0 && off < arc_length(s, c);
}

void place(SuperimposedDiagram& s, const Diagram& d, Layer layer) {
    const Genus g = d.genus();
    auto& placement = layer == Layer::A ? s.placement_a : s.placement_b;
    placement.resize(static_cast<std::size_t>(g.points()));
    for (int x = 0; x < g.points(); ++x) placement[static_cast<std::size_t>(x)] = combined_position(g, x, layer);
    for (Chord c : d.chords()) {
        PlacedChord pc;
        pc.layer = layer;
        pc.original = c;
        const int pa = placement[static_cast<std::size_t>(c.a)];
        const int pb = placement[static_cast<std::size_t>(c.b)];
        if (encloses_puncture(c, d.puncture_gap())) {
            pc.start = pb;
            pc.end = pa;
        } else {
            pc.start = pa;
            pc.end = pb;
        }
        s.chords.push_back(pc);
    }
}

void build_crossings(SuperimposedDiagram& s) {
    std::map<std::tuple<int, int, bool>, int> ids;
    auto id_of = [&](int horizontal, int leg, bool rising) {
        const auto key = std::make_tuple(horizontal, leg, rising);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        const int id = static_cast<int>(s.crossings.size());
        s.crossings.push_back(Crossing{horizontal, leg, rising});
        ids.emplace(key, id);
        return id;
    };

    const int m = static_cast<int>(s.chords.size());
    for (int i = 0; i < m; ++i) {
        const PlacedChord& c = s.chords[static_cast<std::size_t>(i)];
        // Along c from its start: its rising leg meets lower chords from the
        // bottom up, its horizontal meets the legs of higher chords, and its
        // falling leg meets lower chords from the top down.
        std::vector<std::pair<int, int>> up;
        std::vector<std::pair<int, int>> across;
        std::vector<std::pair<int, int>> down;
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            const PlacedChord& z = s.chords[static_cast<std::size_t>(j)];
            if (z.height < c.height) {
                if (in_arc(s, z, c.start)) up.emplace_back(z.height, id_of(j, i, true));
                if (in_arc(s, z, c.end)) down.emplace_back(-z.height, id_of(j, i, false));
            } else {
                if (in_arc(s, c, z.start)) across.emplace_back(mod(z.start - c.start, s.boundary_points), id_of(i, j, true));
                if (in_arc(s, c, z.end)) across.emplace_back(mod(z.end - c.start, s.boundary_points), id_of(i, j, false));
            }
        }
        std::sort(up.begin(), up.end());
        std::sort(across.begin(), across.end());
        std::sort(down.begin(), down.end());
        auto& list = s.chords[static_cast<std::size_t>(i)].crossings;
        for (const auto* part : {&up, &across, &down}) {
            for (auto [key, id] : *part) list.push_back(id);
        }
    }
}

void mark_puncture(SuperimposedDiagram& s) {
    const auto top = std::max_element(s.chords.begin(), s.chords.end(),
                                      [](const PlacedChord& x, const PlacedChord& y) { return x.height < y.height; });
    const int t = static_cast<int>(top - s.chords.begin());
    int rising = 0;
    for (int id : top->crossings) {
        const Crossing& x = s.crossings[static_cast<std::size_t>(id)];
        if (x.leg == t && x.rising) ++rising;
    }
    const std::vector<int> path = s.vertex_path(t);
    s.puncture = DartMark{t, path[static_cast<std::size_t>(rising)], path[static_cast<std::size_t>(rising + 1)]};
}

SuperimposedDiagram assemble(const Diagram& d1, const Diagram& d2, const std::vector<int>* heights) {
    if (d1.genus() != d2.genus()) {
        throw Error(Errc::GenusMismatch, "genera " + std::to_string(d1.genus().value()) + " and " +
                                             std::to_string(d2.genus().value()) + " differ");
    }
    const Genus g = d1.genus();
    if (g.value() < 3) throw Error(Errc::GenusTooSmall, "superposition needs genus at least 3");

    SuperimposedDiagram s;
    s.genus = g;
    s.boundary_points = 2 * g.points();
    place(s, d1, Layer::A);
    place(s, d2, Layer::B);

    const int m = static_cast<int>(s.chords.size());
    if (heights) {
        std::vector<int> sorted = *heights;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> expected(static_cast<std::size_t>(m));
        std::iota(expected.begin(), expected.end(), 1);
        if (sorted != expected) {
            throw Error(Errc::RangeViolation, "heights must be a permutation of 1.." + std::to_string(m));
        }
        for (int i = 0; i < m; ++i) s.chords[static_cast<std::size_t>(i)].height = (*heights)[static_cast<std::size_t>(i)];
    } else {
        std::vector<int> order(static_cast<std::size_t>(m));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            const PlacedChord& cx = s.chords[static_cast<std::size_t>(x)];
            const PlacedChord& cy = s.chords[static_cast<std::size_t>(y)];
            return std::make_pair(arc_length(s, cx), cx.start) < std::make_pair(arc_length(s, cy), cy.start);
        });
        for (int rank = 0; rank < m; ++rank) s.chords[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])].height = rank + 1;
    }
    build_crossings(s);
    mark_puncture(s);
    return s;
}

}  // namespace

std::vector<int> SuperimposedDiagram::vertex_path(int chord) const {
    const PlacedChord& c = chords.at(static_cast<std::size_t>(chord));
    std::vector<int> path;
    path.reserve(c.crossings.size() + 2);
    path.push_back(c.start);
    for (int id : c.crossings) path.push_back(boundary_points + id);
    path.push_back(c.end);
    return path;
}

Layer SuperimposedDiagram::layer_at(int position) const {
    const int n = genus.per_region();
    const int block = mod(position, boundary_points) / n;  // two blocks per region
    const int region = block / 2;
    const bool first_half = block % 2 == 0;
    return first_half == (region % 2 == 0) ? Layer::A : Layer::B;
}

int SuperimposedDiagram::chord_at(int position) const {
    for (std::size_t i = 0; i < chords.size(); ++i) {
        if (chords[i].start == position || chords[i].end == position) return static_cast<int>(i);
    }
    throw Error(Errc::RangeViolation, "no chord ends at position " + std::to_string(position));
}

std::vector<CrossingPair> SuperimposedDiagram::crossing_pairs() const {
    std::vector<CrossingPair> out;
    out.reserve(crossings.size());
    for (const Crossing& x : crossings) {
        const PlacedChord& h = chords[static_cast<std::size_t>(x.horizontal)];
        const PlacedChord& l = chords[static_cast<std::size_t>(x.leg)];
        out.push_back(h.layer == Layer::A ? CrossingPair{h.original, l.original} : CrossingPair{l.original, h.original});
    }
    std::sort(out.begin(), out.end());
    return out;
}

SuperimposedDiagram superimpose(const Diagram& d1, const Diagram& d2) {
    if (d1.genus() == d2.genus() && d1.genus().value() >= 3) {
        if (!is_admissible(d1)) throw Error(Errc::NotAdmissible, "first diagram " + canonical_key(d1));
        if (!is_admissible(d2)) throw Error(Errc::NotAdmissible, "second diagram " + canonical_key(d2));
    }
    return assemble(d1, d2, nullptr);
}

SuperimposedDiagram superimpose_with_heights(const Diagram& d1, const Diagram& d2, const std::vector<int>& heights) {
    return assemble(d1, d2, &heights);
}

namespace {

// Darts of the planar subdivision: edge e has darts 2e (u -> v) and 2e+1.
class Subdivision {
public:
    explicit Subdivision(const SuperimposedDiagram& s) : s_(s) {
        const int p = s.boundary_points;
        for (int i = 0; i < static_cast<int>(s.chords.size()); ++i) {
            chord_base_.push_back(static_cast<int>(edges_.size()));
            const std::vector<int> path = s.vertex_path(i);
            for (std::size_t t = 0; t + 1 < path.size(); ++t) edges_.push_back(Edge{path[t], path[t + 1], false, i});
        }
        boundary_base_ = static_cast<int>(edges_.size());
        for (int b = 0; b < p; ++b) edges_.push_back(Edge{b, (b + 1) % p, true, b});

        const int vertices = p + static_cast<int>(s.crossings.size());
        rotation_.assign(static_cast<std::size_t>(vertices), {});
        for (int b = 0; b < p; ++b) {
            const int c = s.chord_at(b);
            const PlacedChord& pc = s.chords[static_cast<std::size_t>(c)];
            const int leg = pc.start == b ? 2 * chord_base_[static_cast<std::size_t>(c)]
                                          : 2 * (chord_base_[static_cast<std::size_t>(c)] + static_cast<int>(pc.crossings.size())) + 1;
            rotation_[static_cast<std::size_t>(b)] = {2 * (boundary_base_ + b), leg, 2 * (boundary_base_ + mod(b - 1, p)) + 1};
        }
        for (int k = 0; k < static_cast<int>(s.crossings.size()); ++k) {
            const Crossing& x = s.crossings[static_cast<std::size_t>(k)];
            const auto [h_out, h_back] = around(x.horizontal, k);
            const auto [l_out, l_back] = around(x.leg, k);
            rotation_[static_cast<std::size_t>(p + k)] =
                x.rising ? std::vector<int>{h_out, l_out, h_back, l_back} : std::vector<int>{h_out, l_back, h_back, l_out};
        }
        slot_.assign(2 * edges_.size(), 0);
        for (const auto& rot : rotation_) {
            for (std::size_t i = 0; i < rot.size(); ++i) slot_[static_cast<std::size_t>(rot[i])] = static_cast<int>(i);
        }
    }

    std::vector<Face> trace() const {
        std::vector<Face> out;
        std::vector<bool> seen(2 * edges_.size(), false);
        for (int d0 = 0; d0 < static_cast<int>(seen.size()); ++d0) {
            if (seen[static_cast<std::size_t>(d0)]) continue;
            Face f;
            bool exterior = true;
            for (int d = d0; !seen[static_cast<std::size_t>(d)]; d = next(d)) {
                seen[static_cast<std::size_t>(d)] = true;
                const Edge& e = edges_[static_cast<std::size_t>(d / 2)];
                FaceSide side;
                side.boundary = e.boundary;
                side.index = e.index;
                side.from = d % 2 == 0 ? e.u : e.v;
                side.to = d % 2 == 0 ? e.v : e.u;
                if (!e.boundary) {
                    const PlacedChord& pc = s_.chords[static_cast<std::size_t>(e.index)];
                    side.layer = pc.layer;
                    side.full = pc.full();
                    if (e.index == s_.puncture.chord && side.from == s_.puncture.from && side.to == s_.puncture.to) {
                        f.puncture = true;
                    }
                }
                if (!e.boundary || d % 2 == 0) exterior = false;
                f.sides.push_back(side);
            }
            if (!exterior) out.push_back(std::move(f));
        }
        return out;
    }

    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

private:
    struct Edge {
        int u;
        int v;
        bool boundary;
        int index;
    };

    std::pair<int, int> around(int chord, int crossing) const {
        const auto& list = s_.chords[static_cast<std::size_t>(chord)].crossings;
        const int idx = static_cast<int>(std::find(list.begin(), list.end(), crossing) - list.begin());
        const int base = chord_base_[static_cast<std::size_t>(chord)];
        return {2 * (base + idx + 1), 2 * (base + idx) + 1};
    }

    int head(int d) const {
        const Edge& e = edges_[static_cast<std::size_t>(d / 2)];
        return d % 2 == 0 ? e.v : e.u;
    }

    // The face to the left of d continues with the dart just clockwise of
    // d's reverse at d's head.
    int next(int d) const {
        const auto& rot = rotation_[static_cast<std::size_t>(head(d))];
        const int i = slot_[static_cast<std::size_t>(d ^ 1)];
        return rot[static_cast<std::size_t>(mod(i - 1, static_cast<int>(rot.size())))];
    }

    const SuperimposedDiagram& s_;
    std::vector<Edge> edges_;
    std::vector<int> chord_base_;
    int boundary_base_ = 0;
    std::vector<std::vector<int>> rotation_;
    std::vector<int> slot_;
};

}  // namespace

std::string Face::composition() const {
    std::size_t first = 0;
    for (std::size_t i = 0; i < sides.size(); ++i) {
        if (sides[i].boundary) {
            first = i;
            break;
        }
    }
    std::string out;
    for (std::size_t k = 0; k < sides.size(); ++k) {
        const FaceSide& side = sides[(first + k) % sides.size()];
        if (side.boundary) {
            out += 'O';
        } else {
            out += layer_letter(side.layer);
            if (side.full) out += '*';
        }
    }
    return out;
}

std::vector<Face> faces(const SuperimposedDiagram& s) { return Subdivision(s).trace(); }

EulerCounts euler_counts(const SuperimposedDiagram& s) {
    const Subdivision sub(s);
    return EulerCounts{s.boundary_points + static_cast<int>(s.crossings.size()), sub.edge_count(),
                       static_cast<int>(sub.trace().size())};
}

namespace {

bool alternating(const std::vector<FaceSide>& run) {
    for (std::size_t i = 0; i < run.size(); ++i) {
        if (run[i].boundary || run[i].full) return false;
        if (i > 0 && run[i].layer == run[i - 1].layer) return false;
    }
    return true;
}

bool single_full(const std::vector<FaceSide>& run) { return run.size() == 1 && run.front().full; }

// Everything strictly inside the chord's puncture-free arc belongs to
// uncrossed chords of its own layer.
bool hugs_boundary(const SuperimposedDiagram& s, int chord) {
    const PlacedChord& c = s.chords[static_cast<std::size_t>(chord)];
    for (int pos = mod(c.start + 1, s.boundary_points); pos != c.end; pos = mod(pos + 1, s.boundary_points)) {
        if (s.layer_at(pos) != c.layer) return false;
        if (!s.chords[static_cast<std::size_t>(s.chord_at(pos))].full()) return false;
    }
    return true;
}

bool is_type_v(const SuperimposedDiagram& s, const std::vector<FaceSide>& full, const std::vector<FaceSide>& run) {
    if (!single_full(full) || run.size() != 3 || !alternating(run)) return false;
    const Layer own = full.front().layer;
    return run[0].layer == own && run[2].layer == own && hugs_boundary(s, full.front().index);
}

}  // namespace

bool is_bigon(const Face& f) {
    return !f.puncture && f.sides.size() == 2 && alternating(f.sides);
}

std::optional<FaceType> classify_face(const SuperimposedDiagram& s, const Face& f) {
    std::vector<std::size_t> arcs;
    for (std::size_t i = 0; i < f.sides.size(); ++i) {
        if (f.sides[i].boundary) arcs.push_back(i);
    }
    if (f.puncture) {
        if (arcs.empty() && f.sides.size() == 2 && alternating(f.sides)) return FaceType{FaceKind::I, 1};
        return std::nullopt;
    }
    if (arcs.empty()) {
        const int m = static_cast<int>(f.sides.size());
        if (m >= 4 && m % 2 == 0 && alternating(f.sides)) return FaceType{FaceKind::II, m / 2};
        return std::nullopt;
    }

    // Runs of chord segments between consecutive boundary arcs.
    std::vector<std::vector<FaceSide>> runs;
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        const std::size_t from = arcs[k] + 1;
        const std::size_t to = k + 1 < arcs.size() ? arcs[k + 1] : arcs.front() + f.sides.size();
        std::vector<FaceSide> run;
        for (std::size_t i = from; i < to; ++i) run.push_back(f.sides[i % f.sides.size()]);
        runs.push_back(std::move(run));
    }

    if (runs.size() == 1) {
        const auto& run = runs.front();
        if (single_full(run)) return FaceType{FaceKind::Collar, 1};
        if (run.size() == 3 && alternating(run) && run[0].layer == run[2].layer) return FaceType{FaceKind::III, 0};
        if (run.size() >= 2 && run.size() % 2 == 0 && alternating(run)) {
            return FaceType{FaceKind::IV, static_cast<int>(run.size()) / 2};
        }
        return std::nullopt;
    }
    if (runs.size() == 2) {
        if (single_full(runs[0]) && single_full(runs[1]) && runs[0].front().layer == runs[1].front().layer) {
            return FaceType{FaceKind::Collar, 2};
        }
        if (is_type_v(s, runs[0], runs[1]) || is_type_v(s, runs[1], runs[0])) return FaceType{FaceKind::V, 0};
    }
    return std::nullopt;
}

std::vector<ClassifiedFace> face_report(const SuperimposedDiagram& s) {
    std::vector<ClassifiedFace> out;
    for (Face& f : faces(s)) {
        auto type = classify_face(s, f);
        out.push_back(ClassifiedFace{std::move(f), type});
    }
    return out;
}

std::vector<FaceType> classify_faces(const SuperimposedDiagram& s) {
    std::vector<FaceType> out;
    for (const ClassifiedFace& cf : face_report(s)) {
        if (!cf.type) {
            throw Error(Errc::UnclassifiableFace, "face " + cf.face.composition() +
                                                      (cf.face.puncture ? " (with puncture)" : ""));
        }
        out.push_back(*cf.type);
    }
    return out;
}

bool has_type_iv_n_ge_2(const SuperimposedDiagram& s) {
    for (const ClassifiedFace& cf : face_report(s)) {
        if (cf.type && cf.type->kind == FaceKind::IV && cf.type->n >= 2) return true;
    }
    return false;
}

namespace {

void remove_bigon(SuperimposedDiagram& s, const Face& bigon, const std::vector<Face>& all) {
    const int p = s.boundary_points;
    const int x = bigon.sides[0].from;
    const int y = bigon.sides[0].to;
    auto removed = [&](int v) { return v == x || v == y; };

    if (removed(s.puncture.from) || removed(s.puncture.to)) {
        const auto home = std::find_if(all.begin(), all.end(), [](const Face& f) { return f.puncture; });
        if (home == all.end()) throw std::logic_error("puncture face missing");
        bool moved = false;
        for (const FaceSide& side : home->sides) {
            if (!side.boundary && !removed(side.from) && !removed(side.to)) {
                s.puncture = DartMark{side.index, side.from, side.to};
                moved = true;
                break;
            }
        }
        if (!moved) throw std::logic_error("puncture face has no side away from the bigon");
    }

    std::vector<int> renumber(s.crossings.size(), -1);
    std::vector<Crossing> kept;
    for (int k = 0; k < static_cast<int>(s.crossings.size()); ++k) {
        if (removed(p + k)) continue;
        renumber[static_cast<std::size_t>(k)] = static_cast<int>(kept.size());
        kept.push_back(s.crossings[static_cast<std::size_t>(k)]);
    }
    s.crossings = std::move(kept);
    for (PlacedChord& c : s.chords) {
        std::vector<int> list;
        for (int id : c.crossings) {
            const int to = renumber[static_cast<std::size_t>(id)];
            if (to >= 0) list.push_back(to);
        }
        c.crossings = std::move(list);
    }
    auto remap = [&](int v) { return v < p ? v : p + renumber[static_cast<std::size_t>(v - p)]; };
    s.puncture.from = remap(s.puncture.from);
    s.puncture.to = remap(s.puncture.to);
}

std::pair<int, int> bigon_key(const SuperimposedDiagram& s, const Face& f) {
    const int h0 = s.chords[static_cast<std::size_t>(f.sides[0].index)].height;
    const int h1 = s.chords[static_cast<std::size_t>(f.sides[1].index)].height;
    return {std::max(h0, h1), std::min(h0, h1)};
}

}  // namespace

SuperimposedDiagram reduce_bigons(const SuperimposedDiagram& s, BigonOrder order) {
    SuperimposedDiagram out = s;
    for (;;) {
        const std::vector<Face> all = faces(out);
        const Face* pick = nullptr;
        for (const Face& f : all) {
            if (!is_bigon(f)) continue;
            if (!pick) {
                pick = &f;
                continue;
            }
            const auto k = bigon_key(out, f);
            const auto best = bigon_key(out, *pick);
            if (order == BigonOrder::InnermostFirst ? k < best : k > best) pick = &f;
        }
        if (!pick) return out;
        remove_bigon(out, *pick, all);
    }
}

namespace {

// Positions strictly between p and q on the side that avoids both `others`;
// nullopt when both sides contain one of them.
std::optional<std::vector<int>> between(int p, int q, int o1, int o2, int total) {
    for (auto [from, to] : {std::pair{p, q}, std::pair{q, p}}) {
        std::vector<int> inside;
        bool clean = true;
        for (int pos = mod(from + 1, total); pos != to; pos = mod(pos + 1, total)) {
            if (pos == o1 || pos == o2) {
                clean = false;
                break;
            }
            inside.push_back(pos);
        }
        if (clean) return inside;
    }
    return std::nullopt;
}

}  // namespace

std::optional<ParallelWitness> parallel_witness(const SuperimposedDiagram& s, const Diagram& own, Layer layer) {
    const auto marks = find_landmarks(own);
    if (!marks) return std::nullopt;
    const auto& placement = layer == Layer::A ? s.placement_a : s.placement_b;
    auto at = [&](int point) { return placement.at(static_cast<std::size_t>(point)); };

    std::vector<Chord> family;
    for (Chord c : own.chords()) {
        if (c == marks->longest || are_parallel(own, c, marks->longest)) family.push_back(c);
    }
    const int wedge = 2 * s.genus.per_region();
    auto adjacent = [](const std::optional<std::vector<int>>& in) { return in && in->empty(); };
    auto wedged = [&](const std::optional<std::vector<int>>& in) {
        if (!in || static_cast<int>(in->size()) != wedge) return false;
        return std::all_of(in->begin(), in->end(), [&](int pos) { return s.layer_at(pos) != layer; });
    };

    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            const int xa = at(family[i].a), xb = at(family[i].b);
            const int ya = at(family[j].a), yb = at(family[j].b);
            for (auto [u1, v1, u2, v2] : {std::array{xa, ya, xb, yb}, std::array{xa, yb, xb, ya}}) {
                const auto first = between(u1, v1, u2, v2, s.boundary_points);
                const auto second = between(u2, v2, u1, v1, s.boundary_points);
                if ((adjacent(first) && wedged(second)) || (wedged(first) && adjacent(second))) {
                    return ParallelWitness{layer, family[i], family[j]};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace ppcd
