#include "ppcd/structure.hpp"

#include "ppcd/dual_tree.hpp"
#include "ppcd/pairings.hpp"

namespace ppcd {

namespace {

void require_genus_three(Genus g) {
    if (g.value() < 3) throw Error(Errc::GenusTooSmall, "structural diagrams need genus at least 3");
}

int mod(int x, int n) { return ((x % n) + n) % n; }

}  // namespace

ChordTypeCounts chord_type_counts(Genus g, int i) {
    require_genus_three(g);
    const int gv = g.value();
    if (i < -(gv - 3) || i > gv - 3) {
        throw Error(Errc::RangeViolation, "signed offset " + std::to_string(i) + " outside [" +
                                              std::to_string(-(gv - 3)) + ", " + std::to_string(gv - 3) + "]");
    }
    if (mod(gv + i, 2) != 1) {
        throw Error(Errc::ParityViolation, "genus " + std::to_string(gv) + " and signed offset " +
                                               std::to_string(i) + " must have opposite parity");
    }
    return ChordTypeCounts{(gv - 3 - i) / 2, (gv - 1 - i) / 2, (gv + i - 3) / 2};
}

StructuralLocus::StructuralLocus(Genus g, int region, int offset) : g_(g), region_(region), offset_(offset) {
    require_genus_three(g);
    if (region < 0 || region > 3) {
        throw Error(Errc::RangeViolation, "region " + std::to_string(region) + " outside [0, 3]");
    }
    if (offset < 0 || offset > g.value() - 3) {
        throw Error(Errc::OffsetOutOfRange, "offset " + std::to_string(offset) + " outside [0, " +
                                                std::to_string(g.value() - 3) + "]");
    }
}

Diagram build_structural(Genus g, int region, int offset) {
    [[maybe_unused]] const StructuralLocus locus(g, region, offset);
    const int gv = g.value();
    const int n = g.points();
    const int p = offset;
    const int alpha = gv - 3 - p;
    const int gamma = p;

    // Region-0 layout: the longest chord (p, p+1) with the puncture between
    // its endpoints, g-2 chords nested around it, c' astride the 1/2
    // junction and c'' astride the 2/3 junction, each with its own nest.
    std::vector<std::pair<int, int>> raw;
    raw.reserve(static_cast<std::size_t>(g.chords()));
    raw.emplace_back(p, p + 1);
    for (int t = 1; t <= gv - 2; ++t) raw.emplace_back(p - t, p + 1 + t);
    raw.emplace_back(2 * gv - 3, 2 * gv - 2);
    for (int s = 1; s <= alpha; ++s) raw.emplace_back(2 * gv - 3 - s, 2 * gv - 2 + s);
    raw.emplace_back(3 * gv - 4, 3 * gv - 3);
    for (int s = 1; s <= gamma; ++s) raw.emplace_back(3 * gv - 4 - s, 3 * gv - 3 + s);

    const int shift = region * g.per_region();
    Matching chords;
    chords.reserve(raw.size());
    for (auto [x, y] : raw) chords.push_back(make_chord(mod(x + shift, n), mod(y + shift, n)));
    return validate(g, chords, mod(p + shift, n));
}

std::vector<StructuralLocus> valid_loci(Genus g, bool connected_only) {
    require_genus_three(g);
    std::vector<StructuralLocus> out;
    for (int r = 0; r < 4; ++r) {
        for (int p = 0; p <= g.value() - 3; ++p) {
            if (!connected_only || gcd_connected(g, p)) out.emplace_back(g, r, p);
        }
    }
    return out;
}

std::optional<Landmarks> find_landmarks(const Diagram& d) {
    const Genus g = d.genus();
    const int longest = max_possible_length(g);
    std::vector<Chord> max_chords;
    std::vector<Chord> unit_chords;
    for (Chord c : d.chords()) {
        const int len = chord_length(d, c);
        if (len == longest) max_chords.push_back(c);
        if (len == 1) unit_chords.push_back(c);
    }
    if (max_chords.size() != 1 || unit_chords.size() != 2) return std::nullopt;
    const Chord c = max_chords.front();
    const int r = region_of(g, c.a);
    if (region_of(g, c.b) != r) return std::nullopt;

    // A length-1 chord sits at junction k when it joins regions k and k+1.
    auto junction = [&](Chord u) -> std::optional<int> {
        const int ra = region_of(g, u.a);
        const int rb = region_of(g, u.b);
        if (rb == mod(ra + 1, 4)) return ra;
        if (ra == mod(rb + 1, 4)) return rb;
        return std::nullopt;
    };
    std::optional<Chord> prime;
    std::optional<Chord> double_prime;
    for (Chord u : unit_chords) {
        const auto j = junction(u);
        if (!j) return std::nullopt;
        if (*j == mod(r + 1, 4)) prime = u;
        else if (*j == mod(r + 2, 4)) double_prime = u;
        else return std::nullopt;
    }
    if (!prime || !double_prime) return std::nullopt;
    return Landmarks{c, *prime, *double_prime, r};
}

bool is_admissible(const Diagram& d) {
    require_genus_three(d.genus());
    if (!find_landmarks(d)) return false;
    if (leaf_count(build_dual_tree(d)) != 3) return false;
    return is_connected(d);
}

ChordType classify_chord(const Diagram& d, Chord c) {
    const auto marks = find_landmarks(d);
    if (!marks) throw Error(Errc::Unclassifiable, "diagram lacks the longest chord and its two length-1 chords");
    std::vector<ChordType> hits;
    if (are_parallel(d, c, marks->longest)) hits.push_back(ChordType::ParallelToC);
    if (are_parallel(d, c, marks->c_prime)) hits.push_back(ChordType::ParallelToCPrime);
    if (are_parallel(d, c, marks->c_double_prime)) hits.push_back(ChordType::ParallelToCDoublePrime);
    if (hits.size() != 1) {
        throw Error(Errc::Unclassifiable, "chord (" + std::to_string(c.a) + "," + std::to_string(c.b) + ") matches " +
                                              std::to_string(hits.size()) + " chord types");
    }
    return hits.front();
}

}  // namespace ppcd
