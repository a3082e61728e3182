#include "ppcd/tubing.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ppcd/pairings.hpp"

namespace ppcd {

TubingDescription build_tubing(const Diagram& d, int sc_choice) {
    if (sc_choice != 0 && sc_choice != 1) {
        throw Error(Errc::RangeViolation, "sphere choice must be 0 or 1, got " + std::to_string(sc_choice));
    }
    const Genus g = d.genus();
    const Matching& chords = d.chords();

    TubingDescription out;
    out.sc_choice = sc_choice;
    out.spheres.resize(static_cast<std::size_t>(g.per_region()));
    std::iota(out.spheres.begin(), out.spheres.end(), 1);

    std::vector<int> lengths;
    lengths.reserve(chords.size());
    for (Chord c : chords) lengths.push_back(chord_length(d, c));

    std::vector<std::size_t> order(chords.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (lengths[x] != lengths[y]) return lengths[x] > lengths[y];
        return chords[x].a < chords[y].a;
    });
    std::vector<int> depth(chords.size());
    const int top = static_cast<int>(chords.size()) - 1;
    for (std::size_t pos = 0; pos < order.size(); ++pos) depth[order[pos]] = top - static_cast<int>(pos);

    for (std::size_t k = 0; k < chords.size(); ++k) {
        const Chord c = chords[k];
        out.tubes.push_back(Tube{c, TubeEnd{sc_index(g, c.a), region_of(g, c.a)},
                                 TubeEnd{sc_index(g, c.b), region_of(g, c.b)}, depth[k]});
    }
    return out;
}

std::vector<int> component_genera(const Diagram& d) {
    std::vector<int> out;
    for (const auto& cls : sc_components(d).classes) out.push_back(static_cast<int>(cls.size()) + 1);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace ppcd
