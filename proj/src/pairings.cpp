#include "ppcd/pairings.hpp"

#include <algorithm>
#include <numeric>

namespace ppcd {

namespace {

std::string interval_text(Interval i) { return "[" + std::to_string(i.lo) + "," + std::to_string(i.hi) + "]"; }

}  // namespace

Pairing::Pairing(Interval domain, Interval codomain, Orientation orientation)
    : domain_(domain), codomain_(codomain), orientation_(orientation) {
    if (domain.lo > domain.hi || codomain.lo > codomain.hi) {
        throw Error(Errc::InvalidPairing, "empty interval in pairing " + interval_text(domain) + " -> " +
                                              interval_text(codomain));
    }
    if (domain.size() != codomain.size()) {
        throw Error(Errc::InvalidPairing, "intervals " + interval_text(domain) + " and " + interval_text(codomain) +
                                              " differ in length");
    }
}

int Pairing::operator()(int x) const {
    if (!domain_.contains(x)) {
        throw Error(Errc::IntervalOutOfRange, std::to_string(x) + " not in " + interval_text(domain_));
    }
    const int offset = x - domain_.lo;
    return orientation_ == Orientation::Preserving ? codomain_.lo + offset : codomain_.hi - offset;
}

Pairing Pairing::inverse() const { return Pairing(codomain_, domain_, orientation_); }

DisjointSets::DisjointSets(int size)
    : parent_(static_cast<std::size_t>(size)), rank_(static_cast<std::size_t>(size), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int x) {
    auto idx = static_cast<std::size_t>(x);
    while (parent_[idx] != static_cast<int>(idx)) {
        parent_[idx] = parent_[static_cast<std::size_t>(parent_[idx])];
        idx = static_cast<std::size_t>(parent_[idx]);
    }
    return static_cast<int>(idx);
}

bool DisjointSets::unite(int x, int y) {
    int rx = find(x);
    int ry = find(y);
    if (rx == ry) return false;
    const auto ix = static_cast<std::size_t>(rx);
    const auto iy = static_cast<std::size_t>(ry);
    if (rank_[ix] < rank_[iy]) {
        parent_[ix] = ry;
    } else {
        parent_[iy] = rx;
        if (rank_[ix] == rank_[iy]) ++rank_[ix];
    }
    return true;
}

namespace {

OrbitPartition collect(DisjointSets& sets, int n) {
    // index 0 of the disjoint sets is unused; the ground set is [1, n]
    std::vector<std::vector<int>> by_root(static_cast<std::size_t>(n + 1));
    for (int x = 1; x <= n; ++x) by_root[static_cast<std::size_t>(sets.find(x))].push_back(x);
    OrbitPartition out{n, {}};
    for (auto& cls : by_root) {
        if (!cls.empty()) out.classes.push_back(std::move(cls));
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return out;
}

}  // namespace

OrbitPartition orbits(std::span<const Pairing> pairings, int n) {
    if (n < 0) throw Error(Errc::IntervalOutOfRange, "ground set size must be non-negative");
    const Interval ground{1, n};
    for (const Pairing& p : pairings) {
        for (Interval i : {p.domain(), p.codomain()}) {
            if (!ground.contains(i.lo) || !ground.contains(i.hi)) {
                throw Error(Errc::IntervalOutOfRange, interval_text(i) + " not inside " + interval_text(ground));
            }
        }
    }
    DisjointSets sets(n + 1);
    for (const Pairing& p : pairings) {
        for (int x = p.domain().lo; x <= p.domain().hi; ++x) sets.unite(x, p(x));
    }
    return collect(sets, n);
}

std::vector<Pairing> reflection_pairings(int u, int v) {
    if (u < 1 || v < 1) throw Error(Errc::RangeViolation, "u and v must be positive");
    const int n = u + v;
    return {
        Pairing({1, n}, {n + 1, 2 * n}, Orientation::Reversing),
        Pairing({1, u}, {n + 1, n + u}, Orientation::Reversing),
        Pairing({u + 1, n}, {n + u + 1, 2 * n}, Orientation::Reversing),
    };
}

OrbitPartition sc_components(const Diagram& d) {
    const Genus g = d.genus();
    std::vector<Pairing> identifications;
    identifications.reserve(d.chords().size());
    for (Chord c : d.chords()) {
        const int x = sc_index(g, c.a);
        const int y = sc_index(g, c.b);
        identifications.emplace_back(Interval{x, x}, Interval{y, y}, Orientation::Preserving);
    }
    return orbits(identifications, g.per_region());
}

bool is_connected(const Diagram& d) { return sc_components(d).count() == 1; }

bool gcd_connected(Genus g, int offset) {
    if (g.value() < 3) throw Error(Errc::GenusTooSmall, "the offset criterion needs genus at least 3");
    if (offset < 0 || offset > g.value() - 3) {
        throw Error(Errc::OffsetOutOfRange, "offset " + std::to_string(offset) + " outside [0, " +
                                                std::to_string(g.value() - 3) + "]");
    }
    const int v = offset + 1;
    const int u = g.value() - 2 - offset;
    return std::gcd(u, v) == 1;
}

}  // namespace ppcd
